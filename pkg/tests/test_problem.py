import pytest

from saturable.errors import ParseError
from saturable.problem import load_problem, parse_problem

HEAD = "ring: a0 a1 a2\ngrading: standard\nchar: 0\n"


def test_ideal_with_continuation():
    P = parse_problem(HEAD + "ideal: a0*a1, a1^2,\n   a1*a2  # trailing comment\n")
    assert len(P.ideal().generators) == 3


def test_bigraded_header():
    P = parse_problem("ring: a0 a1 a2\ngrading: 1 1 1 / 0 1 0\nideal: a0*a1\n")
    assert P.ring.rank == 2


def test_form_and_semantics():
    P = parse_problem(HEAD + "form: x0^2*x1\nsemantics: differentiation\n")
    F = P.form()
    assert F.semantics == "differentiation" and F.degree() == 3


def test_points():
    P = parse_problem(HEAD + "points: [1, 0, 0]; [1, t, 1]; [0, 0, 1]\n")
    assert len(P.points()) == 3


def test_family_sections():
    P = parse_problem(HEAD + "family(1): a0 + t*a1, a2\nlimit-forms(1): a0, a2\nexponents(1): 0 0\n")
    assert list(P.family()) == [1] and P.exponents() == {1: [0, 0]}


def test_hash_is_stable():
    assert parse_problem(HEAD + "ideal: a0\n").input_hash == parse_problem(HEAD + "ideal: a0\n").input_hash


@pytest.mark.parametrize(
    "text,line",
    [
        ("ideal: a0\n", 1),
        (HEAD + "ideal: a0 + q1\n", 4),
        (HEAD + "colour: red\n", 4),
        (HEAD + "family: a0\n", 4),
        (HEAD + "ideal: a0\nideal: a1\n", 5),
        ("ring: a0\nchar: zero\n", 2),
        (HEAD + "points: (1, 0, 0)\n", 4),
        (HEAD + "ideal: a0 + a1^2\n", 4),
    ],
)
def test_errors_carry_lines(text, line):
    with pytest.raises(ParseError) as info:
        P = parse_problem(text)
        P.ideal() if "ideal" in text else P.points()
    assert info.value.line == line


def test_gallery_files_load():
    from pathlib import Path

    for path in sorted(Path(__file__).parent.parent.joinpath("gallery", "problems").iterdir()):
        P = load_problem(path)
        assert P.ring.ngens >= 3
