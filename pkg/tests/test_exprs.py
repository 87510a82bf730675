"""Expression grammar: parse, render, evaluate."""

import pytest

from qspace.scalar import QScalar
from qspace.spaces import space
from qspace.exprs import ParseError, evaluate, parse, render


def test_relation_evaluates_to_zero():
    qp = space("quantum_plane")
    assert evaluate(parse("X1*X2 - q*X2*X1", qp), qp).is_zero()


def test_conjugation_through_grammar():
    mk = space("minkowski")
    got = evaluate(parse("conj(X+)", mk), mk)
    assert got.terms == {("X-",): QScalar.parse("-q^(-1)")}


def test_empty_input_is_a_syntax_error():
    with pytest.raises(ParseError):
        parse("", space("quantum_plane"))


def test_error_carries_position():
    try:
        parse("X1*X2 + %", space("quantum_plane"))
    except ParseError as err:
        assert err.position == 8
    else:
        raise AssertionError("expected a parse error")


def test_unknown_symbol_rejected():
    with pytest.raises(ParseError):
        parse("X7", space("quantum_plane"))


def test_round_trip_corpus():
    qp = space("quantum_plane")
    corpus = [
        "X1*X2 - q*X2*X1",
        "conj(X1) + star(X1, X2)",
        "dl1(X1*X1) - dhr2(X2)",
        "(1 - i)*q^(3/2)*X1 + 2*q^(-1)",
        "i*P1*X2 - q^(1/2)*X2*P1",
        "star(X1 + X2, X1*X2)",
        "-X1 + (X2 - X1)*X2",
        "3/2*q^(-3/2)*conj(X2*X1)",
    ]
    for text in corpus:
        tree = parse(text, qp)
        assert parse(render(tree), qp) == tree


def test_star_through_grammar():
    qp = space("quantum_plane")
    got = evaluate(parse("star(X1, X2)", qp), qp)
    assert got.terms == {("X2", "X1"): QScalar.parse("q")}


def test_derivative_through_grammar():
    e3 = space("euclid3")
    got = evaluate(parse("dl+(X-)", e3), e3)
    assert got.terms == {(): QScalar.parse("-q")}
    got2 = evaluate(parse("dl3(X3*X3)", e3), e3)
    assert not got2.is_zero()


def test_momentum_symbols_extend_the_algebra():
    qp = space("quantum_plane")
    got = evaluate(parse("P1*X2", qp), qp)
    assert got.terms[()] == QScalar.parse("i*q^(-1/2)")
    assert got.terms[("X2", "P1")] == QScalar.parse("q^(2)")


def test_plus_and_minus_suffixed_symbols():
    e3 = space("euclid3")
    got = evaluate(parse("X-*X+", e3), e3)
    assert ("X+", "X-") in got.terms


def test_grammar_scalars_match_scalar_parser():
    qp = space("quantum_plane")
    text = "(1 - i)*q^(3/2) + 2*q^(-1)"
    got = evaluate(parse(text, qp), qp)
    assert got.terms == {(): QScalar.parse(text)}
