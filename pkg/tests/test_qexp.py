"""Momentum eigenfunction series."""

import pytest

from qspace.scalar import ONE, QScalar, rational
from qspace.spaces import space
from qspace.qexp import (classical_series, degree_pairing_holds, residual,
                         solve_qexp, solve_qexp_dual)


def test_constant_term_is_one():
    s = solve_qexp("quantum_plane", 2)
    assert s.coefficient((), ()) == rational(ONE)


def test_degree_one_block():
    s = solve_qexp("quantum_plane", 1)
    assert s.coefficient(("X1",), ("P2",)) == rational(QScalar.parse("i*q^(-1/2)"))
    assert s.coefficient(("X2",), ("P1",)) == rational(QScalar.parse("-i*q^(1/2)"))
    assert s.coefficient(("X1",), ("P1",)).is_zero()


def test_degree_pairing():
    s = solve_qexp("quantum_plane", 5)
    assert degree_pairing_holds(s)


def test_residual_vanishes_quantum_plane_n8():
    s = solve_qexp("quantum_plane", 8)
    assert residual(s) == {}


def test_residual_vanishes_dual():
    s = solve_qexp_dual("quantum_plane", 5)
    assert residual(s) == {}


def test_residual_vanishes_euclid3():
    s = solve_qexp("euclid3", 3)
    assert residual(s) == {}


def test_classical_limit():
    s = solve_qexp("quantum_plane", 6)
    cl = classical_series(space("quantum_plane"), 6)
    for key, c in s.terms.items():
        assert abs(c.evaluate(1.0) - cl.get(key, 0)) < 1e-10, key
    for key in cl:
        assert key in s.terms


def test_left_right_coincide_classically():
    left = solve_qexp("quantum_plane", 5)
    right = solve_qexp_dual("quantum_plane", 5)
    keys = set(left.terms) | set(right.terms)
    for key in keys:
        a = left.terms.get(key)
        b = right.terms.get(key)
        av = a.evaluate(1.0) if a else 0
        bv = b.evaluate(1.0) if b else 0
        assert abs(av - bv) < 1e-10, key


def test_perturbation_breaks_residual():
    s = solve_qexp("quantum_plane", 3)
    key = next(k for k in s.terms if len(k[0]) == 2)
    s.terms[key] = s.terms[key] + rational(ONE)
    assert residual(s)


def test_hatted_calculus_solves_too():
    s = solve_qexp("quantum_plane", 3, calculus="hatted")
    assert residual(s) == {}


def test_missing_rules_raise():
    with pytest.raises(KeyError):
        solve_qexp("minkowski", 2)


def test_dump_format():
    s = solve_qexp("quantum_plane", 1)
    lines = s.dump().splitlines()
    assert lines[0] == "(1 | 1) : 1"
    assert all(" : " in ln and "|" in ln for ln in lines)
