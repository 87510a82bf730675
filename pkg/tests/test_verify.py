"""Suite runner and report schema."""

import pytest

from qspace.verify import SUITES, run_suite


def test_all_suites_pass():
    report = run_suite("all", 1.3, 7)
    assert report.ok()
    failed = [c.id for c in report.checks if c.status == "fail"]
    assert failed == []


def test_reports_are_byte_for_byte_reproducible():
    a = run_suite("all", 1.3, 42).to_json()
    b = run_suite("all", 1.3, 42).to_json()
    assert a == b


def test_checks_sorted_by_id():
    report = run_suite("all", 1.3, 1)
    ids = [c.id for c in report.checks]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_schema_fields():
    report = run_suite("grassmann", 1.2, 3).as_dict()
    assert set(report) == {"suite", "q", "seed", "checks"}
    for check in report["checks"]:
        assert set(check) >= {"id", "paper_ref", "anchor", "status"}
        assert check["status"] in ("exact-pass", "numeric-pass", "fail", "finding")


def test_named_checks_present():
    algebra = run_suite("algebra", 1.3, 0)
    assert any("associativity" in c.id for c in algebra.checks)
    grassmann = run_suite("grassmann", 1.3, 0)
    anchors = [c.anchor for c in grassmann.checks]
    assert any("theta1" in a for a in anchors)


def test_numeric_checks_carry_tolerance():
    report = run_suite("lattice", 1.3, 0)
    numeric = [c for c in report.checks if c.status == "numeric-pass"]
    assert numeric
    assert all(c.tolerance is not None for c in numeric)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_combined_integral():
    import random

    from qspace.lattice import LatticeFunction, LatticeSpec, integrate
    from qspace.spaces import space
    from qspace.verify import combined_integral

    spec = LatticeSpec(space("quantum_plane"), window=((-1, 1), (-1, 1)))
    rng = random.Random(51)
    f = LatticeFunction(spec, {p: complex(rng.random(), rng.random())
                               for p in spec.points()})
    g = LatticeFunction(spec, {p: complex(rng.random()) for p in spec.points()})
    assert combined_integral(LatticeFunction(spec, {}), 1.3, 1) == 0
    # i/2 times the two component integrals (identical shipped lattice data)
    want = 0.5j * (integrate(f, 1.3) + integrate(f, 1.3))
    assert abs(combined_integral(f, 1.3, 1) - want) < 1e-12
    lhs = combined_integral(f + g, 1.3, 2)
    rhs = combined_integral(f, 1.3, 2) + combined_integral(g, 1.3, 2)
    assert abs(lhs - rhs) < 1e-10
    with pytest.raises(ValueError):
        combined_integral(f, 1.3, 3)


def test_suite_names_cover_every_module_area():
    assert set(SUITES) == {"algebra", "conjugation", "phasespace", "qexp",
                           "grassmann", "lattice"}
