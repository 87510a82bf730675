"""The antisymmetrized sector: tables, pairings, deltas and volumes."""

import random

import pytest

from qspace.scalar import I, ONE, QScalar
from qspace.grassmann import (Supernumber, combined_form, delta_word, gram_determinant,
                              gram_matrix, grassmann_delta, grassmann_space, grassmann_vol,
                              random_supernumber, sesquilinear)

SPACES = ("quantum_plane", "euclid3", "euclid4", "minkowski")


def test_spot_value_quantum_plane():
    qp = grassmann_space("quantum_plane")
    t1 = Supernumber.basis(qp, ["1"])
    assert sesquilinear(qp, "L", False, t1, t1) == QScalar.parse("q^(-1/2)")


def test_spot_value_euclid3_top():
    e3 = grassmann_space("euclid3")
    top = Supernumber.basis(e3, ["+", "3", "-"])
    one = Supernumber.basis(e3, [])
    assert sesquilinear(e3, "L", False, top, one) == QScalar.parse("-q^(-4)")


def test_spot_value_minkowski_diagonal():
    mk = grassmann_space("minkowski")
    m = Supernumber.basis(mk, ["3/0", "3"])
    assert sesquilinear(mk, "L", False, m, m) == QScalar.parse("q - q^(3)")


def test_unit_pairs_to_zero():
    for name in SPACES:
        sp = grassmann_space(name)
        one = Supernumber.basis(sp, [])
        for key in sp.forms:
            assert sesquilinear(sp, key[0], key[1], one, one).is_zero()


def test_complementary_degree_pairing_everywhere():
    for name in SPACES:
        sp = grassmann_space(name)
        n = sp.dimension()
        for table in sp.forms.values():
            for fs, gs, _, _ in table:
                assert len(fs) + len(gs) == n


def test_table_coincidences_are_data_identities():
    for name in ("quantum_plane", "euclid3", "euclid4"):
        sp = grassmann_space(name)
        for primed in (False, True):
            assert sp.forms[("L", primed)] == sp.forms[("Rbar", primed)]
            assert sp.forms[("Lbar", primed)] == sp.forms[("R", primed)]
    mk = grassmann_space("minkowski")
    tables = [mk.forms[(v, False)] for v in ("L", "Lbar", "R", "Rbar")]
    assert len({id(t) for t in tables}) == 4
    assert tables[0] != tables[3] and tables[1] != tables[2]


def test_sesquilinearity():
    rng = random.Random(31)
    alpha = QScalar.parse("(2 - 3*i)*q^(1/2)")
    for name in SPACES:
        sp = grassmann_space(name)
        for _ in range(20):
            f = random_supernumber(sp, rng)
            g = random_supernumber(sp, rng)
            base = sesquilinear(sp, "L", False, f, g)
            assert sesquilinear(sp, "L", False, f.scale(alpha), g) == alpha.conj() * base
            assert sesquilinear(sp, "L", False, f, g.scale(alpha)) == alpha * base
            basep = sesquilinear(sp, "L", True, f, g)
            assert sesquilinear(sp, "L", True, f.scale(alpha), g) == alpha * basep
            assert sesquilinear(sp, "L", True, f, g.scale(alpha)) == alpha.conj() * basep


def test_additivity():
    rng = random.Random(32)
    sp = grassmann_space("minkowski")
    f1 = random_supernumber(sp, rng)
    f2 = random_supernumber(sp, rng)
    g = random_supernumber(sp, rng)
    assert sesquilinear(sp, "R", False, f1 + f2, g) == \
        sesquilinear(sp, "R", False, f1, g) + sesquilinear(sp, "R", False, f2, g)


def test_combined_form_definition():
    rng = random.Random(33)
    for name in SPACES:
        sp = grassmann_space(name)
        n = sp.dimension()
        pref = (I ** n).scale(__import__("fractions").Fraction(1, 2))
        f = random_supernumber(sp, rng)
        g = random_supernumber(sp, rng)
        lhs = combined_form(sp, 1, False, f, g)
        rhs = pref * (sesquilinear(sp, "L", False, f, g) + sesquilinear(sp, "Rbar", False, f, g))
        assert lhs == rhs
        lhs2 = combined_form(sp, 2, True, f, g)
        rhs2 = pref * (sesquilinear(sp, "Lbar", True, f, g) + sesquilinear(sp, "R", True, f, g))
        assert lhs2 == rhs2


def test_combined_form_spot_value():
    qp = grassmann_space("quantum_plane")
    t1 = Supernumber.basis(qp, ["1"])
    assert combined_form(qp, 1, False, t1, t1) == QScalar.parse("-q^(-1/2)")


def test_delta_words():
    assert delta_word(grassmann_space("quantum_plane"), "L") == (("2", "1"), ONE)
    assert delta_word(grassmann_space("euclid3"), "L") == (("+", "3", "-"), I)
    assert delta_word(grassmann_space("euclid3"), "Lbar") == (("-", "3", "+"), I)
    assert delta_word(grassmann_space("minkowski"), "L") == (("-", "3/0", "3", "+"), ONE)
    assert delta_word(grassmann_space("minkowski"), "R") == (("+", "3", "3/0", "-"), ONE)
    assert delta_word(grassmann_space("euclid4"), "L") == (("4", "3", "2", "1"), ONE)


def test_delta_supernumber():
    qp = grassmann_space("quantum_plane")
    d = grassmann_delta(qp, "L")
    assert d.coefficient(["1", "2"]) == ONE


def test_volumes():
    assert grassmann_vol(grassmann_space("quantum_plane")) == ONE
    assert grassmann_vol(grassmann_space("euclid3")) == I
    assert grassmann_vol(grassmann_space("euclid4")) == ONE
    assert grassmann_vol(grassmann_space("minkowski")) == ONE


def test_kappa_values():
    assert grassmann_space("quantum_plane").kappa == QScalar.parse("q^(3)")
    assert grassmann_space("euclid3").kappa == QScalar.parse("-q^(-6)")
    assert grassmann_space("euclid4").kappa == QScalar.parse("q^(-4)")
    assert grassmann_space("minkowski").kappa == QScalar.parse("q^(4)")


def test_np_constants_recorded():
    # stored but unexercised without a Grassmann product
    assert grassmann_space("quantum_plane").np_constant_k == ONE
    assert grassmann_space("euclid3").np_constant_k == QScalar.parse("q^(-4)")
    assert grassmann_space("euclid4").np_constant_k == QScalar.parse("q^(-1)")
    assert grassmann_space("minkowski").np_constant_k == QScalar.parse("q^(-1)")


def test_gram_blocks_pair_complementary_degrees():
    for name in SPACES:
        sp = grassmann_space(name)
        subsets = sp.subsets()
        n = sp.dimension()
        m = gram_matrix(sp, "L", False)
        for i, a in enumerate(subsets):
            for j, b in enumerate(subsets):
                if len(a) + len(b) != n:
                    assert m[i][j].is_zero()


def test_gram_determinants():
    dqp = gram_determinant(grassmann_space("quantum_plane"), "L", False)
    assert not dqp.is_zero()
    assert abs(dqp.evaluate(1.0)) > 1e-12
    de3 = gram_determinant(grassmann_space("euclid3"), "L", False)
    assert not de3.is_zero()
    assert abs(de3.evaluate(1.0)) > 1e-12
    # the four-dimensional source table is missing one index family and
    # its Gram matrix is singular; recorded, not repaired
    assert gram_determinant(grassmann_space("euclid4"), "L", False).is_zero()


def test_repaired_entries_carry_notes():
    mk = grassmann_space("minkowski")
    noted = [
        (variant, primed, fs, gs)
        for (variant, primed), table in mk.forms.items()
        for fs, gs, _, note in table
        if note
    ]
    assert len(noted) >= 3
    assert any(v == "Rbar" and not p for v, p, _, _ in noted)
    assert any(v == "Rbar" and p for v, p, _, _ in noted)


def test_unknown_variant_rejected():
    qp = grassmann_space("quantum_plane")
    with pytest.raises(KeyError):
        sesquilinear(qp, "Q", False, Supernumber.basis(qp, []), Supernumber.basis(qp, []))


def test_repeated_label_rejected():
    qp = grassmann_space("quantum_plane")
    with pytest.raises(ValueError):
        Supernumber.basis(qp, ["1", "1"])


def test_config_dir_override(tmp_path, monkeypatch):
    import json
    from importlib import resources

    blob = json.loads(
        resources.files("qspace").joinpath("data/grassmann_quantum_plane.json").read_text()
    )
    blob["vol"] = "q^(9)"
    (tmp_path / "grassmann_quantum_plane.json").write_text(json.dumps(blob))
    monkeypatch.setenv("QSPACE_CONFIG_DIR", str(tmp_path))
    import qspace.grassmann as gmod

    gmod._CACHE.pop("quantum_plane", None)
    assert grassmann_space("quantum_plane").vol == QScalar.parse("q^(9)")
    monkeypatch.delenv("QSPACE_CONFIG_DIR")
    gmod._CACHE.pop("quantum_plane", None)
    assert grassmann_space("quantum_plane").vol == ONE
