"""Generate the Grassmann-sector data files (one JSON per space).

Coefficient strings are normalised through the scalar parser so the shipped
files hold canonical text.  Subscript lists are entered in source-table
order and then normalised to canonically ordered subsets; entries whose
source form needed an obvious repair carry a ``note`` saying what was fixed.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qspace.scalar import QScalar

ORDER = {
    "quantum_plane": ["1", "2"],
    "euclid3": ["+", "3", "-"],
    "euclid4": ["1", "2", "3", "4"],
    "minkowski": ["+", "3", "3/0", "-"],
}


def canon(space, labels):
    order = ORDER[space]
    return sorted(labels, key=order.index)


def entry(space, coeff, f, g, note=None):
    e = {
        "coeff": QScalar.parse(coeff).render(),
        "f": canon(space, f),
        "g": canon(space, g),
    }
    if note:
        e["note"] = note
    return e


E = entry

QP = "quantum_plane"
E3 = "euclid3"
E4 = "euclid4"
MK = "minkowski"

qp_L = [
    E(QP, "1", [], ["2", "1"]),
    E(QP, "-1", ["2", "1"], []),
    E(QP, "q^(-1/2)", ["1"], ["1"]),
    E(QP, "q^(-1/2)", ["2"], ["2"]),
]
qp_Lbar = [
    E(QP, "1", [], ["1", "2"]),
    E(QP, "-1", ["1", "2"], []),
    E(QP, "-q^(1/2)", ["1"], ["1"]),
    E(QP, "-q^(1/2)", ["2"], ["2"]),
]
qp_Lp = [
    E(QP, "-1", [], ["2", "1"]),
    E(QP, "1", ["2", "1"], []),
    E(QP, "-q^(-3/2)", ["1"], ["1"]),
    E(QP, "-q^(1/2)", ["2"], ["2"]),
]
qp_Lbarp = [
    E(QP, "-1", [], ["1", "2"]),
    E(QP, "1", ["1", "2"], []),
    E(QP, "q^(-1/2)", ["1"], ["1"]),
    E(QP, "q^(3/2)", ["2"], ["2"]),
]

e3_L = [
    E(E3, "1", [], ["+", "3", "-"]),
    E(E3, "-q^(-1)", ["+"], ["+", "3"]),
    E(E3, "-q^(-2)", ["3"], ["+", "-"]),
    E(E3, "-q^(-1)", ["-"], ["3", "-"]),
    E(E3, "q^(-3)", ["+", "3"], ["+"]),
    E(E3, "q^(-2)", ["+", "-"], ["3"]),
    E(E3, "q^(-3)", ["3", "-"], ["-"]),
    E(E3, "-q^(-4)", ["+", "3", "-"], []),
]
e3_Lbar = [
    E(E3, "1", [], ["-", "3", "+"]),
    E(E3, "-q", ["-"], ["-", "3"]),
    E(E3, "-q^(2)", ["3"], ["-", "+"]),
    E(E3, "-q", ["+"], ["3", "+"]),
    E(E3, "q^(3)", ["-", "3"], ["-"]),
    E(E3, "q^(2)", ["-", "+"], ["3"]),
    E(E3, "q^(3)", ["3", "+"], ["+"]),
    E(E3, "-q^(4)", ["-", "3", "+"], []),
]
e3_Lp = [
    E(E3, "-q^(-4)", [], ["+", "3", "-"]),
    E(E3, "q^(-1)", ["+"], ["+", "3"]),
    E(E3, "q^(-2)", ["3"], ["+", "-"]),
    E(E3, "q^(-5)", ["-"], ["3", "-"]),
    E(E3, "-q", ["3", "+"], ["+"]),
    E(E3, "-q^(-2)", ["+", "-"], ["3"]),
    E(E3, "-q^(-3)", ["3", "-"], ["-"]),
    E(E3, "1", ["+", "3", "-"], []),
]
e3_Lbarp = [
    E(E3, "-q^(4)", [], ["-", "3", "+"]),
    E(E3, "q^(-1)", ["-"], ["3", "-"]),
    E(E3, "q^(2)", ["3"], ["-", "+"]),
    E(E3, "q^(5)", ["+"], ["3", "+"]),
    E(E3, "-q^(-1)", ["-", "3"], ["-"]),
    E(E3, "-q^(2)", ["-", "+"], ["3"]),
    E(E3, "-q^(3)", ["3", "+"], ["+"]),
    E(E3, "1", ["-", "3", "+"], []),
]

e4_L = [
    E(E4, "1", [], ["1", "2", "3", "4"]),
    E(E4, "-q", ["1"], ["1", "2", "3"]),
    E(E4, "q", ["2"], ["1", "2", "4"]),
    E(E4, "-q", ["3"], ["1", "3", "4"]),
    E(E4, "-q^(2)", ["1", "2"], ["1", "2"]),
    E(E4, "q^(2)", ["1", "3"], ["1", "3"]),
    E(E4, "-q^(2)", ["2", "3"], ["1", "4"]),
    E(E4, "-q^(2)", ["1", "4"], ["2", "3"]),
    E(E4, "q^(2)", ["2", "4"], ["2", "4"]),
    E(E4, "-q^(2)", ["3", "4"], ["3", "4"]),
    E(E4, "q^(3)", ["1", "2", "3"], ["1"]),
    E(E4, "-q^(3)", ["1", "2", "4"], ["2"]),
    E(E4, "q^(3)", ["1", "3", "4"], ["3"]),
    E(E4, "q^(4)", ["1", "2", "3", "4"], []),
]
e4_Lbar = [
    E(E4, "1", [], ["4", "3", "2", "1"]),
    E(E4, "q^(-1)", ["3"], ["4", "3", "1"]),
    E(E4, "-q^(-1)", ["2"], ["4", "2", "1"]),
    E(E4, "q^(-1)", ["1"], ["3", "2", "1"]),
    E(E4, "-q^(-2)", ["4", "3"], ["4", "3"]),
    E(E4, "q^(-2)", ["4", "2"], ["4", "2"]),
    E(E4, "-q^(-2)", ["3", "2"], ["4", "1"]),
    E(E4, "-q^(-2)", ["4", "1"], ["3", "2"]),
    E(E4, "q^(-2)", ["3", "1"], ["3", "1"]),
    E(E4, "-q^(-2)", ["2", "1"], ["2", "1"]),
    E(E4, "q^(-3)", ["3", "2", "1"], ["1"]),
    E(E4, "-q^(-3)", ["4", "3", "1"], ["3"]),
    E(E4, "q^(-3)", ["4", "2", "1"], ["2"]),
    E(E4, "q^(-4)", ["4", "3", "2", "1"], []),
]
e4_Lp = [
    E(E4, "q^(4)", [], ["1", "2", "3", "4"]),
    E(E4, "-q", ["1"], ["1", "2", "3"]),
    E(E4, "q^(3)", ["2"], ["1", "2", "4"]),
    E(E4, "-q^(3)", ["3"], ["1", "3", "4"]),
    E(E4, "-1", ["1", "2"], ["1", "2"]),
    E(E4, "1", ["1", "3"], ["1", "3"]),
    E(E4, "-q^(2)", ["2", "3"], ["1", "4"]),
    E(E4, "q^(4)", ["2", "4"], ["2", "4"]),
    E(E4, "-q^(4)", ["3", "4"], ["3", "4"]),
    E(E4, "-q^(2)", ["1", "4"], ["2", "3"]),
    E(E4, "q^(-1)", ["1", "2", "3"], ["1"]),
    E(E4, "-q", ["1", "2", "4"], ["2"]),
    E(E4, "q", ["1", "3", "4"], ["3"]),
    E(E4, "1", ["1", "2", "3", "4"], []),
]
e4_Lbarp = [
    E(E4, "q^(-4)", [], ["4", "3", "2", "1"]),
    E(E4, "q^(-3)", ["3"], ["4", "3", "1"]),
    E(E4, "-q^(-3)", ["2"], ["4", "2", "1"]),
    E(E4, "q^(-5)", ["1"], ["3", "2", "1"]),
    E(E4, "-1", ["4", "3"], ["4", "3"]),
    E(E4, "1", ["2", "4"], ["2", "4"]),
    E(E4, "-q^(-2)", ["3", "2"], ["4", "1"]),
    E(E4, "q^(-4)", ["3", "1"], ["3", "1"]),
    E(E4, "-q^(-4)", ["2", "1"], ["2", "1"]),
    E(E4, "-q^(-2)", ["4", "1"], ["3", "2"]),
    E(E4, "-q^(-1)", ["4", "3", "1"], ["3"]),
    E(E4, "q^(-1)", ["4", "2", "1"], ["2"]),
    E(E4, "-q^(-3)", ["3", "2", "1"], ["1"]),
    E(E4, "1", ["4", "3", "2", "1"], []),
]

mk_L = [
    E(MK, "1", [], ["-", "3/0", "3", "+"]),
    E(MK, "q", ["-"], ["3/0", "3", "-"]),
    E(MK, "-1", ["3/0"], ["-", "3", "+"]),
    E(MK, "q^(2)", ["3"], ["-", "3/0", "+"]),
    E(MK, "-q", ["+"], ["3/0", "3", "+"]),
    E(MK, "q^(3)", ["-", "3"], ["-", "3/0"]),
    E(MK, "-q", ["-", "3/0"], ["-", "3"]),
    E(MK, "-q^(2)", ["-", "+"], ["3/0", "3"]),
    E(MK, "q^(2)", ["3/0", "3"], ["-", "+"]),
    E(MK, "q - q^(3)", ["3/0", "3"], ["3/0", "3"]),
    E(MK, "-q^(3)", ["3", "+"], ["3/0", "+"]),
    E(MK, "q", ["3/0", "+"], ["3", "+"]),
    E(MK, "q^(3)", ["-", "3/0", "3"], ["-"]),
    E(MK, "-q^(4)", ["-", "3", "+"], ["3/0"]),
    E(MK, "q^(2)", ["-", "3/0", "+"], ["3"]),
    E(MK, "-q^(3)", ["3/0", "3", "+"], ["+"]),
    E(MK, "-q^(4)", ["-", "3/0", "3", "+"], []),
]
mk_Lbar = [
    E(MK, "1", [], ["+", "3", "3/0", "-"]),
    E(MK, "q^(-1)", ["+"], ["3/0", "3", "+"],
      note="source table pairs this with a two-index subscript; completed "
           "to the three-element subset matching the mirrored table"),
    E(MK, "-1", ["3/0"], ["+", "3", "-"]),
    E(MK, "q^(-2)", ["3"], ["+", "3/0", "-"]),
    E(MK, "-q^(-1)", ["-"], ["3/0", "3", "-"]),
    E(MK, "q^(-3)", ["+", "3"], ["+", "3/0"]),
    E(MK, "-q^(-1)", ["+", "3/0"], ["+", "3"]),
    E(MK, "-q^(-2)", ["+", "-"], ["3/0", "3"]),
    E(MK, "q^(-2)", ["3/0", "3"], ["+", "-"]),
    E(MK, "q^(-1) - q^(-3)", ["3/0", "3"], ["3/0", "3"]),
    E(MK, "-q^(-3)", ["3", "-"], ["3/0", "-"]),
    E(MK, "q^(-1)", ["3/0", "-"], ["3", "-"]),
    E(MK, "q^(-3)", ["+", "3/0", "3"], ["+"]),
    E(MK, "-q^(-4)", ["+", "3", "-"], ["3/0"]),
    E(MK, "q^(-2)", ["+", "3/0", "-"], ["3"]),
    E(MK, "-q^(-3)", ["3/0", "3", "-"], ["-"]),
    E(MK, "-q^(-4)", ["+", "3/0", "3", "-"], []),
]
mk_R = [
    E(MK, "1", [], ["+", "3", "3/0", "-"]),
    E(MK, "q^(-1)", ["+"], ["+", "3", "3/0"]),
    E(MK, "-q^(-2)", ["3"], ["+", "3/0", "-"]),
    E(MK, "1", ["3/0"], ["+", "3", "-"]),
    E(MK, "-q^(-1)", ["-"], ["3", "3/0", "-"]),
    E(MK, "-q^(-3)", ["+", "3"], ["+", "3/0"]),
    E(MK, "q^(-1)", ["+", "3/0"], ["+", "3"]),
    E(MK, "-q^(-2)", ["+", "-"], ["3", "3/0"]),
    E(MK, "q^(-2)", ["3", "3/0"], ["+", "-"]),
    E(MK, "q^(-1) - q^(-3)", ["3", "3/0"], ["3", "3/0"]),
    E(MK, "q^(-3)", ["3", "-"], ["3/0", "-"]),
    E(MK, "-q^(-1)", ["3/0", "-"], ["3", "-"]),
    E(MK, "q^(-3)", ["+", "3", "3/0"], ["+"]),
    E(MK, "q^(-4)", ["+", "3", "-"], ["3/0"]),
    E(MK, "-q^(-2)", ["+", "3/0", "-"], ["3"]),
    E(MK, "-q^(-3)", ["3", "3/0", "-"], ["-"]),
    E(MK, "-q^(-4)", ["+", "3", "3/0", "-"], []),
]
mk_Rbar = [
    E(MK, "1", [], ["-", "3", "3/0", "+"]),
    E(MK, "q", ["-"], ["-", "3", "3/0"]),
    E(MK, "-q^(2)", ["3"], ["+", "3/0", "-"]),
    E(MK, "1", ["3/0"], ["-", "3", "+"]),
    E(MK, "-q", ["+"], ["3", "3/0", "+"]),
    E(MK, "-q^(3)", ["-", "3"], ["-", "3/0"]),
    E(MK, "q", ["-", "3/0"], ["-", "3"]),
    E(MK, "-q^(2)", ["-", "+"], ["3", "3/0"]),
    E(MK, "q^(2)", ["3", "3/0"], ["-", "+"]),
    E(MK, "q - q^(3)", ["3", "3/0"], ["3", "3/0"]),
    E(MK, "q^(3)", ["3", "+"], ["3/0", "+"]),
    E(MK, "-q", ["3/0", "+"], ["3", "+"]),
    E(MK, "q^(3)", ["-", "3", "3/0"], ["-"]),
    E(MK, "q^(4)", ["-", "3", "+"], ["3/0"]),
    E(MK, "-q^(2)", ["-", "3/0", "+"], ["3"]),
    E(MK, "-q^(3)", ["3", "3/0", "+"], ["+"]),
    E(MK, "-q^(4)", ["-", "3", "3/0", "+"], [],
      note="source subscript carries a stray trailing letter; read as the "
           "full top subset"),
]
mk_Lp = [
    E(MK, "-q^(4)", [], ["-", "3/0", "3", "+"]),
    E(MK, "-q", ["-"], ["-", "3/0", "3"]),
    E(MK, "q^(4)", ["3/0"], ["-", "3", "+"]),
    E(MK, "-q^(2)", ["3"], ["-", "3/0", "+"]),
    E(MK, "q^(5)", ["+"], ["3/0", "3", "+"]),
    E(MK, "-q^(-1)", ["-", "3"], ["-", "3/0"]),
    E(MK, "q", ["-", "3/0"], ["-", "3"]),
    E(MK, "q^(2)", ["-", "+"], ["3/0", "3"]),
    E(MK, "q - q^(3)", ["3/0", "3"], ["3/0", "3"]),
    E(MK, "-q^(2)", ["3/0", "3"], ["-", "+"]),
    E(MK, "-q^(5)", ["3/0", "+"], ["3", "+"]),
    E(MK, "q^(3)", ["3", "+"], ["3/0", "+"]),
    E(MK, "-q^(-1)", ["-", "3/0", "3"], ["-"]),
    E(MK, "-q^(2)", ["-", "3/0", "+"], ["3"]),
    E(MK, "1", ["-", "3", "+"], ["3/0"]),
    E(MK, "q^(3)", ["3/0", "3", "+"], ["+"]),
    E(MK, "1", ["-", "3/0", "3", "+"], []),
]
mk_Lbarp = [
    E(MK, "-q^(-4)", [], ["+", "3/0", "3", "-"]),
    E(MK, "-q^(-1)", ["+"], ["+", "3/0", "3"]),
    E(MK, "q^(-4)", ["3/0"], ["+", "3", "-"]),
    E(MK, "-q^(-2)", ["3"], ["+", "3/0", "-"]),
    E(MK, "q^(-5)", ["-"], ["3/0", "3", "-"]),
    E(MK, "-q", ["+", "3"], ["+", "3/0"]),
    E(MK, "q^(-1)", ["+", "3/0"], ["+", "3"]),
    E(MK, "q^(-2)", ["+", "-"], ["3/0", "3"]),
    E(MK, "q^(-1) - q^(-3)", ["3/0", "3"], ["3/0", "3"]),
    E(MK, "-q^(-2)", ["3/0", "3"], ["+", "-"]),
    E(MK, "-q^(-5)", ["3/0", "-"], ["3", "-"]),
    E(MK, "q^(-3)", ["3", "-"], ["3/0", "-"]),
    E(MK, "-q", ["+", "3/0", "3"], ["+"]),
    E(MK, "1", ["+", "3", "-"], ["3/0"]),
    E(MK, "q^(-3)", ["3/0", "3", "-"], ["-"]),
    E(MK, "1", ["+", "3/0", "3", "-"], []),
]
mk_Rp = [
    E(MK, "-q^(-4)", [], ["+", "3", "3/0", "-"]),
    E(MK, "-q^(-1)", ["+"], ["+", "3", "3/0"],
      note="source subscript ends with a stray comma"),
    E(MK, "-q^(-4)", ["3/0"], ["+", "3", "-"]),
    E(MK, "q^(-2)", ["3"], ["+", "3/0", "-"]),
    E(MK, "q^(-5)", ["-"], ["3", "3/0", "-"]),
    E(MK, "q", ["+", "3"], ["+", "3/0"]),
    E(MK, "-q^(-1)", ["+", "3/0"], ["+", "3"]),
    E(MK, "q^(-2)", ["+", "-"], ["3", "3/0"]),
    E(MK, "q^(-1) - q^(-3)", ["3", "3/0"], ["3", "3/0"]),
    E(MK, "-q^(-2)", ["3", "3/0"], ["+", "-"]),
    E(MK, "q^(-5)", ["3/0", "-"], ["3", "-"]),
    E(MK, "-q^(-3)", ["3", "-"], ["3/0", "-"]),
    E(MK, "-q", ["+", "3", "3/0"], ["+"]),
    E(MK, "q^(-2)", ["+", "3/0", "-"], ["3"]),
    E(MK, "-1", ["+", "3", "-"], ["3/0"]),
    E(MK, "q^(-3)", ["3", "3/0", "-"], ["-"]),
    E(MK, "1", ["+", "3", "3/0", "-"], []),
]
mk_Rbarp = [
    E(MK, "-q^(4)", [], ["-", "3", "3/0", "+"]),
    E(MK, "-q", ["-"], ["-", "3", "3/0"],
      note="source subscript ends with a stray comma"),
    E(MK, "-q^(4)", ["3/0"], ["-", "3", "+"]),
    E(MK, "q^(2)", ["3"], ["-", "3/0", "+"]),
    E(MK, "q^(5)", ["+"], ["3", "3/0", "+"]),
    E(MK, "q^(-1)", ["-", "3"], ["-", "3/0"]),
    E(MK, "-q", ["-", "3/0"], ["-", "3"]),
    E(MK, "q^(2)", ["-", "+"], ["3", "3/0"]),
    E(MK, "q - q^(3)", ["3", "3/0"], ["3", "3/0"]),
    E(MK, "-q^(2)", ["3", "3/0"], ["-", "+"]),
    E(MK, "q^(5)", ["3/0", "+"], ["3", "+"]),
    E(MK, "-q^(3)", ["3", "+"], ["3/0", "+"]),
    E(MK, "-q^(-1)", ["-", "3", "3/0"], ["-"]),
    E(MK, "q^(2)", ["-", "3/0", "+"], ["3"]),
    E(MK, "-1", ["-", "3", "+"], ["3/0"]),
    E(MK, "q^(3)", ["3", "3/0", "+"], ["+"]),
    E(MK, "1", ["-", "3", "3/0", "+"], [],
      note="source lists a three-index coefficient against the constant; "
           "completed to the top subset required by degree pairing"),
]


def space_blob(name, kappa, vol, np_k, deltas, forms):
    return {
        "space": name,
        "labels": ORDER[name],
        "kappa": QScalar.parse(kappa).render(),
        "vol": QScalar.parse(vol).render(),
        "np_constant_k": QScalar.parse(np_k).render(),
        "deltas": {
            variant: {"word": word, "coeff": QScalar.parse(coeff).render()}
            for variant, (word, coeff) in deltas.items()
        },
        "forms": forms,
    }


DATA = [
    space_blob(
        QP, "q^(3)", "1", "1",
        {
            "L": (["2", "1"], "1"),
            "Lbar": (["1", "2"], "1"),
            "R": (["1", "2"], "1"),
            "Rbar": (["2", "1"], "1"),
        },
        {
            "L": qp_L, "Rbar": qp_L,
            "Lbar": qp_Lbar, "R": qp_Lbar,
            "L_primed": qp_Lp, "Rbar_primed": qp_Lp,
            "Lbar_primed": qp_Lbarp, "R_primed": qp_Lbarp,
        },
    ),
    space_blob(
        E3, "-q^(-6)", "i", "q^(-4)",
        {
            "L": (["+", "3", "-"], "i"),
            "Lbar": (["-", "3", "+"], "i"),
            "R": (["-", "3", "+"], "i"),
            "Rbar": (["+", "3", "-"], "i"),
        },
        {
            "L": e3_L, "Rbar": e3_L,
            "Lbar": e3_Lbar, "R": e3_Lbar,
            "L_primed": e3_Lp, "Rbar_primed": e3_Lp,
            "Lbar_primed": e3_Lbarp, "R_primed": e3_Lbarp,
        },
    ),
    space_blob(
        E4, "q^(-4)", "1", "q^(-1)",
        {
            "L": (["4", "3", "2", "1"], "1"),
            "Lbar": (["1", "2", "3", "4"], "1"),
            "R": (["1", "2", "3", "4"], "1"),
            "Rbar": (["4", "3", "2", "1"], "1"),
        },
        {
            "L": e4_L, "Rbar": e4_L,
            "Lbar": e4_Lbar, "R": e4_Lbar,
            "L_primed": e4_Lp, "Rbar_primed": e4_Lp,
            "Lbar_primed": e4_Lbarp, "R_primed": e4_Lbarp,
        },
    ),
    space_blob(
        MK, "q^(4)", "1", "q^(-1)",
        {
            "L": (["-", "3/0", "3", "+"], "1"),
            "R": (["+", "3", "3/0", "-"], "1"),
            "Lbar": (["+", "3/0", "3", "-"], "1"),
            "Rbar": (["-", "3", "3/0", "+"], "1"),
        },
        {
            "L": mk_L, "Lbar": mk_Lbar, "R": mk_R, "Rbar": mk_Rbar,
            "L_primed": mk_Lp, "Lbar_primed": mk_Lbarp,
            "R_primed": mk_Rp, "Rbar_primed": mk_Rbarp,
        },
    ),
]

out_dir = os.path.join(os.path.dirname(__file__), "..", "src", "qspace", "data")
os.makedirs(out_dir, exist_ok=True)
for blob in DATA:
    path = os.path.join(out_dir, "grassmann_%s.json" % blob["space"])
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(blob, fh, indent=1, sort_keys=False)
        fh.write("\n")
    print("wrote", path)
