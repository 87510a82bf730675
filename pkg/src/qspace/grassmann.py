"""The antisymmetrized sector: supernumbers and their sesquilinear pairings.

Everything here is finite and exactly computable.  A supernumber over an
n-generator space is a vector of 2^n QScalar coefficients indexed by
canonically ordered subsets of the basis labels.  The sesquilinear forms are
explicit coefficient tables shipped as JSON data (one file per space, one
record per term) so every number can be audited; the module only evaluates
them.  Grassmann multiplication is deliberately not implemented: the delta
elements are stored directly as signed basis monomials.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
import random

from .scalar import I, ONE, QScalar, divexact
from .spaces import config_dir

VARIANTS = ("L", "Lbar", "R", "Rbar")

Subset = tuple[str, ...]


@dataclass
class GrassmannSpace:
    name: str
    labels: tuple[str, ...]
    kappa: QScalar
    vol: QScalar
    np_constant_k: QScalar
    deltas: dict[str, tuple[tuple[str, ...], QScalar]]
    forms: dict[tuple[str, bool], list[tuple[Subset, Subset, QScalar, str | None]]]

    def dimension(self) -> int:
        return len(self.labels)

    def subsets(self) -> list[Subset]:
        """All 2^n basis subsets, by degree then label order."""
        n = len(self.labels)
        out: list[Subset] = []
        for mask in range(1 << n):
            out.append(tuple(l for k, l in enumerate(self.labels) if mask >> k & 1))
        out.sort(key=lambda s: (len(s), tuple(self.labels.index(l) for l in s)))
        return out

    def canonical(self, labels) -> Subset:
        subset = tuple(sorted(set(labels), key=self.labels.index))
        if len(subset) != len(tuple(labels)):
            raise ValueError("repeated Grassmann label in %r" % (labels,))
        return subset


class Supernumber:
    """Coefficient vector over the basis subsets of one Grassmann space."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: GrassmannSpace, coeffs: dict[Subset, QScalar] | None = None):
        self.space = space
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not v.is_zero()}

    @staticmethod
    def basis(space: GrassmannSpace, labels=()) -> "Supernumber":
        return Supernumber(space, {space.canonical(labels): ONE})

    def coefficient(self, labels) -> QScalar:
        return self.coeffs.get(self.space.canonical(labels), QScalar.zero())

    def scale(self, c: QScalar) -> "Supernumber":
        return Supernumber(self.space, {k: v * c for k, v in self.coeffs.items()})

    def __add__(self, other: "Supernumber") -> "Supernumber":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, QScalar.zero()) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Supernumber(self.space, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Supernumber) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        inner = ", ".join(
            "%s: %s" % ("".join(k) or "1", v.render()) for k, v in sorted(self.coeffs.items())
        )
        return "Supernumber({%s})" % inner


def random_supernumber(space: GrassmannSpace, rng: random.Random) -> Supernumber:
    coeffs = {}
    for subset in space.subsets():
        if rng.random() < 0.6:
            re = Fraction(rng.randint(-3, 3))
            im = Fraction(rng.randint(-3, 3))
            qe = Fraction(rng.randint(-2, 2), 2)
            c = QScalar.q_power(qe, re, im)
            if not c.is_zero():
                coeffs[subset] = c
    return Supernumber(space, coeffs)


# -- table evaluation ----------------------------------------------------------

def sesquilinear(space: GrassmannSpace, variant: str, primed: bool,
                 f: Supernumber, g: Supernumber) -> QScalar:
    """Evaluate the stored pairing table.

    Unprimed tables conjugate the left argument's coefficients, primed tables
    the right one's.
    """
    table = space.forms.get((variant, primed))
    if table is None:
        raise KeyError("no %s%s table for %s" % (variant, "'" if primed else "", space.name))
    total = QScalar.zero()
    for fs, gs, coeff, _note in table:
        fc = f.coeffs.get(fs)
        gc = g.coeffs.get(gs)
        if fc is None or gc is None:
            continue
        if primed:
            total = total + coeff * fc * gc.conj()
        else:
            total = total + coeff * fc.conj() * gc
    return total


def combined_form(space: GrassmannSpace, which: int, primed: bool,
                  f: Supernumber, g: Supernumber) -> QScalar:
    """Symmetrised pairing: i^n/2 times the sum of the two matching variants."""
    if which == 1:
        pair = ("L", "Rbar")
    elif which == 2:
        pair = ("Lbar", "R")
    else:
        raise ValueError("which must be 1 or 2")
    total = sesquilinear(space, pair[0], primed, f, g) + sesquilinear(space, pair[1], primed, f, g)
    prefactor = (I ** space.dimension()).scale(Fraction(1, 2))
    return prefactor * total


def grassmann_delta(space: GrassmannSpace, variant: str) -> Supernumber:
    word, coeff = space.deltas[variant]
    return Supernumber(space, {space.canonical(word): coeff})


def delta_word(space: GrassmannSpace, variant: str) -> tuple[tuple[str, ...], QScalar]:
    """The stored monomial in its source letter order, with its prefactor."""
    return space.deltas[variant]


def grassmann_vol(space: GrassmannSpace) -> QScalar:
    return space.vol


def gram_matrix(space: GrassmannSpace, variant: str, primed: bool) -> list[list[QScalar]]:
    """Pairing values on all basis monomials, 2^n x 2^n."""
    subsets = space.subsets()
    table = space.forms[(variant, primed)]
    lookup: dict[tuple[Subset, Subset], QScalar] = {}
    for fs, gs, coeff, _ in table:
        lookup[(fs, gs)] = lookup.get((fs, gs), QScalar.zero()) + coeff
    return [[lookup.get((a, b), QScalar.zero()) for b in subsets] for a in subsets]


def gram_determinant(space: GrassmannSpace, variant: str, primed: bool) -> QScalar:
    """Exact determinant of the Gram matrix (fraction-free elimination)."""
    m = [row[:] for row in gram_matrix(space, variant, primed)]
    n = len(m)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if piv is None:
                return QScalar.zero()
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = QScalar.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


# -- data loading ---------------------------------------------------------------

_CACHE: dict[str, GrassmannSpace] = {}

_FORM_KEYS = [
    ("L", False), ("Lbar", False), ("R", False), ("Rbar", False),
    ("L", True), ("Lbar", True), ("R", True), ("Rbar", True),
]


def _form_name(variant: str, primed: bool) -> str:
    return variant + ("_primed" if primed else "")


def _parse_blob(data: dict) -> GrassmannSpace:
    labels = tuple(data["labels"])
    forms = {}
    for variant, primed in _FORM_KEYS:
        raw = data["forms"].get(_form_name(variant, primed))
        if raw is None:
            continue
        forms[(variant, primed)] = [
            (tuple(e["f"]), tuple(e["g"]), QScalar.parse(e["coeff"]), e.get("note"))
            for e in raw
        ]
    return GrassmannSpace(
        name=data["space"],
        labels=labels,
        kappa=QScalar.parse(data["kappa"]),
        vol=QScalar.parse(data["vol"]),
        np_constant_k=QScalar.parse(data["np_constant_k"]),
        deltas={
            variant: (tuple(d["word"]), QScalar.parse(d["coeff"]))
            for variant, d in data["deltas"].items()
        },
        forms=forms,
    )


def grassmann_space(name: str) -> GrassmannSpace:
    """Load the table set for one space (QSPACE_CONFIG_DIR overrides the data)."""
    if name in _CACHE:
        return _CACHE[name]
    fname = "grassmann_%s.json" % name
    directory = config_dir()
    if directory and os.path.exists(os.path.join(directory, fname)):
        with open(os.path.join(directory, fname), "r", encoding="utf-8") as fh:
            blob = json.load(fh)
    else:
        ref = resources.files("qspace").joinpath("data").joinpath(fname)
        if not ref.is_file():
            raise KeyError("no Grassmann tables for space %r" % name)
        blob = json.loads(ref.read_text(encoding="utf-8"))
    _CACHE[name] = _parse_blob(blob)
    return _CACHE[name]
