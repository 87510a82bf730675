"""Preset quantum-space descriptions.

Four spaces are shipped: the quantum plane, three- and four-dimensional
q-deformed Euclidean space, and q-deformed Minkowski space.  A ``SpaceSpec``
bundles everything the rest of the package needs: the fixed generator order,
the quadratic rewrite rules oriented along that order, the invariant metric
and its inverse, the conjugation table, the rescaling constants for the
bosonic and Grassmann sectors, and the lattice step data.

Generator order is part of the definition: every shipped relation rewrites a
descending generator pair into ascending words, which is what makes the
rewrite system terminate without completion.

Specs round-trip through plain JSON-able dicts (``to_config``/``from_config``)
bit-exactly; ``load_space`` consults ``QSPACE_CONFIG_DIR`` first so variants
can be supplied as config files.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import LAMBDA, ONE, QScalar, qpow

Word = tuple[str, ...]
Combination = list[tuple[Word, QScalar]]

QUANTUM_PLANE = "quantum_plane"
EUCLID3 = "euclid3"
EUCLID4 = "euclid4"
MINKOWSKI = "minkowski"

SPACE_NAMES = (QUANTUM_PLANE, EUCLID3, EUCLID4, MINKOWSKI)


@dataclass
class SpaceSpec:
    """One quantum space; treated as immutable after construction."""

    name: str
    generators: tuple[str, ...]
    relations: dict[tuple[str, str], Combination]
    metric: dict[tuple[str, str], QScalar]
    metric_inverse: dict[tuple[str, str], QScalar]
    conjugation: dict[str, list[tuple[str, QScalar]]]
    kappa_bosonic: QScalar
    kappa_grassmann: QScalar
    lattice_steps: tuple[int, ...]
    lattice_prefactors: tuple[QScalar, ...]
    # linear self-conjugate coordinates: Y-symbol -> combination of generators,
    # and the inverse table; empty when the space has no such basis.
    real_coords: dict[str, list[tuple[str, QScalar]]] = field(default_factory=dict)
    real_coords_inverse: dict[str, list[tuple[str, QScalar]]] = field(default_factory=dict)
    _order: dict[str, int] = field(default_factory=dict, repr=False)
    _nf_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._order = {g: k for k, g in enumerate(self.generators)}

    def position(self, gen: str) -> int:
        try:
            return self._order[gen]
        except KeyError:
            raise KeyError("unknown generator %r for space %r" % (gen, self.name)) from None

    def dimension(self) -> int:
        return len(self.generators)


def _c(text: str) -> QScalar:
    return QScalar.parse(text)


def _mono(*gens: str, coeff: QScalar = ONE) -> tuple[Word, QScalar]:
    return tuple(gens), coeff


def _build_quantum_plane() -> SpaceSpec:
    # order (X2, X1): X1*X2 rewrites to q*X2*X1
    metric = {("X1", "X2"): _c("q^(-1/2)"), ("X2", "X1"): _c("-q^(1/2)")}
    metric_inv = {("X1", "X2"): _c("-q^(-1/2)"), ("X2", "X1"): _c("q^(1/2)")}
    conj = {
        "X1": [("X2", _c("q^(-1/2)"))],
        "X2": [("X1", _c("-q^(1/2)"))],
    }
    return SpaceSpec(
        name=QUANTUM_PLANE,
        generators=("X2", "X1"),
        relations={("X1", "X2"): [_mono("X2", "X1", coeff=_c("q"))]},
        metric=metric,
        metric_inverse=metric_inv,
        conjugation=conj,
        kappa_bosonic=qpow(3),
        kappa_grassmann=qpow(3),
        lattice_steps=(2, 2),
        lattice_prefactors=(_c("q^(2) - 1"), _c("q^(2) - 1")),
    )


def _build_euclid3() -> SpaceSpec:
    q2 = qpow(2)
    metric = {("X+", "X-"): _c("-q"), ("X3", "X3"): ONE, ("X-", "X+"): _c("-q^(-1)")}
    conj = {
        "X+": [("X-", _c("-q"))],
        "X3": [("X3", ONE)],
        "X-": [("X+", _c("-q^(-1)"))],
    }
    relations = {
        ("X3", "X+"): [_mono("X+", "X3", coeff=q2)],
        ("X-", "X3"): [_mono("X3", "X-", coeff=q2)],
        ("X-", "X+"): [_mono("X+", "X-"), _mono("X3", "X3", coeff=LAMBDA)],
    }
    # self-conjugate combinations (unit-normalised, see package docs)
    real = {
        "Y1": [("X+", _c("i*q^(-1/2)")), ("X-", _c("i*q^(1/2)"))],
        "Y2": [("X+", _c("q^(-1/2)")), ("X-", _c("-q^(1/2)"))],
        "Y3": [("X3", ONE)],
    }
    real_inv = {
        "X+": [("Y1", _c("-1/2*i*q^(1/2)")), ("Y2", _c("1/2*q^(1/2)"))],
        "X3": [("Y3", ONE)],
        "X-": [("Y1", _c("-1/2*i*q^(-1/2)")), ("Y2", _c("-1/2*q^(-1/2)"))],
    }
    return SpaceSpec(
        name=EUCLID3,
        generators=("X+", "X3", "X-"),
        relations=relations,
        metric=metric,
        metric_inverse=dict(metric),
        conjugation=conj,
        kappa_bosonic=qpow(6),
        kappa_grassmann=-qpow(-6),
        lattice_steps=(4, 2, 4),
        lattice_prefactors=(_c("q^(4) - 1"), _c("q^(2) - 1"), _c("q^(4) - 1")),
        real_coords=real,
        real_coords_inverse=real_inv,
    )


def _build_euclid4() -> SpaceSpec:
    q = qpow(1)
    qinv = qpow(-1)
    metric = {
        ("X1", "X4"): qinv,
        ("X2", "X3"): ONE,
        ("X3", "X2"): ONE,
        ("X4", "X1"): q,
    }
    conj = {
        "X1": [("X4", qinv)],
        "X2": [("X3", ONE)],
        "X3": [("X2", ONE)],
        "X4": [("X1", q)],
    }
    relations = {
        ("X2", "X1"): [_mono("X1", "X2", coeff=qinv)],
        ("X3", "X1"): [_mono("X1", "X3", coeff=qinv)],
        ("X4", "X3"): [_mono("X3", "X4", coeff=qinv)],
        ("X4", "X2"): [_mono("X2", "X4", coeff=qinv)],
        ("X3", "X2"): [_mono("X2", "X3")],
        ("X4", "X1"): [_mono("X1", "X4"), _mono("X2", "X3", coeff=LAMBDA)],
    }
    half = Fraction(1, 2)
    real = {
        "Y1": [("X1", _c("q^(1/2)")), ("X4", _c("q^(-1/2)"))],
        "Y2": [("X2", QScalar.from_rational(half)), ("X3", QScalar.from_rational(half))],
        "Y3": [("X2", QScalar.from_rational(0, half)), ("X3", QScalar.from_rational(0, -half))],
        "Y4": [("X1", _c("i*q^(1/2)")), ("X4", _c("-i*q^(-1/2)"))],
    }
    real_inv = {
        "X1": [("Y1", _c("1/2*q^(-1/2)")), ("Y4", _c("-1/2*i*q^(-1/2)"))],
        "X2": [("Y2", ONE), ("Y3", _c("-i"))],
        "X3": [("Y2", ONE), ("Y3", _c("i"))],
        "X4": [("Y1", _c("1/2*q^(1/2)")), ("Y4", _c("1/2*i*q^(1/2)"))],
    }
    return SpaceSpec(
        name=EUCLID4,
        generators=("X1", "X2", "X3", "X4"),
        relations=relations,
        metric=metric,
        metric_inverse=dict(metric),
        conjugation=conj,
        kappa_bosonic=qpow(4),
        kappa_grassmann=qpow(-4),
        lattice_steps=(2, 2, 2, 2),
        lattice_prefactors=tuple(_c("q^(4) - 1") for _ in range(4)),
        real_coords=real,
        real_coords_inverse=real_inv,
    )


def _build_minkowski() -> SpaceSpec:
    q2 = qpow(2)
    metric = {
        ("X0", "X0"): -ONE,
        ("X3", "X3"): ONE,
        ("X+", "X-"): _c("-q"),
        ("X-", "X+"): _c("-q^(-1)"),
    }
    conj = {
        "X0": [("X0", ONE)],
        "X3": [("X3", ONE)],
        "X+": [("X-", _c("-q^(-1)"))],
        "X-": [("X+", _c("-q"))],
    }
    mql = _c("-q") * LAMBDA  # -q*(q - q^-1)
    relations = {
        ("X+", "X0"): [_mono("X0", "X+")],
        ("X3", "X0"): [_mono("X0", "X3")],
        ("X-", "X0"): [_mono("X0", "X-")],
        ("X3", "X+"): [_mono("X+", "X3", coeff=q2), _mono("X0", "X+", coeff=mql)],
        ("X-", "X3"): [_mono("X3", "X-", coeff=q2), _mono("X0", "X-", coeff=mql)],
        ("X-", "X+"): [
            _mono("X+", "X-"),
            _mono("X3", "X3", coeff=LAMBDA),
            _mono("X0", "X3", coeff=-LAMBDA),
        ],
    }
    # Self-conjugate basis: the X+/X- conjugation here swaps the q-powers
    # relative to the 3d Euclidean case, so the prefactors swap along with it.
    real = {
        "Y0": [("X0", ONE)],
        "Y1": [("X+", _c("i*q^(1/2)")), ("X-", _c("i*q^(-1/2)"))],
        "Y2": [("X+", _c("q^(1/2)")), ("X-", _c("-q^(-1/2)"))],
        "Y3": [("X3", ONE)],
    }
    real_inv = {
        "X0": [("Y0", ONE)],
        "X+": [("Y1", _c("-1/2*i*q^(-1/2)")), ("Y2", _c("1/2*q^(-1/2)"))],
        "X3": [("Y3", ONE)],
        "X-": [("Y1", _c("-1/2*i*q^(1/2)")), ("Y2", _c("-1/2*q^(1/2)"))],
    }
    return SpaceSpec(
        name=MINKOWSKI,
        generators=("X0", "X+", "X3", "X-"),
        relations=relations,
        metric=metric,
        metric_inverse=dict(metric),
        conjugation=conj,
        kappa_bosonic=qpow(-4),
        kappa_grassmann=qpow(4),
        lattice_steps=(2, 2, 2, 2),
        lattice_prefactors=tuple(_c("1 - q^(-2)") for _ in range(4)),
        real_coords=real,
        real_coords_inverse=real_inv,
    )


_BUILDERS = {
    QUANTUM_PLANE: _build_quantum_plane,
    EUCLID3: _build_euclid3,
    EUCLID4: _build_euclid4,
    MINKOWSKI: _build_minkowski,
}

_CACHE: dict[str, SpaceSpec] = {}


def space(name: str) -> SpaceSpec:
    """Return the shipped preset for ``name`` (cached)."""
    if name not in _BUILDERS:
        raise KeyError("unknown space %r; expected one of %s" % (name, ", ".join(SPACE_NAMES)))
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def momentum_name(gen: str) -> str:
    """Mirror a coordinate symbol into its momentum partner (X+ -> P+)."""
    if not gen.startswith("X"):
        raise ValueError("not a coordinate symbol: %r" % gen)
    return "P" + gen[1:]


# -- config round-trip --------------------------------------------------------

def _combo_config(combo: list[tuple[str, QScalar]]) -> list[list[str]]:
    return [[g, c.render()] for g, c in combo]


def _combo_parse(data) -> list[tuple[str, QScalar]]:
    return [(g, QScalar.parse(c)) for g, c in data]


def to_config(spec: SpaceSpec) -> dict:
    return {
        "name": spec.name,
        "generators": list(spec.generators),
        "relations": [
            {"pair": list(pair), "result": [[list(w), c.render()] for w, c in combo]}
            for pair, combo in sorted(spec.relations.items())
        ],
        "metric": [[list(k), v.render()] for k, v in sorted(spec.metric.items())],
        "metric_inverse": [[list(k), v.render()] for k, v in sorted(spec.metric_inverse.items())],
        "conjugation": {g: _combo_config(combo) for g, combo in spec.conjugation.items()},
        "kappa_bosonic": spec.kappa_bosonic.render(),
        "kappa_grassmann": spec.kappa_grassmann.render(),
        "lattice_steps": list(spec.lattice_steps),
        "lattice_prefactors": [p.render() for p in spec.lattice_prefactors],
        "real_coords": {g: _combo_config(combo) for g, combo in spec.real_coords.items()},
        "real_coords_inverse": {
            g: _combo_config(combo) for g, combo in spec.real_coords_inverse.items()
        },
    }


def from_config(data: dict) -> SpaceSpec:
    return SpaceSpec(
        name=data["name"],
        generators=tuple(data["generators"]),
        relations={
            tuple(entry["pair"]): [(tuple(w), QScalar.parse(c)) for w, c in entry["result"]]
            for entry in data["relations"]
        },
        metric={tuple(k): QScalar.parse(v) for k, v in data["metric"]},
        metric_inverse={tuple(k): QScalar.parse(v) for k, v in data["metric_inverse"]},
        conjugation={g: _combo_parse(c) for g, c in data["conjugation"].items()},
        kappa_bosonic=QScalar.parse(data["kappa_bosonic"]),
        kappa_grassmann=QScalar.parse(data["kappa_grassmann"]),
        lattice_steps=tuple(data["lattice_steps"]),
        lattice_prefactors=tuple(QScalar.parse(p) for p in data["lattice_prefactors"]),
        real_coords={g: _combo_parse(c) for g, c in data.get("real_coords", {}).items()},
        real_coords_inverse={
            g: _combo_parse(c) for g, c in data.get("real_coords_inverse", {}).items()
        },
    )


def config_dir() -> str | None:
    return os.environ.get("QSPACE_CONFIG_DIR")


def load_space(name: str) -> SpaceSpec:
    """Load a space config from QSPACE_CONFIG_DIR if present, else the preset."""
    directory = config_dir()
    if directory:
        path = os.path.join(directory, "space_%s.json" % name)
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return from_config(json.load(fh))
    return space(name)
