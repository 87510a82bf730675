"""Noncommutative polynomials and the normal-ordering rewrite engine.

Elements of a quantum space are finite QScalar-linear combinations of
normally ordered generator words.  Normal ordering repeatedly rewrites the
first adjacent descending generator pair using the space's relation table;
every shipped relation strictly lowers the inversion count of the word, so
exhaustive rewriting terminates.  Confluence is not assumed anywhere: it is
exercised by the associativity checks in the test suite.

The star product on commutative coefficient functions is realised through
the quantisation map W sending a commutative monomial to the normally
ordered word with the same multidegree: f star g is the readback of
W(f)W(g).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalar import ONE, QScalar
from .spaces import SpaceSpec, Word

TermMap = dict[Word, QScalar]

# coefficient functions: multidegree (aligned with the space's generator
# order) -> QScalar
CoeffPoly = dict[tuple[int, ...], QScalar]


def _add_term(acc: TermMap, word: Word, coeff: QScalar) -> None:
    if coeff.is_zero():
        return
    cur = acc.get(word)
    if cur is None:
        acc[word] = coeff
    else:
        s = cur + coeff
        if s.is_zero():
            del acc[word]
        else:
            acc[word] = s


def _add_scaled(acc: TermMap, terms: TermMap, coeff: QScalar) -> None:
    for w, c in terms.items():
        _add_term(acc, w, c * coeff)


def _first_descent(spec: SpaceSpec, word: Word) -> int:
    pos = spec.position
    for k in range(len(word) - 1):
        if pos(word[k]) > pos(word[k + 1]):
            return k
    return -1


def normal_word(spec: SpaceSpec, word: Word) -> TermMap:
    """Normal form of a single generator word, memoised per space."""
    if not spec.relations:
        # free carrier (the self-conjugate coordinate symbols): no rewriting
        return {word: ONE}
    cache = spec._nf_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    k = _first_descent(spec, word)
    if k < 0:
        result = {word: ONE}
    else:
        pair = (word[k], word[k + 1])
        combo = spec.relations.get(pair)
        if combo is None:
            raise ValueError(
                "no rewrite rule for pair %r in space %r" % (pair, spec.name)
            )
        result: TermMap = {}
        head, tail = word[:k], word[k + 2:]
        for replacement, coeff in combo:
            sub = normal_word(spec, head + replacement + tail)
            _add_scaled(result, sub, coeff)
    cache[word] = result
    return result


def normal_order(spec: SpaceSpec, raw: list[tuple[Word, QScalar]]) -> "NCPoly":
    """Normal-order a raw word polynomial; rejects unknown generators."""
    for word, _ in raw:
        for g in word:
            spec.position(g)
    acc: TermMap = {}
    for word, coeff in raw:
        _add_scaled(acc, normal_word(spec, tuple(word)), coeff)
    return NCPoly(spec, acc)


class NCPoly:
    """Quantum-space element: map from normal words to QScalar coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space: SpaceSpec, terms: TermMap | None = None):
        self.space = space
        self.terms: TermMap = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(space: SpaceSpec) -> "NCPoly":
        return NCPoly(space, {})

    @staticmethod
    def one(space: SpaceSpec) -> "NCPoly":
        return NCPoly(space, {(): ONE})

    @staticmethod
    def generator(space: SpaceSpec, gen: str) -> "NCPoly":
        space.position(gen)
        return NCPoly(space, {(gen,): ONE})

    @staticmethod
    def scalar(space: SpaceSpec, c: QScalar) -> "NCPoly":
        return NCPoly(space, {(): c} if not c.is_zero() else {})

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "NCPoly") -> None:
        if other.space is not self.space:
            raise ValueError(
                "space mismatch: %r vs %r" % (self.space.name, other.space.name)
            )

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        acc = dict(self.terms)
        _add_scaled(acc, other.terms, ONE)
        return NCPoly(self.space, acc)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.space, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        acc: TermMap = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _add_scaled(acc, normal_word(self.space, w1 + w2), c1 * c2)
        return NCPoly(self.space, acc)

    def scale(self, c: QScalar) -> "NCPoly":
        if c.is_zero():
            return NCPoly.zero(self.space)
        return NCPoly(self.space, {w: k * c for w, k in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and self.space is other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space.name, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def conjugate(self) -> "NCPoly":
        """Antilinear antihomomorphism defined by the space's conjugation table."""
        table = self.space.conjugation
        acc: TermMap = {}
        for word, coeff in self.terms.items():
            # conj(g1...gk) = conj(gk)...conj(g1); expand the linear combos
            expanded: list[tuple[Word, QScalar]] = [((), coeff.conj())]
            for g in reversed(word):
                combo = table[g]
                expanded = [
                    (w + (h,), c * d) for w, c in expanded for h, d in combo
                ]
            for w, c in expanded:
                _add_scaled(acc, normal_word(self.space, w), c)
        return NCPoly(self.space, acc)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), tuple(map(self.space.position, w)))):
            c = self.terms[word]
            body = "*".join(word) if word else "1"
            parts.append("(%s)*%s" % (c.render(), body))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "NCPoly[%s](%s)" % (self.space.name, self.render())


def ncmul(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b


def nc_conjugate(f: NCPoly) -> NCPoly:
    return f.conjugate()


# -- star product on coefficient functions -----------------------------------

def lift(space: SpaceSpec, coeffs: CoeffPoly) -> NCPoly:
    """Quantisation map W: commutative monomials to normally ordered words."""
    acc: TermMap = {}
    for degs, c in coeffs.items():
        if len(degs) != space.dimension():
            raise ValueError("multidegree length mismatch for %r" % (degs,))
        word: list[str] = []
        for g, d in zip(space.generators, degs):
            word.extend([g] * d)
        _add_term(acc, tuple(word), c)
    return NCPoly(space, acc)


def readback(f: NCPoly) -> CoeffPoly:
    """Inverse of the quantisation map on normally ordered elements."""
    spec = f.space
    out: CoeffPoly = {}
    for word, c in f.terms.items():
        degs = [0] * spec.dimension()
        for g in word:
            degs[spec.position(g)] += 1
        key = tuple(degs)
        cur = out.get(key)
        out[key] = c if cur is None else cur + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def star_product(f: CoeffPoly, g: CoeffPoly, space: SpaceSpec) -> CoeffPoly:
    return readback(lift(space, f) * lift(space, g))


def coeff_conjugate(f: CoeffPoly, space: SpaceSpec) -> CoeffPoly:
    """Coefficient function of the conjugate of W(f)."""
    return readback(lift(space, f).conjugate())


# -- self-conjugate coordinates ----------------------------------------------

_REAL_CACHE: dict[str, SpaceSpec] = {}


def real_space(spec: SpaceSpec) -> SpaceSpec:
    """Free-algebra carrier for expressions in the self-conjugate coordinates.

    Generator words in the Y-symbols are kept formal (no rewriting); the
    conjugation fixes each generator, which is the defining property of the
    basis.
    """
    if not spec.real_coords:
        raise ValueError("space %r has no self-conjugate coordinate basis" % spec.name)
    key = spec.name
    if key not in _REAL_CACHE:
        gens = tuple(sorted(spec.real_coords, key=_real_sort_key))
        _REAL_CACHE[key] = SpaceSpec(
            name=spec.name + "_real",
            generators=gens,
            relations={},
            metric={},
            metric_inverse={},
            conjugation={g: [(g, ONE)] for g in gens},
            kappa_bosonic=spec.kappa_bosonic,
            kappa_grassmann=spec.kappa_grassmann,
            lattice_steps=spec.lattice_steps,
            lattice_prefactors=spec.lattice_prefactors,
        )
    return _REAL_CACHE[key]


def _real_sort_key(name: str):
    return (len(name), name)


def substitute(f: NCPoly, table: dict[str, list[tuple[str, QScalar]]], target: SpaceSpec) -> NCPoly:
    """Replace every generator by its linear combination and normal-order."""
    acc: TermMap = {}
    for word, coeff in f.terms.items():
        expanded: list[tuple[Word, QScalar]] = [((), coeff)]
        for g in word:
            combo = table[g]
            expanded = [(w + (h,), c * d) for w, c in expanded for h, d in combo]
        for w, c in expanded:
            _add_scaled(acc, normal_word(target, w), c)
    return NCPoly(target, acc)


def to_real_coords(f: NCPoly) -> NCPoly:
    """Rewrite an element in the self-conjugate coordinate symbols."""
    spec = f.space
    target = real_space(spec)
    # generators expand via the inverse table: X = combination of Y
    return substitute(f, spec.real_coords_inverse, target)


def from_real_coords(f: NCPoly) -> NCPoly:
    """Inverse of to_real_coords; lands back in the coordinate algebra."""
    if not f.space.name.endswith("_real"):
        raise ValueError("expected an element in real coordinates")
    base_name = f.space.name[: -len("_real")]
    from .spaces import space as _space

    base = _space(base_name)
    return substitute(f, base.real_coords, base)


# -- random elements (shared by tests and the verification suites) -----------

def random_poly(
    spec: SpaceSpec,
    rng: random.Random,
    max_degree: int = 3,
    max_terms: int = 3,
    parity: int | None = None,
) -> NCPoly:
    """Random normally ordered element with small Gaussian-rational coefficients.

    ``parity`` restricts word lengths modulo 2 when set.
    """
    acc: TermMap = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        if parity is not None:
            if d % 2 != parity:
                d = d + 1 if d + 1 <= max_degree else d - 1
            if d < 0 or d % 2 != parity:
                continue
        word = tuple(sorted(
            (rng.choice(spec.generators) for _ in range(d)),
            key=spec.position,
        ))
        re = Fraction(rng.randint(-3, 3))
        im = Fraction(rng.randint(-3, 3))
        if re == 0 and im == 0:
            re = Fraction(1)
        qexp = Fraction(rng.randint(-2, 2), 2)
        _add_term(acc, word, QScalar.q_power(qexp, re, im))
    return NCPoly(spec, acc)
