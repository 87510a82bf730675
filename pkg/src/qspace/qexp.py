"""Momentum eigenfunctions as exactly solved bivariate series.

The eigenfunction is a series in two gradings: coordinate monomials on one
side, momentum monomials on the other, with equal degree in every term and
constant term 1.  The defining eigenvalue equation couples the unknown
coefficients of degree d to the already-known degree d-1 block through a
linear system that is block diagonal over momentum monomials; each block is
solved exactly over the fraction field.  Coefficients pick up q-factorial
denominators, so they are QRational, not plain Laurent polynomials.

``residual`` re-substitutes a solved series into the eigenvalue equation by
fresh derivative actions and momentum star products, without reusing any of
the solver's linear algebra.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .scalar import I, ONE, QRational, QScalar, rational
from .spaces import SpaceSpec, Word, momentum_name
from .ncalg import NCPoly, normal_word
from .phasespace import LEFT, RIGHT, UNHATTED, phase_algebra

SeriesTerms = dict[tuple[Word, Word], QRational]


class SingularSystemError(ValueError):
    """The eigenvalue equation has no unique solution at some degree."""

    def __init__(self, degree: int, space_name: str, calculus: str, side: str, why: str):
        self.degree = degree
        super().__init__(
            "eigenfunction system singular at degree %d for %s (%s, %s): %s"
            % (degree, space_name, calculus, side, why)
        )


class BiSeries:
    """Truncated eigenfunction: (x-word, p-word) -> coefficient."""

    def __init__(self, space_name: str, calculus: str, side: str, max_degree: int,
                 terms: SeriesTerms):
        self.space_name = space_name
        self.calculus = calculus
        self.side = side
        self.max_degree = max_degree
        self.terms = terms

    def coefficient(self, xword: Word, pword: Word) -> QRational:
        return self.terms.get((tuple(xword), tuple(pword)), rational(QScalar.zero()))

    def degree_block(self, d: int) -> SeriesTerms:
        return {k: v for k, v in self.terms.items() if len(k[0]) == d}

    def dump(self) -> str:
        """One line per term: ``(x-word | p-word) : coefficient``."""
        lines = []
        for (xw, pw) in sorted(self.terms, key=lambda k: (len(k[0]), k)):
            c = self.terms[(xw, pw)]
            lines.append("(%s | %s) : %s" % ("*".join(xw) or "1", "*".join(pw) or "1", c.render()))
        return "\n".join(lines)


_MOMENTUM_CACHE: dict[str, SpaceSpec] = {}


def momentum_space(spec: SpaceSpec) -> SpaceSpec:
    """The coordinate algebra transplanted onto the momentum symbols."""
    if spec.name not in _MOMENTUM_CACHE:
        _MOMENTUM_CACHE[spec.name] = SpaceSpec(
            name=spec.name + "_momentum",
            generators=tuple(momentum_name(g) for g in spec.generators),
            relations={
                (momentum_name(a), momentum_name(b)): [
                    (tuple(momentum_name(g) for g in w), c) for w, c in combo
                ]
                for (a, b), combo in spec.relations.items()
            },
            metric={},
            metric_inverse={},
            conjugation={},
            kappa_bosonic=spec.kappa_bosonic,
            kappa_grassmann=spec.kappa_grassmann,
            lattice_steps=spec.lattice_steps,
            lattice_prefactors=spec.lattice_prefactors,
        )
    return _MOMENTUM_CACHE[spec.name]


def _monomials(spec: SpaceSpec, degree: int) -> list[Word]:
    return [tuple(w) for w in combinations_with_replacement(spec.generators, degree)]


def _p_star(pspec: SpaceSpec, pword: Word, pgen: str, side: str) -> dict[Word, QScalar]:
    """Momentum star product of a normal monomial with one generator."""
    word = pword + (pgen,) if side == LEFT else (pgen,) + pword
    return normal_word(pspec, word)


def solve_qexp(space_name: str, max_degree: int, calculus: str = UNHATTED,
               side: str = LEFT) -> BiSeries:
    """Solve the momentum-eigenfunction equation degree by degree.

    ``side`` selects the left-action equation or its right-action dual.
    """
    alg = phase_algebra(space_name)
    spec = alg.space
    pspec = momentum_space(spec)
    pgens = pspec.generators

    terms: SeriesTerms = {((), ()): rational(ONE)}
    for d in range(1, max_degree + 1):
        xmons = _monomials(spec, d)
        xprev = _monomials(spec, d - 1)
        pmons = _monomials(pspec, d)
        row_index = {}
        rows = []
        for gi, g in enumerate(spec.generators):
            for v in xprev:
                row_index[(g, v)] = len(rows)
                rows.append((g, v))
        # action matrix: A[row][col] with col over xmons
        zero = rational(QScalar.zero())
        A = [[zero] * len(xmons) for _ in rows]
        for col, xw in enumerate(xmons):
            mono = NCPoly(spec, {xw: ONE})
            for g in spec.generators:
                acted = alg.derivative_action(calculus, side, g, mono).scale(I)
                for w, c in acted.terms.items():
                    A[row_index[(g, w)]][col] = rational(c)
        # right-hand side, block column per target p-monomial
        pcol = {pw: k for k, pw in enumerate(pmons)}
        R = [[zero] * len(pmons) for _ in rows]
        for (xw, pw), coeff in terms.items():
            if len(xw) != d - 1:
                continue
            for g in spec.generators:
                pg = momentum_name(g)
                prod = _p_star(pspec, pw, pg, side)
                for pw2, c in prod.items():
                    r = row_index[(g, xw)]
                    R[r][pcol[pw2]] = R[r][pcol[pw2]] + coeff * c
        sol = _solve_blocks(A, R, d, space_name, calculus, side)
        for col, xw in enumerate(xmons):
            for pk, pw in enumerate(pmons):
                c = sol[col][pk]
                if not c.is_zero():
                    terms[(xw, pw)] = c
    return BiSeries(space_name, calculus, side, max_degree, terms)


def solve_qexp_dual(space_name: str, max_degree: int, calculus: str = UNHATTED) -> BiSeries:
    return solve_qexp(space_name, max_degree, calculus, side=RIGHT)


def _solve_blocks(A, R, degree, space_name, calculus, side):
    """Gauss-Jordan on [A | R]; returns unknowns x cols-of-R, exact."""
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    work = [list(A[r]) + list(R[r]) for r in range(nrows)]
    width = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if not work[k][c].is_zero()), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = rational(ONE) / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for k in range(nrows):
            if k != r and not work[k][c].is_zero():
                f = work[k][c]
                work[k] = [a - f * b for a, b in zip(work[k], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if len(pivots) < ncols:
        raise SingularSystemError(degree, space_name, calculus, side, "rank deficient")
    for k in range(r, nrows):
        if any(not v.is_zero() for v in work[k][ncols:width]):
            raise SingularSystemError(degree, space_name, calculus, side, "inconsistent")
    sol = [[None] * (width - ncols) for _ in range(ncols)]
    for rr, c in enumerate(pivots):
        for j in range(width - ncols):
            sol[c][j] = work[rr][ncols + j]
    return sol


def residual(series: BiSeries) -> SeriesTerms:
    """Exact residual of the eigenvalue equation through the truncation order.

    Substitutes the series afresh: derivative action on each coordinate
    monomial, momentum star product on each momentum monomial, subtract.
    Only components with full partners inside the truncation are reported.
    """
    alg = phase_algebra(series.space_name)
    spec = alg.space
    pspec = momentum_space(spec)
    out: SeriesTerms = {}

    def add(key, val):
        cur = out.get(key)
        s = val if cur is None else cur + val
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    for g in spec.generators:
        pg = momentum_name(g)
        # i d^g acting on the series
        for (xw, pw), coeff in series.terms.items():
            mono = NCPoly(spec, {xw: ONE})
            acted = alg.derivative_action(series.calculus, series.side, g, mono).scale(I)
            for w, c in acted.terms.items():
                add((g, w, pw), coeff * c)
        # series (x)star p^g on the momentum side
        for (xw, pw), coeff in series.terms.items():
            if len(xw) >= series.max_degree:
                continue  # no degree-(d+1) partner inside the truncation
            prod = _p_star(pspec, pw, pg, series.side)
            for pw2, c in prod.items():
                add((g, xw, pw2), -(coeff * c))
    return out


def degree_pairing_holds(series: BiSeries) -> bool:
    return all(len(xw) == len(pw) for (xw, pw) in series.terms)


# -- classical comparison ------------------------------------------------------

def classical_series(spec: SpaceSpec, max_degree: int) -> dict[tuple[Word, Word], complex]:
    """Multinomial coefficients of exp((1/i) sum_k x^k p_k) at q = 1.

    The index is lowered with the inverse metric evaluated at q = 1; the
    result is keyed like BiSeries terms for direct comparison.
    """
    pairs = []
    for (k, l), g in spec.metric_inverse.items():
        v = g.evaluate(1.0)
        if v:
            pairs.append((k, l, v))
    # z = sum_k x^k p_k as a polynomial keyed by (xdeg-vector, pdeg-vector)
    n = spec.dimension()
    z: dict[tuple[tuple[int, ...], tuple[int, ...]], complex] = {}
    for k, l, v in pairs:
        xd = [0] * n
        pd = [0] * n
        xd[spec.position(k)] += 1
        pd[spec.position(l)] += 1
        key = (tuple(xd), tuple(pd))
        z[key] = z.get(key, 0) + v
    out = {((), ()): complex(1)}
    power = {((0,) * n, (0,) * n): complex(1)}
    fact = 1
    for d in range(1, max_degree + 1):
        nxt: dict = {}
        for (xd, pd), c in power.items():
            for (zx, zp), zv in z.items():
                key = (tuple(a + b for a, b in zip(xd, zx)), tuple(a + b for a, b in zip(pd, zp)))
                nxt[key] = nxt.get(key, 0) + c * zv
        power = nxt
        fact *= d
        scale = (-1j) ** d / fact
        for (xd, pd), c in power.items():
            xw = _word_from_degs(spec, xd)
            pw = tuple(momentum_name(g) for g in _word_from_degs(spec, pd))
            out[(xw, pw)] = out.get((xw, pw), 0) + c * scale
    return {k: v for k, v in out.items() if abs(v) > 1e-15}


def _word_from_degs(spec: SpaceSpec, degs) -> Word:
    word: list[str] = []
    for g, d in zip(spec.generators, degs):
        word.extend([g] * d)
    return tuple(word)
