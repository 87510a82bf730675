"""Quasipoint lattices, Jackson sums, projectors and expectation values.

A quasipoint carries one sign and one integer exponent per coordinate; its
j-th coordinate value is s_j * alpha_j * q^(a_j v_j) with the step a_j fixed
by the space.  The integration functional is a weighted sum over quasipoints
whose weight is the product of the shipped per-coordinate prefactors and the
signed coordinate values; with rational alphas the weight of a point is exact
as a QScalar, which is what the acceptance checks compare against before any
floating evaluation.

The one-dimensional ``jackson_1d`` primitive keeps both half-lines positive:
the raw negative-half-line formula carries a sign that would subtract that
branch, and the sign here is resolved so that the q->1 limit reproduces the
Riemann integral (the signed behaviour survives in the full functional's
weights, which do flip sign with the sector).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .scalar import QScalar
from .spaces import SpaceSpec, space
from .ncalg import CoeffPoly, coeff_conjugate, star_product

Signs = tuple[int, ...]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Quasipoint:
    signs: Signs
    exponents: Exponents

    def __post_init__(self):
        if len(self.signs) != len(self.exponents):
            raise ValueError("sign/exponent length mismatch")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")


@dataclass
class LatticeSpec:
    """Truncated quasipoint window for one space.

    ``sign_sectors`` is a per-coordinate choice among 'both', 'pos', 'neg';
    ``window`` gives the inclusive exponent range per coordinate.  Rational
    ``alphas`` keep the weights exact.
    """

    space: SpaceSpec
    window: tuple[tuple[int, int], ...]
    alphas: tuple[Fraction, ...] | None = None
    sign_sectors: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.space.dimension()
        if len(self.window) != n:
            raise ValueError("window must give one exponent range per coordinate")
        if self.alphas is None:
            self.alphas = tuple(Fraction(1) for _ in range(n))
        else:
            self.alphas = tuple(Fraction(a) for a in self.alphas)
        if self.sign_sectors is None:
            self.sign_sectors = tuple("both" for _ in range(n))
        if any(s not in ("both", "pos", "neg") for s in self.sign_sectors):
            raise ValueError("sign sectors must be 'both', 'pos' or 'neg'")

    def dimension(self) -> int:
        return self.space.dimension()

    def points(self) -> Iterable[Quasipoint]:
        n = self.dimension()
        ranges = []
        for j in range(n):
            lo, hi = self.window[j]
            sector = self.sign_sectors[j]
            signs = (1, -1) if sector == "both" else ((1,) if sector == "pos" else (-1,))
            ranges.append([(s, v) for s in signs for v in range(lo, hi + 1)])
        def rec(j, acc):
            if j == n:
                yield Quasipoint(tuple(a[0] for a in acc), tuple(a[1] for a in acc))
                return
            for sv in ranges[j]:
                yield from rec(j + 1, acc + [sv])
        yield from rec(0, [])

    def contains(self, p: Quasipoint) -> bool:
        for j in range(self.dimension()):
            lo, hi = self.window[j]
            if not (lo <= p.exponents[j] <= hi):
                return False
            sector = self.sign_sectors[j]
            if sector == "pos" and p.signs[j] < 0:
                return False
            if sector == "neg" and p.signs[j] > 0:
                return False
        return True

    # -- coordinates and weights -------------------------------------------

    def coordinate_symbolic(self, p: Quasipoint, j: int) -> QScalar:
        a = self.space.lattice_steps[j]
        return QScalar.q_power(a * p.exponents[j], self.alphas[j] * p.signs[j])

    def coordinates(self, p: Quasipoint, q_value: float) -> list[float]:
        return [
            p.signs[j] * float(self.alphas[j]) * q_value ** (self.space.lattice_steps[j] * p.exponents[j])
            for j in range(self.dimension())
        ]

    def weight_symbolic(self, p: Quasipoint) -> QScalar:
        w = QScalar.one()
        for j in range(self.dimension()):
            w = w * self.space.lattice_prefactors[j] * self.coordinate_symbolic(p, j)
        return w

    def weight(self, p: Quasipoint, q_value: float) -> float:
        return self.weight_symbolic(p).evaluate(q_value).real


class LatticeFunction:
    """Complex samples over the quasipoints of a window."""

    __slots__ = ("spec", "samples")

    def __init__(self, spec: LatticeSpec, samples: dict[Quasipoint, complex] | None = None):
        self.spec = spec
        self.samples = samples if samples is not None else {}

    @staticmethod
    def from_callable(spec: LatticeSpec, fn: Callable[..., complex], q_value: float) -> "LatticeFunction":
        return LatticeFunction(
            spec, {p: complex(fn(*spec.coordinates(p, q_value))) for p in spec.points()}
        )

    def value(self, p: Quasipoint) -> complex:
        return self.samples.get(p, 0j)

    def __mul__(self, other: "LatticeFunction") -> "LatticeFunction":
        keys = set(self.samples) & set(other.samples)
        return LatticeFunction(self.spec, {k: self.samples[k] * other.samples[k] for k in keys})

    def scale(self, c: complex) -> "LatticeFunction":
        return LatticeFunction(self.spec, {k: v * c for k, v in self.samples.items()})

    def __add__(self, other: "LatticeFunction") -> "LatticeFunction":
        out = dict(self.samples)
        for k, v in other.samples.items():
            out[k] = out.get(k, 0j) + v
        return LatticeFunction(self.spec, out)

    # -- CSV round trip -------------------------------------------------------

    def to_csv(self) -> str:
        n = self.spec.dimension()
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["s_%d" % (j + 1) for j in range(n)]
            + ["v_%d" % (j + 1) for j in range(n)]
            + ["re", "im"]
        )
        for p in sorted(self.samples, key=lambda p: (p.signs, p.exponents)):
            z = self.samples[p]
            writer.writerow(list(p.signs) + list(p.exponents) + [repr(z.real), repr(z.imag)])
        return buf.getvalue()

    @staticmethod
    def from_csv(spec: LatticeSpec, text: str) -> "LatticeFunction":
        n = spec.dimension()
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if len(header) != 2 * n + 2:
            raise ValueError("CSV column count does not match the lattice dimension")
        samples = {}
        for row in reader:
            if not row:
                continue
            signs = tuple(int(x) for x in row[:n])
            exps = tuple(int(x) for x in row[n:2 * n])
            samples[Quasipoint(signs, exps)] = complex(float(row[2 * n]), float(row[2 * n + 1]))
        return LatticeFunction(spec, samples)


# -- one-dimensional Jackson sums ---------------------------------------------

def jackson_1d(fn: Callable[[float], complex], a: int, c: float, q_value: float,
               half_line: str, window: tuple[int, int]) -> complex:
    """Truncated q-lattice sum (1 - q^-a) * sum_k c q^(ak) fn(+-c q^(ak)).

    ``half_line`` is 'pos', 'neg' or 'full'.  Requires q > 1; the spacing
    shrinks toward the origin and both half-lines enter positively.
    """
    if q_value <= 1:
        raise ValueError("jackson_1d needs q > 1 (use the step symmetry for q < 1)")
    if a <= 0:
        raise ValueError("step must be a positive integer")
    if half_line not in ("pos", "neg", "full"):
        raise ValueError("half_line must be 'pos', 'neg' or 'full'")
    lo, hi = window
    prefactor = 1.0 - q_value ** (-a)
    total = 0j
    for sign in ((1,) if half_line == "pos" else (-1,) if half_line == "neg" else (1, -1)):
        for k in range(lo, hi + 1):
            x = c * q_value ** (a * k)
            total += x * complex(fn(sign * x))
    return prefactor * total


# -- the integration functional -------------------------------------------------

def integrate(f: LatticeFunction, q_value: float) -> complex:
    """Sum of signed weights times samples over the window."""
    total = [0j]
    spec = f.spec
    parts = sorted(
        ((p, f.samples[p]) for p in f.samples),
        key=lambda item: (item[0].exponents, item[0].signs),
    )
    acc_re = []
    acc_im = []
    for p, val in parts:
        w = spec.weight(p, q_value)
        z = w * val
        acc_re.append(z.real)
        acc_im.append(z.imag)
    return complex(math.fsum(acc_re), math.fsum(acc_im))


def lattice_delta(spec: LatticeSpec, at: Quasipoint, q_value: float) -> LatticeFunction:
    """Inverse-weight spike: integrating f against it reproduces f(at)."""
    if not spec.contains(at):
        raise ValueError("quasipoint outside the window")
    w = spec.weight(at, q_value)
    return LatticeFunction(spec, {at: 1.0 / w})


# -- projectors and spectral calculus ------------------------------------------

Bound = tuple[int, int | None]
# per-coordinate bound: (sign, exponent) with sign in {-1, 0, +1}; sign 0 is
# the origin and needs no exponent; None exponent with sign +1 means "window
# maximum" (no cut).


def _leq(sign: int, v: int, bound: Bound) -> bool:
    bs, bv = bound
    if bs == 0:
        return sign < 0
    if bv is None:
        return True if bs > 0 else False
    if sign != bs:
        return sign < bs
    # same branch: positive branch grows with v, negative branch shrinks
    return v <= bv if sign > 0 else v >= bv


def projector_E(spec: LatticeSpec, threshold: tuple[Bound, ...]) -> Callable[[LatticeFunction], LatticeFunction]:
    """Multiplication by the indicator of points at or below the threshold.

    The per-coordinate order is by actual coordinate value: negative branch
    below the origin below the positive branch, magnitudes ordered by the
    exponent.  Idempotent by construction.
    """
    if len(threshold) != spec.dimension():
        raise ValueError("need one bound per coordinate")

    def apply(f: LatticeFunction) -> LatticeFunction:
        out = {}
        for p, v in f.samples.items():
            if all(_leq(p.signs[j], p.exponents[j], threshold[j]) for j in range(spec.dimension())):
                out[p] = v
        return LatticeFunction(spec, out)

    return apply


def heaviside_threshold(spec: LatticeSpec) -> tuple[Bound, ...]:
    """Threshold at the origin in every coordinate (the q-step function)."""
    return tuple((0, None) for _ in range(spec.dimension()))


def window_max_threshold(spec: LatticeSpec) -> tuple[Bound, ...]:
    return tuple((1, None) for _ in range(spec.dimension()))


def spectral_apply(spec: LatticeSpec, F: Callable[..., complex], f: LatticeFunction,
                   q_value: float) -> LatticeFunction:
    """Apply a scalar function of the coordinates pointwise.

    This is the lattice form of the spectral decomposition of multiplication
    operators: each quasipoint is an eigenregion and F acts by its value on
    the coordinate tuple there.
    """
    return LatticeFunction(
        spec,
        {p: F(*spec.coordinates(p, q_value)) * v for p, v in f.samples.items()},
    )


# -- coefficient functions on the lattice ----------------------------------------

def sample_coeff_poly(spec: LatticeSpec, coeffs: CoeffPoly, q_value: float) -> LatticeFunction:
    """Sample a coefficient polynomial at the quasipoint coordinate values."""
    samples = {}
    for p in spec.points():
        cs = spec.coordinates(p, q_value)
        total = 0j
        for degs, c in coeffs.items():
            term = c.evaluate(q_value)
            for x, d in zip(cs, degs):
                if d:
                    term *= x ** d
            total += term
        samples[p] = total
    return LatticeFunction(spec, samples)


def density(psi: CoeffPoly, spec: LatticeSpec, q_value: float,
            normalize: bool = False) -> LatticeFunction:
    """Probability density: conjugate coefficients star the function, sampled.

    With ``normalize`` the function is rescaled so the density integrates to
    one; a vanishing norm on the chosen window is an error.
    """
    rho = star_product(coeff_conjugate(psi, spec.space), psi, spec.space)
    out = sample_coeff_poly(spec, rho, q_value)
    if normalize:
        norm = integrate(out, q_value)
        if abs(norm) < 1e-300:
            raise ValueError("zero norm on the chosen window")
        out = out.scale(1.0 / norm)
    return out


def expectation_position(op: CoeffPoly, psi: CoeffPoly, spec: LatticeSpec, q_value: float,
                         normalize: bool = False) -> complex:
    """<psi, op(x) psi> with op a coefficient polynomial (e.g. a real combination).

    The integrand is conj(psi) star op star psi sampled on the window.
    """
    sp = spec.space
    integrand = star_product(coeff_conjugate(psi, sp), star_product(op, psi, sp), sp)
    val = integrate(sample_coeff_poly(spec, integrand, q_value), q_value)
    if normalize:
        norm = integrate(density(psi, spec, q_value), q_value)
        if abs(norm) < 1e-300:
            raise ValueError("zero norm on the chosen window")
        val = val / norm
    return val


def real_position_op(spec: LatticeSpec, index: int) -> CoeffPoly:
    """Coefficient polynomial of (x^k + conj(x^k))/2 for the chosen coordinate."""
    sp = spec.space
    n = sp.dimension()
    degs = [0] * n
    degs[index] = 1
    mono: CoeffPoly = {tuple(degs): QScalar.one()}
    conj = coeff_conjugate(mono, sp)
    out: CoeffPoly = {}
    for part in (mono, conj):
        for k, v in part.items():
            cur = out.get(k, QScalar.zero()) + v.scale(Fraction(1, 2))
            if cur.is_zero():
                out.pop(k, None)
            else:
                out[k] = cur
    return out


def expectation_momentum(index: str, psi: CoeffPoly, spec: LatticeSpec, q_value: float,
                         normalize: bool = False) -> complex:
    """<psi, (P^k + conj P^k)/2 psi> via the two differential calculi.

    The conjugate momentum acts through the opposite calculus; this is a
    convention choice, recorded as such, and requires the mixed rewrite rules
    for the space.
    """
    from .phasespace import HATTED, LEFT, UNHATTED, phase_algebra
    from .ncalg import lift, readback
    from .scalar import I as _I

    sp = spec.space
    alg = phase_algebra(sp.name)
    fpoly = lift(sp, psi)
    acted = alg.derivative_action(UNHATTED, LEFT, index, fpoly).scale(_I)
    acted_bar = alg.derivative_action(HATTED, LEFT, index, fpoly).scale(-_I)
    half = QScalar.from_rational(Fraction(1, 2))
    combo = readback((acted + acted_bar).scale(half))
    integrand = star_product(coeff_conjugate(psi, sp), combo, sp)
    val = integrate(sample_coeff_poly(spec, integrand, q_value), q_value)
    if normalize:
        norm = integrate(density(psi, spec, q_value), q_value)
        if abs(norm) < 1e-300:
            raise ValueError("zero norm on the chosen window")
        val = val / norm
    return val


def kappa_rescale(f: LatticeFunction, q_value: float, inverse: bool = True) -> LatticeFunction:
    """Carry samples onto the lattice with alphas scaled by kappa^(-1) (or kappa).

    The rescaling constant is not an integer number of lattice steps, so the
    result lives on a rescaled lattice rather than being reindexed on the
    original grid; sample indices are preserved, coordinate values move.
    """
    spec = f.spec
    kappa = spec.space.kappa_bosonic.evaluate(q_value)
    if kappa.imag != 0:
        raise ValueError("rescaling constant must be real at real q")
    factor = 1.0 / kappa.real if inverse else kappa.real
    new_spec = LatticeSpec(
        space=spec.space,
        window=spec.window,
        alphas=tuple(Fraction(float(a) * factor) for a in spec.alphas),
        sign_sectors=spec.sign_sectors,
    )
    return LatticeFunction(new_spec, dict(f.samples))


# -- spec serialisation -----------------------------------------------------------

def spec_to_config(spec: LatticeSpec) -> dict:
    return {
        "space": spec.space.name,
        "window": [list(w) for w in spec.window],
        "alphas": [[a.numerator, a.denominator] for a in spec.alphas],
        "sign_sectors": list(spec.sign_sectors),
    }


def spec_from_config(data: dict) -> LatticeSpec:
    return LatticeSpec(
        space=space(data["space"]),
        window=tuple(tuple(w) for w in data["window"]),
        alphas=tuple(Fraction(n, d) for n, d in data["alphas"]),
        sign_sectors=tuple(data["sign_sectors"]),
    )
