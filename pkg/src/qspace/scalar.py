"""Exact scalar arithmetic for the deformation parameter q.

A ``QScalar`` is a Laurent polynomial in q with half-integer exponents
allowed (the invariant metrics need q^(1/2)) and Gaussian-rational
coefficients.  Internally exponents are stored doubled, as plain ints, so
q^(3/2) lives at key 3 and q^(-1) at key -2; coefficients are pairs of
``fractions.Fraction`` (real, imaginary).  The representation is canonical:
zero coefficients are never stored, so equal values are structurally equal.

``QRational`` is the fraction field built on top of ``QScalar``.  It only
shows up where exact division is unavoidable (series coefficients with
q-factorial denominators, inverses of change-of-basis matrices); all the
algebraic data tables stay in the Laurent ring itself.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Coeff = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coeff_add(a: Coeff, b: Coeff) -> Coeff:
    return (a[0] + b[0], a[1] + b[1])


def _coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _coeff_neg(a: Coeff) -> Coeff:
    return (-a[0], -a[1])


def _coeff_conj(a: Coeff) -> Coeff:
    return (a[0], -a[1])


def _coeff_inv(a: Coeff) -> Coeff:
    n = a[0] * a[0] + a[1] * a[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return (a[0] / n, -a[1] / n)


class QScalar:
    """Laurent polynomial in q^(1/2) over the Gaussian rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Coeff] | None = None):
        # terms maps doubled exponent -> (re, im); assumed already clean
        self.terms: dict[int, Coeff] = terms if terms is not None else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "QScalar":
        return QScalar({})

    @staticmethod
    def from_rational(re, im=0) -> "QScalar":
        c = (Fraction(re), Fraction(im))
        if c == (_ZERO, _ZERO):
            return QScalar({})
        return QScalar({0: c})

    @staticmethod
    def one() -> "QScalar":
        return QScalar.from_rational(1)

    @staticmethod
    def i() -> "QScalar":
        return QScalar.from_rational(0, 1)

    @staticmethod
    def q_power(exponent, coeff_re=1, coeff_im=0) -> "QScalar":
        """c * q^exponent, with exponent an int, Fraction or half-integer."""
        doubled = exponent * 2
        if isinstance(doubled, Fraction):
            if doubled.denominator != 1:
                raise ValueError("q exponents must be half-integers")
            doubled = doubled.numerator
        doubled = int(doubled)
        c = (Fraction(coeff_re), Fraction(coeff_im))
        if c == (_ZERO, _ZERO):
            return QScalar({})
        return QScalar({doubled: c})

    # -- ring structure -----------------------------------------------

    def __add__(self, other: "QScalar") -> "QScalar":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = _coeff_add(out.get(e, (_ZERO, _ZERO)), c)
            if s == (_ZERO, _ZERO):
                out.pop(e, None)
            else:
                out[e] = s
        return QScalar(out)

    def __neg__(self) -> "QScalar":
        return QScalar({e: _coeff_neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "QScalar") -> "QScalar":
        return self + (-other)

    def __mul__(self, other: "QScalar") -> "QScalar":
        out: dict[int, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = _coeff_mul(c1, c2)
                s = _coeff_add(out.get(e, (_ZERO, _ZERO)), p)
                if s == (_ZERO, _ZERO):
                    out.pop(e, None)
                else:
                    out[e] = s
        return QScalar(out)

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                return QScalar({e * n: _pow_coeff(_coeff_inv(c), -n)})
            raise ValueError("negative powers only defined for monomials")
        out = QScalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, re, im=0) -> "QScalar":
        return self * QScalar.from_rational(re, im)

    def conj(self) -> "QScalar":
        """Complex conjugation; q itself is real and stays fixed."""
        return QScalar({e: _coeff_conj(c) for e, c in self.terms.items()})

    # -- predicates / helpers ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: (_ONE, _ZERO)}

    def is_real(self) -> bool:
        return all(c[1] == 0 for c in self.terms.values())

    def is_unit(self) -> bool:
        """Units of the Laurent ring are the single-term elements."""
        return len(self.terms) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, QScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- evaluation -----------------------------------------------------

    def evaluate(self, q_value: float) -> complex:
        """Numeric value at a real q > 0."""
        if q_value <= 0:
            raise ValueError("q must be positive")
        total = 0j
        for e, (re, im) in self.terms.items():
            w = q_value ** (e / 2.0)
            total += complex(float(re) * w, float(im) * w)
        return total

    # -- text form -------------------------------------------------------

    def render(self) -> str:
        """Canonical text, e.g. ``(1 - i)*q^(3/2) + 2*q^(-1)``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms, reverse=True):
            re, im = self.terms[e]
            coeff_txt, coeff_negated = _render_coeff(re, im)
            if e == 0:
                body = coeff_txt
            else:
                qtxt = "q^(%s)" % _render_exponent(e)
                body = qtxt if coeff_txt == "1" else coeff_txt + "*" + qtxt
            if not parts:
                parts.append("-" + body if coeff_negated else body)
            else:
                parts.append(("- " if coeff_negated else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "QScalar(%s)" % self.render()

    @staticmethod
    def parse(text: str) -> "QScalar":
        return _parse_qscalar(text)


def _pow_coeff(c: Coeff, n: int) -> Coeff:
    out = (_ONE, _ZERO)
    for _ in range(n):
        out = _coeff_mul(out, c)
    return out


def _render_exponent(doubled: int) -> str:
    if doubled % 2 == 0:
        return str(doubled // 2)
    return "%d/2" % doubled


def _render_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)


def _render_coeff(re: Fraction, im: Fraction) -> tuple[str, bool]:
    """Return (text-without-sign, was-negated); pure terms pull the sign out."""
    if im == 0:
        return _render_fraction(abs(re)), re < 0
    if re == 0:
        mag = abs(im)
        if mag == 1:
            return "i", im < 0
        return _render_fraction(mag) + "*i", im < 0
    # mixed coefficient: keep its own signs inside parentheses
    re_txt = _render_fraction(re)
    im_mag = _render_fraction(abs(im))
    im_txt = "i" if abs(im) == 1 else im_mag + "*i"
    op = "-" if im < 0 else "+"
    return "(%s %s %s)" % (re_txt, op, im_txt), False


# -- scalar parser -----------------------------------------------------------
#
# sum     := term (('+'|'-') term)*
# term    := atom ('*' atom)*
# atom    := rational | 'i' | 'q' ['^' '(' signed-half ')'] | '(' sum ')'

class _Tok:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise ValueError("expected %r at position %d in %r" % (ch, self.pos, self.text))
        self.pos += len(ch)

    def number(self) -> Fraction:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError("expected digits at position %d in %r" % (self.pos, self.text))
        num = int(self.text[start:self.pos])
        if self.peek() == "/":
            self.take("/")
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Fraction(num, int(self.text[start:self.pos]))
        return Fraction(num)


def _parse_sum(tk: _Tok) -> QScalar:
    sign = 1
    if tk.peek() == "-":
        tk.take("-")
        sign = -1
    elif tk.peek() == "+":
        tk.take("+")
    value = _parse_term(tk)
    if sign < 0:
        value = -value
    while tk.peek() in ("+", "-"):
        op = tk.peek()
        tk.take(op)
        rhs = _parse_term(tk)
        value = value + rhs if op == "+" else value - rhs
    return value


def _parse_term(tk: _Tok) -> QScalar:
    value = _parse_atom(tk)
    while tk.peek() == "*":
        tk.take("*")
        value = value * _parse_atom(tk)
    return value


def _parse_atom(tk: _Tok) -> QScalar:
    c = tk.peek()
    if c == "(":
        tk.take("(")
        value = _parse_sum(tk)
        tk.take(")")
        return value
    if c == "i":
        tk.take("i")
        return QScalar.i()
    if c == "q":
        tk.take("q")
        if tk.peek() == "^":
            tk.take("^")
            tk.take("(")
            sign = 1
            if tk.peek() == "-":
                tk.take("-")
                sign = -1
            exp = tk.number()
            tk.take(")")
            return QScalar.q_power(sign * exp)
        return QScalar.q_power(1)
    if c.isdigit():
        return QScalar.from_rational(tk.number())
    raise ValueError("unexpected character %r at position %d in %r" % (c, tk.pos, tk.text))


def _parse_qscalar(text: str) -> QScalar:
    tk = _Tok(text)
    value = _parse_sum(tk)
    tk.skip_ws()
    if tk.pos != len(text):
        raise ValueError("trailing input at position %d in %r" % (tk.pos, text))
    return value


# -- frequently used constants ----------------------------------------------

ZERO = QScalar.zero()
ONE = QScalar.one()
I = QScalar.i()
Q = QScalar.q_power(1)
QINV = QScalar.q_power(-1)
LAMBDA = Q - QINV          # q - q^-1
LAMBDA_PLUS = Q + QINV     # q + q^-1


def qpow(k) -> QScalar:
    return QScalar.q_power(Fraction(k))


# -- exact division in the Laurent ring --------------------------------------

def _as_poly(a: QScalar) -> tuple[int, list[Coeff]]:
    """Split a = q^(shift/2) * p(t), t = q^(1/2), p with nonzero constant term.

    Returns (shift, dense coefficient list of p).
    """
    if not a.terms:
        return 0, []
    lo = min(a.terms)
    hi = max(a.terms)
    coeffs = [(a.terms.get(e, (_ZERO, _ZERO))) for e in range(lo, hi + 1)]
    return lo, coeffs


def _from_poly(shift: int, coeffs: list[Coeff]) -> QScalar:
    terms = {}
    for k, c in enumerate(coeffs):
        if c != (_ZERO, _ZERO):
            terms[shift + k] = c
    return QScalar(terms)


def _poly_divmod(num: list[Coeff], den: list[Coeff]) -> tuple[list[Coeff], list[Coeff]]:
    num = list(num)
    dn = len(den) - 1
    lead_inv = _coeff_inv(den[dn])
    quot: list[Coeff] = [(_ZERO, _ZERO)] * max(0, len(num) - dn)
    for k in range(len(num) - dn - 1, -1, -1):
        c = _coeff_mul(num[k + dn], lead_inv)
        if c == (_ZERO, _ZERO):
            continue
        quot[k] = c
        for j, d in enumerate(den):
            num[k + j] = _coeff_add(num[k + j], _coeff_neg(_coeff_mul(c, d)))
    while num and num[-1] == (_ZERO, _ZERO):
        num.pop()
    return quot, num


def divexact(a: QScalar, b: QScalar) -> QScalar:
    """Exact division a / b in the Laurent ring; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero QScalar")
    if a.is_zero():
        return QScalar.zero()
    sa, pa = _as_poly(a)
    sb, pb = _as_poly(b)
    quot, rem = _poly_divmod(pa, pb)
    if rem:
        raise ValueError("inexact division in Laurent ring")
    return _from_poly(sa - sb, quot)


def _poly_gcd(a: list[Coeff], b: list[Coeff]) -> list[Coeff]:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    # normalise to monic
    if a:
        inv = _coeff_inv(a[-1])
        a = [_coeff_mul(c, inv) for c in a]
    return a


class QRational:
    """Element of the fraction field of the Laurent ring.

    Canonical form: gcd-reduced, denominator monic in t = q^(1/2) with no
    monomial factor (its lowest term sits at q^0), so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QScalar, den: QScalar = ONE, _normalised: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalised:
            num, den = _normalise(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def from_scalar(a: QScalar) -> "QRational":
        return QRational(a, ONE, _normalised=True)

    def __add__(self, other: "QRational") -> "QRational":
        return QRational(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "QRational") -> "QRational":
        return QRational(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "QRational":
        return QRational(-self.num, self.den, _normalised=True)

    def __mul__(self, other) -> "QRational":
        if isinstance(other, QScalar):
            return QRational(self.num * other, self.den)
        return QRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "QRational") -> "QRational":
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRational")
        return QRational(self.num * other.den, self.den * other.num)

    def conj(self) -> "QRational":
        return QRational(self.num.conj(), self.den.conj())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_scalar(self) -> bool:
        return self.den.is_one()

    def as_scalar(self) -> QScalar:
        if not self.den.is_one():
            raise ValueError("not a Laurent polynomial: %s" % self.render())
        return self.num

    def evaluate(self, q_value: float) -> complex:
        d = self.den.evaluate(q_value)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at q=%r" % q_value)
        return self.num.evaluate(q_value) / d

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QRational)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def render(self) -> str:
        if self.den.is_one():
            return self.num.render()
        return "(%s) / (%s)" % (self.num.render(), self.den.render())

    def __repr__(self) -> str:
        return "QRational(%s)" % self.render()


def _normalise(num: QScalar, den: QScalar) -> tuple[QScalar, QScalar]:
    if num.is_zero():
        return QScalar.zero(), ONE
    sn, pn = _as_poly(num)
    sd, pd = _as_poly(den)
    g = _poly_gcd(pn, pd)
    if len(g) > 1:
        pn, _ = _poly_divmod(pn, g)
        pd, _ = _poly_divmod(pd, g)
    # make denominator monic and strip its monomial factor into the numerator
    lead_inv = _coeff_inv(pd[-1])
    pn = [_coeff_mul(c, lead_inv) for c in pn]
    pd = [_coeff_mul(c, lead_inv) for c in pd]
    return _from_poly(sn - sd, pn), _from_poly(0, pd)


QNum = Union[QScalar, QRational]


def rational(a: QNum) -> QRational:
    return a if isinstance(a, QRational) else QRational.from_scalar(a)
