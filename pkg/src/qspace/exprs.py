"""Expression front end: a small grammar over one space's symbols.

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := scalar | symbol | 'conj(' expr ')' | 'star(' expr ',' expr ')'
              | deriv '(' expr ')' | '(' expr ')'
    deriv  := 'd' ['h'] ('l'|'r') index      -- dh = hatted calculus
    scalar := rational | 'i' | 'q' ['^' '(' half-integer ')']

Symbols are the coordinate and momentum generators of the selected space
(X1, X+, P3, ...); the derivative index is a coordinate suffix.  Whitespace
is insignificant.  ``render`` produces text that reparses to an equal tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import ONE, QScalar
from .spaces import SpaceSpec, momentum_name
from .ncalg import NCPoly, lift, nc_conjugate, readback, star_product
from .phasespace import HATTED, LEFT, RIGHT, UNHATTED, phase_algebra


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__("%s (at position %d)" % (message, position))


@dataclass(frozen=True)
class Scalar:
    value: QScalar


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Conj:
    arg: "Expr"


@dataclass(frozen=True)
class Star:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Deriv:
    calculus: str
    side: str
    index: str
    arg: "Expr"


Expr = object


class _Lexer:
    def __init__(self, text: str, symbols: set[str]):
        self.text = text
        self.pos = 0
        self.symbols = symbols

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def take(self, s: str):
        self.skip()
        if not self.text.startswith(s, self.pos):
            raise ParseError("expected %r" % s, self.pos)
        self.pos += len(s)

    def number(self) -> Fraction:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected digits", self.pos)
        num = int(self.text[start:self.pos])
        if self.peek() == "/":
            save = self.pos
            self.take("/")
            if not self.peek().isdigit():
                self.pos = save
                return Fraction(num)
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Fraction(num, int(self.text[start:self.pos]))
        return Fraction(num)

    def symbol(self) -> str | None:
        self.skip()
        # longest match among the known symbols
        best = None
        for s in self.symbols:
            if self.text.startswith(s, self.pos) and (best is None or len(s) > len(best)):
                best = s
        if best is not None:
            self.pos += len(best)
        return best


def _space_symbols(spec: SpaceSpec) -> set[str]:
    syms = set(spec.generators)
    for g in spec.generators:
        if g.startswith("X"):
            syms.add(momentum_name(g))
    return syms


def parse(text: str, spec: SpaceSpec) -> Expr:
    lx = _Lexer(text, _space_symbols(spec))
    if lx.peek() == "":
        raise ParseError("empty expression", 0)
    tree = _parse_expr(lx, spec)
    lx.skip()
    if lx.pos != len(text):
        raise ParseError("trailing input", lx.pos)
    return tree


def _parse_expr(lx: _Lexer, spec) -> Expr:
    node = _parse_signed_term(lx, spec)
    while lx.peek() in ("+", "-"):
        op = lx.peek()
        lx.take(op)
        rhs = _parse_term(lx, spec)
        node = Add(node, rhs) if op == "+" else Sub(node, rhs)
    return node


def _parse_signed_term(lx: _Lexer, spec) -> Expr:
    if lx.peek() == "-":
        lx.take("-")
        return _negate(_parse_term(lx, spec))
    if lx.peek() == "+":
        lx.take("+")
    return _parse_term(lx, spec)


def _negate(node: Expr) -> Expr:
    """Fold a leading minus into the leftmost scalar factor."""
    if isinstance(node, Scalar):
        return Scalar(-node.value)
    if isinstance(node, Mul):
        return Mul(_negate(node.left), node.right)
    return Mul(Scalar(-ONE), node)


def _parse_term(lx: _Lexer, spec) -> Expr:
    node = _parse_factor(lx, spec)
    while lx.peek() == "*":
        lx.take("*")
        node = Mul(node, _parse_factor(lx, spec))
    return node


def _parse_factor(lx: _Lexer, spec) -> Expr:
    c = lx.peek()
    if c == "(":
        lx.take("(")
        node = _parse_expr(lx, spec)
        lx.take(")")
        return node
    if lx.startswith("conj("):
        lx.take("conj(")
        node = _parse_expr(lx, spec)
        lx.take(")")
        return Conj(node)
    if lx.startswith("star("):
        lx.take("star(")
        a = _parse_expr(lx, spec)
        lx.take(",")
        b = _parse_expr(lx, spec)
        lx.take(")")
        return Star(a, b)
    if c == "d" and not lx.startswith("d("):
        return _parse_deriv(lx, spec)
    if c == "i" or c.isdigit():
        return Scalar(_parse_scalar_atom(lx))
    if c == "q":
        return Scalar(_parse_scalar_atom(lx))
    sym = lx.symbol()
    if sym is not None:
        return Sym(sym)
    raise ParseError("unknown symbol", lx.pos)


def _parse_deriv(lx: _Lexer, spec) -> Expr:
    lx.take("d")
    calculus = UNHATTED
    if lx.peek() == "h":
        lx.take("h")
        calculus = HATTED
    side_ch = lx.peek()
    if side_ch not in ("l", "r"):
        raise ParseError("expected derivative side 'l' or 'r'", lx.pos)
    lx.take(side_ch)
    side = LEFT if side_ch == "l" else RIGHT
    # index: a coordinate suffix like 1, +, 3
    suffixes = {g[1:]: g for g in spec.generators}
    idx = None
    for s in sorted(suffixes, key=len, reverse=True):
        if lx.startswith(s):
            lx.take(s)
            idx = suffixes[s]
            break
    if idx is None:
        raise ParseError("unknown derivative index", lx.pos)
    lx.take("(")
    node = _parse_expr(lx, spec)
    lx.take(")")
    return Deriv(calculus, side, idx, node)


def _parse_scalar_atom(lx: _Lexer) -> QScalar:
    c = lx.peek()
    if c == "i":
        lx.take("i")
        return QScalar.i()
    if c == "q":
        lx.take("q")
        if lx.peek() == "^":
            lx.take("^")
            lx.take("(")
            sign = 1
            if lx.peek() == "-":
                lx.take("-")
                sign = -1
            exp = lx.number()
            lx.take(")")
            return QScalar.q_power(sign * exp)
        return QScalar.q_power(1)
    return QScalar.from_rational(lx.number())


# -- rendering -----------------------------------------------------------------

def render(node: Expr) -> str:
    return _render(node, 0)


def _render(node: Expr, prec: int) -> str:
    # prec levels: 0 sum position, 1 product left slot, 2 product right slot;
    # the grammar is left associative, so composite right operands need parens
    # for the reparse to rebuild the same tree
    if isinstance(node, Scalar):
        txt = node.value.render()
        if prec >= 1 and (len(node.value.terms) > 1 or txt.startswith("-")):
            return "(%s)" % txt
        return txt
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Add):
        body = "%s + %s" % (_render(node.left, 0), _render(node.right, 1))
        return "(%s)" % body if prec >= 1 else body
    if isinstance(node, Sub):
        body = "%s - %s" % (_render(node.left, 0), _render(node.right, 1))
        return "(%s)" % body if prec >= 1 else body
    if isinstance(node, Mul):
        body = "%s*%s" % (_render(node.left, 1), _render(node.right, 2))
        return "(%s)" % body if prec >= 2 else body
    if isinstance(node, Conj):
        return "conj(%s)" % _render(node.arg, 0)
    if isinstance(node, Star):
        return "star(%s, %s)" % (_render(node.left, 0), _render(node.right, 0))
    if isinstance(node, Deriv):
        kind = "d" + ("h" if node.calculus == HATTED else "")
        kind += "l" if node.side == LEFT else "r"
        return "%s%s(%s)" % (kind, node.index[1:], _render(node.arg, 0))
    raise TypeError("not an expression node: %r" % (node,))


# -- evaluation ------------------------------------------------------------------

def evaluate(node: Expr, spec: SpaceSpec) -> NCPoly:
    """Evaluate to a normally ordered element.

    Pure coordinate expressions land in the coordinate algebra; any momentum
    symbol promotes the computation to the extended algebra (which requires
    the mixed rewrite rules for the space).
    """
    if _uses_momentum(node):
        alg = phase_algebra(spec.name)
        target = alg.combined_spec(UNHATTED, "xp", "momentum")
        return _eval(node, spec, target)
    return _eval(node, spec, spec)


def _uses_momentum(node: Expr) -> bool:
    if isinstance(node, Sym):
        return node.name.startswith("P")
    for attr in ("left", "right", "arg"):
        child = getattr(node, attr, None)
        if child is not None and _uses_momentum(child):
            return True
    return False


def _eval(node: Expr, spec: SpaceSpec, target: SpaceSpec) -> NCPoly:
    if isinstance(node, Scalar):
        return NCPoly.scalar(target, node.value)
    if isinstance(node, Sym):
        return NCPoly.generator(target, node.name)
    if isinstance(node, Add):
        return _eval(node.left, spec, target) + _eval(node.right, spec, target)
    if isinstance(node, Sub):
        return _eval(node.left, spec, target) - _eval(node.right, spec, target)
    if isinstance(node, Mul):
        return _eval(node.left, spec, target) * _eval(node.right, spec, target)
    if isinstance(node, Conj):
        inner = _eval(node.arg, spec, spec)
        out = nc_conjugate(inner)
        return _transplant(out, target)
    if isinstance(node, Star):
        a = readback(_eval(node.left, spec, spec))
        b = readback(_eval(node.right, spec, spec))
        return _transplant(lift(spec, star_product(a, b, spec)), target)
    if isinstance(node, Deriv):
        inner = _eval(node.arg, spec, spec)
        alg = phase_algebra(spec.name)
        out = alg.derivative_action(node.calculus, node.side, node.index, inner)
        return _transplant(out, target)
    raise TypeError("not an expression node: %r" % (node,))


def _transplant(poly: NCPoly, target: SpaceSpec) -> NCPoly:
    if poly.space is target:
        return poly
    return NCPoly(target, dict(poly.terms))
