"""Text syntax for symbols and operators.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')* factor ('*'? factor)*
    factor := atom ('^' uint)?
    atom   := literal | var | '(' expr ')'

Literals are integers, decimals, rationals such as ``3/2`` and the imaginary
unit ``i``; ``2+3i`` and ``(1/2)i`` are ordinary sums and products. Function
variables are ``z`` (or ``z1``, ``z2``, ...) with conjugates ``z*``;
operators are ``A``, ``B`` (or ``A1``, ``A2``, ...) with adjoints ``A*``.
A ``*`` touching the end of a variable name marks the conjugate/adjoint, so
``A*A`` is ``A+ A``; a separated ``*`` is multiplication (``z * z*`` is
``z z*``).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .ccr import OperatorPoly
from .errors import ParseError
from .gaussian_rational import GaussianRational
from .polyfunc import PolyFunction

_NUMBER = re.compile(r"\d+(?:\.\d+)?(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z][0-9]*")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "var", "imag", "op", "end"
    text: str
    pos: int
    star: bool = False


def tokenize(src):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER.match(src, i)
        if m:
            tokens.append(Token("num", m.group(), i))
            i = m.end()
            continue
        m = _NAME.match(src, i)
        if m:
            text = m.group()
            if text == "i":
                tokens.append(Token("imag", text, i))
                i = m.end()
                continue
            star = m.end() < n and src[m.end()] == "*"
            tokens.append(Token("var", text, i, star))
            i = m.end() + star
            continue
        if ch in "+-*^()":
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i, src)
    tokens.append(Token("end", "", n))
    return tokens


# AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: GaussianRational


@dataclass(frozen=True)
class Var:
    name: str
    star: bool
    pos: int


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, node)


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: object


class _Parser:
    def __init__(self, src):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message, pos=None):
        raise ParseError(message, self.tok.pos if pos is None else pos, self.src)

    def parse(self):
        if self.tok.kind == "end":
            self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        terms = [(1, self.term())]
        while self.tok.kind == "op" and self.tok.text in "+-":
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 and terms[0][0] == 1 else Add(tuple(terms))

    def term(self):
        negate = False
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self.advance().text == "-":
                negate = not negate
        factors = [self.factor()]
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.advance()
                factors.append(self.factor())
            elif t.kind in ("num", "var", "imag") or (t.kind == "op" and t.text == "("):
                factors.append(self.factor())
            else:
                break
        node = factors[0] if len(factors) == 1 else Mul(tuple(factors))
        return Neg(node) if negate else node

    def factor(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            caret = self.advance()
            t = self.tok
            if t.kind != "num" or not t.text.isdigit():
                self.error("exponent must be a non-negative integer literal", caret.pos)
            self.advance()
            return Pow(base, int(t.text))
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(GaussianRational(_number(t.text)))
        if t.kind == "imag":
            self.advance()
            return Num(GaussianRational(0, 1))
        if t.kind == "var":
            self.advance()
            return Var(t.text, t.star, t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                self.error("expected ')'")
            self.advance()
            return node
        if t.kind == "end":
            self.error("unexpected end of expression")
        self.error(f"unexpected {t.text!r}")


def _number(text):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(num) / Fraction(den)
    return Fraction(text)


def parse_ast(src):
    return _Parser(src).parse()


# lowering --------------------------------------------------------------------


def _walk_vars(node):
    if isinstance(node, Var):
        yield node
    elif isinstance(node, Add):
        for _, t in node.terms:
            yield from _walk_vars(t)
    elif isinstance(node, Mul):
        for f in node.factors:
            yield from _walk_vars(f)
    elif isinstance(node, (Pow,)):
        yield from _walk_vars(node.base)
    elif isinstance(node, Neg):
        yield from _walk_vars(node.operand)


def _function_slot(var, src):
    name = var.name
    if name == "z":
        return 0
    if name[0] == "z" and name[1:].isdigit() and int(name[1:]) >= 1:
        return int(name[1:]) - 1
    if name[0] in "AB":
        raise ParseError(f"operator symbol {name!r} in a function expression", var.pos, src)
    raise ParseError(f"unknown variable {name!r}", var.pos, src)


def _operator_mode(var, src):
    name = var.name
    if name == "A":
        return 0
    if name == "B":
        return 1
    if name[0] == "A" and name[1:].isdigit() and int(name[1:]) >= 1:
        return int(name[1:]) - 1
    if name[0] == "z":
        raise ParseError(f"function variable {name!r} in an operator expression", var.pos, src)
    raise ParseError(f"unknown operator {name!r}", var.pos, src)


def _lower(node, leaf, unit):
    if isinstance(node, Num):
        return unit * node.value
    if isinstance(node, Var):
        return leaf(node)
    if isinstance(node, Add):
        out = None
        for sign, t in node.terms:
            v = _lower(t, leaf, unit)
            if sign < 0:
                v = -v
            out = v if out is None else out + v
        return out
    if isinstance(node, Mul):
        out = None
        for f in node.factors:
            v = _lower(f, leaf, unit)
            out = v if out is None else out * v
        return out
    if isinstance(node, Pow):
        return _lower(node.base, leaf, unit) ** node.exponent
    if isinstance(node, Neg):
        return -_lower(node.operand, leaf, unit)
    raise TypeError(node)


def parse_function(src, variable_count=None):
    """Parse text such as ``"z*^2 z + 3/2"`` into a :class:`PolyFunction`.

    >>> parse_function("z* z").terms
    {((1, 1),): GaussianRational(1)}
    """
    node = parse_ast(src)
    slots = [_function_slot(v, src) for v in _walk_vars(node)]
    needed = max(slots, default=0) + 1
    count = needed if variable_count is None else variable_count
    if count < needed:
        raise ParseError(f"expression uses {needed} variables", 0, src)

    def leaf(v):
        slot = _function_slot(v, src)
        if v.star:
            return PolyFunction.zbar(slot, count)
        return PolyFunction.z(slot, count)

    return _lower(node, leaf, PolyFunction.constant(1, count))


def parse_operator(src, mode_count=None):
    """Parse text such as ``"A*^2 A"`` into a normal-ordered :class:`OperatorPoly`.

    Products are taken in the written order and reduced with the commutation
    relations, so ``parse_operator("A A*")`` equals ``A*A + 1``.
    """
    node = parse_ast(src)
    modes = [_operator_mode(v, src) for v in _walk_vars(node)]
    needed = max(modes, default=0) + 1
    count = needed if mode_count is None else mode_count
    if count < needed:
        raise ParseError(f"expression uses {needed} modes", 0, src)

    def leaf(v):
        mode = _operator_mode(v, src)
        if v.star:
            return OperatorPoly.create(mode, count)
        return OperatorPoly.annihilate(mode, count)

    return _lower(node, leaf, OperatorPoly.identity(count))
