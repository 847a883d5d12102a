"""Vector-field expression language: parsing, printing, elaboration.

Grammar (whitespace insignificant, one token of lookahead):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' unary) | unary)*        adjacency multiplies
    unary  := '-' unary | power
    power  := atom ('^' nat)?
    atom   := rational | 'i' | 'x' | '(' expr ')' | func '(' expr ')'
    func   := 'exp' | 'sin' | 'cos'

Rational literals are a single lexeme "p" or "p/q" with no internal
spaces.  Adjacent letters split greedily into the known names, so "ix"
reads as i*x.  The argument of exp/sin/cos must reduce to a scalar
multiple of x; the scalar is folded into the node at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainRequiredError, ParseError, UnsupportedArgumentError
from .hurwitz import HurwitzSeries
from .scalars import Domain, GaussianRational, format_scalar


@dataclass(frozen=True)
class Const:
    value: object


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    child: object


@dataclass(frozen=True)
class Exp:
    scale: object


@dataclass(frozen=True)
class Sin:
    scale: object


@dataclass(frozen=True)
class Cos:
    scale: object


FieldExpr = (Const, Var, Add, Sub, Mul, Pow, Neg, Exp, Sin, Cos)

_NUM_RE = re.compile(r"\d+(?:/\d+)?")
_WORDS = ("exp", "sin", "cos", "i", "x")
_ATOM_EXPECTED = ("number", "'x'", "'i'", "'exp'", "'sin'", "'cos'", "'('")


@dataclass(frozen=True)
class _Token:
    kind: str
    value: object
    offset: int


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    symbols = {"+": "plus", "-": "minus", "*": "star", "^": "caret",
               "(": "lparen", ")": "rparen"}
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            m = _NUM_RE.match(text, pos)
            literal = m.group()
            try:
                value = Fraction(literal)
            except ZeroDivisionError:
                raise ParseError("zero denominator in rational literal", pos) from None
            tokens.append(_Token("number", value, pos))
            pos = m.end()
            continue
        if ch.isalpha():
            start = pos
            while pos < n and text[pos].isalpha():
                pos += 1
            run = text[start:pos]
            j = 0
            while j < len(run):
                for word in _WORDS:
                    if run.startswith(word, j):
                        tokens.append(_Token("word", word, start + j))
                        j += len(word)
                        break
                else:
                    raise ParseError(
                        f"unknown name {run[j:]!r}", start + j,
                        expected=("x", "i", "exp", "sin", "cos"),
                    )
            continue
        if ch in symbols:
            tokens.append(_Token(symbols[ch], ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, expected):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {_describe(tok)}", tok.offset, expected=expected)
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("plus", "minus"):
            op = self.advance()
            right = self.parse_term()
            node = Add(node, right) if op.kind == "plus" else Sub(node, right)
        return node

    def parse_term(self):
        node = self.parse_unary()
        while True:
            tok = self.peek()
            if tok.kind == "star":
                self.advance()
                node = Mul(node, self.parse_unary())
            elif tok.kind in ("number", "word", "lparen"):
                node = Mul(node, self.parse_unary())
            else:
                return node

    def parse_unary(self):
        if self.peek().kind == "minus":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().kind == "caret":
            self.advance()
            tok = self.expect("number", ("non-negative integer exponent",))
            if tok.value.denominator != 1:
                raise ParseError(
                    "exponent must be a non-negative integer", tok.offset,
                    expected=("non-negative integer exponent",),
                )
            return Pow(base, int(tok.value))
        return base

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Const(tok.value)
        if tok.kind == "word":
            self.advance()
            if tok.value == "x":
                return Var()
            if tok.value == "i":
                return Const(GaussianRational(0, 1))
            self.expect("lparen", ("'('",))
            inner = self.parse_expr()
            self.expect("rparen", ("')'",))
            scale = _linear_scale(inner, tok.value, tok.offset)
            return {"exp": Exp, "sin": Sin, "cos": Cos}[tok.value](scale)
        if tok.kind == "lparen":
            self.advance()
            inner = self.parse_expr()
            self.expect("rparen", ("')'",))
            return inner
        raise ParseError(f"unexpected {_describe(tok)}", tok.offset, expected=_ATOM_EXPECTED)


def _describe(tok):
    if tok.kind == "end":
        return "end of input"
    return f"token {tok.value!r}"


def parse(text):
    """Parse an expression string into a FieldExpr tree."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {_describe(tok)}", tok.offset, expected=("end of input",))
    return node


def _poly(node):
    """Ordinary polynomial coefficients of a transcendental-free tree, else None."""
    if isinstance(node, Const):
        return [node.value]
    if isinstance(node, Var):
        return [Fraction(0), Fraction(1)]
    if isinstance(node, Neg):
        inner = _poly(node.child)
        return None if inner is None else [-c for c in inner]
    if isinstance(node, (Add, Sub)):
        left, right = _poly(node.left), _poly(node.right)
        if left is None or right is None:
            return None
        size = max(len(left), len(right))
        left = left + [Fraction(0)] * (size - len(left))
        right = right + [Fraction(0)] * (size - len(right))
        if isinstance(node, Add):
            return [a + b for a, b in zip(left, right)]
        return [a - b for a, b in zip(left, right)]
    if isinstance(node, Mul):
        left, right = _poly(node.left), _poly(node.right)
        if left is None or right is None:
            return None
        out = [Fraction(0)] * (len(left) + len(right) - 1)
        for ii, a in enumerate(left):
            for jj, b in enumerate(right):
                out[ii + jj] = out[ii + jj] + a * b
        return out
    if isinstance(node, Pow):
        base = _poly(node.base)
        if base is None:
            return None
        out = [Fraction(1)]
        for _ in range(node.exponent):
            new = [Fraction(0)] * (len(out) + len(base) - 1)
            for ii, a in enumerate(out):
                for jj, b in enumerate(base):
                    new[ii + jj] = new[ii + jj] + a * b
            out = new
        return out
    return None


def _trimmed(coeffs):
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def polynomial_coefficients(node):
    """Ordinary coefficients [c_0, c_1, ...] or None if exp/sin/cos occur."""
    coeffs = _poly(node)
    return None if coeffs is None else _trimmed(coeffs)


def _linear_scale(node, func, offset):
    coeffs = _poly(node)
    if coeffs is None:
        raise UnsupportedArgumentError(
            f"{func} at offset {offset} takes a scalar multiple of x, not a nested function"
        )
    coeffs = _trimmed(coeffs)
    if len(coeffs) > 2 or coeffs[0]:
        raise UnsupportedArgumentError(
            f"{func} at offset {offset} takes a scalar multiple of x"
        )
    return coeffs[1] if len(coeffs) == 2 else Fraction(0)


def _needs_gaussian(value):
    return isinstance(value, GaussianRational) and value.im != 0


def _scalar_series(value, order, domain):
    if domain is Domain.RATIONAL and _needs_gaussian(value):
        raise DomainRequiredError("this expression needs --domain gaussian")
    return domain.coerce(value)


def elaborate(node, order, domain=Domain.RATIONAL):
    """Series of an expression at the given truncation order and domain."""
    if isinstance(node, Const):
        return HurwitzSeries.constant(_scalar_series(node.value, order, domain), order, domain)
    if isinstance(node, Var):
        return HurwitzSeries.x(order, domain)
    if isinstance(node, Add):
        return elaborate(node.left, order, domain) + elaborate(node.right, order, domain)
    if isinstance(node, Sub):
        return elaborate(node.left, order, domain) - elaborate(node.right, order, domain)
    if isinstance(node, Mul):
        return elaborate(node.left, order, domain) * elaborate(node.right, order, domain)
    if isinstance(node, Neg):
        return -elaborate(node.child, order, domain)
    if isinstance(node, Pow):
        base = elaborate(node.base, order, domain)
        acc = HurwitzSeries.constant(1, order, domain)
        for _ in range(node.exponent):
            acc = acc * base
        return acc
    if isinstance(node, Exp):
        return HurwitzSeries.exp(_scalar_series(node.scale, order, domain), order, domain)
    if isinstance(node, Sin):
        a = _scalar_series(node.scale, order, domain)
        coeffs = []
        power = domain.one()
        for k in range(order + 1):
            if k % 2 == 0:
                coeffs.append(domain.zero())
            else:
                sign = -1 if (k - 1) // 2 % 2 else 1
                coeffs.append(sign * power)
            power = power * a
        return HurwitzSeries(coeffs, domain)
    if isinstance(node, Cos):
        a = _scalar_series(node.scale, order, domain)
        coeffs = []
        power = domain.one()
        for k in range(order + 1):
            if k % 2 == 1:
                coeffs.append(domain.zero())
            else:
                sign = -1 if k // 2 % 2 else 1
                coeffs.append(sign * power)
            power = power * a
        return HurwitzSeries(coeffs, domain)
    raise TypeError(f"not a field expression: {node!r}")


def series_from_text(text, order, domain=Domain.RATIONAL):
    """Parse and elaborate in one step."""
    return elaborate(parse(text), order, domain)


def contains_transcendental(node):
    if isinstance(node, (Exp, Sin, Cos)):
        return True
    if isinstance(node, (Add, Sub, Mul)):
        return contains_transcendental(node.left) or contains_transcendental(node.right)
    if isinstance(node, Neg):
        return contains_transcendental(node.child)
    if isinstance(node, Pow):
        return contains_transcendental(node.base)
    return False


_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 9


def _const_text(value):
    if isinstance(value, GaussianRational) and value.im != 0:
        if value.re == 0 and value.im == 1:
            return "i", _PREC_ATOM
        # composite scalars are printed as an explicit product expression
        if value.re == 0:
            return f"({format_scalar(Fraction(value.im))}*i)", _PREC_ATOM
        return (
            f"({format_scalar(value.re)}+{format_scalar(Fraction(value.im))}*i)",
            _PREC_ATOM,
        )
    text = format_scalar(value)
    return text, (_PREC_NEG if text.startswith("-") else _PREC_ATOM)


def _scale_text(scale):
    if scale == 1:
        return "x"
    if scale == -1:
        return "-x"
    text, _ = _const_text(scale)
    return f"{text}*x"


def _fmt(node, parent_prec):
    if isinstance(node, Const):
        text, prec = _const_text(node.value)
    elif isinstance(node, Var):
        text, prec = "x", _PREC_ATOM
    elif isinstance(node, Add):
        text = f"{_fmt(node.left, _PREC_ADD)}+{_fmt(node.right, _PREC_ADD + 1)}"
        prec = _PREC_ADD
    elif isinstance(node, Sub):
        text = f"{_fmt(node.left, _PREC_ADD)}-{_fmt(node.right, _PREC_ADD + 1)}"
        prec = _PREC_ADD
    elif isinstance(node, Mul):
        text = f"{_fmt(node.left, _PREC_MUL)}*{_fmt(node.right, _PREC_MUL + 1)}"
        prec = _PREC_MUL
    elif isinstance(node, Neg):
        text = f"-{_fmt(node.child, _PREC_NEG)}"
        prec = _PREC_NEG
    elif isinstance(node, Pow):
        text = f"{_fmt(node.base, _PREC_POW + 1)}^{node.exponent}"
        prec = _PREC_POW
    elif isinstance(node, Exp):
        text, prec = f"exp({_scale_text(node.scale)})", _PREC_ATOM
    elif isinstance(node, Sin):
        text, prec = f"sin({_scale_text(node.scale)})", _PREC_ATOM
    elif isinstance(node, Cos):
        text, prec = f"cos({_scale_text(node.scale)})", _PREC_ATOM
    else:
        raise TypeError(f"not a field expression: {node!r}")
    if prec < parent_prec:
        return f"({text})"
    return text


def format_expr(node):
    """Expression text that reparses to a structurally identical tree."""
    return _fmt(node, 0)
