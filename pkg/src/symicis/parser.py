"""
Recursive-descent parser for polynomials and differential forms.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' INT)? | dblock
    base   := RATIONAL | VAR | '(' expr ')'
    dblock := DIFF ('^' DIFF)*

``DIFF`` is ``d`` immediately followed by a variable name.  ``^`` is a
power after an ordinary base and a wedge between differentials; one token of
lookahead decides.  There is no implicit multiplication.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .forms import DiffForm, wedge
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


# AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class DBlock:
    names: Tuple[str, ...]


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, DBlock, Neg, BinOp, Pow]


# tokens

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),]))")


@dataclass(frozen=True)
class Token:
    kind: str  # num, var, diff, op, end
    text: str
    pos: int


def tokenize(text: str, variables: Optional[Sequence[str]] = None, forms: bool = True) -> List[Token]:
    declared = set(variables) if variables is not None else None
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        if m.group("num"):
            num = m.group("num")
            if "/" in num and int(num.split("/")[1]) == 0:
                raise ParseError("zero denominator", start)
            out.append(Token("num", num, start))
        elif m.group("ident"):
            name = m.group("ident")
            out.append(_classify_ident(name, start, declared, forms))
        else:
            out.append(Token("op", m.group("op"), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def _classify_ident(name, pos, declared, forms):
    if declared is not None:
        if name in declared:
            return Token("var", name, pos)
        if name.startswith("d") and name[1:] in declared:
            if not forms:
                raise ParseError(f"differential {name} not allowed in a polynomial", pos)
            return Token("diff", name[1:], pos)
        raise ParseError(f"unknown variable {name!r}", pos)
    if forms and name.startswith("d") and len(name) > 1:
        return Token("diff", name[1:], pos)
    return Token("var", name, pos)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, k=1):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def is_op(self, text, tok=None):
        tok = tok or self.tok
        return tok.kind == "op" and tok.text == text

    def expect_op(self, text):
        if not self.is_op(text):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.take()

    def expr(self):
        if self.is_op("-"):
            self.take()
            node = Neg(self.term())
        else:
            node = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.is_op("*"):
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        if self.tok.kind == "diff":
            return self.dblock()
        base = self.base()
        if self.is_op("^"):
            nxt = self.peek()
            if nxt.kind != "num" or "/" in nxt.text:
                raise ParseError("expected a non-negative integer exponent", nxt.pos)
            self.take()
            return Pow(base, int(self.take().text))
        return base

    def dblock(self):
        first = self.take()
        names = [first.text]
        while self.is_op("^"):
            nxt = self.peek()
            if nxt.kind == "num":
                raise ParseError("a differential cannot be raised to a power", nxt.pos)
            if nxt.kind != "diff":
                raise ParseError("expected a differential after '^'", nxt.pos)
            self.take()
            d = self.take()
            if d.text in names:
                raise ParseError(f"repeated differential d{d.text}", d.pos)
            names.append(d.text)
        return DBlock(tuple(names))

    def base(self):
        tok = self.tok
        if tok.kind == "num":
            self.take()
            return Num(Fraction(tok.text))
        if tok.kind == "var":
            self.take()
            return Var(tok.text)
        if self.is_op("("):
            self.take()
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_ast(text: str, variables: Optional[Sequence[str]] = None, forms: bool = True) -> Node:
    p = _Parser(tokenize(text, variables, forms))
    node = p.expr()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return node


def parse_ast_list(text: str, variables=None, forms=False) -> List[Node]:
    p = _Parser(tokenize(text, variables, forms))
    nodes = [p.expr()]
    while p.is_op(","):
        p.take()
        nodes.append(p.expr())
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return nodes


def ast_variables(node: Node) -> List[str]:
    """Variable names in order of first appearance (differentials included)."""
    seen = []

    def walk(n):
        if isinstance(n, Var):
            if n.name not in seen:
                seen.append(n.name)
        elif isinstance(n, DBlock):
            for name in n.names:
                if name not in seen:
                    seen.append(name)
        elif isinstance(n, Neg):
            walk(n.operand)
        elif isinstance(n, BinOp):
            walk(n.left)
            walk(n.right)
        elif isinstance(n, Pow):
            walk(n.base)

    walk(node)
    return seen


# evaluation


def evaluate(node: Node, names: Sequence[str]) -> DiffForm:
    m = len(names)
    index = {name: i for i, name in enumerate(names)}

    def ev(n):
        if isinstance(n, Num):
            return DiffForm.function(Poly.const(n.value, m))
        if isinstance(n, Var):
            return DiffForm.function(Poly.var(index[n.name], m))
        if isinstance(n, DBlock):
            return DiffForm.basic([index[v] for v in n.names], m)
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            base = ev(n.base)
            if base.degree != 0:
                raise ValueError("only functions can be raised to a power")
            return DiffForm.function(base.as_poly().pow(n.exponent))
        left, right = ev(n.left), ev(n.right)
        if n.op == "*":
            return wedge(left, right)
        if left.degree != right.degree:
            raise ValueError(f"cannot add a {left.degree}-form and a {right.degree}-form")
        return left + right if n.op == "+" else left - right

    return ev(node)


def parse_poly(text: str, variables: Optional[Sequence[str]] = None) -> Poly:
    node = parse_ast(text, variables, forms=False)
    names = list(variables) if variables is not None else ast_variables(node)
    return evaluate(node, names).as_poly()


def parse_polys(text: str, variables: Sequence[str]) -> List[Poly]:
    return [evaluate(n, variables).as_poly() for n in parse_ast_list(text, variables)]


def parse_form(text: str, variables: Optional[Sequence[str]] = None) -> DiffForm:
    node = parse_ast(text, variables, forms=True)
    names = list(variables) if variables is not None else ast_variables(node)
    return evaluate(node, names)


# rendering


def _num(v: Fraction):
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render(node: Node) -> str:
    """Text that parses back to ``node``."""

    def expr(n):
        if isinstance(n, Neg):
            return "-" + term(n.operand)
        if isinstance(n, BinOp) and n.op in "+-":
            return f"{expr(n.left)} {n.op} {term(n.right)}"
        return term(n)

    def term(n):
        if isinstance(n, BinOp) and n.op == "*":
            return f"{term(n.left)}*{factor(n.right)}"
        return factor(n)

    def factor(n):
        if isinstance(n, DBlock):
            return "^".join("d" + v for v in n.names)
        if isinstance(n, Pow):
            return f"{base(n.base)}^{n.exponent}"
        return base(n)

    def base(n):
        if isinstance(n, Num):
            return _num(n.value)
        if isinstance(n, Var):
            return n.name
        return f"({expr(n)})"

    return expr(node)
