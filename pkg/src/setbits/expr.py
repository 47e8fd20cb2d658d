"""A small language of set-algebra expressions.

Grammar, loosest binding first (all binary levels left-associative except
comparisons, which do not chain)::

    comparison := membership [('>=' | '<=' | '==' | '!=') membership]
    membership := additive ('in' additive)*
    additive   := term (('+' | '-') term)*
    term       := primary ('*' primary)*
    primary    := '{' [INT (',' INT)*] '}' | 'U' | '#' INT | INT | '(' comparison ')'

A bare integer is an element: ``A + k`` and ``k + A`` insert ``k``,
``A - k`` removes it, and ``k in A`` tests membership.  ``#k`` is the set
whose code is ``k`` and ``U`` is the whole universe.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .big_set import BigSet

DEFAULT_UNIVERSE = 32


class ExprError(Exception):
    """An expression failed to lex, parse or evaluate at ``offset``."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        return f"{self.message} at offset {self.offset}"


class LexError(ExprError):
    pass


class ParseError(ExprError):
    pass


class EvalError(ExprError):
    pass


class ExprTypeError(EvalError):
    pass


# -- tokens -------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # brace, comma, integer, hash, name, operator, paren, end
    lexeme: str
    position: int

    @property
    def value(self) -> int:
        return int(self.lexeme.lstrip("#"))


_TWO_CHAR = (">=", "<=", "==", "!=")
_MINUS_SIGNS = "-−"


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "{}":
            tokens.append(Token("brace", c, i))
            i += 1
        elif c in "()":
            tokens.append(Token("paren", c, i))
            i += 1
        elif c == ",":
            tokens.append(Token("comma", c, i))
            i += 1
        elif c.isascii() and c.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            tokens.append(Token("integer", text[i:j], i))
            i = j
        elif c == "#":
            j = i + 1
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise LexError("expected decimal code after '#'", i)
            tokens.append(Token("hash", text[i:j], i))
            i = j
        elif c.isascii() and c.isalpha():
            j = i
            while j < n and text[j].isascii() and text[j].isalnum():
                j += 1
            tokens.append(Token("name", text[i:j], i))
            i = j
        elif text[i:i + 2] in _TWO_CHAR:
            tokens.append(Token("operator", text[i:i + 2], i))
            i += 2
        elif c in "*+":
            tokens.append(Token("operator", c, i))
            i += 1
        elif c in _MINUS_SIGNS:
            tokens.append(Token("operator", "-", i))
            i += 1
        else:
            raise LexError(f"unexpected character {c!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


# -- syntax tree --------------------------------------------------------------
# Positions are excluded from equality so that re-parsed trees compare equal.

@dataclass(frozen=True)
class SetLiteral:
    elements: tuple[int, ...]
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CodeLiteral:
    code: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Universe:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Element:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinarySetOp:
    op: str  # '*', '+', '-'
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Comparison:
    op: str  # '>=', '<=', '==', '!='
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Membership:
    element: object
    container: object
    pos: int = field(default=0, compare=False)


SetExpr = SetLiteral | CodeLiteral | Universe | Element | BinarySetOp | Comparison | Membership

COMPARISON_OPS = (">=", "<=", "==", "!=")

# binding strength; atoms bind tightest
_PREC_CMP, _PREC_IN, _PREC_ADD, _PREC_MUL, _PREC_ATOM = range(5)


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        if not tokens or tokens[-1].kind != "end":
            raise ParseError("token stream must end with an end token",
                             tokens[-1].position if tokens else 0)
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, kind: str, lexeme: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (lexeme is None or t.lexeme == lexeme)

    def expect(self, kind: str, lexeme: str, what: str) -> Token:
        if not self.at(kind, lexeme):
            self.fail(what)
        return self.advance()

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.lexeme)
        raise ParseError(f"expected {expected}, found {found}", t.position)

    def parse(self) -> SetExpr:
        node = self.comparison()
        if not self.at("end"):
            self.fail("operator or end of input")
        return node

    def comparison(self):
        left = self.membership()
        if self.at("operator") and self.tok.lexeme in COMPARISON_OPS:
            op = self.advance()
            right = self.membership()
            left = Comparison(op.lexeme, left, right, op.position)
            if self.at("operator") and self.tok.lexeme in COMPARISON_OPS:
                raise ParseError("comparisons cannot be chained", self.tok.position)
        return left

    def membership(self):
        left = self.additive()
        while self.at("name", "in"):
            op = self.advance()
            left = Membership(left, self.additive(), op.position)
        return left

    def additive(self):
        left = self.term()
        while self.at("operator") and self.tok.lexeme in "+-":
            op = self.advance()
            left = BinarySetOp(op.lexeme, left, self.term(), op.position)
        return left

    def term(self):
        left = self.primary()
        while self.at("operator", "*"):
            op = self.advance()
            left = BinarySetOp("*", left, self.primary(), op.position)
        return left

    def primary(self):
        t = self.tok
        if t.kind == "brace" and t.lexeme == "{":
            self.advance()
            elements = []
            if not self.at("brace", "}"):
                elements.append(self.expect_integer())
                while self.at("comma"):
                    self.advance()
                    elements.append(self.expect_integer())
            self.expect("brace", "}", "',' or '}'")
            return SetLiteral(tuple(elements), t.position)
        if t.kind == "hash":
            self.advance()
            return CodeLiteral(t.value, t.position)
        if t.kind == "integer":
            self.advance()
            return Element(t.value, t.position)
        if t.kind == "name" and t.lexeme == "U":
            self.advance()
            return Universe(t.position)
        if t.kind == "paren" and t.lexeme == "(":
            self.advance()
            node = self.comparison()
            self.expect("paren", ")", "')'")
            return node
        self.fail("'{', '#<code>', 'U', an integer or '('")

    def expect_integer(self) -> int:
        if not self.at("integer"):
            self.fail("an integer element")
        return self.advance().value


def parse(tokens: list[Token] | str) -> SetExpr:
    """Build a syntax tree from a token list (or directly from source text)."""
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    return _Parser(list(tokens)).parse()


# -- renderer -----------------------------------------------------------------

def _prec(node) -> int:
    if isinstance(node, Comparison):
        return _PREC_CMP
    if isinstance(node, Membership):
        return _PREC_IN
    if isinstance(node, BinarySetOp):
        return _PREC_MUL if node.op == "*" else _PREC_ADD
    return _PREC_ATOM


def render(node) -> str:
    """Canonical source text for ``node``, with only the parentheses it needs."""
    if isinstance(node, SetLiteral):
        return "{" + ",".join(map(str, node.elements)) + "}"
    if isinstance(node, CodeLiteral):
        return f"#{node.code}"
    if isinstance(node, Universe):
        return "U"
    if isinstance(node, Element):
        return str(node.value)
    p = _prec(node)
    if isinstance(node, Membership):
        left, right, op = node.element, node.container, "in"
    else:
        left, right, op = node.left, node.right, node.op
    # left-associative: equal precedence on the left needs no parentheses,
    # except for comparisons, which never chain
    lhs = _wrap(left, _prec(left) < p or (p == _PREC_CMP and _prec(left) == p))
    rhs = _wrap(right, _prec(right) <= p)
    return f"{lhs} {op} {rhs}"


def _wrap(node, paren: bool) -> str:
    text = render(node)
    return f"({text})" if paren else text


# -- evaluator ----------------------------------------------------------------

def _kind(value) -> str:
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "element"
    return "set"


def evaluate(node, universe_size: int = DEFAULT_UNIVERSE, impl=BigSet):
    """Fold ``node`` through the set operations of ``impl``.

    Returns a set (an ``impl`` instance) or a bool.  ``impl`` is any type
    exposing the set-class constructors, e.g. ``BigSet`` or ``NaiveSet``.
    """
    result = _eval(node, universe_size, impl)
    if _kind(result) == "element":
        raise ExprTypeError("a bare integer is not a set", node.pos)
    return result


def _check_elem(value: int, m: int, pos: int) -> None:
    if not 1 <= value <= m:
        raise EvalError(f"element {value} outside universe [1, {m}]", pos)


def _eval(node, m: int, impl):
    if isinstance(node, SetLiteral):
        for e in node.elements:
            _check_elem(e, m, node.pos)
        return impl.encode(node.elements, m)
    if isinstance(node, CodeLiteral):
        if node.code >= 2**m:
            raise EvalError(f"code #{node.code} outside [0, 2**{m} - 1]", node.pos)
        return impl.from_code(node.code, m)
    if isinstance(node, Universe):
        return impl.full(m)
    if isinstance(node, Element):
        _check_elem(node.value, m, node.pos)
        return node.value
    if isinstance(node, Membership):
        k = _eval(node.element, m, impl)
        s = _eval(node.container, m, impl)
        if _kind(k) != "element" or _kind(s) != "set":
            raise ExprTypeError(
                f"'in' needs an element and a set, got {_kind(k)} and {_kind(s)}", node.pos
            )
        return s.member(k)
    lhs = _eval(node.left, m, impl)
    rhs = _eval(node.right, m, impl)
    lk, rk = _kind(lhs), _kind(rhs)
    if isinstance(node, Comparison):
        if lk != "set" or rk != "set":
            raise ExprTypeError(f"'{node.op}' compares two sets, got {lk} and {rk}", node.pos)
        if node.op == ">=":
            return lhs.is_superset(rhs)
        if node.op == "<=":
            return lhs.is_subset(rhs)
        if node.op == "==":
            return lhs.equals(rhs)
        return not lhs.equals(rhs)
    op = node.op
    if lk == rk == "set":
        if op == "*":
            return lhs.intersect(rhs)
        if op == "+":
            return lhs.union(rhs)
        return lhs.difference(rhs)
    if op == "+" and {lk, rk} == {"set", "element"}:
        return lhs.insert(rhs) if lk == "set" else rhs.insert(lhs)
    if op == "-" and lk == "set" and rk == "element":
        return lhs.remove(rhs)
    raise ExprTypeError(f"'{op}' is not defined for {lk} and {rk}", node.pos)


def evaluate_text(text: str, universe_size: int = DEFAULT_UNIVERSE, impl=BigSet):
    return evaluate(parse(tokenize(text)), universe_size, impl)
