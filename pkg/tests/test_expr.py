import pytest
from hypothesis import given, settings, strategies as st

from setbits import BigSet, NaiveSet
from setbits.expr import (
    BinarySetOp,
    CodeLiteral,
    Comparison,
    Element,
    EvalError,
    ExprTypeError,
    LexError,
    Membership,
    ParseError,
    SetLiteral,
    Universe,
    evaluate,
    evaluate_text,
    parse,
    render,
    tokenize,
)


def kinds(text):
    return [(t.kind, t.lexeme) for t in tokenize(text)]


def test_tokenize_example():
    assert kinds("{1,2} + {3}") == [
        ("brace", "{"), ("integer", "1"), ("comma", ","), ("integer", "2"), ("brace", "}"),
        ("operator", "+"), ("brace", "{"), ("integer", "3"), ("brace", "}"), ("end", ""),
    ]


def test_tokenize_hash():
    tok = tokenize("#41")[0]
    assert tok.kind == "hash" and tok.value == 41


def test_tokenize_operators():
    assert [t.lexeme for t in tokenize("a>=b<=c==d!=e-f−g")[1:-1:2]] == [">=", "<=", "==", "!=", "-", "-"]


@pytest.mark.parametrize("text, offset", [("{1,2@", 4), ("#", 0), ("{1} > {2}", 4)])
def test_lex_errors(text, offset):
    with pytest.raises(LexError) as info:
        tokenize(text)
    assert info.value.offset == offset


@given(st.text(max_size=12))
def test_token_positions_increase(text):
    try:
        toks = tokenize(text)
    except LexError as exc:
        assert 0 <= exc.offset < len(text)
        return
    positions = [t.position for t in toks]
    assert positions == sorted(set(positions))


def test_precedence_tree():
    assert parse("{1} + {2} * {2,3}") == BinarySetOp(
        "+", SetLiteral((1,)), BinarySetOp("*", SetLiteral((2,)), SetLiteral((2, 3))))
    assert parse("3 in {1,2} + {3}") == Membership(
        Element(3), BinarySetOp("+", SetLiteral((1, 2)), SetLiteral((3,))))


def test_left_associative():
    a, b, c = SetLiteral((1,)), SetLiteral((2,)), SetLiteral((3,))
    assert parse("{1} - {2} - {3}") == BinarySetOp("-", BinarySetOp("-", a, b), c)


@pytest.mark.parametrize("text, offset", [
    ("{1} <= {2} <= {3}", 11),
    ("{1,}", 3),
    ("({1}", 4),
    ("{1} +", 5),
    ("V", 0),
    ("{1} {2}", 4),
    ("", 0),
])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse(tokenize(text))
    assert info.value.offset == offset


@pytest.mark.parametrize("text, expected", [
    ("{1} + {2} * {2,3}", (1, 2)),
    ("({1,2,3} * {2,3,4}) - 2", (3,)),
    ("U - {1}", tuple(range(2, 33))),
    ("5 + {1}", (1, 5)),
    ("{1} + 5", (1, 5)),
    ("#26", (2, 4, 5)),
    ("{}", ()),
])
def test_evaluate_sets(text, expected):
    assert evaluate_text(text).decode() == expected


def test_universe_minus_one_code():
    assert evaluate_text("U - {1}", 32).code == 4294967294


@pytest.mark.parametrize("text, expected", [
    ("3 in {1,2} + {3}", True),
    ("{} == #0", True),
    ("{1} != {1}", False),
    ("{1,2} >= {2}", True),
    ("{1,2} <= {2}", False),
    ("(3 in {3}) == ({1} <= {1})", None),
])
def test_evaluate_booleans(text, expected):
    if expected is None:
        with pytest.raises(ExprTypeError):
            evaluate_text(text)
    else:
        assert evaluate_text(text) is expected


@pytest.mark.parametrize("text, offset, err", [
    ("{40}", 0, EvalError),
    ("{1} + #4294967296", 6, EvalError),
    ("{1} + 0", 6, EvalError),
    ("2 - {1}", 2, ExprTypeError),
    ("3", 0, ExprTypeError),
    ("{1} * 2", 4, ExprTypeError),
    ("(1 in {1}) + {2}", 11, ExprTypeError),
    ("{1} in {2}", 4, ExprTypeError),
])
def test_evaluate_errors(text, offset, err):
    with pytest.raises(err) as info:
        evaluate_text(text, 32)
    assert info.value.offset == offset


def test_universe_parameter():
    assert evaluate_text("U", 5).decode() == (1, 2, 3, 4, 5)
    assert evaluate_text("{40}", 64).decode() == (40,)


# random syntax trees ---------------------------------------------------------

def set_leaves(m):
    return st.one_of(
        st.lists(st.integers(1, m), max_size=4).map(lambda xs: SetLiteral(tuple(xs))),
        st.integers(0, 2**m - 1).map(CodeLiteral),
        st.just(Universe()),
    )


def set_exprs(m):
    return st.recursive(
        set_leaves(m),
        lambda inner: st.one_of(
            st.builds(BinarySetOp, st.sampled_from("*+-"), inner, inner),
            st.builds(lambda s, k: BinarySetOp("+", s, Element(k)), inner, st.integers(1, m)),
            st.builds(lambda s, k: BinarySetOp("+", Element(k), s), inner, st.integers(1, m)),
            st.builds(lambda s, k: BinarySetOp("-", s, Element(k)), inner, st.integers(1, m)),
        ),
        max_leaves=8,
    )


def bool_exprs(m):
    return st.one_of(
        st.builds(Comparison, st.sampled_from([">=", "<=", "==", "!="]), set_exprs(m), set_exprs(m)),
        st.builds(Membership, st.integers(1, m).map(Element), set_exprs(m)),
    )


def any_exprs(m):
    return st.one_of(set_exprs(m), bool_exprs(m))


@given(any_exprs(10))
def test_render_parse_roundtrip(e):
    assert parse(tokenize(render(e))) == e


@settings(max_examples=200)
@given(st.sampled_from([5, 10, 40]).flatmap(lambda m: st.tuples(st.just(m), any_exprs(m))))
def test_differential_against_naive(args):
    m, e = args
    fast = evaluate(e, m, BigSet)
    slow = evaluate(e, m, NaiveSet)
    if isinstance(fast, bool):
        assert fast is slow
    else:
        assert fast.decode() == slow.decode()


@given(set_exprs(8), set_exprs(8), set_exprs(8))
def test_precedence_property(a, b, c):
    ra, rb, rc = (f"({render(x)})" for x in (a, b, c))
    assert evaluate_text(f"{ra} + {rb} * {rc}", 8) == evaluate_text(f"{ra} + ({rb} * {rc})", 8)
