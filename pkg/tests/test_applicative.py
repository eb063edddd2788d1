import itertools
from functools import reduce

from hypothesis import given
from hypothesis import strategies as st

from conjoined.applicative import EA, catch_ea, ea_apply, ea_map, ea_pure, map_ap, throw_ea
from conjoined.outcome import Fail, Ok
from conjoined.parser import ErrorLog, log


def test_apply():
    assert ea_apply(ea_pure(lambda x: x + 1), ea_pure(1)) == ea_pure(2)
    assert ea_apply(throw_ea(log("a")), throw_ea(log("b"))) == throw_ea(log("a", "b"))
    assert ea_apply(throw_ea(log("a")), ea_pure(1)) == throw_ea(log("a"))
    assert ea_apply(ea_pure(len), throw_ea(log("b"))) == throw_ea(log("b"))


def test_catch():
    assert catch_ea(ea_pure(1), lambda e: ea_pure(2)) == ea_pure(1)
    assert catch_ea(throw_ea(log("a")), lambda e: throw_ea(e + log("b"))) == throw_ea(log("a", "b"))
    # the error type may change
    assert catch_ea(throw_ea(log("a")), lambda e: throw_ea(len(e))) == throw_ea(1)


def test_throw_apply_starts_with_left_error():
    for right in (ea_pure(1), throw_ea(log("r"))):
        r = ea_apply(throw_ea(log("e")), right).carrier
        assert isinstance(r, Fail) and r.error.messages[0] == "e"


def test_map_ap():
    assert map_ap(lambda x: ea_pure(x), [1, 2]) == ea_pure([1, 2])
    odd_fails = lambda x: throw_ea(log(str(x))) if x % 2 else ea_pure(x)  # noqa: E731
    assert map_ap(odd_fails, [1, 2, 3]) == throw_ea(log("1", "3"))
    assert map_ap(odd_fails, []) == ea_pure([])


def fold_oracle(f, xs):
    """Independent reference: collect all failures left to right, else all values."""
    results = [f(x).carrier for x in xs]
    errors = [r.error for r in results if isinstance(r, Fail)]
    if errors:
        return Fail(reduce(lambda a, b: a + b, errors, ErrorLog()))
    return Ok([r.value for r in results])


SPACE = (0, 1, 2)
ELEMENT_FNS = {
    "fail-odd": lambda x: throw_ea(log(f"odd {x}")) if x % 2 else ea_pure(x * 10),
    "fail-zero": lambda x: throw_ea(log("zero")) if x == 0 else ea_pure(x),
    "fail-all": lambda x: throw_ea(log(str(x), "again")),
    "never": lambda x: ea_pure(-x),
}


def all_lists(max_len, space=SPACE):
    for n in range(max_len + 1):
        yield from itertools.product(space, repeat=n)


def test_map_ap_matches_fold_oracle_on_small_lists():
    n = 0
    for f in ELEMENT_FNS.values():
        for xs in all_lists(6):
            assert map_ap(f, xs).carrier == fold_oracle(f, xs)
            n += 1
    assert n == 4 * sum(3**k for k in range(7))


messages = st.lists(st.text(max_size=2), max_size=3).map(lambda ms: log(*ms))


@given(messages, messages)
def test_double_failure_accumulates(a, b):
    assert ea_apply(throw_ea(a), throw_ea(b)).carrier == Fail(a + b)


eas = st.one_of(st.integers().map(ea_pure), messages.map(throw_ea))


@given(eas)
def test_applicative_identity(v):
    assert ea_apply(ea_pure(lambda x: x), v) == v


@given(eas, st.integers())
def test_interchange(v, y):
    u = ea_map(v, lambda k: (lambda x: x - k))
    assert ea_apply(u, ea_pure(y)) == ea_apply(ea_pure(lambda f: f(y)), u)


@given(eas, eas, eas)
def test_composition(a, b, w):
    u = ea_map(a, lambda k: (lambda x: x + k))
    v = ea_map(b, lambda k: (lambda x: x * k))
    compose = lambda f: lambda g: lambda x: f(g(x))  # noqa: E731
    lhs = ea_apply(ea_apply(ea_apply(ea_pure(compose), u), v), w)
    assert lhs == ea_apply(u, ea_apply(v, w))


@given(eas)
def test_error_monad_laws(m):
    h = lambda e: throw_ea(e + log("h"))  # noqa: E731
    k = lambda e: ea_pure(len(e)) if len(e) % 2 else throw_ea(e)  # noqa: E731
    assert catch_ea(m, throw_ea) == m
    assert catch_ea(catch_ea(m, h), k) == catch_ea(m, lambda e: catch_ea(h(e), k))
    e = log("x")
    assert catch_ea(throw_ea(e), h) == h(e)


def test_ea_repr():
    assert repr(EA(Ok(1))) == "EA(Ok(1))"
