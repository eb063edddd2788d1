import random

import pytest

from conjoined.cont import (
    Cont,
    ThrowT,
    bind_t,
    call_cc,
    catch_t,
    catch_t_via_call_cc,
    cont_bind,
    cont_pure,
    escape_t,
    pure_t,
    run_cont,
    run_throw_t,
    throw_t,
)
from conjoined.laws.adapters import observe_throw_t, throw_t_adapter
from conjoined.parser import log


def ident(x):
    return x


def render_err(e):
    return f"error:{e}"


def render_ok(a):
    return f"ok:{a}"


def run(m):
    return run_throw_t(m, render_err, render_ok)


def test_cont_pure_and_bind():
    assert run_cont(cont_pure(5), ident) == 5
    assert run_cont(cont_pure(5), lambda x: x + 1) == 6
    assert run_cont(cont_bind(cont_pure(1), lambda a: cont_pure(a + 1)), ident) == 2
    chain = cont_bind(
        cont_bind(cont_pure(1), lambda a: cont_pure(a + 1)), lambda b: cont_pure(b * 3)
    )
    assert run_cont(chain, ident) == 6


CONSUMERS = [ident, lambda x: x * 2, lambda x: (x, "tagged"), str]


def test_cont_right_identity_on_consumer_panel():
    m = cont_bind(cont_pure(4), lambda a: cont_pure(a - 1))
    for k in CONSUMERS:
        assert run_cont(cont_bind(m, cont_pure), k) == run_cont(m, k)


def test_call_cc():
    assert run_cont(call_cc(lambda k: cont_pure(1)), ident) == 1
    assert run_cont(call_cc(lambda k: cont_bind(k(1), lambda _: cont_pure(999))), ident) == 1
    m = cont_bind(call_cc(lambda k: k(2)), lambda x: cont_pure(x * 10))
    assert run_cont(m, ident) == 20


def test_call_cc_transparent_when_escape_unused():
    body = cont_bind(cont_pure(3), lambda a: cont_pure(a * a))
    for k in CONSUMERS:
        assert run_cont(call_cc(lambda _esc: body), k) == run_cont(body, k)


def test_escape_discards_local_continuation():
    m = bind_t(escape_t(7), lambda a: pure_t(a + 1))
    assert run(m) == "ok:8"


def test_throw_t():
    assert run(throw_t("e")) == "error:e"
    assert run(pure_t(1)) == "ok:1"


def test_bind_after_throw_never_runs_arrow():
    hits = []

    def arrow(a):
        hits.append(a)
        return pure_t(a)

    assert run(bind_t(throw_t("e"), arrow)) == "error:e"
    assert hits == []


def test_catch_t():
    h = lambda e: pure_t(f"handled {e}")  # noqa: E731
    assert run(catch_t(throw_t("e"), h)) == run(h("e"))
    assert run(catch_t(pure_t(1), lambda e: pure_t(2))) == "ok:1"
    assert run(catch_t(throw_t(3), lambda e: pure_t(e + 1))) == "ok:4"


def test_throw_in_handler_escalates_outwards():
    inner = catch_t(throw_t("a"), lambda _: throw_t("b"))
    assert run(inner) == "error:b"
    outer = catch_t(inner, lambda e: pure_t(f"outer saw {e}"))
    assert run(outer) == "ok:outer saw b"


def test_catch_result_continues_after_the_catch():
    m = bind_t(catch_t(throw_t(1), lambda e: pure_t(e * 10)), lambda a: pure_t(a + 5))
    assert run(m) == "ok:15"


def test_deep_chain():
    m = pure_t(0)
    for _ in range(5):
        m = bind_t(m, lambda a: pure_t(a + 1))
    m = bind_t(m, lambda a: throw_t(a))
    m = catch_t(m, lambda e: pure_t(e * 100))
    for _ in range(5):
        m = bind_t(m, lambda a: pure_t(a + 1))
    assert run(m) == "ok:505"


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_handler_scoping(depth):
    # level i's handler rethrows sentinel i+1; the next outer level sees it
    def nest(level):
        if level == depth:
            return throw_t(f"s{depth}")
        return catch_t(nest(level + 1), lambda e, level=level: throw_t(f"s{level}<-{e}"))

    expected = "s" + "<-s".join(str(i) for i in range(depth))
    expected = "<-".join(f"s{i}" for i in range(depth)) + f"<-s{depth}"
    assert run(nest(0)) == f"error:{expected}"


def test_run_throw_t_calls_exactly_one_consumer():
    calls = []
    on_err = lambda e: calls.append(("err", e)) or "E"  # noqa: E731
    on_ok = lambda a: calls.append(("ok", a)) or "A"  # noqa: E731
    assert run_throw_t(throw_t("x"), on_err, on_ok) == "E"
    assert run_throw_t(pure_t(1), on_err, on_ok) == "A"
    assert calls == [("err", "x"), ("ok", 1)]


def test_flattened_catch_equals_two_call_cc_form():
    ad = throw_t_adapter()
    rng = random.Random(3)
    for _ in range(300):
        m, h = ad.gen_computation(rng), ad.gen_error_arrow(rng)
        assert observe_throw_t(catch_t(m, h)) == observe_throw_t(catch_t_via_call_cc(m, h))


def test_two_call_cc_form_hand_cases():
    cases = [
        (throw_t(log("a")), lambda e: pure_t(len(e))),
        (pure_t(5), lambda e: throw_t(e)),
        (throw_t(log("a")), lambda e: throw_t(e + log("b"))),
        (bind_t(escape_t(2), lambda a: throw_t(log(str(a)))), lambda e: pure_t(9)),
    ]
    for m, h in cases:
        assert run(catch_t(m, h)) == run(catch_t_via_call_cc(m, h))


def test_cont_values_are_rerunnable():
    m = ThrowT(lambda h: Cont(lambda k: k(1)))
    assert run(m) == run(m) == "ok:1"
