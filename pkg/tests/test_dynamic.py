import random

from conjoined.dynamic import (
    catch_typed,
    from_dyn,
    handle_or_again,
    register,
    throw_typed,
    to_dyn,
)
from conjoined.eio import World, catch_eio, eio_bind, eio_pure, run_eio, write_line
from conjoined.laws.adapters import EIO_WORLDS, eio_dynamic_adapter, observe_eio
from conjoined.outcome import Fail, Ok

ERROR_CALL = register("ErrorCall")
PATTERN_FAIL = register("PatternMatchFail")
SOMETHING_ELSE = register("SomethingElse")
W0 = World()


def test_round_trip_and_mismatch():
    d = to_dyn(ERROR_CALL, "lazy", "ErrorCall lazy")
    assert from_dyn(ERROR_CALL, d) == "lazy"
    assert from_dyn(PATTERN_FAIL, d) is None
    assert d.rendered == "ErrorCall lazy"


def test_same_name_registrations_never_match():
    a, b = register("Twin"), register("Twin")
    assert a != b
    assert from_dyn(b, to_dyn(a, 1)) is None
    assert from_dyn(a, to_dyn(a, 1)) == 1


def test_throw_typed():
    r, w = run_eio(throw_typed(ERROR_CALL, "x"), W0)
    assert w == W0
    assert isinstance(r, Fail) and r.error.tag == ERROR_CALL and r.error.payload == "x"


def test_bind_after_throw_typed_never_runs():
    hits = []
    m = eio_bind(throw_typed(ERROR_CALL, "x"), lambda a: hits.append(a) or eio_pure(a))
    assert isinstance(run_eio(m, W0)[0], Fail)
    assert hits == []


def test_matching_handler_handles():
    m = catch_typed(throw_typed(ERROR_CALL, "x"), ERROR_CALL, lambda p: eio_pure(f"got {p}"))
    assert run_eio(m, W0) == (Ok("got x"), W0)


def test_pure_passes_through():
    m = catch_typed(eio_pure(3), ERROR_CALL, lambda p: eio_pure(0))
    assert run_eio(m, W0) == (Ok(3), W0)


def throw_test():
    """A never-forced ErrorCall value, then a precise SomethingElse throw."""

    def lazy_error_call():
        raise AssertionError("the lazy value must never be forced")

    x = lazy_error_call  # bound, never evaluated
    return eio_bind(eio_pure(("Right", x)), lambda _: throw_typed(SOMETHING_ELSE, None, "SomethingElse"))


def test_something_else_not_error_call():
    r, _ = run_eio(throw_test(), W0)
    assert r.error.tag == SOMETHING_ELSE
    assert from_dyn(ERROR_CALL, r.error) is None


def test_mismatched_handler_rethrows_intact_then_outer_recovers():
    inner = catch_typed(throw_test(), ERROR_CALL, lambda p: write_line("wrong handler"))
    r, w = run_eio(inner, W0)
    original, _ = run_eio(throw_test(), W0)
    assert r == original
    assert w.output == ()
    outer = catch_typed(inner, SOMETHING_ELSE, lambda p: write_line("SomethingElse handled"))
    assert run_eio(outer, W0) == (Ok(None), World(output=("SomethingElse handled",), tick=1))


def test_rethrow_preserves_identity():
    d = to_dyn(SOMETHING_ELSE, {"k": 1}, "SomethingElse {k: 1}")
    m = catch_typed(catch_eio(eio_pure(0), lambda e: eio_pure(1)), ERROR_CALL, eio_pure)
    assert run_eio(m, W0)[0] == Ok(0)
    r, _ = run_eio(catch_typed(throw_typed(d.tag, d.payload, d.rendered), ERROR_CALL, eio_pure), W0)
    assert r.error.tag is d.tag and r.error.payload is d.payload and r.error.rendered == d.rendered


def test_decomposition_against_generated_programs():
    ad = eio_dynamic_adapter()
    rng = random.Random(11)
    for _ in range(300):
        m, h = ad.gen_computation(rng), ad.gen_value_arrow(rng)
        tag = rng.choice([ERROR_CALL, SOMETHING_ELSE])
        lhs = catch_typed(m, tag, h)
        rhs = catch_eio(m, handle_or_again(tag, h))
        assert observe_eio(lhs) == observe_eio(rhs)
    assert len(EIO_WORLDS) == 8
