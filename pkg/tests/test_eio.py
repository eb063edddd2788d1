import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjoined.eio import (
    World,
    catch_eio,
    catch_seio,
    eio_bind,
    eio_pure,
    from_scott,
    read_line,
    run_eio,
    run_seio,
    seio_bind,
    seio_pure,
    throw_eio,
    throw_seio,
    tick,
    to_scott,
    write_line,
)
from conjoined.laws.adapters import (
    EIO_OPS,
    EIO_WORLDS,
    SEIO_OPS,
    bisimulation_program,
    observe_eio,
    observe_seio,
)
from conjoined.laws.terms import interpret, size
from conjoined.outcome import Fail, Ok

W0 = World()


def test_pure_throw_bind_catch():
    assert run_eio(eio_pure(1), W0) == (Ok(1), W0)
    m = eio_bind(write_line("x"), lambda _: throw_eio("boom"))
    assert run_eio(m, W0) == (Fail("boom"), World(output=("x",), tick=1))
    m = catch_eio(throw_eio("boom"), lambda e: eio_pure(len(e)))
    assert run_eio(m, W0) == (Ok(4), W0)


def test_write_line():
    assert run_eio(write_line("a"), W0) == (Ok(None), World(output=("a",), tick=1))
    ab = eio_bind(write_line("a"), lambda _: write_line("b"))
    assert run_eio(ab, W0)[1].output == ("a", "b")


def test_caught_failure_keeps_its_effects():
    m = catch_eio(
        eio_bind(write_line("before"), lambda _: throw_eio("e")),
        lambda e: write_line(f"handled {e}"),
    )
    r, w = run_eio(m, W0)
    assert r == Ok(None)
    assert w.output == ("before", "handled e")


def test_read_line():
    r, w = run_eio(read_line("eof"), World(input=("hi",)))
    assert (r, w) == (Ok("hi"), World(input=(), tick=1))
    r, w = run_eio(read_line("eof"), W0)
    assert (r, w) == (Fail("eof"), World(tick=1))


def test_echo():
    echo = eio_bind(read_line("eof"), write_line)
    assert run_eio(echo, World(input=("a",)))[1].output == ("a",)


def test_tick():
    assert run_eio(tick(), World(tick=4)) == (Ok(5), World(tick=5))


def test_seio_algebra():
    assert observe_seio(seio_pure(1)) == observe_eio(eio_pure(1))
    m = catch_seio(throw_seio("b"), lambda e: seio_pure(0))
    assert run_eio(from_scott(m), W0) == (Ok(0), W0)


def test_seio_chain_matches_eio_twin():
    eio_m = catch_eio(
        eio_bind(
            eio_bind(eio_pure(1), lambda a: eio_bind(write_line(str(a)), lambda _: throw_eio("mid"))),
            lambda _: eio_pure(99),
        ),
        lambda e: eio_pure(len(e)),
    )
    seio_m = catch_seio(
        seio_bind(
            seio_bind(seio_pure(1), lambda a: seio_bind(to_scott(write_line(str(a))), lambda _: throw_seio("mid"))),
            lambda _: seio_pure(99),
        ),
        lambda e: seio_pure(len(e)),
    )
    assert observe_seio(seio_m) == observe_eio(eio_m)


def test_scott_round_trips():
    m = eio_pure(7)
    assert observe_eio(from_scott(to_scott(m))) == observe_eio(m)
    s = to_scott(throw_eio("e"))
    calls = []
    run_seio(s, lambda e, w: calls.append(("err", e)), lambda a, w: calls.append(("ok", a)), W0)
    assert calls == [("err", "e")]


def test_seio_invokes_exactly_one_consumer_once():
    rng = random.Random(5)
    for _ in range(200):
        m = interpret(bisimulation_program(rng), SEIO_OPS)
        for w in EIO_WORLDS:
            calls = []
            m.run(lambda e, w1: calls.append("err"), lambda a, w1: calls.append("ok"), w)
            assert len(calls) == 1


def test_ten_step_round_trip():
    rng = random.Random(10)
    t = bisimulation_program(rng, max_steps=10)
    m = interpret(t, EIO_OPS)
    assert size(t) <= 10
    assert observe_eio(from_scott(to_scott(m))) == observe_eio(m)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=2**32))
def test_bisimulation_property(seed):
    t = bisimulation_program(random.Random(seed))
    assert observe_eio(interpret(t, EIO_OPS)) == observe_seio(interpret(t, SEIO_OPS))


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=2**32))
def test_world_monotone(seed):
    m = interpret(bisimulation_program(random.Random(seed)), EIO_OPS)
    for w in EIO_WORLDS:
        _, w1 = run_eio(m, w)
        assert w1.tick >= w.tick
        assert w1.output[: len(w.output)] == w.output


def test_world_json_round_trip():
    w = World(input=("a", "b"), output=("c",), tick=3)
    assert World.from_json(json.dumps(w.to_json())) == w
    assert list(w.to_json()) == ["input", "output", "tick"]
    assert World.from_json({"input": ["x"]}) == World(input=("x",))


@pytest.mark.parametrize(
    "bad",
    ["[]", '{"input": "a"}', '{"tick": -1}', '{"tick": true}', '{"output": [1]}', '{"extra": 1}'],
)
def test_world_json_rejects_malformed(bad):
    with pytest.raises(ValueError):
        World.from_json(bad)
