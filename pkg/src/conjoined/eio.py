"""Error-explicit effects over a deterministic simulated world.

``EIO`` threads a :class:`World` through and returns an :class:`Outcome`
next to the final world. ``SEIO`` is the same thing Scott-encoded: instead
of building an ``Outcome`` it takes one continuation per constructor. The
two are interconvertible with :func:`to_scott` and :func:`from_scott`.

Effects are never rolled back. A catch hands its handler the world as it
was at the failure point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any, Callable, Generic, TypeVar

from conjoined.outcome import Fail, Ok, Outcome

E = TypeVar("E")
F = TypeVar("F")
A = TypeVar("A")
B = TypeVar("B")

__all__ = [
    "EIO",
    "SEIO",
    "World",
    "catch_eio",
    "catch_seio",
    "eio_bind",
    "eio_pure",
    "from_scott",
    "read_line",
    "run_eio",
    "run_seio",
    "seio_bind",
    "seio_pure",
    "seio_read_line",
    "seio_tick",
    "seio_write_line",
    "throw_eio",
    "throw_seio",
    "tick",
    "to_scott",
    "write_line",
]


@dataclass(frozen=True)
class World:
    input: tuple[str, ...] = ()
    output: tuple[str, ...] = ()
    tick: int = 0

    def to_json(self) -> dict:
        return {"input": list(self.input), "output": list(self.output), "tick": self.tick}

    @classmethod
    def from_json(cls, data: Any) -> World:
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if not isinstance(data, dict):
            raise ValueError("world must be a JSON object")
        unknown = set(data) - {"input", "output", "tick"}
        if unknown:
            raise ValueError(f"unknown world fields: {sorted(unknown)}")
        lines_in = data.get("input", [])
        lines_out = data.get("output", [])
        t = data.get("tick", 0)
        for name, lines in (("input", lines_in), ("output", lines_out)):
            if not isinstance(lines, list) or not all(isinstance(x, str) for x in lines):
                raise ValueError(f"world {name} must be a list of strings")
        if isinstance(t, bool) or not isinstance(t, int) or t < 0:
            raise ValueError("world tick must be a non-negative integer")
        return cls(tuple(lines_in), tuple(lines_out), t)


# -- direct state-passing form ------------------------------------------------


@dataclass(frozen=True)
class EIO(Generic[E, A]):
    run: Callable[[World], tuple[Outcome[E, A], World]]


def run_eio(m: EIO[E, A], w: World) -> tuple[Outcome[E, A], World]:
    return m.run(w)


def eio_pure(a: A) -> EIO[Any, A]:
    return EIO(lambda w: (Ok(a), w))


def throw_eio(e: E) -> EIO[E, Any]:
    return EIO(lambda w: (Fail(e), w))


def eio_bind(m: EIO[E, A], f: Callable[[A], EIO[E, B]]) -> EIO[E, B]:
    def run(w):
        r, w1 = m.run(w)
        if isinstance(r, Fail):
            return r, w1
        return f(r.value).run(w1)

    return EIO(run)


def catch_eio(m: EIO[E, A], h: Callable[[E], EIO[F, A]]) -> EIO[F, A]:
    def run(w):
        r, w1 = m.run(w)
        if isinstance(r, Ok):
            return r, w1
        return h(r.error).run(w1)

    return EIO(run)


def write_line(t: str) -> EIO[Any, None]:
    return EIO(lambda w: (Ok(None), replace(w, output=w.output + (t,), tick=w.tick + 1)))


def read_line(on_eof: E) -> EIO[E, str]:
    def run(w):
        if not w.input:
            return Fail(on_eof), replace(w, tick=w.tick + 1)
        return Ok(w.input[0]), replace(w, input=w.input[1:], tick=w.tick + 1)

    return EIO(run)


def tick() -> EIO[Any, int]:
    """Advance the clock; returns the new tick."""

    def run(w):
        return Ok(w.tick + 1), replace(w, tick=w.tick + 1)

    return EIO(run)


# -- Scott-encoded form -------------------------------------------------------


@dataclass(frozen=True)
class SEIO(Generic[E, A]):
    # run(err, ok, world) -> answer; exactly one of err/ok is called, once
    run: Callable[[Callable[[E, World], Any], Callable[[A, World], Any], World], Any]


def run_seio(m: SEIO[E, A], err, ok, w: World):
    return m.run(err, ok, w)


def seio_pure(a: A) -> SEIO[Any, A]:
    return SEIO(lambda err, ok, w: ok(a, w))


def throw_seio(e: E) -> SEIO[E, Any]:
    return SEIO(lambda err, ok, w: err(e, w))


def seio_bind(m: SEIO[E, A], f: Callable[[A], SEIO[E, B]]) -> SEIO[E, B]:
    return SEIO(lambda err, ok, w: m.run(err, lambda a, w1: f(a).run(err, ok, w1), w))


def catch_seio(m: SEIO[E, A], h: Callable[[E], SEIO[F, A]]) -> SEIO[F, A]:
    return SEIO(lambda err, ok, w: m.run(lambda e, w1: h(e).run(err, ok, w1), ok, w))


def seio_write_line(t: str) -> SEIO[Any, None]:
    return SEIO(lambda err, ok, w: ok(None, replace(w, output=w.output + (t,), tick=w.tick + 1)))


def seio_read_line(on_eof: E) -> SEIO[E, str]:
    def run(err, ok, w):
        if not w.input:
            return err(on_eof, replace(w, tick=w.tick + 1))
        return ok(w.input[0], replace(w, input=w.input[1:], tick=w.tick + 1))

    return SEIO(run)


def seio_tick() -> SEIO[Any, int]:
    return SEIO(lambda err, ok, w: ok(w.tick + 1, replace(w, tick=w.tick + 1)))


def to_scott(m: EIO[E, A]) -> SEIO[E, A]:
    def run(err, ok, w):
        r, w1 = m.run(w)
        if isinstance(r, Fail):
            return err(r.error, w1)
        return ok(r.value, w1)

    return SEIO(run)


def from_scott(m: SEIO[E, A]) -> EIO[E, A]:
    return EIO(lambda w: m.run(_fail_pair, _ok_pair, w))


def _fail_pair(e, w):
    return Fail(e), w


def _ok_pair(a, w):
    return Ok(a), w
