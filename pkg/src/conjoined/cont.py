"""Continuation-passing computations and throw/catch built on ``call_cc``.

A :class:`ThrowT` computation receives the handler of the innermost enclosing
:func:`catch_t` and produces a :class:`Cont`. Throwing just calls that
handler, which jumps straight to the catch point: no handler stack, no
mutable state.

Handlers are realized as functions from the error to the final answer. The
escape position never returns normally, so the answer type is the only type
it ever has to produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

R = TypeVar("R")
E = TypeVar("E")
F = TypeVar("F")
A = TypeVar("A")
B = TypeVar("B")

Handler = Callable[[Any], Any]

__all__ = [
    "Cont",
    "Handler",
    "ThrowT",
    "bind_t",
    "call_cc",
    "catch_t",
    "catch_t_via_call_cc",
    "cont_bind",
    "cont_pure",
    "escape_t",
    "pure_t",
    "run_cont",
    "run_throw_t",
    "throw_t",
]


@dataclass(frozen=True)
class Cont(Generic[R, A]):
    run: Callable[[Callable[[A], R]], R]


def run_cont(m: Cont[R, A], k: Callable[[A], R]) -> R:
    return m.run(k)


def cont_pure(a: A) -> Cont[R, A]:
    return Cont(lambda k: k(a))


def cont_bind(m: Cont[R, A], f: Callable[[A], Cont[R, B]]) -> Cont[R, B]:
    return Cont(lambda k: m.run(lambda a: f(a).run(k)))


def call_cc(f: Callable[[Callable[[A], Cont[R, Any]]], Cont[R, A]]) -> Cont[R, A]:
    """Delimited call-with-current-continuation.

    ``f`` receives an escape function; calling it abandons the rest of
    ``f``'s computation and resumes at the point where ``call_cc`` returns.

    >>> m = cont_bind(call_cc(lambda k: k(2)), lambda x: cont_pure(x * 10))
    >>> m.run(lambda x: x)
    20
    """

    def run(c):
        def escape(a):
            return Cont(lambda _k: c(a))

        return f(escape).run(c)

    return Cont(run)


@dataclass(frozen=True)
class ThrowT(Generic[R, E, A]):
    run: Callable[[Handler], Cont[R, A]]


def pure_t(a: A) -> ThrowT[R, Any, A]:
    return ThrowT(lambda _h: cont_pure(a))


def bind_t(m: ThrowT[R, E, A], f: Callable[[A], ThrowT[R, E, B]]) -> ThrowT[R, E, B]:
    return ThrowT(lambda h: cont_bind(m.run(h), lambda a: f(a).run(h)))


def throw_t(e: E) -> ThrowT[R, E, Any]:
    return ThrowT(lambda h: Cont(lambda _k: h(e)))


def catch_t(m: ThrowT[R, E, A], h: Callable[[E], ThrowT[R, F, A]]) -> ThrowT[R, F, A]:
    """Run ``m`` with a fresh handler that routes errors into ``h``.

    ``h e`` runs under the outer handler, so a throw from inside the handler
    escalates outwards. Either way the result arrives at the consumer of
    the ``catch_t`` itself.
    """

    def run(outer):
        def go(k):
            return m.run(lambda e: h(e).run(outer).run(k)).run(k)

        return Cont(go)

    return ThrowT(run)


def catch_t_via_call_cc(
    m: ThrowT[R, E, A], h: Callable[[E], ThrowT[R, F, A]]
) -> ThrowT[R, F, A]:
    """The same operator spelled with two chained ``call_cc`` captures.

    The outer capture is the normal exit of the catch; the inner one is the
    landing point for errors, after which ``h`` runs under the outer
    handler.
    """

    def run(outer):
        def body(normal_exit):
            caught = call_cc(
                lambda new_throw: cont_bind(m.run(_to_handler(new_throw)), normal_exit)
            )
            return cont_bind(caught, lambda e: h(e).run(outer))

        return call_cc(body)

    return ThrowT(run)


def _to_handler(escape: Callable[[Any], Cont]) -> Handler:
    # escapes ignore their consumer, so any consumer will do
    return lambda e: escape(e).run(_unreachable)


_DEAD = "<dead code>"


def _unreachable(_a):
    raise AssertionError("escape continuation returned normally")


def escape_t(a: A) -> ThrowT[R, Any, A]:
    """A value computation that returns ``a`` by escaping through ``call_cc``."""
    return ThrowT(
        lambda _h: call_cc(lambda k: cont_bind(k(a), lambda _: cont_pure(_DEAD)))
    )


def run_throw_t(
    m: ThrowT[R, E, A], on_error: Callable[[E], R], on_ok: Callable[[A], R]
) -> R:
    return m.run(on_error).run(on_ok)
