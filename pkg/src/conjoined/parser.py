"""Stateful parser combinators with a typed, handleable error channel.

A parser is a function from a state to either ``Ok((value, state))`` or
``Fail((error, state))``. Both the value and the error index are monads:
:func:`bind_p` sequences successes, :func:`catch_p` sequences failures.

Two error-handling disciplines exist. ``CatchMode.BACKTRACK`` restarts the
handler from the state the guarded parser started at; ``CatchMode.KEEP``
continues from the state where the failure happened.

The reference state is the remaining input text and the reference error is
an :class:`ErrorLog`, but nothing here depends on either beyond equality
(states) and ``+`` (errors, for the alternation combinators).
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, Sequence, TypeVar

from conjoined.outcome import Fail, Ok, Outcome

S = TypeVar("S")
E = TypeVar("E")
F = TypeVar("F")
A = TypeVar("A")
B = TypeVar("B")

__all__ = [
    "CatchMode",
    "ErrorLog",
    "Parser",
    "alt",
    "alt_empty",
    "bind_p",
    "bind_rollback",
    "catch_p",
    "char_p",
    "choice",
    "eof",
    "log",
    "many_p",
    "map_p",
    "or_else",
    "pure_p",
    "run_parser",
    "some_p",
    "string_p",
    "throw_p",
]


@dataclass(frozen=True)
class ErrorLog:
    """Ordered list of failure messages; a monoid under ``+``."""

    messages: tuple[str, ...] = ()

    def __add__(self, other: ErrorLog) -> ErrorLog:
        if not isinstance(other, ErrorLog):
            return NotImplemented
        return ErrorLog(self.messages + other.messages)

    def __len__(self) -> int:
        return len(self.messages)

    def __iter__(self):
        return iter(self.messages)

    def __repr__(self) -> str:
        return f"log{list(self.messages)!r}"


def log(*messages: str) -> ErrorLog:
    return ErrorLog(tuple(messages))


class CatchMode(enum.Enum):
    BACKTRACK = "backtrack"
    KEEP = "keep"


@dataclass(frozen=True)
class Parser(Generic[S, E, A]):
    run: Callable[[S], Outcome[tuple[E, S], tuple[A, S]]]

    def __call__(self, s: S) -> Outcome[tuple[E, S], tuple[A, S]]:
        return self.run(s)


def run_parser(p: Parser[S, E, A], s: S) -> Outcome[tuple[E, S], tuple[A, S]]:
    return p.run(s)


def pure_p(a: A) -> Parser[S, Any, A]:
    return Parser(lambda s: Ok((a, s)))


def throw_p(e: E) -> Parser[S, E, Any]:
    return Parser(lambda s: Fail((e, s)))


def bind_p(p: Parser[S, E, A], f: Callable[[A], Parser[S, E, B]]) -> Parser[S, E, B]:
    def run(s):
        r = p.run(s)
        if isinstance(r, Fail):
            return r
        a, s1 = r.value
        return f(a).run(s1)

    return Parser(run)


def bind_rollback(
    p: Parser[S, E, A], f: Callable[[A], Parser[S, E, B]]
) -> Parser[S, E, B]:
    """Like :func:`bind_p`, but ``f`` restarts from the original state.

    Lawful, though whatever ``p`` consumed is forgotten.
    """

    def run(s):
        r = p.run(s)
        if isinstance(r, Fail):
            return r
        a, _ = r.value
        return f(a).run(s)

    return Parser(run)


def map_p(p: Parser[S, E, A], f: Callable[[A], B]) -> Parser[S, E, B]:
    def run(s):
        r = p.run(s)
        if isinstance(r, Fail):
            return r
        a, s1 = r.value
        return Ok((f(a), s1))

    return Parser(run)


def catch_p(
    p: Parser[S, E, A],
    h: Callable[[E], Parser[S, F, A]],
    mode: CatchMode = CatchMode.BACKTRACK,
) -> Parser[S, F, A]:
    keep = mode is CatchMode.KEEP

    def run(s):
        r = p.run(s)
        if isinstance(r, Ok):
            return r
        e, s1 = r.error
        return h(e).run(s1 if keep else s)

    return Parser(run)


def or_else(p: Parser[S, E, A], q: Parser[S, F, A]) -> Parser[S, F, A]:
    """Try ``p``; on failure, run ``q`` from the original state.

    ``p``'s error is discarded, so the result carries ``q``'s error type.
    """
    return catch_p(p, lambda _e: q, CatchMode.BACKTRACK)


def alt(
    p: Parser[S, E, A],
    q: Parser[S, E, A],
    mode: CatchMode = CatchMode.BACKTRACK,
    combine: Callable[[E, E], E] = operator.add,
) -> Parser[S, E, A]:
    """First success wins; two failures merge their errors, ``p``'s first.

    In BACKTRACK mode ``q`` starts from the original state and a double
    failure reports that state. In KEEP mode ``q`` starts where ``p``
    failed and a double failure reports where ``q`` failed.
    """
    keep = mode is CatchMode.KEEP

    def run(s):
        r = p.run(s)
        if isinstance(r, Ok):
            return r
        e, s1 = r.error
        r2 = q.run(s1 if keep else s)
        if isinstance(r2, Ok):
            return r2
        f, s2 = r2.error
        return Fail((combine(e, f), s2 if keep else s))

    return Parser(run)


def alt_empty(empty: Any = ErrorLog()) -> Parser[S, Any, Any]:
    return Parser(lambda s: Fail((empty, s)))


def choice(
    ps: Iterable[Parser[S, E, A]],
    empty: Any = ErrorLog(),
    combine: Callable[[E, E], E] = operator.add,
) -> Parser[S, E, A]:
    acc = alt_empty(empty)
    for p in ps:
        acc = alt(acc, p, CatchMode.BACKTRACK, combine)
    return acc


def many_p(p: Parser[S, E, A]) -> Parser[S, Any, list]:
    """Zero or more repetitions of ``p``; never fails.

    Iteration stops at the first failure of ``p`` (its state is rolled back
    to just before that attempt) or right after a success that left the
    state unchanged, whose value is still included.
    """

    def run(s):
        out = []
        while True:
            r = p.run(s)
            if isinstance(r, Fail):
                return Ok((out, s))
            a, s1 = r.value
            out.append(a)
            if s1 == s:
                return Ok((out, s1))
            s = s1

    return Parser(run)


def some_p(p: Parser[S, E, A]) -> Parser[S, E, list]:
    """One or more repetitions; fails with ``p``'s error iff the first does."""
    rest = many_p(p)
    return bind_p(p, lambda a: map_p(rest, lambda xs: [a, *xs]))


def eof() -> Parser[str, ErrorLog, None]:
    def run(s: str):
        if not s:
            return Ok((None, s))
        return Fail((log("expected eof"), s))

    return Parser(run)


def char_p(c: str) -> Parser[str, ErrorLog, None]:
    def run(s: str):
        if not s:
            return Fail((log("unexpected eof"), s))
        if s[0] == c:
            return Ok((None, s[1:]))
        return Fail((log(f"expected `{c}' got `{s[0]}'"), s))

    return Parser(run)


def string_p(w: Sequence[str]) -> Parser[str, ErrorLog, None]:
    p: Parser = pure_p(None)
    # fold from the right so the chain reads char c >> (string cs)
    for c in reversed(w):
        p = _then(char_p(c), p)
    return p


def _then(p: Parser, q: Parser) -> Parser:
    return bind_p(p, lambda _: q)
