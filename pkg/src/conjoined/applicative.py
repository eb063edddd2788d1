"""Error-accumulating applicative that is still a monad in its error.

``ea_apply`` keeps going after a failure so that independent failures are
all reported, merged with the error monoid (``+`` by default). There is no
value-index bind: a bind could not see past the first failure.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, TypeVar

from conjoined.outcome import Fail, Ok, Outcome

E = TypeVar("E")
F = TypeVar("F")
A = TypeVar("A")
B = TypeVar("B")

__all__ = ["EA", "catch_ea", "ea_apply", "ea_map", "ea_pure", "map_ap", "throw_ea"]


@dataclass(frozen=True)
class EA(Generic[E, A]):
    carrier: Outcome[E, A]

    def __repr__(self) -> str:
        return f"EA({self.carrier!r})"


def ea_pure(a: A) -> EA[Any, A]:
    return EA(Ok(a))


def throw_ea(e: E) -> EA[E, Any]:
    return EA(Fail(e))


def ea_map(m: EA[E, A], f: Callable[[A], B]) -> EA[E, B]:
    c = m.carrier
    return EA(Ok(f(c.value))) if isinstance(c, Ok) else m


def ea_apply(
    f: EA[E, Callable[[A], B]],
    a: EA[E, A],
    combine: Callable[[E, E], E] = operator.add,
) -> EA[E, B]:
    cf, ca = f.carrier, a.carrier
    if isinstance(cf, Ok):
        return EA(Ok(cf.value(ca.value))) if isinstance(ca, Ok) else a
    if isinstance(ca, Fail):
        return EA(Fail(combine(cf.error, ca.error)))
    return f


def catch_ea(m: EA[E, A], h: Callable[[E], EA[F, A]]) -> EA[F, A]:
    c = m.carrier
    return h(c.error) if isinstance(c, Fail) else m


def map_ap(
    f: Callable[[A], EA[E, B]],
    xs: Iterable[A],
    combine: Callable[[E, E], E] = operator.add,
) -> EA[E, list]:
    """Traverse ``xs`` with ``f``, collecting every failure in input order."""
    items = list(xs)
    acc: EA = ea_pure(())
    # built from the right: cons (f x) <*> rest
    for x in reversed(items):
        acc = ea_apply(ea_map(f(x), _cons), acc, combine)
    return ea_map(acc, list)


def _cons(head):
    return lambda tail: (head, *tail)
