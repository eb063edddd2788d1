"""Two-case fallible result, monadic in both the error and the value.

``Ok`` values sequence through :func:`bind` and pass untouched through
:func:`catch`; ``Fail`` values do the opposite. The two halves mirror each
other exactly, which is the whole point of the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar, Union

E = TypeVar("E")
F = TypeVar("F")
G = TypeVar("G")
A = TypeVar("A")
B = TypeVar("B")
C = TypeVar("C")

__all__ = [
    "Fail",
    "Ok",
    "Outcome",
    "bind",
    "catch",
    "fish_error",
    "fish_value",
    "flip",
    "pure",
    "throw",
]


@dataclass(frozen=True)
class Ok(Generic[A]):
    value: A

    def __repr__(self) -> str:
        return f"Ok({self.value!r})"


@dataclass(frozen=True)
class Fail(Generic[E]):
    error: E

    def __repr__(self) -> str:
        return f"Fail({self.error!r})"


Outcome = Union[Fail[E], Ok[A]]


def pure(a: A) -> Outcome[E, A]:
    return Ok(a)


def throw(e: E) -> Outcome[E, A]:
    return Fail(e)


def bind(m: Outcome[E, A], f: Callable[[A], Outcome[E, B]]) -> Outcome[E, B]:
    if isinstance(m, Ok):
        return f(m.value)
    return m


def catch(m: Outcome[E, A], h: Callable[[E], Outcome[F, A]]) -> Outcome[F, A]:
    """Run ``h`` on the error of a failure; successes pass through.

    The handler may change the error type freely.

    >>> catch(Fail("x"), lambda e: Ok(len(e)))
    Ok(1)
    >>> catch(Ok(1), lambda e: Fail("never"))
    Ok(1)
    """
    if isinstance(m, Fail):
        return h(m.error)
    return m


def fish_value(
    f: Callable[[A], Outcome[E, B]], g: Callable[[B], Outcome[E, C]]
) -> Callable[[A], Outcome[E, C]]:
    return lambda a: bind(f(a), g)


def fish_error(
    f: Callable[[E], Outcome[F, A]], g: Callable[[F], Outcome[G, A]]
) -> Callable[[E], Outcome[G, A]]:
    """Compose two handlers: ``g`` handles whatever ``f`` throws."""
    return lambda e: catch(f(e), g)


def flip(m: Outcome[E, A]) -> Outcome[A, E]:
    """Swap the roles of the two constructors."""
    if isinstance(m, Ok):
        return Fail(m.value)
    return Ok(m.error)
