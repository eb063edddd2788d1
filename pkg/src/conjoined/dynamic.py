"""Typed errors dispatched dynamically over one erased error channel.

Every thrown error is wrapped into a :class:`DynError` carrying a
:class:`TypeTag`. A typed handler inspects the tag and either handles the
payload or rethrows the original ``DynError`` untouched. Tags are created by
explicit registration; two registrations never compare equal, even under
the same name.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from conjoined.eio import EIO, catch_eio, throw_eio

__all__ = [
    "DynError",
    "TypeTag",
    "catch_typed",
    "from_dyn",
    "handle_or_again",
    "register",
    "throw_typed",
    "to_dyn",
]

_ids = itertools.count(1)
_lock = threading.Lock()


@dataclass(frozen=True)
class TypeTag:
    id: int
    name: str = field(compare=False)

    def __repr__(self) -> str:
        return f"<{self.name}>"


def register(name: str) -> TypeTag:
    """Create a fresh tag, distinct from every other tag ever registered."""
    with _lock:
        return TypeTag(next(_ids), name)


@dataclass(frozen=True)
class DynError:
    tag: TypeTag
    payload: Any
    rendered: str

    def __repr__(self) -> str:
        return f"DynError({self.rendered!r})"


def to_dyn(tag: TypeTag, payload: Any, rendered: Optional[str] = None) -> DynError:
    if rendered is None:
        rendered = f"{tag.name} {payload!r}"
    return DynError(tag, payload, rendered)


def from_dyn(tag: TypeTag, d: DynError) -> Optional[Any]:
    """The payload of ``d`` if it was wrapped under ``tag``, else ``None``."""
    if d.tag == tag:
        return d.payload
    return None


def throw_typed(tag: TypeTag, payload: Any, rendered: Optional[str] = None) -> EIO[DynError, Any]:
    return throw_eio(to_dyn(tag, payload, rendered))


def handle_or_again(
    tag: TypeTag, h: Callable[[Any], EIO[DynError, Any]]
) -> Callable[[DynError], EIO[DynError, Any]]:
    def handler(d: DynError) -> EIO[DynError, Any]:
        if d.tag == tag:
            return h(d.payload)
        return throw_eio(d)

    return handler


def catch_typed(
    m: EIO[DynError, Any], tag: TypeTag, h: Callable[[Any], EIO[DynError, Any]]
) -> EIO[DynError, Any]:
    return catch_eio(m, handle_or_again(tag, h))
