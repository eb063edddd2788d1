"""Printable term grammar for generated computations and arrows.

Law cases are built from small data terms rather than opaque closures so
that a failing case can be rendered and so that the same program can be
realized in several carriers (see :func:`interpret`). Values are small
integers throughout; errors are whatever the instance supplies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional, Sequence, Union

__all__ = [
    "Bind",
    "Catch",
    "ECondRecover",
    "ENestedBind",
    "ERecover",
    "ERethrow",
    "ESeq",
    "Grammar",
    "Node",
    "Ops",
    "Prim",
    "Pure",
    "Throw",
    "VCondThrow",
    "VConst",
    "VInc",
    "VNestedCatch",
    "VSeq",
    "arrow",
    "interpret",
    "size",
]


# -- computations ----------------------------------------------------------


@dataclass(frozen=True)
class Pure:
    value: int

    def __repr__(self) -> str:
        return f"pure {self.value}"


@dataclass(frozen=True)
class Throw:
    error: Any

    def __repr__(self) -> str:
        return f"throw {self.error!r}"


@dataclass(frozen=True)
class Prim:
    name: str
    arg: Any = None

    def __repr__(self) -> str:
        return self.name if self.arg is None else f"{self.name} {self.arg!r}"


@dataclass(frozen=True)
class Bind:
    m: "Term"
    f: "VArrow"

    def __repr__(self) -> str:
        return f"({self.m!r} >>= {self.f!r})"


@dataclass(frozen=True)
class Catch:
    m: "Term"
    h: "EArrow"

    def __repr__(self) -> str:
        return f"({self.m!r} `catch` {self.h!r})"


@dataclass(frozen=True)
class Node:
    """Instance-specific combinator applied to sub-terms."""

    name: str
    args: tuple

    def __repr__(self) -> str:
        return f"{self.name}({', '.join(map(repr, self.args))})"


Term = Union[Pure, Throw, Prim, Bind, Catch, Node]


# -- value arrows (int -> computation) -------------------------------------


@dataclass(frozen=True)
class VConst:
    k: int

    def __repr__(self) -> str:
        return f"\\_ -> pure {self.k}"


@dataclass(frozen=True)
class VInc:
    k: int

    def __repr__(self) -> str:
        return f"\\a -> pure (a+{self.k})"


@dataclass(frozen=True)
class VCondThrow:
    mod: int
    error: Any

    def __repr__(self) -> str:
        return f"\\a -> if a%{self.mod}==0 then throw {self.error!r} else pure a"


@dataclass(frozen=True)
class VNestedCatch:
    f: "VArrow"
    h: "EArrow"

    def __repr__(self) -> str:
        return f"\\a -> ({self.f!r}) a `catch` ({self.h!r})"


@dataclass(frozen=True)
class VSeq:
    m: Term

    def __repr__(self) -> str:
        return f"\\a -> {self.m!r} >>= \\b -> pure (a+b)"


VArrow = Union[VConst, VInc, VCondThrow, VNestedCatch, VSeq]


# -- error arrows (error -> computation) -----------------------------------


@dataclass(frozen=True)
class ERethrow:
    k: int

    def __repr__(self) -> str:
        return f"\\e -> throw (step e {self.k})"


@dataclass(frozen=True)
class ERecover:
    k: int

    def __repr__(self) -> str:
        return f"\\_ -> pure {self.k}"


@dataclass(frozen=True)
class ECondRecover:
    k: int

    def __repr__(self) -> str:
        return f"\\e -> if even e then pure {self.k} else throw (step e 1)"


@dataclass(frozen=True)
class ENestedBind:
    h: "EArrow"
    f: VArrow

    def __repr__(self) -> str:
        return f"\\e -> ({self.h!r}) e >>= ({self.f!r})"


@dataclass(frozen=True)
class ESeq:
    m: Term

    def __repr__(self) -> str:
        return f"\\e -> {self.m!r} `catch` \\e2 -> throw (e <> e2)"


EArrow = Union[ERethrow, ERecover, ECondRecover, ENestedBind, ESeq]


# -- interpretation --------------------------------------------------------


@dataclass(frozen=True)
class Ops:
    """One carrier's operators, primitives and error algebra."""

    pure: Callable
    throw: Callable
    catch: Callable
    bind: Optional[Callable] = None
    prims: Mapping[str, Callable] = field(default_factory=dict)
    nodes: Mapping[str, Callable] = field(default_factory=dict)
    error_step: Callable[[Any, int], Any] = lambda e, k: e
    error_pred: Callable[[Any], bool] = lambda e: True
    combine: Callable[[Any, Any], Any] = lambda e1, e2: e1 + e2


def interpret(t: Term, ops: Ops):
    if isinstance(t, Pure):
        return ops.pure(t.value)
    if isinstance(t, Throw):
        return ops.throw(t.error)
    if isinstance(t, Prim):
        return ops.prims[t.name](t.arg)
    if isinstance(t, Bind):
        return ops.bind(interpret(t.m, ops), arrow(t.f, ops))
    if isinstance(t, Catch):
        return ops.catch(interpret(t.m, ops), arrow(t.h, ops))
    if isinstance(t, Node):
        return ops.nodes[t.name](*(interpret(a, ops) for a in t.args))
    raise TypeError(f"not a term: {t!r}")


def arrow(a, ops: Ops) -> Callable:
    if isinstance(a, VConst):
        return lambda _x: ops.pure(a.k)
    if isinstance(a, VInc):
        return lambda x: ops.pure(x + a.k)
    if isinstance(a, VCondThrow):
        return lambda x: ops.throw(a.error) if x % a.mod == 0 else ops.pure(x)
    if isinstance(a, VNestedCatch):
        f, h = arrow(a.f, ops), arrow(a.h, ops)
        return lambda x: ops.catch(f(x), h)
    if isinstance(a, VSeq):
        m = interpret(a.m, ops)
        return lambda x: ops.bind(m, lambda y: ops.pure(x + y))
    if isinstance(a, ERethrow):
        return lambda e: ops.throw(ops.error_step(e, a.k))
    if isinstance(a, ERecover):
        return lambda _e: ops.pure(a.k)
    if isinstance(a, ECondRecover):
        return lambda e: ops.pure(a.k) if ops.error_pred(e) else ops.throw(ops.error_step(e, 1))
    if isinstance(a, ENestedBind):
        h, f = arrow(a.h, ops), arrow(a.f, ops)
        return lambda e: ops.bind(h(e), f)
    if isinstance(a, ESeq):
        m = interpret(a.m, ops)
        return lambda e: ops.catch(m, lambda e2: ops.throw(ops.combine(e, e2)))
    raise TypeError(f"not an arrow: {a!r}")


def size(t) -> int:
    """Number of primitive steps (leaves) in a term or arrow."""
    if isinstance(t, (Pure, Throw, Prim)):
        return 1
    if isinstance(t, (Bind, Catch)):
        return size(t.m) + size(t.f if isinstance(t, Bind) else t.h)
    if isinstance(t, Node):
        return sum(size(a) for a in t.args)
    if isinstance(t, (VSeq, ESeq)):
        return size(t.m)
    if isinstance(t, (VNestedCatch,)):
        return size(t.f) + size(t.h)
    if isinstance(t, ENestedBind):
        return size(t.h) + size(t.f)
    return 1


# -- generation ------------------------------------------------------------


@dataclass(frozen=True)
class Grammar:
    """Random term generator.

    ``prims`` maps primitive names to argument generators. ``nodes`` maps
    combinator names to their arity. ``has_bind`` switches off every
    production that needs a value-index bind.
    """

    gen_error: Callable[[random.Random], Any]
    prims: Mapping[str, Callable[[random.Random], Any]] = field(default_factory=dict)
    nodes: Mapping[str, int] = field(default_factory=dict)
    has_bind: bool = True
    depth: int = 2
    max_value: int = 9

    def value(self, rng: random.Random) -> int:
        return rng.randint(0, self.max_value)

    def computation(self, rng: random.Random, depth: Optional[int] = None) -> Term:
        d = self.depth if depth is None else depth
        if d <= 0 or rng.random() < 0.3:
            return self._leaf(rng)
        kinds = ["catch"] + (["bind"] if self.has_bind else []) + list(self.nodes)
        kind = rng.choice(kinds)
        if kind == "bind":
            return Bind(self.computation(rng, d - 1), self.value_arrow(rng, d - 1))
        if kind == "catch":
            return Catch(self.computation(rng, d - 1), self.error_arrow(rng, d - 1))
        arity = self.nodes[kind]
        return Node(kind, tuple(self.computation(rng, d - 1) for _ in range(arity)))

    def _leaf(self, rng: random.Random) -> Term:
        names: Sequence[str] = ["pure", "throw", *self.prims]
        name = rng.choice(names)
        if name == "pure":
            return Pure(self.value(rng))
        if name == "throw":
            return Throw(self.gen_error(rng))
        return Prim(name, self.prims[name](rng))

    def value_arrow(self, rng: random.Random, depth: Optional[int] = None) -> VArrow:
        d = self.depth if depth is None else depth
        choices = ["const", "inc", "cond"]
        if d > 0:
            choices += ["nested", "seq"]
        kind = rng.choice(choices)
        if kind == "const":
            return VConst(self.value(rng))
        if kind == "inc":
            return VInc(rng.randint(0, 3))
        if kind == "cond":
            return VCondThrow(rng.randint(2, 3), self.gen_error(rng))
        if kind == "nested":
            return VNestedCatch(self.value_arrow(rng, d - 1), self.error_arrow(rng, d - 1))
        return VSeq(self.computation(rng, d - 1))

    def error_arrow(self, rng: random.Random, depth: Optional[int] = None) -> EArrow:
        d = self.depth if depth is None else depth
        choices = ["rethrow", "recover", "cond"]
        if d > 0:
            choices += ["seq"] + (["nested"] if self.has_bind else [])
        kind = rng.choice(choices)
        if kind == "rethrow":
            return ERethrow(rng.randint(1, 3))
        if kind == "recover":
            return ERecover(self.value(rng))
        if kind == "cond":
            return ECondRecover(self.value(rng))
        if kind == "nested":
            return ENestedBind(self.error_arrow(rng, d - 1), self.value_arrow(rng, d - 1))
        return ESeq(self.computation(rng, d - 1))
