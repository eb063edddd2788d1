"""Randomized law checking over value-level instance adapters.

Every law is a function that draws its ingredients from an adapter's
generators and returns two sides which must be observationally equal. The
engine runs each law ``cases`` times with seeds derived from the run seed,
the law and the case number, so any single failure can be replayed from
the seed stored in its :class:`LawCase`.
"""

from __future__ import annotations

import json
import operator
import random
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

__all__ = [
    "CORE_SUITES",
    "InstanceAdapter",
    "Law",
    "LawCase",
    "LawReport",
    "LawSummary",
    "case_seed",
    "check_error_monad",
    "check_extra",
    "check_fish_equivalence",
    "check_interaction",
    "check_value_monad",
    "replay",
    "reports_to_json",
    "run_full_suite",
    "run_laws",
]

MASK64 = (1 << 64) - 1


def _mix64(x: int) -> int:
    # splitmix64 finalizer
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def _law_key(law_id: str) -> int:
    return zlib.crc32(law_id.encode())


def case_seed(seed: int, law_id: str, case_index: int) -> int:
    return _mix64(_mix64(_mix64(seed & MASK64) ^ _law_key(law_id)) ^ case_index)


@dataclass(frozen=True)
class Law:
    """One executable equation.

    ``run(adapter, rng)`` returns ``(lhs, rhs)``. When ``observed`` is false
    both sides are computations and go through the adapter's observation;
    otherwise they are already plain values compared with ``==``.
    """

    id: str
    run: Callable[["InstanceAdapter", random.Random], tuple[Any, Any]]
    needs: frozenset = frozenset()
    observed: bool = False


def _int_map(rng: random.Random) -> Callable[[int], int]:
    k = rng.randint(0, 4)
    return (lambda x: x + k) if rng.random() < 0.5 else (lambda x: x * (k + 1))


@dataclass(frozen=True)
class InstanceAdapter:
    name: str
    gen_value: Callable[[random.Random], Any]
    gen_error: Callable[[random.Random], Any]
    gen_computation: Callable[[random.Random], Any]
    gen_value_arrow: Optional[Callable[[random.Random], Callable]]
    gen_error_arrow: Callable[[random.Random], Callable]
    pure_op: Callable
    bind_op: Optional[Callable]
    throw_op: Callable
    catch_op: Callable
    observe: Callable[[Any], Any]
    observe_eq: Callable[[Any, Any], bool] = operator.eq
    # pure maps used by the fish composition lemma
    gen_value_map: Callable[[random.Random], Callable] = _int_map
    gen_error_map: Optional[Callable[[random.Random], Callable]] = None
    # law id -> replacement observation for laws that only hold up to it
    observe_overrides: Mapping[str, Callable[[Any], Any]] = field(default_factory=dict)
    extra_laws: Sequence[Law] = ()

    def supports(self, law: Law) -> bool:
        return all(getattr(self, op) is not None for op in law.needs)


@dataclass(frozen=True)
class LawCase:
    law_id: str
    seed: int
    verdict: str
    lhs_obs: Optional[str] = None
    rhs_obs: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {"law": self.law_id, "seed": self.seed, "lhs": self.lhs_obs, "rhs": self.rhs_obs}


@dataclass(frozen=True)
class LawSummary:
    law_id: str
    passed: int
    failed: int

    def to_json(self) -> dict:
        return {"id": self.law_id, "pass": self.passed, "fail": self.failed}


@dataclass(frozen=True)
class LawReport:
    adapter_name: str
    suite: str
    cases_per_law: int
    results: tuple[LawSummary, ...]
    failures: tuple[LawCase, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total_cases(self) -> int:
        return sum(r.passed + r.failed for r in self.results)

    def to_json(self) -> dict:
        return {
            "adapter": self.adapter_name,
            "cases_per_law": self.cases_per_law,
            "laws": [r.to_json() for r in self.results],
            "failures": [f.to_json() for f in self.failures],
        }


def reports_to_json(reports: Iterable[LawReport], **extra: Any) -> str:
    doc = dict(extra)
    doc["reports"] = [r.to_json() for r in reports]
    return json.dumps(doc, indent=2)


# -- running ---------------------------------------------------------------


def _evaluate(adapter: InstanceAdapter, law: Law, seed: int) -> LawCase:
    rng = random.Random(seed)
    try:
        lhs, rhs = law.run(adapter, rng)
        if law.observed:
            lo, ro, same = lhs, rhs, lhs == rhs
        else:
            observe = adapter.observe_overrides.get(law.id, adapter.observe)
            lo, ro = observe(lhs), observe(rhs)
            same = adapter.observe_eq(lo, ro)
    except Exception as exc:  # a law that crashes is a failed law
        return LawCase(law.id, seed, "fail", f"raised {exc!r}", "<not evaluated>")
    if same:
        return LawCase(law.id, seed, "pass")
    return LawCase(law.id, seed, "fail", repr(lo), repr(ro))


def replay(adapter: InstanceAdapter, law_id: str, seed: int) -> LawCase:
    """Re-run one case of ``law_id`` from its stored case seed."""
    for law in _all_laws(adapter):
        if law.id == law_id:
            return _evaluate(adapter, law, seed)
    raise KeyError(law_id)


def run_laws(
    adapter: InstanceAdapter, laws: Sequence[Law], suite: str, cases: int, seed: int
) -> LawReport:
    if cases < 0:
        raise ValueError("cases must be non-negative")
    results = []
    failures = []
    for law in laws:
        if not adapter.supports(law):
            continue
        passed = failed = 0
        for i in range(cases):
            case = _evaluate(adapter, law, case_seed(seed, law.id, i))
            if case.passed:
                passed += 1
            else:
                failed += 1
                failures.append(case)
        results.append(LawSummary(law.id, passed, failed))
    return LawReport(adapter.name, suite, cases, tuple(results), tuple(failures))


# -- the laws --------------------------------------------------------------


def _value_left_identity(ad, rng):
    a, f = ad.gen_value(rng), ad.gen_value_arrow(rng)
    return ad.bind_op(ad.pure_op(a), f), f(a)


def _value_right_identity(ad, rng):
    m = ad.gen_computation(rng)
    return ad.bind_op(m, ad.pure_op), m


def _value_associativity(ad, rng):
    m, f, g = ad.gen_computation(rng), ad.gen_value_arrow(rng), ad.gen_value_arrow(rng)
    bind = ad.bind_op
    return bind(bind(m, f), g), bind(m, lambda x: bind(f(x), g))


def _error_left_identity(ad, rng):
    e, h = ad.gen_error(rng), ad.gen_error_arrow(rng)
    return ad.catch_op(ad.throw_op(e), h), h(e)


def _error_right_identity(ad, rng):
    m = ad.gen_computation(rng)
    return ad.catch_op(m, ad.throw_op), m


def _error_associativity(ad, rng):
    m, h, k = ad.gen_computation(rng), ad.gen_error_arrow(rng), ad.gen_error_arrow(rng)
    catch = ad.catch_op
    return catch(catch(m, h), k), catch(m, lambda e: catch(h(e), k))


def _throw_bind(ad, rng):
    e, f = ad.gen_error(rng), ad.gen_value_arrow(rng)
    return ad.bind_op(ad.throw_op(e), f), ad.throw_op(e)


def _pure_catch(ad, rng):
    a, h = ad.gen_value(rng), ad.gen_error_arrow(rng)
    return ad.catch_op(ad.pure_op(a), h), ad.pure_op(a)


def _fish(op):
    return lambda f, g: (lambda x: op(f(x), g))


def _value_cross(ad, rng):
    # bind recovered from the fish built on bind: (const m >=> f) ()
    m, f = ad.gen_computation(rng), ad.gen_value_arrow(rng)
    fish = _fish(ad.bind_op)
    return fish(lambda _unit: m, f)(None), ad.bind_op(m, f)


def _error_cross(ad, rng):
    m, h = ad.gen_computation(rng), ad.gen_error_arrow(rng)
    handle = _fish(ad.catch_op)
    return handle(lambda _unit: m, h)(None), ad.catch_op(m, h)


def _value_composition(ad, rng):
    f, g = ad.gen_value_arrow(rng), ad.gen_value_arrow(rng)
    h, x = ad.gen_value_map(rng), ad.gen_value(rng)
    fish = _fish(ad.bind_op)
    return fish(f, g)(h(x)), fish(lambda y: f(h(y)), g)(x)


def _error_composition(ad, rng):
    f, g = ad.gen_error_arrow(rng), ad.gen_error_arrow(rng)
    h, e = ad.gen_error_map(rng), ad.gen_error(rng)
    handle = _fish(ad.catch_op)
    return handle(f, g)(h(e)), handle(lambda y: f(h(y)), g)(e)


def _value_fish_right_identity(ad, rng):
    f, x = ad.gen_value_arrow(rng), ad.gen_value(rng)
    return _fish(ad.bind_op)(f, ad.pure_op)(x), f(x)


def _error_fish_right_identity(ad, rng):
    h, e = ad.gen_error_arrow(rng), ad.gen_error(rng)
    return _fish(ad.catch_op)(h, ad.throw_op)(e), h(e)


_B = frozenset({"bind_op", "gen_value_arrow"})
_C = frozenset({"catch_op"})

VALUE_MONAD = (
    Law("value.left-identity", _value_left_identity, _B),
    Law("value.right-identity", _value_right_identity, _B),
    Law("value.associativity", _value_associativity, _B),
)
ERROR_MONAD = (
    Law("error.left-identity", _error_left_identity, _C),
    Law("error.right-identity", _error_right_identity, _C),
    Law("error.associativity", _error_associativity, _C),
)
INTERACTION = (
    Law("interaction.throw-bind", _throw_bind, _B),
    Law("interaction.pure-catch", _pure_catch, _C),
)
FISH = (
    Law("fish.value-cross", _value_cross, _B),
    Law("fish.error-cross", _error_cross, _C),
    Law("fish.value-composition", _value_composition, _B),
    Law("fish.error-composition", _error_composition, _C | {"gen_error_map"}),
    Law("fish.value-right-identity", _value_fish_right_identity, _B),
    Law("fish.error-right-identity", _error_fish_right_identity, _C),
)

CORE_SUITES = {
    "value-monad": VALUE_MONAD,
    "error-monad": ERROR_MONAD,
    "interaction": INTERACTION,
    "fish": FISH,
}


def _all_laws(adapter: InstanceAdapter):
    for laws in CORE_SUITES.values():
        yield from laws
    yield from adapter.extra_laws


def check_value_monad(adapter: InstanceAdapter, cases: int, seed: int) -> LawReport:
    return run_laws(adapter, VALUE_MONAD, "value-monad", cases, seed)


def check_error_monad(adapter: InstanceAdapter, cases: int, seed: int) -> LawReport:
    return run_laws(adapter, ERROR_MONAD, "error-monad", cases, seed)


def check_interaction(adapter: InstanceAdapter, cases: int, seed: int) -> LawReport:
    return run_laws(adapter, INTERACTION, "interaction", cases, seed)


def check_fish_equivalence(adapter: InstanceAdapter, cases: int, seed: int) -> LawReport:
    return run_laws(adapter, FISH, "fish", cases, seed)


def check_extra(adapter: InstanceAdapter, cases: int, seed: int) -> LawReport:
    """The instance-specific law pack carried by the adapter (may be empty)."""
    return run_laws(adapter, adapter.extra_laws, "extra", cases, seed)


SUITE_CHECKS = (
    check_value_monad,
    check_error_monad,
    check_interaction,
    check_fish_equivalence,
    check_extra,
)


def run_full_suite(
    adapters: Iterable[InstanceAdapter], cases: int, seed: int
) -> list[LawReport]:
    """Every suite for every adapter, in adapter order then suite order."""
    return [check(a, cases, seed) for a in adapters for check in SUITE_CHECKS]
