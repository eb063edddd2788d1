"""The shipped instance adapters and their instance-specific law packs.

Each adapter realizes the shared term grammar in one carrier and fixes how
computations are observed: first-order carriers compare directly, function
carriers are run over a fixed panel of inputs (states, consumer pairs or
worlds) and the resulting tuples are compared.
"""

from __future__ import annotations

import random
from typing import Any, Callable

from conjoined import applicative as ea
from conjoined import cont, dynamic, eio, outcome
from conjoined import parser as ps
from conjoined.laws.engine import InstanceAdapter, Law
from conjoined.laws.terms import Grammar, Ops, arrow, interpret, size
from conjoined.outcome import Fail, Ok
from conjoined.parser import CatchMode, ErrorLog, log

__all__ = [
    "EIO_OPS",
    "EIO_WORLDS",
    "PARSER_PANEL",
    "SEIO_OPS",
    "THROW_T_PANEL",
    "all_adapters",
    "bisimulation_program",
    "ea_adapter",
    "eio_adapter",
    "eio_dynamic_adapter",
    "error_component",
    "observe_eio",
    "observe_parser",
    "outcome_adapter",
    "parser_adapter",
    "seio_adapter",
    "throw_t_adapter",
]


# -- shared error algebra: ErrorLog ------------------------------------------

_MESSAGES = ("x", "y", "z")


def gen_log(rng: random.Random) -> ErrorLog:
    return log(*(rng.choice(_MESSAGES) for _ in range(rng.randint(1, 2))))


def log_step(e: ErrorLog, k: int) -> ErrorLog:
    return e + log(f"+{k}")


def log_even(e: ErrorLog) -> bool:
    return len(e) % 2 == 0


def gen_log_map(rng: random.Random) -> Callable[[ErrorLog], ErrorLog]:
    k = rng.randint(1, 3)
    if rng.random() < 0.5:
        return lambda e: log_step(e, k)
    return lambda e: log(*reversed(e.messages))


def _adapter(name, grammar: Grammar, ops: Ops, observe, **kw) -> InstanceAdapter:
    has_bind = ops.bind is not None
    return InstanceAdapter(
        name=name,
        gen_value=grammar.value,
        gen_error=grammar.gen_error,
        gen_computation=lambda rng: interpret(grammar.computation(rng), ops),
        gen_value_arrow=(lambda rng: arrow(grammar.value_arrow(rng), ops)) if has_bind else None,
        gen_error_arrow=lambda rng: arrow(grammar.error_arrow(rng), ops),
        pure_op=ops.pure,
        bind_op=ops.bind,
        throw_op=ops.throw,
        catch_op=ops.catch,
        observe=observe,
        **kw,
    )


# -- outcome -----------------------------------------------------------------

OUTCOME_OPS = Ops(
    pure=outcome.pure,
    throw=outcome.throw,
    catch=outcome.catch,
    bind=outcome.bind,
    error_step=log_step,
    error_pred=log_even,
)


def _outcome_symmetry(ad, rng):
    # catch over Outcome[E, A] is bind over the flipped Outcome[A, E]
    m, h = ad.gen_computation(rng), ad.gen_error_arrow(rng)
    lhs = outcome.flip(outcome.catch(m, h))
    rhs = outcome.bind(outcome.flip(m), lambda e: outcome.flip(h(e)))
    return lhs, rhs


def outcome_adapter() -> InstanceAdapter:
    grammar = Grammar(gen_error=gen_log)
    return _adapter(
        "outcome",
        grammar,
        OUTCOME_OPS,
        observe=lambda m: m,
        gen_error_map=gen_log_map,
        extra_laws=(Law("outcome.symmetry", _outcome_symmetry, observed=True),),
    )


# -- parser ------------------------------------------------------------------

PARSER_PANEL = (
    "", "a", "b", "aa", "ab", "ba", "bb", "aaa",
    "aab", "aba", "abb", "baa", "bab", "bba", "bbb", "abab",
)
_CHAR_VALUE = {"a": 1, "b": 2, "c": 3}


def observe_parser(p) -> tuple:
    return tuple(p.run(s) for s in PARSER_PANEL)


def error_component(obs: tuple) -> tuple:
    """Drop the failure state: successes stay whole, failures keep the error."""
    return tuple(Fail(r.error[0]) if isinstance(r, Fail) else r for r in obs)


def _success_value(obs: tuple) -> tuple:
    return tuple(Ok(r.value[0]) if isinstance(r, Ok) else r for r in obs)


def parser_ops(mode: CatchMode) -> Ops:
    return Ops(
        pure=ps.pure_p,
        throw=ps.throw_p,
        catch=lambda m, h: ps.catch_p(m, h, mode),
        bind=ps.bind_p,
        prims={
            "char": lambda c: ps.map_p(ps.char_p(c), lambda _: _CHAR_VALUE[c]),
            "eof": lambda _: ps.map_p(ps.eof(), lambda _: 0),
        },
        nodes={
            "alt": lambda p, q: ps.alt(p, q, mode),
            "many": lambda p: ps.map_p(ps.many_p(p), len),
        },
        error_step=log_step,
        error_pred=log_even,
    )


def _parser_pack(mode: CatchMode) -> tuple[Law, ...]:
    def alt_left(ad, rng):
        p = ad.gen_computation(rng)
        return ps.alt(ps.alt_empty(), p, mode), p

    def alt_right(ad, rng):
        p = ad.gen_computation(rng)
        return ps.alt(p, ps.alt_empty(), mode), p

    def alt_assoc(ad, rng):
        p, q, r = (ad.gen_computation(rng) for _ in range(3))
        return ps.alt(ps.alt(p, q, mode), r, mode), ps.alt(p, ps.alt(q, r, mode), mode)

    def many_total(ad, rng):
        obs = observe_parser(ps.many_p(ad.gen_computation(rng)))
        return tuple(isinstance(r, Ok) for r in obs), (True,) * len(PARSER_PANEL)

    def some_unfold(ad, rng):
        p = ad.gen_computation(rng)
        rhs = ps.bind_p(p, lambda a: ps.map_p(ps.many_p(p), lambda xs: [a, *xs]))
        return ps.some_p(p), rhs

    def rb_left(ad, rng):
        a, f = ad.gen_value(rng), ad.gen_value_arrow(rng)
        return ps.bind_rollback(ps.pure_p(a), f), f(a)

    def rb_right(ad, rng):
        # holds only up to the success state, see observe_overrides below
        m = ad.gen_computation(rng)
        return ps.bind_rollback(m, ps.pure_p), m

    def rb_assoc(ad, rng):
        m, f, g = ad.gen_computation(rng), ad.gen_value_arrow(rng), ad.gen_value_arrow(rng)
        rb = ps.bind_rollback
        return rb(rb(m, f), g), rb(m, lambda x: rb(f(x), g))

    return (
        Law("alt.left-identity", alt_left),
        Law("alt.right-identity", alt_right),
        Law("alt.associativity", alt_assoc),
        Law("many.never-fails", many_total, observed=True),
        Law("some.unfold", some_unfold),
        Law("rollback.left-identity", rb_left),
        Law("rollback.right-identity", rb_right),
        Law("rollback.associativity", rb_assoc),
    )


def parser_adapter(mode: CatchMode) -> InstanceAdapter:
    grammar = Grammar(
        gen_error=gen_log,
        prims={"char": lambda rng: rng.choice("abc"), "eof": lambda rng: None},
        nodes={"alt": 2, "many": 1},
    )
    overrides: dict[str, Callable] = {
        "rollback.right-identity": lambda p: _success_value(observe_parser(p)),
    }
    if mode is CatchMode.BACKTRACK:
        # handlers and alternatives restart from the entry state, so a
        # mid-stream failure loses its position; these laws hold for the
        # error payload only
        relaxed = lambda p: error_component(observe_parser(p))  # noqa: E731
        for law_id in (
            "error.right-identity",
            "fish.error-right-identity",
            "alt.left-identity",
            "alt.right-identity",
        ):
            overrides[law_id] = relaxed
    return _adapter(
        f"parser/{mode.name.capitalize()}",
        grammar,
        parser_ops(mode),
        observe=observe_parser,
        gen_error_map=gen_log_map,
        observe_overrides=overrides,
        extra_laws=_parser_pack(mode),
    )


# -- ThrowT ------------------------------------------------------------------

THROW_T_PANEL = (
    (lambda e: ("err", e), lambda a: ("ok", a)),
    (lambda e: ("err-len", len(e)), lambda a: ("ok-square", a * a)),
    (lambda e: ("err-last", e.messages[-1:]), lambda a: ("ok-neg", -a)),
    (lambda e: "failed", lambda a: "done"),
)


def observe_throw_t(m) -> tuple:
    return tuple(cont.run_throw_t(m, on_error, on_ok) for on_error, on_ok in THROW_T_PANEL)


THROW_T_OPS = Ops(
    pure=cont.pure_t,
    throw=cont.throw_t,
    catch=cont.catch_t,
    bind=cont.bind_t,
    prims={"escape": cont.escape_t},
    error_step=log_step,
    error_pred=log_even,
)


def _throw_t_pack() -> tuple[Law, ...]:
    def transparency(ad, rng):
        m = ad.gen_computation(rng)
        wrapped = cont.ThrowT(lambda h: cont.call_cc(lambda _escape: m.run(h)))
        return wrapped, m

    def two_call_cc(ad, rng):
        m, h = ad.gen_computation(rng), ad.gen_error_arrow(rng)
        return cont.catch_t(m, h), cont.catch_t_via_call_cc(m, h)

    return (
        Law("callcc.transparency", transparency),
        Law("catch.call-cc-form", two_call_cc),
    )


def throw_t_adapter() -> InstanceAdapter:
    grammar = Grammar(gen_error=gen_log, prims={"escape": lambda rng: rng.randint(0, 9)})
    return _adapter(
        "cont-ThrowT",
        grammar,
        THROW_T_OPS,
        observe=observe_throw_t,
        gen_error_map=gen_log_map,
        extra_laws=_throw_t_pack(),
    )


# -- EIO / SEIO --------------------------------------------------------------

EIO_WORLDS = (
    eio.World(),
    eio.World(input=("a",)),
    eio.World(input=("hello", "x")),
    eio.World(input=("", "bb", "ccc")),
    eio.World(output=("earlier",), tick=3),
    eio.World(input=("q",), output=("o1", "o2"), tick=1),
    eio.World(input=("1", "22", "333", "4444")),
    eio.World(input=("z",) * 5, tick=10),
)


def observe_eio(m) -> tuple:
    return tuple(m.run(w) for w in EIO_WORLDS)


def observe_seio(m) -> tuple:
    return observe_eio(eio.from_scott(m))


def _effect_prims(pure, bind, write, read, tick) -> dict:
    return {
        "write": lambda t: bind(write(t), lambda _: pure(len(t))),
        "read": lambda e: bind(read(e), lambda s: pure(len(s))),
        "tick": lambda _: tick(),
    }


def _eio_ops(error_step, error_pred, combine=lambda a, b: a + b) -> Ops:
    return Ops(
        pure=eio.eio_pure,
        throw=eio.throw_eio,
        catch=eio.catch_eio,
        bind=eio.eio_bind,
        prims=_effect_prims(eio.eio_pure, eio.eio_bind, eio.write_line, eio.read_line, eio.tick),
        error_step=error_step,
        error_pred=error_pred,
        combine=combine,
    )


EIO_OPS = _eio_ops(log_step, log_even)
SEIO_OPS = Ops(
    pure=eio.seio_pure,
    throw=eio.throw_seio,
    catch=eio.catch_seio,
    bind=eio.seio_bind,
    prims=_effect_prims(
        eio.seio_pure, eio.seio_bind, eio.seio_write_line, eio.seio_read_line, eio.seio_tick
    ),
    error_step=log_step,
    error_pred=log_even,
)


def _effect_grammar(gen_error, depth: int = 2) -> Grammar:
    return Grammar(
        gen_error=gen_error,
        prims={
            "write": lambda rng: rng.choice(("out", "ab", "")),
            "read": gen_error,
            "tick": lambda rng: None,
        },
        depth=depth,
    )


def bisimulation_program(rng: random.Random, max_steps: int = 20, depth: int = 4):
    """A random effect program with at most ``max_steps`` primitive steps."""
    grammar = _effect_grammar(gen_log, depth)
    while True:
        t = grammar.computation(rng)
        if size(t) <= max_steps:
            return t


def _world_monotone(before: eio.World, after: eio.World) -> bool:
    return (
        after.tick >= before.tick
        and len(after.output) >= len(before.output)
        and after.output[: len(before.output)] == before.output
    )


def _eio_pack() -> tuple[Law, ...]:
    def monotone(ad, rng):
        m = ad.gen_computation(rng)
        flags = tuple(_world_monotone(w, m.run(w)[1]) for w in EIO_WORLDS)
        return flags, (True,) * len(EIO_WORLDS)

    def roundtrip(ad, rng):
        m = ad.gen_computation(rng)
        return eio.from_scott(eio.to_scott(m)), m

    return (
        Law("eio.world-monotone", monotone, observed=True),
        Law("eio.scott-roundtrip", roundtrip),
    )


def _seio_pack() -> tuple[Law, ...]:
    def bisim(ad, rng):
        t = bisimulation_program(rng)
        return observe_eio(interpret(t, EIO_OPS)), observe_seio(interpret(t, SEIO_OPS))

    def roundtrip(ad, rng):
        m = ad.gen_computation(rng)
        return eio.to_scott(eio.from_scott(m)), m

    return (
        Law("seio.bisimulation", bisim, observed=True),
        Law("seio.scott-roundtrip", roundtrip),
    )


def eio_adapter() -> InstanceAdapter:
    return _adapter(
        "eio",
        _effect_grammar(gen_log),
        EIO_OPS,
        observe=observe_eio,
        gen_error_map=gen_log_map,
        extra_laws=_eio_pack(),
    )


def seio_adapter() -> InstanceAdapter:
    return _adapter(
        "seio",
        _effect_grammar(gen_log),
        SEIO_OPS,
        observe=observe_seio,
        gen_error_map=gen_log_map,
        extra_laws=_seio_pack(),
    )


# -- EIO over the erased dynamic error channel -------------------------------

ERROR_CALL = dynamic.register("ErrorCall")
SOMETHING_ELSE = dynamic.register("SomethingElse")
_TAGS = (ERROR_CALL, SOMETHING_ELSE)


def gen_dyn(rng: random.Random) -> dynamic.DynError:
    tag = rng.choice(_TAGS)
    return dynamic.to_dyn(tag, rng.randint(0, 5))


def dyn_step(d: dynamic.DynError, k: int) -> dynamic.DynError:
    return dynamic.to_dyn(d.tag, d.payload + k)


def dyn_combine(d1: dynamic.DynError, d2: dynamic.DynError) -> dynamic.DynError:
    return dynamic.to_dyn(d1.tag, d1.payload + d2.payload)


def _gen_dyn_map(rng: random.Random):
    k = rng.randint(1, 3)
    return lambda d: dyn_step(d, k)


def _dynamic_pack() -> tuple[Law, ...]:
    def decomposition(ad, rng):
        m, tag = ad.gen_computation(rng), rng.choice(_TAGS)
        h = ad.gen_value_arrow(rng)

        def by_cast(d):
            payload = dynamic.from_dyn(tag, d)
            return eio.throw_eio(d) if payload is None else h(payload)

        return dynamic.catch_typed(m, tag, h), eio.catch_eio(m, by_cast)

    def rethrow_intact(ad, rng):
        d = gen_dyn(rng)
        other = SOMETHING_ELSE if d.tag == ERROR_CALL else ERROR_CALL
        h = ad.gen_value_arrow(rng)
        r, _ = dynamic.catch_typed(eio.throw_eio(d), other, h).run(rng.choice(EIO_WORLDS))
        return (r, r.error is d), (Fail(d), True)

    return (
        Law("dynamic.decomposition", decomposition),
        Law("dynamic.rethrow-intact", rethrow_intact, observed=True),
    )


def eio_dynamic_adapter() -> InstanceAdapter:
    return _adapter(
        "eio-dynamic",
        _effect_grammar(gen_dyn),
        _eio_ops(dyn_step, lambda d: d.payload % 2 == 0, dyn_combine),
        observe=observe_eio,
        gen_error_map=_gen_dyn_map,
        extra_laws=_dynamic_pack(),
    )


# -- EA (error index only) ---------------------------------------------------

EA_OPS = Ops(
    pure=ea.ea_pure,
    throw=ea.throw_ea,
    catch=ea.catch_ea,
    error_step=log_step,
    error_pred=log_even,
)


def _gen_ea_fn(rng: random.Random) -> ea.EA:
    if rng.random() < 0.3:
        return ea.throw_ea(gen_log(rng))
    k = rng.randint(0, 4)
    return ea.ea_pure(lambda x: x * 2 + k) if rng.random() < 0.5 else ea.ea_pure(lambda x: x + k)


def _compose(f):
    return lambda g: (lambda x: f(g(x)))


def _ea_pack() -> tuple[Law, ...]:
    def identity(ad, rng):
        v = ad.gen_computation(rng)
        return ea.ea_apply(ea.ea_pure(lambda x: x), v), v

    def homomorphism(ad, rng):
        x, k = ad.gen_value(rng), rng.randint(0, 4)
        f = lambda y: y * 3 + k  # noqa: E731
        return ea.ea_apply(ea.ea_pure(f), ea.ea_pure(x)), ea.ea_pure(f(x))

    def interchange(ad, rng):
        u, y = _gen_ea_fn(rng), ad.gen_value(rng)
        return ea.ea_apply(u, ea.ea_pure(y)), ea.ea_apply(ea.ea_pure(lambda f: f(y)), u)

    def composition(ad, rng):
        u, v, w = _gen_ea_fn(rng), _gen_ea_fn(rng), ad.gen_computation(rng)
        ap = ea.ea_apply
        return ap(ap(ap(ea.ea_pure(_compose), u), v), w), ap(u, ap(v, w))

    def accumulate(ad, rng):
        a, b = gen_log(rng), gen_log(rng)
        return ea.ea_apply(ea.throw_ea(a), ea.throw_ea(b)).carrier, Fail(a + b)

    def throw_apply_ok(ad, rng):
        e, x = gen_log(rng), ad.gen_value(rng)
        return ea.ea_apply(ea.throw_ea(e), ea.ea_pure(x)), ea.throw_ea(e)

    return (
        Law("ea.identity", identity),
        Law("ea.homomorphism", homomorphism),
        Law("ea.interchange", interchange),
        Law("ea.composition", composition),
        Law("ea.accumulate", accumulate, observed=True),
        Law("ea.throw-apply-ok", throw_apply_ok),
    )


def ea_adapter() -> InstanceAdapter:
    return _adapter(
        "ea-error-index",
        Grammar(gen_error=gen_log, has_bind=False),
        EA_OPS,
        observe=lambda m: m,
        gen_error_map=gen_log_map,
        extra_laws=_ea_pack(),
    )


def all_adapters() -> list[InstanceAdapter]:
    return [
        outcome_adapter(),
        parser_adapter(CatchMode.KEEP),
        parser_adapter(CatchMode.BACKTRACK),
        throw_t_adapter(),
        eio_adapter(),
        seio_adapter(),
        ea_adapter(),
        eio_dynamic_adapter(),
    ]
