"""The fixed demo grammar and demo effect program driven by the CLI."""

from __future__ import annotations

from functools import reduce

from conjoined import dynamic
from conjoined.eio import EIO, eio_bind, eio_pure, read_line, write_line
from conjoined.outcome import Fail, Ok
from conjoined.parser import (
    CatchMode,
    Parser,
    alt,
    bind_p,
    char_p,
    eof,
    log,
    many_p,
    map_p,
    some_p,
)

__all__ = [
    "BOOM",
    "END_OF_INPUT",
    "ast_to_json",
    "echo_program",
    "expression",
    "parse_expression",
]


# -- arithmetic expressions ----------------------------------------------------
#
#   expr   = term ('+' term)*
#   term   = factor ('*' factor)*
#   factor = digit+ | '(' expr ')'


def _digit() -> Parser:
    def run(s: str):
        if not s:
            return Fail((log("unexpected eof"), s))
        if s[0].isdigit():
            return Ok((s[0], s[1:]))
        return Fail((log(f"expected digit got `{s[0]}'"), s))

    return Parser(run)


def _then(p: Parser, q: Parser) -> Parser:
    return bind_p(p, lambda _: q)


def _skip_after(p: Parser, q: Parser) -> Parser:
    return bind_p(p, lambda a: map_p(q, lambda _: a))


def _chain(operand: Parser, op: str, tag: str) -> Parser:
    rest = many_p(_then(char_p(op), operand))
    return bind_p(
        operand,
        lambda first: map_p(rest, lambda xs: reduce(lambda l, r: (tag, l, r), xs, first)),
    )


def expression() -> Parser:
    number = map_p(some_p(_digit()), lambda ds: ("Lit", int("".join(ds))))
    expr_ref = Parser(lambda s: expr.run(s))
    parens = _then(char_p("("), _skip_after(expr_ref, char_p(")")))
    factor = alt(number, parens, CatchMode.BACKTRACK)
    term = _chain(factor, "*", "Mul")
    expr = _chain(term, "+", "Add")
    return _skip_after(expr, eof())


def parse_expression(text: str):
    return expression().run(text)


def ast_to_json(node):
    if node[0] == "Lit":
        return {"Lit": node[1]}
    return {node[0]: [ast_to_json(node[1]), ast_to_json(node[2])]}


# -- echo program over the simulated world -------------------------------------

END_OF_INPUT = dynamic.register("EndOfInput")
BOOM = dynamic.register("Boom")


def _echo() -> EIO:
    eof_error = dynamic.to_dyn(END_OF_INPUT, None, "EndOfInput")

    def after_read(line: str) -> EIO:
        if line == "BOOM":
            rest = dynamic.throw_typed(BOOM, line, f"Boom {line!r}")
        else:
            rest = _echo()
        return eio_bind(write_line(line), lambda _: rest)

    step = eio_bind(read_line(eof_error), after_read)
    return dynamic.catch_typed(step, END_OF_INPUT, lambda _: eio_pure(None))


def echo_program() -> EIO:
    """Echo every input line; a ``BOOM`` line aborts the echo and is recovered.

    The abort travels through every nested end-of-input handler, each of
    which rethrows it, before the outer handler writes ``recovered``.
    """
    return dynamic.catch_typed(_echo(), BOOM, lambda _: write_line("recovered"))
