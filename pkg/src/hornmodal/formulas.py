"""Multimodal formula ASTs: indexed diamonds/boxes over propositional logic.

All nodes are immutable and hashable, so formulas can live in sets and dict
keys and are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Formula:
    """Base class; concrete nodes are the subclasses below."""


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __post_init__(self):
        if not self.name or not self.name.replace("_", "a").isalnum():
            raise ValueError(f"invalid proposition name: {self.name!r}")


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    index: int
    sub: Formula

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("relation index must be >= 1")


@dataclass(frozen=True)
class Box(Formula):
    index: int
    sub: Formula

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("relation index must be >= 1")


_BINARY = (And, Or, Implies, Iff)
_UNARY = (Not, Diamond, Box)


def children(phi: Formula) -> tuple[Formula, ...]:
    if isinstance(phi, _BINARY):
        return (phi.lhs, phi.rhs)
    if isinstance(phi, _UNARY):
        return (phi.sub,)
    return ()


def length(phi: Formula) -> int:
    """Number of AST nodes."""
    return 1 + sum(length(c) for c in children(phi))


def subformulas(phi: Formula) -> list[Formula]:
    """All distinct subformulas, children before parents."""
    seen: dict[Formula, None] = {}

    def walk(psi: Formula) -> None:
        if psi in seen:
            return
        for c in children(psi):
            walk(c)
        seen[psi] = None

    walk(phi)
    return list(seen)


def propositions(phi: Formula) -> tuple[str, ...]:
    """Sorted names of propositional variables occurring in the formula."""
    return tuple(sorted({s.name for s in subformulas(phi) if isinstance(s, Var)}))


def modal_indices(phi: Formula) -> tuple[int, ...]:
    """Sorted relation indices used by diamond/box operators."""
    return tuple(
        sorted({s.index for s in subformulas(phi) if isinstance(s, (Diamond, Box))})
    )


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; Top for the empty sequence."""
    it: Iterator[Formula] = iter(parts)
    try:
        acc = next(it)
    except StopIteration:
        return Top()
    for p in it:
        acc = And(acc, p)
    return acc


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-folded disjunction; Bottom for the empty sequence."""
    it: Iterator[Formula] = iter(parts)
    try:
        acc = next(it)
    except StopIteration:
        return Bottom()
    for p in it:
        acc = Or(acc, p)
    return acc


# Precedence levels used by both the printer and the parser.
# Higher binds tighter; implication is right-associative.
_PREC_IFF = 1
_PREC_IMPLIES = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_UNARY = 5
_PREC_ATOM = 6


def formula_to_text(phi: Formula) -> str:
    """Render with the minimal parentheses that re-parse to the same AST."""
    return _render(phi, 0)


def _render(phi: Formula, ctx: int) -> str:
    if isinstance(phi, Var):
        return phi.name
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, Not):
        return _wrap(f"~{_render(phi.sub, _PREC_UNARY)}", _PREC_UNARY, ctx)
    if isinstance(phi, Diamond):
        return _wrap(f"<{phi.index}> {_render(phi.sub, _PREC_UNARY)}", _PREC_UNARY, ctx)
    if isinstance(phi, Box):
        return _wrap(f"[{phi.index}] {_render(phi.sub, _PREC_UNARY)}", _PREC_UNARY, ctx)
    if isinstance(phi, And):
        body = f"{_render(phi.lhs, _PREC_AND)} & {_render(phi.rhs, _PREC_AND + 1)}"
        return _wrap(body, _PREC_AND, ctx)
    if isinstance(phi, Or):
        body = f"{_render(phi.lhs, _PREC_OR)} | {_render(phi.rhs, _PREC_OR + 1)}"
        return _wrap(body, _PREC_OR, ctx)
    if isinstance(phi, Implies):
        body = f"{_render(phi.lhs, _PREC_IMPLIES + 1)} -> {_render(phi.rhs, _PREC_IMPLIES)}"
        return _wrap(body, _PREC_IMPLIES, ctx)
    if isinstance(phi, Iff):
        body = f"{_render(phi.lhs, _PREC_IFF)} <-> {_render(phi.rhs, _PREC_IFF + 1)}"
        return _wrap(body, _PREC_IFF, ctx)
    raise TypeError(f"not a formula node: {phi!r}")


def _wrap(text: str, prec: int, ctx: int) -> str:
    return f"({text})" if prec < ctx else text
