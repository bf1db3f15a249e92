"""Universal Horn frame theories over indexed binary relations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class RelAtom:
    """One positive relational atom: source R_index target."""

    index: int
    source: str
    target: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("relation index must be >= 1")

    def variables(self) -> tuple[str, ...]:
        return (self.source, self.target)

    def to_text(self) -> str:
        return f"R{self.index}({self.source},{self.target})"


@dataclass(frozen=True)
class HornClause:
    """Universally closed implication with one positive head atom.

    The quantifier prefix is the first-occurrence order of variables in the
    body followed by the head; witness reporting and fixpoint provenance use
    that order.
    """

    body: tuple[RelAtom, ...]
    head: RelAtom
    variables: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        order: dict[str, None] = {}
        for atom in (*self.body, self.head):
            for v in atom.variables():
                order.setdefault(v, None)
        object.__setattr__(self, "variables", tuple(order))

    def is_safe(self) -> bool:
        """True when every head variable also occurs in the body."""
        bound = {v for atom in self.body for v in atom.variables()}
        return all(v in bound for v in self.head.variables())

    def max_index(self) -> int:
        return max(a.index for a in (*self.body, self.head))

    def to_text(self) -> str:
        body = ", ".join(a.to_text() for a in self.body)
        return f"{body} -> {self.head.to_text()}" if body else f"-> {self.head.to_text()}"


@dataclass(frozen=True)
class FrameTheory:
    """Clause set plus its signature: `free` unconstrained relations followed
    by `transitive` relations (indices free+1 .. free+transitive)."""

    free: int
    transitive: int
    clauses: tuple[HornClause, ...] = ()

    def __post_init__(self):
        if self.free < 0 or self.transitive < 0:
            raise ValueError("signature counts must be >= 0")
        object.__setattr__(self, "clauses", tuple(self.clauses))
        k = self.relation_count
        for c in self.clauses:
            if c.max_index() > k:
                raise ValueError(
                    f"clause uses relation index {c.max_index()} "
                    f"but signature allows at most {k}"
                )

    @property
    def relation_count(self) -> int:
        return self.free + self.transitive

    def is_safe(self) -> bool:
        return all(c.is_safe() for c in self.clauses)

    def to_text(self) -> str:
        lines = [f"sig {self.free} {self.transitive};"]
        lines.extend(f"{c.to_text()};" for c in self.clauses)
        return "\n".join(lines) + "\n"


def transitivity_clause(index: int) -> HornClause:
    return HornClause(
        body=(RelAtom(index, "x", "y"), RelAtom(index, "y", "z")),
        head=RelAtom(index, "x", "z"),
    )
