"""Goal evaluation: lazy depth-first search with chronological
backtracking and scoped cut propagation.

Evaluation of a goal produces a stream of binding stores.  A cut that
fires travels upward as a terminal marker on the stream: enclosing
disjunctions and conjunctions stop exploring alternatives when they see
it, and a Scope node strips it.  The stream is demand-driven, so taking
the first n solutions performs only the search needed to find them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Mapping, Optional

from . import goals as g
from .terms import (
    EMPTY_STORE,
    BindingStore,
    LogicError,
    Term,
    Var,
    VarId,
    is_ground_term,
    resolve,
    unify,
)


class StepBudgetExceeded(LogicError):
    """Raised when a solver step budget runs out mid-search."""


class _Cut:
    """Terminal stream marker: a cut escaped the goal that produced it."""

    def __repr__(self):
        return "<cut>"


CUT = _Cut()


@dataclass(frozen=True)
class Solution:
    """One answer: bindings of user-named variables, fully resolved,
    plus the fresh-variable counter at the moment it was produced."""

    bindings: Mapping[VarId, Term]
    counter_at_yield: int


class _Engine:
    """Per-query evaluation state: fresh-variable counter and optional
    step budget.  One engine drives exactly one query."""

    def __init__(self, max_steps: Optional[int] = None):
        self.counter = 0
        self.steps = 0
        self.max_steps = max_steps

    def fresh(self, ltype) -> Var:
        vid = VarId(f"_{self.counter}", ltype)
        self.counter += 1
        return Var(vid)

    def _tick(self):
        self.steps += 1
        if self.max_steps is not None and self.steps > self.max_steps:
            raise StepBudgetExceeded(f"step budget of {self.max_steps} exhausted")

    def run(self, goal: g.Goal, store: BindingStore) -> Iterator:
        """Yield binding stores; may end with the CUT marker."""
        self._tick()
        if isinstance(goal, g.Succeed):
            yield store
        elif isinstance(goal, g.Fail):
            return
        elif isinstance(goal, g.Unify):
            extended = unify(goal.left, goal.right, store)
            if extended is not None:
                yield extended
        elif isinstance(goal, g.Conj):
            for item in self.run(goal.g1, store):
                if item is CUT:
                    yield CUT
                    return
                for inner in self.run(goal.g2, item):
                    if inner is CUT:
                        # A cut in the right conjunct also discards the
                        # remaining alternatives of the left one.
                        yield CUT
                        return
                    yield inner
        elif isinstance(goal, g.Disj):
            for item in self.run(goal.g1, store):
                if item is CUT:
                    yield CUT
                    return
                yield item
            yield from self.run(goal.g2, store)
        elif isinstance(goal, g.CutThen):
            first = None
            committed = False
            for item in self.run(goal.g1, store):
                if item is CUT:
                    yield CUT
                    return
                first = item
                committed = True
                break
            if not committed:
                # Left side never succeeded: the node fails, no cut fires.
                return
            for item in self.run(goal.g2, first):
                if item is CUT:
                    yield CUT
                    return
                yield item
            yield CUT
        elif isinstance(goal, g.Scope):
            for item in self.run(goal.g, store):
                if item is CUT:
                    return
                yield item
        elif isinstance(goal, g.Exists):
            fresh = self.fresh(goal.ltype)
            yield from self.run(goal.body(fresh), store)
        elif isinstance(goal, g.IsGround):
            if is_ground_term(goal.term, store):
                yield store
        else:
            raise LogicError(f"not a goal: {goal!r}")


def solve_stores(goal: g.Goal, max_steps: Optional[int] = None) -> Iterator[BindingStore]:
    """Lazy stream of raw binding stores for `goal`, starting from the
    empty store.  A top-level cut simply ends the stream."""
    engine = _Engine(max_steps)
    for item in engine.run(goal, EMPTY_STORE):
        if item is CUT:
            return
        yield item


def solve(goal: g.Goal, max_steps: Optional[int] = None) -> Iterator[Solution]:
    """Lazy stream of solutions in depth-first, left-to-right order.

    Each solution restricts the final store to user-named variables
    (engine-generated "_" names are dropped) with all values fully
    resolved.  Diverges when the search tree has an infinite leftmost
    path, like Prolog.
    """
    engine = _Engine(max_steps)
    for item in engine.run(goal, EMPTY_STORE):
        if item is CUT:
            return
        yield _project(item, engine.counter)


def _project(store: BindingStore, counter: int) -> Solution:
    visible = {}
    for vid in store:
        if not vid.name.startswith("_"):
            visible[vid] = resolve(Var(vid), store)
    return Solution(visible, counter)


def find_all(v: Var, goal: g.Goal, max_steps: Optional[int] = None) -> List[Term]:
    """The resolved value of `v` under every solution of `goal`, in
    solution order.  Diverges if the goal has infinitely many solutions;
    use find_all_n to truncate.  Values may be non-ground."""
    if not isinstance(v, Var):
        raise TypeError("find_all expects a variable term")
    return [resolve(v, store) for store in solve_stores(goal, max_steps)]


def find_all_n(v: Var, goal: g.Goal, n: int, max_steps: Optional[int] = None) -> List[Term]:
    """Like find_all, truncated after the first `n` solutions."""
    if not isinstance(v, Var):
        raise TypeError("find_all_n expects a variable term")
    stream = solve_stores(goal, max_steps)
    return [resolve(v, store) for store in itertools.islice(stream, n)]


def holds(goal: g.Goal, max_steps: Optional[int] = None) -> bool:
    """True iff `goal` has at least one solution.  Only the first
    solution is searched for."""
    for _ in solve_stores(goal, max_steps):
        return True
    return False
