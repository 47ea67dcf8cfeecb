"""Iteration of the forward map with division by a fixed prime.

``lv_p`` applies the forward map and divides every output entry by p; when
some entry is not divisible the result is undefined, which is a meaningful
outcome (returned as ``None``), not an error.  Iterating ``lv_p`` on every
component until only zeros, stuck singletons, or non-integral divisions
remain yields a finite tree; weights whose tree ends in all zeros are the
*distinguished* ones, and the minimal number of iteration levels needed is
their depth.

A mandatory ``cap`` bounds every iteration entry point so termination never
depends on number-theoretic luck.  Traces are immutable once built and the
expansion of distinct children is independent, so callers may parallelize
over weights freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import OmegaElement, PartitionMult, Weight, validate_weight
from .lv_algorithm import _lv_mu

__all__ = [
    "ModularContext",
    "IterationTrace",
    "RefinementChain",
    "STATUS_ZEROS",
    "STATUS_NONINTEGRAL",
    "STATUS_TERMINAL_SHORT",
    "STATUS_EXPANDED",
    "STATUS_EXHAUSTED",
    "lv_p",
    "iterate",
    "distinguished_depth",
    "refinement_chain",
    "rho_family",
    "trace_to_json",
    "trace_from_json",
]

STATUS_ZEROS = "zeros"
STATUS_NONINTEGRAL = "nonintegral"
STATUS_TERMINAL_SHORT = "terminal_short"
STATUS_EXPANDED = "expanded"
STATUS_EXHAUSTED = "exhausted"


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; exact for anything we will ever see."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class ModularContext:
    """A fixed prime p; each processed weight must satisfy p > len(weight)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")

    def check_length(self, n: int) -> None:
        if self.p <= n:
            raise ValueError(
                f"prime {self.p} must exceed the sequence length {n}"
            )


@dataclass(frozen=True, slots=True)
class IterationTrace:
    """One node of the iteration tree.

    ``depth`` counts expansions consumed from the root to this node.
    ``children`` is nonempty exactly when status is "expanded": one child
    per component of the divided output, empty components included as
    empty-leaf children.
    """

    seq: Weight
    status: str
    depth: int
    children: tuple["IterationTrace", ...] = field(default=())

    def leaves(self):
        if self.status != STATUS_EXPANDED:
            yield self
        else:
            for child in self.children:
                yield from child.leaves()


@dataclass(frozen=True, slots=True)
class RefinementChain:
    """Per-level partition lists read off a fully distinguished trace.

    Level t+1 refines level t: each nonzero multiplicity l_i of a level-t
    partition is partitioned by exactly one level-(t+1) entry, in order.
    """

    levels: tuple[tuple[PartitionMult, ...], ...]


def _divided(mu: tuple[Weight, ...], p: int) -> tuple[Weight, ...] | None:
    """Entrywise quotient by p, or None if some entry is not divisible."""
    out = []
    for part in mu:
        q = []
        for e in part:
            d, r = divmod(e, p)
            if r:
                return None
            q.append(d)
        out.append(tuple(q))
    return tuple(out)


def lv_p(w, ctx: ModularContext) -> OmegaElement | None:
    """Forward map followed by entrywise division by p.

    Returns None when some output entry is not divisible by p; that signals
    the boundary of the distinguished set rather than a failure.
    """
    w = validate_weight(w)
    ctx.check_length(len(w))
    divided = _divided(_lv_mu(w), ctx.p)
    return None if divided is None else OmegaElement(divided)


def iterate(w, ctx: ModularContext, cap: int) -> IterationTrace:
    """Expand every non-terminal node up to ``cap`` levels.

    Leaves are all-zero sequences (including empty ones), nonzero
    singletons, and nodes whose division is non-integral.  A node that
    could still expand when the budget runs out is marked "exhausted"
    without computing its next step.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    w = validate_weight(w)
    ctx.check_length(len(w))
    return _build(w, 0, cap, ctx.p)


def _build(seq: Weight, depth: int, budget: int, p: int) -> IterationTrace:
    if not any(seq):
        return IterationTrace(seq, STATUS_ZEROS, depth)
    if len(seq) == 1:
        return IterationTrace(seq, STATUS_TERMINAL_SHORT, depth)
    if budget == 0:
        return IterationTrace(seq, STATUS_EXHAUSTED, depth)
    divided = _divided(_lv_mu(seq), p)
    if divided is None:
        return IterationTrace(seq, STATUS_NONINTEGRAL, depth)
    children = tuple(
        _build(child, depth + 1, budget - 1, p) for child in divided
    )
    return IterationTrace(seq, STATUS_EXPANDED, depth, children)


_MISS = object()


def _bounded_depth(seq: Weight, cap: int, p: int, memo: dict) -> int | None:
    """Minimal iterations taking ``seq`` to all zeros, or None when that does
    not happen within ``cap`` levels (non-integral division, a stuck nonzero
    singleton, or a longer chain).

    Every sequence is evaluated against the same ``cap``, so memo entries
    are exact whenever they are <= cap; the provisional None breaks cycles,
    which can never reach all zeros anyway.
    """
    v = memo.get(seq, _MISS)
    if v is not _MISS:
        return v
    memo[seq] = None
    d = _depth_uncached(seq, cap, p, memo)
    memo[seq] = d
    return d


def _depth_uncached(seq: Weight, cap: int, p: int, memo: dict) -> int | None:
    if not any(seq):
        return 0
    if len(seq) == 1 or cap <= 0:
        return None
    worst = 0
    for part in _lv_mu(seq):
        child = []
        for e in part:
            d, r = divmod(e, p)
            if r:
                return None
            child.append(d)
        cd = _bounded_depth(tuple(child), cap, p, memo)
        if cd is None or cd >= cap:
            return None
        if cd > worst:
            worst = cd
    return worst + 1


def distinguished_depth(w, ctx: ModularContext, cap: int) -> int | None:
    """Minimal k <= cap such that iteration reaches all zeros everywhere,
    or None if no such k exists within the cap."""
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    w = validate_weight(w)
    ctx.check_length(len(w))
    return _bounded_depth(w, cap, ctx.p, {})


def refinement_chain(trace: IterationTrace) -> RefinementChain:
    """Read the per-level partitions off a fully distinguished trace.

    An expanded node contributes the multiplicity vector of its divided
    output (l_i = length of component i).  An all-zero node of length l
    contributes l parts of size 1 and keeps contributing at every later
    level, so each level refines the previous one; empty nodes contribute
    nothing.  The chain ends at the first level produced entirely by
    all-zero nodes.
    """
    for leaf in trace.leaves():
        if leaf.status != STATUS_ZEROS:
            raise ValueError(
                f"trace not distinguished: leaf {leaf.seq} has status "
                f"{leaf.status}"
            )
    levels: list[tuple[PartitionMult, ...]] = []
    frontier: list[IterationTrace] = [trace]
    while True:
        contributions: list[PartitionMult] = []
        nxt: list[IterationTrace] = []
        any_expanded = False
        for node in frontier:
            if node.status == STATUS_ZEROS:
                if node.seq:
                    contributions.append(PartitionMult((len(node.seq),)))
                    nxt.append(node)
            else:
                any_expanded = True
                contributions.append(
                    PartitionMult(tuple(len(c.seq) for c in node.children))
                )
                nxt.extend(node.children)
        if contributions:
            levels.append(tuple(contributions))
        if not any_expanded:
            return RefinementChain(tuple(levels))
        frontier = nxt


def rho_family(n: int, m: int, ctx: ModularContext) -> Weight:
    """The staircase (n-1, n-3, ..., 1-n) scaled by (p^m - 1)/(p - 1).

    Iterating division-by-p on the result peels one scale factor per level,
    so its distinguished depth is exactly m.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    scale = (ctx.p**m - 1) // (ctx.p - 1)
    return tuple((n - 1 - 2 * i) * scale for i in range(n))


# JSON trace form ------------------------------------------------------------

def _trace_dict(t: IterationTrace) -> dict:
    d: dict = {"seq": list(t.seq), "status": t.status}
    if t.status == STATUS_EXPANDED:
        d["children"] = [_trace_dict(c) for c in t.children]
    return d


def trace_to_json(t: IterationTrace) -> str:
    """Compact JSON: {"seq":[...],"status":"...","children":[...]};
    children present only on expanded nodes."""
    return json.dumps(_trace_dict(t), separators=(",", ":"))


def _trace_from_dict(d: dict, depth: int) -> IterationTrace:
    children = tuple(
        _trace_from_dict(c, depth + 1) for c in d.get("children", ())
    )
    return IterationTrace(tuple(d["seq"]), d["status"], depth, children)


def trace_from_json(text: str) -> IterationTrace:
    return _trace_from_dict(json.loads(text), 0)
