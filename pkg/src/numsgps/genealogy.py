"""The genealogy tree of numerical semigroups with a fixed multiplicity.

All semigroups of multiplicity m form a tree rooted at the ordinary
semigroup {0, m, →}.  A node's parent is obtained by filling in the top
gap block (the gamma selection); conversely the children of T are the
semigroups T∖A for nonempty sets A of minimal generators of T lying
above the threshold (⌊F(T)/m⌋+1)·m.  Complexity grows by exactly one
per edge, so the depth-n level is precisely the set of semigroups with
multiplicity m and complexity n+1, and walking the tree level by level
enumerates them all.

Prepending a copy of m to a semigroup (shift_embed) maps each level
injectively into the next, which is why the levels never shrink.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexity import ThetaMap, complexity, theta_apply
from .errors import LevelTooLarge, WholeMonoid
from .semigroup import NumericalSemigroup, from_gaps

DEFAULT_NODE_CAP = 10_000_000


@dataclass(frozen=True)
class TreeLevel:
    """All semigroups of multiplicity ``multiplicity`` at depth ``depth``."""

    multiplicity: int
    depth: int
    members: tuple[NumericalSemigroup, ...]


def root(m: int) -> NumericalSemigroup:
    """The ordinary semigroup {0, m, →}, root of the multiplicity-m tree."""
    if m < 2:
        raise ValueError("multiplicity must be at least 2")
    return from_gaps(range(1, m))


def removal_candidates(t: NumericalSemigroup) -> tuple[int, ...]:
    """Minimal generators of t above (⌊F/m⌋+1)·m, the removable ones.

    They all lie strictly between (q+1)m and (q+2)m with q = ⌊F/m⌋,
    so there are at most m−1 of them.
    """
    if t.is_whole:
        raise WholeMonoid("the full monoid has no children")
    m = t.multiplicity
    threshold = (t.frobenius // m + 1) * m
    cand = tuple(x for x in t.min_generators if x > threshold)
    assert all(x < threshold + m for x in cand) and len(cand) <= m - 1
    return cand


def child_edges(t: NumericalSemigroup) -> list[tuple[NumericalSemigroup, tuple[int, ...]]]:
    """(child, removed generators) pairs for every nonempty removable subset."""
    cand = removal_candidates(t)
    edges = []
    for mask in range(1, 1 << len(cand)):
        removed = tuple(cand[i] for i in range(len(cand)) if mask >> i & 1)
        child = t.without(removed)
        assert child.multiplicity == t.multiplicity
        assert complexity(child) == complexity(t) + 1
        assert child.adjoin(theta_apply(ThetaMap.GAMMA, child)) == t
        edges.append((child, removed))
    return edges


def children(t: NumericalSemigroup) -> list[NumericalSemigroup]:
    """All semigroups whose gamma step leads back to t."""
    return [child for child, _ in child_edges(t)]


def level(m: int, n: int, max_nodes: int = DEFAULT_NODE_CAP) -> TreeLevel:
    """The depth-n level of the multiplicity-m tree, sorted by generators."""
    if n < 0:
        raise ValueError("depth must be nonnegative")
    frontier = [root(m)]
    for _ in range(n):
        frontier = [c for t in frontier for c in children(t)]
        if len(frontier) > max_nodes:
            raise LevelTooLarge(
                f"level of G({m}) exceeds the cap of {max_nodes} nodes")
    members = sorted(frontier, key=lambda s: s.min_generators)
    assert len(set(members)) == len(members)
    assert all(complexity(s) == n + 1 for s in members)
    return TreeLevel(m, n, tuple(members))


def enumerate_semigroups(m: int, c: int,
                         max_nodes: int = DEFAULT_NODE_CAP) -> list[NumericalSemigroup]:
    """All numerical semigroups with multiplicity m and complexity c."""
    if c < 1:
        raise ValueError("complexity must be at least 1")
    return list(level(m, c - 1, max_nodes).members)


def count(m: int, c: int, max_nodes: int = DEFAULT_NODE_CAP) -> int:
    """How many semigroups have multiplicity m and complexity c."""
    return len(enumerate_semigroups(m, c, max_nodes))


def shift_embed(s: NumericalSemigroup) -> NumericalSemigroup:
    """({m}+S) ∪ {0}: same multiplicity, complexity one higher.

    Injective on each (multiplicity, complexity) class, which forces
    count(m, c) ≤ count(m, c+1).
    """
    if s.is_whole:
        raise WholeMonoid("the full monoid has no shift embedding")
    m = s.multiplicity
    members = {0} | {m + x for x in s.small_elements}
    shifted = _build_shift(members, s.frobenius + m + 1)
    assert shifted.multiplicity == m
    assert shifted.frobenius == s.frobenius + m
    assert complexity(shifted) == complexity(s) + 1
    return shifted


def _build_shift(members, upper):
    gaps = set(range(1, upper)) - members
    return from_gaps(gaps)


def export_dot(m: int, max_depth: int) -> str:
    """DOT digraph of the multiplicity-m tree down to ``max_depth``.

    Nodes are generator literals in breadth-first order; each edge is
    labeled with the removed generator set, e.g. {7,8}.
    """
    if max_depth < 0:
        raise ValueError("depth must be nonnegative")
    nodes, edges = [], []
    frontier = [root(m)]
    for depth in range(max_depth + 1):
        nxt = []
        for t in frontier:
            nodes.append(f'  "{t}";')
            if depth < max_depth:
                for child, removed in child_edges(t):
                    label = "{" + ",".join(str(x) for x in removed) + "}"
                    edges.append(f'  "{t}" -> "{child}" [label="{label}"];')
                    nxt.append(child)
        frontier = nxt
    lines = [f'digraph "G({m})" {{', "  rankdir=TB;", *nodes, *edges, "}"]
    return "\n".join(lines) + "\n"
