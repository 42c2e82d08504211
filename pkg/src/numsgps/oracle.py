"""Brute-force certifiers for the closed-form results.

Everything here recomputes an answer from first principles so the fast
implementations can be checked against it on small instances: a complete
catalog of semigroups up to a genus bound, pseudo-Frobenius numbers
straight from the definition, ideal extensions by filtering all 2^t
subsets with an explicit closure test, and the minimal i-chain length by
breadth-first search over the extension graph.  The ``verify`` CLI
command and the test suite both run these.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complexity import ThetaMap, complexity, mu
from .errors import GenusTooLarge, TypeTooLarge, WholeMonoid
from .extensions import ideal_extensions
from .genealogy import enumerate_semigroups
from .semigroup import WHOLE, NumericalSemigroup, from_gaps

MAX_CATALOG_GENUS = 12
MAX_BFS_GENUS = 10
MAX_ORACLE_TYPE = 25


@dataclass(frozen=True)
class GenusCatalog:
    """All numerical semigroups of genus ≤ max_genus, one level per genus."""

    max_genus: int
    by_genus: tuple[tuple[NumericalSemigroup, ...], ...]

    @property
    def semigroups(self) -> list[NumericalSemigroup]:
        return [s for lvl in self.by_genus for s in lvl]

    def counts(self) -> list[int]:
        return [len(lvl) for lvl in self.by_genus]


def enumerate_by_genus(max_genus: int) -> GenusCatalog:
    """Exhaustive catalog via the gap tree: remove one generator > F per step.

    Each semigroup of genus g+1 is some genus-g semigroup minus a single
    minimal generator exceeding its Frobenius number, and arises that way
    exactly once, so the walk is complete and duplicate-free.
    """
    if max_genus < 0:
        raise ValueError("genus bound must be nonnegative")
    if max_genus > MAX_CATALOG_GENUS:
        raise GenusTooLarge(
            f"genus {max_genus} exceeds the catalog guard {MAX_CATALOG_GENUS}")
    levels = [(WHOLE,)]
    for _ in range(max_genus):
        nxt = []
        for s in levels[-1]:
            f = s.frobenius
            for x in s.min_generators:
                if x > f:
                    nxt.append(s.without({x}))
        nxt.sort(key=lambda t: t.min_generators)
        assert len(set(nxt)) == len(nxt)
        levels.append(tuple(nxt))
    return GenusCatalog(max_genus, tuple(levels))


def pf_bruteforce(s: NumericalSemigroup) -> set[int]:
    """Gaps x with x + n a member for every nonzero member n.

    Testing n up to F(s)+1 is exhaustive: for larger n the sum already
    exceeds the Frobenius number.
    """
    if s.is_whole:
        raise WholeMonoid("the full monoid has no pseudo-Frobenius numbers")
    nonzero = [n for n in s.small_elements if n]
    return {x for x in s.gaps if all(x + n in s for n in nonzero)}


def extensions_bruteforce(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Every semigroup between s and s ∪ PF(s), by trying all 2^t unions.

    Independent of the pertinence shortcut: each candidate set gets a
    direct closure test over all pairs of nonzero elements.
    """
    if s.is_whole:
        raise WholeMonoid("the full monoid is its only extension")
    pf = sorted(pf_bruteforce(s))
    if len(pf) > MAX_ORACLE_TYPE:
        raise TypeTooLarge(f"type {len(pf)} exceeds the oracle guard")
    f = s.frobenius
    base = set(s.small_elements)
    out = []
    for mask in range(1 << len(pf)):
        cand = base | {pf[i] for i in range(len(pf)) if mask >> i & 1}
        nonzero = sorted(x for x in cand if 0 < x <= f)
        closed = True
        for ia, a in enumerate(nonzero):
            for b in nonzero[ia:]:
                if a + b > f:
                    break
                if a + b not in cand:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(from_gaps(set(range(1, f + 1)) - cand))
    out.sort(key=lambda d: (-d.genus, d.min_generators))
    return out


def min_ichain_bfs(s: NumericalSemigroup) -> int:
    """Length of the shortest i-chain from s to the full monoid."""
    if s.genus > MAX_BFS_GENUS:
        raise GenusTooLarge(
            f"genus {s.genus} exceeds the BFS guard {MAX_BFS_GENUS}")
    dist = {s: 0}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        if cur.is_whole:
            return dist[cur]
        for nb in ideal_extensions(cur):
            if nb != cur and nb not in dist:
                dist[nb] = dist[cur] + 1
                queue.append(nb)
    raise RuntimeError("the full monoid must be reachable")


def pf_gap_search(max_genus: int) -> list[tuple[NumericalSemigroup, int, int]]:
    """Semigroups where iterating the full PF selection overshoots.

    Returns (s, complexity, mu_pf) triples with mu_pf > complexity, in
    catalog order.
    """
    out = []
    for s in enumerate_by_genus(max_genus).semigroups:
        if s.is_whole:
            continue
        c = complexity(s)
        steps = mu(ThetaMap.PF, s)
        if steps > c:
            out.append((s, c, steps))
    return out


# -- certification passes, each returns None or a counterexample report ----

def check_pf(catalog: GenusCatalog) -> str | None:
    """pseudo_frobenius against the definitional scan."""
    for s in catalog.semigroups:
        if s.is_whole:
            continue
        fast = set(s.pseudo_frobenius())
        slow = pf_bruteforce(s)
        if fast != slow:
            return f"pf mismatch at {s}: fast={sorted(fast)} brute={sorted(slow)}"
    return None


def check_extensions(catalog: GenusCatalog) -> str | None:
    """Pertinent-subset extensions against the closure-filter scan."""
    for s in catalog.semigroups:
        if s.is_whole:
            continue
        fast = ideal_extensions(s)
        slow = extensions_bruteforce(s)
        if fast != slow:
            return (f"extensions mismatch at {s}: "
                    f"fast={[str(d) for d in fast]} brute={[str(d) for d in slow]}")
    return None


def check_complexity(catalog: GenusCatalog) -> str | None:
    """⌊F/m⌋+1 against the gamma chain and against BFS shortest chains."""
    for s in catalog.semigroups:
        c = complexity(s)
        steps = mu(ThetaMap.GAMMA, s)
        if c != steps:
            return f"complexity mismatch at {s}: closed-form={c} gamma-chain={steps}"
        if s.genus <= min(catalog.max_genus, MAX_BFS_GENUS):
            shortest = min_ichain_bfs(s)
            if c != shortest:
                return f"complexity mismatch at {s}: closed-form={c} bfs={shortest}"
    return None


def check_tree(catalog: GenusCatalog) -> str | None:
    """Tree enumeration against the catalog, on fully covered classes.

    A semigroup with multiplicity m and complexity c has genus at most
    c(m−1), so the catalog covers the whole (m, c) class whenever
    c(m−1) ≤ max_genus.
    """
    gmax = catalog.max_genus
    by_class: dict[tuple[int, int], list[NumericalSemigroup]] = {}
    for s in catalog.semigroups:
        if s.is_whole:
            continue
        by_class.setdefault((s.multiplicity, complexity(s)), []).append(s)
    for m in range(2, gmax + 2):
        c = 1
        while c * (m - 1) <= gmax:
            expected = sorted(by_class.get((m, c), []),
                              key=lambda s: s.min_generators)
            got = enumerate_semigroups(m, c)
            if got != expected:
                return (f"tree mismatch at m={m} c={c}: "
                        f"tree={[str(s) for s in got]} "
                        f"catalog={[str(s) for s in expected]}")
            c += 1
    return None


CHECKS = {
    "pf": check_pf,
    "ext": check_extensions,
    "complexity": check_complexity,
    "tree": check_tree,
}
