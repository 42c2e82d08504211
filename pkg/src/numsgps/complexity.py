"""Chains of ideal extensions and the complexity of a numerical semigroup.

An i-chain climbs from S to the full monoid through ideal-extension
steps.  The *complexity* C(S) is the least possible chain length; it has
the closed form ⌊F(S)/m(S)⌋ + 1, with C = 0 reserved for the full monoid
itself.  Repeatedly enlarging S by a pertinent selection θ(S) of its
gaps always reaches the full monoid in finitely many steps; μ(θ,S)
counts those steps and is bounded below by C(S).

Seven selections are provided.  Six pick pseudo-Frobenius numbers in
various ways; the seventh, gamma, picks every gap in the top block
[⌊F/m⌋·m, F] and is optimal: iterating it realizes a chain of length
exactly C(S), dropping the complexity by one per step.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import WholeMonoid
from .extensions import is_ideal_extension
from .semigroup import NumericalSemigroup


class ThetaMap(Enum):
    """Named pertinent selections of gaps; values are the CLI tokens."""

    PF = "pf"
    FROBENIUS_ONLY = "frob"
    UPPER_HALF_PF = "upperhalf"
    ABOVE_F_MINUS_M = "above-f-m"
    ABOVE_F_MINUS_G = "above-f-g"
    MIN_ABOVE_HALF_F = "min-half"
    GAMMA = "gamma"


class Classification(Enum):
    WHOLE_MONOID = "whole-monoid"
    ORDINARY = "ordinary"
    ELEMENTARY_NOT_ORDINARY = "elementary-not-ordinary"
    GENERAL = "general"


@dataclass(frozen=True)
class IChain:
    """An ascending run of semigroups ending at the full monoid."""

    links: tuple[NumericalSemigroup, ...]

    @property
    def length(self) -> int:
        return len(self.links) - 1

    def __iter__(self):
        return iter(self.links)


def theta_apply(theta: ThetaMap, s: NumericalSemigroup) -> frozenset[int]:
    """The gap selection named by ``theta``; nonempty and pertinent for s ≠ ℕ.

    Halving comparisons are done on doubled integers (2x ≥ F, 2x > F),
    never through floating point.
    """
    if s.is_whole:
        raise WholeMonoid("gap selections are undefined for the full monoid")
    f = s.frobenius
    if theta is ThetaMap.GAMMA:
        lo = (f // s.multiplicity) * s.multiplicity
        return frozenset(x for x in s.gaps if lo <= x)
    if theta is ThetaMap.FROBENIUS_ONLY:
        return frozenset({f})
    pf = s.pseudo_frobenius()
    if theta is ThetaMap.PF:
        return frozenset(pf)
    if theta is ThetaMap.UPPER_HALF_PF:
        return frozenset(x for x in pf if 2 * x >= f)
    if theta is ThetaMap.ABOVE_F_MINUS_M:
        return frozenset(x for x in pf if x > f - s.multiplicity)
    if theta is ThetaMap.ABOVE_F_MINUS_G:
        return frozenset(x for x in pf if x > f - s.genus)
    if theta is ThetaMap.MIN_ABOVE_HALF_F:
        return frozenset({min(x for x in pf if 2 * x > f)})
    raise ValueError(f"unknown selection {theta!r}")


def chain(theta: ThetaMap, s: NumericalSemigroup) -> IChain:
    """Iterate S ← S ∪ θ(S) until the full monoid; the run is an i-chain."""
    links = [s]
    cur = s
    while not cur.is_whole:
        if len(links) > s.genus + 1:
            # each step strictly shrinks the gap set, so this cannot happen
            raise RuntimeError(f"selection {theta} failed to terminate on {s}")
        cur = cur.adjoin(theta_apply(theta, cur))
        links.append(cur)
    return IChain(tuple(links))


def mu(theta: ThetaMap, s: NumericalSemigroup) -> int:
    """Number of θ-steps from s to the full monoid; at least complexity(s)."""
    return chain(theta, s).length


def complexity(s: NumericalSemigroup) -> int:
    """⌊F(S)/m(S)⌋ + 1, the minimal i-chain length; 0 for the full monoid."""
    if s.is_whole:
        return 0
    return s.frobenius // s.multiplicity + 1


def classify(s: NumericalSemigroup) -> Classification:
    """Complexity class: 0 whole monoid, 1 ordinary, 2 elementary, else general."""
    if s.is_whole:
        return Classification.WHOLE_MONOID
    if s.is_ordinary:
        return Classification.ORDINARY
    if s.frobenius < 2 * s.multiplicity:
        return Classification.ELEMENTARY_NOT_ORDINARY
    return Classification.GENERAL


def validate_chain(links) -> bool:
    """True iff consecutive links are ideal extensions and the last is ℕ."""
    links = list(links)
    if not links or not links[-1].is_whole:
        return False
    return all(is_ideal_extension(a, b) for a, b in zip(links, links[1:]))
