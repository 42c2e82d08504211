"""Ideal extensions of a numerical semigroup.

Delta is an ideal extension of S when the nonzero part of S is an ideal
of Delta, i.e. S ⊆ Delta and s + d ∈ S∖{0} for every nonzero s ∈ S and
d ∈ Delta.  That holds exactly when S ⊆ Delta ⊆ S ∪ PF(S), so every
extension is S ∪ A for a subset A of the pseudo-Frobenius numbers, and
S ∪ A is itself a semigroup exactly when A is *pertinent*: any sum of
two of its members that misses S (such a sum is always another
pseudo-Frobenius number) must fall back into A.  Enumerating the
pertinent subsets of PF(S) therefore enumerates all extensions; there
are at most 2^t of them, t the type of S.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import TypeTooLarge, WholeMonoid
from .semigroup import WHOLE, NumericalSemigroup

# pertinent_sets walks all 2^t subsets of PF(S); refuse absurd types
MAX_TYPE = 25


@dataclass(frozen=True)
class PertinentSet:
    """A subset of PF(base) whose union with base is again a semigroup."""

    base: NumericalSemigroup
    members: tuple[int, ...]

    def extension(self) -> NumericalSemigroup:
        """The semigroup base ∪ members."""
        return self.base.adjoin(self.members)


def is_pertinent(s: NumericalSemigroup, a) -> bool:
    """True iff A ⊆ PF(s) and A is closed under sums that land in PF(s).

    Equivalently, true iff s ∪ A is a numerical semigroup.  Sums with
    a = b count: if 2a misses s it must be back in A as well.
    """
    if s.is_whole:
        raise WholeMonoid("pertinence is undefined for the full monoid")
    a = set(a)
    pf = set(s.pseudo_frobenius())
    if not a <= pf:
        return False
    for x in a:
        for y in a:
            if y < x:
                continue
            total = x + y
            if total in pf and total not in a:
                return False
    return True


def pertinent_sets(s: NumericalSemigroup) -> list[PertinentSet]:
    """All pertinent subsets of PF(s), sorted by size then lexicographically."""
    if s.is_whole:
        raise WholeMonoid("pertinence is undefined for the full monoid")
    pf = s.pseudo_frobenius()
    t = len(pf)
    if t > MAX_TYPE:
        raise TypeTooLarge(f"type {t} exceeds the 2^{MAX_TYPE} enumeration guard")
    pfset = set(pf)
    found = []
    for mask in range(1 << t):
        subset = [pf[i] for i in range(t) if mask >> i & 1]
        chosen = set(subset)
        ok = True
        for ix, x in enumerate(subset):
            for y in subset[ix:]:
                total = x + y
                if total in pfset and total not in chosen:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(subset))
    found.sort(key=lambda ms: (len(ms), ms))
    return [PertinentSet(s, ms) for ms in found]


def ideal_extensions(s: NumericalSemigroup, proper: bool = False) -> list[NumericalSemigroup]:
    """All ideal extensions of s, i.e. {s ∪ A : A pertinent}.

    Includes s itself (A = ∅) unless ``proper`` is set.  Sorted by genus
    descending then msg lexicographic, so s comes first and the largest
    extension s ∪ PF(s) last.
    """
    out = [p.extension() for p in pertinent_sets(s)]
    if proper:
        out = [d for d in out if d != s]
    out.sort(key=lambda d: (-d.genus, d.min_generators))
    return out


def is_ideal_extension(s: NumericalSemigroup, delta: NumericalSemigroup) -> bool:
    """True iff s ⊆ delta ⊆ s ∪ PF(s).

    For the full monoid the only extension is the monoid itself.
    """
    if s.is_whole:
        return delta.is_whole
    if not s.issubset(delta):
        return False
    pf = set(s.pseudo_frobenius())
    return all(g in pf for g in s.gaps if g in delta)
