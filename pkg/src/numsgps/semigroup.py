"""Numerical semigroups and their classical invariants.

A numerical semigroup is a set S of nonnegative integers that contains 0,
is closed under addition and leaves out only finitely many integers (the
*gaps*).  The largest gap is the Frobenius number F(S), the number of gaps
is the genus g(S), and the smallest nonzero member is the multiplicity
m(S).  The full monoid of nonnegative integers has no gaps; by convention
its Frobenius number is -1.

Every instance is canonical and immutable: it stores the unique minimal
generating set plus the sorted list of *small elements*, the members not
exceeding F(S)+1.  Membership above that range is trivially true, and no
operation in this package ever needs to look past F(S) + 2 m(S), so the
small-element table is a complete representation.  Two instances compare
equal exactly when their minimal generating sets agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    FrobeniusTooLarge,
    GcdNotOne,
    NotAMember,
    NotASemigroup,
    WholeMonoid,
)

# Inputs whose Frobenius number would pass this are refused outright;
# everything downstream is exhaustive and infeasible long before it.
MAX_FROBENIUS = 1 << 40


@dataclass(frozen=True)
class AperySet:
    """The least member of each residue class modulo a nonzero member.

    ``elements[i]`` is the least member congruent to i (mod ``modulus``),
    so ``elements[0]`` is always 0 and there are exactly ``modulus`` entries.
    """

    modulus: int
    elements: tuple[int, ...]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)


class NumericalSemigroup:
    """A numerical semigroup in canonical form.

    Construct from generators (``NumericalSemigroup(5, 7)`` or
    ``NumericalSemigroup([5, 7])``), from a gap set (:meth:`from_gaps`),
    or by parsing a literal like ``"<5,7>"`` (:meth:`parse`).

    Attributes
    ----------
    min_generators : tuple of int, the unique minimal generating set
    small_elements : tuple of int, all members <= frobenius + 1
    frobenius : int, largest gap (-1 for the full monoid)
    genus : int, number of gaps
    multiplicity : int, smallest nonzero member
    """

    __slots__ = (
        "min_generators",
        "small_elements",
        "frobenius",
        "genus",
        "multiplicity",
        "_members",
        "_pf",
    )

    def __init__(self, *generators):
        if len(generators) == 1 and not isinstance(generators[0], int):
            generators = tuple(generators[0])
        src = _from_generators(generators)
        for name in ("min_generators", "small_elements", "frobenius",
                     "genus", "multiplicity", "_members"):
            object.__setattr__(self, name, getattr(src, name))
        object.__setattr__(self, "_pf", None)

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_generators(cls, generators) -> "NumericalSemigroup":
        """The semigroup generated by ``generators`` (need not be minimal)."""
        return _from_generators(tuple(generators))

    @classmethod
    def from_gaps(cls, gaps) -> "NumericalSemigroup":
        """The semigroup whose gap set is exactly ``gaps``.

        Raises NotASemigroup (with a witness pair) if the complement of
        ``gaps`` is not closed under addition.
        """
        gapset = set(gaps)
        for x in gapset:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"gaps must be positive integers, got {x!r}")
        if not gapset:
            return WHOLE
        upper = max(gapset) + 1
        members = {x for x in range(upper + 1) if x not in gapset}
        return _build(members, upper)

    @classmethod
    def parse(cls, text: str) -> "NumericalSemigroup":
        """Parse a semigroup literal: ``<5,6,8,9>``, ``[ 5, 6 ]`` or bare ``5,6``."""
        body = text.strip()
        if (body.startswith("<") and body.endswith(">")) or \
                (body.startswith("[") and body.endswith("]")):
            body = body[1:-1]
        parts = [p.strip() for p in body.split(",")]
        if not parts or any(not p for p in parts):
            raise ValueError(f"invalid semigroup literal: {text!r}")
        try:
            gens = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"invalid semigroup literal: {text!r}") from None
        return _from_generators(tuple(gens))

    # -- membership ----------------------------------------------------

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and x >= 0 and (x > self.frobenius or x in self._members)

    def contains(self, x: int) -> bool:
        """True iff x is a member (negative x never is)."""
        return x in self

    def elements(self, limit: int):
        """Iterate the members x with 0 <= x <= limit in increasing order."""
        for x in range(limit + 1):
            if x in self:
                yield x

    @property
    def gaps(self) -> tuple[int, ...]:
        """All positive integers outside the semigroup, in increasing order."""
        return tuple(x for x in range(1, self.frobenius + 1) if x not in self._members)

    @property
    def is_whole(self) -> bool:
        """True iff this is the full monoid of nonnegative integers."""
        return self.frobenius == -1

    @property
    def is_ordinary(self) -> bool:
        """True iff the semigroup is {0, m, m+1, ...} for some m >= 2."""
        return self.frobenius == self.multiplicity - 1 and not self.is_whole

    def issubset(self, other: "NumericalSemigroup") -> bool:
        """True iff every member of self is a member of other."""
        return all(g not in self for g in other.gaps)

    # -- classical invariants -------------------------------------------

    def apery_set(self, n: int) -> AperySet:
        """The least member of each residue class mod n, for a nonzero member n."""
        if n <= 0 or n not in self:
            raise NotAMember(f"{n} is not a nonzero member of {self}")
        least: list[int | None] = [None] * n
        found = 0
        x = 0
        while found < n:
            if least[x % n] is None and x in self:
                least[x % n] = x
                found += 1
            x += 1
        return AperySet(n, tuple(least))

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """The gaps x with x + s a member for every nonzero member s.

        Computed as w - m over the maximal Apery elements w of the
        multiplicity m under the partial order a <= b iff b - a in S.
        """
        if self.is_whole:
            raise WholeMonoid("the full monoid has no pseudo-Frobenius numbers")
        if self._pf is None:
            m = self.multiplicity
            ap = self.apery_set(m).elements
            maximals = [w for w in ap
                        if not any(w2 != w and (w2 - w) in self for w2 in ap)]
            object.__setattr__(self, "_pf", tuple(sorted(w - m for w in maximals)))
        return self._pf

    def leq(self, a: int, b: int) -> bool:
        """The semigroup partial order: a <= b iff b - a is a member."""
        return (b - a) in self

    # -- derived semigroups ----------------------------------------------

    def adjoin(self, extra) -> "NumericalSemigroup":
        """The semigroup obtained by filling in the gaps in ``extra``.

        Raises NotASemigroup if the enlarged set is not closed.
        """
        extra = set(extra)
        if any(not isinstance(x, int) or x < 0 for x in extra):
            raise ValueError("adjoined elements must be nonnegative integers")
        members = set(self.small_elements) | {x for x in extra if x <= self.frobenius}
        return _build(members, max(self.frobenius + 1, 1))

    def without(self, removed) -> "NumericalSemigroup":
        """The semigroup obtained by deleting the nonzero members ``removed``.

        Raises NotASemigroup if deleting them breaks closure.
        """
        removed = set(removed)
        if not removed:
            return self
        for x in removed:
            if not isinstance(x, int) or x < 1 or x not in self:
                raise ValueError(f"can only remove nonzero members, got {x!r}")
        upper = max(self.frobenius + 1, max(removed) + 1)
        members = {x for x in range(upper + 1) if x in self} - removed
        return _build(members, upper)

    # -- canonical form ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_generators == other.min_generators

    def __hash__(self) -> int:
        return hash(self.min_generators)

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.min_generators) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self})"

    def to_dict(self) -> dict:
        """JSON-ready summary of the semigroup and its invariants."""
        return {
            "generators": list(self.min_generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "small_elements": list(self.small_elements),
            "pf": None if self.is_whole else list(self.pseudo_frobenius()),
        }


# -- module-level operation aliases ---------------------------------------

def from_generators(generators) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(generators)


def from_gaps(gaps) -> NumericalSemigroup:
    return NumericalSemigroup.from_gaps(gaps)


def contains(s: NumericalSemigroup, x: int) -> bool:
    return x in s


def apery_set(s: NumericalSemigroup, n: int) -> AperySet:
    return s.apery_set(n)


def pseudo_frobenius(s: NumericalSemigroup) -> tuple[int, ...]:
    return s.pseudo_frobenius()


def leq_s(s: NumericalSemigroup, a: int, b: int) -> bool:
    return s.leq(a, b)


def type_of(s: NumericalSemigroup) -> int:
    """The number of pseudo-Frobenius numbers (always <= multiplicity - 1)."""
    return len(s.pseudo_frobenius())


# -- construction internals -------------------------------------------------

def _new_instance(msg, small, frob, genus, mult) -> NumericalSemigroup:
    s = object.__new__(NumericalSemigroup)
    object.__setattr__(s, "min_generators", msg)
    object.__setattr__(s, "small_elements", small)
    object.__setattr__(s, "frobenius", frob)
    object.__setattr__(s, "genus", genus)
    object.__setattr__(s, "multiplicity", mult)
    object.__setattr__(s, "_members", frozenset(small))
    object.__setattr__(s, "_pf", None)
    return s


def _from_generators(generators) -> NumericalSemigroup:
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("at least one generator is required")
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"generators must be positive integers, got {g!r}")
    d = 0
    for g in gens:
        d = gcd(d, g)
    if d != 1:
        raise GcdNotOne(f"gcd of generators is {d}, not 1")
    if gens[0] == 1:
        return WHOLE
    m = gens[0]
    member = [True]
    run = 0
    i = 0
    while run < m:
        i += 1
        if i - m > MAX_FROBENIUS:
            raise FrobeniusTooLarge(
                f"Frobenius number of <{','.join(map(str, gens))}> exceeds {MAX_FROBENIUS}")
        is_member = any(g <= i and member[i - g] for g in gens)
        member.append(is_member)
        run = run + 1 if is_member else 0
    frob = i - m
    members = {x for x in range(frob + 2) if member[x]}
    return _build(members, frob + 1)


def _build(members: set[int], upper: int) -> NumericalSemigroup:
    """Canonicalize a member set given explicitly up to ``upper``.

    Every integer above ``upper`` is an implicit member.  Validates
    additive closure and raises NotASemigroup with a witness pair.
    """
    frob = -1
    for x in range(upper, 0, -1):
        if x not in members:
            frob = x
            break
    if frob == -1:
        return WHOLE
    small = tuple(x for x in range(frob + 2) if x == frob + 1 or x in members)
    if small[0] != 0:
        raise NotASemigroup("0 must be a member")
    mult = small[1]
    nonzero = small[1:-1]  # nonzero members <= frobenius
    memberset = set(small)
    for ia, a in enumerate(nonzero):
        for b in nonzero[ia:]:
            total = a + b
            if total > frob:
                break
            if total not in memberset:
                raise NotASemigroup(
                    f"not closed under addition: {a} + {b} = {total} is missing",
                    witness=(a, b))
    genus = (frob + 1) - (len(small) - 1)
    msg = _minimal_generators(memberset, frob, mult)
    return _new_instance(msg, small, frob, genus, mult)


def _minimal_generators(memberset: set[int], frob: int, mult: int) -> tuple[int, ...]:
    """Members of [m, F+m] that are not a sum of two nonzero members.

    A sum decomposition s = a + b with m <= a <= b forces a <= s - m <= F,
    so scanning witnesses a over the small nonzero members is exhaustive.
    """
    def is_member(x):
        return x > frob or x in memberset

    nonzero = [a for a in sorted(memberset) if 0 < a <= frob]
    msg = []
    for s in range(mult, frob + mult + 1):
        if not is_member(s):
            continue
        if any(a <= s - mult and is_member(s - a) for a in nonzero):
            continue
        msg.append(s)
    return tuple(msg)


#: The full monoid of nonnegative integers, printed as <1>.
WHOLE = _new_instance((1,), (0, 1), -1, 0, 1)
