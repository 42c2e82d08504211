"""Self-contained reimplementations the tests use as a second route.

Deliberately naive and written without looking at the package internals:
a dynamic-programming membership table and a pairwise closure scan.
"""


def naive_members(gens, upto):
    """Members of the semigroup generated by gens, up to and including upto."""
    member = [False] * (upto + 1)
    member[0] = True
    for x in range(1, upto + 1):
        member[x] = any(g <= x and member[x - g] for g in gens)
    return {x for x, ok in enumerate(member) if ok}


def closure_witness(members, bound):
    """A pair (a, b) with a+b ≤ bound missing from members, else None.

    ``members`` describes the set together with every integer > bound.
    """
    nonzero = sorted(m for m in members if 0 < m <= bound)
    for i, a in enumerate(nonzero):
        for b in nonzero[i:]:
            if a + b > bound:
                break
            if a + b not in members:
                return (a, b)
    return None
