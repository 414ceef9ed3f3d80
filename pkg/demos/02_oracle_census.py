"""Count matchings by brute force and recover classic sequences.

The oracle enumerates every non-crossing matching of a point set with exact
geometry.  On convex sets that reproduces the Motzkin and Catalan numbers;
on a single concave arc the down-free counts are central binomials, and
runner-marked counts give binomial products.
"""

from ncmatch import (
    Direction,
    MatchKind,
    catalan,
    census,
    census_runners,
    make_chain,
    motzkin,
)

print("convex position: all matchings vs Motzkin, perfect vs Catalan")
for n in (4, 6, 8, 10):
    ps = make_chain(n)
    print(
        f"  n={n:2d}: all={census(ps, MatchKind.ALL).total:5d} (M={motzkin(n)})"
        f"   perfect={census(ps, MatchKind.PERFECT).total:3d} (C={catalan(n // 2)})"
    )

print("\nsingle concave arc: down-free matchings are central binomials")
for n in (3, 5, 7):
    arc = make_chain(n, Direction.UPWARD)
    print(f"  n={n}: {census(arc, MatchKind.DOWN_FREE).total}")

print("\nrunner census of a 5-point arc (by number of marked half-edges):")
print(" ", census_runners(make_chain(5, Direction.UPWARD)))

print("\nfree-point breakdown of down-free matchings on a 6-point chain:")
by_free = census(make_chain(6), MatchKind.DOWN_FREE).by_free
print(" ", dict(sorted(by_free.items())))
