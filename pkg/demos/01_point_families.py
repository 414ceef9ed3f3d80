"""Build each point-set family and inspect its order type.

All coordinates are exact rationals; every constructor re-checks the order
type it promises, so what prints here is certified, not sampled.
"""

from ncmatch import (
    Direction,
    Parity,
    double_zigzag,
    is_high_above,
    make_chain,
    make_rchain,
    make_zigzag,
)
from ncmatch.geometry import orientation, to_json_dict

# A downward chain is convex: every x-sorted triple turns counterclockwise.
chain = make_chain(5, Direction.DOWNWARD)
print(chain.label, "->", [tuple(map(str, p)) for p in chain.points])
print("first triple:", orientation(*chain.points[:3]).name)

# Lifting every second interior point turns exactly those triples clockwise.
zz = make_zigzag(7, Parity.EVEN)
ups = [
    (i, i + 1, i + 2)
    for i in range(5)
    if orientation(zz[i], zz[i + 1], zz[i + 2]).name == "CW"
]
print(zz.label, "upward triples at:", ups)

# An r-chain glues concave arcs corner to corner; three points are concave
# exactly when they share an arc.
ch = make_rchain(4, 3, corners=True)
print(ch.label, "has", len(ch), "points")
ch_star = make_rchain(4, 3, corners=False)
print(ch_star.label, "has", len(ch_star), "points")

# A double construction puts a copy high above its reflection: every upper
# point clears every lower chord and vice versa.
dz = double_zigzag(12)
print(dz.points.label, "high above holds:", is_high_above(dz.upper_set(), dz.lower_set()))

# Point sets serialize losslessly as numerator/denominator quadruples.
print("JSON:", to_json_dict(make_chain(3))["points"])
