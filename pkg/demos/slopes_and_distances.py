"""Slopes on the torus: normalization, distance, coordinate changes.

Run with: python demos/slopes_and_distances.py
"""

from dehnkit import (
    AXIS_SWAP,
    LONGITUDE,
    MERIDIAN,
    Slope,
    SlopeInvolution,
    canonical_slopes,
    distance,
    fixed_slopes,
)

print("-- canonical representatives --")
for raw in [(2, 4), (-3, 0), (5, -10), (-2, -4)]:
    print(f"  {raw[0]:>3}/{raw[1]:<3} normalizes to {Slope(*raw)}")

print()
print("-- distances --")
print(f"  d(1/0, 0/1) = {distance(MERIDIAN, LONGITUDE)}   (a basis pair)")
for s in [Slope(1, 1), Slope(2, 3), Slope(5, 7)]:
    d = distance(s, -s)
    print(f"  d({s}, {-s}) = {d} = 2|pq|, even as it must be")
    assert d == 2 * abs(s.p * s.q)

# the evenness is the point: a slope and its negative can never form a
# basis, so no single filling can undo the sign flip
print()
print("-- the axis swap (0,1;1,0) --")
print(f"  swap is an involution: {AXIS_SWAP.is_involution()}")
print(f"  swap(1/0) = {AXIS_SWAP.apply(MERIDIAN)}")
print(f"  swap(2/3) = {AXIS_SWAP.apply(Slope(2, 3))}")

fixed = fixed_slopes(AXIS_SWAP, 100)
print(f"  slopes fixed by the swap, |p|,|q| <= 100: "
      f"{', '.join(str(s) for s in fixed)}")
assert fixed == [Slope(-1, 1), Slope(1, 1)]

print()
print("-- a non-involution for contrast --")
shear = SlopeInvolution(1, 1, 0, 1)
print(f"  shear (1,1;0,1) is an involution: {shear.is_involution()}")
moved = [s for s in canonical_slopes(3) if shear.apply(shear.apply(s)) != s]
print(f"  slopes with |p|,|q| <= 3 moved by shear^2: {len(moved)}")
print(f"  fixed slopes of the shear: "
      f"{', '.join(str(s) for s in fixed_slopes(shear, 20))}")
