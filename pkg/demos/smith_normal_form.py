"""Exact Smith normal form and cokernels, with a second opinion.

Run with: python demos/smith_normal_form.py
"""

from dehnkit import (
    IntegerMatrix,
    cokernel,
    minors_gcd_oracle,
    smith_normal_form,
)

m = IntegerMatrix([
    [2, 4, 4],
    [-6, 6, 12],
    [10, 4, 16],
])

print("-- input --")
print(m)

snf = smith_normal_form(m)
print()
print("-- diagonal form d = u * m * v --")
print(snf.d)
print(f"  diagonal {snf.diagonal}, each entry dividing the next")
print(f"  det u = {snf.u.det()}, det v = {snf.v.det()}")
assert snf.u * m * snf.v == snf.d

print()
print("-- cokernel --")
group = cokernel(m)
print(f"  Z^3 / rowspan = {group}")
print(f"  gcd-of-minors oracle agrees: {minors_gcd_oracle(m) == group}")

# a divisibility chain is forced even when the input is already
# diagonal: diag(2, 3) is not in normal form, diag(1, 6) is
d23 = IntegerMatrix([[2, 0], [0, 3]])
print()
print(f"-- diag(2,3) renormalizes to {smith_normal_form(d23).diagonal} --")
print(f"  cokernel {cokernel(d23)} (one cyclic factor, not two)")

print()
print("-- arbitrary precision is free --")
big = IntegerMatrix([[10 ** 40, 1], [1, 10 ** 40]])
print(f"  det of a 2x2 with 10^40 entries: {big.det()}")
print(f"  diagonal: {smith_normal_form(big).diagonal}")

print()
print("-- documents --")
doc = m.to_doc()
print(f"  matrices serialize with string entries: {doc['entries'][0]}")
assert IntegerMatrix.from_doc(doc) == m
