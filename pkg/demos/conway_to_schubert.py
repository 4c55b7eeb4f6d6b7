"""From Conway words to Schubert normal forms.

A rational tangle C(a_1, ..., a_k) closes to a two-bridge link whose
exact continued fraction determines everything: the classifying pair
S(p, q), the number of components, and whether the double branched
cover (a lens space) is achiral.

Run with: python demos/conway_to_schubert.py
"""

from dehnkit import (
    ConwayWord,
    SchubertForm,
    continued_fraction,
    family_polynomials,
    family_schubert,
    family_word,
    is_achiral_lens,
    schubert_equivalent,
)

print("-- evaluating words --")
for entries in [(2, 2, -1, 2, 2), (5,), (3, 3, -1, 3, 3), (-1,) * 5]:
    word = ConwayWord(entries)
    s = continued_fraction(word)
    form = SchubertForm.from_slope(s)
    kind = "knot" if form.is_knot else "2-component link"
    print(f"  {str(word):<22} -> {str(s):>6} -> {form}  ({kind})")

print()
print("-- mirrors --")
word = ConwayWord((2, 2, -1, 2, 2))
print(f"  {word} evaluates to {continued_fraction(word)}")
print(f"  {word.mirror()} evaluates to "
      f"{continued_fraction(word.mirror())}")
form = SchubertForm(5, 2)
print(f"  mirror of {form} is {form.mirror()}; "
      f"equivalent to itself: {schubert_equivalent(form, form.mirror())}")
print(f"  so S(5,2) is achiral: {is_achiral_lens(form)}")
print(f"  while S(5,1) is achiral: {is_achiral_lens(SchubertForm(5, 1))}")

print()
print("-- the one-parameter family C(n, n, -1, n, n) --")
print(f"  {'n':>3}  {'word':<24} {'S(p,q)':<14} parity")
for n in [2, 3, 4, -1, -2, 10]:
    form = family_schubert(n)
    p, q = family_polynomials(n)
    # the continued fraction lands exactly on the closed forms
    # p(n) = (n-1)^2 (n^2+1),  q(n) = n^3 - 2n^2 + n - 1
    assert form.p == p and form.q == q % p
    parity = "knot" if form.is_knot else "link"
    print(f"  {n:>3}  {str(family_word(n)):<24} {str(form):<14} {parity}")

print()
print("  every member is chiral: q(n)^2 is 1 mod p(n), never -1")
for n in [2, 3, -1]:
    p, q = family_polynomials(n)
    print(f"    n={n:>2}: q^2 = {q * q} = {q * q % p} mod {p}")
