"""Conway words, continued fractions, and Schubert normal forms.

A rational tangle is encoded by a Conway word C(a_1, ..., a_k) of
nonzero twist counts.  Its closure is the two-bridge link whose
fraction is the continued fraction

    1 / (a_1 + 1 / (a_2 + ... + 1 / a_k))

evaluated exactly.  Writing that fraction as q/p gives the Schubert
normal form S(p, q) with 0 <= q < p, which classifies the link: S(p, q)
and S(p, q') are isotopic iff q' is congruent to q or to the inverse of
q mod p.  The same pair classifies the lens space double branched over
the link, which is how the achirality test below is phrased.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .slopes import Slope


class TangleError(ValueError):
    """Raised for ill-formed Conway words or impossible evaluations."""


@dataclass(frozen=True)
class ConwayWord:
    """A tuple of twist counts C(a_1, ..., a_k)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise TangleError("a Conway word needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "ConwayWord":
        """Parse 'a1,a2,...' or whitespace-separated entries."""
        parts = text.replace(",", " ").split()
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError:
            raise TangleError(f"cannot parse Conway word from {text!r}") from None

    def mirror(self) -> "ConwayWord":
        """Mirror image: negate every twist count."""
        return ConwayWord(tuple(-a for a in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "C(" + ", ".join(str(a) for a in self.entries) + ")"


def continued_fraction(word) -> Slope:
    """Evaluate a Conway word to the slope of its tangle closure.

    Works from the innermost entry outward: the running value of the
    tail a_i + 1/(a_{i+1} + ...) is kept as an exact pair.  If a proper
    tail evaluates to zero the next step would divide by zero and the
    word does not describe a tangle; the error names the offending
    suffix.  A zero value of the whole bracket is fine, the result is
    then the slope 1/0.
    """
    if not isinstance(word, ConwayWord):
        word = ConwayWord(tuple(word))
    entries = word.entries
    num, den = entries[-1], 1
    for i in range(len(entries) - 2, -1, -1):
        if num == 0:
            tail = ", ".join(str(a) for a in entries[i + 1:])
            raise TangleError(
                f"suffix ({tail}) of {word} evaluates to 0; "
                "cannot take its reciprocal"
            )
        num, den = entries[i] * num + den, num
    # the closure fraction is the reciprocal of the bracket value
    return Slope(den, num)


@dataclass(frozen=True)
class SchubertForm:
    """Normal form S(p, q) with p >= 1, 0 <= q < p, gcd(p, q) = 1.

    S(1, 0) is the unknot.  For p > 1, q determines the link up to the
    congruence q' == q or q*q' == 1 (mod p).
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise TangleError(f"Schubert p must be positive, got {self.p}")
        if not 0 <= self.q < self.p:
            raise TangleError(
                f"Schubert q must satisfy 0 <= q < p, got S({self.p}, {self.q})"
            )
        if self.p > 1 and gcd(self.p, self.q) != 1:
            raise TangleError(
                f"S({self.p}, {self.q}) is not reduced: gcd = {gcd(self.p, self.q)}"
            )

    @classmethod
    def from_slope(cls, s: Slope) -> "SchubertForm":
        """Normal form of the two-bridge closure with fraction q/p = s.

        The slope's denominator becomes p and its numerator is reduced
        mod p.  The meridian 1/0 corresponds to the two-component
        unlink, which has no Schubert normal form.
        """
        if s.q == 0:
            raise TangleError(
                "fraction 1/0 closes to the 2-component unlink, "
                "which has no Schubert normal form"
            )
        return cls(s.q, s.p % s.q)

    @property
    def components(self) -> int:
        """1 for a knot (p odd), 2 for a two-component link (p even)."""
        return 1 if self.p % 2 == 1 else 2

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    def mirror(self) -> "SchubertForm":
        """Mirror image S(p, -q mod p)."""
        return SchubertForm(self.p, (-self.q) % self.p)

    def __str__(self):
        return f"S({self.p},{self.q})"


def schubert_equivalent(a: SchubertForm, b: SchubertForm) -> bool:
    """Isotopy test: same p, and q' == q or q*q' == 1 (mod p)."""
    if a.p != b.p:
        return False
    if a.p <= 2:
        # S(1,0) and S(2,1) are alone in their class
        return True
    return b.q == a.q or (a.q * b.q) % a.p == 1


def lens_equivalent(a: SchubertForm, b: SchubertForm) -> bool:
    """Unoriented equivalence: isotopic to b or to the mirror of b."""
    return schubert_equivalent(a, b) or schubert_equivalent(a, b.mirror())


def is_achiral_lens(a: SchubertForm) -> bool:
    """Whether S(p, q) equals its own mirror, i.e. q^2 == -1 (mod p).

    Equivalently the lens space branched over the link admits an
    orientation-reversing self-map.  For p <= 2 this always holds.
    """
    if a.p <= 2:
        return True
    return (a.q * a.q + 1) % a.p == 0


# ----------------------------------------------------------------------
# the one-parameter family C(n, n, -1, n, n)
# ----------------------------------------------------------------------

def family_polynomials(n: int) -> tuple[int, int]:
    """The pair (p, q) with C(n, n, -1, n, n) evaluating to q/p.

    p(n) = n^4 - 2n^3 + 2n^2 - 2n + 1 = (n - 1)^2 (n^2 + 1)
    q(n) = n^3 - 2n^2 + n - 1

    These are coprime for every integer n: p - n*q = n^2 - n + 1, and
    the Euclidean chain from (q, n^2 - n + 1) terminates at 1.
    """
    p = (n - 1) ** 2 * (n * n + 1)
    q = n ** 3 - 2 * n * n + n - 1
    return p, q


def family_word(n: int) -> ConwayWord:
    """The Conway word C(n, n, -1, n, n).

    n = 0 and n = 1 are excluded: the first has zero twist counts and
    the second collapses to the unknot (p(1) = 0).
    """
    if n in (0, 1):
        raise TangleError(f"family parameter n = {n} is degenerate")
    return ConwayWord((n, n, -1, n, n))


def family_schubert(n: int) -> SchubertForm:
    """Schubert normal form of the closure of C(n, n, -1, n, n).

    Evaluates the continued fraction and checks the result against the
    closed-form polynomials before reducing q mod p.
    """
    word = family_word(n)
    s = continued_fraction(word)
    p, q = family_polynomials(n)
    # p(n) > 0 for n != 1 and the slope denominator is normalized
    # positive, so the match must be exact
    assert (s.q, s.p) == (p, q), (n, s)
    return SchubertForm.from_slope(s)
