"""Exact arithmetic with slopes on a torus.

A slope is an isotopy class of unoriented essential simple closed curves
on a torus.  After fixing a meridian-longitude basis it is recorded as a
reduced fraction p/q, where the meridian itself is 1/0.  Because curves
are unoriented, p/q and (-p)/(-q) are the same slope; the canonical
representative has q > 0, or is exactly 1/0.

All arithmetic is exact.  Numerators and denominators are plain Python
integers, never floats, so nothing here overflows or rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SlopeError(ValueError):
    """Raised for input that does not describe a slope or a basis change."""


@dataclass(frozen=True, order=True)
class Slope:
    """A slope p/q in lowest terms with q > 0, or the meridian 1/0.

    The constructor accepts any pair (p, q) != (0, 0) and normalizes it,
    so Slope(-2, -4) == Slope(1, 2) and Slope(-3, 0) == Slope(1, 0).
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise SlopeError("0/0 does not determine a slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'p/q' or a bare integer 'p' (meaning p/1)."""
        s = text.strip()
        try:
            if "/" in s:
                a, b = s.split("/")
                return cls(int(a), int(b))
            return cls(int(s), 1)
        except SlopeError:
            raise
        except ValueError:
            raise SlopeError(f"cannot parse slope from {text!r}") from None

    def __str__(self):
        return f"{self.p}/{self.q}"

    def __neg__(self):
        return Slope(-self.p, self.q)

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1


MERIDIAN = Slope(1, 0)
LONGITUDE = Slope(0, 1)


def distance(s: Slope, t: Slope) -> int:
    """Geometric intersection number |p1*q2 - q1*p2| of two slopes.

    Distance 0 means equal slopes, distance 1 means the pair forms a
    basis of the torus.  Note d(s, -s) = 2|pq|, always even, so a slope
    and its negative are never a basis.
    """
    return abs(s.p * t.q - s.q * t.p)


@dataclass(frozen=True)
class SlopeInvolution:
    """An integral unimodular change of slope coordinates.

    The matrix [[a, b], [c, d]] with |ad - bc| = 1 acts on a slope p/q
    by (p, q) |-> (a*p + b*q, c*p + d*q).  Despite the name, any
    unimodular matrix is accepted; the map is an honest involution on
    slopes exactly when the matrix squares to plus or minus the
    identity, which is_involution() checks.  (Sign does not matter
    because slopes are unoriented.)
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise SlopeError(
                f"matrix [[{self.a}, {self.b}], [{self.c}, {self.d}]] "
                "is not unimodular"
            )

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, s: Slope) -> Slope:
        return Slope(self.a * s.p + self.b * s.q, self.c * s.p + self.d * s.q)

    def is_involution(self) -> bool:
        """True when the matrix squares to +Id or -Id."""
        # entries of the square; the off-diagonal ones must vanish and
        # the diagonal ones must be equal (then automatically +-1)
        m00 = self.a * self.a + self.b * self.c
        m01 = self.b * (self.a + self.d)
        m10 = self.c * (self.a + self.d)
        m11 = self.d * self.d + self.b * self.c
        return m01 == 0 and m10 == 0 and m00 == m11 and abs(m00) == 1


# exchanges the meridian and longitude coordinates
AXIS_SWAP = SlopeInvolution(0, 1, 1, 0)


def canonical_slopes(bound: int):
    """Yield every slope with |p| <= bound and 0 <= q <= bound.

    The meridian 1/0 comes first, then slopes ordered by q and p.  For
    bound 1 this is exactly 1/0, -1/1, 0/1, 1/1.
    """
    if bound < 0:
        raise SlopeError("bound must be nonnegative")
    if bound >= 1:
        yield MERIDIAN
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(p, q) == 1:
                yield Slope(p, q)


def fixed_slopes(inv: SlopeInvolution, bound: int) -> list[Slope]:
    """All slopes with |p|, |q| <= bound fixed by the coordinate change."""
    return [s for s in canonical_slopes(bound) if inv.apply(s) == s]
