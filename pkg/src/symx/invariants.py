"""Conjugacy invariants of periodic surface maps.

Two symmetries with homeomorphic quotients are conjugate exactly when the
data below agree: the canonicalized multiset of boundary and cone values
(isotropy), plus two homology refinements that only exist on
non-orientable quotients. Canonical forms are literal: invariant equality
is plain data equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numtheory import units_of
from .orbifold import SymmetryDatum, power_twist


def _entrywise(values, n) -> tuple[int, ...]:
    # each value up to sign, least representative, sorted
    return tuple(sorted(min(v % n, -v % n) for v in values))


@dataclass(frozen=True)
class IsotropyInvariant:
    modulus: int
    sign_mode: str  # "global" when the quotient is orientable, else "entrywise"
    boundary_part: tuple[int, ...]
    cone_part: tuple[int, ...]


def isotropy(d: SymmetryDatum) -> IsotropyInvariant:
    n = d.n
    if d.orientable:
        fwd = (tuple(sorted(d.boundary)), tuple(sorted(d.cones)))
        neg = (
            tuple(sorted(-v % n for v in d.boundary)),
            tuple(sorted(-v % n for v in d.cones)),
        )
        bpart, cpart = min(fwd, neg)
        return IsotropyInvariant(n, "global", bpart, cpart)
    return IsotropyInvariant(
        n, "entrywise", _entrywise(d.boundary, n), _entrywise(d.cones, n)
    )


def h1(d: SymmetryDatum) -> int | None:
    """First refinement: defined on closed non-orientable quotients with
    n/2 even and no cone value n/2. Sums the crosscap values and the cone
    values from the upper half range."""
    n = d.n
    if d.orientable or d.b > 0 or n % 4:
        return None
    if any(v == n // 2 for v in d.cones):
        return None
    total = sum(d.handles) + sum(v for v in d.cones if v > n // 2)
    return total % n


def h2(d: SymmetryDatum) -> tuple[int, tuple[int, int]] | None:
    """Second refinement: defined for two crosscaps. Reduces the crosscap
    pair mod m = gcd of (sum of crosscap values, every boundary and cone
    value, n), each entry up to sign."""
    if d.orientable or d.h != 2:
        return None
    m = gcd(sum(d.handles), *d.boundary, *d.cones, d.n)
    pair = tuple(sorted(min(v % m, -v % m) for v in d.handles))
    return m, pair


@dataclass(frozen=True)
class ConjugacyInvariant:
    n: int
    orientable: bool
    h: int
    b: int
    isotropy: IsotropyInvariant
    h1: int | None
    h2: tuple[int, tuple[int, int]] | None

    def sort_key(self):
        return (
            self.n,
            self.orientable,
            self.h,
            self.b,
            self.isotropy.sign_mode,
            self.isotropy.boundary_part,
            self.isotropy.cone_part,
            -1 if self.h1 is None else self.h1,
            (-1, (-1, -1)) if self.h2 is None else self.h2,
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "orientable": self.orientable,
            "h": self.h,
            "b": self.b,
            "isotropy": {
                "sign_mode": self.isotropy.sign_mode,
                "boundary": list(self.isotropy.boundary_part),
                "cones": list(self.isotropy.cone_part),
            },
            "h1": self.h1,
            "h2": None
            if self.h2 is None
            else {"modulus": self.h2[0], "pair": list(self.h2[1])},
        }


def conjugacy_invariant(d: SymmetryDatum) -> ConjugacyInvariant:
    return ConjugacyInvariant(d.n, d.orientable, d.h, d.b, isotropy(d), h1(d), h2(d))


def are_conjugate(d1: SymmetryDatum, d2: SymmetryDatum) -> bool:
    return conjugacy_invariant(d1) == conjugacy_invariant(d2)


def same_cyclic_group(d1: SymmetryDatum, d2: SymmetryDatum) -> bool:
    """True when d2 is conjugate to some unit power of d1, i.e. the two
    symmetries generate conjugate cyclic groups."""
    if d1.n != d2.n:
        return False
    target = conjugacy_invariant(d2)
    return any(
        conjugacy_invariant(power_twist(d1, m)) == target for m in units_of(d1.n)
    )


def twist_minimal_key(d: SymmetryDatum):
    """Least invariant sort key over all unit power twists; a total
    invariant of the cyclic group generated by the symmetry."""
    return min(
        conjugacy_invariant(power_twist(d, m)).sort_key() for m in units_of(d.n)
    )
