"""Surface embeddings in lens spaces.

Predicates for which closed surfaces embed in a lens space: the two
one-sided core bounds, the small non-orientable surfaces realized near a
Klein bottle fiber, and the homology classes such embeddings must carry.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numtheory import Residue


@dataclass(frozen=True)
class LensSpace:
    l: int
    m: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("lens order must be positive")
        object.__setattr__(self, "m", self.m % self.l)
        if gcd(self.m, self.l) != 1:
            raise ValueError("lens parameters must be coprime")


def lens_homeomorphic(a: LensSpace, b: LensSpace) -> bool:
    """Classification up to homeomorphism of either orientation: equal
    order with the second parameter conjugate up to sign and inverse."""
    if a.l != b.l:
        return False
    if a.l == 1:
        return True
    inv = pow(a.m, -1, a.l)
    return b.m in {a.m, -a.m % a.l, inv, -inv % a.l}


def core_bounds(space: LensSpace) -> dict[str, bool]:
    """Which closed surfaces arise as one-sided bounds of the core:
    orientable ones only in the 3-sphere, non-orientable ones exactly at
    odd order."""
    return {
        "orientable": space.l <= 1,
        "nonorientable": space.l % 2 == 1,
    }


def parity_obstruction(space: LensSpace, crosscaps: int) -> bool:
    """Whether a closed non-orientable surface with the given number of
    crosscaps passes the homology parity test at even order."""
    return space.l % 2 == 0 and (space.l // 2 - crosscaps) % 2 == 0


def admits_projective_plane(space: LensSpace) -> bool:
    return lens_homeomorphic(space, LensSpace(2, 1))


def admits_klein_bottle(space: LensSpace) -> bool:
    if space.l % 4:
        return False
    r = space.l // 4
    return lens_homeomorphic(space, LensSpace(4 * r, 2 * r - 1)) or lens_homeomorphic(
        space, LensSpace(4 * r, 2 * r + 1)
    )


def admits_genus3(space: LensSpace) -> str:
    """"yes" when the three-crosscap surface is known to embed; the
    remaining cases are open, so they answer "unknown" rather than no."""
    if space.l % 4 == 2 and space.l >= 6:
        r = (space.l - 2) // 4
        if lens_homeomorphic(space, LensSpace(4 * r + 2, 2 * r - 1)):
            return "yes"
    return "unknown"


def torsion_image(space: LensSpace) -> Residue:
    """Torsion class carried by any embedded closed non-orientable
    surface: the unique element of order two."""
    if space.l % 2:
        raise ValueError("no embedded non-orientable closed surface")
    return Residue(space.l // 2, space.l)


def klein_homology_images(r: int) -> tuple[tuple[Residue, Residue], tuple[Residue, Residue]]:
    """The two generator images a Klein bottle embedded in L(4r, 2r-1)
    can induce on first homology, one pair per isotopy class."""
    if r < 2:
        raise ValueError("need r at least 2")
    n = 4 * r
    return (
        (Residue(1, n), Residue(2 * r - 1, n)),
        (Residue(n - 1, n), Residue(2 * r + 1, n)),
    )
