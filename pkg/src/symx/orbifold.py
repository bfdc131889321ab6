"""Quotient-orbifold data for periodic maps of closed orientable surfaces.

A SymmetryDatum records a cyclic symmetry of order n through its quotient:
the underlying surface (genus or crosscap count h, b mirror boundary
circles, s cone points) together with the values in Z_n that the
classifying epimorphism takes on a canonical generating system. Handle
generators contribute 2h values on an orientable quotient and h crosscap
values on a non-orientable one; each mirror circle contributes one loop
value, each cone point one loop value. Loops around mirror circles
implicitly carry n/2 and are not stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .numtheory import order_mod

_VALUE_FIELDS = ("handles", "boundary", "cones")


@dataclass(frozen=True)
class SymmetryDatum:
    n: int
    orientable: bool
    h: int
    handles: tuple[int, ...] = ()
    boundary: tuple[int, ...] = ()
    cones: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be a positive integer")
        if self.h < 0:
            raise ValueError("quotient genus must be nonnegative")
        want = 2 * self.h if self.orientable else self.h
        if len(self.handles) != want:
            raise ValueError(
                "expected %d handle values, got %d" % (want, len(self.handles))
            )
        for name in _VALUE_FIELDS:
            vals = getattr(self, name)
            object.__setattr__(self, name, tuple(v % self.n for v in vals))

    @property
    def b(self) -> int:
        return len(self.boundary)

    @property
    def s(self) -> int:
        return len(self.cones)

    def all_values(self) -> tuple[int, ...]:
        return self.handles + self.boundary + self.cones


def is_orientation_reversing(d: SymmetryDatum) -> bool:
    """The covering symmetry reverses orientation iff the quotient is
    non-orientable as an orbifold (non-orientable surface or mirror
    boundary present)."""
    return (not d.orientable) or d.b > 0


def validate(d: SymmetryDatum) -> list[str]:
    """Realizability check. Returns the violated rules; empty means valid.

    Structural problems (bad lengths, nonpositive order) raise from the
    constructor instead; everything here is an arithmetic condition on a
    well-formed datum.
    """
    bad = []
    total = sum(d.boundary) + sum(d.cones)
    if not d.orientable:
        total += 2 * sum(d.handles)
    if total % d.n:
        bad.append("relation sum must vanish mod n")
    if any(v == 0 for v in d.cones):
        bad.append("cone value must be nonzero")
    if not d.orientable and d.h == 0:
        bad.append("non-orientable quotient needs a crosscap")
    if d.b > 0 and d.n % 4 != 2:
        bad.append("mirror boundary requires n = 2 (mod 4)")
    if is_orientation_reversing(d):
        if d.n % 2:
            bad.append("orientation-reversing symmetry must have even order")
        if d.orientable:
            if any(v % 2 for v in d.handles):
                bad.append("handle value must be even")
        elif any(v % 2 == 0 for v in d.handles):
            bad.append("handle value must be odd")
        if any(v % 2 for v in d.boundary):
            bad.append("boundary value must be even")
        if any(v % 2 for v in d.cones):
            bad.append("cone value must be even")
    gens = [d.n, *d.all_values()]
    if d.b > 0:
        gens.append(d.n // 2)
    if gcd(*gens) != 1:
        bad.append("values must generate the cyclic group")
    try:
        euler_genus(d)
    except ValueError:
        bad.append("genus must be a nonnegative integer")
    return bad


def euler_genus(d: SymmetryDatum) -> int:
    """Genus of the covering surface, via the orbifold Euler characteristic
    and the Riemann-Hurwitz formula. Mirror circles count only through the
    underlying surface; each cone of index k removes 1 - 1/k."""
    chi_under = 2 - 2 * d.h - d.b if d.orientable else 2 - d.h - d.b
    chi = Fraction(chi_under)
    for v in d.cones:
        k = order_mod(v, d.n)
        chi -= Fraction(k - 1, k)
    g = 1 - Fraction(d.n, 2) * chi
    if g.denominator != 1 or g < 0:
        raise ValueError("unrealizable datum")
    return int(g)


def power_twist(d: SymmetryDatum, m: int) -> SymmetryDatum:
    """Datum of the m-th power of the symmetry, for m a unit mod n: every
    stored value is multiplied by the inverse of m."""
    if gcd(m, d.n) != 1:
        raise ValueError("not a unit power")
    k = pow(m, -1, d.n)
    return replace(
        d,
        handles=tuple(k * v % d.n for v in d.handles),
        boundary=tuple(k * v % d.n for v in d.boundary),
        cones=tuple(k * v % d.n for v in d.cones),
    )


def reduce_values_mod(d: SymmetryDatum, m: int) -> tuple[int, ...]:
    """All stored values reduced mod a divisor m of n, in datum order
    (handles, boundary, cones)."""
    if m < 1 or d.n % m:
        raise ValueError("modulus must divide the order")
    return tuple(v % m for v in d.all_values())


_SCHEMA = {
    "n": "an integer",
    "orientable": "a boolean",
    "h": "an integer",
    "handles": "a list of integers",
    "boundary": "a list of integers",
    "cones": "a list of integers",
}


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def datum_from_dict(raw: dict) -> SymmetryDatum:
    if not isinstance(raw, dict):
        raise ValueError("datum must be a JSON object")
    for name in _SCHEMA:
        if name not in raw:
            raise ValueError("missing field '%s'" % name)
    for name in raw:
        if name not in _SCHEMA:
            raise ValueError("unknown field '%s'" % name)
    for name in ("n", "h"):
        if not _is_int(raw[name]):
            raise ValueError("field '%s' must be an integer" % name)
    if not isinstance(raw["orientable"], bool):
        raise ValueError("field 'orientable' must be a boolean")
    for name in _VALUE_FIELDS:
        vals = raw[name]
        if not isinstance(vals, list) or not all(_is_int(v) for v in vals):
            raise ValueError("field '%s' must be a list of integers" % name)
    return SymmetryDatum(
        n=raw["n"],
        orientable=raw["orientable"],
        h=raw["h"],
        handles=tuple(raw["handles"]),
        boundary=tuple(raw["boundary"]),
        cones=tuple(raw["cones"]),
    )


def parse_datum(text: str) -> SymmetryDatum:
    """Parse the JSON wire form of a datum."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError("invalid JSON: %s" % e) from None
    return datum_from_dict(raw)


def datum_to_dict(d: SymmetryDatum) -> dict:
    return {
        "n": d.n,
        "orientable": d.orientable,
        "h": d.h,
        "handles": list(d.handles),
        "boundary": list(d.boundary),
        "cones": list(d.cones),
    }


def datum_to_json(d: SymmetryDatum) -> str:
    return json.dumps(datum_to_dict(d), sort_keys=True)
