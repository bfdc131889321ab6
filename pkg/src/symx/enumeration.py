"""Parameter rows, canonical data, and exhaustive enumeration.

Every extendable conjugacy class is named by a small tuple of shape
parameters. This module converts between data and rows, lists all rows
realized at a fixed covering genus, and provides a brute-force census of
raw quotient data for cross-checking the classification at small order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd

from .extendability import CHECKS, MM, MP, PM, PP
from .invariants import ConjugacyInvariant, conjugacy_invariant, twist_minimal_key
from .numtheory import divisors
from .orbifold import (
    SymmetryDatum,
    euler_genus,
    is_orientation_reversing,
    validate,
)


@dataclass(frozen=True)
class ParameterRow:
    """Shape parameters of one extendable class. Fields a type does not
    use stay None; g is the covering genus."""

    kind: str
    n: int
    h: int
    b: int
    s: int
    t: int | None = None
    p: int | None = None
    q: int | None = None
    l: int | None = None
    g: int = field(default=0, kw_only=True)

    def sort_key(self):
        opt = [-1 if v is None else v for v in (self.t, self.p, self.q, self.l)]
        return (self.n, self.h, self.b, self.s, *opt)


def row_from(d: SymmetryDatum, verdict) -> ParameterRow:
    """Parameter row named by a positive extendability verdict."""
    if not verdict.extendable:
        raise ValueError("verdict carries no parameters")
    w = verdict.witness
    g = euler_genus(d)
    kind = verdict.kind
    if kind == PP:
        return ParameterRow(PP, d.n, d.h, 0, d.s, t=w["t"], p=w["p"], q=w["q"], g=g)
    if kind == PM:
        return ParameterRow(PM, d.n, d.h, 0, d.s, g=g)
    if kind == MM:
        return ParameterRow(MM, d.n, d.h, d.b, d.s, t=w.get("t"), g=g)
    if kind != MP:
        raise ValueError("unknown type")
    if w["case"] == 1:
        return ParameterRow(MP, d.n, d.h, 1, d.s, g=g)
    if w["case"] == 2:
        return ParameterRow(MP, d.n, d.h, 1, d.s, l=w["l"], g=g)
    return ParameterRow(
        MP, d.n, d.h, 0, d.s, t=w["t"], p=w["p"], q=w["q"], l=w["l"], g=g
    )


def _or_handles(h: int, reversing: bool) -> tuple[int, ...]:
    # handle values on an orientable quotient enter no invariant and no
    # predicate, so one surjective assignment represents them all
    if h == 0:
        return ()
    return (2 if reversing else 1,) + (0,) * (2 * h - 1)


def _crosscap_choices(n, h, others_sum):
    """Crosscap value tuples compatible with the relation, smallest
    first. Both relation roots are tried; for two crosscaps every odd
    splitting of the root is offered because the second refinement
    depends on it."""
    if n % 2:
        return
    c = -others_sum % n
    if c % 2:
        return
    half = n // 2
    x0 = c // 2 % half
    for x in sorted({x0, x0 + half}):
        if x % 2 != h % 2:
            continue
        if h == 0:
            if x == 0:
                yield ()
        elif h == 1:
            yield (x,)
        elif h == 2:
            for d1 in range(1, n, 2):
                d2 = (x - d1) % n
                if d2 % 2:
                    yield (d1, d2)
        else:
            yield (1,) * (h - 1) + ((x - h + 1) % n,)


def _layout(row: ParameterRow):
    """Orientability, boundary and cone values of the canonical layout
    for a row, with generator alpha = 1 throughout."""
    n, s = row.n, row.s
    kind = row.kind
    if kind == PP:
        t, u = row.t, s // 2 - row.t
        a, c = n // row.p, n // row.q
        cones = [a] * t + [(n - a) % n] * t + [c] * u + [(n - c) % n] * u
        return True, [], cones
    if kind == PM:
        cones = [1 % n, (-1) ** (s - 1) % n]
        cones += [(-1) ** j * 2 % n for j in range(3, s + 1)]
        return True, [], cones
    if kind == MM:
        hi, lo = s - s // 2, s // 2
        cones = [2 % n] * hi + [(n - 2) % n] * lo
        if row.b:
            t = row.t
            boundary = [2 % n] * (t - hi) + [(n - 2) % n] * (t - lo)
            boundary += [0] * (s + row.b - 2 * t)
            return True, boundary, cones
        return False, [], cones
    if row.b == 1 and row.l is None:
        cones = [2 % n] * ((s - 1) // 2) + [(n - 2) % n] * ((s + 1) // 2) if s else []
        return True, [2 % n], cones
    if row.b == 1:
        l, hi, lo = row.l, s - s // 2, s // 2
        cones = [2 * l % n] * hi + [(n - 2 * l) % n] * lo
        return False, [2 % n], cones
    cones = [row.q * row.l % n] * row.t + [row.p * row.l % n] * (s - row.t)
    return False, [], cones


def datum_from_parameters(row: ParameterRow) -> SymmetryDatum:
    """Canonical valid datum for a parameter row, the least one whose
    verdict reproduces the row exactly. Raises when no datum does."""
    if row.kind not in CHECKS:
        raise ValueError("unknown type")
    try:
        orientable, boundary, cones = _layout(row)
    except TypeError:
        raise ValueError("row unrealizable") from None
    if orientable:
        choices = [_or_handles(row.h, reversing=row.b > 0)]
    else:
        choices = _crosscap_choices(row.n, row.h, sum(boundary) + sum(cones))
    for handles in choices:
        try:
            d = SymmetryDatum(
                row.n, orientable, row.h, handles, tuple(boundary), tuple(cones)
            )
        except ValueError:
            break
        if validate(d):
            continue
        verdict = CHECKS[row.kind](d)
        if verdict.extendable and row_from(d, verdict) == row:
            return d
    raise ValueError("row unrealizable")


def _pp_rows(g, n):
    rows = []
    num = g - 1 + n
    if num % n == 0:
        rows.append(ParameterRow(PP, n, num // n, 0, 0, t=0, p=1, q=1, g=g))
    for p in divisors(n):
        if p < 2:
            continue
        w = n - n // p
        t = 1
        while t * w <= g - 1 + n:
            num = g - 1 + n - t * w
            if num % n == 0 and (num >= n or n == p):
                rows.append(ParameterRow(PP, n, num // n, 0, 2 * t, t=t, p=p, q=1, g=g))
            t += 1
    for p in divisors(n):
        if p < 2:
            continue
        for q in divisors(n):
            if q <= p or gcd(p, q) != 1:
                continue
            wp, wq = n - n // p, n - n // q
            t = 1
            while t * wp + wq <= g - 1 + n:
                rest = g - 1 + n - t * wp
                u = 1
                while u * wq <= rest:
                    num = rest - u * wq
                    if num % n == 0 and (num >= n or n == p * q):
                        rows.append(
                            ParameterRow(
                                PP, n, num // n, 0, 2 * (t + u), t=t, p=p, q=q, g=g
                            )
                        )
                    u += 1
                t += 1
    return rows


def _mm_rows(g, n):
    rows = []
    if n % 2:
        return rows
    half = n // 2
    w = half - 1
    if n % 4 == 2:
        b = 1
        while g - 1 + n - half * b >= 0:
            base = g - 1 + n - half * b
            if n == 2:
                if base % 2 == 0:
                    rows.append(ParameterRow(MM, 2, base // 2, b, 0, t=0, g=g))
            else:
                for s in range(base // w + 1):
                    num = base - s * w
                    if num % n:
                        continue
                    for t in range(s - s // 2, (s + b) // 2 + 1):
                        rows.append(ParameterRow(MM, n, num // n, b, s, t=t, g=g))
            b += 1
    for h in range(1, (g - 1 + n) // half + 1):
        rem = g - 1 + n - half * h
        if n == 2:
            if rem == 0:
                rows.append(ParameterRow(MM, 2, h, 0, 0, g=g))
            continue
        if rem % w:
            continue
        s = rem // w
        if n % 4 == 2 and (h - s) % 2:
            continue
        rows.append(ParameterRow(MM, n, h, 0, s, g=g))
    return rows


def _pm_rows(g, n):
    rows = []
    if n % 2:
        return rows
    if n == 2:
        if g % 2 == 0:
            rows.append(ParameterRow(PM, 2, g // 2, 0, 2, g=g))
        return rows
    w = n // 2 - 1
    s = 2
    while (s - 2) * w <= g:
        num = g - (s - 2) * w
        if num % n == 0:
            rows.append(ParameterRow(PM, n, num // n, 0, s, g=g))
        s += 1
    return rows


def _mp_rows(g, n):
    rows = []
    if n % 2:
        return rows
    half = n // 2
    if n % 4 == 2:
        w = half - 1
        if n == 2:
            if g % 2 == 0:
                rows.append(ParameterRow(MP, 2, g // 2, 1, 0, g=g))
        else:
            s = 1
            while g - 1 + half - s * w >= 0:
                num = g - 1 + half - s * w
                if num % n == 0:
                    rows.append(ParameterRow(MP, n, num // n, 1, s, g=g))
                s += 2
        for h in range(1, (g - 1 + half) // half + 1):
            rem = g - 1 + half - half * h
            if rem == 0:
                rows.append(ParameterRow(MP, n, h, 1, 0, l=half, g=g))
            for l in divisors(half):
                if l == half:
                    continue
                wl = half - l
                if rem % wl == 0 and (rem // wl) % 2 == 1:
                    rows.append(ParameterRow(MP, n, h, 1, rem // wl, l=l, g=g))
    budget = g - 1 + n - half
    if budget < 0:
        return rows
    for l in divisors(n):
        if l % 2:
            continue
        m = n // l
        for p in divisors(m):
            if p % 2 == 0 or gcd(p, m // p) != 1:
                continue
            q = m // p
            wp, wq = (n - q * l) // 2, (n - p * l) // 2
            for t in [0] if p == 1 else range(1, budget // wp + 1, 2):
                rest = budget - t * wp
                for u in [0] if q == 1 else range(1, rest // wq + 1, 2):
                    num = g - 1 + n - t * wp - u * wq
                    if num < half or num % half:
                        continue
                    h = num // half
                    if (l // 2 - h) % 2:
                        continue
                    if h == 1 and l != 2:
                        continue
                    rows.append(
                        ParameterRow(MP, n, h, 0, t + u, t=t, p=p, q=q, l=l, g=g)
                    )
    return rows


_ROW_SOURCES = {PP: _pp_rows, MM: _mm_rows, PM: _pm_rows, MP: _mp_rows}


def enumerate_extendable(g, kind, n_range=None):
    """All parameter rows of extendable classes of the given type at
    covering genus g, one row per conjugacy class, in sort_key order.
    Genus at least 2 bounds the order by itself; below that an explicit
    order range is required."""
    if kind not in _ROW_SOURCES:
        raise ValueError("unknown type")
    if n_range is None:
        if g <= 1:
            raise ValueError("order range required at genus <= 1")
        n_range = range(1, 84 * (g - 1) + 1)
    rows = []
    for n in n_range:
        if n >= 1:
            rows.extend(_ROW_SOURCES[kind](g, n))
    out, seen = [], set()
    for row in sorted(rows, key=ParameterRow.sort_key):
        try:
            d = datum_from_parameters(row)
        except ValueError:
            continue
        key = twist_minimal_key(d)
        if key not in seen:
            seen.add(key)
            out.append(row)
    return out


def iter_valid_data(
    n,
    *,
    max_genus=None,
    max_h=None,
    max_b=None,
    max_s=None,
    orientable_handles="all",
):
    """Every valid datum of order n within the bounds, one per reordering
    of each value tuple. Needs either a genus cap or caps on all of h, b
    and s. With orientable_handles="representative", orientable quotients
    get a single surjective handle assignment instead of all of them;
    handle values there enter no invariant and no predicate."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    if orientable_handles not in ("all", "representative"):
        raise ValueError("unknown handle mode")
    if max_genus is None and None in (max_h, max_b, max_s):
        raise ValueError("need a genus cap or caps on h, b and s")
    cap2 = None if max_genus is None else (2 * n + 2 * max_genus - 2) // n
    for orientable in (True, False):
        if not orientable and n % 2:
            continue
        h_lo = 0 if orientable else 1
        bounds = []
        if cap2 is not None:
            bounds.append(cap2 // 2 if orientable else cap2)
        if max_h is not None:
            bounds.append(max_h)
        for h in range(h_lo, min(bounds) + 1):
            weight = 2 * h if orientable else h
            b_bounds = [] if cap2 is None else [cap2 - weight]
            if max_b is not None:
                b_bounds.append(max_b)
            for b in range(0, min(b_bounds) + 1):
                if b > 0 and n % 4 != 2:
                    break
                reversing = (not orientable) or b > 0
                chi_under = 2 - 2 * h - b if orientable else 2 - h - b
                s_bounds = []
                if max_genus is not None:
                    g_base = 1 - n * chi_under // 2
                    if g_base > max_genus:
                        break
                    s_bounds.append(4 * (max_genus - g_base) // n)
                if max_s is not None:
                    s_bounds.append(max_s)
                if reversing:
                    cvals = range(2, n, 2)
                    bvals = range(0, n, 2)
                    hvals = range(0, n, 2) if orientable else range(1, n, 2)
                else:
                    cvals, bvals, hvals = range(1, n), range(0), range(n)
                if orientable and orientable_handles == "representative":
                    handle_opts = [_or_handles(h, reversing)]
                else:
                    handle_opts = list(
                        combinations_with_replacement(
                            hvals, 2 * h if orientable else h
                        )
                    )
                for s in range(min(s_bounds) + 1):
                    for cones in combinations_with_replacement(cvals, s):
                        for boundary in combinations_with_replacement(bvals, b):
                            for handles in handle_opts:
                                d = SymmetryDatum(
                                    n, orientable, h, handles, boundary, cones
                                )
                                if validate(d):
                                    continue
                                if (
                                    max_genus is not None
                                    and euler_genus(d) > max_genus
                                ):
                                    continue
                                yield d


@lru_cache(maxsize=None)
def _census_data(n, g_max):
    return tuple(iter_valid_data(n, max_genus=g_max))


@dataclass(frozen=True)
class CensusBucket:
    invariant: ConjugacyInvariant
    count: int
    representative: SymmetryDatum


def oracle_census(n, g_max, order_bound=None, genus_bound=4):
    """Brute-force census of all valid data of order n up to the genus
    cap, bucketed by full conjugacy invariant. Buckets come sorted by
    invariant; each carries its raw-datum count and first representative.
    Bounds keep the computation honest: beyond them the walk explodes,
    so larger requests are refused rather than attempted."""
    if order_bound is None:
        order_bound = int(os.environ.get("SYMX_CENSUS_BOUND", "12"))
    if n > order_bound or g_max > genus_bound:
        raise ValueError("census too large")
    counts: dict[ConjugacyInvariant, int] = {}
    reps: dict[ConjugacyInvariant, SymmetryDatum] = {}
    for d in _census_data(n, g_max):
        inv = conjugacy_invariant(d)
        if inv not in reps:
            reps[inv] = d
            counts[inv] = 0
        counts[inv] += 1
    return [
        CensusBucket(inv, counts[inv], reps[inv])
        for inv in sorted(reps, key=ConjugacyInvariant.sort_key)
    ]


def verify_uniqueness(kind, row, n_bound=12, genus_bound=4):
    """Census cross-check that exactly one conjugacy class realizes the
    row: every valid datum of that order and genus whose verdict
    reproduces the row must be a power twist of every other."""
    if kind not in CHECKS:
        raise ValueError("unknown type")
    if row.n > n_bound or row.g > genus_bound:
        raise ValueError("census too large")
    reversing = kind in (MM, MP)
    keys = set()
    for d in _census_data(row.n, row.g):
        if euler_genus(d) != row.g:
            continue
        if is_orientation_reversing(d) != reversing:
            continue
        verdict = CHECKS[kind](d)
        if not verdict.extendable or row_from(d, verdict) != row:
            continue
        keys.add(twist_minimal_key(d))
    return len(keys) == 1
