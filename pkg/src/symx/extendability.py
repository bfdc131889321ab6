"""Extendability predicates for the four orientation types.

A periodic map of a closed orientable surface may extend to a finite-order
automorphism of the 3-sphere over some embedding, with four cases graded
by which of the two maps preserve orientation. Each predicate below
decides one type from the quotient datum alone, by pattern-matching the
boundary and cone values against the admissible shapes and, on
non-orientable quotients, checking the homology refinements. Verdicts
carry the witness parameters that name the matched shape.

Type codes: "pp" both preserve, "mm" both reverse, "pm" the surface map
preserves while the ambient map reverses, "mp" the opposite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .invariants import (
    ConjugacyInvariant,
    IsotropyInvariant,
    conjugacy_invariant,
    h1,
)
from .numtheory import order_mod, units_of
from .orbifold import (
    SymmetryDatum,
    euler_genus,
    is_orientation_reversing,
    power_twist,
)

PP, MM, PM, MP = "pp", "mm", "pm", "mp"
ALL_TYPES = (PP, MM, PM, MP)


@dataclass(frozen=True)
class ExtendabilityVerdict:
    kind: str
    extendable: bool
    witness: dict | None = None


def _require_reversing(kind: str, d: SymmetryDatum) -> None:
    if is_orientation_reversing(d) != (kind in (MM, MP)):
        raise ValueError("predicate/type mismatch")


def _pattern(*pairs) -> Counter:
    out: Counter = Counter()
    for value, count in pairs:
        if count:
            out[value] += count
    return out


def check_pp(d: SymmetryDatum) -> ExtendabilityVerdict:
    """Both maps preserve orientation: the cone values must split into
    conjugate pairs drawn from at most two classes of coprime orders."""
    _require_reversing(PP, d)
    n = d.n
    counts = Counter(d.cones)
    pairs: dict[int, int] = {}  # least class representative -> pair count
    for v in sorted(counts):
        w = -v % n
        if counts[v] != counts[w]:
            return ExtendabilityVerdict(PP, False)
        if v == w:
            if counts[v] % 2:
                return ExtendabilityVerdict(PP, False)
            pairs[v] = counts[v] // 2
        elif v < w:
            pairs[v] = counts[v]
    if len(pairs) > 2:
        return ExtendabilityVerdict(PP, False)
    reps = sorted(pairs, key=lambda v: (order_mod(v, n), v))
    if not reps:
        alpha = beta = 0
        t, p, q = 0, 1, 1
    elif len(reps) == 1:
        alpha, beta = reps[0], 0
        t, p, q = pairs[alpha], order_mod(alpha, n), 1
    else:
        alpha, beta = reps
        t, p, q = pairs[alpha], order_mod(alpha, n), order_mod(beta, n)
        if gcd(p, q) != 1:
            return ExtendabilityVerdict(PP, False)
    if n > p * q and d.h < 1:
        # the two rotation axes alone cannot carry a surjection
        return ExtendabilityVerdict(PP, False)
    witness = {"alpha": alpha, "beta": beta, "t": t, "p": p, "q": q}
    return ExtendabilityVerdict(PP, True, witness)


def check_mm(d: SymmetryDatum) -> ExtendabilityVerdict:
    """Both maps reverse orientation: all boundary and cone values lie in
    {2a, -2a, 0} for one generator a, zeros only on the boundary, with a
    count pattern, a parity condition, or a first-refinement value
    depending on the quotient shape."""
    _require_reversing(MM, d)
    n, s, b, hh = d.n, d.s, d.b, d.h
    if not d.orientable and b > 0:
        # only closed non-orientable quotients can match
        return ExtendabilityVerdict(MM, False)
    half = n // 2
    cone_counts = Counter(d.cones)
    bound_counts = Counter(d.boundary)
    hi, lo = s - s // 2, s // 2
    for alpha in units_of(n):
        ta, na = 2 * alpha % n, -2 * alpha % n
        if any(v not in (ta, na, 0) for v in bound_counts):
            continue
        if any(v not in (ta, na) for v in cone_counts):
            continue
        if d.orientable:
            if n == 2:
                return ExtendabilityVerdict(
                    MM, True, {"case": 1, "alpha": alpha, "t": 0}
                )
            if cone_counts != _pattern((ta, hi), (na, lo)):
                continue
            for t in range(hi, (s + b) // 2 + 1):
                want = _pattern((ta, t - hi), (na, t - lo), (0, s + b - 2 * t))
                if bound_counts == want:
                    return ExtendabilityVerdict(
                        MM, True, {"case": 1, "alpha": alpha, "t": t}
                    )
            continue
        if half % 2:
            if n > 2 and (hh - s) % 2:
                continue
            return ExtendabilityVerdict(MM, True, {"case": 2, "alpha": alpha})
        if n == 4:
            if s > 0 or h1(d) == 0:
                return ExtendabilityVerdict(MM, True, {"case": 3, "alpha": alpha})
            continue
        target = -s * alpha % n if ta < half else s * alpha % n
        if h1(d) == target:
            return ExtendabilityVerdict(MM, True, {"case": 3, "alpha": alpha})
    return ExtendabilityVerdict(MM, False)


def check_pm(d: SymmetryDatum) -> ExtendabilityVerdict:
    """Surface map preserves, ambient map reverses: an even order, at
    least two cones, and one alternating cone pattern over a generator."""
    _require_reversing(PM, d)
    n, s = d.n, d.s
    if n % 2 or s < 2:
        return ExtendabilityVerdict(PM, False)
    actual = Counter(d.cones)
    for alpha in units_of(n):
        want = Counter((alpha, (-1) ** (s - 1) * alpha % n))
        for j in range(3, s + 1):
            want[(-1) ** j * 2 * alpha % n] += 1
        if actual == want:
            return ExtendabilityVerdict(PM, True, {"alpha": alpha})
    return ExtendabilityVerdict(PM, False)


def check_mp(d: SymmetryDatum) -> ExtendabilityVerdict:
    """Surface map reverses, ambient map preserves. Three quotient shapes:
    an orientable quotient with one mirror circle, a non-orientable one
    with one mirror circle, or a closed non-orientable one; the last case
    factors the order as p*q*l and, for two crosscaps, compares the full
    invariant against the canonical model."""
    _require_reversing(MP, d)
    n, s, b, hh = d.n, d.s, d.b, d.h
    half = n // 2
    if d.orientable:
        if b != 1:
            return ExtendabilityVerdict(MP, False)
        if n == 2:
            return ExtendabilityVerdict(MP, True, {"case": 1, "alpha": 1})
        if s % 2 == 0:
            return ExtendabilityVerdict(MP, False)
        cone_counts = Counter(d.cones)
        for alpha in units_of(n):
            ta, na = 2 * alpha % n, -2 * alpha % n
            want = _pattern((ta, (s - 1) // 2), (na, (s + 1) // 2))
            if d.boundary[0] == ta and cone_counts == want:
                return ExtendabilityVerdict(MP, True, {"case": 1, "alpha": alpha})
        return ExtendabilityVerdict(MP, False)
    if b == 1:
        if s == 0:
            # no cone pins the factor; report the maximal one
            for alpha in units_of(n):
                if d.boundary[0] in (2 * alpha % n, -2 * alpha % n):
                    return ExtendabilityVerdict(
                        MP, True, {"case": 2, "alpha": alpha, "l": half}
                    )
            return ExtendabilityVerdict(MP, False)
        if s % 2 == 0:
            return ExtendabilityVerdict(MP, False)
        base = gcd(d.cones[0], n)
        if any(gcd(v, n) != base for v in d.cones) or base % 2:
            return ExtendabilityVerdict(MP, False)
        l = base // 2
        if l == 0 or half % l:
            return ExtendabilityVerdict(MP, False)
        for alpha in units_of(n):
            ba, ca = 2 * alpha % n, 2 * l * alpha % n
            if d.boundary[0] not in (ba, -ba % n):
                continue
            if all(v in (ca, -ca % n) for v in d.cones):
                return ExtendabilityVerdict(
                    MP, True, {"case": 2, "alpha": alpha, "l": l}
                )
        return ExtendabilityVerdict(MP, False)
    if b > 1:
        return ExtendabilityVerdict(MP, False)
    # closed non-orientable quotient
    classes: dict[int, int] = {}
    for v in d.cones:
        r = min(v, n - v)
        classes[r] = classes.get(r, 0) + 1
    if len(classes) > 2:
        return ExtendabilityVerdict(MP, False)
    candidates = []
    if not classes:
        candidates.append((0, 1, 1, 0, 0))
    elif len(classes) == 1:
        ((c, cnt),) = classes.items()
        r = order_mod(c, n)
        candidates.append((0, 1, r, 0, c))
        candidates.append((cnt, r, 1, c, 0))
    else:
        (c1, n1), (c2, n2) = sorted(classes.items())
        r1, r2 = order_mod(c1, n), order_mod(c2, n)
        candidates.append((n1, r1, r2, c1, c2))
        candidates.append((n2, r2, r1, c2, c1))
    d_h1 = h1(d)
    for t, p, q, beta, gamma in sorted(candidates):
        if p % 2 == 0 or gcd(p, q) != 1 or n % (p * q):
            continue
        if t > 0 and t % 2 == 0:
            continue
        if s - t > 0 and (s - t) % 2 == 0:
            continue
        l = n // (p * q)
        if l % 2 or (l // 2 - hh) % 2:
            continue
        if hh == 1 and l != 2:
            continue
        if d_h1 is not None and (d_h1 - l // 2) % l:
            continue
        witness = {
            "case": 3,
            "t": t,
            "p": p,
            "q": q,
            "l": l,
            "beta": beta,
            "gamma": gamma,
        }
        if hh == 2:
            ref = canonical_f0_invariant(p, q, l, s, t)
            for u in units_of(n):
                if conjugacy_invariant(power_twist(d, u)) == ref:
                    witness["k"] = compute_k(p, q, l)
                    witness["m0"] = compute_m0(p, l)
                    witness["u"] = u
                    break
            else:
                continue
        return ExtendabilityVerdict(MP, True, witness)
    return ExtendabilityVerdict(MP, False)


CHECKS = {PP: check_pp, MM: check_mm, PM: check_pm, MP: check_mp}


def compute_m0(p: int, l: int) -> int:
    """Least m0 >= 1 with m0 = l/2 + 1 (mod l) and gcd(m0, p) = 1."""
    if p % 2 == 0 or l % 2:
        raise ValueError("need p odd and l even")
    m0 = l // 2 + 1
    while gcd(m0, p) != 1:
        m0 += l
    return m0


def compute_k(p: int, q: int, l: int) -> int:
    """Least k >= 1 with k = q*m0 (mod p), k = p (mod 2q) and k a unit
    mod p*q*l."""
    if p % 2 == 0 or l % 2 or gcd(p, q) != 1:
        raise ValueError("need p odd, l even, p and q coprime")
    m0 = compute_m0(p, l)
    n = p * q * l
    k = 1
    while True:
        if (k - q * m0) % p == 0 and (k - p) % (2 * q) == 0 and gcd(k, n) == 1:
            return k
        k += 1


def canonical_f0_invariant(
    p: int, q: int, l: int, s: int, t: int
) -> ConjugacyInvariant:
    """Reference invariant of the canonical two-crosscap model whose cone
    classes have orders p (t cones, value q*l) and q (s-t cones, value
    p*l) over a cyclic group of order n = p*q*l."""
    ok = (
        p % 2 == 1
        and gcd(p, q) == 1
        and l % 2 == 0
        and 0 <= t <= s
        and (t % 2 == 1 or (t == 0 and p == 1))
        and ((s - t) % 2 == 1 or (t == s and q == 1))
    )
    if not ok:
        raise ValueError("invalid reference parameters")
    n = p * q * l
    u = s - t
    # with p, q >= 2 whenever their class is populated, the values below
    # already sit in the lower half range
    cone_part = tuple(sorted([q * l] * t + [p * l] * u))
    iso = IsotropyInvariant(n, "entrywise", (), cone_part)
    h1_val = None
    if n % 4 == 0 and q != 2:
        h1_val = (n // 2 - max(t, 1) * (q * l // 2) - max(u, 1) * (p * l // 2)) % n
    m = l // 2
    k = compute_k(p, q, l)
    pair = tuple(sorted(min(v % m, -v % m) for v in (k, m - k)))
    return ConjugacyInvariant(n, False, 2, 0, iso, h1_val, (m, pair))


def classify_all(d: SymmetryDatum) -> set[str]:
    """The set of types in which the symmetry extends. Genus-0 symmetries
    extend in both types of their orientation class; positive genus
    dispatches to the matching pair of checks."""
    kinds = (MM, MP) if is_orientation_reversing(d) else (PP, PM)
    if euler_genus(d) == 0:
        return set(kinds)
    return {k for k in kinds if CHECKS[k](d).extendable}


def normalize(d: SymmetryDatum, kind: str) -> tuple[int, SymmetryDatum]:
    """Power-twist the datum onto the canonical class member for its
    witness parameters. Returns the twisting unit and the twisted datum."""
    verdict = CHECKS[kind](d)
    if not verdict.extendable:
        raise ValueError("not extendable in that type")
    from .enumeration import datum_from_parameters, row_from

    target = conjugacy_invariant(datum_from_parameters(row_from(d, verdict)))
    for m in units_of(d.n):
        twisted = power_twist(d, m)
        if conjugacy_invariant(twisted) == target:
            return m, twisted
    raise ValueError("no normalizing twist found")
