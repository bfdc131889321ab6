"""Exact modular arithmetic helpers.

Everything here works on plain ints (plus a small Residue wrapper for
callers that want a typed value). Moduli stay desk scale throughout the
package, so the constructive searches are linear scans returning least
nonnegative witnesses; that keeps every output canonical and testable
against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z_n stored as its least nonnegative representative."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def order(self) -> int:
        return order_mod(self.value, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value


def order_mod(a: int, n: int) -> int:
    """Additive order of a in Z_n: least e >= 1 with e*a divisible by n."""
    return n // gcd(a % n, n)


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return small + [n // d for d in reversed(small) if d * d != n]


def units_of(n: int) -> list[int]:
    """Multiplicative units of Z_n, ascending; [1] for the trivial modulus."""
    return [k for k in range(1, n + 1) if gcd(k, n) == 1]


def crt_solve(r1: int, m1: int, r2: int, m2: int) -> Residue | None:
    """Solve x = r1 (mod m1), x = r2 (mod m2).

    Returns the unique solution mod lcm(m1, m2), or None when the
    congruences are incompatible (r1 and r2 differ mod gcd(m1, m2)).
    """
    g = gcd(m1, m2)
    if (r1 - r2) % g:
        return None
    step = m2 // g
    # stride through r1 + m1*k; invert m1/g mod m2/g to land on r2's class
    k = ((r2 - r1) // g * pow(m1 // g, -1, step)) % step
    return Residue(r1 + m1 * k, lcm(m1, m2))


def coprime_shift(a: int, b: int, c: int) -> int:
    """Least d >= 0 making a + b*d coprime to c.

    Exists exactly when gcd(a, b, c) = 1; some d < c always works then.
    """
    if gcd(gcd(a, b), c) != 1:
        raise ValueError("no shift exists")
    for d in range(max(c, 1)):
        if gcd(a + b * d, c) == 1:
            return d
    raise ValueError("no shift exists")


def unit_lift(m: int, n: int) -> int:
    """Least unit k >= 1 of Z_n with k*m = gcd(m, n) (mod n)."""
    target = gcd(m, n)
    for k in range(1, n + 1):
        if gcd(k, n) == 1 and (k * m - target) % n == 0:
            return k
    raise ValueError("no unit lift")


def generator_decompose(lam: int, mu: int, n: int) -> int:
    """Split a pair of coprime-order elements off a common generator.

    With p, q the orders of lam, mu and l = n/(p*q), returns the least
    generator tau of Z_n satisfying tau*q*l = lam and tau*p*l = mu (mod n).
    """
    p, q = order_mod(lam, n), order_mod(mu, n)
    if gcd(p, q) != 1:
        raise ValueError("orders not coprime")
    l = n // (p * q)
    for tau in range(1, n + 1):
        if gcd(tau, n) != 1:
            continue
        if (tau * q * l - lam) % n == 0 and (tau * p * l - mu) % n == 0:
            return tau
    raise ValueError("no generator decomposition")
