"""The hexagonal form zeta(m, n) = m*m - m*n + n*n and its representations.

zeta is the squared-length form of the triangular lattice; the integers
it represents are the Loeschian numbers.  omega(k) is the full solution
set of zeta(m, n) == k*k, tau_orbit expands a pair under the twelve
lattice symmetries that fix zeta, and primitive_triples generates the
coprime positive pairs whose zeta value is a perfect square.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError
from .numtheory import check_range

Pair = tuple[int, int]


def zeta(m: int, n: int) -> int:
    """m*m - m*n + n*n, nonnegative for all integers."""
    return m * m - m * n + n * n


def omega(k: int) -> set[Pair]:
    """All integer pairs (m, n) with zeta(m, n) == k*k.

    Scans every column |m| <= ceil(2k/sqrt(3)) + 1, the reach of the
    form, solving the quadratic in n exactly.  When every prime divisor
    of k is 2 mod 3 this is just the six axial pairs
    (k, 0), (k, k), (0, k) and their negatives.
    """
    check_range("k", k, 1)
    bound = isqrt(4 * k * k // 3) + 2
    kk = k * k
    out: set[Pair] = set()
    for m in range(-bound, bound + 1):
        disc = 4 * kk - 3 * m * m
        if disc < 0:
            continue
        root = isqrt(disc)
        if root * root != disc:
            continue
        for num in (m + root, m - root):
            if num % 2 == 0:
                out.add((m, num // 2))
    return out


def tau_orbit(m: int, n: int) -> set[Pair]:
    """Orbit of (m, n) under the symmetry group of zeta.

    The group has order 12, generated by the rotation
    (m, n) -> (m - n, m) and the reflection (m, n) -> (n, m); every
    element preserves zeta, so orbits stay inside one level set.
    """
    seen: set[Pair] = {(m, n)}
    todo: list[Pair] = [(m, n)]
    while todo:
        a, b = todo.pop()
        for nxt in ((a - b, a), (b, a)):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


@dataclass(frozen=True)
class EisensteinTriple:
    """A pair (m, n) whose zeta value is the perfect square k*k.

    u, v and form record how the generator produced the triple:
    form 1 is (m, n) = (v*v - u*u, 2*u*v - u*u) and
    form 2 is (m, n) = (2*u*v - u*u, 2*u*v - v*v), both with
    k = zeta(u, v).
    """

    m: int
    n: int
    k: int
    u: int | None = None
    v: int | None = None
    form: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1 or zeta(self.m, self.n) != self.k * self.k:
            raise DomainError(f"zeta{(self.m, self.n)} != {self.k}**2")

    def is_primitive(self) -> bool:
        return gcd(self.m, self.n) == 1


def primitive_triples(kmax: int) -> list[EisensteinTriple]:
    """All primitive triples with zeta(m, n) == k*k, m, n > 0 and k <= kmax.

    Generated from coprime (u, v) with u + v not divisible by 3: form 1
    applies when v > u, form 2 when v/2 < u < 2v.  Completeness at desk
    scale is pinned against a brute-force scan in the test suite.
    Sorted by (k, m, n).
    """
    check_range("kmax", kmax, 1)
    found: dict[Pair, EisensteinTriple] = {}
    bound = isqrt(4 * kmax // 3) + 2
    for u in range(1, bound + 1):
        for v in range(1, bound + 1):
            if gcd(u, v) != 1 or (u + v) % 3 == 0:
                continue
            k = zeta(u, v)
            if k > kmax:
                continue
            if v > u:
                m, n = v * v - u * u, 2 * u * v - u * u
                if m > 0 and n > 0 and gcd(m, n) == 1:
                    found.setdefault((m, n), EisensteinTriple(m, n, k, u, v, 1))
            if 2 * v > u and 2 * u > v:
                m, n = 2 * u * v - u * u, 2 * u * v - v * v
                if m > 0 and n > 0 and gcd(m, n) == 1:
                    found.setdefault((m, n), EisensteinTriple(m, n, k, u, v, 2))
    return sorted(found.values(), key=lambda t: (t.k, t.m, t.n))
