"""Brute-force scans that referee the parametrized constructions.

Nothing here knows about the coefficient machinery: candidates come
from raw distance bookkeeping over explicit point sets and every hit is
confirmed by the verify functions, so these scans are a fair referee
for enumerate_t0 and the grid counting paths.  Guards keep the cubic
scans at desk scale unless explicitly overridden.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from pathlib import Path

from .errors import DomainError, RangeError
from .numtheory import check_range
from .parallel import map_chunks, worker_count
from .tetra import LatticeTetrahedron, verify_regular
from .triangle import ORIGIN, Point, dist_sq, sub, verify_equilateral

GRID_GUARD = 6

Triangle = tuple[Point, Point, Point]
Tetrahedron = tuple[Point, Point, Point, Point]


def _distance_buckets(points: list[Point]) -> dict[int, list[tuple[int, int]]]:
    """Index pairs i < j by their squared distance."""
    buckets: dict[int, list[tuple[int, int]]] = {}
    for i, pi in enumerate(points):
        for j in range(i + 1, len(points)):
            buckets.setdefault(dist_sq(pi, points[j]), []).append((i, j))
    return buckets


def _cliques(pairs: list[tuple[int, int]], want_tetra: bool) -> tuple[list, list]:
    """3-cliques (and optionally 4-cliques) of one equal-distance graph."""
    adj: dict[int, set[int]] = {}
    for i, j in pairs:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    tris = []
    tets = []
    for i, j in pairs:
        common = adj[i] & adj[j]
        for t in common:
            if t <= j:
                continue
            tris.append((i, j, t))
            if want_tetra:
                for u in common & adj[t]:
                    if u > t:
                        tets.append((i, j, t, u))
    return tris, tets


def _is_twice_square(s2: int) -> bool:
    if s2 % 2:
        return False
    half = s2 // 2
    root = isqrt(half)
    return root * root == half


def scan_triangles(points, *, workers: int | None = None) -> list[Triangle]:
    """All equilateral triangles with vertices in the given point set.

    Candidates are 3-cliques of the equal-distance graphs; each one is
    confirmed with verify_equilateral after translating a vertex to the
    origin.  Output is sorted, so it is deterministic for any worker
    count.
    """
    pts = sorted({tuple(p) for p in points})
    buckets = _distance_buckets(pts)

    def run(keys: list[int]) -> list[tuple[int, int, int]]:
        found: list[tuple[int, int, int]] = []
        for s2 in keys:
            found.extend(_cliques(buckets[s2], want_tetra=False)[0])
        return found

    out: list[Triangle] = []
    for part in map_chunks(run, sorted(buckets), worker_count(workers)):
        for i, j, t in part:
            tri = (pts[i], pts[j], pts[t])
            verify_equilateral(sub(tri[1], tri[0]), sub(tri[2], tri[0]))
            out.append(tri)
    return sorted(out)


def scan_tetrahedra(points, *, prune: bool = True, workers: int | None = None) -> list[Tetrahedron]:
    """All regular tetrahedra with vertices in the given point set.

    With prune=True only squared distances of the form 2*k*k are
    examined (no other squared side occurs; the unpruned scan is kept
    around so tests can observe that fact rather than assume it).
    Every candidate 4-clique is confirmed with verify_regular.
    """
    pts = sorted({tuple(p) for p in points})
    buckets = _distance_buckets(pts)
    keys = sorted(s2 for s2 in buckets if not prune or _is_twice_square(s2))

    def run(chunk: list[int]) -> list[tuple[int, int, int, int]]:
        found: list[tuple[int, int, int, int]] = []
        for s2 in chunk:
            found.extend(_cliques(buckets[s2], want_tetra=True)[1])
        return found

    out: list[Tetrahedron] = []
    for part in map_chunks(run, keys, worker_count(workers)):
        for i, j, t, u in part:
            tet = (pts[i], pts[j], pts[t], pts[u])
            verify_regular(*tet)
            out.append(tet)
    return sorted(out)


def _check_grid_size(n: int, force: bool) -> None:
    check_range("n", n, 0)
    if n > GRID_GUARD and not force:
        raise RangeError(
            f"grid size n = {n} exceeds the desk-scale guard {GRID_GUARD}; pass force=True to override")


def _grid_points(n: int) -> list[Point]:
    return [(x, y, z) for x in range(n + 1) for y in range(n + 1) for z in range(n + 1)]


def brute_triangles_grid(n: int, *, force: bool = False, workers: int | None = None) -> list[Triangle]:
    """Equilateral triangles with vertices in the cube {0..n}^3.

    Counts distinct vertex sets; the n = 1 cube has 8 (the faces of the
    two inscribed tetrahedra).
    """
    _check_grid_size(n, force)
    return scan_triangles(_grid_points(n), workers=workers)


def brute_tetrahedra_grid(
    n: int, *, prune: bool = True, force: bool = False, workers: int | None = None
) -> list[Tetrahedron]:
    """Regular tetrahedra with vertices in the cube {0..n}^3.

    The n = 1 cube contains exactly the 2 inscribed regular tetrahedra.
    """
    _check_grid_size(n, force)
    return scan_tetrahedra(_grid_points(n), prune=prune, workers=workers)


def brute_t0(ell: int, *, bound: int | None = None) -> set[LatticeTetrahedron]:
    """Regular tetrahedra with a vertex at the origin and squared side
    2*ell*ell, found by raw sphere scanning.

    All non-origin vertices lie on the sphere of squared radius
    2*ell*ell, whose points have coordinates within 2*ell, so the
    default bound is always sufficient; a smaller one is rejected.
    """
    check_range("ell", ell, 1)
    if bound is None:
        bound = 2 * ell
    if bound < 2 * ell:
        raise DomainError(f"bound {bound} cannot hold a tetrahedron of squared side {2 * ell * ell}")
    target = 2 * ell * ell
    reach = min(bound, isqrt(target))
    sphere = [
        (x, y, z)
        for x in range(-reach, reach + 1)
        for y in range(-reach, reach + 1)
        for z in range(-reach, reach + 1)
        if x * x + y * y + z * z == target
    ]
    adjacent: dict[int, set[int]] = {i: set() for i in range(len(sphere))}
    for i, pi in enumerate(sphere):
        for j in range(i + 1, len(sphere)):
            if dist_sq(pi, sphere[j]) == target:
                adjacent[i].add(j)
                adjacent[j].add(i)
    out: set[LatticeTetrahedron] = set()
    for i in range(len(sphere)):
        for j in adjacent[i]:
            if j <= i:
                continue
            for t in adjacent[i] & adjacent[j]:
                if t > j:
                    out.add(LatticeTetrahedron.from_vertices((ORIGIN, sphere[i], sphere[j], sphere[t])))
    return out


@dataclass(frozen=True)
class ComparisonReport:
    """Difference between a parametrized set and the brute-force referee."""

    missing: tuple
    extra: tuple

    def is_empty(self) -> bool:
        return not self.missing and not self.extra


def compare(parametrized, brute) -> ComparisonReport:
    """missing = found only by brute force, extra = only parametrized."""
    par = set(parametrized)
    bru = set(brute)
    return ComparisonReport(missing=tuple(sorted(bru - par)), extra=tuple(sorted(par - bru)))


@dataclass(frozen=True)
class GridCountRecord:
    """Counts for one grid size; None marks a shape that was not scanned."""

    n: int
    triangles: int | None = None
    tetrahedra: int | None = None


def read_bfile(path) -> list[tuple[int, int]]:
    """Parse an OEIS b-file: one 'index value' pair per line.

    Blank lines and '#' comments are ignored; anything else malformed
    raises DomainError with the offending line number.
    """
    terms: list[tuple[int, int]] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"{path}:{lineno}: expected 'index value', got {raw!r}")
        try:
            terms.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise DomainError(f"{path}:{lineno}: non-integer field in {raw!r}") from None
    return terms


@dataclass(frozen=True)
class OffsetReport:
    """Comparison of our counts against b-file terms under one index offset.

    Offset o matches our grid size n against file index n + o.  compared
    holds (n, ours, theirs); missing lists grid sizes the file does not
    cover at this offset.
    """

    offset: int
    compared: tuple[tuple[int, int, int], ...]
    mismatches: tuple[tuple[int, int, int], ...]
    missing: tuple[int, ...]

    @property
    def matched(self) -> bool:
        return not self.mismatches and not self.missing


def compare_with_bfile(
    counts: dict[int, int], terms: list[tuple[int, int]], offsets: tuple[int, ...] = (0, 1)
) -> tuple[OffsetReport, ...]:
    """Compare computed grid counts with b-file terms under each offset.

    Sequence catalogs disagree about whether the index counts grid
    points or unit cells, so both conventions are reported instead of
    asserting one.
    """
    table = dict(terms)
    reports = []
    for offset in offsets:
        compared = []
        mismatches = []
        missing = []
        for n in sorted(counts):
            theirs = table.get(n + offset)
            if theirs is None:
                missing.append(n)
                continue
            compared.append((n, counts[n], theirs))
            if counts[n] != theirs:
                mismatches.append((n, counts[n], theirs))
        reports.append(
            OffsetReport(offset, tuple(compared), tuple(mismatches), tuple(missing)))
    return tuple(reports)
