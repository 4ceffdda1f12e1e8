"""Regular tetrahedra in Z^3 with one vertex at the origin.

A lattice equilateral triangle extends to a regular lattice tetrahedron
exactly when its parameter pair satisfies zeta(m, n) == k*k; the apex
sits at the triangle centroid displaced by (2k/3)(a, b, c) on one or
both sides of the plane.  enumerate_t0 walks every plane and parameter
producing squared side 2*ell*ell, while face_normals and
verify_orthogonality recover the exact rational orthogonal structure
any such tetrahedron carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .eisenstein import omega, zeta
from .errors import ConstructionError, DomainError, VerificationError
from .numtheory import NormalQuadruple, check_range, solve_three_d2
from .parallel import map_chunks, worker_count
from .triangle import (
    ORIGIN,
    CoeffMatrix,
    Point,
    coeff_matrix,
    cross,
    dist_sq,
    dot,
    sub,
    triangle_points,
)

_VERTEX_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@dataclass(frozen=True, order=True)
class LatticeTetrahedron:
    """Regular tetrahedron with vertices in canonical sorted order.

    The squared side is always twice a perfect square, recorded as ell,
    so side_sq == 2 * ell * ell.
    """

    vertices: tuple[Point, Point, Point, Point]
    side_sq: int
    ell: int

    @classmethod
    def from_vertices(cls, pts) -> "LatticeTetrahedron":
        verts = tuple(sorted(tuple(p) for p in pts))
        if len(verts) != 4:
            raise DomainError(f"a tetrahedron needs exactly 4 vertices, got {len(verts)}")
        side_sq = verify_regular(*verts)
        ell = isqrt(side_sq // 2)
        if side_sq != 2 * ell * ell:
            raise VerificationError(f"squared side {side_sq} is not twice a perfect square")
        return cls(verts, side_sq, ell)


@dataclass(frozen=True)
class FaceNormalSet:
    """Outward primitive face normals of a tetrahedron.

    faces[i] belongs to the face opposite the i-th canonical vertex;
    its d value is odd and divides the side parameter ell.
    """

    faces: tuple[NormalQuadruple, NormalQuadruple, NormalQuadruple, NormalQuadruple]


def verify_regular(p0: Point, p1: Point, p2: Point, p3: Point) -> int:
    """Common squared edge length of the regular tetrahedron p0 p1 p2 p3.

    Checks all six pairwise squared distances against the first one and
    raises VerificationError naming the first failing pair.
    """
    pts = (p0, p1, p2, p3)
    side = dist_sq(p0, p1)
    if side == 0:
        raise VerificationError("degenerate: vertices p0 and p1 coincide")
    for i, j in _VERTEX_PAIRS[1:]:
        d2 = dist_sq(pts[i], pts[j])
        if d2 != side:
            raise VerificationError(f"|p{i} p{j}|^2 = {d2} != {side} = |p0 p1|^2")
    return side


def fourth_vertex(cm: CoeffMatrix, m: int, n: int, sign: int) -> Point | None:
    """Apex over the (m, n) triangle on the chosen side, or None.

    The apex is (P + Q + sign*2k*(a, b, c)) / 3 where k*k == zeta(m, n);
    it lands on the lattice for both signs when k is divisible by 3 and
    for exactly one sign otherwise.  None means this side misses.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    value = zeta(m, n)
    k = isqrt(value)
    if k * k != value or k == 0:
        raise DomainError(f"zeta{(m, n)} = {value} is not a positive perfect square")
    tri = triangle_points(cm, m, n)
    a, b, c = cm.quad.normal
    nums = (
        tri.p[0] + tri.q[0] + sign * 2 * k * a,
        tri.p[1] + tri.q[1] + sign * 2 * k * b,
        tri.p[2] + tri.q[2] + sign * 2 * k * c,
    )
    if any(v % 3 for v in nums):
        return None
    return (nums[0] // 3, nums[1] // 3, nums[2] // 3)


def complete_tetrahedron(quad: NormalQuadruple, cm: CoeffMatrix, m: int, n: int) -> list[LatticeTetrahedron]:
    """Regular tetrahedra over the (m, n) triangle in the plane of quad.

    Returns one tetrahedron, or two when k % 3 == 0 (one on each side of
    the plane).  Every result is re-verified before it is handed back.
    """
    if quad != cm.quad:
        raise DomainError("quad does not match the coefficient matrix")
    tri = triangle_points(cm, m, n)
    out: list[LatticeTetrahedron] = []
    for sign in (1, -1):
        apex = fourth_vertex(cm, m, n, sign)
        if apex is None:
            continue
        tet = LatticeTetrahedron.from_vertices((ORIGIN, tri.p, tri.q, apex))
        if tet.side_sq != tri.side_sq:
            raise ConstructionError(
                f"completion changed the squared side: {tet.side_sq} != {tri.side_sq}")
        out.append(tet)
    return out


def enumerate_t0(ell: int, *, workers: int | None = None) -> set[LatticeTetrahedron]:
    """Every regular lattice tetrahedron with a vertex at the origin and
    squared side 2*ell*ell.

    For each odd divisor d of ell and each primitive quadruple at scale
    d, the triangles with parameters in omega(ell / d) are completed on
    both sides of their plane; duplicates collapse through the canonical
    vertex order.  The counts start 8, 8, 40, 8, 56 for ell = 1..5.
    """
    check_range("ell", ell, 1)
    jobs: list[tuple[NormalQuadruple, list[tuple[int, int]]]] = []
    for d in range(1, ell + 1, 2):
        if ell % d:
            continue
        pairs = sorted(omega(ell // d))
        for quad in solve_three_d2(d):
            jobs.append((quad, pairs))

    def run(batch) -> set[LatticeTetrahedron]:
        found: set[LatticeTetrahedron] = set()
        for quad, pairs in batch:
            cm = coeff_matrix(quad)
            for m, n in pairs:
                found.update(complete_tetrahedron(quad, cm, m, n))
        return found

    out: set[LatticeTetrahedron] = set()
    for part in map_chunks(run, jobs, worker_count(workers)):
        out |= part
    return out


def face_normals(tet: LatticeTetrahedron) -> FaceNormalSet:
    """Outward primitive normals of the four faces of tet.

    Each normal is the primitive cross product of two face edges,
    flipped to point away from the opposite vertex.  Its squared length
    is 3*d*d for an odd d dividing tet.ell; anything else would
    contradict the structure theory, so it raises ConstructionError.
    """
    faces: list[NormalQuadruple] = []
    for i in range(4):
        w1, w2, w3 = (v for j, v in enumerate(tet.vertices) if j != i)
        nrm = cross(sub(w2, w1), sub(w3, w1))
        g = gcd(gcd(abs(nrm[0]), abs(nrm[1])), abs(nrm[2]))
        nrm = (nrm[0] // g, nrm[1] // g, nrm[2] // g)
        if dot(nrm, sub(w1, tet.vertices[i])) < 0:
            nrm = (-nrm[0], -nrm[1], -nrm[2])
        norm_sq = dot(nrm, nrm)
        d = isqrt(norm_sq // 3)
        if 3 * d * d != norm_sq:
            raise ConstructionError(f"face normal {nrm} has squared length {norm_sq}, not of the form 3*d^2")
        if d % 2 == 0 or tet.ell % d:
            raise ConstructionError(f"face scale {d} does not divide ell = {tet.ell} oddly")
        faces.append(NormalQuadruple(nrm[0], nrm[1], nrm[2], d))
    return FaceNormalSet(tuple(faces))


def verify_orthogonality(fns: FaceNormalSet) -> bool:
    """Exact check of the orthogonality identities of four face normals.

    Requires a_i*a_j + b_i*b_j + c_i*c_j + d_i*d_j == 0 for all i < j,
    and the 4x4 matrix with rows (a_i, b_i, c_i, d_i) / (2*d_i) to be
    orthogonal from both sides.  All arithmetic is exact rational.
    """
    quads = fns.faces
    for i in range(4):
        for j in range(i + 1, 4):
            qi, qj = quads[i], quads[j]
            if qi.a * qj.a + qi.b * qj.b + qi.c * qj.c + qi.d * qj.d != 0:
                return False
    rows = [
        [Fraction(f.a, 2 * f.d), Fraction(f.b, 2 * f.d), Fraction(f.c, 2 * f.d), Fraction(1, 2)]
        for f in quads
    ]
    for i in range(4):
        for j in range(4):
            want = Fraction(int(i == j))
            row_dot = sum(rows[i][t] * rows[j][t] for t in range(4))
            col_dot = sum(rows[t][i] * rows[t][j] for t in range(4))
            if row_dot != want or col_dot != want:
                return False
    return True


def corollary_solution(d: int) -> tuple[NormalQuadruple, NormalQuadruple]:
    """A nontrivial pair (a, b, c), (a', b', c') with
    a^2+b^2+c^2 = a'^2+b'^2+c'^2 = 3*d^2 and a*a' + b*b' + c*c' = -d^2.

    Built from the minimal tetrahedron over the first quadruple at scale
    d: the base face normal and an adjacent face normal rescaled to
    scale d solve the system exactly.  The first element is primitive,
    so the pair never collapses to the trivial pattern
    (d, d, d), (-d, -d, d).  Requires odd d >= 3.
    """
    check_range("d", d, 3)
    if d % 2 == 0:
        raise DomainError(f"d must be odd, got {d}")
    quad = solve_three_d2(d)[0]
    cm = coeff_matrix(quad)
    tet = complete_tetrahedron(quad, cm, 1, 1)[0]
    fns = face_normals(tet)
    base: NormalQuadruple | None = None
    adjacent: NormalQuadruple | None = None
    for face in fns.faces:
        if cross(face.normal, quad.normal) == (0, 0, 0):
            base = face
        elif adjacent is None:
            adjacent = face
    if base is None or adjacent is None:
        raise ConstructionError(f"could not identify the base face for {quad}")
    factor = d // adjacent.d
    second = NormalQuadruple(adjacent.a * factor, adjacent.b * factor, adjacent.c * factor, d)
    if dot(base.normal, second.normal) != -d * d:
        raise ConstructionError(
            f"adjacent normals of {quad} break the -d^2 relation: {dot(base.normal, second.normal)}")
    return base, second
