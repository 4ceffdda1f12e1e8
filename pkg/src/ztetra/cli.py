"""Command line interface emitting line-delimited structured records.

Every subcommand prints one JSON object per line with stable field
names, sorted keys and no whitespace, so identical arguments give
byte-identical output across runs and thread counts.  --format csv is a
flat alternative for count records.  Exit codes: 0 success, 1 domain or
verification failure (including a nonempty diff), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .eisenstein import EisensteinTriple, omega, primitive_triples, zeta
from .errors import DomainError, UsageError, VerificationError, ZtetraError
from .numtheory import INT64_MAX, NormalQuadruple, solve_three_d2
from .oracle import (
    brute_t0,
    brute_tetrahedra_grid,
    brute_triangles_grid,
    compare,
    compare_with_bfile,
    read_bfile,
)
from .tetra import (
    FaceNormalSet,
    LatticeTetrahedron,
    complete_tetrahedron,
    enumerate_t0,
    face_normals,
    fourth_vertex,
    verify_orthogonality,
    verify_regular,
)
from .triangle import ORIGIN, coeff_matrix, triangle_points, verify_equilateral


class Emitter:
    """Writes records in the selected format.

    CSV is only defined for count records; emitting anything else in
    csv mode is a usage error.
    """

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt
        self._csv_fields: list[str] | None = None

    def emit(self, record: dict) -> None:
        if self.fmt == "jsonl":
            print(json.dumps(record, sort_keys=True, separators=(",", ":")))
            return
        if record.get("kind") != "count":
            raise UsageError("--format csv supports count records only")
        if self._csv_fields is None:
            self._csv_fields = sorted(record)
            print(",".join(self._csv_fields))
        print(",".join(str(record.get(f, "")) for f in self._csv_fields))


def checked_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if abs(value) > INT64_MAX:
        raise argparse.ArgumentTypeError(f"integer out of the 64-bit safe range: {text}")
    return value


def quad_arg(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected a,b,c,d with four integers, got {text!r}")
    a, b, c, d = (checked_int(p) for p in parts)
    return (a, b, c, d)


def _quad_record(quad: NormalQuadruple) -> dict:
    return {"kind": "quadruple", "a": quad.a, "b": quad.b, "c": quad.c, "d": quad.d, "q": quad.q}


def _pair_record(m: int, n: int, k: int) -> dict:
    return {"kind": "pair", "m": m, "n": n, "k": k}


def _triple_record(t: EisensteinTriple) -> dict:
    return {"kind": "triple", "m": t.m, "n": t.n, "k": t.k, "u": t.u, "v": t.v, "form": t.form}


def _tetra_record(tet: LatticeTetrahedron, provenance: dict) -> dict:
    return {
        "kind": "tetrahedron",
        "vertices": [list(v) for v in tet.vertices],
        "side_sq": tet.side_sq,
        "ell": tet.ell,
        "provenance": provenance,
    }


def _normal_set_record(fns: FaceNormalSet, provenance: dict) -> dict:
    return {
        "kind": "normal-set",
        "faces": [[f.a, f.b, f.c, f.d] for f in fns.faces],
        "provenance": provenance,
    }


def cmd_solve3d2(args, out: Emitter) -> int:
    for quad in solve_three_d2(args.d):
        out.emit(_quad_record(quad))
    return 0


def cmd_omega(args, out: Emitter) -> int:
    for m, n in sorted(omega(args.k)):
        out.emit(_pair_record(m, n, args.k))
    return 0


def cmd_triples(args, out: Emitter) -> int:
    for t in primitive_triples(args.kmax):
        out.emit(_triple_record(t))
    return 0


def cmd_triangles(args, out: Emitter) -> int:
    quad = NormalQuadruple(*args.quad)
    cm = coeff_matrix(quad)
    tri = triangle_points(cm, args.m, args.n)
    out.emit({
        "kind": "triangle",
        "p": list(tri.p),
        "q": list(tri.q),
        "side_sq": tri.side_sq,
        "provenance": {"quad": list(args.quad), "r": cm.rs.r, "s": cm.rs.s, "m": args.m, "n": args.n},
    })
    return 0


def cmd_complete(args, out: Emitter) -> int:
    quad = NormalQuadruple(*args.quad)
    cm = coeff_matrix(quad)
    tri = triangle_points(cm, args.m, args.n)
    for sign in (1, -1):
        apex = fourth_vertex(cm, args.m, args.n, sign)
        if apex is None:
            continue
        tet = LatticeTetrahedron.from_vertices((ORIGIN, tri.p, tri.q, apex))
        provenance = {
            "quad": list(args.quad),
            "r": cm.rs.r,
            "s": cm.rs.s,
            "m": args.m,
            "n": args.n,
            "sign": sign,
        }
        out.emit(_tetra_record(tet, provenance))
        if args.with_normals:
            out.emit(_normal_set_record(face_normals(tet), provenance))
    return 0


def cmd_enumerate_t0(args, out: Emitter) -> int:
    tets = sorted(enumerate_t0(args.ell), key=lambda t: t.vertices)
    if not args.count_only:
        for tet in tets:
            out.emit(_tetra_record(tet, {"ell": args.ell}))
    out.emit({"kind": "count", "what": "tetrahedra_t0", "ell": args.ell, "value": len(tets)})
    return 0


def cmd_grid_count(args, out: Emitter) -> int:
    scan = brute_tetrahedra_grid if args.shape == "tetra" else brute_triangles_grid
    what = "grid_tetrahedra" if args.shape == "tetra" else "grid_triangles"
    value = len(scan(args.n))
    out.emit({"kind": "count", "what": what, "n": args.n, "shape": args.shape, "value": value})
    if args.bfile is None:
        return 0
    counts = {n: (value if n == args.n else len(scan(n))) for n in range(args.n + 1)}
    for report in compare_with_bfile(counts, read_bfile(args.bfile)):
        out.emit({
            "kind": "diff",
            "what": "bfile",
            "shape": args.shape,
            "offset": report.offset,
            "matched": report.matched,
            "mismatches": [list(t) for t in report.mismatches],
            "missing": list(report.missing),
        })
    return 0


def cmd_oracle_compare(args, out: Emitter) -> int:
    report = compare(enumerate_t0(args.ell), brute_t0(args.ell))
    out.emit({
        "kind": "diff",
        "what": "t0_oracle",
        "ell": args.ell,
        "missing": [[list(v) for v in t.vertices] for t in report.missing],
        "extra": [[list(v) for v in t.vertices] for t in report.extra],
    })
    return 0 if report.is_empty() else 1


def _verify_record(rec: dict) -> None:
    kind = rec.get("kind")
    if kind == "tetrahedron":
        verts = [tuple(v) for v in rec["vertices"]]
        side_sq = verify_regular(*verts)
        if side_sq != rec["side_sq"]:
            raise VerificationError(f"recorded side_sq {rec['side_sq']} != {side_sq}")
        if "ell" in rec and 2 * rec["ell"] ** 2 != side_sq:
            raise VerificationError(f"recorded ell {rec['ell']} does not square to {side_sq}")
    elif kind == "triangle":
        side_sq = verify_equilateral(tuple(rec["p"]), tuple(rec["q"]))
        if side_sq != rec["side_sq"]:
            raise VerificationError(f"recorded side_sq {rec['side_sq']} != {side_sq}")
    elif kind == "quadruple":
        quad = NormalQuadruple(rec["a"], rec["b"], rec["c"], rec["d"])
        if "q" in rec and rec["q"] != quad.q:
            raise VerificationError(f"recorded q {rec['q']} != {quad.q}")
    elif kind == "normal-set":
        faces = tuple(NormalQuadruple(*f) for f in rec["faces"])
        if not verify_orthogonality(FaceNormalSet(faces)):
            raise VerificationError("face normals fail the orthogonality identities")
    elif kind == "pair":
        if zeta(rec["m"], rec["n"]) != rec["k"] ** 2:
            raise VerificationError(f"zeta({rec['m']}, {rec['n']}) != {rec['k']}^2")
    elif kind == "triple":
        EisensteinTriple(rec["m"], rec["n"], rec["k"])
    elif kind not in ("count", "diff"):
        raise DomainError(f"unknown record kind: {kind!r}")


def cmd_verify(args, out: Emitter) -> int:
    path = Path(args.file)
    if not path.exists():
        raise DomainError(f"no such file: {path}")
    checked = 0
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
            if not isinstance(rec, dict):
                raise DomainError("record is not an object")
            _verify_record(rec)
        except ZtetraError as exc:
            raise VerificationError(f"{path}:{lineno}: {exc}") from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"{path}:{lineno}: malformed record ({exc})") from exc
        checked += 1
    out.emit({"kind": "count", "what": "verified_records", "value": checked})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ztetra",
        description="Construct, enumerate, count and verify equilateral triangles "
        "and regular tetrahedra with integer coordinates.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("jsonl", "csv"), default="jsonl",
                        help="output format (csv covers count records only)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve3d2", parents=[common],
                       help="primitive quadruples a^2+b^2+c^2 = 3d^2 for one odd d")
    p.add_argument("--d", type=checked_int, required=True)
    p.set_defaults(func=cmd_solve3d2)

    p = sub.add_parser("omega", parents=[common],
                       help="all (m, n) with m^2 - mn + n^2 = k^2")
    p.add_argument("--k", type=checked_int, required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("triples", parents=[common],
                       help="primitive positive (m, n, k) with m^2 - mn + n^2 = k^2, k <= kmax")
    p.add_argument("--kmax", type=checked_int, required=True)
    p.set_defaults(func=cmd_triples)

    p = sub.add_parser("triangles", parents=[common],
                       help="the equilateral triangle of a plane and parameter pair")
    p.add_argument("--quad", type=quad_arg, required=True, metavar="a,b,c,d")
    p.add_argument("--m", type=checked_int, required=True)
    p.add_argument("--n", type=checked_int, required=True)
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("complete", parents=[common],
                       help="extend a triangle to its regular tetrahedra")
    p.add_argument("--quad", type=quad_arg, required=True, metavar="a,b,c,d")
    p.add_argument("--m", type=checked_int, required=True)
    p.add_argument("--n", type=checked_int, required=True)
    p.add_argument("--with-normals", action="store_true",
                   help="also emit the face normal set of each tetrahedron")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("enumerate-t0", parents=[common],
                       help="all origin tetrahedra with squared side 2*ell^2")
    p.add_argument("--ell", type=checked_int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate_t0)

    p = sub.add_parser("grid-count", parents=[common],
                       help="brute-force shape count over the cube {0..n}^3")
    p.add_argument("--n", type=checked_int, required=True)
    p.add_argument("--shape", choices=("tetra", "triangle"), required=True)
    p.add_argument("--bfile", default=None, help="OEIS b-file to compare against")
    p.set_defaults(func=cmd_grid_count)

    p = sub.add_parser("oracle-compare", parents=[common],
                       help="diff the parametrized origin enumeration against brute force")
    p.add_argument("--ell", type=checked_int, required=True)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("verify", parents=[common],
                       help="re-verify a file of emitted records")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Emitter(args.format)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ZtetraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # Downstream reader (e.g. head) closed the pipe; exit quietly.
        # Redirect stdout to devnull so the interpreter's final flush
        # does not raise a second time.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1


if __name__ == "__main__":
    sys.exit(main())
