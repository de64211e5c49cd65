"""Command-line front end.

Subcommands: ``generators``, ``polytope``, ``mutate``, ``git``, ``param``.
Exit codes: 0 success, 2 validation error, 3 certificate failure, 4 illegal
operation.  Reports are canonical JSON (sorted keys, fixed formatting) on
stdout, so identical command lines with identical seeds produce
byte-identical output; timings go to stderr.  The environment variable
``MULTICURVE_THREADS`` caps the worker threads used by the parameter
sweeps (default 1).
"""

import argparse
import json
import os
import random
import sys
import time

import numpy as np

from . import (
    classify_partition,
    cone_face_lattice,
    degree,
    enumerate_admissible,
    enumerate_barbell_trees,
    equivariance_check,
    eta_matrix,
    evaluate_F,
    flip,
    fricke_verify,
    gamma_involution,
    is_indecomposable,
    is_nondegenerate,
    load,
    mutation_transfer,
    polystable_splits,
    quadric_point,
    relative_complex,
    sphere_certificate,
    tau_matrix,
    toric_polytope,
)
from . import quadric as q
from .errors import (
    EmptyRelativeComplex,
    FlipIllegal,
    MulticurveError,
)
from .export import complex_to_json, complex_to_off, complex_to_svg

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CERTIFICATE = 3
EXIT_ILLEGAL = 4


def _emit(report):
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _load_triangulation(source):
    try:
        return load(source)
    except FileNotFoundError:
        raise MulticurveError(f"no fixture or file named {source!r}")


# ---------------------------------------------------------------------------


def cmd_generators(args):
    tri = _load_triangulation(args.source)
    barbells = enumerate_barbell_trees(tri)
    report = {
        "command": "generators",
        "input": args.source,
        "genus": tri.genus,
        "punctures": tri.punctures,
        "count": len(barbells),
        "generators": [b.to_json_dict() for b in barbells],
    }
    if args.oracle_depth:
        values = {b.coloring.values for b in barbells}
        mismatches = []
        for c in enumerate_admissible(tri, args.oracle_depth):
            if not any(c.values):
                continue
            if is_indecomposable(tri, c) != (c.values in values):
                mismatches.append(list(c.values))
        report["oracle"] = {"depth": args.oracle_depth,
                            "mismatches": mismatches}
    _emit(report)
    return EXIT_OK


def cmd_polytope(args):
    tri = _load_triangulation(args.source)
    if args.emit and not args.out:
        raise MulticurveError("--emit requires --out FILE")
    if args.relative or args.check_sphere is not None:
        cpx = relative_complex(tri)
        kind = "relative"
    else:
        lattice = cone_face_lattice(tri)
        _emit({
            "command": "polytope",
            "input": args.source,
            "kind": "cone",
            "rays": [list(r.values) for r in lattice.rays],
            "num_faces": len(lattice.faces),
            "dimension": lattice.dimension,
            "faces_per_dim": {
                str(d): len(lattice.faces_of_dim(d))
                for d in range(lattice.dimension + 1)},
        })
        return EXIT_OK

    report = {
        "command": "polytope",
        "input": args.source,
        "kind": kind,
        "f_vector": list(cpx.f_vector()),
        "homology": [{"betti": b, "torsion": tors}
                     for b, tors in cpx.homology()],
        "complex": cpx.to_json_dict(),
    }
    code = EXIT_OK
    if args.check_sphere is not None:
        cert = sphere_certificate(cpx, args.check_sphere)
        report["sphere_certificate"] = cert.to_json_dict()
        if not cert.granted:
            code = EXIT_CERTIFICATE
    _emit(report)
    if args.emit and args.out:
        writer = {"json": complex_to_json, "off": complex_to_off,
                  "svg": complex_to_svg}[args.emit]
        with open(args.out, "w") as fh:
            fh.write(writer(cpx))
    return code


def cmd_mutate(args):
    tri = _load_triangulation(args.source)
    flipped = flip(tri, args.edge)
    report = {
        "command": "mutate",
        "input": args.source,
        "edge": args.edge,
        "flipped": flipped.to_json_dict(),
    }
    if args.coloring:
        values = [int(x) for x in args.coloring.split(",")]
        out = mutation_transfer(tri, args.edge, values)
        report["coloring"] = {
            "before": values,
            "after": list(out.values),
            "degree_before": degree(tri, values),
            "degree_after": degree(flipped, out),
        }
    if args.verify_betti:
        betti = [[b for b, _t in relative_complex(t).homology()]
                 for t in (tri, flipped)]
        report["betti"] = {"before": betti[0], "after": betti[1],
                           "equal": betti[0] == betti[1]}
    _emit(report)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _parse_partition(text):
    """Blocks like "12|3|4" (1-based, single digits) or "1,2|3|4"."""
    blocks = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if "," in chunk:
            items = [int(x) for x in chunk.split(",")]
        else:
            items = [int(ch) for ch in chunk]
        blocks.append({i - 1 for i in items})
    return blocks


def cmd_git(args):
    weights = tuple(int(x) for x in args.weights.split(","))
    report = {"command": "git classify", "weights": list(weights),
              "nondegenerate": is_nondegenerate(weights)}
    if args.partition:
        blocks = _parse_partition(args.partition)
        result = classify_partition(weights, blocks)
        report["partition"] = args.partition
        report["stability"] = str(result)
    if args.polystable:
        report["polystable_splits"] = [
            [[i + 1 for i in a], [i + 1 for i in b]]
            for a, b in polystable_splits(weights)]
    if args.toric:
        report["toric_polytope"] = toric_polytope(weights).to_json_dict()
    _emit(report)
    return EXIT_OK


# ---------------------------------------------------------------------------


def _thread_chunks(n):
    threads = max(1, int(os.environ.get("MULTICURVE_THREADS", "1")))
    if threads == 1 or n < 2 * threads:
        return [n]
    base = n // threads
    chunks = [base] * threads
    chunks[0] += n - base * threads
    return chunks


def _float_param_sweep(samples, seed):
    worst = {"equivariance": 0.0, "det": 0.0, "trace": 0.0,
             "gamma": 0.0, "tau_imag": 0.0, "eta_unitary": 0.0}

    def chunk(n, sub_rng):
        p = q.float_point_arrays(sub_rng, n)
        pt = q.float_point_arrays(sub_rng, n)
        rho = q.float_mobius_arrays(sub_rng, n)
        cp = q.float_conic_arrays(sub_rng, n)
        rep = equivariance_check(rho, p, pt, cp)
        qp = quadric_point(p, pt, cp)
        det_r, tr_r = q.quadric_identity_residuals(qp, cp)
        # gamma involution invariance of F for a single factor
        t_last = sub_rng.standard_normal(n)
        f0 = evaluate_F([p, pt], [cp], t_last)
        pts2, cps2 = gamma_involution(1, [p, pt], [cp])
        f1 = evaluate_F(pts2, cps2, t_last)
        scale = np.maximum(1.0, np.abs(f0))
        # tau realness / eta unitarity on elliptic traces
        t_ell = sub_rng.uniform(-1.99, 1.99, n)
        tau_imag = 0.0
        eta_res = 0.0
        for i in range(min(n, 200)):  # scalar loops kept small
            pp = q.ProjectivePoint(complex(p.x1[i]), complex(p.x2[i]))
            try:
                tq = tau_matrix(pp, float(t_ell[i]))
            except MulticurveError:
                continue
            tau_imag = max(tau_imag, max(
                abs(x.imag) for row in tq.a for x in row))
            em = eta_matrix(pp, float(t_ell[i]))
            ct = ((em[0][0].conjugate(), em[1][0].conjugate()),
                  (em[0][1].conjugate(), em[1][1].conjugate()))
            prod = q.mat_mul(em, ct)
            eta_res = max(eta_res, q.mat_max_abs(
                q.mat_sub(prod, ((1, 0), (0, 1)))))
        return {
            "equivariance": rep.residual,
            "det": float(np.max(np.abs(det_r))),
            "trace": float(np.max(np.abs(tr_r))),
            "gamma": float(np.max(np.abs(f1 - f0) / scale)),
            "tau_imag": tau_imag,
            "eta_unitary": eta_res,
        }

    from concurrent.futures import ThreadPoolExecutor
    chunks = _thread_chunks(samples)
    seeds = [seed + 1000 * i for i in range(len(chunks))]
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        results = list(pool.map(
            lambda cs: chunk(cs[0], np.random.default_rng(cs[1])),
            zip(chunks, seeds)))
    for res in results:
        for key, val in res.items():
            worst[key] = max(worst[key], val)
    return worst


def _exact_param_sweep(samples, seed):
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        p = q.random_projective_point_exact(rng)
        pt = q.random_projective_point_exact(rng)
        rho = q.random_mobius_exact(rng)
        cp = q.conic_from_beta(q.random_rational_nonzero(rng))
        if not equivariance_check(rho, p, pt, cp):
            failures += 1
        qp = quadric_point(p, pt, cp)
        det_r, tr_r = q.quadric_identity_residuals(qp, cp)
        if det_r != 0 or tr_r != 0:
            failures += 1
        pts, cps = [p, pt], [cp]
        t_last = q.random_rational(rng)
        f0 = evaluate_F(pts, cps, t_last)
        pts2, cps2 = gamma_involution(1, pts, cps)
        if evaluate_F(pts2, cps2, t_last) != f0:
            failures += 1
    return failures


def cmd_param(args):
    t0 = time.time()
    if args.action == "check":
        if args.backend == "float":
            worst = _float_param_sweep(args.samples, args.seed)
            tol = 1e-12
            report = {
                "command": "param check",
                "backend": "float",
                "samples": args.samples,
                "seed": args.seed,
                "tolerance": tol,
                "max_residuals": {k: f"{v:.3e}" for k, v in worst.items()},
                "failures": sum(1 for v in worst.values() if v > tol),
            }
        else:
            failures = _exact_param_sweep(args.samples, args.seed)
            report = {
                "command": "param check",
                "backend": "exact",
                "samples": args.samples,
                "seed": args.seed,
                "failures": failures,
            }
    else:  # fricke
        if args.backend == "float":
            rng_np = np.random.default_rng(args.seed)

            def sl2(n):
                a = q.complex_array(rng_np, n)
                a = np.where(np.abs(a) < 0.5, a + 1.0, a)
                b = q.complex_array(rng_np, n)
                c = q.complex_array(rng_np, n)
                return ((a, b), (c, (1 + b * c) / a))

            res = fricke_verify(sl2(args.samples), sl2(args.samples),
                                sl2(args.samples))
            worst = float(np.max(res))
            report = {
                "command": "param fricke",
                "backend": "float",
                "samples": args.samples,
                "seed": args.seed,
                "max_residual": f"{worst:.3e}",
                "failures": int(worst >= 1e-9),
            }
        else:
            rng = random.Random(args.seed)
            failures = 0
            for _ in range(args.samples):
                res = fricke_verify(q.random_sl2_rational(rng),
                                    q.random_sl2_rational(rng),
                                    q.random_sl2_rational(rng))
                if res != 0:
                    failures += 1
            report = {
                "command": "param fricke",
                "backend": "exact",
                "samples": args.samples,
                "seed": args.seed,
                "failures": failures,
            }
    _emit(report)
    print(f"elapsed {time.time() - t0:.2f}s", file=sys.stderr)
    return EXIT_OK if report.get("failures", 0) == 0 else EXIT_CERTIFICATE


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="multicurve",
        description="multicurve monoids, boundary polytopes, and trace "
                    "parametrization checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generators",
                           help="enumerate barbell-tree generators")
    p_gen.add_argument("source", help="fixture name or triangulation JSON")
    p_gen.add_argument("--oracle-depth", type=int, nargs="?", const=12,
                       default=0,
                       help="also run the indecomposability oracle up to "
                            "this degree (bare flag means 12)")
    p_gen.set_defaults(func=cmd_generators)

    p_poly = sub.add_parser("polytope", help="cone lattice or relative "
                                             "complex reports")
    p_poly.add_argument("source")
    p_poly.add_argument("--relative", action="store_true")
    p_poly.add_argument("--check-sphere", type=int, default=None,
                        metavar="D")
    p_poly.add_argument("--emit", choices=["json", "off", "svg"])
    p_poly.add_argument("--out", help="file for --emit output")
    p_poly.set_defaults(func=cmd_polytope)

    p_mut = sub.add_parser("mutate", help="flip an edge, transfer colorings")
    p_mut.add_argument("source")
    p_mut.add_argument("edge", type=int)
    p_mut.add_argument("--coloring", help="comma-separated color vector")
    p_mut.add_argument("--verify-betti", action="store_true")
    p_mut.set_defaults(func=cmd_mutate)

    p_git = sub.add_parser("git", help="stability of weighted points")
    git_sub = p_git.add_subparsers(dest="action", required=True)
    p_cls = git_sub.add_parser("classify")
    p_cls.add_argument("--weights", required=True)
    p_cls.add_argument("--partition")
    p_cls.add_argument("--polystable", action="store_true")
    p_cls.add_argument("--toric", action="store_true")
    p_cls.set_defaults(func=cmd_git)

    p_par = sub.add_parser("param", help="parametrization identity sweeps")
    par_sub = p_par.add_subparsers(dest="action", required=True)
    for action in ("check", "fricke"):
        pp = par_sub.add_parser(action)
        pp.add_argument("--samples", type=int, default=1000)
        pp.add_argument("--seed", type=int, default=0)
        pp.add_argument("--backend", choices=["exact", "float"],
                        default="float")
        pp.set_defaults(func=cmd_param)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FlipIllegal as err:
        print(f"illegal operation: {err}", file=sys.stderr)
        return EXIT_ILLEGAL
    except EmptyRelativeComplex as err:
        print(f"validation error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except MulticurveError as err:
        print(f"validation error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, KeyError, json.JSONDecodeError) as err:
        print(f"validation error: {err}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
