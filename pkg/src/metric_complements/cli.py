"""Command line entry point: ``metcomp {oracle,witness,simplex,verify}``."""
import argparse
import json
import sys

import numpy as np

from . import lab, simplex, witnesses
from .bodies import ANALYTIC_TOL, SandwichSet
from .complements import double_complement_membership
from .errors import GeometryError
from .shapes import body_to_dict, load_shape

VECTOR_KEYS = {"x", "y", "x0", "zeta", "center"}


def parse_vector(text):
    return np.array([float(v) for v in str(text).split(",") if v.strip()], dtype=float)


def parse_params(items):
    """``k=v`` pairs; comma lists and the point-valued keys become vectors."""
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"parameter {item!r} is not of the form key=value")
        key = key.strip()
        if key in VECTOR_KEYS or "," in value:
            out[key] = parse_vector(value)
        else:
            out[key] = float(value)
    return out


def parse_bbox(text):
    if text is None:
        return None
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError("bbox must look like lo1,lo2:hi1,hi2")
    return parse_vector(lo), parse_vector(hi)


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def emit(data, out=None):
    text = json.dumps(_jsonable(data), indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# --------------------------------------------------------------------------


def cmd_oracle(args):
    body = load_shape(args.shape)
    if args.action == "classify":
        if args.point is None:
            raise ValueError("classify needs --point")
        verdict = double_complement_membership(body, parse_vector(args.point), args.tol)
        emit(verdict.to_dict())
        return 0
    g = lab.build_grid_oracle(body, parse_bbox(args.bbox), args.step, args.eps)
    summary = {"body": body_to_dict(body), "bbox": [g.bbox[0], g.bbox[1]],
               "step": g.step, "eps": g.eps, "points": len(g.points), "counts": g.counts()}
    if args.point is not None:
        margin = args.margin if args.margin is not None else g.eps + g.resolution
        summary["point"] = parse_vector(args.point)
        summary["margin"] = margin
        summary["double_complement"] = lab.oracle_double_complement(g, summary["point"], margin)
    if args.out:
        np.savez_compressed(args.out, points=g.points, labels=g.labels, distances=g.distances,
                            lower=g.bbox[0], upper=g.bbox[1], step=g.step, eps=g.eps)
        summary["saved"] = args.out
    emit(summary)
    return 0


def cmd_witness(args):
    p = parse_params(args.params)
    tol = p.pop("tol", ANALYTIC_TOL)
    if args.kind == "transport":
        xi, eta = witnesses.ball_transport(p["x"], p["y"], p["lam"], p["r"], p["zeta"])
        z = (1 - p["lam"]) * p["x"] + p["lam"] * p["y"]
        emit({"z": z, "xi": xi, "eta": eta, "lambda": p["lam"], "r": p["r"],
              "recombined": (1 - p["lam"]) * xi + p["lam"] * eta})
        return 0
    if args.shape is None:
        raise ValueError(f"witness {args.kind} needs --shape")
    K = load_shape(args.shape)
    if args.kind == "segment":
        w = witnesses.segment_interior(K, p["x"], p["r"], p["y"], p["lam"], tol)
    elif args.kind == "density":
        w = witnesses.density_witness(K, p["x0"], p["r"], p["y"], p["eps"], tol)
    else:
        w = witnesses.closure_interior_witness(K, p["x0"], p["r"], p["y"], p["s"], tol)
    out = w.to_dict()
    out["verified"] = witnesses.verify_certificate(w.certificate)
    emit(out)
    return 0


def cmd_simplex(args):
    n = args.dim
    base = simplex.regular_simplex(n)
    center = np.zeros(n) if args.center is None else parse_vector(args.center)
    s = simplex.scaled_simplex(center, args.scale) if (args.center or args.scale != 1.0) else base
    V = s.vertices
    report = simplex.regularity_report(V, center, args.scale)
    report["distances_to_center"] = np.linalg.norm(V - center, axis=1)
    report["barycentre"] = simplex.barycentre(s)
    report["inradius"] = simplex.inradius_at(s, center)
    report["expected_inradius"] = args.scale / n
    out = {"vertices": V, "report": report}
    if args.check:
        rng = np.random.default_rng(args.seed)
        delta = simplex.perturbation_tolerance(s, center, rng, trials=args.trials)
        out["perturbation"] = simplex.perturbation_check(
            s, center, delta * (1 - 1e-3), np.random.default_rng(args.seed + 1), args.trials)
        out["perturbation"]["delta"] = delta
    emit(out)
    return 0


def cmd_verify(args):
    if (args.shape is None) == (args.random is None):
        raise ValueError("give exactly one of --shape and --random")
    if args.shape:
        body = load_shape(args.shape)
    else:
        kind, dim, complexity = args.random.split(",")
        body = lab.random_body(kind, int(dim), int(complexity), args.seed)
    if isinstance(body, SandwichSet) and args.theorem != "located-interior":
        raise ValueError("sandwich sets only support the located-interior campaign")
    report = lab.verify_theorem(args.theorem, body, args.step, args.eps, args.samples,
                                args.seed, parse_bbox(args.bbox), args.band, args.margin)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json() + "\n")
    print(report.summary())
    for v in report.violations:
        print(f"  violation at {v['point']}")
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="metcomp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    o = sub.add_parser("oracle", help="grid oracle and interior classification")
    o.add_argument("action", choices=["build", "classify"])
    o.add_argument("--shape", required=True)
    o.add_argument("--point")
    o.add_argument("--tol", type=float, default=ANALYTIC_TOL)
    o.add_argument("--step", type=float, default=0.01)
    o.add_argument("--eps", type=float, default=0.02)
    o.add_argument("--bbox", help="lo1,lo2,...:hi1,hi2,...")
    o.add_argument("--margin", type=float)
    o.add_argument("--out", help="save the labelled grid as .npz")
    o.set_defaults(func=cmd_oracle)

    w = sub.add_parser("witness", help="constructive interior witnesses")
    w.add_argument("kind", choices=["transport", "segment", "density", "closure"])
    w.add_argument("--shape")
    w.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    w.set_defaults(func=cmd_witness)

    s = sub.add_parser("simplex", help="regular simplex and its checks")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--check", action="store_true", help="also compute the perturbation radius")
    s.add_argument("--scale", type=float, default=1.0)
    s.add_argument("--center")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_simplex)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--theorem", required=True, choices=lab.THEOREMS)
    v.add_argument("--shape")
    v.add_argument("--random", metavar="KIND,DIM,COMPLEXITY")
    v.add_argument("--step", type=float, default=0.01)
    v.add_argument("--eps", type=float, default=0.02)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bbox")
    v.add_argument("--band", type=float)
    v.add_argument("--margin", type=float)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GeometryError, ValueError, KeyError, OSError) as exc:
        name = type(exc).__name__
        print(f"error: {name}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
