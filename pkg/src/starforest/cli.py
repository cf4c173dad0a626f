"""Command-line entry point.

Exit status: 0 success, 1 verification failure (or exhausted node budget),
2 usage or input error, 3 internal proof-invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .constructions import (
    four_cluster_forests,
    k_star_forest_cover,
    star_decomposition,
    two_star_forest_cover,
)
from .exceptions import InvalidInput, NodeLimitExceeded, ProofInvariantViolation, StarForestError
from .forest import project_to_decomposition, verify_covering, verify_decomposition
from .fuzz import random_covering
from .geometry import gen_convex, gen_four_cluster
from .recolor import make_all_supported_up_to, theorem1_descent
from .render import render_svg
from .search import (
    MODES,
    decide_k_star_forest_decomposition,
    decide_plane_decomposition,
    min_k_star_forests,
    min_plane_star_forests,
    node_limit_from_env,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PROOF = 0, 1, 2, 3


def _load_covering(path):
    return io.covering_from_dict(io.read_json(path))


def cmd_construct(args):
    clusters = None
    if args.family == "stars":
        cov = star_decomposition(args.n, None if args.abstract else gen_convex(args.n))
    elif args.family == "two-star":
        cov = two_star_forest_cover(args.n)
    elif args.family == "four-cluster":
        cps = gen_four_cluster(args.k, seed=args.seed)
        cov, clusters = four_cluster_forests(cps), cps.clusters
    elif args.family == "k-star":
        cov = k_star_forest_cover(args.n, args.k)
    else:
        cov = random_covering(args.n, args.seed, moves=args.moves, extra_forests=args.extra)
    data = io.covering_to_dict(cov, clusters)
    if args.family == "random":
        data["seed"] = args.seed
    io.write_text(io.dumps(data), args.output)
    return EXIT_OK


def cmd_verify(args):
    cov = _load_covering(args.file)
    rep = verify_decomposition(cov) if args.decomposition else verify_covering(cov)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_project(args):
    cov = project_to_decomposition(_load_covering(args.file))
    io.write_text(io.dumps(io.covering_to_dict(cov)), args.output)
    return EXIT_OK


def cmd_recolor(args):
    cov = _load_covering(args.file)
    rep = verify_covering(cov)
    if not rep.ok:
        print(rep, file=sys.stderr)
        return EXIT_VERIFY
    trace: list = []
    out = make_all_supported_up_to(cov, args.k, trace=trace)
    payload = {"covering": io.covering_to_dict(out), "k": args.k, "trace": trace}
    io.write_text(io.dumps(payload), args.output)
    return EXIT_OK


def cmd_descend(args):
    cert = theorem1_descent(_load_covering(args.file))
    io.write_text(io.dumps(io.certificate_to_dict(cert)), args.output)
    return EXIT_OK


def cmd_search(args):
    limit = node_limit_from_env()
    if args.problem == "plane":
        ps = gen_convex(args.n)
        if args.t is None:
            res = min_plane_star_forests(ps, args.mode, limit)
        else:
            witness = decide_plane_decomposition(ps, args.t, args.mode, limit)
    else:
        if args.k is None:
            raise InvalidInput("search kstar needs --k")
        if args.t is None:
            res = min_k_star_forests(args.n, args.k, args.mode, limit)
        else:
            witness = decide_k_star_forest_decomposition(args.n, args.k, args.t, args.mode, limit)
    if args.t is None:
        data = io.search_result_to_dict(res)
    else:
        data = {
            "problem": args.problem, "n": args.n, "k": args.k, "t": args.t, "mode": args.mode,
            "feasible": witness is not None, "exhausted": witness is None,
            "witness": None if witness is None else io.covering_to_dict(witness),
        }
    io.write_text(io.dumps(data), args.output)
    return EXIT_OK


def _edge_arg(text):
    try:
        u, v = (int(x) for x in text.replace(",", "-").split("-"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected U-V, got {text!r}")
    return (u, v)


def cmd_render(args):
    cov = _load_covering(args.file)
    io.write_text(render_svg(cov, absent=args.absent or ()), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starforest", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")

    c = sub.add_parser("construct", help="emit a covering as JSON")
    c.add_argument("family", choices=["stars", "two-star", "four-cluster", "k-star", "random"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--moves", type=int, default=60, help="random: number of attempted moves")
    c.add_argument("--extra", type=int, default=0, help="random: forests beyond n - 1")
    c.add_argument("--abstract", action="store_true", help="stars: omit the convex geometry")
    c.set_defaults(func=cmd_construct)
    out(c)

    v = sub.add_parser("verify", help="check a covering; exit 0 iff clean")
    v.add_argument("file")
    v.add_argument("--decomposition", action="store_true", help="also forbid multi-covered edges")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("project", help="keep each edge in its lowest-index forest")
    pr.add_argument("file")
    pr.set_defaults(func=cmd_project)
    out(pr)

    r = sub.add_parser("recolor", help="support every span up to --k")
    r.add_argument("file")
    r.add_argument("--k", type=int, required=True)
    r.set_defaults(func=cmd_recolor)
    out(r)

    d = sub.add_parser("descend", help="write a spanning-star descent certificate")
    d.add_argument("file")
    d.set_defaults(func=cmd_descend)
    out(d)

    s = sub.add_parser("search", help="exhaustive optimum or decision search")
    s.add_argument("problem", choices=["plane", "kstar"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--t", type=int, help="decide this budget instead of minimizing")
    s.add_argument("--mode", choices=MODES, default="pruned")
    s.set_defaults(func=cmd_search)
    out(s)

    rd = sub.add_parser("render", help="draw a covering as SVG")
    rd.add_argument("file")
    rd.add_argument("--absent", type=_edge_arg, action="append",
                    help="dotted marker for an absent edge, as U-V (repeatable)")
    rd.set_defaults(func=cmd_render)
    out(rd)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    needs = {"two-star": ("n",), "stars": ("n",), "k-star": ("n", "k"),
             "four-cluster": ("k",), "random": ("n",)}
    if args.command == "construct":
        missing = [f"--{x}" for x in needs[args.family] if getattr(args, x) is None]
        if missing:
            parser.error(f"construct {args.family} needs {' '.join(missing)}")
    try:
        return args.func(args)
    except ProofInvariantViolation as e:
        print(f"proof invariant violated: {e}", file=sys.stderr)
        return EXIT_PROOF
    except (InvalidInput, NodeLimitExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (StarForestError, OSError, ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
