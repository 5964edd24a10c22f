"""Command line driver: estimate, exact, gen, verify-lemmas, doulion.

Every command except ``gen`` prints one JSON object with sorted keys, so
identical invocations give byte-identical output; ``--format human``
prints the same object indented.  ``gen`` writes a stream file to stdout.
Exit codes: 0 success, 2 bad input, 3 no sparsifier copy qualified,
4 internal invariant violation.
"""

import argparse
import json
import random
import sys
from dataclasses import asdict

from . import __version__
from .baselines import DoulionCounter
from .estimator import NoQualifiedCopiesError, derive_config, estimate_triangles
from .generators import (
    complete_bipartite_edges,
    complete_edges,
    edges_to_events,
    gnp_edges,
    path_edges,
    planted_cluster_edges,
    star_edges,
    with_churn,
)
from .hashing import mix2
from .indep_paths import HasIsolatedEdgesError, NotConnectedError, verify_lower_bounds
from .oracles import graph_stats
from .stream_core import (
    AdjacencyGraph,
    StreamConfig,
    StreamError,
    materialize,
    read_stream,
    write_stream,
)


def _load_events(path: str, n: int | None):
    if path == "-":
        return read_stream(sys.stdin, n)
    with open(path, encoding="utf-8") as f:
        return read_stream(f, n)


def _infer_n(events) -> int:
    return max((e.v for e in events), default=2)


def _validated_graph(events, n: int) -> AdjacencyGraph:
    return materialize(events, StreamConfig(n=n, m_max=max(1, len(events))))


# -- commands (each returns (payload | None, exit_code)) ----------------


def _cmd_estimate(args):
    events = _load_events(args.stream, args.n)
    materialize(events, StreamConfig(n=args.n, m_max=args.m_max))
    cfg = derive_config(
        n=args.n,
        m_max=args.m_max,
        epsilon=args.epsilon,
        delta=args.delta,
        alpha_min=args.alpha_min,
        seed=args.seed,
        k_override=args.k_override,
        s_override=args.s_override,
        colors_override=args.colors_override,
    )
    report = estimate_triangles(events, cfg)
    payload = report.to_dict()
    payload["config"] = asdict(cfg)
    return payload, 0


def _cmd_exact(args):
    events = _load_events(args.stream, args.n)
    n = args.n if args.n is not None else _infer_n(events)
    stats = graph_stats(_validated_graph(events, n))
    return (
        {
            "config": {"n": n},
            "t3": stats.t3,
            "p2": stats.p2,
            "f2": stats.f2,
            "m": stats.m,
            "n_touched": stats.n_touched,
            "alpha": stats.alpha,
        },
        0,
    )


def _family_edges(family: str, params: list[str], seed: int):
    """Build (edges, n) for a generator family from CLI positionals."""

    def want(k: int):
        if len(params) != k:
            raise ValueError(f"family {family!r} takes {k} size parameter(s), got {len(params)}")

    if family == "complete":
        want(1)
        n = int(params[0])
        return complete_edges(n), n
    if family == "path":
        want(1)
        n = int(params[0])
        return path_edges(n), n
    if family == "star":
        want(1)
        n = int(params[0])
        return star_edges(n), n
    if family == "bipartite-complete":
        want(2)
        a, b = int(params[0]), int(params[1])
        return complete_bipartite_edges(a, b), a + b
    if family == "gnp":
        want(2)
        n, p = int(params[0]), float(params[1])
        return gnp_edges(n, p, seed=seed), n
    if family == "planted-triangles":
        want(2)
        return planted_cluster_edges(int(params[0]), int(params[1]))
    raise ValueError(f"unknown family {family!r}")


def _cmd_gen(args):
    if not (0 <= args.delete_fraction < 1):
        raise ValueError(f"--delete-fraction must be in [0, 1), got {args.delete_fraction}")
    edges, n = _family_edges(args.family, args.params, args.seed)
    if args.delete_fraction > 0:
        decoys = int(args.delete_fraction * len(edges) + 0.5)
        events, n = with_churn(edges, decoys, seed=args.seed, n_base=n)
    else:
        events = edges_to_events(edges)
    sys.stdout.write(f"# n={n}\n")
    write_stream(events, sys.stdout)
    return None, 0


def _sweep_fixture(rng: random.Random):
    """One random connected, no-isolated-edge graph as an adjacency dict."""
    while True:
        n = rng.randint(4, 16)
        p = rng.uniform(0.2, 0.7)
        edges = gnp_edges(n, p, seed=rng.randrange(2**32))
        if not edges:
            continue
        g = AdjacencyGraph()
        for u, v in edges:
            g.insert(u, v)
        try:
            return verify_lower_bounds(g.adj)
        except (NotConnectedError, HasIsolatedEdgesError):
            continue


def _cmd_verify(args):
    if args.sweep is not None:
        if args.sweep < 1:
            raise ValueError(f"--sweep must be positive, got {args.sweep}")
        rng = random.Random(args.seed)
        violations = 0
        for _ in range(args.sweep):
            rep = _sweep_fixture(rng)
            if not (rep.connected_ok and rep.general_ok and rep.bipartite_ok is not False):
                violations += 1
        payload = {"config": {"sweep": args.sweep}, "fixtures": args.sweep, "violations": violations}
    else:
        if args.stream is None:
            raise ValueError("verify-lemmas needs a stream file or --sweep")
        events = _load_events(args.stream, None)
        n = _infer_n(events)
        rep = verify_lower_bounds(_validated_graph(events, n).adj)
        violations = (
            int(not rep.connected_ok)
            + int(not rep.general_ok)
            + int(rep.bipartite_ok is False)
        )
        payload = {"config": {"n": n}, "report": asdict(rep), "violations": violations}
    return payload, (4 if violations else 0)


def _cmd_doulion(args):
    if not (0 < args.p <= 1):
        raise ValueError(f"--p must be in (0, 1], got {args.p}")
    if args.trials < 1:
        raise ValueError(f"--trials must be positive, got {args.trials}")
    events = _load_events(args.stream, args.n)
    n = args.n if args.n is not None else _infer_n(events)
    _validated_graph(events, n)
    estimates = []
    for t in range(args.trials):
        counter = DoulionCounter(n, args.p, seed=mix2(args.seed, t))
        counter.update_many(events)
        estimates.append(counter.estimate())
    payload = {
        "config": {"n": n, "p": args.p, "trials": args.trials},
        "estimate": sum(estimates) / len(estimates),
        "trials": args.trials,
        "p": args.p,
    }
    return payload, 0


_HANDLERS = {
    "estimate": _cmd_estimate,
    "exact": _cmd_exact,
    "gen": _cmd_gen,
    "verify-lemmas": _cmd_verify,
    "doulion": _cmd_doulion,
}


# -- driver --------------------------------------------------------------


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "human":
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _fail(args, err: Exception, code: int) -> int:
    detail = {"type": type(err).__name__, "message": str(err)}
    line = getattr(err, "line", None)
    if line is not None:
        detail["line"] = line
    payload = {
        "command": args.command,
        "error": detail,
        "seed": getattr(args, "seed", 0),
        "version": __version__,
    }
    _emit(payload, getattr(args, "format", "json"))
    return code


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tristream",
        description="Streaming triangle and transitivity estimation over edge insert/delete streams.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="run the sparsify-then-sample estimator")
    est.add_argument("stream", help="stream file, or - for stdin")
    est.add_argument("--n", type=int, required=True, help="vertex universe size")
    est.add_argument("--m-max", type=int, required=True, help="live-edge capacity bound")
    est.add_argument("--epsilon", type=float, default=0.3)
    est.add_argument("--delta", type=float, default=0.1)
    est.add_argument("--alpha-min", type=float, default=0.05)
    est.add_argument("--k-override", type=int, default=None, help="force the number of copies")
    est.add_argument("--s-override", type=int, default=None, help="force the certification threshold")
    est.add_argument("--colors-override", type=int, default=None, help="force the palette size")

    exa = sub.add_parser("exact", help="exact statistics of the final graph")
    exa.add_argument("stream", help="stream file, or - for stdin")
    exa.add_argument("--n", type=int, default=None, help="universe size (default: max endpoint)")

    gen = sub.add_parser("gen", help="write a generated stream to stdout")
    gen.add_argument(
        "family",
        choices=("complete", "path", "star", "bipartite-complete", "gnp", "planted-triangles"),
    )
    gen.add_argument("params", nargs="*", help="size parameters for the family")
    gen.add_argument("--delete-fraction", type=float, default=0.0)

    ver = sub.add_parser("verify-lemmas", help="check independent-2-path lower bounds")
    ver.add_argument("stream", nargs="?", default=None, help="stream file, or - for stdin")
    ver.add_argument("--sweep", type=int, default=None, help="run this many random fixtures instead")

    dou = sub.add_parser("doulion", help="coin-flip sampling baseline")
    dou.add_argument("stream", help="stream file, or - for stdin")
    dou.add_argument("--p", type=float, required=True, help="edge keep probability")
    dou.add_argument("--trials", type=int, default=1)
    dou.add_argument("--n", type=int, default=None, help="universe size (default: max endpoint)")

    for p in (est, exa, gen, ver, dou):
        p.add_argument("--seed", type=int, default=0)
    for p in (est, exa, ver, dou):
        p.add_argument("--format", choices=("json", "human"), default="json")
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = _HANDLERS[args.command](args)
    except NoQualifiedCopiesError as err:
        return _fail(args, err, 3)
    except StreamError as err:
        return _fail(args, err, 2)
    except (ValueError, OSError) as err:
        return _fail(args, err, 2)
    except RuntimeError as err:
        return _fail(args, err, 4)
    if payload is not None:
        payload["command"] = args.command
        payload["seed"] = args.seed
        payload["version"] = __version__
        _emit(payload, args.format)
    return code
