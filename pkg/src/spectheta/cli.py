"""Command line front end.

Subcommands: construct, rho, free, search, verify, decompose,
report-all.  Exit code 0 means the run completed and every verdict
held, 1 means a verdict failed (a gated check whose hypotheses were not
met is not a failure), 2 means the invocation itself was bad.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .acceptance import DEFAULT_SEED, run_all
from .enumeration import extremal_search, search_cache_get, search_cache_put
from .families import closed_form_rho, make_graph, parse_family_spec
from .graphs import Graph, parse_graph6, to_graph6
from .polynomials import Polynomial
from .quadratic import QuadExt
from .sampling import sample_graphs
from .spectral import (
    coarsest_equitable_partition,
    is_equitable,
    perron_vector,
    spectral_radius,
    verify_quotient_divides,
)
from .theta import contains_theta
from .verifiers import (
    DecompositionReport,
    check_eq1,
    check_eq4,
    check_lemma21,
    check_lemma25,
    check_lemma26,
    check_lemma27,
    decompose_at,
    edge_rotation,
)


@dataclass(frozen=True)
class RunConfig:
    """Settings shared across subcommands, validated on construction."""

    tolerance: float = 1e-12
    jobs: int = 1
    seed: int = DEFAULT_SEED
    cache_dir: Optional[str] = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def _parse_theta(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected p,q but got {text!r}")
    p, q = (int(x) for x in parts)
    return p, q


def _parse_m_range(text: str) -> range:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected lo:hi:step but got {text!r}")
    lo, hi, step = (int(x) for x in parts)
    if step < 1 or hi < lo:
        raise ValueError(f"bad range {text!r}")
    return range(lo, hi + 1, step)


def _load_graph(args) -> Graph:
    if getattr(args, "graph6", None) and getattr(args, "family", None):
        raise ValueError("give either --graph6 or --family, not both")
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    if getattr(args, "family", None):
        return make_graph(parse_family_spec(args.family))
    raise ValueError("a graph is required: pass --graph6 or --family")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _vs(vs) -> list[int]:
    return sorted(vs)


def _quad_dict(q: QuadExt) -> dict:
    return {"a": str(q.a), "b": str(q.b), "d": q.d, "float": float(q)}


def _poly_dict(p: Polynomial) -> dict:
    return {"coeffs": list(p.coeffs), "doubled": p.doubled}


def _closed_form_dict(spec, rho: float) -> Optional[dict]:
    try:
        desc = closed_form_rho(spec)
    except ValueError:
        return None
    return {
        "value": desc.value,
        "exact": _quad_dict(desc.exact) if desc.exact is not None else None,
        "poly": _poly_dict(desc.poly) if desc.poly is not None else None,
        "matches_iteration": abs(desc.value - rho) <= 1e-9 * max(1.0, abs(rho)),
    }


def _witness_dict(w) -> Optional[dict]:
    if w is None:
        return None
    return {
        "anchors": list(w.anchors),
        "path_p": list(w.path_p),
        "path_q": list(w.path_q),
    }


def _decomposition_dict(rep: DecompositionReport) -> dict:
    reach = {vs: w for vs, w in rep.WH}
    weight = {vs: z for vs, z in rep.zeta}
    return {
        "apex": rep.apex,
        "N0": _vs(rep.N0),
        "Nplus": _vs(rep.Nplus),
        "W": _vs(rep.W),
        "eW": rep.eW,
        "eNW": rep.eNW,
        "c": rep.c,
        "components": [
            {
                "vertices": _vs(vs),
                "kind": cls.kind,
                "params": list(cls.params),
                "variant": cls.variant,
                "reaches_W": _vs(reach[vs]),
                "zeta": weight[vs],
            }
            for vs, cls in rep.components
        ],
        "zeta_total": sum(weight.values()),
        "rho": rep.certificate.rho,
        "perron": list(rep.certificate.perron),
    }


def cmd_construct(args, cfg: RunConfig) -> int:
    g = make_graph(parse_family_spec(args.family))
    _emit(to_graph6(g), args.out)
    return 0


def cmd_rho(args, cfg: RunConfig) -> int:
    g = _load_graph(args)
    tol = args.tol if args.tol is not None else 1e-12
    cert = spectral_radius(g, tol=tol)
    out = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "rho": cert.rho,
        "residual": cert.residual,
        "iterations": cert.iterations,
        "converged": cert.converged,
    }
    if args.family:
        cf = _closed_form_dict(parse_family_spec(args.family), cert.rho)
        if cf is not None:
            out["closed_form"] = cf
    _emit(_dumps(out), args.out)
    return 0


def _free_verdict(g: Graph, p: int, q: int) -> dict:
    w = contains_theta(g, p, q)
    return {"graph6": to_graph6(g), "free": w is None, "witness": _witness_dict(w)}


def cmd_free(args, cfg: RunConfig) -> int:
    p, q = _parse_theta(args.theta)
    if args.graph6:
        _emit(_dumps(_free_verdict(parse_graph6(args.graph6), p, q)), args.out)
        return 0
    lines = []
    for raw in sys.stdin:
        raw = raw.strip()
        if not raw:
            continue
        lines.append(json.dumps(_free_verdict(parse_graph6(raw), p, q), sort_keys=True))
    _emit("\n".join(lines), args.out)
    return 0


def cmd_search(args, cfg: RunConfig) -> int:
    pattern = _parse_theta(args.theta)
    report = search_cache_get(args.m, pattern, cfg.cache_dir)
    cached = report is not None
    if report is None:
        report = extremal_search(args.m, pattern, jobs=cfg.jobs)
        search_cache_put(report, cfg.cache_dir)
    out = report.to_dict()
    out["meta"]["from_cache"] = cached
    _emit(_dumps(out), args.out)
    return 0


def _verify_rotation_graph(g: Graph) -> dict:
    results = []
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                results.append(check_lemma21(g, u, v))
    ungated = [r for r in results if r.holds is not None]
    violations = [r for r in ungated if not r.holds]
    return {
        "pairs": len(results),
        "ungated": len(ungated),
        "violations": len(violations),
        "examples": [r.as_dict() for r in violations[:3]],
    }


def _verify_rotation_sweep(cfg: RunConfig, graphs: int = 100) -> dict:
    rotations = 0
    violations = 0
    min_margin = None
    for g in sample_graphs(cfg.seed + 7, graphs, 10, connected=True):
        cert = perron_vector(g)
        for u in range(g.n):
            for v in range(g.n):
                if u == v or cert.perron[u] < cert.perron[v] + 1e-9:
                    continue
                rot = edge_rotation(g, u, v)
                if not rot.changed:
                    continue
                rotations += 1
                margin = spectral_radius(rot.graph).rho - cert.rho
                if min_margin is None or margin < min_margin:
                    min_margin = margin
                if margin <= 1e-10:
                    violations += 1
    return {
        "graphs": graphs,
        "rotations": rotations,
        "violations": violations,
        "min_margin": min_margin,
    }


def cmd_verify(args, cfg: RunConfig) -> int:
    if (args.lemma is None) == (args.eq is None):
        raise ValueError("give exactly one of --lemma or --eq")

    if args.eq is not None:
        g = _load_graph(args)
        if args.eq == "1":
            tol = args.tol if args.tol is not None else 1e-8
            chk = check_eq1(g, tol=tol)
        else:
            chk = check_eq4(g)
        _emit(_dumps(chk.as_dict()), args.out)
        return 1 if chk.holds is False else 0

    if args.lemma == "2.1":
        if args.graph6 or args.family:
            out = _verify_rotation_graph(_load_graph(args))
        else:
            out = _verify_rotation_sweep(cfg)
        _emit(_dumps(out), args.out)
        return 1 if out["violations"] else 0

    if args.lemma == "2.3":
        g = _load_graph(args)
        part = coarsest_equitable_partition(g)
        quo = is_equitable(g, part)
        ok = verify_quotient_divides(g, part)
        out = {
            "partition": [list(b) for b in part],
            "quotient": [list(row) for row in quo.entries],
            "quotient_char_poly": _poly_dict(quo.char_poly()),
            "divides": ok,
        }
        _emit(_dumps(out), args.out)
        return 0 if ok else 1

    if args.lemma == "2.5":
        chk = check_lemma25(_load_graph(args))
        _emit(_dumps(chk.as_dict()), args.out)
        return 1 if chk.holds is False else 0

    if args.lemma == "2.6":
        if args.m is None and args.m_range is None:
            raise ValueError("--lemma 2.6 needs --m or --m-range")
        ms = [args.m] if args.m is not None else list(_parse_m_range(args.m_range))
        checks = [check_lemma26(m) for m in ms]
        payload = [c.as_dict() for c in checks]
        _emit(_dumps(payload[0] if args.m is not None else payload), args.out)
        return 1 if any(c.holds is False for c in checks) else 0

    chk = check_lemma27(_load_graph(args))
    _emit(_dumps(chk.as_dict()), args.out)
    return 1 if chk.holds is False else 0


def cmd_decompose(args, cfg: RunConfig) -> int:
    rep = decompose_at(_load_graph(args))
    _emit(_dumps(_decomposition_dict(rep)), args.out)
    return 0


def cmd_report_all(args, cfg: RunConfig) -> int:
    m_max = args.m if args.m is not None else 8
    results = run_all(m_max=m_max, seed=cfg.seed, jobs=cfg.jobs)
    for r in results:
        print(r.line())
    if args.out:
        payload = [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": r.seconds,
            }
            for r in results
        ]
        with open(args.out, "w") as fh:
            fh.write(_dumps(payload) + "\n")
    return 0 if all(r.passed for r in results) else 1


def _add_graph_flags(sub) -> None:
    sub.add_argument("--graph6", help="graph6 string naming the input graph")
    sub.add_argument("--family", help="family spec like S-,n=48,k=2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectheta",
        description="construct, measure, and verify spectral extremal graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a family member as graph6")
    p.add_argument("--family", required=True, help="family spec like G4,r=45,t=1")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("rho", help="certified spectral radius")
    _add_graph_flags(p)
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_rho)

    p = sub.add_parser("free", help="theta-subgraph freeness verdicts")
    p.add_argument("--theta", default="3,3", metavar="p,q")
    p.add_argument("--graph6", help="single graph; otherwise graph6 lines are read from stdin")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_free)

    p = sub.add_parser("search", help="extremal search over all graphs of one size")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", default="3,3", metavar="p,q")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify", help="run one verifier")
    _add_graph_flags(p)
    p.add_argument("--lemma", choices=["2.1", "2.3", "2.5", "2.6", "2.7"])
    p.add_argument("--eq", choices=["1", "4"])
    p.add_argument("--m", type=int)
    p.add_argument("--m-range", metavar="lo:hi:step")
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("decompose", help="apex neighborhood decomposition")
    _add_graph_flags(p)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("report-all", help="run the acceptance criteria")
    p.add_argument("--m", type=int, help="cap for the enumeration-heavy criteria")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_report_all)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            tolerance=args.tol if getattr(args, "tol", None) is not None else 1e-12,
            jobs=getattr(args, "jobs", 1),
            seed=getattr(args, "seed", DEFAULT_SEED),
            cache_dir=getattr(args, "cache_dir", None),
        )
        return args.fn(args, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
