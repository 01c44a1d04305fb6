"""Isomorph-free enumeration of graphs by edge count, and extremal search.

Canonical form: per connected component, iterated signature refinement
followed by branch-and-bound over the remaining cell orderings, taking
the lexicographically least graph6 payload.  Cells whose members are
mutual twins (all open neighborhoods equal, or all closed neighborhoods
equal) never need branching, which keeps stars, cliques, and matchings
cheap.  Component canonical strings are sorted and the blocks reassembled,
so the whole-graph form is label-invariant.

Enumeration: graphs with m edges and no isolated vertices are generated
from those with m-1 edges by three augmentations (join two existing
non-adjacent vertices, hang a new vertex on an existing one, add a
disjoint edge), deduplicating by canonical form.  Every m-edge graph
with positive m contains an edge whose removal, after discarding
isolated vertices, is an (m-1)-edge graph reachable the same way, so
the sweep is exhaustive.

A labeled counting oracle (lexicographic DFS over edge sets, no shared
machinery) cross-checks the class counts via orbit sizes elsewhere; here
it independently reproduces the number of isomorphism classes.
"""

from __future__ import annotations

import json
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .graphs import (
    Graph,
    VertexSet,
    _graph6_header,
    _graph6_payload,
    components,
    induced_subgraph,
    parse_graph6,
    to_graph6,
)
from .spectral import spectral_radius
from .theta import DETECTOR_VERSION, contains_theta

CANON_MAX_VERTICES = 32

CACHE_ENV = "XLAB_CACHE_DIR"


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbor counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                sig[v] = tuple((adj[v] & mk).bit_count() for mk in masks)
            buckets: dict[tuple, list[int]] = {}
            for v in cell:
                buckets.setdefault(sig[v], []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _is_twin_cell(adj: list[int], cell: list[int]) -> bool:
    """All-equal open neighborhoods or all-equal closed neighborhoods.

    Either way every transposition inside the cell is an automorphism,
    so the cell's internal order cannot affect the canonical payload.
    """
    first = cell[0]
    if all(adj[v] == adj[first] for v in cell[1:]):
        return True
    cf = adj[first] | (1 << first)
    return all(adj[v] | (1 << v) == cf for v in cell[1:])


def _canon_connected_g6(adj: list[int], n: int) -> str:
    if n == 1:
        return "@"
    if n == 2:
        return "A_"

    best: list[Optional[str]] = [None]

    def descend(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        branch_at = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1 and not _is_twin_cell(adj, cell):
                branch_at = i
                break
        if branch_at < 0:
            order: list[int] = []
            for cell in cells:
                order.extend(cell)
            pos = {v: i for i, v in enumerate(order)}
            rows = [0] * n
            for v in order:
                a = adj[v]
                while a:
                    low = a & -a
                    rows[pos[v]] |= 1 << pos[low.bit_length() - 1]
                    a ^= low
            payload = _graph6_payload(n, rows)
            if best[0] is None or payload < best[0]:
                best[0] = payload
            return
        cell = cells[branch_at]
        for v in cell:
            rest = [w for w in cell if w != v]
            descend(cells[:branch_at] + [[v], rest] + cells[branch_at + 1:])

    descend([list(range(n))])
    return _graph6_header(n) + best[0]


def canonical_form(g: Graph) -> str:
    """graph6 string invariant under relabeling; vertices capped at 32."""
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(f"canonical form capped at {CANON_MAX_VERTICES} vertices")
    if g.n == 0:
        return to_graph6(g)
    comps = components(g)
    canon_strings = []
    for comp in comps:
        sub, _ = induced_subgraph(g, comp)
        canon_strings.append(_canon_connected_g6(list(sub.adj), sub.n))
    canon_strings.sort()
    if len(canon_strings) == 1:
        return canon_strings[0]
    # reassemble as a disjoint union in sorted block order
    rows: list[int] = []
    offset = 0
    for s in canon_strings:
        block = parse_graph6(s)
        for u in range(block.n):
            rows.append(block.adj[u] << offset)
        offset += block.n
    return to_graph6(Graph(offset, rows))


def canonical_graph(g: Graph) -> Graph:
    return parse_graph6(canonical_form(g))


def _drop_isolated(g: Graph) -> Graph:
    keep = VertexSet.from_iterable(v for v in range(g.n) if g.adj[v])
    sub, _ = induced_subgraph(g, keep)
    return sub


@lru_cache(maxsize=None)
def _iso_classes(m: int) -> tuple[Graph, ...]:
    if m == 0:
        return (Graph(0, []),)
    seen: dict[str, Graph] = {}
    for parent in _iso_classes(m - 1):
        n = parent.n
        # join two existing non-adjacent vertices
        for u in range(n):
            for v in range(u + 1, n):
                if not parent.has_edge(u, v):
                    child = parent.with_edge(u, v)
                    seen.setdefault(canonical_form(child), child)
        # hang a fresh vertex on an existing one
        grown = Graph(n + 1, list(parent.adj) + [0])
        for u in range(n):
            child = grown.with_edge(u, n)
            seen.setdefault(canonical_form(child), child)
        # add a disjoint edge
        rows = list(parent.adj) + [0, 0]
        pair = Graph(n + 2, rows).with_edge(n, n + 1)
        seen.setdefault(canonical_form(pair), pair)
    return tuple(parse_graph6(s) for s in sorted(seen))


def enumerate_by_size(m: int, budget: int = 12) -> tuple[Graph, ...]:
    """All graphs with m edges and no isolated vertices, one per class.

    The budget guards against accidental huge sweeps; class counts grow
    roughly threefold per added edge.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    if m > budget:
        raise ValueError(f"budget exceeded: m={m} > budget={budget}")
    return _iso_classes(m)


def labeled_class_count(m: int) -> int:
    """Isomorphism classes with m edges, counted the slow independent way.

    For each feasible vertex count, walks every lexicographic edge
    combination covering all n vertices (pruned only on coverage being
    unreachable), canonicalizes, and counts distinct strings.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    if m == 0:
        return 1
    forms: set[str] = set()
    n_lo = next(n for n in range(1, 2 * m + 1) if n * (n - 1) // 2 >= m)
    for n in range(n_lo, 2 * m + 1):
        all_pairs = list(combinations(range(n), 2))
        chosen: list[tuple[int, int]] = []

        def rec(start: int, covered: int) -> None:
            if len(chosen) == m:
                if covered == (1 << n) - 1:
                    forms.add(canonical_form(Graph.from_edges(n, chosen)))
                return
            left = m - len(chosen)
            uncovered = n - covered.bit_count()
            if uncovered > 2 * left:
                return
            if len(all_pairs) - start < left:
                return
            for i in range(start, len(all_pairs)):
                u, v = all_pairs[i]
                chosen.append((u, v))
                rec(i + 1, covered | (1 << u) | (1 << v))
                chosen.pop()

        rec(0, 0)
    return len(forms)


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of an exhaustive search over one edge count.

    argmax lists every survivor whose radius is within the tie tolerance
    of the best, sorted by canonical string.  body_dict() holds only
    run-independent content; timing and worker counts live in the meta
    dict so stored reports can be compared byte-for-byte.
    """

    m: int
    pattern: tuple[int, int]
    predicate: str
    total: int
    survivors: int
    best_rho: float
    argmax: tuple[str, ...]
    detector_version: str
    scope_note: str
    runtime_seconds: float
    jobs: int

    def body_dict(self) -> dict:
        return {
            "m": self.m,
            "pattern": list(self.pattern),
            "predicate": self.predicate,
            "total": self.total,
            "survivors": self.survivors,
            "best_rho": self.best_rho,
            "argmax": list(self.argmax),
            "detector_version": self.detector_version,
            "scope_note": self.scope_note,
        }

    def to_dict(self) -> dict:
        return {
            "body": self.body_dict(),
            "meta": {"runtime_seconds": self.runtime_seconds, "jobs": self.jobs},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExtremalReport":
        b, meta = d["body"], d.get("meta", {})
        return cls(
            m=b["m"],
            pattern=tuple(b["pattern"]),
            predicate=b["predicate"],
            total=b["total"],
            survivors=b["survivors"],
            best_rho=b["best_rho"],
            argmax=tuple(b["argmax"]),
            detector_version=b["detector_version"],
            scope_note=b["scope_note"],
            runtime_seconds=meta.get("runtime_seconds", 0.0),
            jobs=meta.get("jobs", 1),
        )


_SCOPE_NOTE = (
    "exhaustive over isomorphism classes with this edge count and no"
    " isolated vertices; radii by certified power iteration"
)


def _survivor_rho(args: tuple[str, int, int]) -> tuple[str, bool, float]:
    g6, p, q = args
    g = parse_graph6(g6)
    if contains_theta(g, p, q) is not None:
        return g6, False, 0.0
    rho = spectral_radius(g).rho if g.n else 0.0
    return g6, True, rho


def extremal_search(
    m: int,
    pattern: tuple[int, int] = (3, 3),
    jobs: int = 1,
    tie_tol: float = 1e-9,
    budget: int = 12,
) -> ExtremalReport:
    """Max spectral radius over all m-edge graphs avoiding the pattern.

    Ties within tie_tol resolve to the earlier canonical string, so the
    report is deterministic for any worker count.
    """
    t0 = time.monotonic()
    classes = enumerate_by_size(m, budget=budget)
    work = [(to_graph6(g), pattern[0], pattern[1]) for g in classes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_survivor_rho, work, chunksize=16))
    else:
        results = [_survivor_rho(w) for w in work]
    scored = [(g6, rho) for g6, free, rho in results if free]
    if scored:
        best_rho = max(rho for _, rho in scored)
        argmax = tuple(sorted(g6 for g6, rho in scored if rho >= best_rho - tie_tol))
    else:
        best_rho = 0.0
        argmax = ()
    return ExtremalReport(
        m=m,
        pattern=pattern,
        predicate=f"theta(1,{pattern[0]},{pattern[1]})-free",
        total=len(classes),
        survivors=len(scored),
        best_rho=best_rho,
        argmax=argmax,
        detector_version=DETECTOR_VERSION,
        scope_note=_SCOPE_NOTE,
        runtime_seconds=time.monotonic() - t0,
        jobs=jobs,
    )


def _cache_dir(explicit: Optional[str]) -> str:
    if explicit:
        return explicit
    return os.environ.get(CACHE_ENV, os.path.join(os.path.expanduser("~"), ".spectheta_cache"))


def _cache_path(dirname: str, m: int, pattern: tuple[int, int]) -> str:
    return os.path.join(dirname, f"search_m{m}_t{pattern[0]}_{pattern[1]}.json")


def search_cache_put(report: ExtremalReport, cache_dir: Optional[str] = None) -> str:
    d = _cache_dir(cache_dir)
    os.makedirs(d, exist_ok=True)
    path = _cache_path(d, report.m, report.pattern)
    with open(path, "w") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def search_cache_get(
    m: int, pattern: tuple[int, int] = (3, 3), cache_dir: Optional[str] = None
) -> Optional[ExtremalReport]:
    path = _cache_path(_cache_dir(cache_dir), m, pattern)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            report = ExtremalReport.from_dict(json.load(fh))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        warnings.warn(f"discarding unreadable cache file {path}: {exc}")
        return None
    if report.detector_version != DETECTOR_VERSION:
        return None
    if report.m != m or report.pattern != tuple(pattern):
        warnings.warn(f"cache file {path} disagrees with its key; ignoring")
        return None
    return report
