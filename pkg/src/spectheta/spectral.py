"""Spectral radius certificates and exact characteristic polynomials.

Numeric route: shifted power iteration on A+I per connected component
(the shift keeps bipartite components from oscillating), reporting the
Rayleigh estimate together with the residual max|Ax - rho*x| so callers
can judge the result instead of trusting it.

Exact route: characteristic polynomials over the integers via the
Faddeev-LeVerrier recurrence, plus equitable-partition quotients whose
characteristic polynomials divide the full one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .graphs import Graph, VertexSet, components, induced_subgraph
from .polynomials import Polynomial, divides_exactly, largest_real_root
from .quadratic import QuadExt, quad_sign

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class SpectralCertificate:
    """Numeric spectral radius with its own quality evidence."""

    rho: float
    perron: tuple[float, ...]
    residual: float
    iterations: int
    converged: bool

    def as_dict(self) -> dict:
        return {
            "rho": self.rho,
            "perron": list(self.perron),
            "residual": self.residual,
            "iterations": self.iterations,
            "converged": self.converged,
        }


def _component_certificate(
    g: Graph, comp: VertexSet, tol: float
) -> tuple[float, dict[int, float], float, int, bool]:
    sub, back = induced_subgraph(g, comp)
    k = sub.n
    if k == 1:
        return 0.0, {back[0]: 1.0}, 0.0, 0, True
    A = np.zeros((k, k))
    for u in range(k):
        row = sub.adj[u]
        while row:
            low = row & -row
            A[u, low.bit_length() - 1] = 1.0
            row ^= low
    x = np.ones(k)
    cap = int(100 * k * math.log(k + 2)) + 10_000
    rho = 0.0
    resid = math.inf
    it = 0
    converged = False
    while it < cap:
        it += 1
        y = A @ x + x  # (A+I)x, shift avoids bipartite oscillation
        rho = float(x @ y) / float(x @ x) - 1.0
        top = float(x.max())
        xn = x / top
        # residual on A itself for the max-normalized current iterate
        resid = float(np.max(np.abs((y - x) / top - rho * xn)))
        if resid <= tol * max(1.0, rho):
            converged = True
            x = xn
            break
        x = y / float(y.max())
    vec = {back[i]: float(x[i] / x.max()) for i in range(k)}
    return rho, vec, resid, it, converged


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> SpectralCertificate:
    """Certificate for the adjacency spectral radius of g.

    Disconnected inputs take the max over components; the reported
    eigenvector is the winning component's, zero elsewhere.
    """
    if g.n == 0:
        raise ValueError("empty graph has no spectral radius")
    best_rho = -math.inf
    best_vec: dict[int, float] = {}
    worst_resid = 0.0
    total_it = 0
    all_ok = True
    for comp in components(g):
        rho, vec, resid, it, ok = _component_certificate(g, comp, tol)
        total_it += it
        worst_resid = max(worst_resid, resid)
        all_ok = all_ok and ok
        if rho > best_rho:
            best_rho = rho
            best_vec = vec
    perron = tuple(best_vec.get(v, 0.0) for v in range(g.n))
    return SpectralCertificate(best_rho, perron, worst_resid, total_it, all_ok)


def perron_vector(g: Graph, tol: float = DEFAULT_TOL) -> SpectralCertificate:
    """Certificate whose vector is entrywise positive; connected only."""
    if g.n == 0:
        raise ValueError("empty graph")
    if len(components(g)) != 1:
        raise ValueError("perron vector requires a connected graph")
    return spectral_radius(g, tol)


def perron_argmax(cert: SpectralCertificate) -> int:
    """Index of the largest coordinate, smallest index on ties."""
    best = max(cert.perron)
    return next(i for i, x in enumerate(cert.perron) if x == best)


def eval_poly_quad(p: Polynomial, x: QuadExt) -> QuadExt:
    return p.eval_quad(x)


def char_poly(matrix: Sequence[Sequence[int]]) -> Polynomial:
    """det(xI - M) for an integer matrix, exactly.

    Faddeev-LeVerrier over Python ints: M_1 = M, c_k = -tr(M M_{k-1})/k,
    M_k = M M_{k-1} + c_k I.  Every division is checked to be exact.
    """
    n = len(matrix)
    rows = [list(r) for r in matrix]
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
        for a in r:
            if not isinstance(a, int):
                raise TypeError("entries must be ints")
    if n == 0:
        return Polynomial([1])
    if n > 64:
        raise ValueError("char_poly capped at 64x64")
    sparse = [[(j, a) for j, a in enumerate(r) if a] for r in rows]
    N = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        MN = []
        for i in range(n):
            acc = [0] * n
            for j, a in sparse[i]:
                nr = N[j]
                acc = [s + a * t for s, t in zip(acc, nr)]
            MN.append(acc)
        tr = sum(MN[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("non-integer trace division in recurrence")
        c = -(tr // k)
        coeffs.append(c)
        for i in range(n):
            MN[i][i] += c
        N = MN
    return Polynomial(list(reversed(coeffs)))


def adjacency_char_poly(g: Graph) -> Polynomial:
    rows = [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    return char_poly(rows)


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int, ...], ...]
    partition: tuple[tuple[int, ...], ...]

    def char_poly(self) -> Polynomial:
        return char_poly([list(r) for r in self.entries])


@dataclass(frozen=True)
class NonEquitableWitness:
    block: int
    u: int
    v: int
    into_block: int


def is_equitable(
    g: Graph, partition: Sequence[Sequence[int]]
) -> Union[QuotientMatrix, NonEquitableWitness]:
    """Check that every block sees every block uniformly.

    Returns the quotient matrix on success, or a witness naming two
    vertices of one block with different edge counts into another.
    """
    blocks = [tuple(sorted(b)) for b in partition]
    seen = 0
    for b in blocks:
        if not b:
            raise ValueError("empty block")
        for v in b:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            if (seen >> v) & 1:
                raise ValueError(f"vertex {v} appears in two blocks")
            seen |= 1 << v
    if seen != (1 << g.n) - 1:
        raise ValueError("partition does not cover every vertex")
    masks = [sum(1 << v for v in b) for b in blocks]
    entries = []
    for bi, b in enumerate(blocks):
        row = []
        for mj, mask in enumerate(masks):
            counts = [(g.adj[v] & mask).bit_count() for v in b]
            if any(c != counts[0] for c in counts):
                off = next(v for v, c in zip(b, counts) if c != counts[0])
                return NonEquitableWitness(bi, b[0], off, mj)
            row.append(counts[0])
        entries.append(tuple(row))
    return QuotientMatrix(tuple(entries), tuple(blocks))


def coarsest_equitable_partition(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Iterated degree refinement starting from the single-block partition."""
    if g.n == 0:
        return ()
    labels = [0] * g.n
    while True:
        masks: dict[int, int] = {}
        for v in range(g.n):
            masks.setdefault(labels[v], 0)
            masks[labels[v]] |= 1 << v
        keys = sorted(masks)
        sig = {}
        for v in range(g.n):
            sig[v] = (labels[v],) + tuple(
                (g.adj[v] & masks[k]).bit_count() for k in keys
            )
        fresh = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new_labels = [fresh[sig[v]] for v in range(g.n)]
        if new_labels == labels:
            break
        labels = new_labels
    out: dict[int, list[int]] = {}
    for v in range(g.n):
        out.setdefault(labels[v], []).append(v)
    return tuple(tuple(out[k]) for k in sorted(out))


def verify_quotient_divides(
    g: Graph,
    partition: Sequence[Sequence[int]],
    root_tol: float = 1e-9,
) -> bool:
    """Two-part check tying a quotient to the host graph.

    The quotient's characteristic polynomial must divide the graph's
    (exactly, over the rationals), and its largest root must match the
    power-iteration spectral radius within root_tol.
    """
    res = is_equitable(g, partition)
    if isinstance(res, NonEquitableWitness):
        raise ValueError(
            f"partition not equitable: block {res.block} vertices {res.u},{res.v}"
            f" differ into block {res.into_block}"
        )
    pq = res.char_poly()
    pg = adjacency_char_poly(g)
    if not divides_exactly(pq, pg):
        return False
    rho = spectral_radius(g).rho
    try:
        top = largest_real_root(pq)
    except ValueError:
        return False
    return abs(top - rho) <= root_tol


__all__ = [
    "DEFAULT_TOL",
    "SpectralCertificate",
    "spectral_radius",
    "perron_vector",
    "perron_argmax",
    "char_poly",
    "adjacency_char_poly",
    "QuotientMatrix",
    "NonEquitableWitness",
    "is_equitable",
    "coarsest_equitable_partition",
    "verify_quotient_divides",
    "eval_poly_quad",
    "QuadExt",
    "quad_sign",
]
