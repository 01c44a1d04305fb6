"""Executable checks for the inequalities behind the extremal argument.

Every checker returns an InequalityCheck.  Hypotheses are evaluated
first and reported individually; when any fails, the verdict field is
None rather than a pass/fail claim, because a conditional statement
asserts nothing once its conditions are gone.  Both sides of each
inequality are still computed whenever they make sense, so a gated
report remains informative.

Sides are compared exactly (QuadExt) when both live in one quadratic
field; otherwise as floats with explicit margins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .families import f_poly, make_S, make_S_minus, make_complete_split
from .graphs import (
    Graph,
    VertexSet,
    components,
    edge_count_between,
    edge_count_within,
    induced_subgraph,
    is_bipartite,
    neighborhood,
    second_neighborhood,
    Bipartition,
)
from .polynomials import divides_exactly, largest_real_root
from .quadratic import QuadExt, largest_root_of_monic_quadratic
from .spectral import (
    SpectralCertificate,
    adjacency_char_poly,
    perron_argmax,
    perron_vector,
    spectral_radius,
)
from .theta import contains_path, contains_theta


@dataclass(frozen=True)
class Classification:
    """What a connected neighborhood component turned out to be.

    kind is one of c4_spanned, s1, double_star, star, other.  For
    c4_spanned the variant narrows to one of c4, theta122, k4 by edge
    count.  "other" carries a 5-vertex path witness.
    """

    kind: str
    params: tuple[int, ...] = ()
    variant: str = ""
    path_witness: tuple[int, ...] = ()


def _is_tree(h: Graph) -> bool:
    return h.m == h.n - 1


def _diameter_le2_tree_center(h: Graph) -> Optional[int]:
    # a tree has diameter <= 2 iff some vertex covers all others
    for v in range(h.n):
        if h.degree(v) == h.n - 1:
            return v
    return None


def _spans_c4(h: Graph) -> bool:
    if h.n != 4:
        return False
    # C4 through 4 labeled vertices exists iff some pairing of the three
    # perfect orderings closes a cycle
    orders = ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3))
    for a, b, c, d in orders:
        if (
            h.has_edge(a, b)
            and h.has_edge(b, c)
            and h.has_edge(c, d)
            and h.has_edge(d, a)
        ):
            return True
    return False


def classify_component(h: Graph) -> Classification:
    """Sort a connected graph into the shapes a neighborhood can take.

    The five outcomes are mutually exclusive here: spanning-C4 graphs on
    four vertices first, then trees by diameter, then the star-plus-
    matching shape, and everything remaining contains a 5-vertex path.
    """
    if h.n == 0:
        raise ValueError("empty component")
    if len(components(h)) != 1:
        raise ValueError("component must be connected")
    if h.n == 4 and _spans_c4(h):
        variant = {4: "c4", 5: "theta122", 6: "k4"}[h.m]
        return Classification("c4_spanned", (h.m,), variant)
    if _is_tree(h):
        center = _diameter_le2_tree_center(h)
        if center is not None:
            return Classification("star", (h.n - 1,))
        # diameter-3 trees are exactly the double stars
        centers = [v for v in range(h.n) if h.degree(v) > 1]
        if len(centers) == 2 and h.has_edge(*centers):
            a = h.degree(centers[0]) - 1
            b = h.degree(centers[1]) - 1
            return Classification("double_star", (min(a, b), max(a, b)))
        path = contains_path(h, 5)
        return Classification("other", path_witness=path)
    # connected, n edges, one vertex covering all: star plus one matching edge
    if h.m == h.n and h.n >= 3 and any(h.degree(v) == h.n - 1 for v in range(h.n)):
        path = contains_path(h, 5)
        if path is None:
            return Classification("s1", (h.n - 1,))
    path = contains_path(h, 5)
    if path is None:
        raise RuntimeError("classification fell through without a path witness")
    return Classification("other", path_witness=path)


@dataclass(frozen=True)
class DecompositionReport:
    """Structure of a graph around a chosen apex vertex.

    N0 holds the isolated vertices of the induced neighborhood, Nplus
    the rest, W everything outside the closed neighborhood.  components
    are the connected pieces of the induced subgraph on Nplus, each with
    its Classification.  zeta maps each component to
    sum((internal degree - 1) * perron coordinate) over its vertices; c
    counts the components that are trees.
    """

    apex: int
    N0: VertexSet
    Nplus: VertexSet
    W: VertexSet
    eW: int
    eNW: int
    components: tuple[tuple[VertexSet, Classification], ...]
    c: int
    WH: tuple[tuple[VertexSet, VertexSet], ...]
    zeta: tuple[tuple[VertexSet, float], ...]
    certificate: SpectralCertificate


def decompose_at(g: Graph, apex: Optional[int] = None) -> DecompositionReport:
    """Partition V as {apex} | N0 | Nplus | W and classify the pieces.

    The default apex is the largest Perron coordinate, smallest index on
    ties.  Requires a connected graph.
    """
    if len(components(g)) != 1:
        raise ValueError("decomposition requires a connected graph")
    cert = perron_vector(g)
    if apex is None:
        apex = perron_argmax(cert)
    elif not 0 <= apex < g.n:
        raise ValueError(f"apex {apex} out of range")
    nbhd = neighborhood(g, apex)
    sub_n, map_n = induced_subgraph(g, nbhd)
    n0_bits = 0
    for i in range(sub_n.n):
        if not sub_n.adj[i]:
            n0_bits |= 1 << map_n[i]
    n0 = VertexSet(n0_bits)
    nplus = nbhd - n0
    w = g.vertex_set() - VertexSet(nbhd.bits | (1 << apex))
    sub_p, map_p = induced_subgraph(g, nplus)
    comps = []
    wh = []
    zeta = []
    c = 0
    for comp in components(sub_p):
        orig = VertexSet.from_iterable(map_p[i] for i in comp)
        h, _ = induced_subgraph(g, orig)
        cls = classify_component(h)
        comps.append((orig, cls))
        if h.m == h.n - 1:
            c += 1
        reach = 0
        for v in orig:
            reach |= g.adj[v] & w.bits
        wh.append((orig, VertexSet(reach)))
        z = 0.0
        for i, v in enumerate(sorted(orig)):
            z += (h.degree(i) - 1) * cert.perron[v]
        zeta.append((orig, z))
    return DecompositionReport(
        apex=apex,
        N0=n0,
        Nplus=nplus,
        W=w,
        eW=edge_count_within(g, w),
        eNW=edge_count_between(g, nbhd, w),
        components=tuple(comps),
        c=c,
        WH=tuple(wh),
        zeta=tuple(zeta),
        certificate=cert,
    )


def neighborhood_classifications(
    g: Graph, u: int
) -> list[tuple[VertexSet, Classification]]:
    """Classify every component of the induced neighborhood of u.

    Unlike decompose_at this includes the isolated vertices (they come
    back as zero-leaf stars) and needs no Perron vector.
    """
    nbhd = neighborhood(g, u)
    sub, back = induced_subgraph(g, nbhd)
    out = []
    for comp in components(sub):
        orig = VertexSet.from_iterable(back[i] for i in comp)
        h, _ = induced_subgraph(g, orig)
        out.append((orig, classify_component(h)))
    return out


@dataclass(frozen=True)
class RotationResult:
    graph: Graph
    rotated: tuple[int, ...]
    changed: bool


def edge_rotation(g: Graph, u: int, v: int) -> RotationResult:
    """Re-home to u every edge from v to a vertex outside N[u].

    The rotation set is all of v's neighbors not already adjacent to u
    (and not u itself); when it is empty the graph comes back unchanged
    with changed=False.  Edge count is preserved.
    """
    if u == v:
        raise ValueError("need distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    closed_u = g.adj[u] | (1 << u)
    rot = g.adj[v] & ~closed_u
    if not rot:
        return RotationResult(g, (), False)
    rows = list(g.adj)
    moved = []
    mask = rot
    while mask:
        low = mask & -mask
        w = low.bit_length() - 1
        mask ^= low
        rows[v] &= ~(1 << w)
        rows[w] &= ~(1 << v)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
        moved.append(w)
    return RotationResult(Graph(g.n, rows), tuple(moved), True)


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    holds: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds}


@dataclass(frozen=True)
class InequalityCheck:
    """Outcome of one inequality check.

    holds is None when a hypothesis failed (nothing is claimed then);
    lhs/rhs/margin are still filled in when computable.  exact means the
    verdict came from exact field arithmetic rather than floats.
    """

    name: str
    hypotheses: tuple[HypothesisCheck, ...]
    lhs: Optional[float]
    rhs: Optional[float]
    strict: bool
    holds: Optional[bool]
    margin: Optional[float]
    exact: bool
    extra: dict = field(default_factory=dict)

    @property
    def gated(self) -> bool:
        return any(not h.holds for h in self.hypotheses)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "hypotheses": [h.as_dict() for h in self.hypotheses],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "strict": self.strict,
            "holds": self.holds,
            "margin": self.margin,
            "exact": self.exact,
            "extra": self.extra,
        }


def _rho_gate_bound(m: int) -> Optional[QuadExt]:
    """(1 + sqrt(4m-5))/2 when it is real, else None."""
    if 4 * m - 5 < 0:
        return None
    return QuadExt(Fraction(1, 2), Fraction(1, 2), 4 * m - 5)


def check_lemma21(g: Graph, u: int, v: int) -> InequalityCheck:
    """Rotating v's private edges onto u raises the spectral radius,
    provided u's Perron coordinate is at least v's."""
    if len(components(g)) != 1:
        raise ValueError("need a connected graph")
    cert = perron_vector(g)
    hyps = [
        HypothesisCheck("perron_order_xu_ge_xv", cert.perron[u] >= cert.perron[v]),
    ]
    rot = edge_rotation(g, u, v)
    hyps.append(HypothesisCheck("rotation_set_nonempty", rot.changed))
    lhs = cert.rho
    rhs = spectral_radius(rot.graph).rho if rot.changed else lhs
    margin = rhs - lhs
    holds: Optional[bool] = None
    if all(h.holds for h in hyps):
        holds = rhs > lhs
    return InequalityCheck(
        name="lemma21_rotation_increases_rho",
        hypotheses=tuple(hyps),
        lhs=lhs,
        rhs=rhs,
        strict=True,
        holds=holds,
        margin=margin,
        exact=False,
        extra={"rotated": list(rot.rotated), "u": u, "v": v},
    )


def _complete_bipartite_plus_isolated(g: Graph) -> bool:
    nontrivial = [c for c in components(g) if len(c) > 1]
    if not nontrivial:
        return g.m == 0
    if len(nontrivial) != 1:
        return False
    h, _ = induced_subgraph(g, nontrivial[0])
    side = is_bipartite(h)
    if not isinstance(side, Bipartition):
        return False
    return h.m == len(side.left) * len(side.right)


def check_lemma25(g: Graph) -> InequalityCheck:
    """Bipartite graphs have rho <= sqrt(m), equal exactly for a complete
    bipartite graph plus isolated vertices."""
    side = is_bipartite(g)
    if not isinstance(side, Bipartition):
        raise ValueError("need a bipartite graph")
    if g.n == 0:
        raise ValueError("empty graph")
    rho = spectral_radius(g).rho
    bound = math.sqrt(g.m)
    structure_equal = _complete_bipartite_plus_isolated(g)
    numeric_equal = abs(rho - bound) <= 1e-9
    return InequalityCheck(
        name="lemma25_bipartite_sqrt_m",
        hypotheses=(HypothesisCheck("bipartite", True),),
        lhs=rho,
        rhs=bound,
        strict=False,
        holds=rho <= bound + 1e-9,
        margin=bound - rho,
        exact=False,
        extra={
            "equality_structure": structure_equal,
            "equality_numeric": numeric_equal,
            "equality_consistent": structure_equal == numeric_equal,
        },
    )


def check_lemma26(m: int) -> InequalityCheck:
    """The damaged-join family beats (1+sqrt(4m-5))/2, certified exactly.

    The quartic with pendant parameter 1 is positive beyond its largest
    root, so a negative exact evaluation at the bound proves the root
    (the family's spectral radius) exceeds the bound.
    """
    if m % 2 != 0:
        raise ValueError("need m even")
    if m < 6:
        raise ValueError("need m >= 6")
    bound = _rho_gate_bound(m)
    quartic = f_poly(m, 1)
    value = quartic.eval_quad(bound)
    sign = value.sign()
    rho = largest_real_root(quartic)
    bound_f = float(bound)
    return InequalityCheck(
        name="lemma26_pendant_family_beats_bound",
        hypotheses=(
            HypothesisCheck("m_even", True),
            HypothesisCheck("m_at_least_6", True),
        ),
        lhs=rho,
        rhs=bound_f,
        strict=True,
        holds=sign < 0,
        margin=rho - bound_f,
        exact=True,
        extra={"quartic_sign_at_bound": sign},
    )


def _rho_exceeds_gate(g: Graph, rho: float) -> tuple[bool, float]:
    bound = _rho_gate_bound(g.m)
    if bound is None:
        return True, math.inf
    bf = float(bound)
    return rho > bf + 1e-9, rho - bf


def check_lemma27(
    g: Graph, v: Optional[int] = None, beta: float = 0.5
) -> InequalityCheck:
    """Edges outside the apex ball against neighborhood slack at v.

    lhs is e(W); rhs is e(N(apex)) - |Nplus| + 3/2 - beta * (edges from
    v into the neighborhood).  v defaults to the distance-two vertex
    with the smallest Perron coordinate.
    """
    if not 0 < beta < 1:
        raise ValueError("need 0 < beta < 1")
    if len(components(g)) != 1:
        raise ValueError("need a connected graph")
    rep = decompose_at(g)
    cert = rep.certificate
    n2 = second_neighborhood(g, rep.apex)
    hyps = []
    gate_ok, gate_margin = _rho_exceeds_gate(g, cert.rho)
    hyps.append(HypothesisCheck("rho_exceeds_gate_bound", gate_ok))
    if v is None and n2:
        v = min(n2, key=lambda w: (cert.perron[w], w))
    if v is None:
        hyps.append(HypothesisCheck("v_in_second_neighborhood", False))
        return InequalityCheck(
            name="lemma27_outer_edge_bound",
            hypotheses=tuple(hyps),
            lhs=float(rep.eW),
            rhs=None,
            strict=True,
            holds=None,
            margin=None,
            exact=False,
            extra={"apex": rep.apex, "gate_margin": gate_margin},
        )
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    hyps.append(HypothesisCheck("v_in_second_neighborhood", v in n2))
    coord_ok = cert.perron[v] < (1 - beta) * cert.perron[rep.apex]
    hyps.append(HypothesisCheck("perron_coordinate_small_at_v", coord_ok))
    nbhd = neighborhood(g, rep.apex)
    d_nb = len(neighborhood(g, v) & nbhd)
    lhs = float(rep.eW)
    rhs = edge_count_within(g, nbhd) - len(rep.Nplus) + 1.5 - beta * d_nb
    holds: Optional[bool] = None
    if all(h.holds for h in hyps):
        holds = lhs < rhs
    return InequalityCheck(
        name="lemma27_outer_edge_bound",
        hypotheses=tuple(hyps),
        lhs=lhs,
        rhs=rhs,
        strict=True,
        holds=holds,
        margin=rhs - lhs,
        exact=False,
        extra={
            "apex": rep.apex,
            "v": v,
            "beta": beta,
            "d_into_neighborhood": d_nb,
            "gate_margin": gate_margin,
        },
    )


def check_eq1(g: Graph, tol: float = 1e-8) -> InequalityCheck:
    """Second-order eigen-equation identity at the apex.

    (rho^2 - rho) * x_apex equals deg(apex) * x_apex
    plus sum over neighborhood non-isolates of (internal degree - 1) * x
    plus sum over distance-two vertices of (edges into neighborhood) * x
    minus sum over neighborhood isolates of x.
    Holds for every connected graph; checked to tol.
    """
    if len(components(g)) != 1:
        raise ValueError("need a connected graph")
    rep = decompose_at(g)
    cert = rep.certificate
    u = rep.apex
    rho = cert.rho
    x = cert.perron
    nbhd = neighborhood(g, u)
    lhs = (rho * rho - rho) * x[u]
    rhs = g.degree(u) * x[u]
    for vtx in rep.Nplus:
        d_in = len(neighborhood(g, vtx) & nbhd)
        rhs += (d_in - 1) * x[vtx]
    for w in second_neighborhood(g, u):
        rhs += len(neighborhood(g, w) & nbhd) * x[w]
    for vtx in rep.N0:
        rhs -= x[vtx]
    return InequalityCheck(
        name="eq1_apex_identity",
        hypotheses=(HypothesisCheck("connected", True),),
        lhs=lhs,
        rhs=rhs,
        strict=False,
        holds=abs(lhs - rhs) <= tol * max(1.0, abs(lhs), abs(rhs)),
        margin=abs(lhs - rhs),
        exact=False,
        extra={"apex": u, "tolerance": tol},
    )


def check_eq4(g: Graph) -> InequalityCheck:
    """Outer edges against apex-neighborhood structure.

    lhs is e(W); rhs is 3/2 - c - sum over neighborhood isolates of
    x_v / x_apex.  Gated on connectivity, theta(1,3,3)-freeness, and the
    radius exceeding (1+sqrt(4m-5))/2.
    """
    if len(components(g)) != 1:
        raise ValueError("need a connected graph")
    rep = decompose_at(g)
    cert = rep.certificate
    hyps = [
        HypothesisCheck("theta133_free", contains_theta(g, 3, 3) is None),
    ]
    gate_ok, gate_margin = _rho_exceeds_gate(g, cert.rho)
    hyps.append(HypothesisCheck("rho_exceeds_gate_bound", gate_ok))
    x_apex = cert.perron[rep.apex]
    iso_sum = sum(cert.perron[v] for v in rep.N0) / x_apex
    lhs = float(rep.eW)
    rhs = 1.5 - rep.c - iso_sum
    holds: Optional[bool] = None
    if all(h.holds for h in hyps):
        holds = lhs < rhs
    return InequalityCheck(
        name="eq4_outer_edge_bound",
        hypotheses=tuple(hyps),
        lhs=lhs,
        rhs=rhs,
        strict=True,
        holds=holds,
        margin=rhs - lhs,
        exact=False,
        extra={
            "apex": rep.apex,
            "c": rep.c,
            "eW_le_1": rep.eW <= 1,
            "c_le_1": rep.c <= 1,
            "gate_margin": gate_margin,
        },
    )


def check_theorem_values(kind: str, params: dict) -> InequalityCheck:
    """Equality-case identities for the three headline bounds.

    kind "1.1": clique joined to s isolated vertices meets
    (k-1+sqrt(4m-k^2+1))/2 exactly.  kind "1.3": the k=2 join family at
    odd m meets (1+sqrt(4m-3))/2 exactly.  kind "1.4": the damaged join
    at even m has radius equal to the largest root of f_poly(m,1),
    certified by exact divisibility of the quotient quartic into the
    adjacency characteristic polynomial.
    """
    if kind == "1.1":
        k, s = params["k"], params["s"]
        if k < 1 or s < 1:
            raise ValueError("need k >= 1 and s >= 1")
        g = make_complete_split(k, s)
        m = g.m
        rho_exact = largest_root_of_monic_quadratic(-(k - 1), -k * s)
        bound = QuadExt(Fraction(k - 1, 2), Fraction(1, 2), 4 * m - k * k + 1)
        same = rho_exact == bound
        rho_num = spectral_radius(g).rho
        numeric_ok = abs(rho_num - float(bound)) <= 1e-9
        return InequalityCheck(
            name="theorem11_equality_value",
            hypotheses=(HypothesisCheck("params_in_range", True),),
            lhs=float(rho_exact),
            rhs=float(bound),
            strict=False,
            holds=same and numeric_ok,
            margin=abs(float(rho_exact) - float(bound)),
            exact=True,
            extra={"k": k, "s": s, "m": m, "numeric_agrees": numeric_ok},
        )
    if kind == "1.3":
        m = params["m"]
        if m < 3 or m % 2 == 0:
            raise ValueError("need odd m >= 3")
        n = (m + 3) // 2
        g = make_S(n, 2)
        rho_exact = largest_root_of_monic_quadratic(-1, -2 * (n - 2))
        bound = QuadExt(Fraction(1, 2), Fraction(1, 2), 4 * m - 3)
        same = rho_exact == bound
        rho_num = spectral_radius(g).rho
        numeric_ok = abs(rho_num - float(bound)) <= 1e-9
        return InequalityCheck(
            name="theorem13_equality_value",
            hypotheses=(HypothesisCheck("params_in_range", True),),
            lhs=float(rho_exact),
            rhs=float(bound),
            strict=False,
            holds=same and numeric_ok,
            margin=abs(float(rho_exact) - float(bound)),
            exact=True,
            extra={"m": m, "n": n, "numeric_agrees": numeric_ok},
        )
    if kind == "1.4":
        m = params["m"]
        if m < 6 or m % 2 != 0:
            raise ValueError("need even m >= 6")
        n = (m + 4) // 2
        g = make_S_minus(n, 2)
        quartic = f_poly(m, 1)
        rho_num = spectral_radius(g).rho
        root = largest_real_root(quartic)
        numeric_ok = abs(rho_num - root) <= 1e-9
        divisible = None
        if g.n <= 64:
            divisible = divides_exactly(quartic, adjacency_char_poly(g))
        holds = numeric_ok and (divisible is not False)
        return InequalityCheck(
            name="theorem14_equality_value",
            hypotheses=(HypothesisCheck("params_in_range", True),),
            lhs=rho_num,
            rhs=root,
            strict=False,
            holds=holds,
            margin=abs(rho_num - root),
            exact=divisible is True,
            extra={
                "m": m,
                "n": n,
                "quartic_divides_char_poly": divisible,
                "divisibility_checked": divisible is not None,
            },
        )
    raise ValueError(f"unknown theorem kind {kind!r}")
