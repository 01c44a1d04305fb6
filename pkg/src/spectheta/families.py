"""Named graph families, their quotient partitions, and closed-form radii.

Families are addressed by a short tag plus integer parameters, e.g.
"S-,n=48,k=2".  Vertex labeling conventions are fixed and documented per
constructor so that quotient partitions can be written down once.

f_poly is the quartic that governs the apex-plus-clique-plus-pendants
family below (make_G4); its largest root equals that family's spectral
radius, which the quotient tests pin down exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph
from .polynomials import Polynomial, largest_real_root
from .quadratic import QuadExt, largest_root_of_monic_quadratic


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: dict

    def __init__(self, tag: str, params: dict):
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "params", dict(params))

    def __eq__(self, other):
        return (
            isinstance(other, FamilySpec)
            and self.tag == other.tag
            and self.params == other.params
        )

    def __hash__(self):
        return hash((self.tag, tuple(sorted(self.params.items()))))


_ALIASES = {
    "s": "S",
    "s_nk": "S",
    "s-": "S-",
    "s_nk_minus": "S-",
    "sk": "Sk",
    "s_n_k_matching": "Sk",
    "d": "D",
    "double_star": "D",
    "star": "star",
    "theta": "theta",
    "split": "split",
    "complete_split": "split",
    "g4": "G4",
}

_PARAM_NAMES = {
    "S": ("n", "k"),
    "S-": ("n", "k"),
    "Sk": ("n", "k"),
    "D": ("a", "b"),
    "star": ("r",),
    "theta": ("p", "q"),
    "split": ("k", "s"),
    "G4": ("r", "t"),
}


def parse_family_spec(text: str) -> FamilySpec:
    """Parse "tag,key=val,..." into a FamilySpec, validating names."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty family spec")
    tag = _ALIASES.get(parts[0].lower())
    if tag is None:
        raise ValueError(f"unknown family tag {parts[0]!r}")
    want = _PARAM_NAMES[tag]
    params = {}
    for piece in parts[1:]:
        if "=" not in piece:
            raise ValueError(f"expected key=value, got {piece!r}")
        key, _, val = piece.partition("=")
        key = key.strip()
        if key not in want:
            raise ValueError(f"family {tag} takes {want}, not {key!r}")
        if key in params:
            raise ValueError(f"duplicate parameter {key!r}")
        try:
            params[key] = int(val)
        except ValueError:
            raise ValueError(f"parameter {key}={val!r} is not an integer") from None
    missing = [k for k in want if k not in params]
    if missing:
        raise ValueError(f"family {tag} missing parameters {missing}")
    return FamilySpec(tag, params)


def make_S(n: int, k: int) -> Graph:
    """Clique on 0..k-1 joined completely to independent k..n-1."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges)


def make_S_minus(n: int, k: int) -> Graph:
    """make_S(n, k) minus the edge between vertices n-1 and k-1."""
    if n < k + 2:
        raise ValueError("need n >= k + 2 so an edge can be dropped")
    return make_S(n, k).without_edge(n - 1, k - 1)


def make_star(r: int) -> Graph:
    """Star with center 0 and r leaves."""
    if r < 0:
        raise ValueError("need r >= 0")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


def make_star_matching(n: int, k: int) -> Graph:
    """Star on n vertices with k disjoint edges added between leaves.

    Center 0; matched leaf pairs are (2i+1, 2i+2) for i < k.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if k < 0 or 2 * k > n - 1:
        raise ValueError("need 0 <= 2k <= n - 1")
    edges = [(0, i) for i in range(1, n)]
    edges += [(2 * i + 1, 2 * i + 2) for i in range(k)]
    return Graph.from_edges(n, edges)


def make_double_star(a: int, b: int) -> Graph:
    """Adjacent centers 0 and 1 with a leaves on 0 and b leaves on 1."""
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(2 + a + b, edges)


def make_theta(p: int, q: int) -> Graph:
    """Anchors 0 and 1 joined by an edge plus paths of p and q edges.

    Internal vertices are 2..p for the first path and p+1..p+q-1 for
    the second.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    if q < p:
        raise ValueError("need p <= q")
    edges = [(0, 1)]
    chain = [0] + list(range(2, p + 1)) + [1]
    edges += list(zip(chain, chain[1:]))
    chain = [0] + list(range(p + 1, p + q)) + [1]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(p + q, edges)


def make_complete_split(k: int, s: int) -> Graph:
    """Clique 0..k-1 joined to independent set of s further vertices."""
    if k < 1 or s < 1:
        raise ValueError("need k >= 1 and s >= 1")
    return make_S(k + s, k)


def make_G4(r: int, t: int) -> Graph:
    """Apex over a star plus pendant edges at the apex.

    Vertex 0 (apex) is adjacent to 1 (star center), to the r star leaves
    2..r+1, and to t pendants r+2..r+t+1.  So n = r+t+2, m = 2r+t+1.
    With t = 1 this is make_S_minus(r+3, 2) up to isomorphism.
    """
    if r < 1 or t < 0:
        raise ValueError("need r >= 1 and t >= 0")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + i) for i in range(r)]
    edges += [(0, r + 2 + i) for i in range(t)]
    return Graph.from_edges(r + t + 2, edges)


_MAKERS = {
    "S": lambda p: make_S(p["n"], p["k"]),
    "S-": lambda p: make_S_minus(p["n"], p["k"]),
    "Sk": lambda p: make_star_matching(p["n"], p["k"]),
    "D": lambda p: make_double_star(p["a"], p["b"]),
    "star": lambda p: make_star(p["r"]),
    "theta": lambda p: make_theta(p["p"], p["q"]),
    "split": lambda p: make_complete_split(p["k"], p["s"]),
    "G4": lambda p: make_G4(p["r"], p["t"]),
}


def make_graph(spec) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    maker = _MAKERS.get(spec.tag)
    if maker is None:
        raise ValueError(f"unknown family tag {spec.tag!r}")
    return maker(spec.params)


def f_poly(m: int, t: int) -> Polynomial:
    """x^4 - m x^2 - (m-t-1) x + t(m-t-1)/2 as an integer polynomial.

    Defined when m >= t+3 and m-t-1 is even, the parity that makes the
    pendant count t and edge count m realizable together in make_G4.
    """
    if t < 0:
        raise ValueError("need t >= 0")
    if m < t + 3:
        raise ValueError("need m >= t + 3")
    if (m - t - 1) % 2 != 0:
        raise ValueError(f"parity violation: m - t - 1 = {m - t - 1} is odd")
    const2 = t * (m - t - 1)  # twice the constant term, always even here
    return Polynomial([const2 // 2, -(m - t - 1), -m, 0, 1])


def g4_partition(r: int, t: int) -> tuple[tuple[int, ...], ...]:
    """Equitable partition of make_G4: apex / center / leaves / pendants."""
    blocks = [
        (0,),
        (1,),
        tuple(range(2, r + 2)),
    ]
    if t:
        blocks.append(tuple(range(r + 2, r + t + 2)))
    return tuple(blocks)


def split_partition(k: int, s: int) -> tuple[tuple[int, ...], ...]:
    if s == 0:
        return (tuple(range(k)),)
    return (tuple(range(k)), tuple(range(k, k + s)))


def s_partition(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return (tuple(range(k)), tuple(range(k, n)))


def s_minus_partition(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Equitable only for k = 2: clique split apart, damaged leaf alone."""
    if k != 2:
        raise ValueError("partition written down for k = 2 only")
    return ((0,), (1,), tuple(range(2, n - 1)), (n - 1,))


@dataclass(frozen=True)
class RhoDescriptor:
    """Spectral radius with whatever exactness is available.

    exact is a QuadExt when the radius lives in a quadratic field,
    poly is an integer polynomial having the radius as largest root,
    value is always the float.
    """

    value: float
    exact: Optional[QuadExt] = None
    poly: Optional[Polynomial] = None


def closed_form_rho(spec) -> RhoDescriptor:
    """Exact spectral radius for the families where one is known here.

    Supported: S with k <= 2, S- with k = 2, star, split, G4.  Everything
    else raises ValueError.
    """
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    tag, p = spec.tag, spec.params
    if tag == "star":
        r = p["r"]
        if r < 0:
            raise ValueError("need r >= 0")
        ex = QuadExt(0, 1, r) if r else QuadExt(0)
        return RhoDescriptor(float(ex), exact=ex)
    if tag == "S":
        n, k = p["n"], p["k"]
        if k == 1:
            ex = QuadExt(0, 1, n - 1)
            return RhoDescriptor(float(ex), exact=ex)
        if k == 2:
            # quotient of the 2-block partition: x^2 - x - 2(n-2)
            ex = largest_root_of_monic_quadratic(-1, -2 * (n - 2))
            return RhoDescriptor(float(ex), exact=ex)
        raise ValueError("closed form for S held only for k <= 2 here")
    if tag == "split":
        k, s = p["k"], p["s"]
        # blocks clique/independent: larger root of x^2-(k-1)x-ks
        ex = largest_root_of_monic_quadratic(-(k - 1), -k * s)
        return RhoDescriptor(float(ex), exact=ex)
    if tag == "G4":
        r, t = p["r"], p["t"]
        m = 2 * r + t + 1
        if t >= 1:
            quartic = f_poly(m, t)
            return RhoDescriptor(largest_real_root(quartic), poly=quartic)
        # t = 0: the quotient is cubic
        cubic = Polynomial([-2 * r, -(2 * r + 1), 0, 1])
        return RhoDescriptor(largest_real_root(cubic), poly=cubic)
    if tag == "S-":
        n, k = p["n"], p["k"]
        if k != 2:
            raise ValueError("closed form for S- held only for k = 2 here")
        m = 2 * n - 4
        quartic = f_poly(m, 1)
        return RhoDescriptor(largest_real_root(quartic), poly=quartic)
    raise ValueError(f"no closed form registered for family {tag!r}")
