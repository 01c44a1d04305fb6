"""Integer polynomials with exact evaluation and certified real roots.

Coefficients are stored ascending (coeffs[k] multiplies x**k) as Python
ints.  A polynomial whose true coefficients are half-integers is stored
doubled with the `doubled` flag set; normalization halves it back as soon
as every doubled coefficient is even.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .quadratic import QuadExt


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]
    doubled: bool = False

    def __init__(self, coeffs: Sequence[int], doubled: bool = False):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be ints")
        while cs and cs[-1] == 0:
            cs.pop()
        if doubled and cs and all(c % 2 == 0 for c in cs):
            cs = [c // 2 for c in cs]
            doubled = False
        if not cs:
            doubled = False
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "doubled", doubled)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def true_coeffs(self) -> tuple[Fraction, ...]:
        if self.doubled:
            return tuple(Fraction(c, 2) for c in self.coeffs)
        return tuple(Fraction(c) for c in self.coeffs)

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc / 2 if self.doubled else acc

    def eval_fraction(self, x: Union[int, Fraction]) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc / 2 if self.doubled else acc

    def eval_quad(self, x: QuadExt) -> QuadExt:
        acc = QuadExt(0, 0, 1)
        for c in reversed(self.coeffs):
            acc = acc * x + QuadExt(c)
        if self.doubled:
            acc = acc / QuadExt(2)
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self._combine(other, -1)

    def _combine(self, other: "Polynomial", sgn: int) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        da = 2 if self.doubled else 1
        db = 2 if other.doubled else 1
        lcm = 2 if (self.doubled or other.doubled) else 1
        fa, fb = lcm // da, lcm // db
        size = max(len(self.coeffs), len(other.coeffs))
        out = [0] * size
        for i, c in enumerate(self.coeffs):
            out[i] += fa * c
        for i, c in enumerate(other.coeffs):
            out[i] += sgn * fb * c
        return Polynomial(out, doubled=lcm == 2)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial([other * c for c in self.coeffs], self.doubled)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        if self.doubled and other.doubled:
            if all(c % 4 == 0 for c in out):
                return Polynomial([c // 4 for c in out])
            raise ValueError("product has quarter-integer coefficients")
        return Polynomial(out, doubled=self.doubled or other.doubled)

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.doubled)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        body = " + ".join(parts).replace("+ -", "- ")
        if self.doubled:
            return f"Polynomial(({body})/2)"
        return f"Polynomial({body})"


def poly_divmod_exact(
    f: Polynomial, g: Polynomial
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Quotient and remainder of f by g over the rationals, ascending."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(f.true_coeffs())
    div = list(g.true_coeffs())
    dq = len(rem) - len(div)
    if dq < 0:
        return (Fraction(0),), (tuple(rem) if rem else (Fraction(0),))
    quot = [Fraction(0)] * (dq + 1)
    lead = div[-1]
    for k in range(dq, -1, -1):
        c = rem[len(div) - 1 + k] / lead
        quot[k] = c
        if c:
            for i, d in enumerate(div):
                rem[i + k] -= c * d
    tail = rem[: len(div) - 1]
    while tail and tail[-1] == 0:
        tail.pop()
    return tuple(quot), (tuple(tail) if tail else (Fraction(0),))


def divides_exactly(g: Polynomial, f: Polynomial) -> bool:
    """True when g divides f with zero remainder over the rationals."""
    if g.is_zero():
        return f.is_zero()
    _, rem = poly_divmod_exact(f, g)
    return all(c == 0 for c in rem)


def cauchy_root_bound(p: Polynomial) -> float:
    """1 + max |c_k / c_deg|; every real root lies within this radius."""
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    lead = p.coeffs[-1]
    return 1.0 + max(abs(c / lead) for c in p.coeffs[:-1])


def largest_real_root(
    p: Polynomial,
    lo: float = None,
    hi: float = None,
    tol: float = 1e-12,
) -> float:
    """Largest real root of p, found by descending grid scan + bisection.

    When lo/hi are given they must straddle a sign change; otherwise the
    scan starts at the Cauchy bound.  Raises ValueError when no sign
    change is located (even-multiplicity roots are invisible to this).
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    sign_lead = 1 if p.coeffs[-1] > 0 else -1

    def val(x: float) -> float:
        return sign_lead * p(x)

    if lo is not None or hi is not None:
        if lo is None or hi is None or not lo < hi:
            raise ValueError("need lo < hi when a bracket is supplied")
        if not (val(lo) <= 0 < val(hi) or val(lo) < 0 <= val(hi)):
            raise ValueError("supplied bracket does not straddle a sign change")
        a, b = lo, hi
    else:
        bound = cauchy_root_bound(p)
        a = b = None
        for grid in (4096, 65536):
            xs = [bound - 2 * bound * k / grid for k in range(grid + 1)]
            prev = xs[0]
            prev_v = val(prev)
            for x in xs[1:]:
                v = val(x)
                if prev_v > 0 >= v:
                    a, b = x, prev
                    break
                prev, prev_v = x, v
            if a is not None:
                break
        if a is None:
            raise ValueError("no sign change located")
    for _ in range(200):
        mid = (a + b) / 2
        if mid == a or mid == b:
            break
        if val(mid) > 0:
            b = mid
        else:
            a = mid
        if b - a <= tol * max(1.0, abs(b)):
            break
    root = (a + b) / 2
    # Newton polish when the derivative cooperates
    dcoeffs = [k * c for k, c in enumerate(p.coeffs)][1:]
    for _ in range(4):
        fv = p(root)
        dv = 0.0
        for c in reversed(dcoeffs):
            dv = dv * root + c
        if p.doubled:
            dv /= 2
        if dv == 0 or not math.isfinite(dv):
            break
        step = fv / dv
        nxt = root - step
        if not a - tol <= nxt <= b + tol:
            break
        root = nxt
        if abs(step) < tol * max(1.0, abs(root)):
            break
    return root
