"""Quasi-homogeneous type inference for planar polynomial fields.

A field is quasi-homogeneous of type (alpha, beta) with index k when
scaling x by r^alpha and y by r^beta multiplies the first component by
r^(alpha+k) and the second by r^(beta+k).  Every monomial x^m y^n of f1
therefore imposes alpha*m + beta*n = alpha + k, and every monomial of f2
imposes alpha*m + beta*n = beta + k; parameters do not enter the count.

`infer_weights` solves the resulting homogeneous integer system exactly
and returns the primitive positive solution.  Zero components impose no
constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import AmbiguousWeights, NotQuasiHomogeneous
from .poly import Poly
from .vectorfield import VectorField

_SCAN_BOUND = 64


@dataclass(frozen=True)
class Weights:
    alpha: int
    beta: int
    k: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1 or self.k < 0:
            raise ValueError(f"weights must satisfy alpha, beta >= 1 and k >= 0: {self}")

    def as_tuple(self):
        return (self.alpha, self.beta, self.k)

    def __str__(self):
        return f"(alpha, beta, k) = ({self.alpha}, {self.beta}, {self.k})"


def _state_exponents(poly: Poly, sx: str, sy: str):
    ix = poly.vars.index(sx) if sx in poly.vars else None
    iy = poly.vars.index(sy) if sy in poly.vars else None
    for exps in poly.terms:
        m = exps[ix] if ix is not None else 0
        n = exps[iy] if iy is not None else 0
        yield (m, n)


def _constraint_rows(f: VectorField) -> "list[tuple[int, int, int]]":
    sx, sy = f.state_vars
    rows = set()
    for m, n in _state_exponents(f.f1, sx, sy):
        rows.add((m - 1, n, -1))
    for m, n in _state_exponents(f.f2, sx, sy):
        rows.add((m, n - 1, -1))
    return sorted(rows)


def _nullspace(rows) -> "list[list[Fraction]]":
    m = [[Fraction(x) for x in row] for row in rows]
    n = 3
    pivots = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def _primitive(vec) -> "tuple[int, ...]":
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _positive_candidates(rows) -> "list[tuple[int, int, int]]":
    """Scan alpha, beta <= bound for positive primitive solutions of all rows."""
    found = []
    for alpha in range(1, _SCAN_BOUND + 1):
        for beta in range(1, _SCAN_BOUND + 1):
            ks = {alpha * a + beta * b for a, b, _ in rows}
            if len(ks) != 1:
                continue
            k = ks.pop()
            if k < 0:
                continue
            if gcd(gcd(alpha, beta), k) == 1:
                found.append((alpha, beta, k))
    found.sort(key=lambda t: (t[0] + t[1], t[0], t[1]))
    return found


def infer_weights(f: VectorField) -> Weights:
    """Primitive positive (alpha, beta, k) solving every monomial constraint."""
    if f.is_zero():
        raise ValueError("the zero field has no quasi-homogeneous type")
    rows = _constraint_rows(f)
    basis = _nullspace(rows)
    if not basis:
        raise NotQuasiHomogeneous(
            "the exponent constraints admit only the zero weight triple"
        )
    if len(basis) >= 2:
        candidates = _positive_candidates(rows)
        raise AmbiguousWeights(
            generators=[_primitive(v) for v in basis],
            suggestion=candidates[0] if candidates else None,
        )
    alpha, beta, k = _primitive(basis[0])
    if alpha <= 0 or beta <= 0 or k < 0:
        raise NotQuasiHomogeneous(
            f"constraint solution ({alpha}, {beta}, {k}) has no positive representative"
        )
    w = Weights(alpha, beta, k)
    if not verify_weights(f, w):
        raise AssertionError(f"internal error: inferred weights {w} do not verify")
    return w


def verify_weights(f: VectorField, w: Weights) -> bool:
    """Check f(r^alpha x, r^beta y) == (r^(alpha+k) f1, r^(beta+k) f2) symbolically."""
    sx, sy = f.state_vars
    taken = set(f.f1.vars) | set(f.f2.vars) | {sx, sy}
    fresh = "r"
    while fresh in taken:
        fresh += "_"
    r = Poly.var(fresh)
    subs_x = (r**w.alpha) * Poly.var(sx)
    subs_y = (r**w.beta) * Poly.var(sy)

    def scaled(poly, shift):
        bind = {v: b for v, b in ((sx, subs_x), (sy, subs_y)) if v in poly.vars}
        return poly.substitute(bind) == (r ** shift) * poly

    return scaled(f.f1, w.alpha + w.k) and scaled(f.f2, w.beta + w.k)
