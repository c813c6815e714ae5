"""Certified real-root isolation for univariate rational polynomials.

Coefficient lists are dense, index = degree, over `fractions.Fraction`.
The pipeline is classical: Yun's square-free decomposition to recover
multiplicities, exact extraction of rational roots by the rational-root
theorem, then Sturm-sequence isolation plus sign-change bisection for the
irrational remainder.  Everything is exact, so no root is ever missed or
invented; irrational roots come back as certified enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

_Z = Fraction(0)
_DIVISOR_LIMIT = 10**12
DEFAULT_WIDTH = Fraction(1, 10**12)

Coeffs = "list[Fraction]"


# -- dense polynomial helpers -------------------------------------------------


def poly_trim(cs) -> "list[Fraction]":
    cs = [Fraction(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def poly_degree(cs) -> int:
    return len(cs) - 1


def poly_eval(cs, x: Fraction) -> Fraction:
    acc = _Z
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def poly_derivative(cs) -> "list[Fraction]":
    return [c * i for i, c in enumerate(cs)][1:]


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_Z] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coeff = a[i + len(b) - 1] / lead
        if coeff:
            q[i] = coeff
            for j, bj in enumerate(b):
                a[i + j] -= coeff * bj
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b) -> "list[Fraction]":
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def yun_squarefree(p) -> "list[tuple[list[Fraction], int]]":
    """Square-free decomposition: [(factor, multiplicity)] with the factors
    pairwise coprime and each square-free."""
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return []
    dp = poly_derivative(p)
    g = poly_gcd(p, dp)
    if poly_degree(g) < 1:
        return [(p, 1)]
    w, _ = poly_divmod(p, g)
    y, _ = poly_divmod(dp, g)
    z = poly_trim([a - b for a, b in _zip_pad(y, poly_derivative(w))])
    out = []
    i = 1
    while poly_degree(w) >= 1:
        h = poly_gcd(w, z)  # monic; [1] when this multiplicity level is empty
        if poly_degree(h) >= 1:
            out.append((h, i))
        w, _ = poly_divmod(w, h)
        y, _ = poly_divmod(z, h)
        z = poly_trim([a - b for a, b in _zip_pad(y, poly_derivative(w))])
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else _Z, b[i] if i < len(b) else _Z)


# -- rational roots -------------------------------------------------------------


def _divisors(n: int):
    n = abs(n)
    if n > _DIVISOR_LIMIT:
        return None
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def rational_roots(p) -> "tuple[list[Fraction], list[Fraction]]":
    """All rational roots of a square-free polynomial, plus the deflated
    remainder.  Returns (roots, remainder); remainder is None-safe (a list)."""
    p = poly_trim(p)
    roots = []
    if poly_degree(p) < 1:
        return roots, p
    # factor out x^m
    m = 0
    while p and p[0] == 0:
        p = p[1:]
        m += 1
    if m:
        roots.append(_Z)
    if poly_degree(p) < 1:
        return roots, p
    denom_lcm = 1
    for c in p:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p]
    low = _divisors(ints[0])
    high = _divisors(ints[-1])
    if low is None or high is None:
        return roots, p  # coefficients too large; leave roots to isolation
    seen = set()
    for num in low:
        for den in high:
            if gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if poly_eval(p, cand) == 0:
                    roots.append(cand)
                    p, _ = poly_divmod(p, [-cand, Fraction(1)])
    return roots, p


# -- Sturm isolation --------------------------------------------------------------


def cauchy_bound(p) -> Fraction:
    lead = abs(p[-1])
    mx = max((abs(c) for c in p[:-1]), default=_Z)
    return Fraction(1) + mx / lead


def sturm_chain(p) -> "list[list[Fraction]]":
    chain = [poly_trim(p), poly_derivative(p)]
    while chain[-1]:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        lead = abs(r[-1])
        chain.append([-c / lead for c in r])
    return [c for c in chain if c]


def sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_squarefree(p) -> "tuple[list[Fraction], list[tuple[Fraction, Fraction]]]":
    """Isolate all real roots of a square-free polynomial.

    Returns (exact_roots_hit, isolating_intervals); every interval contains
    exactly one simple root and has a strict sign change at its endpoints.
    """
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return [], []
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    var = lambda x: sign_variations(chain, x)
    exact: "list[Fraction]" = []
    intervals: "list[tuple[Fraction, Fraction]]" = []

    def rec(lo, hi, vlo, vhi):
        n = vlo - vhi
        if n <= 0:
            return
        if n == 1 and poly_eval(p, lo) * poly_eval(p, hi) < 0:
            intervals.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            exact.append(mid)
            d = (hi - lo) / 64
            while True:
                a, b = mid - d, mid + d
                if (
                    lo < a
                    and b < hi
                    and poly_eval(p, a) != 0
                    and poly_eval(p, b) != 0
                ):
                    va, vb = var(a), var(b)
                    if va - vb == 1:
                        rec(lo, a, vlo, va)
                        rec(b, hi, vb, vhi)
                        return
                d /= 2
        else:
            vmid = var(mid)
            rec(lo, mid, vlo, vmid)
            rec(mid, hi, vmid, vhi)

    rec(-bound, bound, var(-bound), var(bound))
    return exact, intervals


def refine(p, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink a sign-change interval below `width` by bisection.

    Returns ('exact', root) when a bisection point lands on the root,
    otherwise ('interval', lo, hi).
    """
    flo = poly_eval(p, lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        fmid = poly_eval(p, mid)
        if fmid == 0:
            return ("exact", mid)
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return ("interval", lo, hi)


# -- public root records ------------------------------------------------------------


@dataclass(frozen=True)
class RealRoot:
    value: "Fraction | None"  # exact rational root, when known
    lo: "Fraction | None"  # certified enclosure for irrational roots
    hi: "Fraction | None"
    multiplicity: int
    factor: "tuple[Fraction, ...] | None"  # square-free factor, for re-refinement

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def approx(self) -> float:
        if self.value is not None:
            return float(self.value)
        return float((self.lo + self.hi) / 2)

    def as_interval(self) -> "tuple[Fraction, Fraction]":
        if self.value is not None:
            return (self.value, self.value)
        return (self.lo, self.hi)


def refine_root(root: RealRoot, width: Fraction) -> RealRoot:
    if root.exact or root.hi - root.lo < width:
        return root
    status = refine(list(root.factor), root.lo, root.hi, width)
    if status[0] == "exact":
        return RealRoot(status[1], None, None, root.multiplicity, root.factor)
    return RealRoot(None, status[1], status[2], root.multiplicity, root.factor)


def real_roots(coeffs: Sequence[Fraction], width: Fraction = DEFAULT_WIDTH) -> "list[RealRoot]":
    """All distinct real roots with multiplicities, sorted increasingly."""
    p = poly_trim(coeffs)
    if not p:
        raise ValueError("the zero polynomial has every point as a root")
    found: "list[RealRoot]" = []
    for factor, mult in yun_squarefree(p):
        rats, rest = rational_roots(factor)
        for r in rats:
            found.append(RealRoot(r, None, None, mult, tuple(factor)))
        if poly_degree(rest) >= 1:
            exact, intervals = isolate_squarefree(rest)
            for r in exact:
                found.append(RealRoot(r, None, None, mult, tuple(factor)))
            for lo, hi in intervals:
                status = refine(rest, lo, hi, width)
                if status[0] == "exact":
                    found.append(RealRoot(status[1], None, None, mult, tuple(rest)))
                else:
                    found.append(
                        RealRoot(None, status[1], status[2], mult, tuple(rest))
                    )
    found.sort(key=lambda r: r.approx)
    return found


# -- tiny rational interval arithmetic (for certified Jacobian signs) -----------------


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def point(cls, value) -> "RatInterval":
        v = Fraction(value)
        return cls(v, v)

    def __add__(self, other):
        o = _as_interval(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) + (-self)

    def __mul__(self, other):
        o = _as_interval(other)
        prods = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(prods), max(prods))

    __rmul__ = __mul__

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """-1, +1 when the sign is certain, 0 when the enclosure straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)


def _as_interval(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    return RatInterval.point(x)


def interval_eval(coeffs, box: RatInterval) -> RatInterval:
    acc = RatInterval.point(0)
    for c in reversed(list(coeffs)):
        acc = acc * box + RatInterval.point(c)
    return acc
