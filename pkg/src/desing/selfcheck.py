"""Runtime invariant suite behind the `verify` subcommand.

Each check returns a CheckResult; the pytest suite reuses the same functions
so the CLI and the tests cannot drift apart.  Randomized checks draw from a
seeded generator and are deterministic for a fixed seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .charts import ChartId, blow_up_in_chart, compatibility_defect, transition
from .dynamo import (
    conjugacy_check,
    frame_chart,
    frame_original,
    integrate,
    observed_order,
    rescaling_check,
)
from .equilibria import CLASS_SADDLE, MODEL_HYPERBOLIC_X, global_divisor_report
from .errors import DesingError
from .polar import Branch, HYPERBOLA, SPHERE, bridge_beta1, desingularize_polar, polar_pushforward
from .poly import Poly
from .quotient import COS, RADIAL, SIN, QuotientPoly
from .vectorfield import Param, VectorField
from .weights import Weights, infer_weights


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def demo_system() -> VectorField:
    """The reference quadratic example: x' = a*x^2 - 2*x*y, y' = y^2 - a*x*y."""
    a, x, y = Poly.var("a"), Poly.var("x"), Poly.var("y")
    order = ("a", "x", "y")
    return VectorField(
        (a * x**2 - 2 * x * y).reordered(order),
        (y**2 - a * x * y).reordered(order),
        ("x", "y"),
        (Param("a", positive=True),),
    )


# -- random generators ----------------------------------------------------------


def _random_poly(rng: random.Random, names=("x", "y", "a"), max_terms=4, max_exp=3) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in names)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
    return Poly(names, {e: c for e, c in terms.items() if c})


def _random_quotient(rng: random.Random, sigma: int) -> QuotientPoly:
    return QuotientPoly(sigma, _random_poly(rng, (COS, SIN, RADIAL, "a"), max_terms=4, max_exp=3))


def _random_quasihomogeneous(rng: random.Random):
    """A field generated from a sampled primitive triple, with enough monomials
    that the triple is the unique positive solution."""
    while True:
        alpha = rng.randint(1, 5)
        beta = rng.randint(1, 5)
        k = rng.randint(1, 5)
        g = math.gcd(math.gcd(alpha, beta), k)
        alpha, beta, k = alpha // g, beta // g, k // g
        mono1 = [(m, n) for m in range(8) for n in range(8) if alpha * m + beta * n == alpha + k]
        mono2 = [(m, n) for m in range(8) for n in range(8) if alpha * m + beta * n == beta + k]
        if not mono1 or not mono2:
            continue
        take1 = rng.sample(mono1, rng.randint(1, min(2, len(mono1))))
        take2 = rng.sample(mono2, rng.randint(1, min(2, len(mono2))))
        f1 = Poly(("x", "y"), {e: Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for e in take1})
        f2 = Poly(("x", "y"), {e: Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for e in take2})
        rows = [(m - 1, n) for m, n in take1] + [(m, n - 1) for m, n in take2]
        rank2 = any(
            rows[i][0] * rows[j][1] != rows[i][1] * rows[j][0]
            for i in range(len(rows))
            for j in range(i + 1, len(rows))
        )
        if rank2:
            return VectorField(f1, f2, ("x", "y")), Weights(alpha, beta, k)


# -- symbolic checks --------------------------------------------------------------


def check_ring_axioms(seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    for i in range(cases):
        p, q, r = (_random_poly(rng) for _ in range(3))
        if (p + q) + r != p + (q + r):
            return CheckResult("ring-axioms", False, i, "additive associativity failed")
        if (p * q) * r != p * (q * r):
            return CheckResult("ring-axioms", False, i, "multiplicative associativity failed")
        if p * q != q * p:
            return CheckResult("ring-axioms", False, i, "commutativity failed")
        if p * (q + r) != p * q + p * r:
            return CheckResult("ring-axioms", False, i, "distributivity failed")
    return CheckResult("ring-axioms", True, cases)


def check_reduction_homomorphism(seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    for i in range(cases):
        sigma = rng.choice((SPHERE, HYPERBOLA))
        p = _random_quotient(rng, sigma)
        q = _random_quotient(rng, sigma)
        if (p * q) != QuotientPoly(sigma, p.base * q.base):
            return CheckResult(
                "reduction-homomorphism", False, i, "reduce(reduce(p)*reduce(q)) != reduce(p*q)"
            )
        if QuotientPoly(sigma, (p + q).base) != p + q:
            return CheckResult("reduction-homomorphism", False, i, "reduction is not idempotent")
    return CheckResult("reduction-homomorphism", True, cases)


def check_exact_division(seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    done = attempts = 0
    while done < cases and attempts < 50 * cases:
        attempts += 1
        p = _random_poly(rng)
        q = _random_poly(rng)
        if q.is_zero():
            continue
        if (p * q).div_exact(q) != p:
            return CheckResult("exact-division", False, done, f"(p*q)/q != p for p={p}, q={q}")
        done += 1
    return CheckResult("exact-division", True, done)


def check_substitution_homomorphism(seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    for i in range(cases):
        p = _random_poly(rng)
        q = _random_poly(rng)
        bindings = {
            "x": _random_poly(rng, ("u", "v"), max_terms=2, max_exp=2),
            "y": _random_poly(rng, ("u", "v"), max_terms=2, max_exp=2),
        }

        def subbed(poly):
            return poly.substitute({k: v for k, v in bindings.items() if k in poly.vars})

        if subbed(p * q) != subbed(p) * subbed(q):
            return CheckResult(
                "substitution-homomorphism", False, i, "substitute(p*q) != substitute(p)*substitute(q)"
            )
    return CheckResult("substitution-homomorphism", True, cases)


def check_weights_oracle(seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    for i in range(cases):
        f, expected = _random_quasihomogeneous(rng)
        got = infer_weights(f)
        if got != expected:
            return CheckResult("weights-oracle", False, i, f"expected {expected}, got {got} for {f}")
    return CheckResult("weights-oracle", True, cases)


def check_polar_solve_roundtrip(seed: int, cases: int = 50) -> CheckResult:
    """Reconstruct (x', y') from the solved polar components symbolically;
    validates the linear solve including the exact division by the radius."""
    rng = random.Random(seed)

    def drop_state_constants(p):
        # the blow-up needs f(0, 0) = 0 identically in the parameters
        ix, iy = p.vars.index("x"), p.vars.index("y")
        return Poly(p.vars, {e: c for e, c in p.terms.items() if e[ix] or e[iy]})

    done = attempts = 0
    while done < cases and attempts < 50 * cases:
        attempts += 1
        f1 = drop_state_constants(_random_poly(rng, ("x", "y", "a"), max_terms=3, max_exp=2))
        f2 = drop_state_constants(_random_poly(rng, ("x", "y", "a"), max_terms=3, max_exp=2))
        if f1.is_zero() and f2.is_zero():
            continue
        f = VectorField(f1, f2, ("x", "y"), (Param("a"),))
        sub = {"x": Poly.var(RADIAL) * Poly.var(COS), "y": Poly.var(RADIAL) * Poly.var(SIN)}
        for sigma in (SPHERE, HYPERBOLA):
            pf = polar_pushforward(f, sigma)
            cq = QuotientPoly(sigma, Poly.var(COS))
            sq = QuotientPoly(sigma, Poly.var(SIN))
            rq = QuotientPoly(sigma, Poly.var(RADIAL))
            F1 = QuotientPoly(sigma, f1.substitute({k: v for k, v in sub.items() if k in f1.vars}))
            F2 = QuotientPoly(sigma, f2.substitute({k: v for k, v in sub.items() if k in f2.vars}))
            if sigma == SPHERE:
                lhs1 = pf.radial * cq - rq * sq * pf.angular  # x' = r'c - r s angle'
            else:
                lhs1 = pf.radial * cq + rq * sq * pf.angular  # x' = rho'c + rho s angle'
            lhs2 = pf.radial * sq + rq * cq * pf.angular
            if lhs1 != F1 or lhs2 != F2:
                return CheckResult(
                    "polar-solve-roundtrip", False, done, f"sigma={sigma}: (x', y') not reproduced"
                )
        done += 1
    return CheckResult("polar-solve-roundtrip", True, done)


def check_chart_pushforward(f: VectorField, w: Weights) -> CheckResult:
    """Symbolic pushforward identity for unit weights: D(psi) . raw == f o psi."""
    if (w.alpha, w.beta) != (1, 1):
        return CheckResult("chart-pushforward", True, 0, "skipped: non-unit weights")
    sx, sy = f.state_vars
    for chart in ChartId:
        cf = blow_up_in_chart(f, w, chart)
        r = Poly.var(cf.radial_var)
        wv = Poly.var(cf.angular_var)
        x_radial = chart in (ChartId.K1, ChartId.K3)
        sign = 1 if chart in (ChartId.K1, ChartId.K2) else -1
        if x_radial:
            emb = {sx: sign * r, sy: r * wv}
            lhs1 = sign * cf.raw[0]
            lhs2 = wv * cf.raw[0] + r * cf.raw[1]
        else:
            emb = {sx: r * wv, sy: sign * r}
            lhs1 = wv * cf.raw[0] + r * cf.raw[1]
            lhs2 = sign * cf.raw[0]
        rhs1 = f.f1.substitute({k: v for k, v in emb.items() if k in f.f1.vars})
        rhs2 = f.f2.substitute({k: v for k, v in emb.items() if k in f.f2.vars})
        if lhs1 != rhs1 or lhs2 != rhs2:
            return CheckResult("chart-pushforward", False, 0, f"{chart}: identity failed")
    return CheckResult("chart-pushforward", True, 4)


def check_chart_pushforward_numeric(seed: int, cases: int = 20) -> CheckResult:
    """Numeric pushforward identity for a non-unit-weight field (type (2,1,2))."""
    rng = random.Random(seed)
    x, y = Poly.var("x"), Poly.var("y")
    f = VectorField(x**2, y**3, ("x", "y"))
    w = infer_weights(f)
    fn = f.as_callable({})
    for chart in ChartId:
        cf = blow_up_in_chart(f, w, chart)
        raw = cf.as_callable({}, desingularized=False)
        x_radial = chart in (ChartId.K1, ChartId.K3)
        sign = 1 if chart in (ChartId.K1, ChartId.K2) else -1
        a, b = w.alpha, w.beta
        for _ in range(cases):
            r = rng.uniform(0.2, 1.2)
            wv = rng.uniform(-2.0, 2.0)
            vr, vw = raw(r, wv)
            if x_radial:
                dx = sign * a * r ** (a - 1) * vr
                dy = b * r ** (b - 1) * wv * vr + r**b * vw
                px, py = sign * r**a, r**b * wv
            else:
                dx = a * r ** (a - 1) * wv * vr + r**a * vw
                dy = sign * b * r ** (b - 1) * vr
                px, py = r**a * wv, sign * r**b
            ex, ey = fn(px, py)
            scale = max(1.0, abs(ex), abs(ey))
            if abs(dx - ex) / scale > 1e-12 or abs(dy - ey) / scale > 1e-12:
                return CheckResult(
                    "chart-pushforward-numeric", False, 0, f"{chart} at (r, w)=({r}, {wv})"
                )
    return CheckResult("chart-pushforward-numeric", True, 4 * cases)


def check_compatibility(f: VectorField, w: Weights) -> CheckResult:
    pairs = [
        (ChartId.K1, ChartId.K2), (ChartId.K2, ChartId.K1),
        (ChartId.K1, ChartId.K4), (ChartId.K4, ChartId.K1),
        (ChartId.K2, ChartId.K3), (ChartId.K3, ChartId.K2),
        (ChartId.K3, ChartId.K4), (ChartId.K4, ChartId.K3),
    ]
    for frm, to in pairs:
        defect = compatibility_defect(f, w, frm, to)
        if not (defect[0].is_zero() and defect[1].is_zero()):
            return CheckResult("chart-compatibility", False, 0, f"{frm}->{to} defect nonzero")
    return CheckResult("chart-compatibility", True, len(pairs))


def check_transition_roundtrip(seed: int, cases: int = 50) -> CheckResult:
    from .charts import _SOURCE_SIGN  # internal overlap table; check-only use

    rng = random.Random(seed)
    pairs = list(_SOURCE_SIGN)
    for i in range(cases):
        frm, to = rng.choice(pairs)
        sgn = _SOURCE_SIGN[(frm, to)]
        r = Fraction(rng.randint(0, 8), rng.randint(1, 5))
        wv = sgn * Fraction(rng.randint(1, 9), rng.randint(1, 5))
        back = transition(transition((r, wv), frm, to), to, frm)
        if back != (r, wv):
            return CheckResult("transition-roundtrip", False, i, f"{frm}->{to} not involutive")
    return CheckResult("transition-roundtrip", True, cases)


# -- numeric checks -----------------------------------------------------------------


def check_divisor_invariance(f: VectorField, w: Weights, bindings) -> CheckResult:
    worst = 0.0
    for chart in ChartId:
        cf = blow_up_in_chart(f, w, chart)
        ff = frame_chart(cf, bindings)
        for seed_w in (-1.0, 0.25, 2.0):
            tr = integrate(ff, (0.0, seed_w), 2.0, 1e-2)
            worst = max(worst, max(abs(u) for _, u, _ in tr.points))
    return CheckResult("divisor-invariance", worst < 1e-12, 12, f"max |radial| = {worst:.3e}")


def check_rk4_order(f: VectorField, bindings) -> CheckResult:
    # seeds ordered energetic-first; tame fields may only resolve the
    # rounding floor, which still certifies convergence
    ff = frame_original(f, bindings)
    for x0 in ((0.5, -0.5), (-1.0, -0.8), (0.1, 0.2)):
        try:
            order = observed_order(ff, x0, 1.0, 1e-2)
        except ValueError:
            continue  # orbit escaped; try the next seed
        if math.isinf(order):
            continue
        return CheckResult("rk4-order", 3.5 <= order <= 4.5, 3, f"observed order {order:.2f}")
    return CheckResult("rk4-order", True, 3, "truncation error below the rounding floor")


# seed windows per chart where the reference example's angular dynamics stay
# bounded, so the conjugacy tolerance measures integration error rather than
# finite-time escape
_SAFE_ANGULAR = {
    ChartId.K1: (-0.5, 0.5),
    ChartId.K2: (-0.5, 0.5),
    ChartId.K3: (-0.5, 0.0),
    ChartId.K4: (-0.5, 0.0),
}


def check_conjugacy(f: VectorField, w: Weights, bindings, seed: int, cases: int = 20) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for i in range(cases):
        chart = rng.choice(list(ChartId))
        lo, hi = _SAFE_ANGULAR[chart]
        cf = blow_up_in_chart(f, w, chart)
        x0 = (rng.uniform(0.05, 0.5), rng.uniform(lo, hi))
        defect = conjugacy_check(f, cf, x0, bindings, t_end=1.0, h=1e-3)
        worst = max(worst, defect)
        if defect >= 1e-6:
            return CheckResult("conjugacy", False, i, f"{chart} seed {x0}: defect {defect:.3e}")
    return CheckResult("conjugacy", True, cases, f"max defect {worst:.3e}")


def check_rescaling(f: VectorField, w: Weights, bindings, seed: int, cases: int = 100) -> CheckResult:
    rng = random.Random(seed)
    points = [(rng.uniform(0.01, 2.0), rng.uniform(-3.0, 3.0)) for _ in range(cases)]
    for chart in ChartId:
        cf = blow_up_in_chart(f, w, chart)
        des = cf.as_callable(bindings, desingularized=True)
        usable = [p for p in points if math.hypot(*des(*p)) > 1e-9]
        res = rescaling_check(cf, usable, bindings)
        if res.max_angle_defect > 1e-10 or res.max_ratio_defect > 1e-10:
            return CheckResult(
                "raw-vs-desing-rescaling", False, res.checked,
                f"{chart}: angle {res.max_angle_defect:.2e} ratio {res.max_ratio_defect:.2e}",
            )
    return CheckResult("raw-vs-desing-rescaling", True, 4 * len(points))


def _orbit_derivative(fn, x0, observe, dt: float) -> float:
    """Richardson-extrapolated central difference of observe(z(t)) at t=0
    along the orbit of fn, using single RK4 steps of +-dt and +-dt/2."""
    neg = lambda u, v: tuple(-z for z in fn(u, v))

    def obs_at(step, backward):
        field = neg if backward else fn
        _, u, v = integrate(field, x0, step, step).points[-1]
        return observe(u, v)

    def central(step):
        return (obs_at(step, False) - obs_at(step, True)) / (2.0 * step)

    return (4.0 * central(dt / 2.0) - central(dt)) / 3.0


def check_polar_finite_difference(f: VectorField, bindings, seed: int, cases: int = 50) -> CheckResult:
    """Spherical polar components vs finite differences of the inverse polar
    map along integrated orbits."""
    rng = random.Random(seed)
    pf = polar_pushforward(f, SPHERE)
    fn = f.as_callable(bindings)
    bound = {k: float(v) for k, v in dict(bindings).items()}
    done = attempts = 0
    while done < cases and attempts < 100 * cases:
        attempts += 1
        theta = rng.uniform(0.0, 2.0 * math.pi)
        radius = rng.uniform(0.3, 1.0)
        exp_a, exp_r = pf.field_at(theta, radius, bound)
        if abs(exp_a) < 0.05 or abs(exp_r) < 0.05:
            continue  # relative comparison needs values away from the roots
        x0 = (radius * math.cos(theta), radius * math.sin(theta))
        num_a = _orbit_derivative(
            fn, x0, lambda u, v: _unwrap(math.atan2(v, u), theta), 1e-4
        )
        num_r = _orbit_derivative(fn, x0, lambda u, v: math.hypot(u, v), 1e-4)
        if abs(num_a - exp_a) / abs(exp_a) > 1e-8 or abs(num_r - exp_r) / abs(exp_r) > 1e-8:
            return CheckResult(
                "polar-finite-difference", False, done,
                f"theta={theta:.4f} r={radius:.4f}: ({num_a}, {num_r}) vs ({exp_a}, {exp_r})",
            )
        done += 1
    return CheckResult("polar-finite-difference", True, done)


def _unwrap(angle: float, reference: float) -> float:
    return reference + (angle - reference + math.pi) % (2.0 * math.pi) - math.pi


def check_hyperbolic_finite_difference(f: VectorField, bindings, seed: int, cases: int = 10) -> CheckResult:
    """Hyperbolic polar components vs finite differences of the hyperboloid
    inverse along orbits: this is the check that arbitrates the sign of the
    last radial term."""
    rng = random.Random(seed)
    hh = polar_pushforward(f, HYPERBOLA, Branch.X)
    fn = f.as_callable(bindings)
    bound = {k: float(v) for k, v in dict(bindings).items()}
    done = attempts = 0
    while done < cases and attempts < 100 * cases:
        attempts += 1
        phi = rng.uniform(-1.2, 1.2)
        rho = rng.uniform(0.3, 1.0)
        exp_a, exp_r = hh.field_at(phi, rho, bound)
        if abs(exp_a) < 0.05 or abs(exp_r) < 0.05:
            continue
        x0 = (rho * math.cosh(phi), rho * math.sinh(phi))
        num_a = _orbit_derivative(fn, x0, lambda u, v: math.atanh(v / u), 1e-4)
        num_r = _orbit_derivative(fn, x0, lambda u, v: math.sqrt(u * u - v * v), 1e-4)
        if abs(num_a - exp_a) / abs(exp_a) > 1e-9 or abs(num_r - exp_r) / abs(exp_r) > 1e-9:
            return CheckResult(
                "hyperbolic-finite-difference", False, done,
                f"phi={phi:.4f} rho={rho:.4f}: ({num_a}, {num_r}) vs ({exp_a}, {exp_r})",
            )
        done += 1
    return CheckResult("hyperbolic-finite-difference", True, done)


def check_bridge_conjugacy(f: VectorField, w: Weights, bindings, seed: int, cases: int = 20) -> CheckResult:
    """D(beta1) applied to the hyperbolic polar field equals the first-chart
    field at the bridged point; the desingularized forms agree after scaling
    the chart field by cosh(phi)."""
    rng = random.Random(seed)
    raw_h = polar_pushforward(f, HYPERBOLA, Branch.X)
    des_h = desingularize_polar(polar_pushforward(f, HYPERBOLA, Branch.X))
    cf = blow_up_in_chart(f, w, ChartId.K1)
    raw_k = cf.as_callable(bindings, desingularized=False)
    des_k = cf.as_callable(bindings, desingularized=True)
    bound = {k: float(v) for k, v in dict(bindings).items()}
    for i in range(cases):
        phi = rng.uniform(-1.5, 1.5)
        rho = rng.uniform(0.05, 1.0)
        r1, y1 = bridge_beta1(phi, rho)
        ch, sh = math.cosh(phi), math.sinh(phi)
        sech2 = 1.0 / (ch * ch)
        for hfield, kfield, scale in ((raw_h, raw_k, 1.0), (des_h, des_k, ch)):
            da, dr = hfield.field_at(phi, rho, bound)
            lhs = (rho * sh * da + ch * dr, sech2 * da)
            kv = kfield(r1, y1)
            rhs = (scale * kv[0], scale * kv[1])
            err = math.hypot(lhs[0] - rhs[0], lhs[1] - rhs[1])
            norm = max(1e-12, math.hypot(*rhs))
            if err / norm > 1e-9:
                return CheckResult(
                    "bridge-conjugacy", False, i,
                    f"(phi, rho)=({phi:.4f}, {rho:.4f}): relative defect {err / norm:.2e}",
                )
    return CheckResult("bridge-conjugacy", True, cases)


def check_global_counts(f: VectorField, w: Weights) -> CheckResult:
    for a in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(10)):
        report = global_divisor_report(f, w, {"a": a})
        if len(report.equilibria) != 6:
            return CheckResult("global-counts", False, 0, f"a={a}: {len(report.equilibria)} equilibria")
        if any(m.classification != CLASS_SADDLE for m in report.equilibria):
            return CheckResult("global-counts", False, 0, f"a={a}: non-saddle present")
        hx = global_divisor_report(f, w, {"a": a}, model=MODEL_HYPERBOLIC_X)
        expected = 2 if a < Fraction(3, 2) else 1
        if len(hx.equilibria) != expected:
            return CheckResult(
                "global-counts", False, 0,
                f"a={a}: {len(hx.equilibria)} hyperboloid equilibria, expected {expected}",
            )
    return CheckResult("global-counts", True, 5)


def check_golden_forms(f: VectorField, w: Weights) -> CheckResult:
    """First-chart and spherical golden identities, asserted symbolically."""
    a = Poly.var("a")
    cf = blow_up_in_chart(f, w, ChartId.K1)
    r1, y1 = Poly.var("r1"), Poly.var("y1")
    if cf.raw != (r1**2 * (a - 2 * y1), r1 * y1 * (3 * y1 - 2 * a)):
        return CheckResult("golden-forms", False, 0, "first-chart raw field mismatch")
    if cf.desing != (r1 * (a - 2 * y1), y1 * (3 * y1 - 2 * a)):
        return CheckResult("golden-forms", False, 0, "first-chart desingularized field mismatch")
    c, s, r = Poly.var(COS), Poly.var(SIN), Poly.var(RADIAL)
    pf = polar_pushforward(f, SPHERE)
    want_ang = QuotientPoly(SPHERE, r * (3 * c * s**2 - 2 * a * s * c**2))
    want_rad = QuotientPoly(SPHERE, r**2 * (a * c - 2 * s - 2 * a * c * s**2 + 3 * s**3))
    if pf.angular != want_ang or pf.radial != want_rad:
        return CheckResult("golden-forms", False, 0, "spherical polar mismatch")
    return CheckResult("golden-forms", True, 2)


def run_all(seed: int = 0, f: "VectorField | None" = None, bindings=None) -> "list[CheckResult]":
    if f is None:
        f = demo_system()
        bindings = bindings or {"a": Fraction(1)}
    bindings = dict(bindings or {})
    is_demo = f == demo_system()
    w = infer_weights(f)
    results = [
        check_ring_axioms(seed),
        check_reduction_homomorphism(seed + 1),
        check_exact_division(seed + 2),
        check_substitution_homomorphism(seed + 3),
        check_weights_oracle(seed + 4),
        check_polar_solve_roundtrip(seed + 5),
        check_chart_pushforward(f, w),
        check_chart_pushforward_numeric(seed + 6),
        check_transition_roundtrip(seed + 7),
    ]
    try:
        if (w.alpha, w.beta) == (1, 1):
            results.append(check_compatibility(f, w))
            if is_demo:
                results.append(check_golden_forms(f, w))
                results.append(check_global_counts(f, w))
            results.append(check_bridge_conjugacy(f, w, bindings, seed + 8))
            results.append(check_polar_finite_difference(f, bindings, seed + 9))
            results.append(check_hyperbolic_finite_difference(f, bindings, seed + 10))
        results.append(check_divisor_invariance(f, w, bindings))
        results.append(check_rk4_order(f, bindings))
        results.append(check_rescaling(f, w, bindings, seed + 11))
        results.append(check_conjugacy(f, w, bindings, seed + 12))
    except DesingError as exc:
        results.append(CheckResult("field-specific-suite", False, 0, str(exc)))
    return results
