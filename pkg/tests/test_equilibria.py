import math
from fractions import Fraction

import pytest

from desing.charts import ChartField, ChartId, blow_up_in_chart, transition
from desing.equilibria import (
    CLASS_NON_HYPERBOLIC,
    CLASS_SADDLE,
    CLASS_UNSTABLE_NODE,
    Equilibrium,
    MODEL_HYPERBOLIC_X,
    MODEL_HYPERBOLIC_Y,
    classify_exact,
    divisor_angle,
    divisor_equilibria,
    global_divisor_report,
)
from desing.errors import DegenerateChart, DesingError, UnboundParameter
from desing.poly import Poly, poly_vars
from desing.selfcheck import check_global_counts, demo_system
from desing.vectorfield import Param, VectorField
from desing.weights import Weights, infer_weights

F = demo_system()
W = Weights(1, 1, 1)
A1 = {"a": Fraction(1)}


def test_first_chart_equilibria_exact():
    cf = blow_up_in_chart(F, W, ChartId.K1)
    eqs = divisor_equilibria(cf, A1)
    assert [(e.coords[0], e.coords[1]) for e in eqs] == [(0, Fraction(0)), (0, Fraction(2, 3))]
    e0, e1 = eqs
    assert e0.eigenvalues_exact == (Fraction(-2), Fraction(1))
    assert e1.eigenvalues_exact == (Fraction(-1, 3), Fraction(2))
    assert e0.classification == CLASS_SADDLE
    assert e1.classification == CLASS_SADDLE
    # the Jacobian is triangular on the divisor; frozen from differentiating
    # the desingularized first-chart field by hand: [[a-2w, -2r], [0, 6w-2a]]
    assert e0.jacobian == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-2)))
    assert e1.jacobian == ((Fraction(-1, 3), Fraction(0)), (Fraction(0), Fraction(2)))


def test_second_chart_equilibria_exact():
    cf = blow_up_in_chart(F, W, ChartId.K2)
    eqs = divisor_equilibria(cf, A1)
    assert [e.coords[1] for e in eqs] == [Fraction(0), Fraction(3, 2)]
    assert eqs[0].eigenvalues_exact == (Fraction(-3), Fraction(1))
    assert eqs[1].eigenvalues_exact == (Fraction(-1, 2), Fraction(3))
    assert all(e.classification == CLASS_SADDLE for e in eqs)


def test_jacobian_against_finite_differences():
    cf = blow_up_in_chart(F, W, ChartId.K1)
    eqs = divisor_equilibria(cf, A1)
    field = cf.as_callable(A1)
    h = 1e-6
    for eq in eqs:
        r0, w0 = eq.coords_float
        fd = [
            [
                (field(r0 + h, w0)[i] - field(r0 - h, w0)[i]) / (2 * h),
                (field(r0, w0 + h)[i] - field(r0, w0 - h)[i]) / (2 * h),
            ]
            for i in range(2)
        ]
        for i in range(2):
            for j in range(2):
                assert abs(float(eq.jacobian[i][j]) - fd[i][j]) < 1e-8


def test_eigenvalues_against_characteristic_polynomial():
    cf = blow_up_in_chart(F, W, ChartId.K1)
    for eq in divisor_equilibria(cf, A1):
        (j00, j01), (j10, j11) = eq.jacobian
        for lam in eq.eigenvalues_exact:
            char = lam * lam - (j00 + j11) * lam + (j00 * j11 - j01 * j10)
            assert char == 0


def test_float_eigenvalues_agree_with_exact():
    for chart in ChartId:
        cf = blow_up_in_chart(F, W, chart)
        for eq in divisor_equilibria(cf, A1):
            assert eq.eigenvalues_exact is not None  # triangular rational Jacobians
            floats = sorted(z.real for z in eq.eigenvalues)
            exacts = sorted(float(v) for v in eq.eigenvalues_exact)
            assert floats == pytest.approx(exacts, rel=1e-14)
            assert all(z.imag == 0 for z in eq.eigenvalues)


def test_non_hyperbolic_point_is_flagged_in_report():
    # f = (x^3, x^2*y + y^3) is type (1, 1) with index 2; on the divisor the
    # first chart's angular component is w^3, a triple root at 0
    x, y = poly_vars("x", "y")
    f = VectorField(x**3, x**2 * y + y**3, ("x", "y"))
    w = infer_weights(f)
    assert (w.alpha, w.beta, w.k) == (1, 1, 2)
    report = global_divisor_report(f, w, {})
    assert any(m.classification == CLASS_NON_HYPERBOLIC for m in report.equilibria)
    assert any("non-hyperbolic" in note for note in report.notes)


def test_forced_double_root_non_hyperbolic():
    r1, y1 = poly_vars("r1", "y1")
    cf = ChartField(
        chart=ChartId.K1,
        weights=W,
        radial_var="r1",
        angular_var="y1",
        raw=(r1**2, r1 * y1**2),
        desing=(r1, y1**2),
        divisor="r1 = 0",
        params=(),
    )
    eqs = divisor_equilibria(cf, {})
    assert len(eqs) == 1
    assert eqs[0].classification == CLASS_NON_HYPERBOLIC
    assert eqs[0].eigenvalues_exact == (Fraction(0), Fraction(1))


def test_degenerate_chart_raises():
    r1, y1 = poly_vars("r1", "y1")
    cf = ChartField(
        chart=ChartId.K1,
        weights=W,
        radial_var="r1",
        angular_var="y1",
        raw=(r1**2, r1**2 * y1),
        desing=(r1, r1 * y1),
        divisor="r1 = 0",
        params=(),
    )
    with pytest.raises(DegenerateChart):
        divisor_equilibria(cf, {})


def test_unbound_parameter():
    cf = blow_up_in_chart(F, W, ChartId.K1)
    with pytest.raises(UnboundParameter):
        divisor_equilibria(cf, {})


def test_sign_constraint_enforced():
    cf = blow_up_in_chart(F, W, ChartId.K1)
    with pytest.raises(DesingError):
        divisor_equilibria(cf, {"a": Fraction(-1)})


def test_interval_classification_weighted_example():
    x, y = poly_vars("x", "y")
    f = VectorField(x**2, y**3, ("x", "y"))
    w = infer_weights(f)
    cf = blow_up_in_chart(f, w, ChartId.K1)
    eqs = divisor_equilibria(cf, {})
    # divisor restriction is w^3 - w/2: roots 0, +-1/sqrt(2)
    assert len(eqs) == 3
    mid = eqs[1]
    assert mid.exact and mid.coords[1] == 0
    outer = [e for e in eqs if not e.exact]
    assert len(outer) == 2
    for e in outer:
        assert e.classification == CLASS_UNSTABLE_NODE
        assert abs(abs(e.coords_float[1]) - 1 / math.sqrt(2)) < 1e-11
        lo, hi = e.interval
        assert hi - lo < Fraction(1, 10**12)


def test_irrational_double_root_certified_non_hyperbolic():
    # angular restriction (w^2 - 2)^2: double roots at +-sqrt(2), where the
    # angular eigenvalue is exactly zero; the interval classifier must refine,
    # never decide a sign, and fall back to non-hyperbolic
    r1, y1 = poly_vars("r1", "y1")
    quartic = (y1**2 - 2) ** 2
    cf = ChartField(
        chart=ChartId.K1,
        weights=W,
        radial_var="r1",
        angular_var="y1",
        raw=(r1**2, r1 * quartic),
        desing=(r1, quartic),
        divisor="r1 = 0",
        params=(),
    )
    eqs = divisor_equilibria(cf, {})
    assert len(eqs) == 2
    for eq in eqs:
        assert not eq.exact
        assert eq.classification == CLASS_NON_HYPERBOLIC


def test_merge_wraps_around_full_circle():
    from desing.equilibria import _merge_by_angle

    def fake(angle):
        return Equilibrium(
            chart="K1",
            coords=(Fraction(0), Fraction(0)),
            coords_float=(0.0, 0.0),
            exact=True,
            interval=None,
            jacobian=((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
            eigenvalues=(complex(1), complex(1)),
            eigenvalues_exact=(Fraction(1), Fraction(1)),
            classification=CLASS_UNSTABLE_NODE,
            divisor_angle=angle,
        )

    merged = _merge_by_angle([fake(2 * math.pi - 1e-10), fake(0.0), fake(1.0)])
    assert len(merged) == 2
    assert len(merged[0].members) == 2


def test_hyperbolic_wing_without_equilibria():
    # K1 angular restriction 1 + w^2 has no real roots, so the x-wing is empty
    x, y = poly_vars("x", "y")
    f = VectorField(x**3, x**3 + x**2 * y + x * y**2, ("x", "y"))
    w = infer_weights(f)
    rep = global_divisor_report(f, w, {}, model=MODEL_HYPERBOLIC_X)
    assert rep.equilibria == []
    assert len(rep.flow) == 1
    assert rep.flow[0].start is None and rep.flow[0].end is None


def test_divisor_angle_convention():
    assert divisor_angle(ChartId.K1, 0.0, W) == pytest.approx(0.0)
    assert divisor_angle(ChartId.K1, 2 / 3, W) == pytest.approx(math.atan2(2 / 3, 1))
    assert divisor_angle(ChartId.K2, 0.0, W) == pytest.approx(math.pi / 2)
    assert divisor_angle(ChartId.K3, 0.0, W) == pytest.approx(math.pi)
    assert divisor_angle(ChartId.K3, -2 / 3, W) == pytest.approx(math.pi + math.atan(2 / 3))
    assert divisor_angle(ChartId.K4, 0.0, W) == pytest.approx(3 * math.pi / 2)


def test_global_report_reference_angles():
    report = global_divisor_report(F, W, A1)
    assert len(report.equilibria) == 6
    expected = [
        0.0,
        math.atan(2 / 3),
        math.pi / 2,
        math.pi,
        math.pi + math.atan(2 / 3),
        3 * math.pi / 2,
    ]
    for merged, want in zip(report.equilibria, expected):
        assert abs(merged.angle - want) < 1e-9
        assert merged.classification == CLASS_SADDLE
    # the oblique equilibria are seen by two charts each
    assert len(report.equilibria[1].members) == 2
    assert len(report.equilibria[4].members) == 2
    assert report.flow and len(report.flow) == 6
    assert all(arc.sign in (-1, 1) for arc in report.flow)


def test_global_counts_across_parameters():
    res = check_global_counts(F, W)
    assert res.passed, res.detail


def test_chart_consistency_through_transition():
    cf1 = blow_up_in_chart(F, W, ChartId.K1)
    cf2 = blow_up_in_chart(F, W, ChartId.K2)
    eqs1 = divisor_equilibria(cf1, A1)
    eqs2 = divisor_equilibria(cf2, A1)
    moved = transition(eqs1[1].coords, ChartId.K1, ChartId.K2)
    match = [e for e in eqs2 if abs(float(e.coords[1]) - float(moved[1])) < 1e-12]
    assert len(match) == 1
    assert match[0].classification == eqs1[1].classification
    assert float(moved[0]) == pytest.approx(0.0, abs=1e-12)


def test_hyperbolic_x_counts_and_classes():
    rep1 = global_divisor_report(F, W, A1, model=MODEL_HYPERBOLIC_X)
    assert len(rep1.equilibria) == 2
    phis = [m.angle for m in rep1.equilibria]
    assert phis[0] == pytest.approx(0.0)
    assert phis[1] == pytest.approx(math.atanh(2 / 3))
    assert all(m.classification == CLASS_SADDLE for m in rep1.equilibria)
    rep2 = global_divisor_report(F, W, {"a": Fraction(2)}, model=MODEL_HYPERBOLIC_X)
    assert len(rep2.equilibria) == 1
    # boundary case: at a = 3/2 the second root sits at tanh(phi) = 1, off the wing
    rep3 = global_divisor_report(F, W, {"a": Fraction(3, 2)}, model=MODEL_HYPERBOLIC_X)
    assert len(rep3.equilibria) == 1


def test_hyperbolic_eigenvalues_scale_by_cosh():
    rep = global_divisor_report(F, W, A1, model=MODEL_HYPERBOLIC_X)
    second = rep.equilibria[1].members[0]
    cosh_phi = math.cosh(math.atanh(2 / 3))
    got = sorted(z.real for z in second.eigenvalues)
    want = sorted((cosh_phi * -1 / 3, cosh_phi * 2))
    assert got == pytest.approx(want, rel=1e-12)
    # axis equilibrium is exact: eigenvalues {-2a, a}
    first = rep.equilibria[0].members[0]
    assert first.eigenvalues_exact == (Fraction(-2), Fraction(1))


def test_hyperbolic_y_complements_x():
    # on the y-wing the second equilibrium exists exactly when a > 3/2
    repa = global_divisor_report(F, W, A1, model=MODEL_HYPERBOLIC_Y)
    assert len(repa.equilibria) == 1
    repb = global_divisor_report(F, W, {"a": Fraction(2)}, model=MODEL_HYPERBOLIC_Y)
    assert len(repb.equilibria) == 2


def test_classification_invariant_under_rescaling():
    # eigenvalues differ chart to chart by the positive transition rescaling,
    # the classification does not
    report = global_divisor_report(F, W, A1)
    for merged in report.equilibria:
        kinds = {e.classification for e in merged.members}
        assert len(kinds) == 1


def test_classify_exact_table():
    Fr = Fraction
    saddle = ((Fr(1), Fr(0)), (Fr(0), Fr(-2)))
    assert classify_exact(saddle)[0] == CLASS_SADDLE
    node = ((Fr(2), Fr(0)), (Fr(0), Fr(1)))
    assert classify_exact(node)[0] == CLASS_UNSTABLE_NODE
    stable = ((Fr(-2), Fr(0)), (Fr(0), Fr(-1)))
    assert classify_exact(stable)[0] == "hyperbolic-stable-node"
    focus = ((Fr(1), Fr(-2)), (Fr(2), Fr(1)))
    assert classify_exact(focus)[0] == "hyperbolic-focus-unstable"
    sfocus = ((Fr(-1), Fr(-2)), (Fr(2), Fr(-1)))
    assert classify_exact(sfocus)[0] == "hyperbolic-focus-stable"
    center = ((Fr(0), Fr(-1)), (Fr(1), Fr(0)))
    assert classify_exact(center)[0] == CLASS_NON_HYPERBOLIC
    degenerate = ((Fr(1), Fr(0)), (Fr(0), Fr(0)))
    assert classify_exact(degenerate)[0] == CLASS_NON_HYPERBOLIC


def test_zero_field_reports_degenerate_charts():
    zero = VectorField(Poly.zero(("x", "y")), Poly.zero(("x", "y")), ("x", "y"))
    report = global_divisor_report(zero, Weights(1, 1, 0), {})
    assert report.degenerate_charts == ["K1", "K2", "K3", "K4"]
    assert report.equilibria == []
