"""Hermite-Hadamard bounds, envelope lemmas, and the catalog chains."""

import math

import pytest

from meanlab import (
    CHAIN_NAMES,
    ChainSpec,
    DomainError,
    GridSpec,
    apply_i_operator,
    builtin_chain,
    default_pair_grid,
    deform_mean,
    ellip_e,
    envelope_lemma,
    eval_mean,
    hh_bounds,
    hh_refined_lower,
    mean_of_seiffert,
    probe_shape,
    run_chain_suite,
    seiffert_of_mean,
)


class TestHHBounds:
    def test_harmonic_representer_at_13(self):
        lower, upper = hh_bounds("H", 1.0, 3.0)
        assert lower == pytest.approx(12.0 / 7.0, rel=1e-14)
        assert upper == pytest.approx(1.875, rel=1e-15)

    def test_upper_equals_quarter_shift_form(self):
        for mean_id in ("G", "H", "C", "R"):
            for x, y in ((1.0, 3.0), (0.2, 5.0), (2.0, 2.5)):
                _, upper = hh_bounds(mean_id, x, y)
                shifted = eval_mean(mean_id, (3.0 * x + y) / 4.0, (x + 3.0 * y) / 4.0)
                assert upper == pytest.approx(shifted, rel=1e-12)

    def test_geometric_upper(self):
        _, upper = hh_bounds("G", 1.0, 3.0)
        assert upper == pytest.approx(math.sqrt(3.75), rel=1e-15)

    def test_arithmetic_is_deformation_invariant(self):
        lower, upper = hh_bounds("A", 1.0, 3.0)
        assert lower == upper == 2.0

    def test_equal_pair(self):
        assert hh_bounds("G", 2.0, 2.0) == (2.0, 2.0)


class TestHHRefinedLower:
    def test_harmonic_representer_at_13(self):
        value = hh_refined_lower("H", 1.0, 3.0)
        assert value == pytest.approx(360.0 / 201.0, rel=1e-14)
        # algebraic form 4 A G^2 (3A^2+G^2) / (3A^4 + 12 A^2 G^2 + G^4)
        a2, g2 = 4.0, 3.0
        algebraic = (4.0 * 2.0 * g2 * (3.0 * a2 + g2)
                     / (3.0 * a2 * a2 + 12.0 * a2 * g2 + g2 * g2))
        assert value == pytest.approx(algebraic, rel=1e-14)

    def test_arithmetic_returns_itself(self):
        assert hh_refined_lower("A", 1.0, 3.0) == 2.0

    def test_geometric_direct_four_term_form(self):
        g_half = deform_mean("G", 0.5)(1.0, 3.0)
        direct = 4.0 / (1.0 / 2.0 + 2.0 / g_half + 1.0 / math.sqrt(3.0))
        assert hh_refined_lower("G", 1.0, 3.0) == pytest.approx(direct, rel=1e-14)
        assert direct == pytest.approx(1.8956035865318737, rel=1e-14)

    def test_refines_the_plain_lower_bound(self):
        for mean_id in ("G", "H", "COSHMEAN", "V"):
            for x, y in default_pair_grid(20):
                lower, _ = hh_bounds(mean_id, x, y)
                assert hh_refined_lower(mean_id, x, y) >= lower - 1e-12 * (x + y)


class TestClosedFormHalfDeformations:
    @pytest.mark.parametrize("mean_id,closed_form", [
        ("G", lambda a, g: math.sqrt(3.0 * a * a + g * g) / 2.0),
        ("C", lambda a, g: (5.0 * a * a - g * g) / (4.0 * a)),
        ("R", lambda a, g: math.sqrt(5.0 * a * a - g * g) / 2.0),
        ("H", lambda a, g: (3.0 * a * a + g * g) / (4.0 * a)),
    ])
    def test_half_deformation_closed_forms(self, mean_id, closed_form):
        for x, y in default_pair_grid(30, rescalings=0):
            a = 0.5 * (x + y)
            g = math.sqrt(x) * math.sqrt(y)
            assert deform_mean(mean_id, 0.5)(x, y) == pytest.approx(
                closed_form(a, g), rel=1e-12)


class TestEnvelopeLemma:
    def test_arctan_spot_values(self):
        lower, upper = envelope_lemma("arctan", 0.5)
        assert upper == pytest.approx(8.0 / 17.0, rel=1e-15)
        assert lower == pytest.approx(0.45, rel=1e-15)
        assert upper > math.atan(0.5) > lower

    def test_arsinh_spot_values(self):
        lower, upper = envelope_lemma("arsinh", 0.5)
        assert upper == pytest.approx(1.0 / math.sqrt(4.25), rel=1e-14)
        assert lower == pytest.approx(0.25 + 0.25 / math.sqrt(1.25), rel=1e-14)
        assert upper >= math.asinh(0.5) >= lower

    @pytest.mark.parametrize("kind,target", [("arctan", math.atan),
                                             ("arsinh", math.asinh)])
    def test_strict_ordering_on_grid(self, kind, target):
        for k in range(1, 1000):
            u = k / 1000.0
            lower, upper = envelope_lemma(kind, u)
            assert upper > target(u) > lower

    def test_envelopes_tighten_toward_zero(self):
        for kind, target in (("arctan", math.atan), ("arsinh", math.asinh)):
            gaps = []
            for u in (0.5, 0.1, 0.01, 0.001):
                lower, upper = envelope_lemma(kind, u)
                gaps.append(upper - lower)
                assert upper - target(u) < gaps[0]
            assert gaps == sorted(gaps, reverse=True)

    @pytest.mark.parametrize("kind,mean_id", [("arctan", "C"), ("arsinh", "R")])
    def test_coincides_with_hh_expressions(self, kind, mean_id):
        # upper = 2 n(u/2) and lower = (u + n(u))/2 for the representer's
        # Seiffert function n
        n = seiffert_of_mean(mean_id)
        for k in range(1, 100):
            u = k / 100.0
            lower, upper = envelope_lemma(kind, u)
            assert abs(upper - 2.0 * n(u / 2.0)) <= 1e-12
            assert abs(lower - 0.5 * (u + n(u))) <= 1e-12

    def test_validation(self):
        with pytest.raises(DomainError):
            envelope_lemma("arctan", 0.0)
        with pytest.raises(DomainError):
            envelope_lemma("arctan", 1.0)
        with pytest.raises(DomainError):
            envelope_lemma("cosine", 0.5)


class TestChainSuite:
    @pytest.mark.parametrize("name", CHAIN_NAMES)
    def test_builtin_chains_pass_strictly(self, name):
        report = run_chain_suite(builtin_chain(name))
        assert report.passed
        assert report.min_margin > 0.0
        assert not report.skipped

    def test_spot_values_l_chain(self):
        spec = builtin_chain("hh-L-H")
        values = [fn(1.0, 3.0) for _, fn in spec.terms]
        expected = [12.0 / 7.0, 360.0 / 201.0, 2.0 / math.log(3.0), 1.875]
        for value, ref in zip(values, expected):
            assert value == pytest.approx(ref, rel=1e-13)

    def test_spot_values_t_chain(self):
        spec = builtin_chain("hh-T-C")
        values = [fn(1.0, 3.0) for _, fn in spec.terms]
        expected = [2.125, 1.0 / math.atan(0.5), 20.0 / 9.0]
        for value, ref in zip(values, expected):
            assert value == pytest.approx(ref, rel=1e-13)

    def test_spot_values_agm_chain(self):
        spec = builtin_chain("hh-AGM-V")
        values = [fn(1.0, 3.0) for _, fn in spec.terms]
        expected = [1.7812447845327388, 1.8636167832448964, 1.9051258377996882]
        for value, ref in zip(values, expected):
            assert value == pytest.approx(ref, rel=1e-13)

    def test_degenerate_pair_gives_zero_margins(self):
        report = run_chain_suite(builtin_chain("hh-L-H"), [(2.0, 2.0)])
        assert report.passed
        assert report.points[0].margins == (0.0, 0.0, 0.0)

    def test_term_failure_skips_and_flags(self):
        def broken(x, y):
            raise ValueError("no value here")

        spec = ChainSpec("broken", (("ok", lambda x, y: x), ("bad", broken)),
                         "convex")
        report = run_chain_suite(spec, [(1.0, 3.0)])
        assert not report.passed
        assert report.skipped and "no value here" in report.skipped[0][2]

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            ChainSpec("tiny", (("only", lambda x, y: x),), "convex")
        with pytest.raises(DomainError):
            ChainSpec("bad", (("a", float), ("b", float)), "sideways")
        with pytest.raises(DomainError):
            builtin_chain("hh-nothing")

    def test_default_grid_composition(self):
        pairs = default_pair_grid()
        assert len(pairs) == 110
        assert all(x > 0 and y > 0 for x, y in pairs)
        # deterministic: same seed, same grid
        assert pairs == default_pair_grid()


class TestGenericSandwich:
    """The Hermite-Hadamard sandwich driven through the operator I itself."""

    CONVEX_PAIRS = [("P", "G"), ("L", "H"), ("SINH", "COSHMEAN"),
                    ("TAN", "COS2MEAN"), ("AGM", "V")]

    @pytest.mark.parametrize("represented,representer", CONVEX_PAIRS,
                             ids=lambda v: v if isinstance(v, str) else "")
    def test_convex_case(self, represented, representer):
        n = seiffert_of_mean(representer)
        assert probe_shape(lambda u: n(u) / u, GridSpec(0.01, 0.99, 41)
                           ).classification == "convex"
        rebuilt = mean_of_seiffert(
            lambda z: apply_i_operator(n, z), mean_id=f"I-of-{representer}")
        for x, y in default_pair_grid(40, rescalings=0):
            lower, upper = hh_bounds(representer, x, y)
            refined = hh_refined_lower(representer, x, y)
            value = rebuilt(x, y)
            scale = 0.5 * (x + y)
            assert lower - 1e-9 * scale <= value <= upper + 1e-9 * scale
            assert refined <= value + 1e-9 * scale
            # and the rebuilt mean really is the represented catalog mean
            assert value == pytest.approx(eval_mean(represented, x, y), rel=1e-9)

    def test_reversed_case_for_the_sine_pair(self):
        n = seiffert_of_mean("COSMEAN")
        assert probe_shape(lambda u: n(u) / u, GridSpec(0.01, 0.99, 41)
                           ).classification == "concave"
        rebuilt = mean_of_seiffert(lambda z: apply_i_operator(n, z), mean_id="I-of-COSMEAN")
        for x, y in default_pair_grid(40, rescalings=0):
            lower, upper = hh_bounds("COSMEAN", x, y)  # swap roles when reversed
            value = rebuilt(x, y)
            scale = 0.5 * (x + y)
            assert upper - 1e-9 * scale <= value <= lower + 1e-9 * scale

    @pytest.mark.parametrize("representer", ["C", "R"])
    def test_lemma_backed_pairs_are_not_convex(self, representer):
        n = seiffert_of_mean(representer)
        verdict = probe_shape(lambda u: n(u) / u, GridSpec(0.01, 0.99, 99))
        assert verdict.classification == "neither"

    def test_v_ratio_is_convex(self):
        fn = (lambda z: 2.0 / math.pi * ellip_e(z) / ((1.0 - z) * (1.0 + z)))
        verdict = probe_shape(fn, GridSpec(0.001, 0.95, 101))
        assert verdict.classification == "convex"
