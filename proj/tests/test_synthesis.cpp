#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "posmap/harness.hpp"
#include "posmap/measures.hpp"
#include "posmap/rng.hpp"
#include "posmap/synthesis.hpp"
#include "test_support.hpp"

using namespace posmap;
using testutil::hdiag;
using testutil::hmat;

namespace {

double apply_residual(const SuperOperator& s, const HermitianMatrix& a,
                      const HermitianMatrix& b) {
    return schatten_norm(apply(s, a) - b, PNorm::inf);
}

}  // namespace

TEST_CASE("feasible_pu on stated inputs") {
    CHECK(feasible_pu(hdiag({2, -1}), hdiag({1, -0.5})).feasible);
    CHECK(feasible_pu(hdiag({2, -1}), hdiag({2, -1})).feasible);
    const FeasibilityVerdict v = feasible_pu(hdiag({1, -1}), hdiag({2, -1}));
    CHECK_FALSE(v.feasible);
    REQUIRE(v.failing_condition.has_value());
    CHECK(*v.failing_condition == "lambda_max");
    REQUIRE(v.margins.size() == 2);
    CHECK(testutil::close(v.margins[0].second, -1.0, 1e-12));
}

TEST_CASE("feasible_ptp on stated inputs") {
    CHECK(feasible_ptp(hdiag({2, -1}), hdiag({1.5, -0.5})).feasible);
    const FeasibilityVerdict v1 = feasible_ptp(hdiag({2, -1}), hdiag({3, -2}));
    CHECK_FALSE(v1.feasible);
    CHECK(*v1.failing_condition == "plus_norm_1");
    const FeasibilityVerdict v2 = feasible_ptp(hdiag({2, -1}), hdiag({2, -0.5}));
    CHECK_FALSE(v2.feasible);
    CHECK(*v2.failing_condition == "trace");
}

TEST_CASE("synth_pu hand-evaluated constructions") {
    SUBCASE("collapse to a scalar: t = 0.5") {
        const HermitianMatrix a = hdiag({1, -1});
        const HermitianMatrix b = HermitianMatrix::zero(1);
        const SynthResult r = synth_pu(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        // Phi(X) = (x11 + x22)/2
        CHECK(testutil::close(apply(r.op, hdiag({3, 1}))(0, 0).real(), 2.0, 1e-12));
        REQUIRE(r.cert.weights.has_value());
        CHECK(testutil::close((*r.cert.weights)(0, 0), 0.5, 1e-12));
        CHECK(testutil::close((*r.cert.weights)(1, 0), 0.5, 1e-12));
    }
    SUBCASE("two-point weights t1=0.75, t2=0.25") {
        const HermitianMatrix a = hdiag({1, -1});
        const HermitianMatrix b = hdiag({0.5, -0.5});
        const SynthResult r = synth_pu(a, b);
        REQUIRE(r.cert.weights.has_value());
        const RMatrix& w = *r.cert.weights;
        CHECK(testutil::close(w(0, 0), 0.75, 1e-12));
        CHECK(testutil::close(w(1, 0), 0.25, 1e-12));
        CHECK(testutil::close(w(0, 1), 0.25, 1e-12));
        CHECK(testutil::close(w(1, 1), 0.75, 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
    }
    SUBCASE("scalar multiple of the identity delegates to the trace map") {
        const HermitianMatrix a = hdiag({1, 1});
        const HermitianMatrix b = HermitianMatrix::diagonal({1.0});
        const SynthResult r = synth_pu(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(testutil::close(apply(r.op, hdiag({4, 0}))(0, 0).real(), 2.0, 1e-12));
    }
    SUBCASE("infeasible pairs throw") {
        CHECK_THROWS_AS(synth_pu(hdiag({1, -1}), hdiag({2, -1})), infeasible_error);
        CHECK_THROWS_AS(synth_pu(hdiag({1, 1}), hdiag({0.5})), infeasible_error);
    }
}

TEST_CASE("synth_pu_equal_norms hand-evaluated index sets") {
    SUBCASE("B has an extra positive rank: I4+ = {2}") {
        const HermitianMatrix a = hdiag({2, -1});
        const HermitianMatrix b = hdiag({2, 1, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        // Phi(P1) = Q1 + (2/3) Q2, Phi(P'1) = Q'1 + (1/3) Q2
        const HermitianMatrix img_p1 = apply(r.op, hdiag({1, 0}));
        CHECK(testutil::mat_close(img_p1, hdiag({1, 2.0 / 3.0, 0}), 1e-12));
        const HermitianMatrix img_m1 = apply(r.op, hdiag({0, 1}));
        CHECK(testutil::mat_close(img_m1, hdiag({0, 1.0 / 3.0, 1}), 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i4_plus == std::vector<int>{2});
        CHECK(r.cert.index_sets->i1_plus.empty());
        CHECK(r.cert.index_sets->i3_minus.empty());
    }
    SUBCASE("A has an extra positive rank: I3+ = {2}") {
        const HermitianMatrix a = hdiag({2, 1, -1});
        const HermitianMatrix b = hdiag({2, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        CHECK(max_abs(apply(r.op, hdiag({0, 1, 0})).mat()) <= 1e-12);  // Phi(P2) = 0
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i3_plus == std::vector<int>{2});
    }
    SUBCASE("identical matrices give the rank-paired identity-like map") {
        const HermitianMatrix a = hdiag({2, 0.5, -1});
        const SynthResult r = synth_pu_equal_norms(a, a);
        CHECK(apply_residual(r.op, a, a) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i2_plus.empty());
        CHECK(r.cert.index_sets->i3_plus.empty());
        CHECK(r.cert.index_sets->i4_plus.empty());
        CHECK(r.cert.index_sets->i1_plus == std::vector<int>{2});
    }
    SUBCASE("zero eigenvalues ride along in the positive group") {
        const HermitianMatrix a = hdiag({2, 0, -1});
        const HermitianMatrix b = hdiag({2, 0, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
    }
    SUBCASE("shared positive rank grows: I2+ = {2}, c = 2/3") {
        const HermitianMatrix a = hdiag({2, 0.5, -1});
        const HermitianMatrix b = hdiag({2, 1, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        // Phi(P2) = (2/3) Q2, Phi(P1) = Q1 + (1/3) Q2, Phi(P'1) = Q'1
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 1, 0})),
                                  hdiag({0, 2.0 / 3.0, 0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({1, 0, 0})),
                                  hdiag({1, 1.0 / 3.0, 0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 0, 1})), hdiag({0, 0, 1}), 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i2_plus == std::vector<int>{2});
    }
    SUBCASE("shared negative rank grows: I2- = {2}, c = 0.625") {
        // negative ranks pair by magnitude, so rank 1 sits at the -1 slots
        const HermitianMatrix a = hdiag({1, -0.2, -1});
        const HermitianMatrix b = hdiag({1, -0.5, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 1, 0})),
                                  hdiag({0, 0.625, 0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 0, 1})),
                                  hdiag({0, 0.375, 1}), 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i2_minus == std::vector<int>{2});
    }
    SUBCASE("shared negative rank shrinks: I1- = {2}, ratio 3/7") {
        const HermitianMatrix a = hdiag({1, -1, -0.7});
        const HermitianMatrix b = hdiag({1, -1, -0.3});
        const SynthResult r = synth_pu_equal_norms(a, b);
        // Phi(P'2) = (3/7) Q'2; P1 and P'1 each pick up (2/7) Q'2
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 0, 1})),
                                  hdiag({0, 0, 3.0 / 7.0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({1, 0, 0})),
                                  hdiag({1, 0, 2.0 / 7.0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 1, 0})),
                                  hdiag({0, 1, 2.0 / 7.0}), 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i1_minus == std::vector<int>{2});
    }
    SUBCASE("B has an extra negative rank: I4- = {2}") {
        const HermitianMatrix a = hdiag({1, -1});
        const HermitianMatrix b = hdiag({1, -0.4, -1});
        const SynthResult r = synth_pu_equal_norms(a, b);
        // Phi(P1) = Q1 + 0.3 Q'2, Phi(P'1) = Q'1 + 0.7 Q'2
        CHECK(testutil::mat_close(apply(r.op, hdiag({1, 0})), hdiag({1, 0.3, 0}), 1e-12));
        CHECK(testutil::mat_close(apply(r.op, hdiag({0, 1})), hdiag({0, 0.7, 1}), 1e-12));
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_unital(r.op) <= 1e-12);
        REQUIRE(r.cert.index_sets.has_value());
        CHECK(r.cert.index_sets->i4_minus == std::vector<int>{2});
    }
    SUBCASE("preconditions are enforced") {
        CHECK_THROWS_AS(synth_pu_equal_norms(hdiag({1, 2}), hdiag({2, -1})),
                        std::invalid_argument);
        CHECK_THROWS_AS(synth_pu_equal_norms(hdiag({2, -1}), hdiag({1.5, -1})),
                        std::invalid_argument);
    }
}

TEST_CASE("pu shrink map matches the printed formula") {
    SUBCASE("q = 0.75 at (p,x) = (0.5,1)") {
        const SuperOperator s = synth_pu_shrink_2x2(0.5, 1.0);
        CHECK(apply_residual(s, hdiag({1, -1}), hdiag({0.5, -1})) <= 1e-12);
        CHECK(check_unital(s) <= 1e-12);
        // the mixing weight is visible on Phi(E11) = diag(q, 0)
        CHECK(testutil::close(apply(s, hdiag({1, 0}))(0, 0).real(), 0.75, 1e-15));
    }
    SUBCASE("q = 29/30 at (p,x) = (0.9,2)") {
        const SuperOperator s = synth_pu_shrink_2x2(0.9, 2.0);
        CHECK(apply_residual(s, hdiag({1, -2}), hdiag({0.9, -2})) <= 1e-12);
        CHECK(testutil::close(apply(s, hdiag({1, 0}))(0, 0).real(), 29.0 / 30.0, 1e-15));
    }
    SUBCASE("unitality for any parameters") {
        const SuperOperator s = synth_pu_shrink_2x2(0.123, 3.7);
        CHECK(testutil::mat_close(apply(s, HermitianMatrix::identity(2)),
                                  HermitianMatrix::identity(2), 1e-15));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(synth_pu_shrink_2x2(0.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(synth_pu_shrink_2x2(1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(synth_pu_shrink_2x2(0.5, 0.0), std::invalid_argument);
    }
}

TEST_CASE("ptp shrink map matches the printed formula") {
    const SuperOperator s = synth_ptp_shrink_2x2(0.75);
    CHECK(apply_residual(s, hdiag({2, -1}), hdiag({1.5, -0.5})) <= 1e-12);
    CHECK(check_trace_preserving(s) <= 1e-15);
    for (double p : {0.0, 0.3, 1.0}) {
        const SuperOperator sp = synth_ptp_shrink_2x2(p);
        const double x = 1.3, y = 0.4;
        CHECK(testutil::mat_close(apply(sp, hdiag({x, -y})),
                                  hdiag({p * x, x - y - p * x}), 1e-12));
    }
    CHECK_THROWS_AS(synth_ptp_shrink_2x2(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(synth_ptp_shrink_2x2(1.1), std::invalid_argument);
}

TEST_CASE("synth_ptp_equal_norms hand-evaluated composition") {
    SUBCASE("redistribute one positive unit over two slots") {
        const HermitianMatrix a = hdiag({2, -1});
        const HermitianMatrix b = hdiag({1, 1, -1});
        const SynthResult r = synth_ptp_equal_norms(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_trace_preserving(r.op) <= 1e-12);
        CHECK(r.cert.kind == ConstructionKind::ptp_composed_equal_norms);
    }
    SUBCASE("diagonal fixed point") {
        const HermitianMatrix a = hdiag({1.5, 0.25, -0.75});
        const SynthResult r = synth_ptp_equal_norms(a, a);
        CHECK(apply_residual(r.op, a, a) <= 1e-12);
    }
    SUBCASE("PSD to PSD with equal traces uses the single positive leg") {
        const HermitianMatrix a = random_hermitian(3, SpectrumLaw::prescribed, 4,
                                                   std::vector<double>{1.0, 0.6, 0.4});
        const HermitianMatrix b = random_hermitian(2, SpectrumLaw::prescribed, 5,
                                                   std::vector<double>{1.3, 0.7});
        const SynthResult r = synth_ptp_equal_norms(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-10);
        CHECK(check_trace_preserving(r.op) <= 1e-10);
        const VerificationReport rep = positivity_falsification(r.op, 500, 6, 1e-8);
        CHECK(rep.positivity_min >= -1e-8);
    }
    SUBCASE("NSD pairs use the single negative leg") {
        const HermitianMatrix a = hdiag({-0.5, -1.5});
        const HermitianMatrix b = hdiag({-2.0});
        const SynthResult r = synth_ptp_equal_norms(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_trace_preserving(r.op) <= 1e-12);
    }
    SUBCASE("NSD with zero eigenvalues keeps global trace preservation") {
        const HermitianMatrix a = hdiag({0.0, -1.0});
        const HermitianMatrix b = hdiag({0.0, -1.0});
        const SynthResult r = synth_ptp_equal_norms(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-12);
        CHECK(check_trace_preserving(r.op) <= 1e-12);
    }
    SUBCASE("norm mismatch is rejected") {
        CHECK_THROWS_AS(synth_ptp_equal_norms(hdiag({2, -1}), hdiag({1.5, -1})),
                        std::invalid_argument);
    }
}

TEST_CASE("synth_ptp hand-evaluated bridge") {
    SUBCASE("one shrink step with p = 0.75") {
        const HermitianMatrix a = hdiag({2, -1});
        const HermitianMatrix b = hdiag({1.5, -0.5});
        const SynthResult r = synth_ptp(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-10);
        CHECK(check_trace_preserving(r.op) <= 1e-10);
        REQUIRE(r.cert.steps.size() == 1);
        REQUIRE(r.cert.steps[0].shrink_params.has_value());
        CHECK(testutil::close(r.cert.steps[0].shrink_params->p, 0.75, 1e-12));
    }
    SUBCASE("collapse diag(3,-1,-1) onto the scalar 1 in two steps") {
        const HermitianMatrix a = hdiag({3, -1, -1});
        const HermitianMatrix b = HermitianMatrix::diagonal({1.0});
        const SynthResult r = synth_ptp(a, b);
        CHECK(apply_residual(r.op, a, b) <= 1e-10);
        CHECK(check_trace_preserving(r.op) <= 1e-10);
        CHECK(r.cert.steps.size() == 2);
        const VerificationReport rep = positivity_falsification(r.op, 500, 8, 1e-8);
        CHECK(rep.positivity_min >= -1e-8);
    }
    SUBCASE("equal norms delegate with no shrink steps") {
        const HermitianMatrix a = hdiag({2, -1});
        const HermitianMatrix b = hdiag({1, 1, -1});
        const SynthResult r = synth_ptp(a, b);
        CHECK(r.cert.kind == ConstructionKind::ptp_composed_equal_norms);
        CHECK(r.cert.steps.empty());
    }
    SUBCASE("infeasible pairs throw") {
        CHECK_THROWS_AS(synth_ptp(hdiag({2, -1}), hdiag({3, -2})), infeasible_error);
        CHECK_THROWS_AS(synth_ptp(hdiag({2, -1}), hdiag({2, -0.5})), infeasible_error);
    }
}

TEST_CASE("scaling ray map") {
    const HermitianMatrix a = hdiag({1, -1});
    const std::vector<cplx> e1{1.0, 0.0};
    SUBCASE("maps A to any target exactly, and the chosen projector too") {
        const HermitianMatrix b = hmat({{0.5, cplx(0, 0.25)}, {cplx(0, -0.25), -2.0}});
        const SuperOperator s = scaling_ray_map(a, b, e1);
        CHECK(apply_residual(s, a, b) <= 1e-12);
        CHECK(testutil::mat_close(apply(s, hdiag({1, 0})), b, 1e-12));
    }
    SUBCASE("defaults to the top eigenvector") {
        const HermitianMatrix psd = hdiag({2, 1});
        const HermitianMatrix b = hdiag({0.5, 0.25});
        const SuperOperator s = scaling_ray_map(psd, b);
        CHECK(apply_residual(s, psd, b) <= 1e-12);
        // positive map for a PSD target
        const VerificationReport rep = positivity_falsification(s, 300, 9, 1e-8);
        CHECK(rep.positivity_min >= -1e-8);
    }
    SUBCASE("rejects a direction with vanishing quadratic form") {
        const std::vector<cplx> e2{0.0, 1.0};
        CHECK_THROWS_AS(scaling_ray_map(a, a, e2), std::invalid_argument);
        CHECK_THROWS_AS(scaling_ray_map(a, a, std::vector<cplx>{1.0}), std::invalid_argument);
    }
}

TEST_CASE("synthesized maps are monotone for the matching measures") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        InstanceSpec pu_spec;
        pu_spec.target = RelationTarget::satisfy_pu;
        pu_spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(pu_spec);
        const SynthResult pu = synth_pu(a, b);
        InstanceSpec ptp_spec;
        ptp_spec.target = RelationTarget::satisfy_ptp;
        ptp_spec.seed = rng.next_u64();
        const auto [c, d] = generate_pair(ptp_spec);
        const SynthResult ptp = synth_ptp(c, d);
        for (int i = 0; i < 20; ++i) {
            const HermitianMatrix x =
                random_hermitian(a.dim(), SpectrumLaw::uniform, rng.next_u64());
            const HermitianMatrix y = apply(pu.op, x);
            CHECK(mu_inf_minus(y) <= mu_inf_minus(x) + 1e-8);
            CHECK(mu_inf_plus(y) <= mu_inf_plus(x) + 1e-8);
            CHECK(schatten_norm(y, PNorm::inf) <= schatten_norm(x, PNorm::inf) + 1e-8);
            const HermitianMatrix z =
                random_hermitian(c.dim(), SpectrumLaw::uniform, rng.next_u64());
            const HermitianMatrix w = apply(ptp.op, z);
            CHECK(mu_1_minus(w) <= mu_1_minus(z) + 1e-8);
            CHECK(mu_1_plus(w) <= mu_1_plus(z) + 1e-8);
            CHECK(std::abs(trace(w) - trace(z)) <= 1e-8);
        }
    }
}

TEST_CASE("necessity: rejected pairs violate a part-norm bound") {
    SplitMix64 rng(911);
    for (int trial = 0; trial < 30; ++trial) {
        InstanceSpec spec;
        spec.target = RelationTarget::violate_pu;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        REQUIRE_FALSE(feasible_pu(a, b).feasible);
        const JordanDecomposition ja = jordan_decompose(a);
        const JordanDecomposition jb = jordan_decompose(b);
        const bool witness =
            schatten_norm(jb.plus, PNorm::inf) > schatten_norm(ja.plus, PNorm::inf) + 1e-9 ||
            schatten_norm(jb.minus, PNorm::inf) > schatten_norm(ja.minus, PNorm::inf) + 1e-9;
        CHECK(witness);
    }
}

TEST_CASE("equal-norm routes agree on verification") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 15; ++trial) {
        InstanceSpec spec;
        spec.target = RelationTarget::equal_inf_norms;
        spec.seed = rng.next_u64();
        const auto [a, b] = generate_pair(spec);
        const SynthResult r1 = synth_pu_equal_norms(a, b);
        const SynthResult r2 = synth_pu(a, b);
        CHECK(apply_residual(r1.op, a, b) <= 1e-8);
        CHECK(apply_residual(r2.op, a, b) <= 1e-8);
        CHECK(check_unital(r1.op) <= 1e-8);
        CHECK(check_unital(r2.op) <= 1e-8);
        REQUIRE(r1.cert.weights.has_value());
        for (double w : r1.cert.weights->data()) CHECK(w >= -1e-12);
    }
}

TEST_CASE("composition of synthesized maps stays in class") {
    SplitMix64 rng(12);
    InstanceSpec s1;
    s1.target = RelationTarget::satisfy_pu;
    s1.seed = rng.next_u64();
    const auto [a, b] = generate_pair(s1);
    const SynthResult first = synth_pu(a, b);
    InstanceSpec s2;
    s2.dim_min = s2.dim_max = b.dim();
    s2.target = RelationTarget::satisfy_pu;
    s2.seed = rng.next_u64();
    const auto [c, d] = generate_pair(s2);
    const SynthResult second = synth_pu(c, d);
    const SuperOperator chained = compose(second.op, first.op);
    CHECK(check_unital(chained) <= 1e-8);
    const VerificationReport rep = positivity_falsification(chained, 1000, 77, 1e-8);
    CHECK(rep.positivity_min >= -1e-8);
}

TEST_CASE("eigenbasis choice within degenerate spectra does not matter") {
    const std::vector<double> vals{0.8, 0.8, -0.6, -0.6};
    const HermitianMatrix a = random_hermitian(4, SpectrumLaw::prescribed, 19, vals);
    const HermitianMatrix b = hdiag({0.5, -0.25});

    // same matrix reassembled after rotating the degenerate top eigenpair
    const Spectrum sp = eig_hermitian(a);
    CMatrix v2 = sp.eigenvectors;
    const double c = 1.0 / std::sqrt(2.0);
    for (int r = 0; r < 4; ++r) {
        const cplx c0 = sp.eigenvectors(r, 0);
        const cplx c1 = sp.eigenvectors(r, 1);
        v2(r, 0) = c * c0 + c * c1;
        v2(r, 1) = -c * c0 + c * c1;
    }
    CMatrix lam(4, 4);
    for (int i = 0; i < 4; ++i) lam(i, i) = sp.eigenvalues[static_cast<std::size_t>(i)];
    const HermitianMatrix a2 = HermitianMatrix::symmetrized(v2 * lam * adjoint(v2));
    REQUIRE(max_abs_diff(a.mat(), a2.mat()) <= 1e-12);

    const SynthResult r1 = synth_pu(a, b);
    const SynthResult r2 = synth_pu(a2, b);
    CHECK(apply_residual(r1.op, a, b) <= 1e-8);
    CHECK(apply_residual(r2.op, a2, b) <= 1e-8);
    CHECK(check_unital(r1.op) <= 1e-8);
    CHECK(check_unital(r2.op) <= 1e-8);

    const SynthResult r3 = synth_pu_equal_norms(hdiag({0.8, 0.8, -0.6}), hdiag({0.8, -0.6}));
    CHECK(check_unital(r3.op) <= 1e-8);
}
