#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "posmap/harness.hpp"
#include "posmap/io.hpp"
#include "posmap/synthesis.hpp"
#include "test_support.hpp"

using namespace posmap;
using testutil::hdiag;

TEST_CASE("matrix JSON round-trips bit-comparably") {
    SUBCASE("exactly representable entries") {
        const HermitianMatrix a = testutil::hmat(
            {{1.5, cplx(0.25, -0.125)}, {cplx(0.25, 0.125), -3.0}});
        const std::string text = matrix_to_json(a);
        const HermitianMatrix back = matrix_from_json(text);
        CHECK(max_abs_diff(a.mat(), back.mat()) == 0.0);
        CHECK(matrix_to_json(back) == text);
    }
    SUBCASE("random doubles survive the trip exactly") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const HermitianMatrix a =
                random_hermitian(1 + static_cast<int>(s % 5), SpectrumLaw::uniform, s);
            const HermitianMatrix back = matrix_from_json(matrix_to_json(a));
            CHECK(max_abs_diff(a.mat(), back.mat()) == 0.0);
        }
    }
}

TEST_CASE("matrix JSON validation") {
    CHECK_THROWS_AS(matrix_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 0, \"entries\": []}"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 1, \"entries\": [[[1]]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"n\": 2, \"entries\": [[[1,0]],[[0,0]]]}"),
                    std::invalid_argument);
    // non-Hermitian data beyond tolerance
    CHECK_THROWS_AS(
        matrix_from_json(
            "{\"n\": 2, \"entries\": [[[0,0],[1,0]],[[0,0],[0,0]]]}"),
        std::invalid_argument);
}

TEST_CASE("superoperator JSON round-trips") {
    InstanceSpec spec;
    spec.target = RelationTarget::satisfy_pu;
    spec.seed = 404;
    const auto [a, b] = generate_pair(spec);
    const SynthResult r = synth_pu(a, b);
    const std::string text = superop_to_json(r.op);
    const SuperOperator back = superop_from_json(text);
    CHECK(back.src_dim == r.op.src_dim);
    CHECK(back.dst_dim == r.op.dst_dim);
    CHECK(back.matrix.data() == r.op.matrix.data());
    CHECK(superop_to_json(back) == text);
}

TEST_CASE("superoperator JSON validation") {
    CHECK_THROWS_AS(superop_from_json("[]"), std::invalid_argument);
    CHECK_THROWS_AS(superop_from_json("{\"src_dim\": 1, \"dst_dim\": 1, \"matrix\": []}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        superop_from_json("{\"src_dim\": 1, \"dst_dim\": 1, \"matrix\": [[1, 2]]}"),
        std::invalid_argument);
}

TEST_CASE("file round trip") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::filesystem::path mp = dir / "posmap_test_matrix.json";
    const std::filesystem::path sp = dir / "posmap_test_superop.json";
    const HermitianMatrix a = hdiag({2, -1});
    write_matrix(mp, a);
    CHECK(max_abs_diff(read_matrix(mp).mat(), a.mat()) == 0.0);
    const SuperOperator s = identity_superop(2);
    write_superop(sp, s);
    const SuperOperator back = read_superop(sp);
    CHECK(back.matrix.data() == s.matrix.data());
    std::filesystem::remove(mp);
    std::filesystem::remove(sp);
    CHECK_THROWS(read_matrix(dir / "posmap_does_not_exist.json"));
}

TEST_CASE("certificates serialize their provenance") {
    const SynthResult r = synth_ptp(hdiag({2, -1}), hdiag({1.5, -0.5}));
    const std::string text = cert_to_json(r.cert);
    CHECK(text.find("PTP_COMPOSED_EQUAL_NORMS") != std::string::npos);
    CHECK(text.find("PTP_SHRINK_STEP") != std::string::npos);
    CHECK(text.find("0.75") != std::string::npos);

    const SynthResult r2 = synth_pu(hdiag({1, -1}), hdiag({0.5, -0.5}));
    const std::string text2 = cert_to_json(r2.cert);
    CHECK(text2.find("PU_CONVEX_HULL") != std::string::npos);
    CHECK(text2.find("weights") != std::string::npos);
}
