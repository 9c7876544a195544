#include "doctest.h"
#include "support/oracles.hpp"
#include "vz/sim.hpp"
#include "vz/supremacy.hpp"

using namespace vz;

TEST_CASE("instance generation is deterministic and in-domain") {
    IqpInstance a = gen_iqp(4, 0);
    IqpInstance b = gen_iqp(4, 0);
    CHECK(a.v == b.v);
    CHECK(a.w == b.w);
    CHECK(a.v.size() == 4);
    int pairs = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double w = a.w[static_cast<size_t>(i)][static_cast<size_t>(j)];
            CHECK(std::abs(w - std::round(w / (kPi / 8)) * (kPi / 8)) < 1e-12);
            CHECK(w >= 0.0);
            CHECK(w < kPi);
            ++pairs;
        }
    CHECK(pairs == 6);
    CHECK_THROWS_AS(gen_iqp(1, 0), std::invalid_argument);
}

TEST_CASE("angle draws are uniform over the eight multiples") {
    // χ² with 7 dof over 10^5 draws; 3σ band ≈ [7 − 3·√14, 7 + 3·√14].
    std::array<int, 8> counts{};
    std::mt19937_64 rng(31337);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[static_cast<size_t>(rng() >> 61)];
    double expected = draws / 8.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 7 + 3 * std::sqrt(14.0));
}

TEST_CASE("binary decomposition bits") {
    auto bits = binary_decompose(5 * kPi / 8);
    CHECK(bits == std::array<int, 3>{1, 0, 1});
    CHECK(binary_decompose(0.0) == std::array<int, 3>{0, 0, 0});
    CHECK(binary_decompose(7 * kPi / 8) == std::array<int, 3>{1, 1, 1});
    CHECK_THROWS_AS(binary_decompose(0.3), std::invalid_argument);
}

TEST_CASE("lowered circuit has the alternating walk shape") {
    IqpInstance inst = gen_iqp(4, 7);
    Circuit c = lower_iqp_to_1d(inst);
    CHECK(c.n == 4);
    CHECK(c.layers.size() == 2 * 4 + 2);
    // Final layer is Hadamards everywhere.
    REQUIRE(c.layers.back().size() == 1);
    CHECK(std::holds_alternative<WGate>(c.layers.back()[0]));
    // Swap layers sit at positions 2, 4, ...
    for (int m = 0; m < 4; ++m) {
        for (const Gate& g : c.layers[static_cast<size_t>(2 + 2 * m)])
            CHECK(std::holds_alternative<SwapGate>(g));
    }
}

TEST_CASE("all-zero instance produces the all-zeros point mass") {
    IqpInstance inst;
    inst.n = 3;
    inst.v.assign(3, 0.0);
    inst.w.assign(3, std::vector<double>(3, 0.0));
    Circuit c = lower_iqp_to_1d(inst);
    MatX u = circuit_unitary(c, 3);
    StateVector plus = StateVector::plus(3);
    VecX out = u * Eigen::Map<const VecX>(plus.amps.data(), 8);
    CHECK(std::abs(std::abs(out(0)) - 1.0) < 1e-12);
}

TEST_CASE("lowered circuit reproduces the direct amplitude sum") {
    for (uint64_t seed : {1ull, 5ull, 9ull}) {
        IqpInstance inst = gen_iqp(3, seed);
        Circuit c = lower_iqp_to_1d(inst);
        MatX u = circuit_unitary(c, 3);
        StateVector plus = StateVector::plus(3);
        VecX out = u * Eigen::Map<const VecX>(plus.amps.data(), 8);
        std::vector<double> p(8);
        for (int i = 0; i < 8; ++i) p[static_cast<size_t>(i)] = std::norm(out(i));
        CHECK(tvd(p, oracle::iqp_distribution(inst)) < 1e-10);
    }
}

TEST_CASE("homogeneous schedules hit 40n+10 with the paper itemization") {
    for (int n = 3; n <= 10; ++n) {
        IqpInstance inst = gen_iqp(n, static_cast<uint64_t>(n));
        auto result = compile_homogeneous(inst, 1.0);
        CHECK(result.report.applied_layers == 40 * n + 10);
        for (const auto& [name, count] : result.report.per_category) {
            if (name == "single_qubit") CHECK(count == 10);
            if (name == "coupling") CHECK(count == 18 * n);
            if (name == "swap") CHECK(count == 22 * n);
        }
    }
}

TEST_CASE("alternating schedules hit 28n+10 with the paper itemization") {
    for (int n = 3; n <= 10; ++n) {
        IqpInstance inst = gen_iqp(n, static_cast<uint64_t>(100 + n));
        auto result = compile_alternating(inst, 1.0);
        CHECK(result.report.applied_layers == 28 * n + 10);
        for (const auto& [name, count] : result.report.per_category) {
            if (name == "single_qubit") CHECK(count == 10);
            if (name == "coupling") CHECK(count == 18 * n);
            if (name == "swap") CHECK(count == 10 * n);
        }
        CHECK(result.schedule.variant == Variant::Alternating);
    }
}

TEST_CASE("layer counts are seed independent") {
    for (uint64_t seed : {0ull, 3ull, 12345ull}) {
        CHECK(compile_homogeneous(gen_iqp(5, seed), 1.0).report.applied_layers == 210);
        CHECK(compile_alternating(gen_iqp(5, seed), 1.0).report.applied_layers == 150);
    }
}

TEST_CASE("homogeneous schedule distribution matches the amplitude oracle") {
    for (uint64_t seed : {2ull, 4ull}) {
        IqpInstance inst = gen_iqp(3, seed);
        auto result = compile_homogeneous(inst, 1.0);
        StateVector st = run_schedule(result.schedule, 3);
        CHECK(tvd(output_distribution(st), oracle::iqp_distribution(inst)) < 1e-9);
    }
}

TEST_CASE("homogeneous schedule equals the lowered circuit exactly") {
    IqpInstance inst = gen_iqp(3, 11);
    auto result = compile_homogeneous(inst, 1.0);
    MatX got = schedule_unitary(result.schedule, 3);
    MatX want = circuit_unitary(lower_iqp_to_1d(inst), 3);
    CHECK(unitary_distance_up_to_phase(got, want) < 1e-9);
}

TEST_CASE("alternating schedule matches the shifted instance's distribution") {
    for (uint64_t seed : {2ull, 4ull, 8ull}) {
        IqpInstance inst = gen_iqp(3, seed);
        auto result = compile_alternating(inst, 1.0);
        // CZ absorption shifts the angles but keeps them on the π/8 lattice.
        for (double v : result.shifted.v)
            CHECK(std::abs(v - std::round(v / (kPi / 8)) * (kPi / 8)) < 1e-9);
        StateVector st = run_schedule(result.schedule, 3);
        CHECK(tvd(output_distribution(st), oracle::iqp_distribution(result.shifted)) < 1e-9);
    }
}

TEST_CASE("alternating swap blocks reproduce the controlled-Y identities") {
    // U12 with b=a, t=π/(2√2 a) equals −i(I⊗W)·CY~ with control on the first
    // qubit, and the five-factor product equals i·CZ·SWAP.
    double t = kPi / (2 * std::sqrt(2.0));
    AppliedLayer u12;
    u12.t = t;
    u12.b = 1.0;
    u12.w_edges = {Edge(0, 1)};
    u12.v_mask = mask_none(2);
    u12.x_mask = indices_to_mask({1}, 2);
    MatX m12 = layer_unitary_dense(u12, 1.0, 2);

    MatX cy = MatX::Identity(4, 4);
    // control qubit 0, target qubit 1: Ỹ = ZX on the |·1⟩ block
    cy(1, 1) = 0;
    cy(3, 1) = -1;
    cy(1, 3) = 1;
    cy(3, 3) = 0;
    Eigen::Matrix2cd w2 = oracle::to_eigen(hadamard_matrix());
    MatX iw = oracle::kron_chain({Eigen::Matrix2cd::Identity(), w2});
    CHECK((m12 - cplx(0, -1) * iw * cy).norm() < 1e-10);

    AppliedLayer u21 = u12;
    u21.x_mask = indices_to_mask({0}, 2);
    MatX m21 = layer_unitary_dense(u21, 1.0, 2);
    MatX w_q0 = oracle::kron_chain({w2, Eigen::Matrix2cd::Identity()});
    MatX w_q1 = iw;
    MatX product = m12 * (w_q0 * w_q1) * m21 * m12 * w_q1;

    MatX cz = MatX::Identity(4, 4);
    cz(3, 3) = -1;
    Circuit sw;
    sw.n = 2;
    sw.layers = {{SwapGate{Edge(0, 1)}}};
    MatX target = cplx(0, 1) * cz * circuit_unitary(sw, 2);
    CHECK((product - target).norm() < 1e-10);
}

TEST_CASE("shift map keeps angles inside the lattice domain") {
    IqpInstance inst = gen_iqp(6, 42);
    auto result = compile_alternating(inst, 1.0);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            double w = result.shifted.w[static_cast<size_t>(i)][static_cast<size_t>(j)];
            CHECK(w >= -1e-12);
            CHECK(w < kPi);
            CHECK(std::abs(w - std::round(w / (kPi / 8)) * (kPi / 8)) < 1e-9);
        }
}
