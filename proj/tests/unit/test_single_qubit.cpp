#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vz/single_qubit.hpp"
#include "vz/sim.hpp"

using namespace vz;

namespace {

MatX reconstruct(const SingleQubitSynthesis& syn, double a, int n) {
    MatX u = MatX::Identity(1 << n, 1 << n);
    for (const AppliedLayer& l : syn.layers) u = layer_unitary(l, a, n) * u;
    return std::exp(cplx(0, syn.phase)) * u;
}

}  // namespace

TEST_CASE("phi=0 family reduces to psi=(theta+alpha)/2 and alpha'=pi/2") {
    for (auto [theta, gamma] : {std::pair{0.0, kPi / 8}, std::pair{kPi / 8, kPi / 2}}) {
        AxisAngle ax(theta, 0.0, gamma);
        VUAngles ang = solve_vu_angles(ax, 1.0);
        CHECK(std::abs(ang.psi - (theta + ang.alpha) / 2) < 1e-12);
        CHECK(std::abs(ang.alpha_prime - kPi / 2) < 1e-12);
        CHECK(ang.psi >= 0.0);
        CHECK(ang.psi <= kPi / 2);
    }
}

TEST_CASE("T synthesis reproduces the exact gate") {
    auto syn = synth_single_qubit_layer(t_axis(), mask_all(1), 1.0);
    MatX got = reconstruct(syn, 1.0, 1);
    MatX want = oracle::to_eigen(t_matrix());
    CHECK((got - want).norm() < 1e-12);
    CHECK(syn.t == doctest::Approx(kPi));
}

TEST_CASE("T gate on qubit 0 of a three qubit chain") {
    Mask mask = indices_to_mask({0}, 3);
    auto syn = synth_single_qubit_layer(t_axis(), mask, 1.0);
    MatX got = reconstruct(syn, 1.0, 3);
    MatX want = oracle::masked_layer(oracle::to_eigen(t_matrix()), mask);
    CHECK(unitary_distance_up_to_phase(got, want) < 1e-12);
    CHECK((got - want).norm() < 1e-11);  // phase tracking is exact
}

TEST_CASE("Hadamard on every qubit") {
    auto syn = synth_single_qubit_layer(w_axis(), mask_all(3), 1.0);
    MatX got = reconstruct(syn, 1.0, 3);
    // w_axis carries the rotation body; the +i per qubit is the gate's phase.
    MatX body = oracle::masked_layer(oracle::bloch_rotation(kPi / 8, 0.0, kPi / 2), mask_all(3));
    CHECK((got - body).norm() < 1e-11);
    MatX had = oracle::masked_layer(oracle::to_eigen(hadamard_matrix()), mask_all(3));
    CHECK(unitary_distance_up_to_phase(got, had) < 1e-11);
}

TEST_CASE("gamma zero gives identity up to the tracked phase") {
    for (int n : {1, 2, 3}) {
        auto syn = synth_single_qubit_layer(AxisAngle(0.3, 0.1, 0.0), mask_all(n), 1.0);
        CHECK(syn.c == doctest::Approx(0.0));
        CHECK(syn.t == doctest::Approx(kPi));
        MatX got = reconstruct(syn, 1.0, n);
        CHECK((got - MatX::Identity(1 << n, 1 << n)).norm() < 1e-12);
    }
}

TEST_CASE("degenerate target axis emits zero-duration V layers") {
    // γ = π puts U's axis at 2α = π/6; aim the target straight along it.
    double gamma = kPi;
    double c = std::sqrt((kPi + gamma) * (kPi + gamma) - kPi * kPi) / kPi;
    double alpha = 0.5 * std::acos(c / std::hypot(1.0, c));
    AxisAngle ax(alpha, 0.0, gamma);
    VUAngles ang = solve_vu_angles(ax, 1.0);
    CHECK(ang.v_is_identity);
    auto syn = synth_single_qubit_layer(ax, mask_all(2), 1.0);
    CHECK(syn.layers[0].t == 0.0);
    CHECK(syn.layers[2].t == 0.0);
    MatX got = reconstruct(syn, 1.0, 2);
    MatX want = oracle::masked_layer(oracle::bloch_rotation(ax.theta, ax.phi, gamma), mask_all(2));
    CHECK((got - want).norm() < 1e-11);
}

TEST_CASE("random layers reconstruct exactly against the dense oracle") {
    std::mt19937_64 rng(2027);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        double theta = unit(rng) * kPi / 2;
        double phi = unit(rng) * kPi;
        double gamma = unit(rng) * 2 * kPi;
        double a = 0.5 + unit(rng) * 2.0;
        Mask mask = mask_none(n);
        for (int q = 0; q < n; ++q) mask[static_cast<size_t>(q)] = rng() % 2;
        if (mask_is_none(mask)) mask[0] = 1;

        AxisAngle ax(theta, phi, gamma);
        auto syn = synth_single_qubit_layer(ax, mask, a);
        for (const AppliedLayer& l : syn.layers) CHECK(l.t <= 3 * kPi / a + 1e-12);
        MatX got = reconstruct(syn, a, n);
        MatX want = oracle::masked_layer(oracle::bloch_rotation(theta, phi, ax.gamma), mask);
        worst = std::max(worst, (got - want).norm());
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("idle qubits see exactly one X flip in the U layer") {
    auto syn = synth_single_qubit_layer(AxisAngle(0.4, 0.9, 1.1), indices_to_mask({1}, 2), 2.0);
    const AppliedLayer& u = syn.layers[1];
    CHECK(u.t == doctest::Approx(kPi / 2.0));  // π/a with a = 2
    CHECK(u.v_mask == indices_to_mask({1}, 2));
    CHECK(mask_is_all(u.x_mask));
}

TEST_CASE("emitted durations are positive and bounded") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        AxisAngle ax(unit(rng) * kPi / 2, unit(rng) * kPi, 1e-6 + unit(rng) * (2 * kPi - 2e-6));
        double a = 0.5 + unit(rng);
        auto syn = synth_single_qubit_layer(ax, mask_all(2), a);
        VUAngles ang = solve_vu_angles(ax, a);
        if (ang.v_is_identity) continue;
        for (const AppliedLayer& l : syn.layers) {
            CHECK(l.t > 0.0);
            CHECK(l.t <= 2 * kPi / a + kPi / a);
        }
    }
}

TEST_CASE("branch ranges hold away from near-degenerate targets") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int in_branch = 0, total = 0;
    for (int trial = 0; trial < 500; ++trial) {
        AxisAngle ax(unit(rng) * kPi / 2, unit(rng) * kPi, 0.05 + unit(rng) * 6.2);
        VUAngles ang = solve_vu_angles(ax, 1.0);
        if (ang.v_is_identity) continue;
        ++total;
        CHECK(ang.psi >= 0.0);
        CHECK(ang.psi <= kPi / 2 + 1e-12);
        CHECK(ang.alpha_prime >= 0.0);
        CHECK(ang.alpha_prime < kPi);
        if (ang.alpha_prime >= kPi / 4 - 1e-9 && ang.alpha_prime <= 3 * kPi / 4 + 1e-9)
            ++in_branch;
    }
    // Targets whose axis falls close to U's own axis legitimately leave
    // [π/4, 3π/4]; the bulk of parameter space stays inside it.
    CHECK(in_branch > total * 8 / 10);
}
