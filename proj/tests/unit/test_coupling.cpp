#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vz/coupling.hpp"
#include "vz/sim.hpp"

using namespace vz;

namespace {

MatX reconstruct(const CouplingSynthesis& syn, double a, int n) {
    MatX u = MatX::Identity(1 << n, 1 << n);
    for (const AppliedLayer& l : syn.layers) u = layer_unitary(l, a, n) * u;
    return std::exp(cplx(0, syn.phase)) * u;
}

MatX pair_exponential(double a, double b, double t) {
    AppliedLayer l;
    l.t = t;
    l.b = b;
    l.w_edges = {Edge(0, 1)};
    l.v_mask = mask_none(2);
    l.x_mask = mask_all(2);
    return layer_unitary_dense(l, a, 2);
}

MatX xx_rotation(double angle) {
    // exp(-i angle (X_0 + X_1))
    AppliedLayer l = AppliedLayer::pure_x(2, angle);
    return layer_unitary_dense(l, 1.0, 2);
}

}  // namespace

TEST_CASE("sinc solve: no root exists at C=0, k=0") {
    CHECK_FALSE(solve_sinc(0.0, 0, 1.0).has_value());
}

TEST_CASE("sinc solve: closed form at C=pi, k=0") {
    auto t = solve_sinc(kPi, 0, 1.0);
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - kPi * std::sqrt(3.0) / 2.0) < 1e-10);
    // scaling in a: x = 2at fixed
    auto t2 = solve_sinc(kPi, 0, 2.0);
    REQUIRE(t2.has_value());
    CHECK(std::abs(*t2 - kPi * std::sqrt(3.0) / 4.0) < 1e-10);
}

TEST_CASE("sinc residuals vanish at returned roots") {
    for (double c : {kPi / 8, kPi / 4, 1.0, 2.9, kPi}) {
        for (int k = 0; k < 4; ++k) {
            auto t = solve_sinc(c, k, 1.0);
            if (!t) continue;
            double d = c + k * kPi;
            double g = std::sqrt(4 * *t * *t + d * d);
            CHECK(std::abs(sinc(g) - sinc(d)) < 1e-12);
        }
    }
}

TEST_CASE("find_coupling_params picks the smallest feasible k") {
    auto sol = find_coupling_params(kPi / 8, 1.0);
    CHECK(sol.k == 1);
    CHECK(sol.b * sol.t == doctest::Approx(sol.d).epsilon(1e-15));
    CHECK(sol.beta >= 0.0);
    CHECK(sol.beta < kPi / 2);
    CHECK(sol.t_prime == doctest::Approx((kPi - sol.beta) / 1.0));

    auto pi_sol = find_coupling_params(kPi, 1.0);
    CHECK(pi_sol.k == 0);
    CHECK(std::abs(pi_sol.t - kPi * std::sqrt(3.0) / 2.0) < 1e-10);
}

TEST_CASE("couplings inside the unsolvable band raise") {
    CHECK_THROWS_AS(find_coupling_params(2.0, 1.0), SynthesisError);
}

TEST_CASE("pair identity from a coupling solution") {
    for (double c : {kPi / 8, kPi / 4, 0.3, 1.0, 2.9, kPi}) {
        auto sol = find_coupling_params(c, 1.0);
        MatX pulse = pair_exponential(1.0, sol.b, sol.t);
        MatX dressed = xx_rotation(sol.t_prime) * pulse * xx_rotation(sol.t_prime);
        MatX target = oracle::coupling_layer(sol.d, {Edge(0, 1)}, 2);
        CHECK((dressed - target).norm() < 1e-10);  // exact, including phase
    }
}

TEST_CASE("kak params reproduce the pair exponential") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        double a = unit(rng) * 2.0, b = unit(rng) * 4.0, t = unit(rng) * 3.0;
        KakParams p = kak_params(a, b, t);
        CHECK(p.d1 == 0.0);
        CHECK(std::abs(p.omega) <= kPi / 2 + 1e-12);
        CHECK(p.beta >= 0.0);
        CHECK(p.beta <= kPi + 1e-12);

        MatX lhs = pair_exponential(a, b, t);
        // e^{-iβ(X+X)} e^{-iD2 YY} e^{-iD3 ZZ} e^{-iβ(X+X)}
        MatX yy = MatX::Zero(4, 4);
        Eigen::Matrix2cd sy;
        sy << 0, cplx(0, -1), cplx(0, 1), 0;
        MatX yy_op = oracle::kron_chain({sy, sy});
        Eigen::SelfAdjointEigenSolver<MatX> es(yy_op);
        VecX ph = (cplx(0, -p.d2) * es.eigenvalues().array()).exp();
        MatX eyy = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
        MatX ezz = oracle::coupling_layer(p.d3, {Edge(0, 1)}, 2);
        AppliedLayer xonly = AppliedLayer::pure_x(2, p.beta);
        MatX ebeta = layer_unitary_dense(xonly, 1.0, 2);
        MatX rhs = ebeta * eyy * ezz * ebeta;
        worst = std::max(worst, unitary_distance_up_to_phase(lhs, rhs));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("kak params at b=0 collapse to pure X rotations") {
    KakParams p = kak_params(1.0, 0.0, 0.8);
    CHECK(p.omega == doctest::Approx(0.0));
    CHECK(p.d2 == doctest::Approx(0.0));
    CHECK(p.d3 == doctest::Approx(0.0));
}

TEST_CASE("kak params at the alternating-field operating point") {
    double t = kPi / (2 * std::sqrt(2.0));
    KakParams p = kak_params(1.0, 1.0, t);
    MatX lhs = pair_exponential(1.0, 1.0, t);
    MatX ezz = oracle::coupling_layer(p.d3, {Edge(0, 1)}, 2);
    Eigen::Matrix2cd sy;
    sy << 0, cplx(0, -1), cplx(0, 1), 0;
    MatX yy_op = oracle::kron_chain({sy, sy});
    Eigen::SelfAdjointEigenSolver<MatX> es(yy_op);
    VecX ph = (cplx(0, -p.d2) * es.eigenvalues().array()).exp();
    MatX eyy = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    MatX ebeta = layer_unitary_dense(AppliedLayer::pure_x(2, p.beta), 1.0, 2);
    CHECK(unitary_distance_up_to_phase(lhs, ebeta * eyy * ezz * ebeta) < 1e-10);
}

TEST_CASE("magic basis entries match the closed forms") {
    auto rep = magic_basis_oracle(1.0, 2.0, 0.7);
    CHECK(rep.max_entry_dev < 1e-12);
    CHECK(rep.max_sparsity_dev < 1e-12);

    auto rep0 = magic_basis_oracle(1.0, 0.0, 1.0);
    CHECK(std::abs(rep0.actual(1, 1) - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(rep0.actual(2, 2) - cplx(1, 0)) < 1e-12);

    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        auto r = magic_basis_oracle(unit(rng) * 2, unit(rng) * 3, unit(rng) * 2);
        CHECK(r.max_sparsity_dev < 1e-12);
        CHECK(r.max_entry_dev < 1e-11);
    }
}

TEST_CASE("coupling layer synthesis with no uncoupled qubits") {
    Graph g = Graph::chain(2);
    auto syn = synth_coupling_layer(kPi / 4, {Edge(0, 1)}, g, 1.0);
    CHECK(syn.layers.size() == 3);
    MatX got = reconstruct(syn, 1.0, 2);
    MatX want = oracle::coupling_layer(kPi / 4, {Edge(0, 1)}, 2);
    CHECK(unitary_distance_up_to_phase(got, want) < 1e-9);
    CHECK((got - want).norm() < 1e-9);
}

TEST_CASE("coupling layer synthesis with uncoupled qubits") {
    Graph g = Graph::chain(4);
    auto syn = synth_coupling_layer(kPi / 8, {Edge(0, 1)}, g, 1.0);
    CHECK(syn.layers.size() == 6);
    MatX got = reconstruct(syn, 1.0, 4);
    MatX want = oracle::coupling_layer(kPi / 8, {Edge(0, 1)}, 4);
    CHECK((got - want).norm() < 1e-9);
}

TEST_CASE("empty coupling mask yields no layers") {
    Graph g = Graph::chain(3);
    auto syn = synth_coupling_layer(kPi / 4, {}, g, 1.0);
    CHECK(syn.layers.empty());
}

TEST_CASE("pi/2 coupling goes through the Z-rotation route") {
    Graph g = Graph::chain(4);
    auto syn = synth_coupling_layer(kPi / 2, {Edge(1, 2)}, g, 1.0);
    CHECK(syn.z_rotation_route);
    CHECK(syn.layers.size() == 3);
    MatX got = reconstruct(syn, 1.0, 4);
    MatX want = oracle::coupling_layer(kPi / 2, {Edge(1, 2)}, 4);
    CHECK((got - want).norm() < 1e-10);
}

TEST_CASE("non-pairwise masks are rejected") {
    Graph g = Graph::chain(3);
    CHECK_THROWS_AS(synth_coupling_layer(kPi / 4, {Edge(0, 1), Edge(1, 2)}, g, 1.0),
                    SynthesisError);
}

TEST_CASE("feasibility map is deterministic and stable in the scan window") {
    auto rows1 = sinc_feasibility_map(0.05, 1.0);
    auto rows2 = sinc_feasibility_map(0.05, 1.0);
    REQUIRE(rows1.size() == rows2.size());
    for (size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].feasible == rows2[i].feasible);
        CHECK(rows1[i].chosen_k == rows2[i].chosen_k);
    }
}
