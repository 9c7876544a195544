#pragma once

#include <array>
#include <cstdint>

#include "vz/compiler.hpp"

namespace vz {

// Long-range IQP instance: per-qubit angles v_i and per-pair angles w_ij,
// all multiples of π/8 in [0, 7π/8].
struct IqpInstance {
    int n = 0;
    uint64_t seed = 0;
    std::vector<double> v;                  // size n
    std::vector<std::vector<double>> w;     // w[i][j] for i < j, else 0

    double pair_angle(int i, int j) const { return i < j ? w[i][j] : w[j][i]; }
};

// Uniform draw over the 8 allowed multiples per parameter (mt19937_64; top
// three bits of each word). Deterministic for a fixed seed.
IqpInstance gen_iqp(int n, uint64_t seed);

// (a, b, c) bits with angle = (4a+2b+c)·π/8.
std::array<int, 3> binary_decompose(double angle);

// 1D circuit of Fig.-7 shape: one layer of Z rotations, then n alternating
// coupling/SWAP layers walking every pair past each other once, then
// Hadamards everywhere. Qubits start in reversed placement so the final
// physical measurement order matches the instance's logical labels.
Circuit lower_iqp_to_1d(const IqpInstance& instance);

struct SupremacyResult {
    Schedule schedule;
    DepthReport report;
    // Alternating lowering leaves one CZ per swapped pair behind; absorbing
    // them shifts (w_ij, v_i) by ±π/4. The compiled distribution equals the
    // shifted instance's. For the homogeneous path shifted == instance.
    IqpInstance shifted;
};

// 40n+10 applied layers: 18n coupling, 22n swap, 9+1 single-qubit groups.
SupremacyResult compile_homogeneous(const IqpInstance& instance, double a);

// 28n+10 applied layers with the X-field gated off per sublattice inside the
// SWAP blocks: 18n coupling, 10n swap, 9+1 single-qubit groups.
SupremacyResult compile_alternating(const IqpInstance& instance, double a);

}  // namespace vz
