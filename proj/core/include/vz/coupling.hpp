#pragma once

#include <Eigen/Dense>
#include <optional>

#include "vz/graph.hpp"
#include "vz/schedule.hpp"
#include "vz/single_qubit.hpp"

namespace vz {

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// Root-search window and resolution for the transcendental coupling solve,
// in x = 2at. Feasibility is unchanged up to 16π (checked by test).
inline constexpr double kSincScanStep = kPi / 50;
inline constexpr double kSincScanMax = 8 * kPi;
inline constexpr double kSincResidualTol = 1e-12;

// Smallest t > 0 with sinc(C+kπ) = sinc(√(4a²t² + (C+kπ)²)), if any root
// exists for x = 2at ∈ (0, 8π]. Bracket scan at π/50 plus bisection to 1e-14.
std::optional<double> solve_sinc(double coupling, int k, double a);

// Parameter bundle realizing exp(-iC ZZ) through one coupling pulse.
struct CouplingSolution {
    double coupling = 0.0;  // C
    int k = 0;              // smallest offset in {0,1,2,3} with a root
    double d = 0.0;         // C + kπ
    double t = 0.0;         // pulse duration
    double b = 0.0;         // D / t
    double beta = 0.0;      // X dressing angle, folded into [0, π/2)
    double t_prime = 0.0;   // (π-β)/a
    double gamma_aux = 0.0; // 2β - a·t, X-rotation owed to uncoupled qubits
};

// Throws SynthesisError when no k ∈ {0,1,2,3} admits a root. That genuinely
// happens for C in roughly (1.48, 2.41): see docs/solvability notes. C ≡ π/2
// callers are served by the Clifford route in synth_coupling_layer.
CouplingSolution find_coupling_params(double coupling, double a);

// Canonical two-qubit parameters of exp(-it(a(X_i+X_j) + b Z_i Z_j)).
struct KakParams {
    double d1 = 0.0;  // XX weight, always 0
    double d2 = 0.0;  // YY weight, (bt-ω)/2
    double d3 = 0.0;  // ZZ weight, (bt+ω)/2
    double omega = 0.0;  // ∈ [-π/2, π/2]
    double beta = 0.0;   // ∈ [π/4, 3π/4]
    int s = 1;           // sign(a sin(Ωt))
};

KakParams kak_params(double a, double b, double t);

// Change of basis to the magic (Bell-like) basis where the pair exponential
// is sparse, together with its closed-form entries.
struct MagicBasisReport {
    Eigen::Matrix4cd actual;    // Q† exp(-itH) Q
    Eigen::Matrix4cd expected;  // closed forms, zero off pattern
    double max_entry_dev = 0.0;     // |actual - expected| on the sparsity pattern
    double max_sparsity_dev = 0.0;  // |actual| off the pattern
};

Eigen::Matrix4cd magic_basis_q();
MagicBasisReport magic_basis_oracle(double a, double b, double t);

// Applied layers reproducing exp(-iC Σ_w Z_i Z_j) on a pairwise edge mask:
// [aux?, X(t'), U(t,b), X(t')], at most six layers. Couplings with C ≡ π/2
// (mod π) reduce to a Z-rotation layer instead (3 layers), since the sinc
// equation has no root there for any k.
struct CouplingSynthesis {
    std::vector<AppliedLayer> layers;
    std::vector<LayerCategory> categories;
    double phase = 0.0;  // e^{i·phase}·(layer product) = target coupling layer
    bool z_rotation_route = false;
    std::optional<CouplingSolution> solution;
    Mask uncoupled;          // qubits untouched by the mask
    double aux_angle = 0.0;  // X-rotation applied to them
};

CouplingSynthesis synth_coupling_layer(double coupling, const EdgeList& edges,
                                       const Graph& graph, double a);

// Feasibility of the sinc equation across a C grid, for the solve-sinc CLI.
struct SincFeasibilityRow {
    double coupling = 0.0;
    std::array<bool, 4> feasible{};
    int chosen_k = -1;   // -1 when no k admits a root
    double t = 0.0;
};

std::vector<SincFeasibilityRow> sinc_feasibility_map(double step, double a);

}  // namespace vz
