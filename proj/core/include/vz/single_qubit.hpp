#pragma once

#include "vz/gates.hpp"
#include "vz/schedule.hpp"

namespace vz {

// Angles for the V·U·V† construction of an arbitrary single-qubit layer.
// U rotates by π+γ about (sin2α, 0, cos2α); V rotates by α' about
// (sin2ψ, 0, cos2ψ) and is chosen to carry U's axis onto the target axis.
struct VUAngles {
    double alpha = 0.0;        // ∈ (0, π/4]
    double psi = 0.0;          // ∈ [0, π/2)
    double alpha_prime = 0.0;  // ∈ [0, π); [π/4, 3π/4] away from near-degenerate targets
    bool v_is_identity = false;  // target axis coincides with U's axis
};

// Computes (α, ψ, α') for a target rotation. Throws std::logic_error when the
// required V axis degenerates to ±Z, which no finite pulse reaches.
VUAngles solve_vu_angles(const AxisAngle& axis, double a);

// Three applied layers [V†, U, V] reproducing ⊗_i g^{v_i} exactly:
// e^{i·phase}·(layer product) equals the target layer, including phase.
struct SingleQubitSynthesis {
    double t = 0.0;         // U duration, π/a
    double c = 0.0;         // U local field, ≥ 0
    double t_prime = 0.0;   // V duration
    double c_prime = 0.0;   // V and V† local field
    double t_dagger = 0.0;  // V† duration, rotation angle π−α'
    double phase = 0.0;
    std::array<AppliedLayer, 3> layers;  // application order: V†, U, V
};

SingleQubitSynthesis synth_single_qubit_layer(const AxisAngle& axis, const Mask& v_mask,
                                              double a);

// Three full-strength X pulses of duration π/a each: an identity block (up to
// the tracked phase nπ) with the same footprint as a single-qubit synthesis.
// Keeps template-shaped schedules uniform where a slot is unused.
SingleQubitSynthesis identity_triple(int n, double a);

}  // namespace vz
