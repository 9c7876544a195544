#pragma once

#include <array>
#include <variant>

#include "vz/types.hpp"

namespace vz {

using Mat2 = std::array<cplx, 4>;  // row major 2x2

// Rotation axis in the Bloch sphere, r = (sin2θ cos2φ, sin2θ sin2φ, cos2θ),
// with rotation magnitude γ: the gate is exp(-iγ r·σ).
struct AxisAngle {
    double theta = 0.0;
    double phi = 0.0;
    double gamma = 0.0;

    AxisAngle() = default;
    AxisAngle(double th, double ph, double ga)
        : theta(th), phi(ph), gamma(normalize_angle_2pi(ga)) {}

    std::array<double, 3> axis() const {
        return {std::sin(2 * theta) * std::cos(2 * phi),
                std::sin(2 * theta) * std::sin(2 * phi),
                std::cos(2 * theta)};
    }

    Mat2 matrix() const;  // exp(-iγ r·σ)
};

// Splits any U(2) matrix into a phase and a rotation: u = e^{iδ}·exp(-iγ n·σ).
struct PhasedRotation {
    double phase = 0.0;
    AxisAngle rotation;
};
PhasedRotation decompose_u2(const Mat2& u);

Mat2 mat2_mul(const Mat2& l, const Mat2& r);
Mat2 mat2_dagger(const Mat2& m);

// -- Gate IR ------------------------------------------------------------

// One identical single-qubit rotation applied to every qubit in `targets`.
struct Rotation {
    AxisAngle axis;
    std::vector<int> targets;
};

// exp(-iC Z_i Z_j) applied on every edge in `edges`.
struct ZZCoupling {
    double coupling = 0.0;  // C
    EdgeList edges;
};

struct WGate {  // Hadamard
    std::vector<int> targets;
};

struct TGate {  // exp(-i π/8 Z)
    std::vector<int> targets;
};

struct CZGate {
    Edge edge;
};

struct SwapGate {
    Edge edge;
};

using Gate = std::variant<Rotation, ZZCoupling, WGate, TGate, CZGate, SwapGate>;

// Axis-angle bodies of the named single-qubit gates. W is i·exp(-iπ/2 n·σ) for
// the axis below; T equals its rotation exactly.
inline AxisAngle w_axis() { return AxisAngle(kPi / 8, 0.0, kPi / 2); }
inline AxisAngle t_axis() { return AxisAngle(0.0, 0.0, kPi / 8); }

Mat2 hadamard_matrix();  // includes the standard +i phase relative to w_axis()
Mat2 t_matrix();

// Qubits a gate acts on.
Mask gate_support(const Gate& g, int n);

// True when the gate is diagonal in the Z basis.
bool gate_is_z_diagonal(const Gate& g);

}  // namespace vz
