#pragma once

#include <Eigen/Dense>

#include "vz/circuit.hpp"
#include "vz/schedule.hpp"

namespace vz {

using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Dense-simulation ceiling. Matrices above this blow past desk scale.
inline constexpr int kDenseCeiling = 12;

// Normalized 2^n amplitudes, little endian: qubit 0 is the least significant
// bit of the basis index.
struct StateVector {
    int n = 0;
    std::vector<cplx> amps;

    static StateVector plus(int n);   // |+>^n
    static StateVector basis(int n, uint64_t s);

    double norm() const;
    size_t dim() const { return amps.size(); }

    void apply_1q(int q, const Mat2& m);
    // m4 indexed by (bit_qb << 1) | bit_qa; qa != qb.
    void apply_2q(int qa, int qb, const std::array<cplx, 16>& m4);
    void apply_phase(cplx ph);
};

// exp(-it H) for the layer Hamiltonian, assembled from commuting 4x4 pair
// blocks and 2x2 single-qubit blocks. Requires a pairwise w mask; falls back
// to the dense eigendecomposition otherwise.
MatX layer_unitary(const AppliedLayer& layer, double a, int n);

// Reference path: full 2^n x 2^n Hermitian assembly + eigendecomposition.
MatX layer_unitary_dense(const AppliedLayer& layer, double a, int n);

// Applies one layer to a state without forming the full matrix.
void apply_layer(StateVector& state, const AppliedLayer& layer, double a);

// (∏_l e^{-i t_l H_l}) |+>^n with the schedule's global phase applied.
StateVector run_schedule(const Schedule& schedule, int n);

// P(s) = |<s|ψ>|^2.
std::vector<double> output_distribution(const StateVector& state);

// ½ Σ |p_i - q_i|.
double tvd(const std::vector<double>& p, const std::vector<double>& q);

// ‖U - e^{iφ*}V‖ in operator norm with φ* = arg tr(V†U).
double unitary_distance_up_to_phase(const MatX& u, const MatX& v);

// Product of per-gate matrices in layer order (layers[0] first).
MatX circuit_unitary(const Circuit& circuit, int n);

// Full unitary of a schedule, including its global phase.
MatX schedule_unitary(const Schedule& schedule, int n);

// Exact gate matrices embedded on n qubits.
MatX gate_unitary(const Gate& g, int n);

// Report produced by the verification pipeline.
struct VerificationReport {
    double op_distance = 0.0;
    double tvd = 0.0;
    int applied_layers = 0;
    std::vector<std::pair<std::string, int>> per_category;
    bool pass = false;
    double tol_op_distance = 0.0;
    double tol_tvd = 0.0;
};

VerificationReport verify_schedule(const Circuit& circuit, const Graph& graph,
                                   const Schedule& schedule, double tol_op, double tol_tvd);

}  // namespace vz
