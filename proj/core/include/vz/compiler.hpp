#pragma once

#include <optional>

#include "vz/circuit.hpp"
#include "vz/coupling.hpp"
#include "vz/schedule.hpp"

namespace vz {

// Compiler IR: one Lemma-1 or Lemma-2 unit, pre-rendering. Optimization
// passes rewrite these blocks; rendering expands them into applied layers.
struct RotationGroup {
    Mat2 target{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)};  // per-qubit U(2)
    Mask mask;
    double extra_phase = 0.0;
};

struct CouplingUnit {
    double coupling = 0.0;
    EdgeList edges;
    CouplingSolution solution;
    Mask uncoupled;
    bool aux_present = false;
    double aux_angle = 0.0;    // X-rotation owed to the uncoupled set
    bool left_dress = true;    // X(t') pulses flanking the coupling pulse
    bool right_dress = true;
    double extra_phase = 0.0;
};

using ProgramItem = std::variant<RotationGroup, CouplingUnit>;

struct Program {
    int n = 0;
    double a = 1.0;
    Variant variant = Variant::Homogeneous;
    int effective_layers = 0;
    std::vector<ProgramItem> items;
};

struct DepthReport {
    int effective_layers = 0;
    int applied_layers = 0;
    std::vector<std::pair<std::string, int>> per_category;
    int cost_bound = 0;   // 3 per single-qubit sublayer + 6 per coupling sublayer
    bool bound_ok = false;
};

struct CompileOptions {
    Variant variant = Variant::Homogeneous;
    bool optimize = true;
};

struct CompileResult {
    Schedule schedule;
    DepthReport report;
    Program program;
};

// Lowers a gate-model circuit to applied layers (Lemma 1 + Lemma 2 per
// sublayer). The compiled schedule's unitary equals the circuit's exactly,
// via the tracked global phase.
CompileResult compile(const Circuit& circuit, const Graph& graph, double a,
                      const CompileOptions& options = {});

// Folds the X(t') dressing pulses of coupling units into neighboring
// single-qubit groups where supports allow; never increases layer count.
Program absorb_x_rotations(Program program);

// Combines the auxiliary rotations of consecutive coupling units that share
// an uncoupled set.
Program merge_aux_rotations(Program program);

// Expands IR blocks into applied layers with category tags.
std::pair<Schedule, DepthReport> render(const Program& program);

}  // namespace vz
