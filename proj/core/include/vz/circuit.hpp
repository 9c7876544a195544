#pragma once

#include "vz/gates.hpp"
#include "vz/graph.hpp"

namespace vz {

// Gate-model program: ordered layers, each a set of commuting gates applied
// in parallel. layers[0] acts first.
struct Circuit {
    int n = 0;
    std::vector<std::vector<Gate>> layers;
};

struct Violation {
    int layer = -1;
    std::string message;
};

struct ValidationResult {
    bool ok = false;
    std::vector<Violation> errors;
    // Coupling layers whose active edges share a vertex. Not an error: the
    // compiler splits them into pairwise sublayers.
    std::vector<int> non_pairwise_layers;
};

ValidationResult validate_circuit(const Circuit& circuit, const Graph& graph);

// One homogeneous piece of a layer: a single rotation on a vertex mask, or a
// single coupling strength on a pairwise edge mask.
struct Sublayer {
    enum class Kind { SingleQubit, Coupling } kind = Kind::SingleQubit;
    AxisAngle axis;          // SingleQubit
    Mask v_mask;             // SingleQubit
    double coupling = 0.0;   // Coupling, C
    EdgeList edges;          // Coupling, pairwise
    double phase = 0.0;      // phase of the source gates relative to the body
};

// Reduces one circuit layer to sublayers the synthesis routines accept: each
// output is one rotation on a mask or one coupling strength on a pairwise
// edge mask, and the ordered product of sublayers equals the layer.
// Throws SynthesisError when gates in the layer fail the structural
// commutation check (overlapping supports that are not all Z-diagonal).
std::vector<Sublayer> sublayer_decompose(const Circuit& circuit, int layer_index,
                                         const Graph& graph);

}  // namespace vz
