#pragma once

#include "vz/types.hpp"

namespace vz {

// One pulse of the VZ model: H = a·Σ_{x} X_i + b·Σ_{w} Z_i Z_j + c·Σ_{v} Z_i
// applied for time t. The X-field strength a lives on the schedule.
struct AppliedLayer {
    double t = 0.0;   // duration, ≥ 0; zero only for degenerate no-op layers
    double b = 0.0;   // coupling coefficient, 0 when w_edges is empty
    double c = 0.0;   // local field coefficient, 0 when v_mask is empty
    EdgeList w_edges;
    Mask v_mask;
    Mask x_mask;      // all-ones except in alternating-field schedules

    static AppliedLayer pure_x(int n, double t);
};

enum class Variant { Homogeneous, Alternating };

// Category a layer was emitted under, for depth accounting.
enum class LayerCategory { SingleQubit, Coupling, Aux, Swap };

struct Schedule {
    double a = 1.0;
    Variant variant = Variant::Homogeneous;
    double global_phase = 0.0;  // radians; product of layers times e^{iφ} equals the target
    std::vector<AppliedLayer> layers;            // layers[0] acts first
    std::vector<LayerCategory> categories;       // parallel to layers

    int n() const { return layers.empty() ? 0 : static_cast<int>(layers.front().v_mask.size()); }
    void push(AppliedLayer layer, LayerCategory cat);
    void validate() const;
};

const char* to_string(LayerCategory c);
const char* to_string(Variant v);

}  // namespace vz
