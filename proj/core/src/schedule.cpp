#include "vz/schedule.hpp"

namespace vz {

AppliedLayer AppliedLayer::pure_x(int n, double t) {
    AppliedLayer l;
    l.t = t;
    l.v_mask = mask_none(n);
    l.x_mask = mask_all(n);
    return l;
}

void Schedule::push(AppliedLayer layer, LayerCategory cat) {
    layers.push_back(std::move(layer));
    categories.push_back(cat);
}

void Schedule::validate() const {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    // Loaded schedules carry no category tags; compiled ones are fully tagged.
    if (!categories.empty() && categories.size() != layers.size())
        throw std::invalid_argument("category list out of sync with layers");
    size_t n0 = layers.empty() ? 0 : layers.front().v_mask.size();
    for (const AppliedLayer& l : layers) {
        if (l.t < 0) throw std::invalid_argument("negative layer duration");
        if (l.v_mask.size() != n0 || l.x_mask.size() != n0)
            throw std::invalid_argument("mask size mismatch across layers");
        if (l.w_edges.empty() && l.b != 0.0)
            throw std::invalid_argument("b must be zero without coupled edges");
        if (mask_is_none(l.v_mask) && l.c != 0.0)
            throw std::invalid_argument("c must be zero without local-field targets");
        if (variant == Variant::Homogeneous && !mask_is_all(l.x_mask))
            throw std::invalid_argument("homogeneous schedule requires the X-field on all qubits");
    }
}

const char* to_string(LayerCategory c) {
    switch (c) {
        case LayerCategory::SingleQubit: return "single_qubit";
        case LayerCategory::Coupling: return "coupling";
        case LayerCategory::Aux: return "aux";
        case LayerCategory::Swap: return "swap";
    }
    return "?";
}

const char* to_string(Variant v) {
    return v == Variant::Homogeneous ? "homogeneous" : "alternating";
}

}  // namespace vz
