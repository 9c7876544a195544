#include "vz/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vz {

namespace {

bool supports_overlap(const Mask& a, const Mask& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

void check_gate(const Gate& g, const Graph& graph, int layer, ValidationResult& res) {
    auto err = [&](const std::string& m) { res.errors.push_back({layer, m}); };
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, Rotation> || std::is_same_v<T, WGate> ||
                          std::is_same_v<T, TGate>) {
                Mask seen = mask_none(graph.n);
                for (int q : gate.targets) {
                    if (q < 0 || q >= graph.n) {
                        err("qubit index " + std::to_string(q) + " out of range");
                        return;
                    }
                    if (seen[static_cast<size_t>(q)]) err("duplicate target " + std::to_string(q));
                    seen[static_cast<size_t>(q)] = 1;
                }
            } else if constexpr (std::is_same_v<T, ZZCoupling>) {
                for (const Edge& e : gate.edges) {
                    if (e.a < 0 || e.b >= graph.n) {
                        err("edge endpoint out of range");
                        return;
                    }
                    if (!graph.has_edge(e))
                        err("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                            ") not in graph");
                }
            } else {
                if (gate.edge.a < 0 || gate.edge.b >= graph.n)
                    err("edge endpoint out of range");
                else if (!graph.has_edge(gate.edge))
                    err("edge (" + std::to_string(gate.edge.a) + "," +
                        std::to_string(gate.edge.b) + ") not in graph");
            }
        },
        g);
}

}  // namespace

ValidationResult validate_circuit(const Circuit& circuit, const Graph& graph) {
    ValidationResult res;
    if (circuit.n != graph.n)
        res.errors.push_back({-1, "circuit qubit count does not match graph"});
    if (circuit.layers.empty()) res.errors.push_back({-1, "empty circuit"});

    for (size_t l = 0; l < circuit.layers.size(); ++l) {
        const auto& layer = circuit.layers[l];
        EdgeList coupling_edges;
        std::vector<Mask> supports;
        std::vector<char> zdiag;
        for (const Gate& g : layer) {
            check_gate(g, graph, static_cast<int>(l), res);
            if (!res.errors.empty() && res.errors.back().layer == static_cast<int>(l)) continue;
            supports.push_back(gate_support(g, graph.n));
            zdiag.push_back(gate_is_z_diagonal(g));
            if (const auto* zz = std::get_if<ZZCoupling>(&g))
                coupling_edges.insert(coupling_edges.end(), zz->edges.begin(), zz->edges.end());
            if (const auto* cz = std::get_if<CZGate>(&g)) coupling_edges.push_back(cz->edge);
        }
        for (size_t i = 0; i < supports.size(); ++i)
            for (size_t j = i + 1; j < supports.size(); ++j)
                if (supports_overlap(supports[i], supports[j]) && !(zdiag[i] && zdiag[j]))
                    res.errors.push_back(
                        {static_cast<int>(l), "non-commuting gates on overlapping supports"});
        if (!coupling_edges.empty() && !is_pairwise(coupling_edges, graph.n))
            res.non_pairwise_layers.push_back(static_cast<int>(l));
    }
    res.ok = res.errors.empty();
    return res;
}

namespace {

struct AxisKey {
    double theta, phi, gamma;
    bool operator<(const AxisKey& o) const {
        if (theta != o.theta) return theta < o.theta;
        if (phi != o.phi) return phi < o.phi;
        return gamma < o.gamma;
    }
};

// Fig. 6c lowering of SWAP, pre-merged into five single-qubit groups and
// three π/4 couplings. Gate order within the run matters.
struct SwapRun {
    PhasedRotation w_outer;       // W on edge.b, first and last
    PhasedRotation z_group;       // Z(π/4) on both
    PhasedRotation zw_group;      // Z(π/4)·W on both, used twice
    double correction = 0.0;      // fixed phase making the product equal SWAP
};

SwapRun make_swap_run() {
    SwapRun run;
    Mat2 w = hadamard_matrix();
    Mat2 zq = AxisAngle(0.0, 0.0, kPi / 4).matrix();  // exp(-iπ/4 Z)
    run.w_outer = decompose_u2(w);
    run.z_group = decompose_u2(zq);
    run.zw_group = decompose_u2(mat2_mul(zq, w));
    // Product of the exact Fig. 6c gates equals e^{i3π/4}·SWAP.
    run.correction = -3 * kPi / 4;
    return run;
}

}  // namespace

std::vector<Sublayer> sublayer_decompose(const Circuit& circuit, int layer_index,
                                         const Graph& graph) {
    const auto& layer = circuit.layers.at(static_cast<size_t>(layer_index));

    // Structural commutation check (Def.-1 layers): disjoint supports, or all
    // gates Z-diagonal.
    {
        std::vector<Mask> supports;
        std::vector<char> zdiag;
        for (const Gate& g : layer) {
            supports.push_back(gate_support(g, graph.n));
            zdiag.push_back(gate_is_z_diagonal(g));
        }
        for (size_t i = 0; i < supports.size(); ++i)
            for (size_t j = i + 1; j < supports.size(); ++j)
                if (supports_overlap(supports[i], supports[j]) && !(zdiag[i] && zdiag[j]))
                    throw SynthesisError("layer " + std::to_string(layer_index) +
                                         ": non-commuting gates on overlapping supports");
    }

    std::map<AxisKey, Mask> rot_groups;          // identical rotations merged
    std::map<double, EdgeList> coupling_groups;  // by coupling strength
    std::vector<const SwapGate*> swaps;
    double phase = 0.0;

    auto add_rotation = [&](const AxisAngle& ax, const std::vector<int>& targets, double ph) {
        phase += ph * static_cast<double>(targets.size());
        if (ax.gamma == 0.0 || targets.empty()) return;
        AxisKey key{ax.theta, ax.phi, ax.gamma};
        auto [it, fresh] = rot_groups.try_emplace(key, mask_none(graph.n));
        for (int q : targets) it->second[static_cast<size_t>(q)] = 1;
    };
    auto add_coupling = [&](double c, const EdgeList& edges) {
        if (edges.empty()) return;
        double body = std::fmod(c, kPi);
        if (body < 0) body += kPi;
        double k = std::round((c - body) / kPi);
        // e^{-iCZZ} = (−1)^k e^{-i(body)ZZ} per edge
        if (std::fmod(std::abs(k), 2.0) == 1.0) phase += kPi * static_cast<double>(edges.size());
        if (body == 0.0) return;
        auto& list = coupling_groups[body];
        list.insert(list.end(), edges.begin(), edges.end());
    };

    for (const Gate& g : layer) {
        std::visit(
            [&](const auto& gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, Rotation>) {
                    add_rotation(gate.axis, gate.targets, 0.0);
                } else if constexpr (std::is_same_v<T, WGate>) {
                    add_rotation(w_axis(), gate.targets, kPi / 2);  // W = i·rotation
                } else if constexpr (std::is_same_v<T, TGate>) {
                    add_rotation(t_axis(), gate.targets, 0.0);
                } else if constexpr (std::is_same_v<T, ZZCoupling>) {
                    add_coupling(gate.coupling, gate.edges);
                } else if constexpr (std::is_same_v<T, CZGate>) {
                    // CZ = e^{-iπ/4}·e^{-iπ/4 ZZ}·e^{+iπ/4(Z_a+Z_b)}
                    add_coupling(kPi / 4, {gate.edge});
                    add_rotation(AxisAngle(0.0, 0.0, 2 * kPi - kPi / 4),
                                 {gate.edge.a, gate.edge.b}, 0.0);
                    phase += -kPi / 4;
                } else {
                    swaps.push_back(&gate);
                }
            },
            g);
    }

    std::vector<Sublayer> out;
    for (auto& [key, mask] : rot_groups) {
        Sublayer s;
        s.kind = Sublayer::Kind::SingleQubit;
        s.axis = AxisAngle(key.theta, key.phi, key.gamma);
        s.v_mask = mask;
        out.push_back(std::move(s));
    }
    for (auto& [c, edges] : coupling_groups) {
        std::sort(edges.begin(), edges.end());
        for (EdgeList& cls : edge_color(graph, edges)) {
            Sublayer s;
            s.kind = Sublayer::Kind::Coupling;
            s.coupling = c;
            s.edges = std::move(cls);
            out.push_back(std::move(s));
        }
    }
    // Attach the layer-wide phase to the first sublayer (or keep it on a
    // dedicated empty rotation when the layer reduced to pure phase).
    if (!out.empty()) {
        out.front().phase += phase;
    } else if (phase != 0.0) {
        Sublayer s;
        s.kind = Sublayer::Kind::SingleQubit;
        s.axis = AxisAngle(0.0, 0.0, 0.0);
        s.v_mask = mask_none(graph.n);
        s.phase = phase;
        out.push_back(std::move(s));
    }

    // Parallel SWAP gates zip into one shared Fig. 6c run; 5 single-qubit
    // groups interleaved with 3 pairwise couplings.
    if (!swaps.empty()) {
        SwapRun run = make_swap_run();
        std::vector<int> outer;   // edge.b per swap
        std::vector<int> both;
        EdgeList pair_edges;
        for (const SwapGate* sw : swaps) {
            outer.push_back(sw->edge.b);
            both.push_back(sw->edge.a);
            both.push_back(sw->edge.b);
            pair_edges.push_back(sw->edge);
        }
        std::sort(pair_edges.begin(), pair_edges.end());
        double swap_phase = static_cast<double>(swaps.size()) * run.correction;

        auto rot_sub = [&](const PhasedRotation& pr, const std::vector<int>& targets) {
            Sublayer s;
            s.kind = Sublayer::Kind::SingleQubit;
            s.axis = pr.rotation;
            s.v_mask = indices_to_mask(targets, graph.n);
            s.phase = pr.phase * static_cast<double>(targets.size());
            return s;
        };
        auto cpl_sub = [&]() {
            Sublayer s;
            s.kind = Sublayer::Kind::Coupling;
            s.coupling = kPi / 4;
            s.edges = pair_edges;
            return s;
        };

        Sublayer first = rot_sub(run.w_outer, outer);
        first.phase += swap_phase;
        out.push_back(std::move(first));
        out.push_back(rot_sub(run.z_group, both));
        out.push_back(cpl_sub());
        out.push_back(rot_sub(run.zw_group, both));
        out.push_back(cpl_sub());
        out.push_back(rot_sub(run.zw_group, both));
        out.push_back(cpl_sub());
        out.push_back(rot_sub(run.w_outer, outer));
    }

    return out;
}

}  // namespace vz
