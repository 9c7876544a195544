#include "vz/io.hpp"

#include <fstream>

namespace vz {

namespace {

json edges_to_json(const EdgeList& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.a, e.b});
    return out;
}

EdgeList edges_from_json(const json& j) {
    EdgeList out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair [i, j]");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json gate_to_json(const Gate& g) {
    json out;
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, Rotation>) {
                out["kind"] = "rotation";
                out["theta"] = gate.axis.theta;
                out["phi"] = gate.axis.phi;
                out["gamma"] = gate.axis.gamma;
                out["targets"] = gate.targets;
            } else if constexpr (std::is_same_v<T, ZZCoupling>) {
                out["kind"] = "zz";
                out["coupling"] = gate.coupling;
                out["edges"] = edges_to_json(gate.edges);
            } else if constexpr (std::is_same_v<T, WGate>) {
                out["kind"] = "w";
                out["targets"] = gate.targets;
            } else if constexpr (std::is_same_v<T, TGate>) {
                out["kind"] = "t";
                out["targets"] = gate.targets;
            } else if constexpr (std::is_same_v<T, CZGate>) {
                out["kind"] = "cz";
                out["edge"] = {gate.edge.a, gate.edge.b};
            } else {
                out["kind"] = "swap";
                out["edge"] = {gate.edge.a, gate.edge.b};
            }
        },
        g);
    return out;
}

Gate gate_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rotation")
        return Rotation{AxisAngle(j.at("theta").get<double>(), j.at("phi").get<double>(),
                                  j.at("gamma").get<double>()),
                        j.at("targets").get<std::vector<int>>()};
    if (kind == "zz")
        return ZZCoupling{j.at("coupling").get<double>(), edges_from_json(j.at("edges"))};
    if (kind == "w") return WGate{j.at("targets").get<std::vector<int>>()};
    if (kind == "t") return TGate{j.at("targets").get<std::vector<int>>()};
    if (kind == "cz")
        return CZGate{Edge(j.at("edge")[0].get<int>(), j.at("edge")[1].get<int>())};
    if (kind == "swap")
        return SwapGate{Edge(j.at("edge")[0].get<int>(), j.at("edge")[1].get<int>())};
    throw ParseError("unknown gate kind '" + kind + "'");
}

}  // namespace

json circuit_to_json(const Circuit& circuit, const Graph& graph) {
    json out;
    out["n"] = circuit.n;
    out["edges"] = edges_to_json(graph.edges);
    json layers = json::array();
    for (const auto& layer : circuit.layers) {
        json jl = json::array();
        for (const Gate& g : layer) jl.push_back(gate_to_json(g));
        layers.push_back(std::move(jl));
    }
    out["layers"] = std::move(layers);
    return out;
}

std::pair<Circuit, Graph> circuit_from_json(const json& j) {
    try {
        Circuit circ;
        Graph graph;
        circ.n = j.at("n").get<int>();
        graph.n = circ.n;
        graph.edges = edges_from_json(j.at("edges"));
        std::sort(graph.edges.begin(), graph.edges.end());
        graph.validate();
        for (const auto& jl : j.at("layers")) {
            std::vector<Gate> layer;
            for (const auto& jg : jl) layer.push_back(gate_from_json(jg));
            circ.layers.push_back(std::move(layer));
        }
        return {circ, graph};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad circuit file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad circuit file: ") + e.what());
    }
}

json schedule_to_json(const Schedule& schedule) {
    json out;
    out["a"] = schedule.a;
    out["variant"] = to_string(schedule.variant);
    out["global_phase"] = schedule.global_phase;
    json layers = json::array();
    for (const AppliedLayer& l : schedule.layers) {
        json jl;
        jl["t"] = l.t;
        jl["b"] = l.b;
        jl["c"] = l.c;
        jl["w_mask"] = edges_to_json(l.w_edges);
        jl["v_mask"] = mask_indices(l.v_mask);
        jl["x_mask"] = mask_indices(l.x_mask);
        layers.push_back(std::move(jl));
    }
    out["layers"] = std::move(layers);
    return out;
}

Schedule schedule_from_json(const json& j) {
    try {
        Schedule s;
        s.a = j.at("a").get<double>();
        std::string variant = j.at("variant").get<std::string>();
        if (variant == "homogeneous")
            s.variant = Variant::Homogeneous;
        else if (variant == "alternating")
            s.variant = Variant::Alternating;
        else
            throw ParseError("unknown schedule variant '" + variant + "'");
        s.global_phase = j.at("global_phase").get<double>();

        const auto& layers = j.at("layers");
        int n = 0;
        for (const auto& jl : layers) {
            for (const auto& key : {"v_mask", "x_mask"})
                for (const auto& q : jl.at(key)) n = std::max(n, q.get<int>() + 1);
            for (const auto& e : jl.at("w_mask"))
                n = std::max({n, e[0].get<int>() + 1, e[1].get<int>() + 1});
        }
        for (const auto& jl : layers) {
            AppliedLayer l;
            l.t = jl.at("t").get<double>();
            l.b = jl.at("b").get<double>();
            l.c = jl.at("c").get<double>();
            l.w_edges = edges_from_json(jl.at("w_mask"));
            l.v_mask = indices_to_mask(jl.at("v_mask").get<std::vector<int>>(), n);
            l.x_mask = indices_to_mask(jl.at("x_mask").get<std::vector<int>>(), n);
            s.layers.push_back(std::move(l));
        }
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad schedule file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad schedule file: ") + e.what());
    }
}

json instance_to_json(const IqpInstance& instance) {
    json out;
    out["n"] = instance.n;
    out["seed"] = instance.seed;
    out["v"] = instance.v;
    json w = json::array();
    for (int i = 0; i < instance.n; ++i)
        for (int j2 = i + 1; j2 < instance.n; ++j2)
            w.push_back({i, j2, instance.w[static_cast<size_t>(i)][static_cast<size_t>(j2)]});
    out["w"] = std::move(w);
    return out;
}

IqpInstance instance_from_json(const json& j) {
    try {
        IqpInstance inst;
        inst.n = j.at("n").get<int>();
        inst.seed = j.at("seed").get<uint64_t>();
        inst.v = j.at("v").get<std::vector<double>>();
        if (static_cast<int>(inst.v.size()) != inst.n)
            throw ParseError("v length does not match n");
        inst.w.assign(static_cast<size_t>(inst.n),
                      std::vector<double>(static_cast<size_t>(inst.n), 0.0));
        for (const auto& row : j.at("w")) {
            int a = row.at(0).get<int>(), b = row.at(1).get<int>();
            if (a < 0 || b <= a || b >= inst.n) throw ParseError("bad pair in w");
            inst.w[static_cast<size_t>(a)][static_cast<size_t>(b)] = row.at(2).get<double>();
        }
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance file: ") + e.what());
    }
}

json depth_report_to_json(const DepthReport& report) {
    json out;
    out["effective_layers"] = report.effective_layers;
    out["applied_layers"] = report.applied_layers;
    json cats;
    for (const auto& [name, count] : report.per_category) cats[name] = count;
    out["per_category"] = std::move(cats);
    out["cost_bound"] = report.cost_bound;
    out["bound_ok"] = report.bound_ok;
    return out;
}

json verification_report_to_json(const VerificationReport& report) {
    json out;
    out["op_distance"] = report.op_distance;
    out["tvd"] = report.tvd;
    out["applied_layers"] = report.applied_layers;
    json cats;
    for (const auto& [name, count] : report.per_category) cats[name] = count;
    out["per_category"] = std::move(cats);
    out["pass"] = report.pass;
    out["tolerances"] = {{"op_distance", report.tol_op_distance}, {"tvd", report.tol_tvd}};
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    save_text_file(path, j.dump(2) + "\n");
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace vz
