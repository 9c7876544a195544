#include "vz/compiler.hpp"

#include <cmath>

namespace vz {

namespace {

Mat2 x_rotation(double angle) { return AxisAngle(kPi / 4, 0.0, angle).matrix(); }

bool dress_absorbable(const CouplingUnit& cu, const RotationGroup& rg) {
    if (mask_is_all(rg.mask)) return true;
    // Partial group: legal when the group covers exactly the coupled qubits
    // and the uncoupled remainder can be pushed into this unit's aux rotation.
    return cu.aux_present && rg.mask == edges_to_mask(cu.edges, static_cast<int>(rg.mask.size()));
}

int rendered_size(const ProgramItem& item, double a) {
    if (const auto* rg = std::get_if<RotationGroup>(&item)) {
        if (mask_is_none(rg->mask)) return 0;
        PhasedRotation pr = decompose_u2(rg->target);
        (void)a;
        return pr.rotation.gamma < 1e-12 || pr.rotation.gamma > 2 * kPi - 1e-12 ? 0 : 3;
    }
    const auto& cu = std::get<CouplingUnit>(item);
    return 1 + (cu.left_dress ? 1 : 0) + (cu.right_dress ? 1 : 0) + (cu.aux_present ? 3 : 0);
}

}  // namespace

Program absorb_x_rotations(Program program) {
    auto& items = program.items;
    for (size_t i = 0; i < items.size(); ++i) {
        auto* cu = std::get_if<CouplingUnit>(&items[i]);
        if (!cu) continue;
        double dress_angle = program.a * cu->solution.t_prime;
        if (cu->left_dress && i > 0) {
            if (auto* rg = std::get_if<RotationGroup>(&items[i - 1]);
                rg && !mask_is_none(rg->mask) && dress_absorbable(*cu, *rg)) {
                rg->target = mat2_mul(x_rotation(dress_angle), rg->target);
                if (!mask_is_all(rg->mask)) cu->aux_angle += dress_angle;
                cu->left_dress = false;
            }
        }
        if (cu->right_dress && i + 1 < items.size()) {
            if (auto* rg = std::get_if<RotationGroup>(&items[i + 1]);
                rg && !mask_is_none(rg->mask) && dress_absorbable(*cu, *rg)) {
                rg->target = mat2_mul(rg->target, x_rotation(dress_angle));
                if (!mask_is_all(rg->mask)) cu->aux_angle += dress_angle;
                cu->right_dress = false;
            }
        }
    }
    return program;
}

Program merge_aux_rotations(Program program) {
    auto& items = program.items;
    for (size_t i = 0; i + 1 < items.size(); ++i) {
        auto* head = std::get_if<CouplingUnit>(&items[i]);
        if (!head || !head->aux_present) continue;
        for (size_t j = i + 1; j < items.size(); ++j) {
            auto* next = std::get_if<CouplingUnit>(&items[j]);
            if (!next || !next->aux_present || next->uncoupled != head->uncoupled) break;
            head->aux_angle += next->aux_angle;
            next->aux_present = false;
            next->aux_angle = 0.0;
        }
    }
    return program;
}

std::pair<Schedule, DepthReport> render(const Program& program) {
    Schedule sched;
    sched.a = program.a;
    sched.variant = program.variant;
    double phase = 0.0;

    DepthReport report;
    report.effective_layers = program.effective_layers;

    for (const ProgramItem& item : program.items) {
        if (const auto* rg = std::get_if<RotationGroup>(&item)) {
            phase += rg->extra_phase;
            int count = mask_count(rg->mask);
            if (count == 0) continue;
            PhasedRotation pr = decompose_u2(rg->target);
            phase += pr.phase * count;
            if (pr.rotation.gamma < 1e-12 || pr.rotation.gamma > 2 * kPi - 1e-12) continue;
            auto syn = synth_single_qubit_layer(pr.rotation, rg->mask, program.a);
            phase += syn.phase;
            for (const AppliedLayer& l : syn.layers) sched.push(l, LayerCategory::SingleQubit);
            continue;
        }
        const auto& cu = std::get<CouplingUnit>(item);
        phase += cu.extra_phase;
        phase += kPi * cu.solution.k * static_cast<double>(cu.edges.size());
        if (cu.aux_present) {
            double angle = normalize_angle_2pi(cu.aux_angle);
            auto aux = synth_single_qubit_layer(AxisAngle(kPi / 4, 0.0, angle), cu.uncoupled,
                                                program.a);
            phase += aux.phase;
            for (const AppliedLayer& l : aux.layers) sched.push(l, LayerCategory::Aux);
        }
        AppliedLayer dress = AppliedLayer::pure_x(program.n, cu.solution.t_prime);
        AppliedLayer pulse;
        pulse.t = cu.solution.t;
        pulse.b = cu.solution.b;
        pulse.w_edges = cu.edges;
        pulse.v_mask = mask_none(program.n);
        pulse.x_mask = mask_all(program.n);
        if (cu.left_dress) sched.push(dress, LayerCategory::Coupling);
        sched.push(pulse, LayerCategory::Coupling);
        if (cu.right_dress) sched.push(dress, LayerCategory::Coupling);
    }

    sched.global_phase = normalize_angle_2pi(phase);
    report.applied_layers = static_cast<int>(sched.layers.size());
    std::vector<std::pair<std::string, int>> cats = {
        {"single_qubit", 0}, {"coupling", 0}, {"aux", 0}, {"swap", 0}};
    for (LayerCategory c : sched.categories)
        for (auto& [name, cnt] : cats)
            if (name == to_string(c)) ++cnt;
    report.per_category = cats;
    return {std::move(sched), report};
}

CompileResult compile(const Circuit& circuit, const Graph& graph, double a,
                      const CompileOptions& options) {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    if (options.variant != Variant::Homogeneous)
        throw std::invalid_argument(
            "alternating-field lowering is provided by the supremacy pipeline");

    Program prog;
    prog.n = graph.n;
    prog.a = a;
    prog.variant = options.variant;
    prog.effective_layers = static_cast<int>(circuit.layers.size());
    int cost_bound = 0;

    for (size_t l = 0; l < circuit.layers.size(); ++l) {
        for (const Sublayer& s : sublayer_decompose(circuit, static_cast<int>(l), graph)) {
            if (s.kind == Sublayer::Kind::SingleQubit) {
                RotationGroup rg;
                rg.target = s.axis.matrix();
                rg.mask = s.v_mask;
                rg.extra_phase = s.phase;
                cost_bound += mask_is_none(s.v_mask) ? 0 : 3;
                prog.items.emplace_back(std::move(rg));
                continue;
            }
            cost_bound += 6;
            if (std::abs(s.coupling - kPi / 2) < 1e-12) {
                // exp(-iπ/2 ZZ) = i·exp(-iπ/2(Z_a+Z_b)): the sinc equation has
                // no root at D = π/2 + kπ, so lower to a Z-rotation layer.
                RotationGroup rg;
                rg.target = AxisAngle(0.0, 0.0, kPi / 2).matrix();
                rg.mask = edges_to_mask(s.edges, graph.n);
                rg.extra_phase =
                    s.phase + kPi / 2 * static_cast<double>(s.edges.size());
                prog.items.emplace_back(std::move(rg));
                continue;
            }
            CouplingUnit cu;
            cu.coupling = s.coupling;
            cu.edges = s.edges;
            cu.solution = find_coupling_params(s.coupling, a);
            cu.uncoupled = mask_complement(edges_to_mask(s.edges, graph.n));
            cu.aux_present = !mask_is_none(cu.uncoupled);
            cu.aux_angle = cu.solution.gamma_aux;
            cu.extra_phase = s.phase;
            prog.items.emplace_back(std::move(cu));
        }
    }

    if (options.optimize) {
        auto weight = [&](const Program& p) {
            int acc = 0;
            for (const ProgramItem& it : p.items) acc += rendered_size(it, p.a);
            return acc;
        };
        int before = weight(prog);
        for (int round = 0; round < 4; ++round) {
            prog = merge_aux_rotations(absorb_x_rotations(std::move(prog)));
            int after = weight(prog);
            if (after == before) break;
            before = after;
        }
    }

    CompileResult result;
    auto [sched, report] = render(prog);
    result.schedule = std::move(sched);
    result.report = report;
    result.report.cost_bound = cost_bound;
    result.report.bound_ok = result.report.applied_layers <= cost_bound;
    result.program = std::move(prog);
    return result;
}

}  // namespace vz
