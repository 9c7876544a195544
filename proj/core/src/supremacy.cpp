#include "vz/supremacy.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace vz {

namespace {

constexpr double kStep = kPi / 8;

int angle_to_k(double angle) {
    int k = static_cast<int>(std::lround(angle / kStep));
    if (k < 0 || k > 7 || std::abs(angle - k * kStep) > 1e-9)
        throw std::invalid_argument("angle is not a multiple of π/8 in [0, 7π/8]");
    return k;
}

// Walk plan: position pairs and the logical angles they act on, step by step.
struct Walk {
    std::vector<int> initial;                 // position -> logical label
    struct Step {
        EdgeList pairs;                       // positions coupled then swapped
        std::vector<double> pair_angles;      // logical w for each pair
    };
    std::vector<Step> steps;
};

Walk plan_walk(const IqpInstance& inst) {
    const int n = inst.n;
    Walk walk;
    walk.initial.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) walk.initial[static_cast<size_t>(p)] = n - 1 - p;

    std::vector<int> perm = walk.initial;
    for (int m = 0; m < n; ++m) {
        Walk::Step step;
        for (int p = m % 2; p + 1 < n; p += 2) {
            step.pairs.emplace_back(p, p + 1);
            step.pair_angles.push_back(
                inst.pair_angle(perm[static_cast<size_t>(p)], perm[static_cast<size_t>(p + 1)]));
        }
        walk.steps.push_back(step);
        for (const Edge& e : step.pairs)
            std::swap(perm[static_cast<size_t>(e.a)], perm[static_cast<size_t>(e.b)]);
    }
    // After n odd-even rounds the reversed initial placement is sorted, so
    // physical measurement order equals logical order.
    for (int p = 0; p < n; ++p)
        if (perm[static_cast<size_t>(p)] != p)
            throw std::logic_error("qubit walk did not come back to identity order");
    return walk;
}

}  // namespace

IqpInstance gen_iqp(int n, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("IQP instance needs at least two qubits");
    IqpInstance inst;
    inst.n = n;
    inst.seed = seed;
    std::mt19937_64 rng(seed);
    auto draw = [&] { return static_cast<double>(rng() >> 61) * kStep; };
    inst.v.resize(static_cast<size_t>(n));
    for (double& x : inst.v) x = draw();
    inst.w.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inst.w[static_cast<size_t>(i)][static_cast<size_t>(j)] = draw();
    return inst;
}

std::array<int, 3> binary_decompose(double angle) {
    int k = angle_to_k(angle);
    return {(k >> 2) & 1, (k >> 1) & 1, k & 1};
}

Circuit lower_iqp_to_1d(const IqpInstance& instance) {
    Walk walk = plan_walk(instance);
    const int n = instance.n;
    Circuit circ;
    circ.n = n;

    // Initial Z rotations: position p carries logical qubit walk.initial[p].
    // e^{+ivZ} = exp(-i(2π − v)Z) exactly.
    {
        std::vector<Gate> layer;
        std::map<double, std::vector<int>> by_angle;
        for (int p = 0; p < n; ++p) {
            double v = instance.v[static_cast<size_t>(walk.initial[static_cast<size_t>(p)])];
            if (v != 0.0) by_angle[v].push_back(p);
        }
        for (auto& [v, targets] : by_angle)
            layer.push_back(Rotation{AxisAngle(0.0, 0.0, 2 * kPi - v), targets});
        circ.layers.push_back(std::move(layer));
    }

    for (const Walk::Step& step : walk.steps) {
        std::vector<Gate> coupling_layer;
        for (size_t i = 0; i < step.pairs.size(); ++i) {
            double w = step.pair_angles[i];
            if (w == 0.0) continue;
            // e^{+iw ZZ} = exp(-i(2π − w) ZZ) exactly.
            coupling_layer.push_back(ZZCoupling{2 * kPi - w, {step.pairs[i]}});
        }
        circ.layers.push_back(std::move(coupling_layer));

        std::vector<Gate> swap_layer;
        for (const Edge& e : step.pairs) swap_layer.push_back(SwapGate{e});
        circ.layers.push_back(std::move(swap_layer));
    }

    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    circ.layers.push_back({WGate{all}});
    return circ;
}

namespace {

// Template emitter shared by both variants. Every slot is emitted, with
// identity triples standing in for unused ones, so the layer count depends
// only on n and the variant.
struct Emitter {
    Schedule sched;
    double phase = 0.0;
    int n;
    double a;

    Emitter(int n_, double a_, Variant variant) : n(n_), a(a_) {
        sched.a = a_;
        sched.variant = variant;
    }

    void push_synthesis(const SingleQubitSynthesis& syn, LayerCategory cat) {
        phase += syn.phase;
        for (const AppliedLayer& l : syn.layers) sched.push(l, cat);
    }

    void rotation_group(const AxisAngle& axis, const Mask& mask, LayerCategory cat) {
        // Sub-1e-12 rotations are numerically indistinguishable from identity
        // and land in the ill-conditioned corner of the angle solve.
        if (mask_is_none(mask) || axis.gamma < 1e-12 || axis.gamma > 2 * kPi - 1e-12)
            push_synthesis(identity_triple(n, a), cat);
        else
            push_synthesis(synth_single_qubit_layer(axis, mask, a), cat);
    }

    // Group applying the same U(2) matrix to every masked qubit.
    void matrix_group(const Mat2& target, const Mask& mask, LayerCategory cat) {
        if (mask_is_none(mask)) {
            push_synthesis(identity_triple(n, a), cat);
            return;
        }
        PhasedRotation pr = decompose_u2(target);
        phase += pr.phase * mask_count(mask);
        rotation_group(pr.rotation, mask, cat);
    }

    void pure_x_pulse(double duration, LayerCategory cat) {
        sched.push(AppliedLayer::pure_x(n, duration), cat);
    }

    void coupling_pulse(double t, double b, const EdgeList& edges, const Mask& x_mask,
                        LayerCategory cat) {
        AppliedLayer l;
        l.t = t;
        l.b = edges.empty() ? 0.0 : b;
        l.w_edges = edges;
        l.v_mask = mask_none(n);
        l.x_mask = x_mask;
        sched.push(l, cat);
    }

    // One all-qubit pulse implementing W on every qubit: exp(-it(aX+aZ)) with
    // t = π/(2√2 a) equals (−i)W per qubit.
    void w_all_pulse(LayerCategory cat) {
        AppliedLayer l;
        l.t = kPi / (2 * std::sqrt(2.0) * a);
        l.c = a;
        l.v_mask = mask_all(n);
        l.x_mask = mask_all(n);
        sched.push(l, cat);
        phase += n * kPi / 2;
    }
};

// Bit masks of the complement trick: e^{+iθ·P} with θ = kπ/8 equals
// (−1)·exp(-i(8−k)π/8·P) for k ≠ 0, and the (8−k) part splits into
// {π/2, π/4, π/8} bit sublayers.
struct BitSplit {
    std::array<EdgeList, 3> edge_bits;  // weight 4, 2, 1
    int flipped_edges = 0;              // edges picking up the (−1)

    void add(const Edge& e, double angle) {
        int k = angle_to_k(angle);
        if (k == 0) return;
        ++flipped_edges;
        int comp = 8 - k;
        if (comp & 4) edge_bits[0].push_back(e);
        if (comp & 2) edge_bits[1].push_back(e);
        if (comp & 1) edge_bits[2].push_back(e);
    }
};

// 6 layers: aux slot (3) + dressed coupling pulse (3), or the Z-rotation
// route (3+3) for C = π/2 where the sinc equation has no root.
void emit_coupling_sublayer(Emitter& em, double coupling, const EdgeList& edges,
                            LayerCategory cat) {
    const int n = em.n;
    if (edges.empty()) {
        em.push_synthesis(identity_triple(n, em.a), cat);
        em.push_synthesis(identity_triple(n, em.a), cat);
        return;
    }
    if (std::abs(coupling - kPi / 2) < 1e-12) {
        em.push_synthesis(identity_triple(n, em.a), cat);
        em.rotation_group(AxisAngle(0.0, 0.0, kPi / 2), edges_to_mask(edges, n), cat);
        em.phase += kPi / 2 * static_cast<double>(edges.size());
        return;
    }
    CouplingSolution sol = find_coupling_params(coupling, em.a);
    Mask uncoupled = mask_complement(edges_to_mask(edges, n));
    em.rotation_group(AxisAngle(kPi / 4, 0.0, normalize_angle_2pi(sol.gamma_aux)), uncoupled, cat);
    em.pure_x_pulse(sol.t_prime, cat);
    em.coupling_pulse(sol.t, sol.b, edges, mask_all(n), cat);
    em.pure_x_pulse(sol.t_prime, cat);
    em.phase += kPi * sol.k * static_cast<double>(edges.size());
}

// 18 layers: the three bit sublayers of one coupling step.
void emit_coupling_layer(Emitter& em, const Walk::Step& step, LayerCategory cat) {
    BitSplit split;
    for (size_t i = 0; i < step.pairs.size(); ++i) split.add(step.pairs[i], step.pair_angles[i]);
    em.phase += kPi * split.flipped_edges;
    emit_coupling_sublayer(em, kPi / 2, split.edge_bits[0], cat);
    emit_coupling_sublayer(em, kPi / 4, split.edge_bits[1], cat);
    emit_coupling_sublayer(em, kPi / 8, split.edge_bits[2], cat);
}

// 9 layers: the three bit sublayers of the initial Z-rotation layer.
void emit_v_layer(Emitter& em, const IqpInstance& inst, const std::vector<int>& placement) {
    std::array<Mask, 3> bits{mask_none(em.n), mask_none(em.n), mask_none(em.n)};
    int flipped = 0;
    for (int p = 0; p < em.n; ++p) {
        int k = angle_to_k(inst.v[static_cast<size_t>(placement[static_cast<size_t>(p)])]);
        if (k == 0) continue;
        ++flipped;
        int comp = 8 - k;
        if (comp & 4) bits[0][static_cast<size_t>(p)] = 1;
        if (comp & 2) bits[1][static_cast<size_t>(p)] = 1;
        if (comp & 1) bits[2][static_cast<size_t>(p)] = 1;
    }
    em.phase += kPi * flipped;
    em.rotation_group(AxisAngle(0.0, 0.0, kPi / 2), bits[0], LayerCategory::SingleQubit);
    em.rotation_group(AxisAngle(0.0, 0.0, kPi / 4), bits[1], LayerCategory::SingleQubit);
    em.rotation_group(AxisAngle(0.0, 0.0, kPi / 8), bits[2], LayerCategory::SingleQubit);
}

// 22 layers: Fig.-6c SWAP with the X(t') pulses folded into the single-qubit
// groups and the three auxiliary rotations combined.
void emit_swap_layer_homogeneous(Emitter& em, const EdgeList& pairs) {
    const int n = em.n;
    CouplingSolution sol = find_coupling_params(kPi / 4, em.a);
    double dress = em.a * sol.t_prime;

    Mask coupled = edges_to_mask(pairs, n);
    Mask uncoupled = mask_complement(coupled);
    Mask outer = mask_none(n);
    for (const Edge& e : pairs) outer[static_cast<size_t>(e.b)] = 1;

    Mat2 w = hadamard_matrix();
    Mat2 zr = AxisAngle(0.0, 0.0, kPi / 4).matrix();
    Mat2 xr = AxisAngle(kPi / 4, 0.0, dress).matrix();
    Mat2 g2 = mat2_mul(xr, zr);                              // Z(π/4) then dress
    Mat2 g34 = mat2_mul(xr, mat2_mul(zr, mat2_mul(w, xr)));  // dress·W·Z(π/4)·dress

    // Uncoupled qubits see the three coupling pulses plus the one bare dress.
    double aux_angle = normalize_angle_2pi(-(3 * em.a * sol.t + dress));
    em.rotation_group(AxisAngle(kPi / 4, 0.0, aux_angle), uncoupled, LayerCategory::Swap);

    auto pulse = [&] {
        em.coupling_pulse(sol.t, sol.b, pairs, mask_all(n), LayerCategory::Swap);
        em.phase += kPi * sol.k * static_cast<double>(pairs.size());
    };
    em.matrix_group(w, outer, LayerCategory::Swap);
    em.matrix_group(g2, coupled, LayerCategory::Swap);
    pulse();
    em.matrix_group(g34, coupled, LayerCategory::Swap);
    pulse();
    em.matrix_group(g34, coupled, LayerCategory::Swap);
    pulse();
    em.pure_x_pulse(sol.t_prime, LayerCategory::Swap);
    em.matrix_group(w, outer, LayerCategory::Swap);

    // Product of the exact Fig.-6c gates equals e^{i3π/4}·SWAP per pair.
    em.phase += -3 * kPi / 4 * static_cast<double>(pairs.size());
}

// 7, 10 or 13 layers: the controlled-Ỹ SWAP construction with the X-field
// gated per sublattice. Leaves one CZ per pair, absorbed by the caller into
// the instance shift.
void emit_swap_layer_alternating(Emitter& em, const EdgeList& pairs, int offset) {
    const int n = em.n;
    double t = kPi / (2 * std::sqrt(2.0) * em.a);
    Mask second_lattice = mask_none(n);  // parity of pair second elements
    Mask first_lattice = mask_none(n);
    for (int q = 0; q < n; ++q)
        (q % 2 == (offset + 1) % 2 ? second_lattice : first_lattice)[static_cast<size_t>(q)] = 1;

    Mask outer = mask_none(n);
    for (const Edge& e : pairs) outer[static_cast<size_t>(e.b)] = 1;
    Mask swapped = edges_to_mask(pairs, n);

    em.matrix_group(hadamard_matrix(), outer, LayerCategory::Swap);
    em.coupling_pulse(t, em.a, pairs, second_lattice, LayerCategory::Swap);
    em.coupling_pulse(t, em.a, pairs, first_lattice, LayerCategory::Swap);
    em.w_all_pulse(LayerCategory::Swap);
    em.coupling_pulse(t, em.a, pairs, second_lattice, LayerCategory::Swap);

    // Unswapped qubits pick up the W pulse plus X drives of their sublattice;
    // one correction group per parity class present.
    Mat2 xr = AxisAngle(kPi / 4, 0.0, em.a * t).matrix();
    Mat2 wp = mat2_mul(Mat2{cplx(0, -1), 0, 0, cplx(0, -1)}, hadamard_matrix());  // (−i)W
    for (int parity : {(offset + 1) % 2, offset % 2}) {
        Mask cls = mask_none(n);
        for (int q = 0; q < n; ++q)
            if (!swapped[static_cast<size_t>(q)] && q % 2 == parity)
                cls[static_cast<size_t>(q)] = 1;
        if (mask_is_none(cls)) continue;
        Mat2 junk = parity == (offset + 1) % 2 ? mat2_mul(xr, mat2_mul(wp, xr))
                                               : mat2_mul(wp, xr);
        em.matrix_group(mat2_dagger(junk), cls, LayerCategory::Swap);
    }
}

SupremacyResult compile_iqp(const IqpInstance& instance, double a, Variant variant) {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    Walk walk = plan_walk(instance);
    const int n = instance.n;
    Emitter em(n, a, variant);

    emit_v_layer(em, instance, walk.initial);
    for (size_t m = 0; m < walk.steps.size(); ++m) {
        emit_coupling_layer(em, walk.steps[m], LayerCategory::Coupling);
        if (variant == Variant::Homogeneous)
            emit_swap_layer_homogeneous(em, walk.steps[m].pairs);
        else
            emit_swap_layer_alternating(em, walk.steps[m].pairs, static_cast<int>(m) % 2);
    }
    em.w_all_pulse(LayerCategory::SingleQubit);

    SupremacyResult result;
    em.sched.global_phase = normalize_angle_2pi(em.phase);
    result.schedule = std::move(em.sched);

    result.shifted = instance;
    if (variant == Variant::Alternating) {
        // Each pair swaps exactly once; absorbing its leftover CZ shifts the
        // pair angle by +π/4 and both vertex angles by −π/4, all mod π.
        auto wrap = [](double x) {
            x = std::fmod(x, kPi);
            if (x < 0) x += kPi;
            return x;
        };
        for (int i = 0; i < n; ++i) {
            result.shifted.v[static_cast<size_t>(i)] =
                wrap(instance.v[static_cast<size_t>(i)] - (n - 1) * kPi / 4);
            for (int j = i + 1; j < n; ++j)
                result.shifted.w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    wrap(instance.w[static_cast<size_t>(i)][static_cast<size_t>(j)] + kPi / 4);
        }
    }

    DepthReport& rep = result.report;
    rep.effective_layers = 2 * n + 2;
    rep.applied_layers = static_cast<int>(result.schedule.layers.size());
    std::vector<std::pair<std::string, int>> cats = {
        {"single_qubit", 0}, {"coupling", 0}, {"aux", 0}, {"swap", 0}};
    for (LayerCategory c : result.schedule.categories)
        for (auto& [name, cnt] : cats)
            if (name == to_string(c)) ++cnt;
    rep.per_category = cats;
    rep.cost_bound = (variant == Variant::Homogeneous ? 40 : 28) * n + 10;
    rep.bound_ok = rep.applied_layers == rep.cost_bound;
    return result;
}

}  // namespace

SupremacyResult compile_homogeneous(const IqpInstance& instance, double a) {
    return compile_iqp(instance, a, Variant::Homogeneous);
}

SupremacyResult compile_alternating(const IqpInstance& instance, double a) {
    return compile_iqp(instance, a, Variant::Alternating);
}

}  // namespace vz
