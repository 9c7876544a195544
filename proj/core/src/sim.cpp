#include "vz/sim.hpp"

#include <algorithm>
#include <cmath>

namespace vz {

namespace {

constexpr cplx kI(0.0, 1.0);

using Mat4 = std::array<cplx, 16>;

// exp(-it(ax·X ⊗ I + aj·I ⊗ X ... )) helpers below build blocks directly.

Mat2 exp_single(double t, double ax, double cz) {
    // exp(-it(ax·X + cz·Z))
    double w = std::hypot(ax, cz);
    if (w * t == 0.0) return {1.0, 0.0, 0.0, 1.0};
    double co = std::cos(w * t), si = std::sin(w * t);
    double nx = ax / w, nz = cz / w;
    return {co - kI * si * nz, -kI * si * nx, -kI * si * nx, co + kI * si * nz};
}

Mat4 exp_pair(double t, double xa, double xb, double b, double ca, double cb) {
    // exp(-it(xa·X_a + xb·X_b + b·Z_a Z_b + ca·Z_a + cb·Z_b)),
    // index = (bit_b << 1) | bit_a.
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    auto zval = [](int bit) { return bit ? -1.0 : 1.0; };
    for (int i = 0; i < 4; ++i) {
        int ba = i & 1, bb = i >> 1;
        h(i, i) = b * zval(ba) * zval(bb) + ca * zval(ba) + cb * zval(bb);
        h(i ^ 1, i) += xa;
        h(i ^ 2, i) += xb;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    Eigen::Vector4cd ph = (-kI * t * es.eigenvalues().array()).exp();
    Eigen::Matrix4cd u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[static_cast<size_t>(4 * r + c)] = u(r, c);
    return out;
}

void check_layer(const AppliedLayer& layer, int n) {
    if (static_cast<int>(layer.v_mask.size()) != n ||
        static_cast<int>(layer.x_mask.size()) != n)
        throw std::invalid_argument("layer mask size does not match qubit count");
    for (const Edge& e : layer.w_edges)
        if (e.a < 0 || e.b >= n) throw std::invalid_argument("layer edge out of range");
}

}  // namespace

StateVector StateVector::plus(int n) {
    StateVector s;
    s.n = n;
    s.amps.assign(size_t{1} << n, cplx(std::pow(2.0, -0.5 * n), 0.0));
    return s;
}

StateVector StateVector::basis(int n, uint64_t idx) {
    StateVector s;
    s.n = n;
    s.amps.assign(size_t{1} << n, cplx(0.0, 0.0));
    s.amps[idx] = 1.0;
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const cplx& a : amps) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::apply_1q(int q, const Mat2& m) {
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        cplx a0 = amps[i], a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_2q(int qa, int qb, const std::array<cplx, 16>& m4) {
    const size_t ba = size_t{1} << qa, bb = size_t{1} << qb;
    for (size_t i = 0; i < amps.size(); ++i) {
        if ((i & ba) || (i & bb)) continue;
        size_t idx[4] = {i, i | ba, i | bb, i | ba | bb};
        cplx in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            cplx acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += m4[static_cast<size_t>(4 * r + c)] * in[c];
            amps[idx[r]] = acc;
        }
    }
}

void StateVector::apply_phase(cplx ph) {
    for (cplx& a : amps) a *= ph;
}

void apply_layer(StateVector& state, const AppliedLayer& layer, double a) {
    const int n = state.n;
    check_layer(layer, n);
    if (!is_pairwise(layer.w_edges, n))
        throw std::invalid_argument("applied layer requires a pairwise coupling mask");

    Mask in_pair = edges_to_mask(layer.w_edges, n);
    for (const Edge& e : layer.w_edges) {
        Mat4 blk = exp_pair(layer.t, layer.x_mask[static_cast<size_t>(e.a)] ? a : 0.0,
                            layer.x_mask[static_cast<size_t>(e.b)] ? a : 0.0, layer.b,
                            layer.v_mask[static_cast<size_t>(e.a)] ? layer.c : 0.0,
                            layer.v_mask[static_cast<size_t>(e.b)] ? layer.c : 0.0);
        state.apply_2q(e.a, e.b, blk);
    }
    for (int q = 0; q < n; ++q) {
        if (in_pair[static_cast<size_t>(q)]) continue;
        double ax = layer.x_mask[static_cast<size_t>(q)] ? a : 0.0;
        double cz = layer.v_mask[static_cast<size_t>(q)] ? layer.c : 0.0;
        if (ax == 0.0 && cz == 0.0) continue;
        state.apply_1q(q, exp_single(layer.t, ax, cz));
    }
}

MatX layer_unitary(const AppliedLayer& layer, double a, int n) {
    if (n > kDenseCeiling) throw std::invalid_argument("qubit count above dense ceiling");
    check_layer(layer, n);
    if (!is_pairwise(layer.w_edges, n)) return layer_unitary_dense(layer, a, n);

    const size_t dim = size_t{1} << n;
    MatX u(dim, dim);
    for (size_t col = 0; col < dim; ++col) {
        StateVector s = StateVector::basis(n, col);
        apply_layer(s, layer, a);
        for (size_t row = 0; row < dim; ++row) u(static_cast<Eigen::Index>(row),
                                                  static_cast<Eigen::Index>(col)) = s.amps[row];
    }
    return u;
}

MatX layer_unitary_dense(const AppliedLayer& layer, double a, int n) {
    if (n > kDenseCeiling) throw std::invalid_argument("qubit count above dense ceiling");
    check_layer(layer, n);
    const size_t dim = size_t{1} << n;
    MatX h = MatX::Zero(dim, dim);

    auto zsign = [](size_t s, int q) { return (s >> q) & 1 ? -1.0 : 1.0; };
    for (size_t s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (const Edge& e : layer.w_edges) diag += layer.b * zsign(s, e.a) * zsign(s, e.b);
        for (int q = 0; q < n; ++q)
            if (layer.v_mask[static_cast<size_t>(q)]) diag += layer.c * zsign(s, q);
        h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = diag;
        for (int q = 0; q < n; ++q)
            if (layer.x_mask[static_cast<size_t>(q)])
                h(static_cast<Eigen::Index>(s ^ (size_t{1} << q)),
                  static_cast<Eigen::Index>(s)) += a;
    }
    if (!h.isApprox(h.adjoint(), 1e-12)) throw std::logic_error("layer Hamiltonian not Hermitian");

    Eigen::SelfAdjointEigenSolver<MatX> es(h);
    VecX ph = (-kI * layer.t * es.eigenvalues().array()).exp();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

StateVector run_schedule(const Schedule& schedule, int n) {
    StateVector state = StateVector::plus(n);
    for (const AppliedLayer& l : schedule.layers) {
        apply_layer(state, l, schedule.a);
        if (std::abs(state.norm() - 1.0) > 1e-12)
            throw std::logic_error("schedule evolution lost normalization");
    }
    state.apply_phase(std::exp(kI * schedule.global_phase));
    return state;
}

std::vector<double> output_distribution(const StateVector& state) {
    if (std::abs(state.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("state is not normalized");
    std::vector<double> p(state.amps.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = std::norm(state.amps[i]);
    return p;
}

double tvd(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("distribution length mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < -1e-12 || q[i] < -1e-12)
            throw std::invalid_argument("negative probability");
        acc += std::abs(p[i] - q[i]);
    }
    return 0.5 * acc;
}

double unitary_distance_up_to_phase(const MatX& u, const MatX& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("dimension mismatch");
    cplx tr = (v.adjoint() * u).trace();
    cplx ph = std::abs(tr) > 0 ? std::exp(kI * std::arg(tr)) : cplx(1.0, 0.0);
    MatX diff = u - ph * v;
    return diff.jacobiSvd().singularValues()(0);
}

MatX gate_unitary(const Gate& g, int n) {
    const size_t dim = size_t{1} << n;

    auto from_state_map = [&](auto&& apply) {
        MatX u(dim, dim);
        for (size_t col = 0; col < dim; ++col) {
            StateVector s = StateVector::basis(n, col);
            apply(s);
            for (size_t row = 0; row < dim; ++row)
                u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amps[row];
        }
        return u;
    };

    return std::visit(
        [&](const auto& gate) -> MatX {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, Rotation>) {
                Mat2 m = gate.axis.matrix();
                return from_state_map([&](StateVector& s) {
                    for (int q : gate.targets) s.apply_1q(q, m);
                });
            } else if constexpr (std::is_same_v<T, WGate>) {
                Mat2 m = hadamard_matrix();
                return from_state_map([&](StateVector& s) {
                    for (int q : gate.targets) s.apply_1q(q, m);
                });
            } else if constexpr (std::is_same_v<T, TGate>) {
                Mat2 m = t_matrix();
                return from_state_map([&](StateVector& s) {
                    for (int q : gate.targets) s.apply_1q(q, m);
                });
            } else if constexpr (std::is_same_v<T, ZZCoupling>) {
                MatX u = MatX::Zero(dim, dim);
                auto zsign = [](size_t s, int q) { return (s >> q) & 1 ? -1.0 : 1.0; };
                for (size_t s = 0; s < dim; ++s) {
                    double ang = 0.0;
                    for (const Edge& e : gate.edges)
                        ang += gate.coupling * zsign(s, e.a) * zsign(s, e.b);
                    u(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) =
                        std::exp(-kI * ang);
                }
                return u;
            } else if constexpr (std::is_same_v<T, CZGate>) {
                MatX u = MatX::Identity(dim, dim);
                for (size_t s = 0; s < dim; ++s)
                    if (((s >> gate.edge.a) & 1) && ((s >> gate.edge.b) & 1))
                        u(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = -1.0;
                return u;
            } else {
                // SWAP
                MatX u = MatX::Zero(dim, dim);
                for (size_t s = 0; s < dim; ++s) {
                    size_t ba = (s >> gate.edge.a) & 1, bb = (s >> gate.edge.b) & 1;
                    size_t t = s;
                    t &= ~((size_t{1} << gate.edge.a) | (size_t{1} << gate.edge.b));
                    t |= (bb << gate.edge.a) | (ba << gate.edge.b);
                    u(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) = 1.0;
                }
                return u;
            }
        },
        g);
}

MatX circuit_unitary(const Circuit& circuit, int n) {
    if (n > kDenseCeiling) throw std::invalid_argument("qubit count above dense ceiling");
    const size_t dim = size_t{1} << n;
    MatX u = MatX::Identity(dim, dim);
    for (const auto& layer : circuit.layers)
        for (const Gate& g : layer) u = gate_unitary(g, n) * u;
    return u;
}

MatX schedule_unitary(const Schedule& schedule, int n) {
    if (n > kDenseCeiling) throw std::invalid_argument("qubit count above dense ceiling");
    const size_t dim = size_t{1} << n;
    MatX u = MatX::Identity(dim, dim);
    for (const AppliedLayer& l : schedule.layers) u = layer_unitary(l, schedule.a, n) * u;
    return std::exp(kI * schedule.global_phase) * u;
}

VerificationReport verify_schedule(const Circuit& circuit, const Graph& graph,
                                   const Schedule& schedule, double tol_op, double tol_tvd) {
    (void)graph;
    VerificationReport rep;
    rep.tol_op_distance = tol_op;
    rep.tol_tvd = tol_tvd;
    rep.applied_layers = static_cast<int>(schedule.layers.size());

    std::vector<std::pair<std::string, int>> cats = {
        {"single_qubit", 0}, {"coupling", 0}, {"aux", 0}, {"swap", 0}};
    for (LayerCategory c : schedule.categories)
        for (auto& [name, count] : cats)
            if (name == to_string(c)) ++count;
    rep.per_category = cats;

    MatX target = circuit_unitary(circuit, circuit.n);
    MatX actual = schedule_unitary(schedule, circuit.n);
    rep.op_distance = unitary_distance_up_to_phase(actual, target);

    StateVector target_state = StateVector::plus(circuit.n);
    VecX ts = target * Eigen::Map<const VecX>(target_state.amps.data(),
                                              static_cast<Eigen::Index>(target_state.dim()));
    std::vector<double> pt(target_state.dim());
    for (size_t i = 0; i < pt.size(); ++i) pt[i] = std::norm(ts(static_cast<Eigen::Index>(i)));
    StateVector actual_state = run_schedule(schedule, circuit.n);
    rep.tvd = tvd(output_distribution(actual_state), pt);

    rep.pass = rep.op_distance < tol_op && rep.tvd < tol_tvd;
    return rep;
}

}  // namespace vz
