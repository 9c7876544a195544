#include "vz/coupling.hpp"

#include <cmath>

namespace vz {

namespace {

constexpr cplx kI(0.0, 1.0);

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

}  // namespace

std::optional<double> solve_sinc(double coupling, int k, double a) {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    if (k < 0) throw std::invalid_argument("offset k must be nonnegative");
    const double d = coupling + k * kPi;
    const double target = sinc(d);
    auto f = [&](double x) { return sinc(std::sqrt(x * x + d * d)) - target; };

    double prev_x = 1e-9;
    double prev_f = f(prev_x);
    for (double x = kSincScanStep; x <= kSincScanMax + 1e-12; x += kSincScanStep) {
        double fx = f(x);
        if (fx == 0.0) return x / (2 * a);
        if (prev_f * fx < 0) {
            double lo = prev_x, hi = x;
            while (hi - lo >= 1e-14) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (f(lo) * fm < 0)
                    hi = mid;
                else
                    lo = mid;
            }
            double root = 0.5 * (lo + hi);
            if (std::abs(f(root)) < kSincResidualTol) return root / (2 * a);
        }
        prev_x = x;
        prev_f = fx;
    }
    return std::nullopt;
}

CouplingSolution find_coupling_params(double coupling, double a) {
    for (int k = 0; k < 4; ++k) {
        auto t = solve_sinc(coupling, k, a);
        if (!t) continue;
        CouplingSolution sol;
        sol.coupling = coupling;
        sol.k = k;
        sol.d = coupling + k * kPi;
        sol.t = *t;
        sol.b = sol.d / sol.t;

        // The pulse equals e^{-iβ(X+X)}·e^{-iD ZZ}·e^{-iβ(X+X)} with
        // cos4β = cosG/cosD, sin4β = 2a·sinG/(Ω cosD); β is free modulo π/2.
        double omega_big = std::hypot(2 * a, sol.b);
        double big_g = sol.t * omega_big;
        double cd = std::cos(sol.d);
        double four_beta =
            std::atan2(2 * a * std::sin(big_g) / (omega_big * cd), std::cos(big_g) / cd);
        sol.beta = std::fmod(four_beta / 4, kPi / 2);
        if (sol.beta < 0) sol.beta += kPi / 2;
        sol.t_prime = (kPi - sol.beta) / a;
        sol.gamma_aux = 2 * sol.beta - a * sol.t;
        return sol;
    }
    throw SynthesisError("no k in {0,1,2,3} admits a sinc root for C = " +
                         std::to_string(coupling) +
                         "; this coupling is outside the solvable band");
}

KakParams kak_params(double a, double b, double t) {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    KakParams p;
    double omega_big = std::hypot(2 * a, b);
    double big_g = t * omega_big;
    p.omega = std::asin(clamp1(b / omega_big * std::sin(big_g)));
    p.s = a * std::sin(big_g) >= 0 ? 1 : -1;
    p.beta = (p.s / 4.0) * std::acos(clamp1(std::cos(big_g) / std::cos(p.omega))) + kPi / 2;
    p.d1 = 0.0;
    p.d2 = 0.5 * (b * t - p.omega);
    p.d3 = 0.5 * (b * t + p.omega);
    return p;
}

Eigen::Matrix4cd magic_basis_q() {
    Eigen::Matrix4cd q;
    double s = 1.0 / std::sqrt(2.0);
    q << s, s * kI, 0, 0,
         0, 0, s, s * kI,
         0, 0, -s, s * kI,
         s, -s * kI, 0, 0;
    return q;
}

MagicBasisReport magic_basis_oracle(double a, double b, double t) {
    // The pair Hamiltonian is exchange symmetric, so the computational-basis
    // matrix is identical in either qubit ordering convention.
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    auto zv = [](int bit) { return bit ? -1.0 : 1.0; };
    for (int i = 0; i < 4; ++i) {
        int b0 = i & 1, b1 = i >> 1;
        h(i, i) = b * zv(b0) * zv(b1);
        h(i ^ 1, i) += a;
        h(i ^ 2, i) += a;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    Eigen::Vector4cd ph = (-kI * t * es.eigenvalues().array()).exp();
    Eigen::Matrix4cd u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();

    MagicBasisReport rep;
    Eigen::Matrix4cd q = magic_basis_q();
    rep.actual = q.adjoint() * u * q;

    double omega_big = std::hypot(2 * a, b);
    double big_g = t * omega_big;
    cplx u11 = std::cos(big_g) - kI * b * std::sin(big_g) / omega_big;
    cplx u14 = 2 * a * std::sin(big_g) / omega_big;
    rep.expected = Eigen::Matrix4cd::Zero();
    rep.expected(0, 0) = u11;
    rep.expected(0, 3) = u14;
    rep.expected(1, 1) = std::exp(-kI * b * t);
    rep.expected(2, 2) = std::exp(kI * b * t);
    rep.expected(3, 0) = -u14;
    rep.expected(3, 3) = std::conj(u11);

    const bool pattern[4][4] = {{true, false, false, true},
                                {false, true, false, false},
                                {false, false, true, false},
                                {true, false, false, true}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            double mag = std::abs(rep.actual(r, c) - rep.expected(r, c));
            if (pattern[r][c])
                rep.max_entry_dev = std::max(rep.max_entry_dev, mag);
            else
                rep.max_sparsity_dev = std::max(rep.max_sparsity_dev, std::abs(rep.actual(r, c)));
        }
    return rep;
}

CouplingSynthesis synth_coupling_layer(double coupling, const EdgeList& edges,
                                       const Graph& graph, double a) {
    if (coupling <= 0 || coupling > kPi + 1e-12)
        throw SynthesisError("coupling strength must lie in (0, π]");
    if (!is_pairwise(edges, graph.n))
        throw SynthesisError("coupling layer mask must be pairwise");
    for (const Edge& e : edges)
        if (!graph.has_edge(e)) throw SynthesisError("coupling edge not in graph");

    const int n = graph.n;
    CouplingSynthesis out;
    out.uncoupled = mask_complement(edges_to_mask(edges, n));
    if (edges.empty()) return out;  // identity

    if (std::abs(coupling - kPi / 2) < 1e-12) {
        // No sinc root exists for D = π/2 + kπ (|sinc| < 1/y beyond the
        // antinode), but e^{-iπ/2 Z_aZ_b} = i·e^{-iπ/2(Z_a+Z_b)} exactly.
        out.z_rotation_route = true;
        Mask touched = edges_to_mask(edges, n);
        auto syn = synth_single_qubit_layer(AxisAngle(0.0, 0.0, kPi / 2), touched, a);
        out.layers.assign(syn.layers.begin(), syn.layers.end());
        out.categories.assign(3, LayerCategory::Coupling);
        out.phase = normalize_angle_2pi(syn.phase + kPi / 2 * static_cast<double>(edges.size()));
        return out;
    }

    CouplingSolution sol = find_coupling_params(coupling, a);
    out.solution = sol;
    out.aux_angle = normalize_angle_2pi(sol.gamma_aux);

    double phase = kPi * sol.k * static_cast<double>(edges.size());  // e^{-iDZZ} = (−1)^k e^{-iCZZ}
    if (!mask_is_none(out.uncoupled)) {
        auto aux = synth_single_qubit_layer(AxisAngle(kPi / 4, 0.0, out.aux_angle),
                                            out.uncoupled, a);
        out.layers.assign(aux.layers.begin(), aux.layers.end());
        out.categories.assign(3, LayerCategory::Aux);
        phase += aux.phase;
    }

    AppliedLayer dress = AppliedLayer::pure_x(n, sol.t_prime);
    AppliedLayer pulse;
    pulse.t = sol.t;
    pulse.b = sol.b;
    pulse.w_edges = edges;
    pulse.v_mask = mask_none(n);
    pulse.x_mask = mask_all(n);

    out.layers.push_back(dress);
    out.layers.push_back(pulse);
    out.layers.push_back(dress);
    out.categories.insert(out.categories.end(), 3, LayerCategory::Coupling);
    out.phase = normalize_angle_2pi(phase);
    return out;
}

std::vector<SincFeasibilityRow> sinc_feasibility_map(double step, double a) {
    if (step <= 0 || step > kPi / 4) throw std::invalid_argument("grid step must be in (0, π/4]");
    std::vector<SincFeasibilityRow> rows;
    for (double c = 0.0; c <= kPi + 1e-12; c += step) {
        SincFeasibilityRow row;
        row.coupling = std::min(c, kPi);
        for (int k = 0; k < 4; ++k) {
            auto t = solve_sinc(row.coupling, k, a);
            row.feasible[static_cast<size_t>(k)] = t.has_value();
            if (t && row.chosen_k < 0) {
                row.chosen_k = k;
                row.t = *t;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace vz
