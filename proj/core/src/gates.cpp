#include "vz/gates.hpp"

#include <cmath>

namespace vz {

namespace {
constexpr cplx kI(0.0, 1.0);
}

Mat2 AxisAngle::matrix() const {
    auto r = axis();
    double c = std::cos(gamma), s = std::sin(gamma);
    // cosγ I - i sinγ (r·σ)
    return {c - kI * s * r[2], -kI * s * (r[0] - kI * r[1]),
            -kI * s * (r[0] + kI * r[1]), c + kI * s * r[2]};
}

Mat2 mat2_mul(const Mat2& l, const Mat2& r) {
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

Mat2 mat2_dagger(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

PhasedRotation decompose_u2(const Mat2& u) {
    cplx det = u[0] * u[3] - u[1] * u[2];
    double delta = 0.5 * std::arg(det);
    cplx inv = std::exp(-kI * delta);
    Mat2 r{u[0] * inv, u[1] * inv, u[2] * inv, u[3] * inv};

    // r = cosγ I - i sinγ n·σ with real n; fix the sign ambiguity of δ so that
    // the extracted sinγ is nonnegative.
    double cg = 0.5 * (r[0] + r[3]).real();
    cg = std::min(1.0, std::max(-1.0, cg));
    double gamma = std::acos(cg);
    double sg = std::sin(gamma);

    std::array<double, 3> n{0.0, 0.0, 1.0};
    if (sg > 1e-12) {
        n[0] = (kI * 0.5 * (r[1] + r[2])).real() / sg;
        n[1] = (0.5 * (r[2] - r[1])).real() / sg;
        n[2] = (kI * 0.5 * (r[0] - r[3])).real() / sg;
        double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        n[0] /= norm;
        n[1] /= norm;
        n[2] /= norm;
    }

    PhasedRotation out;
    out.phase = delta;
    double two_theta = std::acos(std::min(1.0, std::max(-1.0, n[2])));
    double two_phi = std::atan2(n[1], n[0]);
    if (two_phi < 0) two_phi += 2 * kPi;
    out.rotation = AxisAngle(two_theta / 2, two_phi / 2, gamma);
    return out;
}

Mat2 hadamard_matrix() {
    double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Mat2 t_matrix() { return t_axis().matrix(); }

Mask gate_support(const Gate& g, int n) {
    Mask m = mask_none(n);
    auto touch = [&](int q) {
        if (q < 0 || q >= n) throw std::out_of_range("gate target out of range");
        m[static_cast<size_t>(q)] = 1;
    };
    std::visit(
        [&](const auto& gate) {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, Rotation> || std::is_same_v<T, WGate> ||
                          std::is_same_v<T, TGate>) {
                for (int q : gate.targets) touch(q);
            } else if constexpr (std::is_same_v<T, ZZCoupling>) {
                for (const Edge& e : gate.edges) {
                    touch(e.a);
                    touch(e.b);
                }
            } else {
                touch(gate.edge.a);
                touch(gate.edge.b);
            }
        },
        g);
    return m;
}

bool gate_is_z_diagonal(const Gate& g) {
    if (std::holds_alternative<ZZCoupling>(g)) return true;
    if (std::holds_alternative<CZGate>(g)) return true;
    if (std::holds_alternative<TGate>(g)) return true;
    if (const auto* r = std::get_if<Rotation>(&g)) {
        auto ax = r->axis.axis();
        return std::abs(ax[0]) < 1e-15 && std::abs(ax[1]) < 1e-15;
    }
    return false;
}

}  // namespace vz
