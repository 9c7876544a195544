#include "vz/single_qubit.hpp"

#include <cmath>

namespace vz {

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace

VUAngles solve_vu_angles(const AxisAngle& axis, double a) {
    if (a <= 0) throw std::invalid_argument("field strength a must be positive");
    double gamma = normalize_angle_2pi(axis.gamma);

    double c = (a / kPi) * std::sqrt((kPi + gamma) * (kPi + gamma) - kPi * kPi);
    double alpha = 0.5 * std::acos(c / std::hypot(a, c));

    auto r3 = axis.axis();
    Vec3 r{r3[0], r3[1], r3[2]};
    Vec3 nu{std::sin(2 * alpha), 0.0, std::cos(2 * alpha)};

    VUAngles out;
    out.alpha = alpha;

    double sep = std::sqrt((r.x - nu.x) * (r.x - nu.x) + r.y * r.y + (r.z - nu.z) * (r.z - nu.z));
    if (gamma == 0.0 || sep < 1e-12) {
        out.psi = kPi / 4;
        out.alpha_prime = 0.0;
        out.v_is_identity = true;
        return out;
    }

    // V's axis bisects U's axis and the target axis within the XZ plane:
    // (r_x - sin2α, cos2α - r_z) ∝ (cos2ψ, sin2ψ).
    double two_psi = std::atan2(nu.z - r.z, r.x - nu.x);
    two_psi = std::fmod(two_psi, kPi);
    if (two_psi < 0) two_psi += kPi;
    if (std::abs(std::sin(two_psi)) < 1e-14)
        throw std::logic_error("single-qubit synthesis: required V axis degenerates to Z");

    Vec3 nv{std::sin(two_psi), 0.0, std::cos(two_psi)};
    double kap = dot(nv, nu);
    Vec3 e1{nu.x - kap * nv.x, nu.y - kap * nv.y, nu.z - kap * nv.z};
    double e1n = std::sqrt(dot(e1, e1));
    e1 = {e1.x / e1n, e1.y / e1n, e1.z / e1n};
    Vec3 e2 = cross(nv, e1);

    // Rotation about nv carrying nu to r; the angle is 2α'.
    double chi = std::atan2(dot(r, e2), dot(r, e1));
    if (chi < 0) chi += 2 * kPi;

    out.psi = two_psi / 2;
    out.alpha_prime = chi / 2;
    return out;
}

SingleQubitSynthesis synth_single_qubit_layer(const AxisAngle& axis, const Mask& v_mask,
                                              double a) {
    const int n = static_cast<int>(v_mask.size());
    if (n == 0) throw std::invalid_argument("empty vertex mask vector");
    VUAngles ang = solve_vu_angles(axis, a);

    SingleQubitSynthesis syn;
    double gamma = normalize_angle_2pi(axis.gamma);
    syn.t = kPi / a;
    syn.c = (a / kPi) * std::sqrt((kPi + gamma) * (kPi + gamma) - kPi * kPi);

    AppliedLayer u_layer;
    u_layer.t = syn.t;
    u_layer.c = mask_is_none(v_mask) ? 0.0 : syn.c;
    u_layer.v_mask = v_mask;
    u_layer.x_mask = mask_all(n);

    if (ang.v_is_identity) {
        // V collapses to the identity: zero-duration bracketing layers. Every
        // qubit then sees exactly e^{-iπX} (v=0) or -g (v=1) in the U layer.
        syn.t_prime = 0.0;
        syn.c_prime = 0.0;
        syn.t_dagger = 0.0;
        syn.phase = normalize_angle_2pi(kPi * n);
        AppliedLayer noop;
        noop.t = 0.0;
        noop.v_mask = mask_none(n);
        noop.x_mask = mask_all(n);
        syn.layers = {noop, u_layer, noop};
        return syn;
    }

    double s2p = std::sin(2 * ang.psi);
    syn.c_prime = a * std::cos(2 * ang.psi) / s2p;
    syn.t_prime = ang.alpha_prime * s2p / a;
    syn.t_dagger = (kPi - ang.alpha_prime) * s2p / a;

    auto v_like = [&](double t) {
        AppliedLayer l;
        l.t = t;
        l.c = syn.c_prime;
        l.v_mask = mask_all(n);
        l.x_mask = mask_all(n);
        return l;
    };

    // V† realized modulo π as a rotation by π−α' (−V†); the sign cancels
    // against the π offset inside U, so the triple needs no net phase.
    syn.phase = 0.0;
    syn.layers = {v_like(syn.t_dagger), u_layer, v_like(syn.t_prime)};
    return syn;
}

SingleQubitSynthesis identity_triple(int n, double a) {
    SingleQubitSynthesis syn;
    syn.t = kPi / a;
    syn.phase = normalize_angle_2pi(3.0 * kPi * n);
    AppliedLayer pulse = AppliedLayer::pure_x(n, kPi / a);
    syn.layers = {pulse, pulse, pulse};
    return syn;
}

}  // namespace vz
