#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vz {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Vertex on/off mask, one flag per qubit.
using Mask = std::vector<char>;

// Undirected edge, kept normalized with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}

    bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
    bool operator<(const Edge& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool touches(int v) const { return a == v || b == v; }
};

using EdgeList = std::vector<Edge>;

inline Mask mask_none(int n) { return Mask(static_cast<size_t>(n), 0); }
inline Mask mask_all(int n) { return Mask(static_cast<size_t>(n), 1); }

inline int mask_count(const Mask& m) {
    int c = 0;
    for (char f : m) c += (f != 0);
    return c;
}

inline bool mask_is_all(const Mask& m) { return mask_count(m) == static_cast<int>(m.size()); }
inline bool mask_is_none(const Mask& m) { return mask_count(m) == 0; }

inline std::vector<int> mask_indices(const Mask& m) {
    std::vector<int> out;
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) out.push_back(static_cast<int>(i));
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx, int n) {
    Mask m = mask_none(n);
    for (int i : idx) {
        if (i < 0 || i >= n) throw std::out_of_range("qubit index " + std::to_string(i) + " out of range");
        m[static_cast<size_t>(i)] = 1;
    }
    return m;
}

// Qubits touched by a set of edges.
inline Mask edges_to_mask(const EdgeList& edges, int n) {
    Mask m = mask_none(n);
    for (const Edge& e : edges) {
        m[static_cast<size_t>(e.a)] = 1;
        m[static_cast<size_t>(e.b)] = 1;
    }
    return m;
}

inline Mask mask_complement(const Mask& m) {
    Mask out = m;
    for (auto& f : out) f = !f;
    return out;
}

inline double normalize_angle_2pi(double x) {
    x = std::fmod(x, 2.0 * kPi);
    if (x < 0) x += 2.0 * kPi;
    return x;
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vz
