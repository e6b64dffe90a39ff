// Fixed-size hypercomplex arithmetic: complex, quaternion and octonion values
// over double coordinates, with the conjugation/tilde/norm/inverse maps and the
// structure-constant multiplication table used across the library.
//
// Conventions:
//   - Complex numbers embed on the (e0, e1) axis of either algebra.
//   - A quaternion is z1 + z2*e2 with complex z1, z2.
//   - An octonion is q1 + q2*e4 with quaternion halves q1, q2, equivalently
//     four complex slots z0 + z1*e2 + (z2 + z3*e2)*e4.
//   - Basis products follow the totally antisymmetric structure constants
//     f_ijk = +1 for ijk in {123, 145, 246, 347, 617, 725, 536}.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace hqg {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Quaternion
// ---------------------------------------------------------------------------

struct Quaternion {
    std::array<double, 4> x{};  // coordinates over e0..e3

    constexpr Quaternion() = default;
    constexpr Quaternion(double x0, double x1, double x2, double x3) : x{x0, x1, x2, x3} {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit(int i) {
        Quaternion q;
        q.x[static_cast<std::size_t>(i)] = 1.0;
        return q;
    }

    // q = z1 + z2*e2
    static Quaternion from_complex_pair(Complex z1, Complex z2) {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }
    static Quaternion from_complex(Complex z) { return from_complex_pair(z, Complex{0.0}); }

    Complex c1() const { return {x[0], x[1]}; }
    Complex c2() const { return {x[2], x[3]}; }

    double norm2() const { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }
    double norm() const { return std::sqrt(norm2()); }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.x[0] + b.x[0], a.x[1] + b.x[1], a.x[2] + b.x[2], a.x[3] + b.x[3]};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.x[0] - b.x[0], a.x[1] - b.x[1], a.x[2] - b.x[2], a.x[3] - b.x[3]};
    }
    friend constexpr Quaternion operator-(const Quaternion& a) {
        return {-a.x[0], -a.x[1], -a.x[2], -a.x[3]};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) {
        return {s * a.x[0], s * a.x[1], s * a.x[2], s * a.x[3]};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
    friend constexpr Quaternion operator/(const Quaternion& a, double s) { return (1.0 / s) * a; }
};

// Hamilton product; e1*e2 = e3, e2*e3 = e1, e3*e1 = e2.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.x[0] * b.x[0] - a.x[1] * b.x[1] - a.x[2] * b.x[2] - a.x[3] * b.x[3],
            a.x[0] * b.x[1] + a.x[1] * b.x[0] + a.x[2] * b.x[3] - a.x[3] * b.x[2],
            a.x[0] * b.x[2] - a.x[1] * b.x[3] + a.x[2] * b.x[0] + a.x[3] * b.x[1],
            a.x[0] * b.x[3] + a.x[1] * b.x[2] - a.x[2] * b.x[1] + a.x[3] * b.x[0]};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.x[0], -q.x[1], -q.x[2], -q.x[3]}; }

inline double real_part(const Quaternion& q) { return q.x[0]; }

// Unique inverse conj(q)/|q|^2; zero input is a division-by-zero condition.
inline Quaternion inv(const Quaternion& q) {
    const double n2 = q.norm2();
    if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
    return conj(q) / n2;
}

// ---------------------------------------------------------------------------
// Structure constants: signed basis-product map e_i * e_j -> sign * e_k
// ---------------------------------------------------------------------------

struct StructureConstants {
    std::array<std::array<int, 8>, 8> sign{};   // -1, 0, +1
    std::array<std::array<int, 8>, 8> index{};  // target basis index k

    // f_ijk for nonzero i, j, k; 0 when the triple is not in the table
    int f(int i, int j, int k) const {
        if (i == 0 || j == 0 || k == 0 || i == j) return 0;
        return index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == k
                   ? sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                   : 0;
    }
};

namespace detail {

constexpr StructureConstants make_structure_constants() {
    StructureConstants t{};
    for (int i = 0; i < 8; ++i) {
        t.sign[0][static_cast<std::size_t>(i)] = 1;
        t.index[0][static_cast<std::size_t>(i)] = i;
        t.sign[static_cast<std::size_t>(i)][0] = 1;
        t.index[static_cast<std::size_t>(i)][0] = i;
    }
    for (int i = 1; i < 8; ++i) {
        t.sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
        t.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    }
    constexpr int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                   {6, 1, 7}, {7, 2, 5}, {5, 3, 6}};
    for (const auto& tr : triples) {
        const int perms[3][3] = {{tr[0], tr[1], tr[2]}, {tr[1], tr[2], tr[0]}, {tr[2], tr[0], tr[1]}};
        for (const auto& p : perms) {
            t.sign[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] = 1;
            t.index[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] = p[2];
            t.sign[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] = -1;
            t.index[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] = p[2];
        }
    }
    return t;
}

inline constexpr StructureConstants kStructureConstants = make_structure_constants();

}  // namespace detail

inline const StructureConstants& structure_constants() { return detail::kStructureConstants; }

// ---------------------------------------------------------------------------
// Octonion
// ---------------------------------------------------------------------------

struct Octonion {
    std::array<double, 8> x{};  // coordinates over e0..e7

    constexpr Octonion() = default;
    constexpr Octonion(double x0, double x1, double x2, double x3, double x4, double x5,
                       double x6, double x7)
        : x{x0, x1, x2, x3, x4, x5, x6, x7} {}

    static constexpr Octonion zero() { return {}; }
    static constexpr Octonion one() { return {1.0, 0, 0, 0, 0, 0, 0, 0}; }
    static constexpr Octonion unit(int i) {
        Octonion o;
        o.x[static_cast<std::size_t>(i)] = 1.0;
        return o;
    }

    // o = q1 + q2*e4; the halves occupy coordinates x0..x3 and x4..x7
    static constexpr Octonion from_quaternion_pair(const Quaternion& q1, const Quaternion& q2) {
        return {q1.x[0], q1.x[1], q1.x[2], q1.x[3], q2.x[0], q2.x[1], q2.x[2], q2.x[3]};
    }
    static Octonion from_complex(Complex z) {
        Octonion o;
        o.x[0] = z.real();
        o.x[1] = z.imag();
        return o;
    }
    static constexpr Octonion from_quaternion(const Quaternion& q) {
        return from_quaternion_pair(q, Quaternion::zero());
    }

    constexpr Quaternion h1() const { return {x[0], x[1], x[2], x[3]}; }
    constexpr Quaternion h2() const { return {x[4], x[5], x[6], x[7]}; }

    // complex slot k of z0 + z1*e2 + (z2 + z3*e2)*e4
    Complex slot(int k) const {
        return {x[static_cast<std::size_t>(2 * k)], x[static_cast<std::size_t>(2 * k + 1)]};
    }
    void set_slot(int k, Complex z) {
        x[static_cast<std::size_t>(2 * k)] = z.real();
        x[static_cast<std::size_t>(2 * k + 1)] = z.imag();
    }

    double norm2() const {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    friend constexpr Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.x[i] = a.x[i] + b.x[i];
        return r;
    }
    friend constexpr Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.x[i] = a.x[i] - b.x[i];
        return r;
    }
    friend constexpr Octonion operator-(const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.x[i] = -a.x[i];
        return r;
    }
    friend constexpr Octonion operator*(double s, const Octonion& a) {
        Octonion r;
        for (std::size_t i = 0; i < 8; ++i) r.x[i] = s * a.x[i];
        return r;
    }
    friend constexpr Octonion operator*(const Octonion& a, double s) { return s * a; }
    friend constexpr Octonion operator/(const Octonion& a, double s) { return (1.0 / s) * a; }
};

// Bilinear product generated from the structure-constant table.
constexpr Octonion omul(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.x[i] == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            const int s = detail::kStructureConstants.sign[i][j];
            const int k = detail::kStructureConstants.index[i][j];
            r.x[static_cast<std::size_t>(k)] += s * a.x[i] * b.x[j];
        }
    }
    return r;
}

constexpr Octonion conj(const Octonion& o) {
    return {o.x[0], -o.x[1], -o.x[2], -o.x[3], -o.x[4], -o.x[5], -o.x[6], -o.x[7]};
}

// The involution negating the e7 coordinate only.
constexpr Octonion otilde(const Octonion& o) {
    return {o.x[0], o.x[1], o.x[2], o.x[3], o.x[4], o.x[5], o.x[6], -o.x[7]};
}

inline Octonion inv(const Octonion& o) {
    const double n2 = o.norm2();
    if (n2 == 0.0) throw std::domain_error("octonion inverse of zero");
    return conj(o) / n2;
}

// Left/right multiplication by an embedded complex scalar. These are plain
// omul calls; named forms keep the (non-commutative) order explicit at call
// sites.
inline Octonion cmul_left(Complex c, const Octonion& o) { return omul(Octonion::from_complex(c), o); }
inline Octonion cmul_right(const Octonion& o, Complex c) { return omul(o, Octonion::from_complex(c)); }
inline Quaternion cmul_left(Complex c, const Quaternion& q) { return qmul(Quaternion::from_complex(c), q); }
inline Quaternion cmul_right(const Quaternion& q, Complex c) { return qmul(q, Quaternion::from_complex(c)); }

}  // namespace hqg
