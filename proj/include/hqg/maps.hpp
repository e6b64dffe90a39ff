// Stereographic projections onto the extended complex / quaternion / octonion
// planes and the Moebius transformations acting on them. The point at infinity
// is a first-class value and all distances go through the chordal metric of
// the one-point compactification.

#pragma once

#include <cmath>
#include <optional>

#include "hqg/hypercomplex.hpp"
#include "hqg/states.hpp"

namespace hqg {

// A second component whose norm falls below this is treated as zero and the
// projection image is the point at infinity.
inline constexpr double kInfinityThreshold = 1e-14;

namespace detail {

inline double norm2_of(const Complex& z) { return std::norm(z); }
inline double norm2_of(const Quaternion& q) { return q.norm2(); }
inline double norm2_of(const Octonion& o) { return o.norm2(); }

inline double dist(const Complex& a, const Complex& b) { return std::abs(a - b); }
inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }
inline double dist(const Octonion& a, const Octonion& b) { return (a - b).norm(); }

}  // namespace detail

template <class V>
struct ExtendedPoint {
    std::optional<V> value;  // empty = the point at infinity

    ExtendedPoint() : value(V{}) {}
    ExtendedPoint(const V& v) : value(v) {}

    static ExtendedPoint infinity() {
        ExtendedPoint p;
        p.value.reset();
        return p;
    }

    bool is_infinity() const { return !value.has_value(); }
    const V& finite() const { return value.value(); }
};

using ExtendedComplex = ExtendedPoint<Complex>;
using ExtendedQuaternion = ExtendedPoint<Quaternion>;
using ExtendedOctonion = ExtendedPoint<Octonion>;

// |x - y| / sqrt((1 + |x|^2)(1 + |y|^2)), extended to infinity by limit.
template <class V>
double chordal_distance(const ExtendedPoint<V>& x, const ExtendedPoint<V>& y) {
    if (x.is_infinity() && y.is_infinity()) return 0.0;
    if (x.is_infinity()) return 1.0 / std::sqrt(1.0 + detail::norm2_of(y.finite()));
    if (y.is_infinity()) return 1.0 / std::sqrt(1.0 + detail::norm2_of(x.finite()));
    return detail::dist(x.finite(), y.finite()) /
           std::sqrt((1.0 + detail::norm2_of(x.finite())) * (1.0 + detail::norm2_of(y.finite())));
}

// ---------------------------------------------------------------------------
// One qubit: extended complex plane
// ---------------------------------------------------------------------------

// alpha0 / alpha1, infinity when alpha1 vanishes
inline ExtendedComplex stereo_c(const OneQubitState& s) {
    if (std::abs(s.amp[1]) < kInfinityThreshold) return ExtendedComplex::infinity();
    return ExtendedComplex{s.amp[0] / s.amp[1]};
}

// z -> (a z + b) / (-conj(b) z + conj(a))
inline ExtendedComplex mobius_c(const SU2Params& u, const ExtendedComplex& z) {
    if (z.is_infinity()) {
        if (std::abs(u.b) < kInfinityThreshold) return ExtendedComplex::infinity();
        return ExtendedComplex{u.a / -std::conj(u.b)};
    }
    const Complex den = -std::conj(u.b) * z.finite() + std::conj(u.a);
    if (std::abs(den) < kInfinityThreshold) return ExtendedComplex::infinity();
    return ExtendedComplex{(u.a * z.finite() + u.b) / den};
}

// ---------------------------------------------------------------------------
// Two qubits: extended quaternion plane
// ---------------------------------------------------------------------------

struct QProjectionComponents {
    Complex schmidt{};      // S
    Complex concurrence{};  // C
    double denom = 0.0;     // |q2|^2; (S + C e2)/denom reconstructs the value when > 0
};

struct QProjection {
    ExtendedQuaternion value;
    QProjectionComponents components;
};

// q1 q2^{-1} together with its (S, C, |q2|^2) decomposition
inline QProjection stereo_q(const QuaterbitState& s) {
    const double d = s.comp[1].norm2();
    const Quaternion num = qmul(s.comp[0], conj(s.comp[1]));  // = S + C e2
    QProjection out;
    out.components.schmidt = num.c1();
    out.components.concurrence = num.c2();
    out.components.denom = d;
    if (d < kInfinityThreshold * kInfinityThreshold) {
        out.value = ExtendedQuaternion::infinity();
    } else {
        out.value = ExtendedQuaternion{num / d};
    }
    return out;
}

// [a q A' + b A'][-conj(b) q A' + conj(a) A']^{-1} for B = A x A', evaluated
// with quaternion products exactly in this bracket form. src_denom is the
// source state's |q2|^2; it scales the transformed component decomposition
// (|q2'|^2 = |denominator bracket|^2 * src_denom).
inline QProjection mobius_q_local(const LocalUnitary& u, const ExtendedQuaternion& q,
                                  double src_denom = 1.0) {
    if (u.qubits() != 2) throw std::invalid_argument("mobius_q_local: expected 2 factors");
    const Complex a = u.factor(0).a;
    const Complex b = u.factor(0).b;
    const Quaternion aq = su2_to_quaternion(u.factor(1));

    QProjection out;
    if (q.is_infinity()) {
        // limit of the quotient as |q| grows; the source denominator is 0
        out.components.denom = std::norm(b) * (1.0 - src_denom);
        if (std::abs(b) < kInfinityThreshold) {
            out.value = ExtendedQuaternion::infinity();
            return out;
        }
        const Quaternion v = qmul(Quaternion::from_complex(a),
                                  inv(Quaternion::from_complex(-std::conj(b))));
        out.value = ExtendedQuaternion{v};
    } else {
        const Quaternion num =
            qmul(qmul(Quaternion::from_complex(a), q.finite()), aq) +
            qmul(Quaternion::from_complex(b), aq);
        const Quaternion den =
            qmul(qmul(Quaternion::from_complex(-std::conj(b)), q.finite()), aq) +
            qmul(Quaternion::from_complex(std::conj(a)), aq);
        const double dn2 = den.norm2();
        out.components.denom = dn2 * src_denom;
        if (dn2 < kInfinityThreshold * kInfinityThreshold) {
            out.value = ExtendedQuaternion::infinity();
            return out;
        }
        out.value = ExtendedQuaternion{qmul(num, inv(den))};
    }
    if (!out.value.is_infinity()) {
        const Quaternion rec = out.value.finite() * out.components.denom;  // S' + C' e2
        out.components.schmidt = rec.c1();
        out.components.concurrence = rec.c2();
    }
    return out;
}

// [p1 q + p2][p3 q + p4]^{-1}
inline ExtendedQuaternion mobius_q_global(const Sp2Matrix& m, const ExtendedQuaternion& q) {
    if (q.is_infinity()) {
        if (m.p[1][0].norm() < kInfinityThreshold) return ExtendedQuaternion::infinity();
        return ExtendedQuaternion{qmul(m.p[0][0], inv(m.p[1][0]))};
    }
    const Quaternion num = qmul(m.p[0][0], q.finite()) + m.p[0][1];
    const Quaternion den = qmul(m.p[1][0], q.finite()) + m.p[1][1];
    if (den.norm2() < kInfinityThreshold * kInfinityThreshold)
        return ExtendedQuaternion::infinity();
    return ExtendedQuaternion{qmul(num, inv(den))};
}

// ---------------------------------------------------------------------------
// Three qubits: extended octonion plane
// ---------------------------------------------------------------------------

struct OProjectionComponents {
    Complex s0{}, s1{}, s2{}, s3{};  // slots of S0 + S1 e2 + (S2 + S3 e2) e4
    double denom = 0.0;              // |o2|^2
};

struct OProjection {
    ExtendedOctonion value;
    OProjectionComponents components;
};

// tilde(o1) tilde(o2)^{-1} with the component decomposition read off the
// numerator product tilde(o1) conj(tilde(o2)). The same product yields the
// components for every partition encoding.
inline OProjection stereo_o(const OctobitState& s) {
    const Octonion t1 = otilde(s.comp[0]);
    const Octonion t2 = otilde(s.comp[1]);
    const double d = t2.norm2();
    const Octonion num = omul(t1, conj(t2));
    OProjection out;
    out.components.s0 = num.slot(0);
    out.components.s1 = num.slot(1);
    out.components.s2 = num.slot(2);
    out.components.s3 = num.slot(3);
    out.components.denom = d;
    if (d < kInfinityThreshold * kInfinityThreshold) {
        out.value = ExtendedOctonion::infinity();
    } else {
        out.value = ExtendedOctonion{num / d};
    }
    return out;
}

// Octonionic Moebius transformation for B = A1 x A2 x A3, evaluated with the
// exact bracket order
//   (a1 o + b1) ([A3 {A2 conj(A2)} conj(A3)]) (-conj(o) b1 + a1)
//   / | -conj(b1) [{o A3} A2] + conj(a1) {A3 A2} |^2 .
// No re-association is performed anywhere.
inline ExtendedOctonion mobius_o(const LocalUnitary& u, const ExtendedOctonion& o) {
    if (u.qubits() != 3) throw std::invalid_argument("mobius_o: expected 3 factors");
    const Complex a1 = u.factor(0).a;
    const Complex b1 = u.factor(0).b;
    const Octonion a2 = su2_to_octonion(u.factor(1));
    const Octonion a3 = Octonion::from_quaternion(su2_to_quaternion(u.factor(2)));
    const Octonion sandwich = omul(omul(a3, omul(a2, conj(a2))), conj(a3));

    if (o.is_infinity()) {
        if (std::abs(b1) < kInfinityThreshold) return ExtendedOctonion::infinity();
        // limit along the real direction
        const Octonion num = omul(omul(Octonion::from_complex(a1), sandwich),
                                  Octonion::from_complex(-b1));
        return ExtendedOctonion{num / std::norm(b1)};
    }

    const Octonion num = omul(
        omul(cmul_left(a1, o.finite()) + Octonion::from_complex(b1), sandwich),
        cmul_right(-conj(o.finite()), b1) + Octonion::from_complex(a1));
    const Octonion den =
        cmul_left(-std::conj(b1), omul(omul(o.finite(), a3), a2)) +
        cmul_left(std::conj(a1), omul(a3, a2));
    const double dn2 = den.norm2();
    if (dn2 < kInfinityThreshold * kInfinityThreshold) return ExtendedOctonion::infinity();
    return ExtendedOctonion{num / dn2};
}

}  // namespace hqg
