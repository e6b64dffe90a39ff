// Multi-qubit pure states in three equivalent encodings (complex coefficient
// vectors, quaternion pairs/quadruples, octonion pairs), the unitary groups
// that act on them, and deterministic seeded generators for all of them.
//
// The complex coefficient vector is the oracle representation: every other
// action in the library is ultimately checked against apply_local_unitary on
// it. Hypercomplex scalars multiply states from the right, matrices from the
// left.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hqg/hypercomplex.hpp"

namespace hqg {

inline constexpr double kNormalizationTolerance = 1e-8;
inline constexpr double kSp2UnitarityTolerance = 1e-10;

namespace detail {

template <std::size_t N>
inline void normalize_or_reject(std::array<Complex, N>& amps, const char* what) {
    double n2 = 0.0;
    for (const Complex& z : amps) n2 += std::norm(z);
    const double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > kNormalizationTolerance)
        throw std::invalid_argument(std::string(what) + ": amplitudes are not unit norm");
    for (Complex& z : amps) z /= n;
}

template <class V, std::size_t N>
inline void normalize_components_or_reject(std::array<V, N>& comps, const char* what) {
    double n2 = 0.0;
    for (const V& v : comps) n2 += v.norm2();
    const double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > kNormalizationTolerance)
        throw std::invalid_argument(std::string(what) + ": components are not unit norm");
    for (V& v : comps) v = v / n;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

struct OneQubitState {
    std::array<Complex, 2> amp{};  // alpha0, alpha1

    OneQubitState() : amp{Complex{1.0}, Complex{0.0}} {}
    explicit OneQubitState(std::array<Complex, 2> a) : amp(a) {
        detail::normalize_or_reject(amp, "OneQubitState");
    }
    OneQubitState(Complex a0, Complex a1) : OneQubitState(std::array<Complex, 2>{a0, a1}) {}
};

struct TwoQubitState {
    std::array<Complex, 4> amp{};  // alpha, beta, gamma, delta over |00>,|01>,|10>,|11>

    TwoQubitState() : amp{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{0.0}} {}
    explicit TwoQubitState(std::array<Complex, 4> a) : amp(a) {
        detail::normalize_or_reject(amp, "TwoQubitState");
    }
};

struct ThreeQubitState {
    std::array<Complex, 8> amp{};  // t0..t7 over lexicographic |000>..|111>

    ThreeQubitState() { amp[0] = Complex{1.0}; }
    explicit ThreeQubitState(std::array<Complex, 8> a) : amp(a) {
        detail::normalize_or_reject(amp, "ThreeQubitState");
    }
};

struct QuaterbitState {
    std::array<Quaternion, 2> comp{};  // q1, q2

    QuaterbitState() : comp{Quaternion::one(), Quaternion::zero()} {}
    explicit QuaterbitState(std::array<Quaternion, 2> c) : comp(c) {
        detail::normalize_components_or_reject(comp, "QuaterbitState");
    }
    QuaterbitState(const Quaternion& q1, const Quaternion& q2)
        : QuaterbitState(std::array<Quaternion, 2>{q1, q2}) {}
};

struct TwoQuaterbitState {
    std::array<Quaternion, 4> comp{};  // q1..q4

    TwoQuaterbitState() : comp{Quaternion::one(), {}, {}, {}} {}
    explicit TwoQuaterbitState(std::array<Quaternion, 4> c) : comp(c) {
        detail::normalize_components_or_reject(comp, "TwoQuaterbitState");
    }
};

struct OctobitState {
    std::array<Octonion, 2> comp{};  // o1, o2

    OctobitState() : comp{Octonion::one(), Octonion::zero()} {}
    explicit OctobitState(std::array<Octonion, 2> c) : comp(c) {
        detail::normalize_components_or_reject(comp, "OctobitState");
    }
    OctobitState(const Octonion& o1, const Octonion& o2)
        : OctobitState(std::array<Octonion, 2>{o1, o2}) {}
};

// ---------------------------------------------------------------------------
// Unitary groups
// ---------------------------------------------------------------------------

// SU(2) element stored as the parameter pair of [[a, b], [-conj(b), conj(a)]].
struct SU2Params {
    Complex a{1.0};
    Complex b{0.0};

    SU2Params() = default;
    SU2Params(Complex a_, Complex b_) : a(a_), b(b_) {
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        if (std::abs(n - 1.0) > kNormalizationTolerance)
            throw std::invalid_argument("SU2Params: |a|^2 + |b|^2 != 1");
        a /= n;
        b /= n;
    }

    static SU2Params identity() { return {}; }

    std::array<std::array<Complex, 2>, 2> matrix() const {
        return {{{a, b}, {-std::conj(b), std::conj(a)}}};
    }
};

struct LocalUnitary {
    std::vector<SU2Params> factors;  // one SU(2) per qubit

    LocalUnitary() = default;
    explicit LocalUnitary(std::vector<SU2Params> f) : factors(std::move(f)) {
        if (factors.empty() || factors.size() > 3)
            throw std::invalid_argument("LocalUnitary: expected 1..3 factors");
    }

    static LocalUnitary identity(std::size_t qubits) {
        return LocalUnitary(std::vector<SU2Params>(qubits, SU2Params::identity()));
    }

    std::size_t qubits() const { return factors.size(); }
    const SU2Params& factor(std::size_t i) const { return factors.at(i); }
};

// 2x2 quaternionic matrix with A^dagger A = I, validated at construction.
struct Sp2Matrix {
    std::array<std::array<Quaternion, 2>, 2> p{};  // p[row][col]

    Sp2Matrix() : p{{{Quaternion::one(), {}}, {{}, Quaternion::one()}}} {}

    explicit Sp2Matrix(std::array<std::array<Quaternion, 2>, 2> entries) : p(entries) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Quaternion ip = qmul(conj(p[0][static_cast<std::size_t>(i)]),
                                     p[0][static_cast<std::size_t>(j)]) +
                                qmul(conj(p[1][static_cast<std::size_t>(i)]),
                                     p[1][static_cast<std::size_t>(j)]);
                const Quaternion target = (i == j) ? Quaternion::one() : Quaternion::zero();
                const Quaternion d = ip - target;
                if (d.norm() > kSp2UnitarityTolerance)
                    throw std::invalid_argument("Sp2Matrix: A^dagger A != I");
            }
        }
    }

    static Sp2Matrix identity() { return Sp2Matrix{}; }

    // Embedding of a complex-entried SU(2) factor (the A x I local subgroup).
    static Sp2Matrix embed_su2(const SU2Params& u) {
        return Sp2Matrix{{{{Quaternion::from_complex(u.a), Quaternion::from_complex(u.b)},
                           {Quaternion::from_complex(-std::conj(u.b)),
                            Quaternion::from_complex(std::conj(u.a))}}}};
    }
};

enum class Partition { q1_23, q2_13, q3_12 };

inline constexpr std::array<Partition, 3> kAllPartitions{Partition::q1_23, Partition::q2_13,
                                                         Partition::q3_12};

// ---------------------------------------------------------------------------
// Quaternification / octonification (bijective re-encodings)
// ---------------------------------------------------------------------------

// q1 = alpha + beta e2, q2 = gamma + delta e2
inline QuaterbitState quaternify2(const TwoQubitState& s) {
    return QuaterbitState{Quaternion::from_complex_pair(s.amp[0], s.amp[1]),
                          Quaternion::from_complex_pair(s.amp[2], s.amp[3])};
}

inline TwoQubitState dequaternify2(const QuaterbitState& s) {
    return TwoQubitState{{s.comp[0].c1(), s.comp[0].c2(), s.comp[1].c1(), s.comp[1].c2()}};
}

// q_i built pairwise from (t0,t1), (t2,t3), (t4,t5), (t6,t7)
inline TwoQuaterbitState quaternify3(const ThreeQubitState& s) {
    std::array<Quaternion, 4> q;
    for (std::size_t i = 0; i < 4; ++i)
        q[i] = Quaternion::from_complex_pair(s.amp[2 * i], s.amp[2 * i + 1]);
    return TwoQuaterbitState{q};
}

inline ThreeQubitState dequaternify3(const TwoQuaterbitState& s) {
    std::array<Complex, 8> t;
    for (std::size_t i = 0; i < 4; ++i) {
        t[2 * i] = s.comp[i].c1();
        t[2 * i + 1] = s.comp[i].c2();
    }
    return ThreeQubitState{t};
}

namespace detail {

// amplitude indices feeding the four complex slots of (o1, o2), per partition
constexpr std::array<std::array<int, 8>, 3> kOctonifySlots{{
    {0, 1, 2, 3, 4, 5, 6, 7},  // 1|23
    {0, 1, 4, 5, 2, 3, 6, 7},  // 2|13
    {0, 2, 4, 6, 1, 3, 5, 7},  // 3|12
}};

}  // namespace detail

inline OctobitState octonify(const ThreeQubitState& s, Partition p = Partition::q1_23) {
    const auto& slots = detail::kOctonifySlots[static_cast<std::size_t>(p)];
    Octonion o1, o2;
    for (int k = 0; k < 4; ++k) {
        o1.set_slot(k, s.amp[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])]);
        o2.set_slot(k, s.amp[static_cast<std::size_t>(slots[static_cast<std::size_t>(k + 4)])]);
    }
    return OctobitState{o1, o2};
}

inline OctobitState octonify(const TwoQuaterbitState& s) {
    return OctobitState{Octonion::from_quaternion_pair(s.comp[0], s.comp[1]),
                        Octonion::from_quaternion_pair(s.comp[2], s.comp[3])};
}

inline ThreeQubitState deoctonify(const OctobitState& s, Partition p = Partition::q1_23) {
    const auto& slots = detail::kOctonifySlots[static_cast<std::size_t>(p)];
    std::array<Complex, 8> t;
    for (int k = 0; k < 4; ++k) {
        t[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] = s.comp[0].slot(k);
        t[static_cast<std::size_t>(slots[static_cast<std::size_t>(k + 4)])] = s.comp[1].slot(k);
    }
    return ThreeQubitState{t};
}

// ---------------------------------------------------------------------------
// Named example states
// ---------------------------------------------------------------------------

inline OneQubitState zero_state() { return OneQubitState{Complex{1.0}, Complex{0.0}}; }
inline OneQubitState one_state() { return OneQubitState{Complex{0.0}, Complex{1.0}}; }
inline OneQubitState plus_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return OneQubitState{Complex{r}, Complex{r}};
}

// (|00> + |11>)/sqrt(2)
inline TwoQubitState bell_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return TwoQubitState{{Complex{r}, Complex{0.0}, Complex{0.0}, Complex{r}}};
}

// (|000> + |111>)/sqrt(2)
inline ThreeQubitState ghz_state() {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<Complex, 8> t{};
    t[0] = Complex{r};
    t[7] = Complex{r};
    return ThreeQubitState{t};
}

// (|001> + |010> + |100>)/sqrt(3)
inline ThreeQubitState w_state() {
    const double r = 1.0 / std::sqrt(3.0);
    std::array<Complex, 8> t{};
    t[1] = Complex{r};
    t[2] = Complex{r};
    t[4] = Complex{r};
    return ThreeQubitState{t};
}

// ---------------------------------------------------------------------------
// Hypercomplex images of SU(2)
// ---------------------------------------------------------------------------

// a - conj(b) e2
inline Quaternion su2_to_quaternion(const SU2Params& u) {
    return Quaternion::from_complex_pair(u.a, -std::conj(u.b));
}

// a - conj(b) e4
inline Octonion su2_to_octonion(const SU2Params& u) {
    return Octonion::from_quaternion_pair(Quaternion::from_complex(u.a),
                                          Quaternion::from_complex(-std::conj(u.b)));
}

// ---------------------------------------------------------------------------
// Oracle: direct tensor-product action on complex coefficients
// ---------------------------------------------------------------------------

namespace detail {

// Applies one SU(2) factor along the qubit axis with the given stride.
template <std::size_t N>
inline void apply_factor(std::array<Complex, N>& amps, const SU2Params& u, std::size_t stride) {
    const auto m = u.matrix();
    for (std::size_t base = 0; base < N; ++base) {
        if (base & stride) continue;
        const Complex lo = amps[base];
        const Complex hi = amps[base | stride];
        amps[base] = m[0][0] * lo + m[0][1] * hi;
        amps[base | stride] = m[1][0] * lo + m[1][1] * hi;
    }
}

}  // namespace detail

inline OneQubitState apply_local_unitary(const OneQubitState& s, const LocalUnitary& u) {
    if (u.qubits() != 1) throw std::invalid_argument("apply_local_unitary: expected 1 factor");
    auto amps = s.amp;
    detail::apply_factor(amps, u.factor(0), 1);
    return OneQubitState{amps};
}

inline TwoQubitState apply_local_unitary(const TwoQubitState& s, const LocalUnitary& u) {
    if (u.qubits() != 2) throw std::invalid_argument("apply_local_unitary: expected 2 factors");
    auto amps = s.amp;
    detail::apply_factor(amps, u.factor(0), 2);
    detail::apply_factor(amps, u.factor(1), 1);
    return TwoQubitState{amps};
}

inline ThreeQubitState apply_local_unitary(const ThreeQubitState& s, const LocalUnitary& u) {
    if (u.qubits() != 3) throw std::invalid_argument("apply_local_unitary: expected 3 factors");
    auto amps = s.amp;
    detail::apply_factor(amps, u.factor(0), 4);
    detail::apply_factor(amps, u.factor(1), 2);
    detail::apply_factor(amps, u.factor(2), 1);
    return ThreeQubitState{amps};
}

// ---------------------------------------------------------------------------
// Right-module actions on quaterbits
// ---------------------------------------------------------------------------

// A |psi>_q A'^(q): left complex matrix action, right scalar multiplication.
inline QuaterbitState apply_qb(const QuaterbitState& s, const LocalUnitary& u) {
    if (u.qubits() != 2) throw std::invalid_argument("apply_qb: expected 2 factors");
    const auto m = u.factor(0).matrix();
    const Quaternion aq = su2_to_quaternion(u.factor(1));
    std::array<Quaternion, 2> out;
    for (std::size_t i = 0; i < 2; ++i) {
        const Quaternion mixed =
            cmul_left(m[i][0], s.comp[0]) + cmul_left(m[i][1], s.comp[1]);
        out[i] = qmul(mixed, aq);
    }
    return QuaterbitState{out};
}

// (A1 x A2) [ |psi>_q A3^(q) ]
inline TwoQuaterbitState apply_qb(const TwoQuaterbitState& s, const LocalUnitary& u) {
    if (u.qubits() != 3) throw std::invalid_argument("apply_qb: expected 3 factors");
    const Quaternion a3 = su2_to_quaternion(u.factor(2));
    std::array<Quaternion, 4> rightmul;
    for (std::size_t i = 0; i < 4; ++i) rightmul[i] = qmul(s.comp[i], a3);

    const auto m1 = u.factor(0).matrix();
    const auto m2 = u.factor(1).matrix();
    std::array<Quaternion, 4> out;
    for (std::size_t r = 0; r < 4; ++r) {
        Quaternion acc;
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex coeff = m1[r / 2][c / 2] * m2[r % 2][c % 2];
            acc = acc + cmul_left(coeff, rightmul[c]);
        }
        out[r] = acc;
    }
    return TwoQuaterbitState{out};
}

// ---------------------------------------------------------------------------
// Local unitary action on octobits (partition 1|23 encoding)
// ---------------------------------------------------------------------------

// The third factor acts by right quaternion multiplication on each e4 half of
// each component; the middle and first factors act by complex-linear mixing.
// A whole-octonion product with an embedded scalar is not complex-linear on
// the e4 half (the scalar crosses e4 conjugated), so the mixing is carried out
// on the quaternion halves.
inline OctobitState apply_ob(const OctobitState& s, const LocalUnitary& u) {
    if (u.qubits() != 3) throw std::invalid_argument("apply_ob: expected 3 factors");
    const Quaternion a3 = su2_to_quaternion(u.factor(2));

    // halves[i][h]: e4-half h of component i, after the third-factor action
    std::array<std::array<Quaternion, 2>, 2> halves;
    for (std::size_t i = 0; i < 2; ++i)
        halves[i] = {qmul(s.comp[i].h1(), a3), qmul(s.comp[i].h2(), a3)};

    const auto m2 = u.factor(1).matrix();
    std::array<std::array<Quaternion, 2>, 2> mixed;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t h = 0; h < 2; ++h)
            mixed[i][h] = cmul_left(m2[h][0], halves[i][0]) + cmul_left(m2[h][1], halves[i][1]);

    const auto m1 = u.factor(0).matrix();
    std::array<Octonion, 2> out;
    for (std::size_t i = 0; i < 2; ++i) {
        std::array<Quaternion, 2> comp;
        for (std::size_t h = 0; h < 2; ++h)
            comp[h] = cmul_left(m1[i][0], mixed[0][h]) + cmul_left(m1[i][1], mixed[1][h]);
        out[i] = Octonion::from_quaternion_pair(comp[0], comp[1]);
    }
    return OctobitState{out};
}

// ---------------------------------------------------------------------------
// Global Sp(2) action
// ---------------------------------------------------------------------------

inline QuaterbitState apply_sp2(const QuaterbitState& s, const Sp2Matrix& m) {
    std::array<Quaternion, 2> out;
    for (std::size_t i = 0; i < 2; ++i)
        out[i] = qmul(m.p[i][0], s.comp[0]) + qmul(m.p[i][1], s.comp[1]);
    return QuaterbitState{out};
}

// ---------------------------------------------------------------------------
// Deterministic seeded generators
// ---------------------------------------------------------------------------

// Explicit-seed stream; normals via Box-Muller over 53-bit uniforms so the
// sequence is identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        has_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    Complex normal_complex() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

namespace detail {

template <std::size_t N>
inline std::array<Complex, N> random_amplitudes(Rng& rng) {
    std::array<Complex, N> a;
    double n2 = 0.0;
    for (Complex& z : a) {
        z = rng.normal_complex();
        n2 += std::norm(z);
    }
    const double n = std::sqrt(n2);
    for (Complex& z : a) z /= n;
    return a;
}

}  // namespace detail

inline OneQubitState random_state1(Rng& rng) {
    return OneQubitState{detail::random_amplitudes<2>(rng)};
}
inline TwoQubitState random_state2(Rng& rng) {
    return TwoQubitState{detail::random_amplitudes<4>(rng)};
}
inline ThreeQubitState random_state3(Rng& rng) {
    return ThreeQubitState{detail::random_amplitudes<8>(rng)};
}

inline SU2Params random_su2(Rng& rng) {
    const Complex a = rng.normal_complex();
    const Complex b = rng.normal_complex();
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return SU2Params{a / n, b / n};
}

inline LocalUnitary random_local_unitary(Rng& rng, std::size_t qubits) {
    std::vector<SU2Params> f;
    f.reserve(qubits);
    for (std::size_t i = 0; i < qubits; ++i) f.push_back(random_su2(rng));
    return LocalUnitary{std::move(f)};
}

inline Quaternion random_quaternion(Rng& rng) {
    return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

// Gram-Schmidt over quaternionic columns with the right-module inner product
// <u, v> = conj(u1) v1 + conj(u2) v2 (coefficients multiply from the right).
inline Sp2Matrix random_sp2(Rng& rng) {
    std::array<std::array<Quaternion, 2>, 2> cols;  // cols[j][row]
    for (std::size_t j = 0; j < 2; ++j) {
        std::array<Quaternion, 2> v{random_quaternion(rng), random_quaternion(rng)};
        for (std::size_t k = 0; k < j; ++k) {
            const Quaternion ip =
                qmul(conj(cols[k][0]), v[0]) + qmul(conj(cols[k][1]), v[1]);
            v[0] = v[0] - qmul(cols[k][0], ip);
            v[1] = v[1] - qmul(cols[k][1], ip);
        }
        const double n = std::sqrt(v[0].norm2() + v[1].norm2());
        cols[j] = {v[0] / n, v[1] / n};
    }
    return Sp2Matrix{{{{cols[0][0], cols[1][0]}, {cols[0][1], cols[1][1]}}}};
}

// Seed-taking conveniences (deterministic per seed).
inline OneQubitState random_state1(std::uint64_t seed) { Rng r(seed); return random_state1(r); }
inline TwoQubitState random_state2(std::uint64_t seed) { Rng r(seed); return random_state2(r); }
inline ThreeQubitState random_state3(std::uint64_t seed) { Rng r(seed); return random_state3(r); }
inline SU2Params random_su2(std::uint64_t seed) { Rng r(seed); return random_su2(r); }
inline Sp2Matrix random_sp2(std::uint64_t seed) { Rng r(seed); return random_sp2(r); }

}  // namespace hqg
