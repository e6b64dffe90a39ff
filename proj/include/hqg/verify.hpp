// Oracle-grounded verification harness. Every commutative-diagram identity is
// checked against the complex coefficient-vector oracle, every printed
// closed-form claim is measured against the same oracle, and the results are
// collected into a deterministic machine-readable report.
//
// Forced checks (the diagram suite, the separability scan and the
// analytically forced invariances) gate the exit status of the verify
// command. Claims are scientific verdicts: CONFIRMED when the measured error
// stays below the claim tolerance, DEVIATING otherwise. A DEVIATING claim is
// a result, not a failure.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "hqg/dynamics.hpp"
#include "hqg/entanglement.hpp"
#include "hqg/maps.hpp"
#include "hqg/states.hpp"

namespace hqg {

// Source states whose projection denominator falls below this are redrawn
// (and counted); conditioning near the pole would otherwise dominate the
// measured errors.
inline constexpr double kPoleThreshold = 1e-8;

inline constexpr double kTolAlgebraic = 1e-12;
inline constexpr double kTolSingleMap = 1e-10;
inline constexpr double kTolChained = 1e-9;

struct DiagramCheck {
    std::string name;
    int sample_count = 0;
    double max_chordal_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ClaimStatus {
    std::string claim_id;
    std::string location;  // anchor of the claim in the source text
    std::string verdict;   // "CONFIRMED" or "DEVIATING"
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string notes;
};

struct VerificationReport {
    std::vector<DiagramCheck> checks;
    std::vector<ClaimStatus> claims;
    std::uint64_t seed = 0;
    int n = 0;
    long resampled_near_infinity = 0;

    bool all_checks_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

// distinct sub-streams per suite component so each check is deterministic
// in isolation
inline Rng sub_rng(std::uint64_t seed, std::uint64_t tag) {
    return Rng(seed * 0x9E3779B97F4A7C15ULL + tag);
}

inline OneQubitState sample_state1(Rng& rng, long& resampled) {
    for (;;) {
        OneQubitState s = random_state1(rng);
        if (std::norm(s.amp[1]) >= kPoleThreshold) return s;
        ++resampled;
    }
}

inline TwoQubitState sample_state2(Rng& rng, long& resampled) {
    for (;;) {
        TwoQubitState s = random_state2(rng);
        if (std::norm(s.amp[2]) + std::norm(s.amp[3]) >= kPoleThreshold) return s;
        ++resampled;
    }
}

inline ThreeQubitState sample_state3(Rng& rng, long& resampled) {
    for (;;) {
        ThreeQubitState s = random_state3(rng);
        double d = 0.0;
        for (std::size_t i = 4; i < 8; ++i) d += std::norm(s.amp[i]);
        if (d >= kPoleThreshold) return s;
        ++resampled;
    }
}

inline ThreeQubitState sample_product_state(Rng& rng, long& resampled) {
    for (;;) {
        const OneQubitState head = random_state1(rng);
        const TwoQubitState tail = random_state2(rng);
        std::array<Complex, 8> t;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) t[4 * i + j] = head.amp[i] * tail.amp[j];
        ThreeQubitState s{t};
        double d = 0.0;
        for (std::size_t i = 4; i < 8; ++i) d += std::norm(s.amp[i]);
        if (d >= kPoleThreshold) return s;
        ++resampled;
    }
}

inline DiagramCheck make_check(std::string name, int n, double err, double tol) {
    DiagramCheck c;
    c.name = std::move(name);
    c.sample_count = n;
    c.max_chordal_error = err;
    c.tolerance = tol;
    c.pass = err < tol;
    return c;
}

inline ClaimStatus make_claim(std::string id, std::string location, double err, double tol,
                              std::string notes) {
    ClaimStatus s;
    s.claim_id = std::move(id);
    s.location = std::move(location);
    s.max_error = err;
    s.tolerance = tol;
    s.verdict = err < tol ? "CONFIRMED" : "DEVIATING";
    s.notes = std::move(notes);
    return s;
}

inline std::string fmt_err(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// The componentwise right-scalar action written only with whole-octonion
// products: o_i -> A1-mix of [{o_i A3^(q)} A2^(o)]. Kept for the claims
// report; it is not oracle-equivalent.
inline OctobitState right_scalar_action_literal(const OctobitState& s, const LocalUnitary& u) {
    const Octonion a3 = Octonion::from_quaternion(su2_to_quaternion(u.factor(2)));
    const Octonion a2 = su2_to_octonion(u.factor(1));
    const std::array<Octonion, 2> x{omul(omul(s.comp[0], a3), a2),
                                    omul(omul(s.comp[1], a3), a2)};
    const Complex a1 = u.factor(0).a;
    const Complex b1 = u.factor(0).b;
    return OctobitState{cmul_left(a1, x[0]) + cmul_left(b1, x[1]),
                        cmul_left(-std::conj(b1), x[0]) + cmul_left(std::conj(a1), x[1])};
}

inline double state_distance(const OctobitState& a, const OctobitState& b) {
    return std::sqrt((a.comp[0] - b.comp[0]).norm2() + (a.comp[1] - b.comp[1]).norm2());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Diagram checks
// ---------------------------------------------------------------------------

inline DiagramCheck check_diagram_1q(std::uint64_t seed, int n, long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 1);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const OneQubitState s = detail::sample_state1(rng, rs);
        const SU2Params u = random_su2(rng);
        const ExtendedComplex lhs = mobius_c(u, stereo_c(s));
        const ExtendedComplex rhs = stereo_c(apply_local_unitary(s, LocalUnitary{{u}}));
        err = std::max(err, chordal_distance(lhs, rhs));
    }
    if (resampled) *resampled += rs;
    return detail::make_check("diagram_1q", n, err, kTolSingleMap);
}

inline DiagramCheck check_diagram_2q(std::uint64_t seed, int n, long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 2);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const TwoQubitState s = detail::sample_state2(rng, rs);
        const LocalUnitary u = random_local_unitary(rng, 2);
        const QProjection src = stereo_q(quaternify2(s));
        const ExtendedQuaternion p_oracle = stereo_q(quaternify2(apply_local_unitary(s, u))).value;
        const ExtendedQuaternion p_module = stereo_q(apply_qb(quaternify2(s), u)).value;
        const ExtendedQuaternion p_mobius =
            mobius_q_local(u, src.value, src.components.denom).value;
        err = std::max({err, chordal_distance(p_oracle, p_module),
                        chordal_distance(p_oracle, p_mobius),
                        chordal_distance(p_module, p_mobius)});
    }
    if (resampled) *resampled += rs;
    return detail::make_check("diagram_2q", n, err, kTolChained);
}

inline DiagramCheck check_diagram_sp2(std::uint64_t seed, int n, long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 3);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const TwoQubitState s = detail::sample_state2(rng, rs);
        const Sp2Matrix m = random_sp2(rng);
        const QuaterbitState qs = quaternify2(s);
        const ExtendedQuaternion lhs = stereo_q(apply_sp2(qs, m)).value;
        const ExtendedQuaternion rhs = mobius_q_global(m, stereo_q(qs).value);
        err = std::max(err, chordal_distance(lhs, rhs));
    }
    if (resampled) *resampled += rs;
    return detail::make_check("diagram_sp2", n, err, kTolChained);
}

// The three oracle-forced path equalities of the three-qubit diagram. The
// Moebius (F_B) path is measured separately by the claims report, never here.
inline DiagramCheck check_diagram_3q(std::uint64_t seed, int n, long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 4);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const ThreeQubitState s = detail::sample_state3(rng, rs);
        const LocalUnitary u = random_local_unitary(rng, 3);
        const ExtendedOctonion p1 = stereo_o(octonify(apply_local_unitary(s, u))).value;
        const ExtendedOctonion p2 = stereo_o(octonify(apply_qb(quaternify3(s), u))).value;
        const ExtendedOctonion p3 = stereo_o(apply_ob(octonify(s), u)).value;
        err = std::max({err, chordal_distance(p1, p2), chordal_distance(p1, p3),
                        chordal_distance(p2, p3)});
    }
    if (resampled) *resampled += rs;
    return detail::make_check("diagram_3q_forced_paths", n, err, kTolChained);
}

// ---------------------------------------------------------------------------
// Separability scan
// ---------------------------------------------------------------------------

inline ClaimStatus separability_scan(std::uint64_t seed, int n, long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 5);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const ThreeQubitState s = detail::sample_product_state(rng, rs);
        const OProjectionComponents c = stereo_o(octonify(s)).components;
        err = std::max({err, std::abs(c.s1), std::abs(c.s2), std::abs(c.s3),
                        concurrence3(s, Partition::q1_23)});
    }
    if (resampled) *resampled += rs;
    const OProjectionComponents ghz = stereo_o(octonify(ghz_state())).components;
    std::string notes = "product states project into the complex plane; GHZ negative control"
                        " has S3 = " + detail::fmt_err(ghz.s3.real());
    return detail::make_claim("separability-plane", "sec. 4.1, separable states project to the"
                              " complex plane", err, kTolSingleMap, std::move(notes));
}

// ---------------------------------------------------------------------------
// Invariance scan
// ---------------------------------------------------------------------------

inline std::vector<ClaimStatus> invariance_scan(std::uint64_t seed, int n,
                                                long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 6);
    long rs = 0;
    // drift[group][component]; groups: first, middle, third, full
    double drift[4][3] = {};
    for (int i = 0; i < n; ++i) {
        const ThreeQubitState s = detail::sample_state3(rng, rs);
        const SU2Params a1 = random_su2(rng);
        const SU2Params a2 = random_su2(rng);
        const SU2Params a3 = random_su2(rng);
        const SU2Params id = SU2Params::identity();
        const LocalUnitary groups[4] = {
            LocalUnitary{{a1, id, id}}, LocalUnitary{{id, a2, id}},
            LocalUnitary{{id, id, a3}}, LocalUnitary{{a1, a2, a3}}};
        const OProjectionComponents base = stereo_o(octonify(s)).components;
        const Complex base_s[3] = {base.s1, base.s2, base.s3};
        for (int g = 0; g < 4; ++g) {
            const OProjectionComponents c =
                stereo_o(octonify(apply_local_unitary(s, groups[g]))).components;
            const Complex cs[3] = {c.s1, c.s2, c.s3};
            for (int k = 0; k < 3; ++k)
                drift[g][k] = std::max(drift[g][k], std::abs(cs[k] - base_s[k]));
        }
    }
    if (resampled) *resampled += rs;

    const char* group_name[4] = {"first-factor", "middle-factor", "third-factor", "full-group"};
    const char* group_anchor[4] = {"A1 x I x I", "I x A2 x I", "I x I x A3",
                                   "A1 x A2 x A3"};
    // analytically forced: all S_i under the first factor, S1 under the third,
    // S2 under the middle
    const bool forced[4][3] = {{true, true, true}, {false, true, false},
                               {true, false, false}, {false, false, false}};
    std::vector<ClaimStatus> out;
    for (int g = 0; g < 4; ++g) {
        for (int k = 0; k < 3; ++k) {
            std::string id = "s" + std::to_string(k + 1) + "-invariance-" + group_name[g];
            std::string loc = std::string("sec. 4 / App. B (c3), S'_i = S_i under ") +
                              group_anchor[g];
            std::string notes = forced[g][k] ? "analytically forced case" : "measured case";
            out.push_back(detail::make_claim(std::move(id), std::move(loc), drift[g][k],
                                             kTolAlgebraic, std::move(notes)));
        }
    }
    return out;
}

// Max drift over the analytically forced invariance cases; gates the verify
// exit status.
inline DiagramCheck check_invariance_forced(std::uint64_t seed, int n,
                                            long* resampled = nullptr) {
    const auto claims = invariance_scan(seed, n, resampled);
    double err = 0.0;
    for (const auto& c : claims)
        if (c.notes == "analytically forced case") err = std::max(err, c.max_error);
    return detail::make_check("invariance_forced_subgroups", n, err, kTolAlgebraic);
}

inline DiagramCheck check_concurrence_invariance(std::uint64_t seed, int n,
                                                 long* resampled = nullptr) {
    Rng rng = detail::sub_rng(seed, 7);
    long rs = 0;
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const ThreeQubitState s = detail::sample_state3(rng, rs);
        const LocalUnitary u = random_local_unitary(rng, 3);
        const ThreeQubitState sp = apply_local_unitary(s, u);
        for (Partition p : kAllPartitions)
            err = std::max(err, std::abs(concurrence3(s, p) - concurrence3(sp, p)));
        const TwoQubitState s2 = detail::sample_state2(rng, rs);
        const LocalUnitary u2 = random_local_unitary(rng, 2);
        err = std::max(err, std::abs(concurrence2(s2) - concurrence2(apply_local_unitary(s2, u2))));
    }
    if (resampled) *resampled += rs;
    return detail::make_check("concurrence_invariance", n, err, kTolAlgebraic);
}

inline DiagramCheck check_separability(std::uint64_t seed, int n, long* resampled = nullptr) {
    const ClaimStatus c = separability_scan(seed, n, resampled);
    return detail::make_check("separability_plane", n, c.max_error, c.tolerance);
}

// ---------------------------------------------------------------------------
// Claims report
// ---------------------------------------------------------------------------

inline std::vector<ClaimStatus> claims_report(std::uint64_t seed, int n,
                                              long* resampled = nullptr) {
    std::vector<ClaimStatus> out;
    long rs = 0;
    const SU2Params id = SU2Params::identity();

    // --- Eq. (21): transformed Schmidt term, verbatim |a|^2 / corrected a^2 ---
    {
        Rng rng = detail::sub_rng(seed, 10);
        double err_verbatim = 0.0, err_squared = 0.0, err_c = 0.0;
        for (int i = 0; i < n; ++i) {
            const TwoQubitState s = random_state2(rng);
            const LocalUnitary u = random_local_unitary(rng, 2);
            const Complex a = u.factor(0).a, b = u.factor(0).b;
            const TwoQubitState sp = apply_local_unitary(s, u);
            const Complex S = schmidt_term(s), Sp = schmidt_term(sp);
            const double q1sq = std::norm(s.amp[0]) + std::norm(s.amp[1]);
            const double q2sq = std::norm(s.amp[2]) + std::norm(s.amp[3]);
            const Complex verbatim =
                (q2sq - q1sq) * a * b + S * std::norm(a) - std::conj(S) * std::norm(b);
            const Complex squared = (q2sq - q1sq) * a * b + S * a * a - std::conj(S) * b * b;
            err_verbatim = std::max(err_verbatim, std::abs(verbatim - Sp));
            err_squared = std::max(err_squared, std::abs(squared - Sp));
            const Complex C = s.amp[1] * s.amp[2] - s.amp[0] * s.amp[3];
            const Complex Cp = sp.amp[1] * sp.amp[2] - sp.amp[0] * sp.amp[3];
            err_c = std::max(err_c, std::abs(C - Cp));
        }
        out.push_back(detail::make_claim(
            "eq21-schmidt-transform-verbatim", "Eq. (21), S' = (|q2|^2-|q1|^2)ab + S|a|^2 - conj(S)|b|^2",
            err_verbatim, kTolAlgebraic,
            "printed moduli |a|^2, |b|^2; the squared-parameter reading reproduces the oracle"));
        out.push_back(detail::make_claim(
            "eq21-schmidt-transform-squared", "Eq. (21) with a^2, b^2 in place of |a|^2, |b|^2",
            err_squared, kTolAlgebraic, "corrected reading"));
        out.push_back(detail::make_claim(
            "cmt-concurrence-invariance", "Eq. (cmt), C' = C = beta gamma - alpha delta", err_c,
            kTolAlgebraic, "concurrence component is invariant under the local group"));
    }

    // --- Eq. (cmt) denominator: verbatim component reading vs projection-point reading ---
    {
        Rng rng = detail::sub_rng(seed, 11);
        double err_verbatim = 0.0, err_point = 0.0;
        for (int i = 0; i < n; ++i) {
            const TwoQubitState s = detail::sample_state2(rng, rs);
            const LocalUnitary u = random_local_unitary(rng, 2);
            const Complex a = u.factor(0).a, b = u.factor(0).b;
            const QProjection src = stereo_q(quaternify2(s));
            const QProjection img = mobius_q_local(u, src.value, src.components.denom);
            if (img.value.is_infinity()) continue;
            const QuaterbitState qsp = apply_qb(quaternify2(s), u);
            const Quaternion numer = qmul(qsp.comp[0], conj(qsp.comp[1]));  // S' + C' e2
            const Quaternion q2 = quaternify2(s).comp[1];
            const auto re_of = [](const Quaternion& q) { return q.x[0]; };
            const double d_verbatim =
                q2.norm2() * std::norm(b) + std::norm(a) -
                2.0 * re_of(qmul(qmul(Quaternion::from_complex(std::conj(b)), q2),
                                 Quaternion::from_complex(a)));
            const Quaternion q = src.value.finite();
            const double d_point =
                src.components.denom *
                (std::norm(b) * q.norm2() + std::norm(a) -
                 2.0 * re_of(qmul(qmul(Quaternion::from_complex(std::conj(b)), q),
                                  Quaternion::from_complex(a))));
            err_verbatim = std::max(err_verbatim,
                                    (numer / d_verbatim - img.value.finite()).norm());
            err_point = std::max(err_point, (numer / d_point - img.value.finite()).norm());
        }
        out.push_back(detail::make_claim(
            "cmt-denominator-verbatim", "Eq. (cmt) denominator 2Re(conj(b) q2 a) with q2 the"
            " second spinor component", err_verbatim, kTolSingleMap,
            "the printed symbol mixes the component q2 with the projection point"));
        out.push_back(detail::make_claim(
            "cmt-denominator-projection-point", "Eq. (cmt) denominator read with the projection"
            " point q and the |q2|^2 scale", err_point, kTolSingleMap, "corrected reading"));
    }

    // --- Eq. (form1): explicit Sp(2) expansion ---
    {
        Rng rng = detail::sub_rng(seed, 12);
        double err_verbatim = 0.0, err_matrix = 0.0;
        for (int i = 0; i < n; ++i) {
            const TwoQubitState s = detail::sample_state2(rng, rs);
            const Sp2Matrix m = random_sp2(rng);
            const QuaterbitState qs = quaternify2(s);
            const QuaterbitState qsp = apply_sp2(qs, m);
            if (qsp.comp[1].norm2() < kPoleThreshold) continue;
            const ExtendedQuaternion target = stereo_q(qsp).value;
            const Quaternion q1 = qs.comp[0], q2 = qs.comp[1];
            const Quaternion p1 = m.p[0][0], p2 = m.p[0][1], p3 = m.p[1][0], p4 = m.p[1][1];
            const double den = qsp.comp[1].norm2();
            const Quaternion num_matrix =
                q1.norm2() * qmul(p1, conj(p3)) +
                qmul(qmul(p1, q1), qmul(conj(q2), conj(p4))) +
                qmul(qmul(p2, q2), qmul(conj(q1), conj(p3))) +
                q2.norm2() * qmul(p2, conj(p4));
            // nearest literal reading of the undefined symbols: qbar3 -> conj(q1),
            // qbar4 -> conj(q2)
            const Quaternion num_verbatim =
                q1.norm2() * qmul(p1, conj(p3)) +
                qmul(qmul(p1, q1), qmul(conj(q2), conj(q2))) +
                qmul(qmul(p2, q2), qmul(conj(q1), conj(q1))) +
                q2.norm2() * qmul(p2, conj(p4));
            err_matrix = std::max(err_matrix, (num_matrix / den - target.finite()).norm());
            err_verbatim = std::max(err_verbatim, (num_verbatim / den - target.finite()).norm());
        }
        out.push_back(detail::make_claim(
            "form1-expansion-verbatim", "Eq. (form1) numerator p1 q1 qbar2 qbar4 + p2 q2 qbar1 qbar3",
            err_verbatim, kTolSingleMap,
            "symbols q3, q4 are undefined for a 2-component spinor; nearest reading tested"));
        out.push_back(detail::make_claim(
            "form1-expansion-matrix-entries", "Eq. (form1) with pbar4, pbar3 in place of qbar4, qbar3",
            err_matrix, kTolSingleMap, "corrected reading matches the quotient form Eq. (mob1)"));
    }

    // --- Eq. (OMT): Moebius path vs projected oracle path ---
    {
        Rng rng = detail::sub_rng(seed, 13);
        double err_full = 0.0, err_first = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const LocalUnitary u = random_local_unitary(rng, 3);
            const LocalUnitary u1{{u.factor(0), id, id}};
            const ExtendedOctonion o = stereo_o(octonify(s)).value;
            const ExtendedOctonion via_full =
                stereo_o(octonify(apply_local_unitary(s, u))).value;
            const ExtendedOctonion via_first =
                stereo_o(octonify(apply_local_unitary(s, u1))).value;
            err_full = std::max(err_full, chordal_distance(mobius_o(u, o), via_full));
            err_first = std::max(err_first, chordal_distance(mobius_o(u1, o), via_first));
        }
        out.push_back(detail::make_claim(
            "omt-path-full-group", "Eq. (OMT) against P((OB)|psi>_o) for generic A1 x A2 x A3",
            err_full, kTolChained,
            "the A2 conj(A2) collapse removes all middle/third-factor dependence from the map"));
        out.push_back(detail::make_claim(
            "omt-path-first-factor", "Eq. (OMT) restricted to the (A1, I, I) family", err_first,
            kTolChained, "measured agreement of the first-factor Moebius family"));
    }

    // --- Appendix B (c2): first-factor closed form ---
    {
        Rng rng = detail::sub_rng(seed, 14);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const SU2Params a = random_su2(rng);
            const Complex a1 = a.a, b1 = a.b;
            const OctobitState ob = octonify(s);
            const Octonion o = stereo_o(ob).value.finite();
            const ThreeQubitState sp = apply_local_unitary(s, LocalUnitary{{a, id, id}});
            const OctobitState obp = octonify(sp);
            if (obp.comp[1].norm2() < kPoleThreshold) continue;
            const ExtendedOctonion target = stereo_o(obp).value;
            const Octonion one_minus = Octonion::one() - omul(o, conj(o));
            const Octonion rhs =
                (cmul_left(a1, cmul_left(b1, one_minus)) +
                 cmul_left(a1, cmul_right(o, a1)) -
                 cmul_left(b1, cmul_right(conj(o), b1))) *
                (ob.comp[1].norm2() / obp.comp[1].norm2());
            err = std::max(err, (rhs - target.finite()).norm());
        }
        out.push_back(detail::make_claim(
            "c2-first-factor-closed-form",
            "App. B (c2), |o2|^2/|o2'|^2 (a1 b1 (1 - o conj(o)) + a1 o a1 - b1 conj(o) b1)", err,
            kTolSingleMap, "closed form of the first-factor Moebius image"));
    }

    // --- Eq. (cmo5) with the unsubscripted (a, b) read as (a1, b1) ---
    {
        Rng rng = detail::sub_rng(seed, 15);
        double err_full = 0.0, err_first = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const LocalUnitary u = random_local_unitary(rng, 3);
            for (int restricted = 0; restricted < 2; ++restricted) {
                const LocalUnitary uu = restricted ? LocalUnitary{{u.factor(0), id, id}} : u;
                const Complex a1 = uu.factor(0).a, b1 = uu.factor(0).b;
                const Octonion t1 = otilde(octonify(s).comp[0]);
                const Octonion t2 = otilde(octonify(s).comp[1]);
                const Octonion a2 = su2_to_octonion(uu.factor(1));
                const Octonion a3 = Octonion::from_quaternion(su2_to_quaternion(uu.factor(2)));
                const Octonion sandwich = omul(omul(a3, omul(a2, conj(a2))), conj(a3));
                const Octonion numer =
                    omul(omul(cmul_left(a1, t1) + cmul_left(b1, t2), sandwich),
                         cmul_right(-conj(t1), b1) + cmul_right(conj(t2), a1));
                const ThreeQubitState sp = apply_local_unitary(s, uu);
                const OctobitState obp = octonify(sp);
                if (obp.comp[1].norm2() < kPoleThreshold) continue;
                const ExtendedOctonion target = stereo_o(obp).value;
                const double e = (numer / obp.comp[1].norm2() - target.finite()).norm();
                (restricted ? err_first : err_full) = std::max(restricted ? err_first : err_full, e);
            }
        }
        out.push_back(detail::make_claim(
            "cmo5-projection-full-group", "Eq. (cmo5) numerator with (a, b) read as (a1, b1),"
            " generic local group", err_full, kTolChained,
            "unsubscripted a, b tested under the (a1, b1) reading"));
        out.push_back(detail::make_claim(
            "cmo5-projection-first-factor", "Eq. (cmo5) restricted to the (A1, I, I) family",
            err_first, kTolChained, "unsubscripted a, b tested under the (a1, b1) reading"));
    }

    // --- Appendix A component formulas of the octonion product ---
    {
        Rng rng = detail::sub_rng(seed, 16);
        double err012 = 0.0, err3_verbatim = 0.0, err3_corrected = 0.0;
        for (int i = 0; i < n; ++i) {
            Octonion x, y;
            for (auto& v : x.x) v = rng.normal();
            for (auto& v : y.x) v = rng.normal();
            const Octonion prod = omul(x, y);
            const Complex z0 = x.slot(0), z1 = x.slot(1), z2 = x.slot(2), z3 = x.slot(3);
            const Complex p0 = y.slot(0), p1 = y.slot(1), p2 = y.slot(2), p3 = y.slot(3);
            const Complex f0 = z0 * p0 - z1 * std::conj(p1) - z2 * std::conj(p2) -
                               std::conj(z3) * p3;
            const Complex f1 = z0 * p1 + z1 * std::conj(p0) + std::conj(z2) * p3 -
                               z3 * std::conj(p2);
            const Complex f2 = z0 * p2 - std::conj(z1) * p3 + z2 * std::conj(p0) +
                               z3 * std::conj(p1);
            const Complex f3v = std::conj(z0) * p3 + z1 * p2 - z2 * std::conj(p1) +
                                z3 * std::conj(p0);
            const Complex f3c = std::conj(z0) * p3 + z1 * p2 - z2 * p1 + z3 * p0;
            err012 = std::max({err012, std::abs(f0 - prod.slot(0)), std::abs(f1 - prod.slot(1)),
                               std::abs(f2 - prod.slot(2))});
            err3_verbatim = std::max(err3_verbatim, std::abs(f3v - prod.slot(3)));
            err3_corrected = std::max(err3_corrected, std::abs(f3c - prod.slot(3)));
        }
        out.push_back(detail::make_claim(
            "appendix-a-product-s0-s2", "App. A component formulas s0, s1, s2 of o3 = o1 o2",
            err012, kTolAlgebraic, "verbatim formulas match the structure-constant product"));
        out.push_back(detail::make_claim(
            "appendix-a-product-s3", "App. A component formula s3 = conj(z0)p3 + z1 p2 - z2"
            " conj(p1) + z3 conj(p0)", err3_verbatim, kTolAlgebraic,
            "unbarred p1, p0 reproduce the product (max err " +
                detail::fmt_err(err3_corrected) + "); the printed decomposition also duplicates"
                " z3 in (z3 + z3 e2)e4"));
    }

    // --- Appendix B (B-1)/(B-2): printed o'1, o'2 expansions ---
    {
        Rng rng = detail::sub_rng(seed, 17);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const LocalUnitary u = random_local_unitary(rng, 3);
            const Complex a1 = u.factor(0).a, b1 = u.factor(0).b;
            const Complex a2 = u.factor(1).a, b2 = u.factor(1).b;
            const Complex a3 = u.factor(2).a, b3 = u.factor(2).b;
            const auto& t = s.amp;
            const auto c = [](Complex z) { return std::conj(z); };
            const Complex rows[8] = {
                // (B-1) rows of o'1: e0, e2, e4, (e2)e4
                t[0]*a1*a2*a3 + t[1]*a1*a2*b3 + t[2]*a1*b2*c(a3) + t[3]*a1*b2*b3 +
                    t[4]*b1*a2*a3 + t[5]*b1*a2*b3 + t[6]*b1*b2*a3 + t[7]*b1*b2*b3,
                -t[0]*a1*c(a2)*c(b3) + t[1]*a1*c(a2)*c(a3) - t[2]*a1*b2*c(b3) + t[3]*a1*b2*c(a3) -
                    t[4]*b1*c(a2)*c(b3) + t[5]*b1*a2*a3 - t[6]*b1*b2*c(b3) + t[7]*b1*b2*c(a3),
                -t[0]*a1*c(b2)*a3 - t[1]*a1*c(b2)*b3 + t[2]*a1*c(a2)*a3 + t[3]*a1*c(a2)*b3 -
                    t[4]*b1*c(b2)*a3 - t[5]*c(b1)*c(b2)*c(b3) + t[6]*b1*c(a2)*a3 + t[7]*b1*c(a2)*b3,
                t[0]*a1*b2*c(b3) - t[1]*a1*c(b2)*c(a3) - t[2]*a1*c(a2)*c(b3) + t[3]*a1*c(a2)*c(a3) +
                    t[4]*b1*b2*c(b3) - t[5]*b1*c(b2)*c(a3) - t[6]*b1*c(a2)*c(b3) + t[7]*b1*c(a2)*c(a3),
                // (B-2) rows of o'2
                -t[0]*c(b1)*a2*a3 - t[1]*c(b1)*a2*b3 - t[2]*c(b1)*b2*a3 - t[3]*c(b1)*b2*b3 +
                    t[4]*c(a1)*a2*a3 + t[5]*c(a1)*a2*b3 + t[6]*c(a1)*b2*a3 + t[7]*c(a1)*b2*b3,
                t[0]*c(b1)*c(a2)*c(b3) - t[1]*c(b1)*c(a2)*c(a3) + t[2]*c(b1)*b2*c(b3) -
                    t[3]*c(b1)*b2*c(a3) - t[4]*c(a1)*c(a2)*c(b3) + t[5]*c(a1)*c(a2)*c(a3) -
                    t[6]*c(a1)*b2*c(b3) + t[7]*c(a1)*b2*c(a3),
                t[0]*c(b1)*c(b2)*a3 + t[1]*c(b1)*c(b2)*b3 - t[2]*c(b1)*c(a2)*a3 -
                    t[3]*c(b1)*c(a2)*b3 - t[4]*c(a1)*c(b2)*a3 - t[5]*c(a1)*c(b2)*b3 +
                    t[6]*c(a1)*c(a2)*a3 + t[7]*c(a1)*c(a2)*b3,
                t[0]*c(b1)*c(b2)*c(b3) + t[1]*c(b1)*c(b2)*c(a3) + t[2]*c(b1)*c(a2)*c(b3) -
                    t[3]*c(b1)*c(a2)*c(a3) + t[4]*c(a1)*c(b2)*c(b3) - t[5]*c(a1)*c(b2)*c(a3) -
                    t[6]*c(a1)*c(a2)*c(b3) + t[7]*c(a1)*c(a2)*c(a3)};
            const ThreeQubitState sp = apply_local_unitary(s, u);
            for (int k = 0; k < 8; ++k)
                err = std::max(err, std::abs(rows[k] - sp.amp[static_cast<std::size_t>(k)]));
        }
        out.push_back(detail::make_claim(
            "b1-b2-expansions-verbatim", "App. B (B-1)/(B-2) printed coefficient rows of o'1, o'2",
            err, kTolSingleMap,
            "rows mix conjugated and unconjugated factors (e.g. t2 a1 b2 conj(a3) in the real"
            " row, t5 b1 a2 a3 in the e2 row); transcribed with the stray 'r' in row e2 of"
            " (B-2) dropped"));
    }

    // --- literal right-scalar action vs the tensor-product action ---
    {
        Rng rng = detail::sub_rng(seed, 18);
        double err = 0.0, err_real = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const LocalUnitary u = random_local_unitary(rng, 3);
            const OctobitState ob = octonify(s);
            err = std::max(err, detail::state_distance(
                                    detail::right_scalar_action_literal(ob, u),
                                    octonify(apply_local_unitary(s, u))));
            // real-coefficient first factor only
            const double th = rng.uniform01() * 6.283185307179586;
            const SU2Params rot{Complex{std::cos(th)}, Complex{std::sin(th)}};
            const LocalUnitary ur{{rot, id, id}};
            err_real = std::max(err_real, detail::state_distance(
                                              detail::right_scalar_action_literal(ob, ur),
                                              octonify(apply_local_unitary(s, ur))));
        }
        out.push_back(detail::make_claim(
            "qqq-right-scalar-action", "Eq. (qqq)/(o'), o_i -> A1-mix of [{o_i A3^(q)} A2^(o)]",
            err, kTolSingleMap,
            "whole-octonion right multiplication applies the inverse third-factor action on the"
            " e4 half (|010> with a real third-factor rotation already disagrees); real-"
            "coefficient first-factor rotations alone agree (max err " +
                detail::fmt_err(err_real) + ")"));
    }

    // --- Appendix B norm relation ---
    {
        Rng rng = detail::sub_rng(seed, 19);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const OctobitState ob = octonify(s);
            const Octonion t2 = otilde(ob.comp[1]);
            const Octonion o = stereo_o(ob).value.finite();
            const Octonion lhs = omul(t2, conj(t2)) - omul(ob.comp[0], conj(ob.comp[0]));
            const Octonion rhs = ob.comp[1].norm2() * (Octonion::one() - omul(o, conj(o)));
            err = std::max(err, (lhs - rhs).norm());
        }
        out.push_back(detail::make_claim(
            "o2-norm-relation", "App. B, tilde(o2) conj(tilde(o2)) - o1 conj(o1) = |o2|^2 (1 - o conj(o))",
            err, kTolAlgebraic, "norm multiplicativity identity"));
    }

    // --- Appendix B (canformal23): printed M and N component formulas ---
    {
        Rng rng = detail::sub_rng(seed, 20);
        double errM = 0.0, errM_corr = 0.0, errN = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = random_state3(rng);
            const auto& t = s.amp;
            const auto c = [](Complex z) { return std::conj(z); };
            {
                const OctobitState m = octonify(s, Partition::q2_13);
                const OProjectionComponents comp = stereo_o(m).components;
                const Complex M0 = t[0]*c(t[2]) + t[1]*c(t[3]) + t[4]*c(t[6]) + t[3]*c(t[7]);
                const Complex M0c = t[0]*c(t[2]) + t[1]*c(t[3]) + t[4]*c(t[6]) + t[5]*c(t[7]);
                const Complex M1 = t[1]*t[2] - t[0]*t[3] + c(t[5])*c(t[6]) - c(t[4])*c(t[7]);
                const Complex M2 = t[4]*t[2] - t[0]*t[6] + c(t[1])*c(t[7]) - c(t[5])*c(t[3]);
                const Complex M3 = t[4]*t[3] - t[1]*t[6] + c(t[5])*c(t[2]) - c(t[0])*c(t[7]);
                errM = std::max({errM, std::abs(M0 - comp.s0), std::abs(M1 - comp.s1),
                                 std::abs(M2 - comp.s2), std::abs(M3 - comp.s3)});
                errM_corr = std::max(errM_corr, std::abs(M0c - comp.s0));
            }
            {
                const OctobitState nn = octonify(s, Partition::q3_12);
                const OProjectionComponents comp = stereo_o(nn).components;
                const Complex N0 = t[0]*c(t[1]) + t[2]*c(t[3]) + t[4]*c(t[5]) + t[6]*c(t[7]);
                const Complex N1 = t[2]*t[1] - t[0]*t[3] + c(t[6])*c(t[5]) - c(t[4])*c(t[7]);
                const Complex N2 = t[4]*t[1] - t[0]*t[5] + c(t[2])*c(t[7]) - c(t[6])*c(t[3]);
                const Complex N3 = t[4]*t[3] - t[2]*t[5] + c(t[6])*c(t[1]) - c(t[0])*c(t[7]);
                errN = std::max({errN, std::abs(N0 - comp.s0), std::abs(N1 - comp.s1),
                                 std::abs(N2 - comp.s2), std::abs(N3 - comp.s3)});
            }
        }
        out.push_back(detail::make_claim(
            "mn-components-m", "App. B (canformal23), components of M for the 2|13 encoding",
            errM, kTolAlgebraic,
            "first row prints t3 conj(t7); t5 conj(t7) reproduces the projection (max err " +
                detail::fmt_err(errM_corr) + ")"));
        out.push_back(detail::make_claim(
            "mn-components-n", "App. B (canformal23), components of N for the 3|12 encoding",
            errN, kTolAlgebraic, "verbatim formulas match the projection"));
    }

    // --- imaginary-slot norm vs concurrence ---
    {
        Rng rng = detail::sub_rng(seed, 21);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = random_state3(rng);
            const OProjectionComponents c = stereo_o(octonify(s)).components;
            const double lhs =
                std::norm(c.s1) + std::norm(c.s2) + std::norm(c.s3);
            const double C = concurrence3(s, Partition::q1_23);
            err = std::max(err, std::abs(lhs - C * C / 4.0));
        }
        out.push_back(detail::make_claim(
            "s-norm-concurrence-identity", "sec. 4.1, entanglement sensitivity of S1, S2, S3",
            err, kTolAlgebraic,
            "|S1|^2 + |S2|^2 + |S3|^2 equals C^2/4 for the matching bipartition"));
        out.push_back(detail::make_claim(
            "separability-converse", "sec. 4.1, vanishing S1, S2, S3 versus separability of the"
            " state", err, kTolAlgebraic,
            "at the state level the converse holds: S1 = S2 = S3 = 0 forces C = 0 through the"
            " norm identity"));
    }

    // --- first-factor family as a plain octonion left matrix action ---
    {
        Rng rng = detail::sub_rng(seed, 22);
        double err = 0.0, err_real = 0.0;
        for (int i = 0; i < n; ++i) {
            const ThreeQubitState s = detail::sample_state3(rng, rs);
            const OctobitState ob = octonify(s);
            const SU2Params a = random_su2(rng);
            const double th = rng.uniform01() * 6.283185307179586;
            const SU2Params rot{Complex{std::cos(th)}, Complex{std::sin(th)}};
            for (int real_case = 0; real_case < 2; ++real_case) {
                const SU2Params f = real_case ? rot : a;
                const OctobitState expect = apply_ob(ob, LocalUnitary{{f, id, id}});
                const OctobitState plain{
                    cmul_left(f.a, ob.comp[0]) + cmul_left(f.b, ob.comp[1]),
                    cmul_left(-std::conj(f.b), ob.comp[0]) +
                        cmul_left(std::conj(f.a), ob.comp[1])};
                const double e = detail::state_distance(plain, expect);
                (real_case ? err_real : err) = std::max(real_case ? err_real : err, e);
            }
        }
        out.push_back(detail::make_claim(
            "first-factor-left-matrix-reduction", "(A1, I, I) action as a plain octonion left"
            " matrix action on (o1, o2)", err, kTolSingleMap,
            "octonion left multiplication by an embedded scalar conjugates the x6, x7 plane;"
            " real-coefficient factors reduce exactly (max err " + detail::fmt_err(err_real) +
                ")"));
    }

    if (resampled) *resampled += rs;
    std::sort(out.begin(), out.end(),
              [](const ClaimStatus& a, const ClaimStatus& b) { return a.claim_id < b.claim_id; });
    return out;
}

// ---------------------------------------------------------------------------
// Full run
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::uint64_t seed = 0;
    int n = 10000;
    int n_separability = 1000;
    bool run_checks = true;
    bool run_claims = true;
};

inline VerificationReport run_verification(const VerifyOptions& opt) {
    VerificationReport r;
    r.seed = opt.seed;
    r.n = opt.n;
    if (opt.run_checks) {
        r.checks.push_back(check_diagram_1q(opt.seed, opt.n, &r.resampled_near_infinity));
        r.checks.push_back(check_diagram_2q(opt.seed, opt.n, &r.resampled_near_infinity));
        r.checks.push_back(check_diagram_sp2(opt.seed, opt.n, &r.resampled_near_infinity));
        r.checks.push_back(check_diagram_3q(opt.seed, opt.n, &r.resampled_near_infinity));
        r.checks.push_back(
            check_separability(opt.seed, opt.n_separability, &r.resampled_near_infinity));
        r.checks.push_back(
            check_invariance_forced(opt.seed, opt.n, &r.resampled_near_infinity));
        r.checks.push_back(
            check_concurrence_invariance(opt.seed, opt.n, &r.resampled_near_infinity));
    }
    if (opt.run_claims) {
        r.claims = claims_report(opt.seed, opt.n, &r.resampled_near_infinity);
        auto inv = invariance_scan(opt.seed, opt.n, &r.resampled_near_infinity);
        r.claims.insert(r.claims.end(), inv.begin(), inv.end());
        r.claims.push_back(
            separability_scan(opt.seed, opt.n_separability, &r.resampled_near_infinity));
        std::sort(r.claims.begin(), r.claims.end(), [](const ClaimStatus& a, const ClaimStatus& b) {
            return a.claim_id < b.claim_id;
        });
    }
    return r;
}

}  // namespace hqg
