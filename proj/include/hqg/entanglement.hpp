// Concurrence measures for two- and three-qubit pure states (all three
// bipartitions of the latter) and the Schmidt term feeding the quaternionic
// projection geometry.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hqg/states.hpp"

namespace hqg {

struct ConcurrenceReport {
    std::string partition;  // "2-qubit", "1|23", "2|13" or "3|12"
    double value = 0.0;     // in [0, 1] for unit-norm pure states
};

inline std::string partition_name(Partition p) {
    switch (p) {
        case Partition::q1_23: return "1|23";
        case Partition::q2_13: return "2|13";
        case Partition::q3_12: return "3|12";
    }
    return "?";
}

// 2 sqrt( sum_{i<j} sum_{k<l} |a_ik a_jl - a_il a_jk|^2 ) over the row-major
// rows x cols coefficient matrix. Degenerate dimensions give 0 by convention.
inline double concurrence_bipartite(const std::vector<Complex>& a, std::size_t rows,
                                    std::size_t cols) {
    if (a.size() != rows * cols)
        throw std::invalid_argument("concurrence_bipartite: size mismatch");
    if (rows < 2 || cols < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < rows; ++j)
            for (std::size_t k = 0; k < cols; ++k)
                for (std::size_t l = k + 1; l < cols; ++l) {
                    const Complex minor = a[i * cols + k] * a[j * cols + l] -
                                          a[i * cols + l] * a[j * cols + k];
                    sum += std::norm(minor);
                }
    return 2.0 * std::sqrt(sum);
}

// Rows indexed by the singled-out qubit, columns by the remaining pair in
// lexicographic order.
inline std::vector<Complex> reshape_bipartition(const ThreeQubitState& s, Partition p) {
    std::vector<Complex> m(8);
    for (std::size_t i = 0; i < 2; ++i)      // first qubit
        for (std::size_t j = 0; j < 2; ++j)  // second qubit
            for (std::size_t k = 0; k < 2; ++k) {
                const Complex t = s.amp[4 * i + 2 * j + k];
                switch (p) {
                    case Partition::q1_23: m[4 * i + (2 * j + k)] = t; break;
                    case Partition::q2_13: m[4 * j + (2 * i + k)] = t; break;
                    case Partition::q3_12: m[4 * k + (2 * i + j)] = t; break;
                }
            }
    return m;
}

// 2 |beta gamma - alpha delta|
inline double concurrence2(const TwoQubitState& s) {
    return 2.0 * std::abs(s.amp[1] * s.amp[2] - s.amp[0] * s.amp[3]);
}

// Six-minor formula for the chosen bipartition.
inline double concurrence3(const ThreeQubitState& s, Partition p) {
    const auto& t = s.amp;
    std::array<Complex, 6> m;
    switch (p) {
        case Partition::q1_23:
            m = {t[0] * t[5] - t[1] * t[4], t[0] * t[6] - t[2] * t[4],
                 t[0] * t[7] - t[3] * t[4], t[1] * t[6] - t[2] * t[5],
                 t[1] * t[7] - t[3] * t[5], t[2] * t[7] - t[3] * t[6]};
            break;
        case Partition::q2_13:
            m = {t[0] * t[3] - t[1] * t[2], t[0] * t[6] - t[2] * t[4],
                 t[0] * t[7] - t[2] * t[5], t[1] * t[6] - t[3] * t[4],
                 t[1] * t[7] - t[3] * t[5], t[4] * t[7] - t[5] * t[6]};
            break;
        case Partition::q3_12:
            m = {t[0] * t[3] - t[1] * t[2], t[0] * t[5] - t[1] * t[4],
                 t[0] * t[7] - t[1] * t[6], t[2] * t[5] - t[3] * t[4],
                 t[2] * t[7] - t[3] * t[6], t[4] * t[7] - t[5] * t[6]};
            break;
    }
    double sum = 0.0;
    for (const Complex& z : m) sum += std::norm(z);
    return 2.0 * std::sqrt(sum);
}

// S = alpha conj(gamma) + beta conj(delta); vanishes on Schmidt-aligned states.
inline Complex schmidt_term(const TwoQubitState& s) {
    return s.amp[0] * std::conj(s.amp[2]) + s.amp[1] * std::conj(s.amp[3]);
}

inline ConcurrenceReport concurrence_report(const TwoQubitState& s) {
    return {"2-qubit", concurrence2(s)};
}

inline ConcurrenceReport concurrence_report(const ThreeQubitState& s, Partition p) {
    return {partition_name(p), concurrence3(s, p)};
}

}  // namespace hqg
