// Closed-form single-qubit time evolution via the exact 2x2 Pauli
// decomposition, Bloch-vector extraction, and projected-trajectory sampling.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hqg/maps.hpp"
#include "hqg/states.hpp"

namespace hqg {

inline constexpr double kHermiticityTolerance = 1e-12;

struct Hamiltonian2 {
    std::array<std::array<Complex, 2>, 2> h{};

    Hamiltonian2() = default;
    explicit Hamiltonian2(std::array<std::array<Complex, 2>, 2> entries) : h(entries) {
        if (std::abs(h[0][0].imag()) > kHermiticityTolerance ||
            std::abs(h[1][1].imag()) > kHermiticityTolerance ||
            std::abs(h[0][1] - std::conj(h[1][0])) > kHermiticityTolerance)
            throw std::invalid_argument("Hamiltonian2: matrix is not Hermitian");
    }

    // Pauli decomposition h = c0 I + c . sigma
    double c0() const { return 0.5 * (h[0][0].real() + h[1][1].real()); }
    std::array<double, 3> pauli_vector() const {
        return {h[0][1].real(), -h[0][1].imag(), 0.5 * (h[0][0].real() - h[1][1].real())};
    }
};

// (1/sqrt 2) [[1, 1], [1, -1]]
inline Hamiltonian2 hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return Hamiltonian2{{{{Complex{r}, Complex{r}}, {Complex{r}, Complex{-r}}}}};
}

namespace detail {

struct EvolutionMatrix {
    std::array<std::array<Complex, 2>, 2> m{};
};

// exp(-i h t) = e^{-i c0 t} (cos(|c| t) I - i sin(|c| t) chat . sigma)
inline EvolutionMatrix evolution_matrix(const Hamiltonian2& h, double t, bool keep_phase) {
    const auto c = h.pauli_vector();
    const double cn = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    EvolutionMatrix u;
    if (cn == 0.0) {
        u.m = {{{Complex{1.0}, Complex{0.0}}, {Complex{0.0}, Complex{1.0}}}};
    } else {
        const double ct = std::cos(cn * t);
        const double st = std::sin(cn * t);
        const std::array<double, 3> n{c[0] / cn, c[1] / cn, c[2] / cn};
        const Complex i{0.0, 1.0};
        u.m[0][0] = ct - i * st * n[2];
        u.m[0][1] = -i * st * (n[0] - i * n[1]);
        u.m[1][0] = -i * st * (n[0] + i * n[1]);
        u.m[1][1] = ct + i * st * n[2];
    }
    if (keep_phase) {
        const Complex phase = std::exp(Complex{0.0, -h.c0() * t});
        for (auto& row : u.m)
            for (auto& z : row) z *= phase;
    }
    return u;
}

}  // namespace detail

// exp(-i h t) s0, global phase included
inline OneQubitState evolve(const Hamiltonian2& h, double t, const OneQubitState& s0) {
    const auto u = detail::evolution_matrix(h, t, /*keep_phase=*/true);
    return OneQubitState{u.m[0][0] * s0.amp[0] + u.m[0][1] * s0.amp[1],
                         u.m[1][0] * s0.amp[0] + u.m[1][1] * s0.amp[1]};
}

// The SU(2) representative of exp(-i h t) with the e^{-i c0 t} phase dropped;
// the projective action is unchanged.
inline SU2Params evolution_su2(const Hamiltonian2& h, double t) {
    const auto u = detail::evolution_matrix(h, t, /*keep_phase=*/false);
    return SU2Params{u.m[0][0], u.m[0][1]};
}

// r_i = <psi| sigma_i |psi>; unit length for pure states
inline std::array<double, 3> bloch_vector(const OneQubitState& s) {
    const Complex cross = std::conj(s.amp[0]) * s.amp[1];
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(s.amp[0]) - std::norm(s.amp[1])};
}

struct TrajectorySample {
    double t = 0.0;
    OneQubitState state;
    std::array<double, 3> bloch{};
    ExtendedComplex plane;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
};

inline std::vector<double> uniform_grid(double start, double stop, std::size_t count) {
    std::vector<double> g(count);
    if (count == 1) {
        g[0] = start;
        return g;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) g[i] = start + step * static_cast<double>(i);
    return g;
}

inline std::vector<double> default_grid() {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return uniform_grid(0.0, two_pi, 256);
}

inline Trajectory trajectory(const Hamiltonian2& h, const OneQubitState& s0,
                             const std::vector<double>& t_grid) {
    Trajectory out;
    out.samples.reserve(t_grid.size());
    for (double t : t_grid) {
        TrajectorySample s;
        s.t = t;
        s.state = evolve(h, t, s0);
        s.bloch = bloch_vector(s.state);
        s.plane = stereo_c(s.state);
        out.samples.push_back(s);
    }
    return out;
}

// 4x4 determinant of the concyclicity matrix rows (|z|^2, Re z, Im z, 1);
// zero for concyclic points, lines counting as circles of infinite radius.
inline double concyclicity_residual(const std::array<Complex, 4>& z) {
    std::array<std::array<double, 4>, 4> m;
    for (std::size_t i = 0; i < 4; ++i)
        m[i] = {std::norm(z[i]), z[i].real(), z[i].imag(), 1.0};
    // Laplace expansion over the first column with 3x3 minors
    auto det3 = [&](int r0, int r1, int r2) {
        const auto& a = m[static_cast<std::size_t>(r0)];
        const auto& b = m[static_cast<std::size_t>(r1)];
        const auto& c = m[static_cast<std::size_t>(r2)];
        return a[1] * (b[2] * c[3] - b[3] * c[2]) - a[2] * (b[1] * c[3] - b[3] * c[1]) +
               a[3] * (b[1] * c[2] - b[2] * c[1]);
    };
    return m[0][0] * det3(1, 2, 3) - m[1][0] * det3(0, 2, 3) + m[2][0] * det3(0, 1, 3) -
           m[3][0] * det3(0, 1, 2);
}

}  // namespace hqg
