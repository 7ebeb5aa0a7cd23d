#include "sampling.hpp"

#include <cmath>

namespace dopt {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

template <int N>
Mat<N> ginibre_density(Rng& rng) {
    Mat<N> g;
    for (auto& e : g.a) e = Complex(rng.next_normal(), rng.next_normal());
    Mat<N> rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho = rho * (1.0 / tr);
    // Symmetrize away the last bits of rounding noise.
    Mat<N> h;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) h(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    return h;
}
}  // namespace

Vec3 random_unit_vector(Rng& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, kTwoPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

Mat2 random_qubit_density(Rng& rng) { return ginibre_density<2>(rng); }

Mat4 random_two_qubit_density(Rng& rng) { return ginibre_density<4>(rng); }

Mat4 random_separable_density(Rng& rng, int terms) {
    Mat4 rho;
    double total = 0.0;
    std::array<double, 16> w{};
    for (int t = 0; t < terms; ++t) {
        w[static_cast<std::size_t>(t)] = rng.next_double() + 1e-6;
        total += w[static_cast<std::size_t>(t)];
    }
    for (int t = 0; t < terms; ++t) {
        const Mat2 a = ginibre_density<2>(rng);
        const Mat2 b = ginibre_density<2>(rng);
        rho = rho + kron(a, b) * (w[static_cast<std::size_t>(t)] / total);
    }
    return rho;
}

Mat2 random_unitary2(Rng& rng) {
    // Rz(alpha) Ry(beta) Rz(gamma)
    const double alpha = rng.uniform(0.0, kTwoPi);
    const double beta = rng.uniform(0.0, kTwoPi / 2.0);
    const double gamma = rng.uniform(0.0, kTwoPi);
    const double cb = std::cos(0.5 * beta);
    const double sb = std::sin(0.5 * beta);
    const Complex ea = std::polar(1.0, -0.5 * alpha);
    const Complex eg = std::polar(1.0, -0.5 * gamma);
    Mat2 u;
    u(0, 0) = ea * cb * eg;
    u(0, 1) = -(ea * sb * std::conj(eg));
    u(1, 0) = std::conj(ea) * sb * eg;
    u(1, 1) = std::conj(ea) * cb * std::conj(eg);
    return u;
}

}  // namespace dopt
