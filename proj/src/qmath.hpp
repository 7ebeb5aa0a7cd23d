#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace dopt {

using Complex = std::complex<double>;

// Validation tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kDegenerateProb = 1e-12;

// Entropies are reported in bits by default; the base can be switched to
// natural log once at startup. Not intended to be toggled mid-computation.
enum class LogBase { Bits, Nats };
void set_entropy_log_base(LogBase base);
LogBase entropy_log_base();
// Multiplier that converts an entropy accumulated in nats into the
// configured unit.
double entropy_unit_scale();

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Dense row-major N x N complex matrix, N = 2 or 4.
template <int N>
struct Mat {
    std::array<Complex, static_cast<std::size_t>(N) * N> a{};

    Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
    const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat operator+(const Mat& o) const {
        Mat r;
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r;
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
        return r;
    }
    Mat operator*(double s) const {
        Mat r;
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const Complex v = (*this)(i, k);
                for (int j = 0; j < N; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Mat adjoint() const {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double hermiticity_defect() const {
        double worst = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

Mat4 kron(const Mat2& a, const Mat2& b);

// Shannon entropy of (x, 1-x) in the configured unit. Inputs within 1e-12
// of [0,1] are clamped; anything further out is a domain error.
double binary_entropy(double x);

// Eigenvalues in descending order. 2x2 uses the closed form; 4x4 runs
// cyclic Jacobi rotations to off-diagonal Frobenius norm <= 1e-14
// (at most 100 sweeps). Throws std::invalid_argument on non-Hermitian
// input and std::runtime_error if the sweep cap is hit.
std::array<double, 2> eig_hermitian(const Mat2& m);
std::array<double, 4> eig_hermitian(const Mat4& m);

// -sum lambda log lambda over the spectrum. Eigenvalues in [-1e-9, 0) are
// clamped to zero; anything below the floor is a PSD violation.
double entropy_from_spectrum(std::span<const double> eigenvalues);
double von_neumann_entropy(const Mat2& rho);
double von_neumann_entropy(const Mat4& rho);

Mat2 partial_trace_b(const Mat4& rho);
Mat2 partial_trace_a(const Mat4& rho);

// (1 + sigma . v) / 2 and its inverse Pauli expansion.
Mat2 bloch_to_matrix(const Vec3& v);
Vec3 matrix_to_bloch(const Mat2& m);

// Qubit density matrix carried as its Bloch vector.
struct QubitState {
    Vec3 bloch;

    Mat2 matrix() const { return bloch_to_matrix(bloch); }
    static QubitState from_matrix(const Mat2& m);
    // h((1 + |bloch|) / 2): the spectrum of a qubit state is (1 +- |r|)/2.
    double entropy() const;
};

class StateError : public std::runtime_error {
  public:
    StateError(std::string invariant_name, const std::string& message)
        : std::runtime_error(message), invariant(std::move(invariant_name)) {}
    std::string invariant;
};

// Joint density matrix of the bipartite system, validated on construction:
// Hermitian within 1e-12, unit trace within 1e-10, smallest eigenvalue
// >= -1e-9. from_matrix throws StateError naming the violated invariant.
struct TwoQubitState {
    Mat4 matrix;

    static TwoQubitState from_matrix(const Mat4& m);
};

}  // namespace dopt
