#include "qmath.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace dopt {

namespace {
std::atomic<LogBase> g_log_base{LogBase::Bits};
constexpr double kLn2 = 0.6931471805599453094172321214581766;
}  // namespace

void set_entropy_log_base(LogBase base) { g_log_base.store(base, std::memory_order_relaxed); }
LogBase entropy_log_base() { return g_log_base.load(std::memory_order_relaxed); }
double entropy_unit_scale() { return entropy_log_base() == LogBase::Bits ? 1.0 / kLn2 : 1.0; }

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

double binary_entropy(double x) {
    if (x < -kDegenerateProb || x > 1.0 + kDegenerateProb) {
        std::ostringstream os;
        os << "binary_entropy: argument " << x << " outside [0,1]";
        throw std::domain_error(os.str());
    }
    x = std::clamp(x, 0.0, 1.0);
    if (x == 0.0 || x == 1.0) return 0.0;
    return (-x * std::log(x) - (1.0 - x) * std::log(1.0 - x)) * entropy_unit_scale();
}

std::array<double, 2> eig_hermitian(const Mat2& m) {
    if (m.hermiticity_defect() > kHermitianTol)
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
    const double half = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const double radius = std::sqrt(half * half + std::norm(m(0, 1)));
    return {mean + radius, mean - radius};
}

namespace {

double off_diagonal_norm(const Mat4& m) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// One two-sided complex Jacobi rotation zeroing m(p,q).
void jacobi_rotate(Mat4& m, int p, int q) {
    const Complex apq = m(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;
    const double app = m(p, p).real();
    const double aqq = m(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Columns: J[p][p]=c, J[p][q]=s*phase, J[q][p]=-s*conj(phase), J[q][q]=c.
    for (int i = 0; i < 4; ++i) {
        const Complex mip = m(i, p);
        const Complex miq = m(i, q);
        m(i, p) = c * mip - s * std::conj(phase) * miq;
        m(i, q) = s * phase * mip + c * miq;
    }
    for (int j = 0; j < 4; ++j) {
        const Complex mpj = m(p, j);
        const Complex mqj = m(q, j);
        m(p, j) = c * mpj - s * phase * mqj;
        m(q, j) = s * std::conj(phase) * mpj + c * mqj;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
}

}  // namespace

std::array<double, 4> eig_hermitian(const Mat4& m) {
    if (m.hermiticity_defect() > kHermitianTol)
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    Mat4 w = m;
    constexpr int kMaxSweeps = 100;
    constexpr double kOffTol = 1e-14;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) jacobi_rotate(w, p, q);
        converged = off_diagonal_norm(w) <= kOffTol;
    }
    if (!converged) throw std::runtime_error("eig_hermitian: Jacobi sweep cap exceeded");
    std::array<double, 4> ev{w(0, 0).real(), w(1, 1).real(), w(2, 2).real(), w(3, 3).real()};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

double entropy_from_spectrum(std::span<const double> eigenvalues) {
    double nats = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < kEigenvalueFloor) {
            std::ostringstream os;
            os << "entropy: eigenvalue " << lambda << " below PSD floor";
            throw std::domain_error(os.str());
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) nats -= lambda * std::log(lambda);
    }
    return nats * entropy_unit_scale();
}

double von_neumann_entropy(const Mat2& rho) {
    const auto ev = eig_hermitian(rho);
    return entropy_from_spectrum(ev);
}

double von_neumann_entropy(const Mat4& rho) {
    const auto ev = eig_hermitian(rho);
    return entropy_from_spectrum(ev);
}

Mat2 partial_trace_b(const Mat4& rho) {
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b) r(a, ap) += rho(2 * a + b, 2 * ap + b);
    return r;
}

Mat2 partial_trace_a(const Mat4& rho) {
    Mat2 r;
    for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
            for (int a = 0; a < 2; ++a) r(b, bp) += rho(2 * a + b, 2 * a + bp);
    return r;
}

Mat2 bloch_to_matrix(const Vec3& v) {
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 + v.z);
    m(1, 1) = 0.5 * (1.0 - v.z);
    m(0, 1) = 0.5 * Complex(v.x, -v.y);
    m(1, 0) = 0.5 * Complex(v.x, v.y);
    return m;
}

Vec3 matrix_to_bloch(const Mat2& m) {
    Vec3 v;
    v.x = (m(0, 1) + m(1, 0)).real();
    v.y = (m(1, 0) - m(0, 1)).imag();
    v.z = (m(0, 0) - m(1, 1)).real();
    return v;
}

QubitState QubitState::from_matrix(const Mat2& m) {
    if (m.hermiticity_defect() > kHermitianTol)
        throw StateError("hermitian", "qubit state: matrix is not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > kTraceTol)
        throw StateError("trace", "qubit state: trace differs from 1");
    QubitState q{matrix_to_bloch(m)};
    if (q.bloch.norm() > 1.0 + kHermitianTol)
        throw StateError("positivity", "qubit state: Bloch vector exceeds unit ball");
    return q;
}

double QubitState::entropy() const {
    const double r = std::min(bloch.norm(), 1.0);
    return binary_entropy(0.5 * (1.0 + r));
}

TwoQubitState TwoQubitState::from_matrix(const Mat4& m) {
    const double herm = m.hermiticity_defect();
    if (herm > kHermitianTol) {
        std::ostringstream os;
        os << "two-qubit state: hermiticity defect " << herm << " exceeds 1e-12";
        throw StateError("hermitian", os.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "two-qubit state: trace " << tr << " differs from 1 by more than 1e-10";
        throw StateError("trace", os.str());
    }
    const auto ev = eig_hermitian(m);
    if (ev.back() < kEigenvalueFloor) {
        std::ostringstream os;
        os << "two-qubit state: smallest eigenvalue " << ev.back() << " below -1e-9";
        throw StateError("positivity", os.str());
    }
    return TwoQubitState{m};
}

}  // namespace dopt
