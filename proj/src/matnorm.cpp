#include "gpfstab/matnorm.hpp"

#include <cmath>
#include <stdexcept>

namespace gpfstab {

double euclidean_norm(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

Matrix::Matrix(int dim, std::initializer_list<double> entries) : Matrix(dim) {
    if (static_cast<int>(entries.size()) != dim * dim)
        throw std::invalid_argument("Matrix: entry count does not match dimension");
    int i = 0;
    for (double v : entries) a[i++] = v;
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

bool Matrix::finite() const {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const {
    Vec y(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += (*this)(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

namespace {

constexpr double kEigTol = 1e-14;
constexpr int kMaxIters = 10000;

void normalize(Vec& v) {
    const double n = euclidean_norm(v);
    if (n > 0.0)
        for (double& x : v) x /= n;
}

// Deterministic nudge used when the iteration stalls.
void perturb(Vec& v) {
    for (size_t j = 0; j < v.size(); ++j) v[j] += 1e-6 * static_cast<double>(j + 1);
    normalize(v);
}

} // namespace

double spectral_norm(const Matrix& m) {
    if (!m.finite()) throw std::invalid_argument("spectral_norm: non-finite matrix entry");
    if (m.n == 0) return 0.0;

    // Scale out the magnitude so M^T M cannot overflow; also makes
    // spectral_norm(c M) = |c| spectral_norm(M) hold tightly.
    double scale = 0.0;
    for (double v : m.a) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return 0.0;

    const int n = m.n;
    Matrix g(n);  // (M/s)^T (M/s)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += (m(k, i) / scale) * (m(k, j) / scale);
            g(i, j) = s;
        }

    Vec v(static_cast<size_t>(n), 1.0);
    normalize(v);

    double lambda = 0.0;
    int perturbations = 0;
    for (int it = 0; it < kMaxIters; ++it) {
        Vec w = g.apply(v);
        const double wn = euclidean_norm(w);
        if (wn == 0.0) {
            // v is in the kernel of M^T M; try another direction.
            if (++perturbations > 8) return 0.0;
            perturb(v);
            continue;
        }
        double rayleigh = 0.0;
        for (int i = 0; i < n; ++i) rayleigh += v[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];

        for (double& x : w) x /= wn;
        const double change = std::fabs(rayleigh - lambda);
        lambda = rayleigh;
        v = std::move(w);

        if (change <= kEigTol * std::max(lambda, 1e-300)) {
            // Residual check guards against accepting a stalled estimate.
            Vec r = g.apply(v);
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = r[static_cast<size_t>(i)] - lambda * v[static_cast<size_t>(i)];
                res += d * d;
            }
            if (std::sqrt(res) <= 1e-7 * std::max(lambda, 1e-300)) break;
            if (++perturbations <= 8) perturb(v);
        }
    }

    return scale * std::sqrt(std::max(lambda, 0.0));
}

} // namespace gpfstab
