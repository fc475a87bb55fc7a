#pragma once

#include <initializer_list>
#include <vector>

namespace gpfstab {

using Vec = std::vector<double>;

/// Euclidean norm of a vector.
double euclidean_norm(const Vec& v);

/// Small dense square matrix, row-major storage.
struct Matrix {
    int n = 0;
    std::vector<double> a;  // n * n entries

    Matrix() = default;
    explicit Matrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
    Matrix(int dim, std::initializer_list<double> entries);

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static Matrix identity(int dim);
    static Matrix diagonal(const Vec& d);

    [[nodiscard]] bool finite() const;
    [[nodiscard]] Vec apply(const Vec& x) const;  // y = M x
};

/// Largest singular value of M, computed by power iteration on M^T M.
///
/// Deterministic all-ones start vector, Rayleigh-quotient estimate,
/// convergence threshold 1e-14 on the eigenvalue, 10000 iteration cap.
/// If the estimate stalls while the residual stays large (start vector
/// orthogonal to the dominant eigenvector, or M^T M v = 0 with M != 0),
/// the vector is nudged deterministically and the iteration continues.
/// Throws std::invalid_argument on non-finite input.
double spectral_norm(const Matrix& m);

} // namespace gpfstab
