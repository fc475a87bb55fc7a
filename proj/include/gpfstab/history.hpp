#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gpfstab/matnorm.hpp"

namespace gpfstab {

enum class HistoryKind { Constant, Analytic, Sampled };

/// Initial history phi on [-tau, 0].
///
/// Three kinds:
///  - Constant: phi(t) = v
///  - Analytic: a registered component-wise family, identified by id.
///    Built-ins: "constant" (coeffs = the vector) and "scaled-tanh"
///    (phi_i(t) = c_i * tanh(t)).
///  - Sampled: piecewise-linear interpolation of values on a strictly
///    increasing grid spanning exactly [-tau, 0].
struct InitialHistory {
    double tau = 0.0;
    int dim = 0;
    HistoryKind kind = HistoryKind::Constant;

    Vec constant;             // Constant
    std::string family_id;    // Analytic
    Vec coeffs;               // Analytic
    std::vector<double> grid; // Sampled
    std::vector<Vec> samples; // Sampled

    static InitialHistory make_constant(double tau, Vec v);
    static InitialHistory make_analytic(double tau, std::string id, Vec coeffs);
    static InitialHistory make_sampled(double tau, std::vector<double> grid,
                                       std::vector<Vec> samples);

    /// Throws std::invalid_argument on malformed data (empty vector,
    /// unsorted grid, grid not spanning [-tau, 0], ...).
    void validate() const;
};

/// Analytic family: component-wise evaluator plus a bound on sup |phi'| used
/// for the sup-norm bracket. The registry starts with "constant" and
/// "scaled-tanh"; register_history_family extends it by id (call during
/// startup, not concurrently with evaluation).
struct HistoryFamily {
    std::function<Vec(const Vec& coeffs, double t)> eval;
    std::function<double(const Vec& coeffs)> derivative_bound;
};
void register_history_family(const std::string& id, HistoryFamily family);
bool history_family_registered(const std::string& id);

/// phi(t) for t in [-tau, 0]; exact for constant/analytic kinds,
/// piecewise-linear for sampled. Throws std::invalid_argument for t outside
/// the window (beyond a few-ulp slack).
Vec evaluate_history(const InitialHistory& phi, double t);

/// Two-sided bracket for sup_{[-tau,0]} ||phi(t)||. `value` is the attained
/// maximum found (a lower bound); `upper` adds the grid-resolution slack
/// from the family's derivative bound.
struct SupNormBracket {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// sup norm of the history, as the criteria consume it.
///
/// Constant histories and piecewise-linear samples are exact (the norm of a
/// linear segment is convex, so segment maxima sit at the knots). Other
/// analytic families are scanned on 4097 uniform samples and refined by
/// golden-section search around the best sample.
double history_sup_norm(const InitialHistory& phi);
SupNormBracket history_sup_norm_bracket(const InitialHistory& phi);

} // namespace gpfstab
