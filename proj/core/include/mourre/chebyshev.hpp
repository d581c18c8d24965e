#pragma once

#include <vector>

namespace mourre::cheb {

/// Tolerance for exact identities (closed forms, round trips).
inline constexpr double EQ_TOL = 1e-12;
/// Tolerance for derived quantities (numerically propagated values).
inline constexpr double CMP_TOL = 1e-9;

/// One monotone branch of T_kappa.  Branch j covers
/// [cos((j+1)pi/kappa), cos(j pi/kappa)]; T_kappa is strictly increasing on
/// even-j branches and strictly decreasing on odd-j branches.
struct BranchIndex {
    int kappa;
    int j;

    BranchIndex(int kappa, int j);

    double lower() const;
    double upper() const;
    bool increasing() const { return j % 2 == 0; }
};

/// T_n(x) by the three-term recurrence.
double eval_T(int n, double x);

/// U_{n-1}(x) by the three-term recurrence; eval_U(0, x) == 0.
/// The roots of eval_U(n, .) are cos(l pi / n), l = 1..n-1.
double eval_U(int n, double x);

/// d/dx T_n(x), differentiated recurrence (exact in exact arithmetic).
double eval_T_derivative(int n, double x);

/// d/dx U_{n-1}(x).  Quotient formula away from +-1, differentiated
/// recurrence when |x^2 - 1| < 1e-8.
double eval_U_derivative(int n, double x);

/// Inverse of T_kappa restricted to branch b.  y is clamped into [-1, 1]
/// when within EQ_TOL of it; values further outside raise domain_error.
double branch_inverse(const BranchIndex& b, double y);

/// cos(l pi / kappa) for l = 0..kappa, strictly decreasing; the endpoints
/// and (for even kappa) the midpoint are exact.
std::vector<double> t_extrema(int kappa);

/// [f(x), g(y)] := f(x) g(y) - f(y) g(x).
template <typename F, typename G>
double bracket(F&& f, G&& g, double x, double y) {
    return f(x) * g(y) - f(y) * g(x);
}

/// [U_{a-1}(x), U_{b-1}(y)] for orders a, b.
double bracket_U(int a, int b, double x, double y);

}  // namespace mourre::cheb
