#include "mourre/chebyshev.hpp"

#include <cmath>
#include <string>

#include "mourre/errors.hpp"

namespace mourre::cheb {

namespace {
constexpr double PI = 3.14159265358979323846;
}

BranchIndex::BranchIndex(int kappa_, int j_) : kappa(kappa_), j(j_) {
    if (kappa < 1)
        throw domain_error("BranchIndex: kappa must be >= 1, got " + std::to_string(kappa));
    if (j < 0 || j >= kappa)
        throw domain_error("BranchIndex: j must lie in [0, kappa), got j=" + std::to_string(j) +
                           " kappa=" + std::to_string(kappa));
}

double BranchIndex::lower() const {
    if (j + 1 == kappa) return -1.0;
    if (2 * (j + 1) == kappa) return 0.0;
    return std::cos((j + 1) * PI / kappa);
}

double BranchIndex::upper() const {
    if (j == 0) return 1.0;
    if (2 * j == kappa) return 0.0;
    return std::cos(j * PI / kappa);
}

double eval_T(int n, double x) {
    if (n < 0) throw domain_error("eval_T: order must be >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_U(int n, double x) {
    if (n < 0) throw domain_error("eval_U: order must be >= 0");
    if (n == 0) return 0.0;  // U_{-1}
    double prev = 0.0, cur = 1.0;  // U_{-1}, U_0
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_T_derivative(int n, double x) {
    if (n < 0) throw domain_error("eval_T_derivative: order must be >= 0");
    if (n == 0) return 0.0;
    double t_prev = 1.0, t_cur = x;
    double d_prev = 0.0, d_cur = 1.0;
    for (int k = 1; k < n; ++k) {
        double t_next = 2.0 * x * t_cur - t_prev;
        double d_next = 2.0 * t_cur + 2.0 * x * d_cur - d_prev;
        t_prev = t_cur; t_cur = t_next;
        d_prev = d_cur; d_cur = d_next;
    }
    return d_cur;
}

double eval_U_derivative(int n, double x) {
    if (n < 0) throw domain_error("eval_U_derivative: order must be >= 0");
    if (n <= 1) return 0.0;  // U_{-1}, U_0 are constant
    const double w = x * x - 1.0;
    if (std::abs(w) >= 1e-8)
        return (n * eval_T(n, x) - x * eval_U(n, x)) / w;
    // near the endpoints: differentiate the recurrence
    double u_prev = 0.0, u_cur = 1.0;
    double d_prev = 0.0, d_cur = 0.0;
    for (int k = 1; k < n; ++k) {
        double u_next = 2.0 * x * u_cur - u_prev;
        double d_next = 2.0 * u_cur + 2.0 * x * d_cur - d_prev;
        u_prev = u_cur; u_cur = u_next;
        d_prev = d_cur; d_cur = d_next;
    }
    return d_cur;
}

double branch_inverse(const BranchIndex& b, double y) {
    if (y > 1.0) {
        if (y - 1.0 > EQ_TOL)
            throw domain_error("branch_inverse: level " + std::to_string(y) + " outside [-1, 1]");
        y = 1.0;
    } else if (y < -1.0) {
        if (-1.0 - y > EQ_TOL)
            throw domain_error("branch_inverse: level " + std::to_string(y) + " outside [-1, 1]");
        y = -1.0;
    }
    const double a = std::acos(y);
    const double theta = (b.j % 2 == 0) ? b.j * PI + a : (b.j + 1) * PI - a;
    return std::cos(theta / b.kappa);
}

std::vector<double> t_extrema(int kappa) {
    if (kappa < 1) throw domain_error("t_extrema: kappa must be >= 1");
    std::vector<double> out(kappa + 1);
    for (int l = 0; l <= kappa; ++l) {
        if (l == 0) out[l] = 1.0;
        else if (l == kappa) out[l] = -1.0;
        else if (2 * l == kappa) out[l] = 0.0;
        else out[l] = std::cos(l * PI / kappa);
    }
    return out;
}

double bracket_U(int a, int b, double x, double y) {
    return eval_U(a, x) * eval_U(b, y) - eval_U(a, y) * eval_U(b, x);
}

}  // namespace mourre::cheb
