#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mourre/chebyshev.hpp"

namespace mourre::pingpong {

/// Chain families.  The well variants alternate between branches j-1 and j of
/// T_kappa; J2_DECREASING and F_INCREASING are the j=1 wells, G_VARIANT is
/// the mixed construction that additionally visits branch 2.
enum class Variant {
    J2_DECREASING,
    F_INCREASING,
    G_VARIANT,
    WELL_DECREASING,
    WELL_INCREASING,
    CUSTOM,
};

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

struct PingPongProblem {
    int kappa = 2;
    int n = 1;
    Variant variant = Variant::J2_DECREASING;
    int well_index = 1;  // well variants: 1 <= well_index <= kappa/2

    // CUSTOM only: anchor value X_{n+1}, branch for each level step
    // (ceil(n/2) entries, ordered from the middle of the chain outwards),
    // and for even n the extremum pinned at X_{n/2}.
    double anchor = 1.0;
    std::vector<cheb::BranchIndex> branch_plan;
    double mid_anchor = 0.0;
};

/// A calibrated chain: X_0 .. X_{n+1} with
///   X_{n-q} = E - X_{1+q}            (q = -1 .. ceil(n/2)-1)
///   T_kappa(X_q) = T_kappa(X_{n-q})  (q = 0 .. ceil(n/2)-1, opposite slopes)
/// and X_{n+1} pinned to an extremum of T_kappa.
struct ThresholdSolution {
    int kappa = 2;
    int n = 1;
    Variant variant = Variant::J2_DECREASING;
    int well_index = 1;
    double E = 0;
    std::vector<double> X;      // n+2 values
    std::vector<double> omega;  // ceil(n/2) values, all negative
    int order_m = 1;            // ceil(n/2)
};

/// construct_chain result; invalid chains are a value, not an error.
struct ChainResult {
    std::vector<double> X;
    bool valid = false;
    int failed_index = -1;  // first chain index that left its interval
};

/// Admissible open energy interval for the variant.
std::pair<double, double> admissible_interval(const PingPongProblem& p);

/// Build the chain for a trial energy.  Walks from the middle of the chain
/// outwards, alternating the reflection x -> E - x with a branch inverse of
/// T_kappa on the opposite-slope branch.
ChainResult construct_chain(const PingPongProblem& p, double E);

/// Calibrate E by bisection on X_{n+1}(E) - anchor and assert the full
/// invariant set on the result.
ThresholdSolution solve(const PingPongProblem& p, double tol = 1e-13);

/// Same, restricted to a sub-interval of the admissible range.  Deep chains
/// are constructible only on a window that shrinks like n^-3 near the band
/// accumulation point, so callers tracking consecutive depths should pass
/// the previous solution as the upper bound.
ThresholdSolution solve_within(const PingPongProblem& p, double E_lo, double E_hi,
                               double tol = 1e-13);

/// Certificate weights. omega_q relates the chain values of every harmonic:
/// g(X_mid) = sum_q omega_q g(X_q), mid = ceil((n+1)/2).
std::vector<double> omega_weights(const std::vector<double>& X, int kappa, int n);

/// Max residual of the relation above over harmonics j = 1..j_max.
double verify_linear_relation(const ThresholdSolution& s, int j_max);

/// Solutions for n = 1..n_max; asserts strict monotonicity of E in n.
std::vector<ThresholdSolution> sequence(int kappa, Variant v, int n_max, int well_index = 1);

/// Independent closed-form oracle for kappa in {3, 4}: solves
/// E = 1 + f_E^(n)(start) where f_E is the one-step return map and start is
/// cos(pi/kappa) for even-index thresholds, E/2 for odd-index ones.
/// even_index=true yields threshold 2n, false yields threshold 2n-1.
double fixed_point_form(int kappa, int n, bool even_index);

/// Depth-0 member of the decreasing family: E = 1 + cos(pi/kappa).
ThresholdSolution zeroth_solution(int kappa);

std::string to_json_string(const ThresholdSolution& s);
ThresholdSolution threshold_from_json(std::string_view text);

}  // namespace mourre::pingpong
