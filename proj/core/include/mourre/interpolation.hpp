#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mourre/pingpong.hpp"
#include "mourre/symbol.hpp"

namespace mourre::interpolation {

/// A band between two consecutive thresholds and the harmonic multipliers
/// to combine.  The combination is normalized by fixing the coefficient of
/// the first multiplier (which must be 1) to one.
struct InterpolationProblem {
    int kappa = 2;
    pingpong::ThresholdSolution left;   // lower band edge (the deeper chain)
    pingpong::ThresholdSolution right;  // upper band edge
    std::vector<int> sigma;             // strictly increasing, sigma.front() == 1
};

struct SolveReport {
    symbol::Combination combination;
    int matrix_rank = 0;   // rank of the full constraint matrix
    double residual = 0;   // max |row . rho| over all constraints
    int free_dims = 0;     // solution-space dimension beyond the normalization
    // basis of the residual-preserving directions; first coefficient is 0
    std::vector<std::vector<double>> nullspace;
};

/// Constraint matrix: for each band edge with chain depth m, value rows
/// G = 0 at X_q (q = 0..ceil(m/2)-1) followed by derivative rows dG/dx = 0
/// at X_q (q = 1..floor(m/2)).  Columns follow sigma.
std::vector<std::vector<double>> assemble(const InterpolationProblem& p);

/// Fix the first coefficient to 1, move its column to the right-hand side
/// and solve the rest by singular-value least squares (minimum-norm when
/// underdetermined).  Inconsistent systems (residual > 1e-8) raise an error
/// carrying the residual.
SolveReport solve_coefficients(const InterpolationProblem& p);

/// One-parameter family from a single value constraint at x = H1 - 1 (the
/// band edge where the partner coordinate sits at 1): the middle coefficient
/// as an affine function of the last one.
struct AffineFamily {
    int kappa = 8;
    std::vector<int> sigma;
    double intercept = 0;
    double slope = 0;

    symbol::Combination member(double rho_last) const;
};

AffineFamily solve_single_constraint_family(int kappa, double H1, const std::vector<int>& sigma);

struct SigmaVerdict {
    std::vector<int> sigma;
    bool solved = false;
    bool certified = false;
    double residual = 0;  // solve residual when solved
    std::string note;     // diagnostic for rejected candidates
};

struct SearchResult {
    SolveReport report;
    std::vector<int> sigma;
    std::vector<SigmaVerdict> verdicts;  // one per tried candidate, pool order
};

/// Try candidate index sets in pool order (ignoring base.sigma): solve, then
/// screen the band for positivity and re-certify the winner at full
/// resolution.  Returns the first certified candidate; throws when the pool
/// (or budget) is exhausted, with per-candidate diagnostics.
SearchResult search_sigma(const InterpolationProblem& base,
                          const std::vector<std::vector<int>>& pool, int budget);

/// {1..2n} first, then {1..2n-1} with one larger trailing index, then
/// lexicographic 2n-subsets of {1..2n+4} containing 1, capped at budget.
std::vector<std::vector<int>> default_sigma_pool(int n, int budget);

std::string to_json_string(const SolveReport& r);
SolveReport report_from_json(std::string_view text);

}  // namespace mourre::interpolation
