#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mourre/symbol.hpp"

namespace mourre::verifier {

enum class VerdictKind { STRICTLY_POSITIVE, NONNEGATIVE_WITH_ZEROS, SIGN_CHANGE };

std::string_view to_string(VerdictKind v);
VerdictKind verdict_from_string(std::string_view s);

/// Outcome of scanning one constant-energy surface.  Locations are x values
/// in 2-D and (x, y) pairs flattened in scan order in 3-D.
struct EnergyVerdict {
    double E = 0;
    VerdictKind kind = VerdictKind::STRICTLY_POSITIVE;
    double min_value = 0;         // refined minimum of G over the surface
    std::vector<double> argmin;   // location of the minimum
    std::vector<double> zeros;    // refined tangency locations (|G| small)
    std::vector<double> witness;  // a strictly negative location, if any
};

/// One evaluated sample, for plot-data export.
struct PlotSample {
    double E = 0;
    double x = 0;
    double y = 0;
    bool has_y = false;
    double G = 0;
};

struct ScanReport {
    int kappa = 2;
    symbol::Combination combination;
    int dim = 2;
    double E_lo = 0, E_hi = 0;
    int E_samples = 0, x_samples = 0, y_samples = 0;
    std::vector<EnergyVerdict> verdicts;  // band edges first and last
    double global_min = 0;
    std::vector<double> argmin;  // (E, x) or (E, x, y)
    bool certified = false;      // every interior energy strictly positive
    std::string failure;         // first offending energy, when not certified
};

/// Evaluate G over x in [max(E-1,-1), min(E+1,1)], refine every candidate
/// minimum by golden-section and classify.  Strict positivity means the
/// refined minimum exceeds 1e-7; refined values in [-1e-8, 1e-7] count as
/// tangency zeros; anything below -1e-8 is a sign change.
EnergyVerdict scan_2d(const symbol::Combination& c, double E, int x_samples,
                      std::vector<PlotSample>* sink = nullptr);

/// Nested scan over y in [max(E-2,-1), min(E+2,1)] and x in the slice
/// interval keeping all three coordinates in range; slices narrower than
/// 1e-12 evaluate as single points.
EnergyVerdict scan_3d(const symbol::Combination& c, double E, int y_samples, int x_samples,
                      std::vector<PlotSample>* sink = nullptr);

/// Scan a closed band: both edges exactly, then E_samples interior energies
/// inset by a 1e-6 margin.  certified requires every interior verdict to be
/// STRICTLY_POSITIVE; the edge verdicts are reported but not required.
ScanReport certify_band(const symbol::Combination& c, double E_lo, double E_hi,
                        int E_samples = 256, int x_samples = 512,
                        std::vector<PlotSample>* sink = nullptr);

ScanReport certify_band_3d(const symbol::Combination& c, double E_lo, double E_hi,
                           int E_samples = 128, int y_samples = 64, int x_samples = 128,
                           std::vector<PlotSample>* sink = nullptr);

/// Throw a certification error (carrying the first witness) when a band
/// report is not certified.
void require_certified(const ScanReport& report);

/// Pointwise gap between the weighted two-harmonic combination (1, 9/14)
/// at base order 2 and its closed-form factorization.
double factorization_residual_k2(double E, double x);

/// Max |gap| over a uniform grid at fixed energy.
double factorization_check_k2(double E, int samples);

/// Lower root s_- of the second quadratic factor.
double factorization_s_minus(double E);

/// Threshold gap decay: solve the depth-2n decreasing family for n up to
/// n_max, regress log(E_2n - 2 cos(pi/kappa)) on log(n) over the top half
/// of the achieved range.  Depths whose chains exhaust double precision
/// truncate the series.
struct ConvergenceStudy {
    int kappa = 3;
    std::vector<int> n;        // study index (chain depth is 2n)
    std::vector<double> E;     // threshold at depth 2n
    std::vector<double> gap;   // E - 2 cos(pi/kappa)
    double slope = 0;
    double intercept = 0;
    std::vector<double> residuals;  // per regression point
    int fit_from = 0;               // first index used in the fit
    int truncated_at = -1;          // requested depth that failed, if any
};

ConvergenceStudy convergence_study(int kappa, int n_max);

std::string scan_to_json_string(const ScanReport& r);
ScanReport scan_from_json(std::string_view text);
std::string plot_csv(const std::vector<PlotSample>& samples);
std::string convergence_csv(const ConvergenceStudy& s);
std::string convergence_to_json_string(const ConvergenceStudy& s);

}  // namespace mourre::verifier
