#include "mourre/pingpong.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mourre/errors.hpp"
#include "mourre/parallel.hpp"
#include "mourre/symbol.hpp"

namespace mourre::pingpong {

namespace {

constexpr double PI = 3.14159265358979323846;

double ext(int kappa, int l) {
    if (l == 0) return 1.0;
    if (l == kappa) return -1.0;
    if (2 * l == kappa) return 0.0;
    return std::cos(l * PI / kappa);
}

int mid_index(int n) { return (n + 1) / 2; }
int order_of(int n) { return (n + 1) / 2; }  // ceil(n/2)

/// Effective well index: 1 for the j=1 families, well_index for wells.
int effective_well(const PingPongProblem& p) {
    switch (p.variant) {
        case Variant::WELL_DECREASING:
        case Variant::WELL_INCREASING:
            return p.well_index;
        default:
            return 1;
    }
}

bool is_decreasing_family(Variant v) {
    return v == Variant::J2_DECREASING || v == Variant::WELL_DECREASING;
}

bool is_increasing_family(Variant v) {
    return v == Variant::F_INCREASING || v == Variant::WELL_INCREASING;
}

void validate_problem(const PingPongProblem& p) {
    if (p.kappa < 2) throw domain_error("pingpong: kappa must be >= 2");
    if (p.n < 1) throw domain_error("pingpong: n must be >= 1");
    const int j = effective_well(p);
    switch (p.variant) {
        case Variant::J2_DECREASING:
        case Variant::F_INCREASING:
            break;
        case Variant::WELL_DECREASING:
        case Variant::WELL_INCREASING:
            if (j < 1 || 2 * j > p.kappa)
                throw domain_error("pingpong: well_index must lie in [1, kappa/2]");
            break;
        case Variant::G_VARIANT:
            if (p.kappa < 3) throw domain_error("pingpong: G variant needs kappa >= 3");
            break;
        case Variant::CUSTOM: {
            if (static_cast<int>(p.branch_plan.size()) != order_of(p.n))
                throw domain_error("pingpong: CUSTOM branch_plan must have ceil(n/2) entries");
            for (const auto& b : p.branch_plan)
                if (b.kappa != p.kappa)
                    throw domain_error("pingpong: CUSTOM branch_plan kappa mismatch");
            auto near_extremum = [&](double v) {
                for (int l = 0; l <= p.kappa; ++l)
                    if (std::abs(v - ext(p.kappa, l)) <= cheb::EQ_TOL) return true;
                return false;
            };
            if (!near_extremum(p.anchor))
                throw domain_error("pingpong: CUSTOM anchor must be an extremum of T_kappa");
            if (p.n % 2 == 0 && !near_extremum(p.mid_anchor))
                throw domain_error("pingpong: CUSTOM mid_anchor must be an extremum of T_kappa");
            break;
        }
    }
}

double anchor_value(const PingPongProblem& p) {
    const int j = effective_well(p);
    switch (p.variant) {
        case Variant::J2_DECREASING:
        case Variant::WELL_DECREASING:
            return ext(p.kappa, j - 1);
        case Variant::F_INCREASING:
        case Variant::WELL_INCREASING:
            return ext(p.kappa, j + 1);
        case Variant::G_VARIANT:
            return 1.0;
        case Variant::CUSTOM:
            return p.anchor;
    }
    return 1.0;
}

double mid_extremum(const PingPongProblem& p) {
    const int j = effective_well(p);
    switch (p.variant) {
        case Variant::G_VARIANT:
            return ext(p.kappa, 1);
        case Variant::CUSTOM:
            return p.mid_anchor;
        default:
            return ext(p.kappa, j);
    }
}

/// Interval that reflected (high-index) chain points must stay in.
std::pair<double, double> right_interval(const PingPongProblem& p) {
    const int j = effective_well(p);
    if (is_decreasing_family(p.variant)) return {ext(p.kappa, j), ext(p.kappa, j - 1)};
    if (is_increasing_family(p.variant)) return {ext(p.kappa, j + 1), ext(p.kappa, j)};
    if (p.variant == Variant::G_VARIANT) return {ext(p.kappa, 2), ext(p.kappa, 1)};
    return {-1.0, 1.0};  // CUSTOM
}

/// Branch receiving the level-matched (low-index) point X_q.
cheb::BranchIndex left_branch(const PingPongProblem& p, int q, int step) {
    const int j = effective_well(p);
    switch (p.variant) {
        case Variant::J2_DECREASING:
        case Variant::WELL_DECREASING:
            return cheb::BranchIndex(p.kappa, j);
        case Variant::F_INCREASING:
        case Variant::WELL_INCREASING:
            return cheb::BranchIndex(p.kappa, j - 1);
        case Variant::G_VARIANT:
            return cheb::BranchIndex(p.kappa, q == 0 ? 2 : 0);
        case Variant::CUSTOM:
            return p.branch_plan.at(static_cast<std::size_t>(step));
    }
    return cheb::BranchIndex(p.kappa, 0);
}

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::J2_DECREASING: return "J2_DECREASING";
        case Variant::F_INCREASING: return "F_INCREASING";
        case Variant::G_VARIANT: return "G_VARIANT";
        case Variant::WELL_DECREASING: return "WELL_DECREASING";
        case Variant::WELL_INCREASING: return "WELL_INCREASING";
        case Variant::CUSTOM: return "CUSTOM";
    }
    return "J2_DECREASING";
}

Variant variant_from_string(std::string_view s) {
    if (s == "J2_DECREASING") return Variant::J2_DECREASING;
    if (s == "F_INCREASING") return Variant::F_INCREASING;
    if (s == "G_VARIANT") return Variant::G_VARIANT;
    if (s == "WELL_DECREASING") return Variant::WELL_DECREASING;
    if (s == "WELL_INCREASING") return Variant::WELL_INCREASING;
    if (s == "CUSTOM") return Variant::CUSTOM;
    throw domain_error("variant_from_string: unknown variant '" + std::string(s) + "'");
}

std::pair<double, double> admissible_interval(const PingPongProblem& p) {
    validate_problem(p);
    const int k = p.kappa;
    const int j = effective_well(p);
    if (is_decreasing_family(p.variant))
        return {2.0 * ext(k, j), ext(k, j - 1) + ext(k, j)};
    if (is_increasing_family(p.variant))
        return {ext(k, j) + ext(k, j + 1), ext(k, j - 1) + ext(k, j + 1)};
    if (p.variant == Variant::G_VARIANT)
        return {1.0 + ext(k, 3), 1.0 + ext(k, 2)};
    const auto& b = p.branch_plan.back();
    return {p.anchor + b.lower(), p.anchor + b.upper()};
}

ChainResult construct_chain(const PingPongProblem& p, double E) {
    validate_problem(p);
    const int n = p.n;
    const int mid = mid_index(n);
    const auto [rlo, rhi] = right_interval(p);
    const double slack = 1e-13;

    ChainResult out;
    out.X.assign(static_cast<std::size_t>(n) + 2, std::numeric_limits<double>::quiet_NaN());

    auto right_ok = [&](double v) { return v >= rlo - slack && v <= rhi + slack; };

    if (n % 2 == 1) {
        out.X[mid] = E / 2.0;
        if (!right_ok(out.X[mid])) {
            out.failed_index = mid;
            return out;
        }
    } else {
        out.X[mid] = mid_extremum(p);
    }

    for (int q = mid - 1, step = 0; q >= 0; --q, ++step) {
        const int r = n - q;
        if (r != mid) {
            out.X[r] = E - out.X[q + 1];
            if (!right_ok(out.X[r])) {
                out.failed_index = r;
                return out;
            }
        }
        const double level = cheb::eval_T(p.kappa, out.X[r]);
        out.X[q] = cheb::branch_inverse(left_branch(p, q, step), level);
    }
    out.X[n + 1] = E - out.X[0];
    out.valid = true;
    return out;
}

std::vector<double> omega_weights(const std::vector<double>& X, int kappa, int n) {
    if (static_cast<int>(X.size()) != n + 2)
        throw domain_error("omega_weights: chain must have n+2 points");
    const int m = order_of(n);

    // factor F(x) = m(x) U_{kappa-1}(x), tracked as log-magnitude + sign so
    // that deep chains do not underflow the raw products.  A vanishing factor
    // (the even-n chains pin one point on an extremum of T_kappa, where
    // U_{kappa-1} = 0) is only an error if a product below actually uses it.
    std::vector<int> neg_prefix(static_cast<std::size_t>(n) + 2, 0);
    std::vector<int> bad_prefix(static_cast<std::size_t>(n) + 2, 0);
    std::vector<double> log_prefix(static_cast<std::size_t>(n) + 2, 0.0);
    for (int pidx = 0; pidx <= n; ++pidx) {
        const double f = symbol::m_weight(X[pidx]) * cheb::eval_U(kappa, X[pidx]);
        const bool bad = std::abs(f) < 1e-300;
        bad_prefix[pidx + 1] = bad_prefix[pidx] + (bad ? 1 : 0);
        neg_prefix[pidx + 1] = neg_prefix[pidx] + (!bad && f < 0 ? 1 : 0);
        log_prefix[pidx + 1] = log_prefix[pidx] + (bad ? 0.0 : std::log(std::abs(f)));
    }
    auto range_log = [&](int a, int b) { return log_prefix[b + 1] - log_prefix[a]; };
    auto range_neg = [&](int a, int b) { return neg_prefix[b + 1] - neg_prefix[a]; };
    auto range_bad = [&](int a, int b) { return bad_prefix[b + 1] - bad_prefix[a]; };

    std::vector<double> omega(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) {
        double lead, logv;
        int negs, bads;
        if (n % 2 == 1) {
            const int h = (n - 1) / 2;
            lead = 2.0 * (((h - q) % 2 == 0) ? 1.0 : -1.0);
            logv = range_log(h + 1, n - q) - range_log(q, h);
            negs = range_neg(h + 1, n - q) + range_neg(q, h);
            bads = range_bad(h + 1, n - q) + range_bad(q, h);
        } else {
            const int h = n / 2;
            lead = ((h - 1 - q) % 2 == 0) ? 1.0 : -1.0;
            logv = range_log(h + 1, n - q) - range_log(q, h - 1);
            negs = range_neg(h + 1, n - q) + range_neg(q, h - 1);
            bads = range_bad(h + 1, n - q) + range_bad(q, h - 1);
        }
        if (bads > 0)
            throw precision_error("omega_weights: degenerate chain factor in certificate product");
        const double sign = (negs % 2 == 0) ? 1.0 : -1.0;
        omega[static_cast<std::size_t>(q)] = lead * sign * std::exp(logv);
    }
    return omega;
}

namespace {

void assert_solution_invariants(const PingPongProblem& p, ThresholdSolution& s, double anchor) {
    const int n = s.n;
    const auto& X = s.X;
    std::ostringstream why;

    // double-precision resolution of the chain
    std::vector<double> sorted(X);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i + 1] - sorted[i] < 1e-11)
            throw precision_error("solve: adjacent chain points closer than 1e-11 (kappa=" +
                                  std::to_string(s.kappa) + ", n=" + std::to_string(n) + ")");

    const double close_anchor = (n <= 64) ? 1e-9 : 1e-7;
    if (std::abs(X[static_cast<std::size_t>(n) + 1] - anchor) > close_anchor) {
        why << "solve: X_{n+1} misses the anchor by "
            << std::abs(X[static_cast<std::size_t>(n) + 1] - anchor);
        throw solver_error(why.str());
    }

    for (int q = -1; q < s.order_m; ++q) {
        const double lhs = X[static_cast<std::size_t>(n - q)];
        const double rhs = s.E - X[static_cast<std::size_t>(q + 1)];
        if (std::abs(lhs - rhs) > 1e-10)
            throw solver_error("solve: symmetry relation violated at q=" + std::to_string(q));
    }
    for (int q = 0; q < s.order_m; ++q) {
        const double tq = cheb::eval_T(s.kappa, X[static_cast<std::size_t>(q)]);
        const double tr = cheb::eval_T(s.kappa, X[static_cast<std::size_t>(n - q)]);
        if (std::abs(tq - tr) > 1e-10)
            throw solver_error("solve: level condition violated at q=" + std::to_string(q));
        const double dq = s.kappa * cheb::eval_U(s.kappa, X[static_cast<std::size_t>(q)]);
        const double dr = s.kappa * cheb::eval_U(s.kappa, X[static_cast<std::size_t>(n - q)]);
        if (!(dq * dr < 0.0))
            throw solver_error("solve: slope condition violated at q=" + std::to_string(q));
    }

    // variant ordering
    auto strictly_increasing = [](const std::vector<double>& v) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (!(v[i] < v[i + 1])) return false;
        return true;
    };
    if (is_decreasing_family(p.variant)) {
        if (!strictly_increasing(X)) throw solver_error("solve: chain not strictly increasing");
    } else if (is_increasing_family(p.variant)) {
        std::vector<double> rev(X.rbegin(), X.rend());
        if (!strictly_increasing(rev)) throw solver_error("solve: chain not strictly decreasing");
    } else if (p.variant == Variant::G_VARIANT) {
        std::vector<double> path;
        path.push_back(X[0]);
        for (int i = n; i >= 1; --i) path.push_back(X[static_cast<std::size_t>(i)]);
        path.push_back(X[static_cast<std::size_t>(n) + 1]);
        if (!strictly_increasing(path)) throw solver_error("solve: G chain ordering violated");
    }

    for (double w : s.omega)
        if (!(w < 0.0)) throw solver_error("solve: certificate weight not negative");

    const double rel = verify_linear_relation(s, 8);
    if (rel > 1e-8)
        throw precision_error("solve: linear relation residual " + std::to_string(rel) +
                              " exceeds 1e-8 (kappa=" + std::to_string(s.kappa) +
                              ", n=" + std::to_string(n) + ")");
}

}  // namespace

ThresholdSolution solve(const PingPongProblem& p, double tol) {
    const auto [a, b] = admissible_interval(p);
    return solve_within(p, a, b, tol);
}

ThresholdSolution solve_within(const PingPongProblem& p, double E_lo, double E_hi, double tol) {
    if (tol < 1e-13) throw domain_error("solve: tol must be >= 1e-13");
    const auto [adm_lo, adm_hi] = admissible_interval(p);
    const double a = std::max(E_lo, adm_lo);
    const double b = std::min(E_hi, adm_hi);
    if (!(a < b))
        throw domain_error("solve: requested interval misses the admissible range [" +
                           std::to_string(adm_lo) + ", " + std::to_string(adm_hi) + "]");
    const double width = b - a;
    const double anchor = anchor_value(p);
    const int n = p.n;

    auto resid = [&](double E) -> std::optional<double> {
        auto c = construct_chain(p, E);
        if (!c.valid) return std::nullopt;
        return c.X[static_cast<std::size_t>(n) + 1] - anchor;
    };

    // bracket discovery: geometric walk-in from both ends, then a uniform
    // interior grid if the valid E-window ends well inside the interval
    std::vector<std::pair<double, double>> evals;  // valid (E, residual), E ascending
    std::vector<double> failures;                  // energies with no valid chain
    auto try_eval = [&](double E) {
        const auto r = resid(E);
        if (r)
            evals.emplace_back(E, *r);
        else
            failures.push_back(E);
        return r.has_value();
    };
    for (double f = 1e-9; f < 0.45; f *= 4.0)
        if (try_eval(a + width * f)) break;
    for (double f = 1e-9; f < 0.45; f *= 4.0)
        if (try_eval(b - width * f)) break;

    auto find_bracket = [&]() -> bool {
        std::sort(evals.begin(), evals.end());
        for (std::size_t i = 0; i + 1 < evals.size(); ++i)
            if (evals[i].second == 0.0 || evals[i + 1].second == 0.0 ||
                (evals[i].second > 0) != (evals[i + 1].second > 0))
                return true;
        return false;
    };
    bool bracketed = find_bracket();
    if (!bracketed) {
        evals.clear();
        const int grid = 257;
        for (int i = 0; i <= grid; ++i)
            try_eval(a + width * 1e-9 + width * (1.0 - 2e-9) * i / grid);
        bracketed = find_bracket();
    }
    if (!bracketed && !evals.empty()) {
        // The residual can change sign within one grid cell of the window
        // edge; push both edges outward by bisecting valid against failing
        // energies, keeping every successful evaluation for the bracket scan.
        std::sort(evals.begin(), evals.end());
        double wlo = evals.front().first, whi = evals.back().first;
        double below = a, above = b;
        for (double e : failures) {
            if (e < wlo) below = std::max(below, e);
            if (e > whi) above = std::min(above, e);
        }
        for (int it = 0; it < 90 && wlo - below > 1e-17 * width; ++it) {
            const double mid = 0.5 * (below + wlo);
            if (try_eval(mid))
                wlo = mid;
            else
                below = mid;
        }
        for (int it = 0; it < 90 && above - whi > 1e-17 * width; ++it) {
            const double mid = 0.5 * (whi + above);
            if (try_eval(mid))
                whi = mid;
            else
                above = mid;
        }
        bracketed = find_bracket();
        if (!bracketed && whi > wlo) {
            const int grid = 257;  // fine pass across the refined window
            for (int i = 1; i < grid; ++i) try_eval(wlo + (whi - wlo) * i / grid);
            bracketed = find_bracket();
        }
    }
    if (!bracketed) {
        std::ostringstream msg;
        if (evals.empty()) {
            msg << "solve: chain construction failed across [" << a << ", " << b << "] for "
                << to_string(p.variant) << " kappa=" << p.kappa << " n=" << n;
        } else {
            msg << "solve: no sign change over [" << a << ", " << b << "] for "
                << to_string(p.variant) << " kappa=" << p.kappa << " n=" << n << "; residuals in ["
                << evals.front().second << ", " << evals.back().second << "] over " << evals.size()
                << " valid energies";
        }
        throw solver_error(msg.str());
    }

    double lo = evals.front().first, hi = evals.back().first;
    double rlo = evals.front().second;
    for (std::size_t i = 0; i + 1 < evals.size(); ++i)
        if (evals[i].second == 0.0 || evals[i + 1].second == 0.0 ||
            (evals[i].second > 0) != (evals[i + 1].second > 0)) {
            lo = evals[i].first;
            rlo = evals[i].second;
            hi = evals[i + 1].first;
            break;
        }

    const bool lo_pos = rlo > 0;
    int iters = 0;
    while (hi - lo > tol && iters < 200) {
        const double mid = 0.5 * (lo + hi);
        const auto r = resid(mid);
        bool mid_pos;
        if (r) {
            if (*r == 0.0) {
                lo = hi = mid;
                break;
            }
            mid_pos = *r > 0;
        } else {
            mid_pos = (mid - lo <= hi - mid) ? lo_pos : !lo_pos;
        }
        if (mid_pos == lo_pos)
            lo = mid;
        else
            hi = mid;
        ++iters;
    }

    double E = 0.5 * (lo + hi);
    // secant polish: the certificate checks amplify the anchor residual by the
    // top harmonic's derivative, so push it to machine level instead of
    // stopping at the bisection bracket width
    {
        double bestE = E;
        double bestR = std::numeric_limits<double>::infinity();
        if (const auto rm = resid(E)) bestR = std::abs(*rm);
        double ea = lo, eb = hi;
        auto ra = resid(ea), rb = resid(eb);
        if (ra && rb) {
            for (int it = 0; it < 12 && *ra != *rb; ++it) {
                const double en = eb - *rb * (eb - ea) / (*rb - *ra);
                if (!std::isfinite(en) || en <= a || en >= b) break;
                const auto rn = resid(en);
                if (!rn) break;
                ea = eb;
                ra = rb;
                eb = en;
                rb = rn;
                if (std::abs(*rb) < bestR) {
                    bestR = std::abs(*rb);
                    bestE = eb;
                }
                if (bestR == 0.0) break;
            }
        }
        E = bestE;
    }
    ChainResult chain = construct_chain(p, E);
    if (!chain.valid) chain = construct_chain(p, lo);
    if (!chain.valid) chain = construct_chain(p, hi);
    if (!chain.valid)
        throw solver_error("solve: calibrated energy produced no valid chain");

    ThresholdSolution s;
    s.kappa = p.kappa;
    s.n = n;
    s.variant = p.variant;
    s.well_index = effective_well(p);
    s.E = E;
    s.X = std::move(chain.X);
    s.omega = omega_weights(s.X, p.kappa, n);
    s.order_m = order_of(n);
    assert_solution_invariants(p, s, anchor);
    return s;
}

double verify_linear_relation(const ThresholdSolution& s, int j_max) {
    const int mid = mid_index(s.n);
    double worst = 0.0;
    for (int j = 1; j <= j_max; ++j) {
        double acc = symbol::g2(j, s.kappa, {s.E, s.X[static_cast<std::size_t>(mid)]});
        for (int q = 0; q < s.order_m; ++q)
            acc -= s.omega[static_cast<std::size_t>(q)] *
                   symbol::g2(j, s.kappa, {s.E, s.X[static_cast<std::size_t>(q)]});
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

std::vector<ThresholdSolution> sequence(int kappa, Variant v, int n_max, int well_index) {
    if (v == Variant::CUSTOM)
        throw domain_error("sequence: CUSTOM chains have no n-indexed family");
    if (n_max < 1) throw domain_error("sequence: n_max must be >= 1");

    std::vector<ThresholdSolution> out(static_cast<std::size_t>(n_max));
    util::parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
        PingPongProblem p;
        p.kappa = kappa;
        p.n = static_cast<int>(i) + 1;
        p.variant = v;
        p.well_index = well_index;
        out[i] = solve(p);
    });

    const bool decreasing = is_decreasing_family(v);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        const bool ok = decreasing ? out[i + 1].E < out[i].E : out[i + 1].E > out[i].E;
        if (!ok)
            throw solver_error("sequence: thresholds not strictly monotone at n=" +
                               std::to_string(i + 2));
    }
    return out;
}

double fixed_point_form(int kappa, int n, bool even_index) {
    if (kappa != 3 && kappa != 4)
        throw domain_error("fixed_point_form: closed-form map only for kappa in {3, 4}");
    if (n < 1) throw domain_error("fixed_point_form: n must be >= 1");

    const double root3 = std::sqrt(3.0);
    auto iterate = [&](double E) -> std::optional<double> {
        double x = even_index ? ext(kappa, 1) : E / 2.0;
        for (int k = 0; k < n; ++k) {
            const double u = E - x;
            const double w = 1.0 - u * u;
            if (w < -1e-15) return std::nullopt;
            const double rad = std::sqrt(std::max(w, 0.0));
            x = (kappa == 3) ? 0.5 * (-u + root3 * rad) : rad;
        }
        return E - 1.0 - x;
    };

    const double a = 2.0 * ext(kappa, 1), b = 1.0 + ext(kappa, 1);
    std::vector<std::pair<double, double>> evals;
    auto try_eval = [&](double E) {
        const auto r = iterate(E);
        if (r) evals.emplace_back(E, *r);
        return r.has_value();
    };
    for (double f = 1e-12; f < 0.45; f *= 4.0)
        if (try_eval(a + (b - a) * f)) break;
    for (double f = 1e-12; f < 0.45; f *= 4.0)
        if (try_eval(b - (b - a) * f)) break;
    auto bracket_at = [&]() -> int {
        std::sort(evals.begin(), evals.end());
        for (std::size_t i = 0; i + 1 < evals.size(); ++i)
            if ((evals[i].second > 0) != (evals[i + 1].second > 0)) return static_cast<int>(i);
        return -1;
    };
    int at = bracket_at();
    if (at < 0) {
        evals.clear();
        for (int i = 0; i <= 257; ++i)
            try_eval(a + (b - a) * (1e-12 + (1.0 - 2e-12) * i / 257));
        at = bracket_at();
    }
    if (at < 0) throw solver_error("fixed_point_form: no bracket");
    double lo = evals[static_cast<std::size_t>(at)].first;
    double hi = evals[static_cast<std::size_t>(at) + 1].first;
    const bool lo_pos = evals[static_cast<std::size_t>(at)].second > 0;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        const auto r = iterate(mid);
        const bool mid_pos = r ? *r > 0 : ((mid - lo <= hi - mid) ? lo_pos : !lo_pos);
        if (mid_pos == lo_pos)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ThresholdSolution zeroth_solution(int kappa) {
    if (kappa < 2) throw domain_error("zeroth_solution: kappa must be >= 2");
    ThresholdSolution s;
    s.kappa = kappa;
    s.n = 0;
    s.variant = Variant::J2_DECREASING;
    s.well_index = 1;
    s.E = 1.0 + ext(kappa, 1);
    s.X = {ext(kappa, 1), 1.0};
    s.omega = {};
    s.order_m = 0;
    return s;
}

std::string to_json_string(const ThresholdSolution& s) {
    nlohmann::json out;
    out["kappa"] = s.kappa;
    out["n"] = s.n;
    out["variant"] = std::string(to_string(s.variant));
    out["well_index"] = s.well_index;
    out["E"] = s.E;
    out["X"] = s.X;
    out["omega"] = s.omega;
    out["order_m"] = s.order_m;
    return out.dump();
}

ThresholdSolution threshold_from_json(std::string_view text) {
    nlohmann::json in = nlohmann::json::parse(text);
    ThresholdSolution s;
    s.kappa = in.at("kappa").get<int>();
    s.n = in.at("n").get<int>();
    s.variant = variant_from_string(in.at("variant").get<std::string>());
    s.well_index = in.value("well_index", 1);
    s.E = in.at("E").get<double>();
    s.X = in.at("X").get<std::vector<double>>();
    s.omega = in.at("omega").get<std::vector<double>>();
    s.order_m = in.at("order_m").get<int>();
    return s;
}

}  // namespace mourre::pingpong
