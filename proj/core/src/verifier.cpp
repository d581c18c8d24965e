#include "mourre/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mourre/errors.hpp"
#include "mourre/parallel.hpp"
#include "mourre/pingpong.hpp"
#include "mourre/textio.hpp"

namespace mourre::verifier {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double STRICT_MIN = 1e-7;   // below this a minimum is a tangency...
constexpr double NEG_TOL = -1e-8;     // ...and below this a sign change
constexpr double REFINE_BELOW = 1e-4;
constexpr double EDGE_MARGIN = 1e-6;

/// Golden-section minimum over [a, b] to width tol; returns the best
/// (x, f(x)) among every point evaluated, endpoints included.
std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                     double tol) {
    const double phi = 0.6180339887498949;
    double bx = a, bf = f(a);
    const double fb = f(b);
    if (fb < bf) {
        bx = b;
        bf = fb;
    }
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    auto track = [&](double x, double v) {
        if (v < bf) {
            bf = v;
            bx = x;
        }
    };
    track(x1, f1);
    track(x2, f2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
            track(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
            track(x2, f2);
        }
    }
    return {bx, bf};
}

struct SliceScan {
    double min_value = std::numeric_limits<double>::infinity();
    double argmin = 0;
    std::vector<std::pair<double, double>> zeros;  // (x, value)
};

/// Scan one 1-D slice: grid evaluation, golden refinement of every local
/// minimum below REFINE_BELOW (window +-2 cells).
SliceScan scan_slice(const std::function<double(double)>& f, double lo, double hi, int samples,
                     double E, double y, bool has_y, std::vector<PlotSample>* sink) {
    SliceScan out;
    if (hi - lo < 1e-12) {
        const double v = f(lo);
        if (sink) sink->push_back({E, lo, y, has_y, v});
        out.min_value = v;
        out.argmin = lo;
        if (v <= STRICT_MIN) out.zeros.emplace_back(lo, v);
        return out;
    }
    std::vector<double> xs(static_cast<std::size_t>(samples)), vs(xs.size());
    for (int i = 0; i < samples; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (samples - 1);
        vs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        if (sink)
            sink->push_back({E, xs[static_cast<std::size_t>(i)], y, has_y,
                             vs[static_cast<std::size_t>(i)]});
        if (vs[static_cast<std::size_t>(i)] < out.min_value) {
            out.min_value = vs[static_cast<std::size_t>(i)];
            out.argmin = xs[static_cast<std::size_t>(i)];
        }
    }
    for (int i = 0; i < samples; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const bool left_ok = (i == 0) || (vs[si] <= vs[si - 1]);
        const bool right_ok = (i == samples - 1) || (vs[si] <= vs[si + 1]);
        if (!left_ok || !right_ok || vs[si] >= REFINE_BELOW) continue;
        const double wa = xs[static_cast<std::size_t>(std::max(0, i - 2))];
        const double wb = xs[static_cast<std::size_t>(std::min(samples - 1, i + 2))];
        const auto [xm, fm] = golden_min(f, wa, wb, 1e-12);
        if (fm < out.min_value) {
            out.min_value = fm;
            out.argmin = xm;
        }
        if (fm <= STRICT_MIN) {
            bool fresh = true;
            for (auto& [zx, zv] : out.zeros)
                if (std::abs(zx - xm) <= 1e-8) {
                    fresh = false;
                    if (fm < zv) {
                        zx = xm;
                        zv = fm;
                    }
                }
            if (fresh) out.zeros.emplace_back(xm, fm);
        }
    }
    std::sort(out.zeros.begin(), out.zeros.end());
    return out;
}

void classify(EnergyVerdict& v) {
    if (v.min_value < NEG_TOL)
        v.kind = VerdictKind::SIGN_CHANGE;
    else if (v.min_value > STRICT_MIN)
        v.kind = VerdictKind::STRICTLY_POSITIVE;
    else
        v.kind = VerdictKind::NONNEGATIVE_WITH_ZEROS;
}

ScanReport certify_common(const symbol::Combination& c, int dim, double E_lo, double E_hi,
                          int E_samples, int x_samples, int y_samples,
                          const std::function<EnergyVerdict(double, std::vector<PlotSample>*)>& scan,
                          std::vector<PlotSample>* sink) {
    if (!(E_lo < E_hi)) throw domain_error("certify_band: band must satisfy E_lo < E_hi");
    if (E_hi - E_lo <= 2 * EDGE_MARGIN)
        throw domain_error("certify_band: band narrower than the edge margins");
    if (E_samples < 1) throw domain_error("certify_band: E_samples must be >= 1");

    ScanReport rep;
    rep.kappa = c.kappa;
    rep.combination = c;
    rep.dim = dim;
    rep.E_lo = E_lo;
    rep.E_hi = E_hi;
    rep.E_samples = E_samples;
    rep.x_samples = x_samples;
    rep.y_samples = y_samples;

    std::vector<double> energies;
    energies.push_back(E_lo);
    const double ilo = E_lo + EDGE_MARGIN, ihi = E_hi - EDGE_MARGIN;
    for (int i = 0; i < E_samples; ++i)
        energies.push_back(E_samples == 1 ? 0.5 * (ilo + ihi)
                                          : ilo + (ihi - ilo) * i / (E_samples - 1));
    energies.push_back(E_hi);

    std::vector<EnergyVerdict> verdicts(energies.size());
    std::vector<std::vector<PlotSample>> parts(sink ? energies.size() : 0);
    util::parallel_for(energies.size(), [&](std::size_t i) {
        verdicts[i] = scan(energies[i], sink ? &parts[i] : nullptr);
    });
    if (sink)
        for (auto& part : parts) sink->insert(sink->end(), part.begin(), part.end());

    rep.certified = true;
    rep.global_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        if (v.min_value < rep.global_min) {
            rep.global_min = v.min_value;
            rep.argmin.assign(1, v.E);
            rep.argmin.insert(rep.argmin.end(), v.argmin.begin(), v.argmin.end());
        }
        const bool interior = (i != 0 && i + 1 != verdicts.size());
        if (interior && v.kind != VerdictKind::STRICTLY_POSITIVE && rep.certified) {
            rep.certified = false;
            std::ostringstream os;
            os << "band not strictly positive at E=" << util::format_double(v.E) << " ("
               << to_string(v.kind) << ", min=" << util::format_double(v.min_value);
            if (!v.witness.empty()) {
                os << ", at";
                for (double w : v.witness) os << " " << util::format_double(w);
            }
            os << ")";
            rep.failure = os.str();
        }
    }
    rep.verdicts = std::move(verdicts);
    return rep;
}

}  // namespace

std::string_view to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::STRICTLY_POSITIVE: return "STRICTLY_POSITIVE";
        case VerdictKind::NONNEGATIVE_WITH_ZEROS: return "NONNEGATIVE_WITH_ZEROS";
        case VerdictKind::SIGN_CHANGE: return "SIGN_CHANGE";
    }
    return "STRICTLY_POSITIVE";
}

VerdictKind verdict_from_string(std::string_view s) {
    if (s == "STRICTLY_POSITIVE") return VerdictKind::STRICTLY_POSITIVE;
    if (s == "NONNEGATIVE_WITH_ZEROS") return VerdictKind::NONNEGATIVE_WITH_ZEROS;
    if (s == "SIGN_CHANGE") return VerdictKind::SIGN_CHANGE;
    throw domain_error("verdict_from_string: unknown verdict '" + std::string(s) + "'");
}

EnergyVerdict scan_2d(const symbol::Combination& c, double E, int x_samples,
                      std::vector<PlotSample>* sink) {
    if (x_samples < 64) throw domain_error("scan_2d: x_samples must be >= 64");
    if (E < -2.0 - 1e-12 || E > 2.0 + 1e-12)
        throw domain_error("scan_2d: E outside [-2, 2]");
    const double lo = std::max(E - 1.0, -1.0), hi = std::min(E + 1.0, 1.0);
    auto f = [&](double x) { return symbol::G2(c, {E, x}); };

    EnergyVerdict v;
    v.E = E;
    const auto slice = scan_slice(f, lo, hi, x_samples, E, 0.0, false, sink);
    v.min_value = slice.min_value;
    v.argmin = {slice.argmin};
    for (const auto& [zx, zv] : slice.zeros)
        if (zv >= NEG_TOL) v.zeros.push_back(zx);
    classify(v);
    if (v.kind == VerdictKind::SIGN_CHANGE) {
        v.witness = v.argmin;
        v.zeros.clear();
    }
    return v;
}

EnergyVerdict scan_3d(const symbol::Combination& c, double E, int y_samples, int x_samples,
                      std::vector<PlotSample>* sink) {
    if (x_samples < 64 || y_samples < 64)
        throw domain_error("scan_3d: need at least 64 samples per axis");
    if (E < -3.0 - 1e-12 || E > 3.0 + 1e-12)
        throw domain_error("scan_3d: E outside [-3, 3]");
    const double ylo = std::max(E - 2.0, -1.0), yhi = std::min(E + 2.0, 1.0);
    if (yhi < ylo) throw domain_error("scan_3d: empty surface");

    EnergyVerdict v;
    v.E = E;
    v.min_value = std::numeric_limits<double>::infinity();
    for (int iy = 0; iy < y_samples; ++iy) {
        const double y =
            (yhi - ylo < 1e-12) ? ylo : ylo + (yhi - ylo) * iy / (y_samples - 1);
        const double xlo = std::max(E - y - 1.0, -1.0), xhi = std::min(E - y + 1.0, 1.0);
        if (xhi < xlo) continue;
        auto f = [&](double x) { return symbol::G3(c, {E, x, y}); };
        const auto slice = scan_slice(f, xlo, xhi, x_samples, E, y, true, sink);
        if (slice.min_value < v.min_value) {
            v.min_value = slice.min_value;
            v.argmin = {slice.argmin, y};
        }
        for (const auto& [zx, zv] : slice.zeros)
            if (zv >= NEG_TOL) {
                v.zeros.push_back(zx);
                v.zeros.push_back(y);
            }
        if (yhi - ylo < 1e-12) break;
    }
    classify(v);
    if (v.kind == VerdictKind::SIGN_CHANGE) {
        v.witness = v.argmin;
        v.zeros.clear();
    }
    return v;
}

ScanReport certify_band(const symbol::Combination& c, double E_lo, double E_hi, int E_samples,
                        int x_samples, std::vector<PlotSample>* sink) {
    return certify_common(c, 2, E_lo, E_hi, E_samples, x_samples, 0,
                          [&](double E, std::vector<PlotSample>* s) {
                              return scan_2d(c, E, x_samples, s);
                          },
                          sink);
}

ScanReport certify_band_3d(const symbol::Combination& c, double E_lo, double E_hi, int E_samples,
                           int y_samples, int x_samples, std::vector<PlotSample>* sink) {
    return certify_common(c, 3, E_lo, E_hi, E_samples, x_samples, y_samples,
                          [&](double E, std::vector<PlotSample>* s) {
                              return scan_3d(c, E, y_samples, x_samples, s);
                          },
                          sink);
}

void require_certified(const ScanReport& report) {
    if (!report.certified)
        throw certification_error("certify_band: " +
                                  (report.failure.empty() ? std::string("band not certified")
                                                          : report.failure));
}

double factorization_residual_k2(double E, double x) {
    static const symbol::Combination c(2, {{1, 1.0}, {2, 9.0 / 14.0}});
    const double g = symbol::G2(c, {E, x});
    const double disc = 16.0 - 20.0 * E * E + 9.0 * E * E * E * E;
    const double spread = std::sqrt(5.0) * std::sqrt(disc);
    const double rr = (15.0 * E * E - spread - 10.0) / 30.0;
    const double ss = (15.0 * E * E + spread - 10.0) / 30.0;
    const double closed = -(180.0 * E / 7.0) * (x * x - E * x + rr) * (x * x - E * x + ss);
    return std::abs(g - closed);
}

double factorization_check_k2(double E, int samples) {
    if (E < -2.0 || E > 2.0) throw domain_error("factorization_check_k2: E outside [-2, 2]");
    if (samples < 2) throw domain_error("factorization_check_k2: need at least 2 samples");
    const double lo = std::max(E - 1.0, -1.0), hi = std::min(E + 1.0, 1.0);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples - 1);
        worst = std::max(worst, factorization_residual_k2(E, x));
    }
    return worst;
}

double factorization_s_minus(double E) {
    const double disc = 16.0 - 20.0 * E * E + 9.0 * E * E * E * E;
    const double inner = (20.0 - 15.0 * E * E + 2.0 * std::sqrt(5.0) * std::sqrt(disc)) / 15.0;
    return (E - std::sqrt(inner)) / 2.0;
}

ConvergenceStudy convergence_study(int kappa, int n_max) {
    if (kappa < 2) throw domain_error("convergence_study: kappa must be >= 2");
    if (n_max < 8) throw domain_error("convergence_study: n_max must be >= 8");

    ConvergenceStudy s;
    s.kappa = kappa;
    const double limit = 2.0 * std::cos(PI / kappa);
    // Depths must be walked in order: each threshold bounds the next search
    // window from above, and near the accumulation point that window is far
    // too narrow to find from the full admissible interval.
    double upper = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n_max; ++i) {
        pingpong::PingPongProblem p;
        p.kappa = kappa;
        p.n = 2 * i;
        p.variant = pingpong::Variant::J2_DECREASING;
        double E;
        try {
            E = std::isfinite(upper) ? pingpong::solve_within(p, limit, upper).E
                                     : pingpong::solve(p).E;
        } catch (const precision_error&) {
            s.truncated_at = 2 * i;
            break;
        } catch (const solver_error&) {
            s.truncated_at = 2 * i;  // window no longer resolvable in doubles
            break;
        }
        if (E - limit <= 0 || E >= upper) {
            s.truncated_at = 2 * i;
            break;
        }
        s.n.push_back(i);
        s.E.push_back(E);
        s.gap.push_back(E - limit);
        upper = E;
    }
    if (s.n.size() < 4)
        throw precision_error("convergence_study: fewer than 4 usable depths");

    s.fit_from = static_cast<int>(s.n.size()) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int count = static_cast<int>(s.n.size()) - s.fit_from;
    for (int i = s.fit_from; i < static_cast<int>(s.n.size()); ++i) {
        const double lx = std::log(static_cast<double>(s.n[static_cast<std::size_t>(i)]));
        const double ly = std::log(s.gap[static_cast<std::size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = count * sxx - sx * sx;
    if (std::abs(denom) < 1e-30)
        throw precision_error("convergence_study: degenerate regression");
    s.slope = (count * sxy - sx * sy) / denom;
    s.intercept = (sy - s.slope * sx) / count;
    for (int i = s.fit_from; i < static_cast<int>(s.n.size()); ++i) {
        const double lx = std::log(static_cast<double>(s.n[static_cast<std::size_t>(i)]));
        const double ly = std::log(s.gap[static_cast<std::size_t>(i)]);
        s.residuals.push_back(ly - (s.intercept + s.slope * lx));
    }
    return s;
}

namespace {

nlohmann::json verdict_to_json(const EnergyVerdict& v) {
    nlohmann::json j;
    j["E"] = v.E;
    j["kind"] = std::string(to_string(v.kind));
    j["min_value"] = v.min_value;
    j["argmin"] = v.argmin;
    j["zeros"] = v.zeros;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

EnergyVerdict verdict_from_json(const nlohmann::json& j) {
    EnergyVerdict v;
    v.E = j.at("E").get<double>();
    v.kind = verdict_from_string(j.at("kind").get<std::string>());
    v.min_value = j.at("min_value").get<double>();
    v.argmin = j.at("argmin").get<std::vector<double>>();
    v.zeros = j.at("zeros").get<std::vector<double>>();
    if (j.contains("witness")) v.witness = j.at("witness").get<std::vector<double>>();
    return v;
}

}  // namespace

std::string scan_to_json_string(const ScanReport& r) {
    nlohmann::json j;
    j["kappa"] = r.kappa;
    j["dim"] = r.dim;
    j["combination"] = nlohmann::json::parse(symbol::to_json_string(r.combination));
    j["E_lo"] = r.E_lo;
    j["E_hi"] = r.E_hi;
    j["E_samples"] = r.E_samples;
    j["x_samples"] = r.x_samples;
    j["y_samples"] = r.y_samples;
    j["global_min"] = r.global_min;
    j["argmin"] = r.argmin;
    j["certified"] = r.certified;
    j["failure"] = r.failure;
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(verdicts);
    return j.dump();
}

ScanReport scan_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ScanReport r;
    r.kappa = j.at("kappa").get<int>();
    r.dim = j.at("dim").get<int>();
    r.combination = symbol::combination_from_json(j.at("combination").dump());
    r.E_lo = j.at("E_lo").get<double>();
    r.E_hi = j.at("E_hi").get<double>();
    r.E_samples = j.at("E_samples").get<int>();
    r.x_samples = j.at("x_samples").get<int>();
    r.y_samples = j.at("y_samples").get<int>();
    r.global_min = j.at("global_min").get<double>();
    r.argmin = j.at("argmin").get<std::vector<double>>();
    r.certified = j.at("certified").get<bool>();
    r.failure = j.value("failure", std::string());
    for (const auto& vj : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(vj));
    return r;
}

std::string plot_csv(const std::vector<PlotSample>& samples) {
    std::ostringstream os;
    const bool has_y = !samples.empty() && samples.front().has_y;
    os << (has_y ? "E,x,y,G\n" : "E,x,G\n");
    for (const auto& s : samples) {
        os << util::format_double(s.E) << ',' << util::format_double(s.x);
        if (has_y) os << ',' << util::format_double(s.y);
        os << ',' << util::format_double(s.G) << '\n';
    }
    return os.str();
}

std::string convergence_csv(const ConvergenceStudy& s) {
    std::ostringstream os;
    os << "n,depth,E,gap\n";
    for (std::size_t i = 0; i < s.n.size(); ++i)
        os << s.n[i] << ',' << 2 * s.n[i] << ',' << util::format_double(s.E[i]) << ','
           << util::format_double(s.gap[i]) << '\n';
    return os.str();
}

std::string convergence_to_json_string(const ConvergenceStudy& s) {
    nlohmann::json j;
    j["kappa"] = s.kappa;
    j["n"] = s.n;
    j["E"] = s.E;
    j["gap"] = s.gap;
    j["slope"] = s.slope;
    j["intercept"] = s.intercept;
    j["residuals"] = s.residuals;
    j["fit_from"] = s.fit_from;
    j["truncated_at"] = s.truncated_at;
    return j.dump();
}

}  // namespace mourre::verifier
