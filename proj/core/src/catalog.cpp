#include "mourre/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mourre/chebyshev.hpp"
#include "mourre/errors.hpp"
#include "mourre/symbol.hpp"
#include "mourre/textio.hpp"

namespace mourre::catalog {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double MERGE_TOL = 1e-9;

double ext(int kappa, int l) {
    if (l == 0) return 1.0;
    if (l == kappa) return -1.0;
    if (2 * l == kappa) return 0.0;
    return std::cos(l * PI / kappa);
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Roots of f over [lo, hi]: sign changes between valid grid samples,
/// refined by bisection to 1e-14.  f may return nullopt outside its domain.
std::vector<double> scan_roots(double lo, double hi, int grid,
                               const std::function<std::optional<double>(double)>& f) {
    std::vector<double> roots;
    bool have_prev = false;
    double prev = 0.0, prev_x = lo;
    for (int i = 0; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const auto v = f(x);
        if (v && have_prev && prev != 0.0 && (*v == 0.0 || (*v < 0) != (prev < 0))) {
            double a = prev_x, b = x;
            double fa = prev;
            for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
                const double m = 0.5 * (a + b);
                const auto fm = f(m);
                if (!fm) break;
                if (*fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((*fm < 0) == (fa < 0)) {
                    a = m;
                    fa = *fm;
                } else {
                    b = m;
                }
            }
            const double r = 0.5 * (a + b);
            if (roots.empty() || r - roots.back() > 1e-12) roots.push_back(r);
        }
        if (v) {
            have_prev = true;
            prev = *v;
            prev_x = x;
        } else {
            have_prev = false;
        }
    }
    return roots;
}

// ---------------------------------------------------------------- ansatz --

struct PlanarCandidate {
    double E, Y0, Y1, omega;
    int case_id;
};

/// Filter a raw (E, Y0, Y1): coordinates in range, points distinct, both
/// weights nonzero, ratio negative and independent of the harmonic index.
std::optional<double> planar_omega(int kappa, double E, double Y0, double Y1) {
    auto in_range = [](double v) { return v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12; };
    if (!in_range(Y0) || !in_range(Y1) || !in_range(E - Y0) || !in_range(E - Y1))
        return std::nullopt;
    if (std::abs(Y0 - Y1) <= 1e-9 || std::abs(Y0 - (E - Y1)) <= 1e-9) return std::nullopt;

    double g0[6], g1[6];
    double s0 = 0, s1 = 0;
    int jref = 0;
    for (int j = 1; j <= 6; ++j) {
        g0[j - 1] = symbol::g2(j, kappa, {E, Y0});
        g1[j - 1] = symbol::g2(j, kappa, {E, Y1});
        s0 = std::max(s0, std::abs(g0[j - 1]));
        if (std::abs(g1[j - 1]) > std::abs(g1[jref])) jref = j - 1;
        s1 = std::max(s1, std::abs(g1[j - 1]));
    }
    if (s0 < 1e-9 || s1 < 1e-9) return std::nullopt;
    const double omega = g0[jref] / g1[jref];
    if (!(omega < 0)) return std::nullopt;
    const double tol = 1e-8 * std::max({1.0, s0, std::abs(omega) * s1});
    for (int j = 0; j < 6; ++j)
        if (std::abs(g0[j] - omega * g1[j]) > tol) return std::nullopt;
    return omega;
}

void accept_planar(std::vector<PlanarCandidate>& out, int kappa, double E, double Y0, double Y1,
                   int case_id) {
    const auto omega = planar_omega(kappa, E, Y0, Y1);
    if (!omega) return;

    // canonical form: each point as an ordered pair, pairs ordered
    auto canon = [&](double y) { return std::minmax(y, E - y); };
    auto [a0, b0] = canon(Y0);
    auto [a1, b1] = canon(Y1);
    for (const auto& c : out) {
        if (std::abs(c.E - E) > MERGE_TOL) continue;
        auto [ca0, cb0] = canon(c.Y0);
        auto [ca1, cb1] = canon(c.Y1);
        const double t = 1e-8;
        const bool same = (std::abs(ca0 - a0) < t && std::abs(cb0 - b0) < t &&
                           std::abs(ca1 - a1) < t && std::abs(cb1 - b1) < t);
        const bool swapped = (std::abs(ca0 - a1) < t && std::abs(cb0 - b1) < t &&
                              std::abs(ca1 - a0) < t && std::abs(cb1 - b0) < t);
        if (same || swapped) return;
    }
    out.push_back({E, Y0, Y1, *omega, case_id});
}

std::vector<PlanarCandidate> planar_candidates(int kappa) {
    std::vector<cheb::BranchIndex> branches;
    for (int j = 0; j < kappa; ++j) branches.emplace_back(kappa, j);
    const int grid = 2000;
    std::vector<PlanarCandidate> out;

    // cases 1/2: one coordinate of the first point pinned at +-1
    // (case 1: Y0 = E - 1, partner coordinate 1; case 2: Y0 = E + 1)
    for (int case_id : {1, 2}) {
        const double pin = (case_id == 1) ? -1.0 : 1.0;
        const double elo = (case_id == 1) ? 0.0 : -2.0;
        const double ehi = (case_id == 1) ? 2.0 : 0.0;
        auto level = [&](double E) { return cheb::eval_T(kappa, E + pin); };
        auto y0 = [&](double E) { return E + pin; };
        // (a) second point generic, both coordinates level-matched
        for (const auto& b1 : branches)
            for (const auto& b2 : branches) {
                auto f = [&](double E) -> std::optional<double> {
                    const double t = level(E);
                    return (E - cheb::branch_inverse(b1, t)) - cheb::branch_inverse(b2, t);
                };
                for (double E : scan_roots(elo + 1e-9, ehi - 1e-9, grid, f))
                    accept_planar(out, kappa, E, y0(E), cheb::branch_inverse(b1, level(E)),
                                  case_id);
            }
        // (b) second point with a dead coordinate at a U-root
        for (int l = 1; l < kappa; ++l) {
            const double y1 = ext(kappa, l);
            for (const auto& b : branches) {
                auto f = [&](double E) -> std::optional<double> {
                    return (E - y1) - cheb::branch_inverse(b, level(E));
                };
                for (double E : scan_roots(elo + 1e-9, ehi - 1e-9, grid, f))
                    accept_planar(out, kappa, E, y0(E), y1, case_id);
            }
        }
        // (c) second point symmetric: Y1 = E/2
        for (const auto& b : branches) {
            auto f = [&](double E) -> std::optional<double> {
                return E / 2.0 - cheb::branch_inverse(b, level(E));
            };
            for (double E : scan_roots(elo + 1e-9, ehi - 1e-9, grid, f))
                accept_planar(out, kappa, E, y0(E), E / 2.0, case_id);
        }
    }

    // case 3: first point symmetric, Y0 = E/2
    {
        auto level = [&](double E) { return cheb::eval_T(kappa, E / 2.0); };
        for (const auto& b1 : branches)
            for (const auto& b2 : branches) {
                auto f = [&](double E) -> std::optional<double> {
                    const double t = level(E);
                    return (E - cheb::branch_inverse(b1, t)) - cheb::branch_inverse(b2, t);
                };
                for (double E : scan_roots(-2.0 + 1e-9, 2.0 - 1e-9, grid, f))
                    accept_planar(out, kappa, E, E / 2.0, cheb::branch_inverse(b1, level(E)), 3);
            }
        for (int l = 1; l < kappa; ++l) {
            const double y1 = ext(kappa, l);
            for (const auto& b : branches) {
                auto f = [&](double E) -> std::optional<double> {
                    return (E - y1) - cheb::branch_inverse(b, level(E));
                };
                for (double E : scan_roots(-2.0 + 1e-9, 2.0 - 1e-9, grid, f))
                    accept_planar(out, kappa, E, E / 2.0, y1, 3);
            }
        }
    }

    // cases 4/5: a U-root kills one coordinate of the second point; the
    // surviving coordinate sets the level for the first point
    for (int case_id : {4, 5}) {
        for (int l = 1; l < kappa; ++l) {
            const double root = ext(kappa, l);
            // case 4: Y1 itself at the root; case 5: E - Y1 at the root.
            // Either way the surviving coordinate of the second point is
            // E - root, which fixes the common level.
            auto y1_of = [&](double E) { return (case_id == 4) ? root : E - root; };
            auto level = [&](double E) -> std::optional<double> {
                const double a = E - root;
                if (std::abs(a) > 1.0) return std::nullopt;
                return cheb::eval_T(kappa, a);
            };
            const double elo = root - 1.0, ehi = root + 1.0;
            // first point generic
            for (const auto& b1 : branches)
                for (const auto& b2 : branches) {
                    auto f = [&](double E) -> std::optional<double> {
                        const auto t = level(E);
                        if (!t) return std::nullopt;
                        return (E - cheb::branch_inverse(b1, *t)) - cheb::branch_inverse(b2, *t);
                    };
                    for (double E : scan_roots(elo + 1e-9, ehi - 1e-9, grid, f)) {
                        const auto t = level(E);
                        if (t)
                            accept_planar(out, kappa, E, cheb::branch_inverse(b1, *t), y1_of(E),
                                          case_id);
                    }
                }
            // first point with its own dead coordinate at a U-root
            for (int l2 = 1; l2 < kappa; ++l2) {
                const double y0 = ext(kappa, l2);
                for (const auto& b : branches) {
                    auto f = [&](double E) -> std::optional<double> {
                        const auto t = level(E);
                        if (!t) return std::nullopt;
                        return (E - y0) - cheb::branch_inverse(b, *t);
                    };
                    for (double E : scan_roots(elo + 1e-9, ehi - 1e-9, grid, f))
                        accept_planar(out, kappa, E, y0, y1_of(E), case_id);
                }
            }
        }
    }

    // case 6: all four coordinates alive at a common level t
    {
        const int tgrid = 1024;
        for (std::size_t ia = 0; ia < branches.size(); ++ia)
            for (std::size_t ib = ia + 1; ib < branches.size(); ++ib)
                for (std::size_t ic = 0; ic < branches.size(); ++ic)
                    for (std::size_t id = ic + 1; id < branches.size(); ++id) {
                        if (ia == ic && ib == id) continue;
                        auto f = [&](double t) -> std::optional<double> {
                            return cheb::branch_inverse(branches[ia], t) +
                                   cheb::branch_inverse(branches[ib], t) -
                                   cheb::branch_inverse(branches[ic], t) -
                                   cheb::branch_inverse(branches[id], t);
                        };
                        for (double t : scan_roots(-1.0 + 1e-12, 1.0 - 1e-12, tgrid, f)) {
                            const double Y0 = cheb::branch_inverse(branches[ia], t);
                            const double E = Y0 + cheb::branch_inverse(branches[ib], t);
                            accept_planar(out, kappa, E, Y0,
                                          cheb::branch_inverse(branches[ic], t), 6);
                        }
                    }
    }
    return out;
}

// -------------------------------------------------------- entry plumbing --

CatalogEntry make_entry(double E, int kappa, int dim, Provenance prov, int order_m,
                        bool heuristic = false) {
    CatalogEntry e;
    e.E = E;
    e.kappa = kappa;
    e.dim = dim;
    e.provenance.push_back(std::move(prov));
    e.order_m = order_m;
    e.heuristic = heuristic;
    return e;
}

Provenance negated_provenance(Provenance p, int kappa) {
    if (p.source == Source::ZEROTH_ORDER) {
        for (int& j : p.tuple) j = kappa - j;
        std::sort(p.tuple.begin(), p.tuple.end());
        return p;  // the reflected tuple is itself an exact witness
    }
    p.mirrored = !p.mirrored;
    return p;
}

}  // namespace

std::string_view to_string(Source s) {
    switch (s) {
        case Source::ZEROTH_ORDER: return "ZEROTH_ORDER";
        case Source::PING_PONG: return "PING_PONG";
        case Source::ANSATZ: return "ANSATZ";
        case Source::DIM_SHIFT: return "DIM_SHIFT";
    }
    return "ZEROTH_ORDER";
}

Source source_from_string(std::string_view s) {
    if (s == "ZEROTH_ORDER") return Source::ZEROTH_ORDER;
    if (s == "PING_PONG") return Source::PING_PONG;
    if (s == "ANSATZ") return Source::ANSATZ;
    if (s == "DIM_SHIFT") return Source::DIM_SHIFT;
    throw domain_error("source_from_string: unknown source '" + std::string(s) + "'");
}

std::string Provenance::describe(int) const {
    std::ostringstream os;
    switch (source) {
        case Source::ZEROTH_ORDER: {
            os << "ZEROTH(j=";
            for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? ";" : "") << tuple[i];
            os << ")";
            break;
        }
        case Source::PING_PONG:
            os << "PINGPONG(" << pingpong::to_string(variant) << ";n=" << n;
            if (variant == pingpong::Variant::WELL_DECREASING ||
                variant == pingpong::Variant::WELL_INCREASING)
                os << ";well=" << well_index;
            os << ")";
            break;
        case Source::ANSATZ:
            if (ansatz_case == 0) {
                os << "ANSATZ3(";
                const char* names[] = {"X0=", "X1=", "Y1=", "omega="};
                for (std::size_t i = 0; i < witness.size() && i < 4; ++i)
                    os << (i ? ";" : "") << names[i] << short_num(witness[i]);
                os << ")";
            } else {
                os << "ANSATZ(case=" << ansatz_case;
                const char* names[] = {"Y0=", "Y1=", "omega="};
                for (std::size_t i = 0; i < witness.size() && i < 3; ++i)
                    os << ";" << names[i] << short_num(witness[i]);
                os << ")";
            }
            break;
        case Source::DIM_SHIFT:
            os << "SHIFT(base=" << short_num(base_E) << ";l=" << shift_l << ")";
            break;
    }
    if (mirrored) os << ";neg";
    return os.str();
}

std::vector<CatalogEntry> zeroth_order(int kappa, int dim) {
    if (kappa < 1) throw domain_error("zeroth_order: kappa must be >= 1");
    if (dim != 2 && dim != 3) throw domain_error("zeroth_order: dim must be 2 or 3");

    std::vector<CatalogEntry> out;
    auto add = [&](const std::vector<int>& tuple) {
        double E = 0;
        for (int j : tuple) E += ext(kappa, j);
        Provenance p;
        p.source = Source::ZEROTH_ORDER;
        p.tuple = tuple;
        out.push_back(make_entry(E, kappa, dim, std::move(p), 0));
    };
    if (dim == 2) {
        for (int a = 0; a <= kappa; ++a)
            for (int b = a; b <= kappa; ++b) add({a, b});
    } else {
        for (int a = 0; a <= kappa; ++a)
            for (int b = a; b <= kappa; ++b)
                for (int c = b; c <= kappa; ++c) add({a, b, c});
    }
    return merge_entries(std::move(out));
}

std::vector<CatalogEntry> first_order_ansatz(int kappa) {
    if (kappa < 2) throw domain_error("first_order_ansatz: kappa must be >= 2");
    const bool heuristic = !(kappa == 2 || kappa == 3 || kappa == 4 || kappa == 6);

    std::vector<CatalogEntry> out;
    for (const auto& c : planar_candidates(kappa)) {
        Provenance p;
        p.source = Source::ANSATZ;
        p.ansatz_case = c.case_id;
        p.witness = {c.Y0, c.Y1, c.omega};
        out.push_back(make_entry(c.E, kappa, 2, std::move(p), 1, heuristic));
    }
    return merge_entries(std::move(out));
}

std::vector<CatalogEntry> ansatz_3d_symmetric(int kappa) {
    if (kappa < 2) throw domain_error("ansatz_3d_symmetric: kappa must be >= 2");
    std::vector<cheb::BranchIndex> branches;
    for (int j = 0; j < kappa; ++j) branches.emplace_back(kappa, j);
    const int tgrid = 1024;
    const bool heuristic = !(kappa == 2 || kappa == 3 || kappa == 4 || kappa == 6);

    struct Cand {
        double E, X1, Y1, omega;
    };
    std::vector<Cand> cands;
    auto try_accept = [&](double E, double X1, double Y1) {
        const double X0 = E / 3.0, Z1 = E - X1 - Y1;
        auto in_range = [](double v) { return v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12; };
        if (!in_range(X0) || !in_range(X1) || !in_range(Y1) || !in_range(Z1)) return;
        if (std::abs(X1 - X0) <= 1e-9 && std::abs(Y1 - X0) <= 1e-9) return;  // same point
        double g0[6], g1[6];
        double s0 = 0, s1 = 0;
        int jref = 0;
        for (int j = 1; j <= 6; ++j) {
            g0[j - 1] = symbol::g3(j, kappa, {E, X0, X0});
            g1[j - 1] = symbol::g3(j, kappa, {E, X1, Y1});
            s0 = std::max(s0, std::abs(g0[j - 1]));
            if (std::abs(g1[j - 1]) > std::abs(g1[jref])) jref = j - 1;
            s1 = std::max(s1, std::abs(g1[j - 1]));
        }
        if (s0 < 1e-9 || s1 < 1e-9) return;
        const double omega = g0[jref] / g1[jref];
        if (!(omega < 0)) return;
        const double tol = 1e-8 * std::max({1.0, s0, std::abs(omega) * s1});
        for (int j = 0; j < 6; ++j)
            if (std::abs(g0[j] - omega * g1[j]) > tol) return;
        // canonical dedup on (E, sorted coordinates of the second point)
        double smin = std::min({X1, Y1, Z1}), smax = std::max({X1, Y1, Z1});
        for (const auto& c : cands) {
            if (std::abs(c.E - E) > MERGE_TOL) continue;
            const double cz = c.E - c.X1 - c.Y1;
            if (std::abs(std::min({c.X1, c.Y1, cz}) - smin) < 1e-8 &&
                std::abs(std::max({c.X1, c.Y1, cz}) - smax) < 1e-8)
                return;
        }
        cands.push_back({E, X1, Y1, omega});
    };

    for (const auto& ba : branches)
        for (std::size_t ib = 0; ib < branches.size(); ++ib)
            for (std::size_t ic = ib; ic < branches.size(); ++ic)
                for (const auto& bd : branches) {
                    auto f = [&](double t) -> std::optional<double> {
                        const double E = 3.0 * cheb::branch_inverse(ba, t);
                        return (E - cheb::branch_inverse(branches[ib], t) -
                                cheb::branch_inverse(branches[ic], t)) -
                               cheb::branch_inverse(bd, t);
                    };
                    // skip identically-degenerate tuples
                    bool flat = true;
                    for (int i = 0; i <= 16 && flat; ++i) {
                        const auto v = f(-0.99 + 1.98 * i / 16.0);
                        if (v && std::abs(*v) > 1e-12) flat = false;
                    }
                    if (flat) continue;
                    for (double t : scan_roots(-1.0 + 1e-12, 1.0 - 1e-12, tgrid, f)) {
                        const double E = 3.0 * cheb::branch_inverse(ba, t);
                        try_accept(E, cheb::branch_inverse(branches[ib], t),
                                   cheb::branch_inverse(branches[ic], t));
                    }
                }

    std::vector<CatalogEntry> out;
    for (const auto& c : cands) {
        Provenance p;
        p.source = Source::ANSATZ;
        p.ansatz_case = 0;
        p.witness = {c.E / 3.0, c.X1, c.Y1, c.omega};
        out.push_back(make_entry(c.E, kappa, 3, std::move(p), 1, heuristic));
    }
    return merge_entries(std::move(out));
}

std::vector<CatalogEntry> shift_to_dim3(const std::vector<CatalogEntry>& entries, int kappa) {
    std::vector<CatalogEntry> out;
    for (const auto& e : entries) {
        if (e.dim != 2) throw domain_error("shift_to_dim3: entries must have dim=2");
        for (int l = 0; l <= kappa; ++l) {
            Provenance p;
            p.source = Source::DIM_SHIFT;
            p.base_E = e.E;
            p.shift_l = l;
            out.push_back(make_entry(e.E + ext(kappa, l), kappa, 3, std::move(p), e.order_m,
                                     e.heuristic));
        }
    }
    return merge_entries(std::move(out));
}

std::vector<double> solve_zeroth_order_numeric(int kappa) {
    if (kappa < 1) throw domain_error("solve_zeroth_order_numeric: kappa must be >= 1");
    std::vector<double> found;
    auto push = [&](double E) {
        for (double v : found)
            if (std::abs(v - E) <= MERGE_TOL) return;
        found.push_back(E);
    };

    // dead-dead pairs: both weights vanish identically (edge or U-root)
    for (int a = 0; a <= kappa; ++a)
        for (int b = a; b <= kappa; ++b) push(ext(kappa, a) + ext(kappa, b));

    // alive-alive pairs on a common level
    std::vector<cheb::BranchIndex> branches;
    for (int j = 0; j < kappa; ++j) branches.emplace_back(kappa, j);
    const int tgrid = 2048;
    for (std::size_t ia = 0; ia < branches.size(); ++ia)
        for (std::size_t ib = ia; ib < branches.size(); ++ib) {
            auto weight = [&](double t) {
                const double ya = cheb::branch_inverse(branches[ia], t);
                const double yb = cheb::branch_inverse(branches[ib], t);
                return symbol::m_weight(ya) * cheb::eval_U(kappa, ya) +
                       symbol::m_weight(yb) * cheb::eval_U(kappa, yb);
            };
            double peak = 0;
            for (int i = 0; i <= tgrid; ++i)
                peak = std::max(peak, std::abs(weight(-1.0 + 2.0 * i / tgrid)));
            if (peak < 1e-12) {
                // the pair cancels identically; every level gives an energy
                for (int i = 0; i <= 16; ++i) {
                    const double t = -1.0 + 2.0 * i / 16.0;
                    push(cheb::branch_inverse(branches[ia], t) +
                         cheb::branch_inverse(branches[ib], t));
                }
                continue;
            }
            auto f = [&](double t) -> std::optional<double> { return weight(t); };
            for (double t : scan_roots(-1.0 + 1e-9, 1.0 - 1e-9, tgrid, f)) {
                const double ya = cheb::branch_inverse(branches[ia], t);
                const double yb = cheb::branch_inverse(branches[ib], t);
                const double E = ya + yb;
                bool zero = true;
                for (int j = 1; j <= 6 && zero; ++j)
                    zero = std::abs(symbol::g2(j, kappa, {E, ya})) <= 1e-10;
                if (zero) push(E);
            }
        }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<CatalogEntry> merge_entries(std::vector<CatalogEntry> entries) {
    if (entries.empty()) return entries;
    std::stable_sort(entries.begin(), entries.end(),
                     [](const CatalogEntry& a, const CatalogEntry& b) { return a.E < b.E; });
    std::vector<CatalogEntry> out;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].E - entries[j - 1].E <= MERGE_TOL) ++j;
        // representative: smallest known order, then first
        std::size_t rep = i;
        auto order_key = [&](std::size_t k) {
            return entries[k].order_m < 0 ? std::numeric_limits<int>::max()
                                          : entries[k].order_m;
        };
        for (std::size_t k = i + 1; k < j; ++k)
            if (order_key(k) < order_key(rep)) rep = k;
        CatalogEntry merged = entries[rep];
        merged.provenance.clear();
        std::set<std::string> seen;
        int order = -1;
        bool heuristic = true;
        for (std::size_t k = i; k < j; ++k) {
            const auto& e = entries[k];
            if (e.order_m >= 0) order = (order < 0) ? e.order_m : std::min(order, e.order_m);
            heuristic = heuristic && e.heuristic;
            for (const auto& p : e.provenance)
                if (seen.insert(p.describe(e.kappa)).second) merged.provenance.push_back(p);
        }
        merged.order_m = order;
        merged.heuristic = heuristic;
        out.push_back(std::move(merged));
        i = j;
    }
    return out;
}

std::vector<CatalogEntry> build_catalog(int kappa, int dim, int n_max) {
    if (kappa < 2) throw domain_error("build_catalog: kappa must be >= 2");
    if (dim != 2 && dim != 3) throw domain_error("build_catalog: dim must be 2 or 3");
    if (n_max < 0) throw domain_error("build_catalog: n_max must be >= 0");

    std::vector<CatalogEntry> ent;
    if (dim == 3) {
        for (auto& e : shift_to_dim3(build_catalog(kappa, 2, n_max), kappa))
            ent.push_back(std::move(e));
        for (auto& e : zeroth_order(kappa, 3)) ent.push_back(std::move(e));
        for (auto& e : ansatz_3d_symmetric(kappa)) ent.push_back(std::move(e));
    } else {
        for (auto& e : zeroth_order(kappa, 2)) ent.push_back(std::move(e));
        for (auto& e : first_order_ansatz(kappa)) ent.push_back(std::move(e));

        struct Family {
            pingpong::Variant v;
            int well;
            bool required;
        };
        std::vector<Family> families;
        families.push_back({pingpong::Variant::J2_DECREASING, 1, true});
        families.push_back({pingpong::Variant::F_INCREASING, 1, kappa >= 3});
        if (kappa >= 3) families.push_back({pingpong::Variant::G_VARIANT, 1, kappa == 3});
        for (int w = 2; 2 * w <= kappa; ++w) {
            families.push_back({pingpong::Variant::WELL_DECREASING, w, true});
            families.push_back({pingpong::Variant::WELL_INCREASING, w, true});
        }

        {
            // depth-0 anchor of the decreasing family (also a lattice sum)
            const auto z = pingpong::zeroth_solution(kappa);
            Provenance p;
            p.source = Source::PING_PONG;
            p.variant = z.variant;
            p.n = 0;
            ent.push_back(make_entry(z.E, kappa, 2, std::move(p), 0));
        }
        for (const auto& fam : families) {
            if (n_max < 1) break;
            std::vector<pingpong::ThresholdSolution> sols;
            try {
                sols = pingpong::sequence(kappa, fam.v, n_max, fam.well);
            } catch (const mourre::error&) {
                if (fam.required) throw;
                continue;
            }
            for (const auto& s : sols) {
                if (pingpong::verify_linear_relation(s, 8) > 1e-8)
                    throw precision_error("build_catalog: stale certificate for " +
                                          std::string(pingpong::to_string(fam.v)) +
                                          " n=" + std::to_string(s.n));
                Provenance p;
                p.source = Source::PING_PONG;
                p.variant = s.variant;
                p.n = s.n;
                p.well_index = s.well_index;
                ent.push_back(make_entry(s.E, kappa, 2, std::move(p), s.order_m));
            }
        }
    }

    // closure under E -> -E
    const std::size_t base = ent.size();
    for (std::size_t i = 0; i < base; ++i) {
        if (std::abs(ent[i].E) <= 1e-12) continue;
        CatalogEntry neg = ent[i];
        neg.E = -neg.E;
        for (auto& p : neg.provenance) p = negated_provenance(std::move(p), kappa);
        ent.push_back(std::move(neg));
    }
    return merge_entries(std::move(ent));
}

std::string to_csv(const std::vector<CatalogEntry>& entries) {
    std::ostringstream os;
    os << "E,kappa,dim,order_m,heuristic,provenance\n";
    for (const auto& e : entries) {
        os << util::format_double(e.E) << ',' << e.kappa << ',' << e.dim << ',';
        if (e.order_m >= 0)
            os << "m>=" << e.order_m;
        else
            os << "unknown";
        os << ',' << (e.heuristic ? 1 : 0) << ',';
        for (std::size_t i = 0; i < e.provenance.size(); ++i)
            os << (i ? "|" : "") << e.provenance[i].describe(e.kappa);
        os << '\n';
    }
    return os.str();
}

namespace {

nlohmann::json provenance_to_json(const Provenance& p) {
    nlohmann::json j;
    j["source"] = std::string(to_string(p.source));
    switch (p.source) {
        case Source::ZEROTH_ORDER: j["tuple"] = p.tuple; break;
        case Source::PING_PONG:
            j["variant"] = std::string(pingpong::to_string(p.variant));
            j["n"] = p.n;
            j["well_index"] = p.well_index;
            break;
        case Source::ANSATZ:
            j["case"] = p.ansatz_case;
            j["witness"] = p.witness;
            break;
        case Source::DIM_SHIFT:
            j["base_E"] = p.base_E;
            j["l"] = p.shift_l;
            break;
    }
    if (p.mirrored) j["mirrored"] = true;
    return j;
}

Provenance provenance_from_json(const nlohmann::json& j) {
    Provenance p;
    p.source = source_from_string(j.at("source").get<std::string>());
    switch (p.source) {
        case Source::ZEROTH_ORDER: p.tuple = j.at("tuple").get<std::vector<int>>(); break;
        case Source::PING_PONG:
            p.variant = pingpong::variant_from_string(j.at("variant").get<std::string>());
            p.n = j.at("n").get<int>();
            p.well_index = j.value("well_index", 1);
            break;
        case Source::ANSATZ:
            p.ansatz_case = j.at("case").get<int>();
            p.witness = j.at("witness").get<std::vector<double>>();
            break;
        case Source::DIM_SHIFT:
            p.base_E = j.at("base_E").get<double>();
            p.shift_l = j.at("l").get<int>();
            break;
    }
    p.mirrored = j.value("mirrored", false);
    return p;
}

}  // namespace

std::string to_json_string(const std::vector<CatalogEntry>& entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j;
        j["E"] = e.E;
        j["kappa"] = e.kappa;
        j["dim"] = e.dim;
        j["order_m"] = e.order_m;
        j["heuristic"] = e.heuristic;
        nlohmann::json provs = nlohmann::json::array();
        for (const auto& p : e.provenance) provs.push_back(provenance_to_json(p));
        j["provenance"] = std::move(provs);
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::vector<CatalogEntry> catalog_from_json(std::string_view text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<CatalogEntry> out;
    for (const auto& j : arr) {
        CatalogEntry e;
        e.E = j.at("E").get<double>();
        e.kappa = j.at("kappa").get<int>();
        e.dim = j.at("dim").get<int>();
        e.order_m = j.value("order_m", -1);
        e.heuristic = j.value("heuristic", false);
        for (const auto& pj : j.at("provenance")) e.provenance.push_back(provenance_from_json(pj));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mourre::catalog
