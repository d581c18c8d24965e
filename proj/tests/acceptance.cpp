// Acceptance gate: twelve end-to-end checks over the whole library, one
// PASS/FAIL line each.  Exit status is the number of failed criteria.
//
// Tolerances are pinned inline.  Closed forms are held to 1e-10..1e-12;
// tabulated decimal values to half a unit (or, where the printed digits are
// truncations, one unit) in the last printed place; certificate residuals to
// the solver guarantee of 1e-8.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mourre/catalog.hpp>
#include <mourre/chebyshev.hpp>
#include <mourre/errors.hpp>
#include <mourre/interpolation.hpp>
#include <mourre/pingpong.hpp>
#include <mourre/symbol.hpp>
#include <mourre/verifier.hpp>

using namespace mourre;

namespace {

constexpr double PI = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream o;
    o << std::setprecision(prec) << v;
    return o.str();
}

/// Collects expectations for one criterion and prints the verdict line.
class Gate {
public:
    void expect(bool cond, const std::string& what) {
        ++checks_;
        if (!cond) {
            ok_ = false;
            append(problems_, what);
        }
    }

    void note(const std::string& s) { append(notes_, s); }

    /// Prints the verdict and returns 0 on pass, 1 on fail.
    int finish(int num, const std::string& title) {
        std::ostringstream line;
        line << (ok_ ? "PASS" : "FAIL") << " criterion " << std::setw(2) << num << ": " << title
             << " [" << checks_ << " checks]";
        if (!ok_) line << " -- " << problems_;
        if (!notes_.empty()) line << " | " << notes_;
        std::printf("%s\n", line.str().c_str());
        std::fflush(stdout);
        return ok_ ? 0 : 1;
    }

private:
    static void append(std::string& dst, const std::string& s) {
        if (!dst.empty()) dst += "; ";
        dst += s;
    }

    bool ok_ = true;
    int checks_ = 0;
    std::string problems_;
    std::string notes_;
};

pingpong::PingPongProblem make(int kappa, int n,
                               pingpong::Variant v = pingpong::Variant::J2_DECREASING,
                               int well = 1) {
    pingpong::PingPongProblem p;
    p.kappa = kappa;
    p.n = n;
    p.variant = v;
    p.well_index = well;
    return p;
}

interpolation::InterpolationProblem band(int kappa, int index, std::vector<int> sigma) {
    interpolation::InterpolationProblem p;
    p.kappa = kappa;
    p.left = pingpong::solve(make(kappa, index));
    p.right = index == 1 ? pingpong::zeroth_solution(kappa)
                         : pingpong::solve(make(kappa, index - 1));
    p.sigma = std::move(sigma);
    return p;
}

double rho_of(const interpolation::SolveReport& r, int j) {
    for (const auto& [jj, rho] : r.combination.terms)
        if (jj == j) return rho;
    return std::nan("");
}

bool has_zero_near(const verifier::EnergyVerdict& v, double x, double tol = 1e-6) {
    for (double z : v.zeros)
        if (std::abs(z - x) <= tol) return true;
    return false;
}

symbol::EnergyPoint2D random_point2(std::mt19937& rng) {
    std::uniform_real_distribution<double> Es(-1.9, 1.9);
    const double E = Es(rng);
    const double lo = std::max(E - 1.0, -1.0), hi = std::min(E + 1.0, 1.0);
    std::uniform_real_distribution<double> xs(lo, hi);
    return {E, xs(rng)};
}

// 1. The kappa=2 decreasing family in closed form: E = 2/(n+2) with the
//    arithmetic chain X_q = E - 1 + q E.
int criterion_1() {
    Gate g;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 50; ++n) {
        const auto s = pingpong::solve(make(2, n));
        g.expect(std::abs(s.E - 2.0 / (n + 2)) <= 1e-10, "E mismatch at n=" + std::to_string(n));
        int bad = 0;
        for (int q = 0; q <= n + 1; ++q)
            if (std::abs(s.X[static_cast<std::size_t>(q)] - (s.E - 1.0 + q * s.E)) > 1e-10) ++bad;
        g.expect(bad == 0, "chain mismatch at n=" + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    g.expect(dt < 1.0, "runtime " + fmt(dt, 3) + " s >= 1 s");
    g.note(fmt(dt, 3) + " s for n=1..50");
    return g.finish(1, "kappa=2 closed-form chains");
}

// 2. First decreasing thresholds for kappa=3 and kappa=4 against their
//    tabulated digits and closed forms.
int criterion_2() {
    Gate g;
    const auto seq3 = pingpong::sequence(3, pingpong::Variant::J2_DECREASING, 6);
    const double t3[] = {1.3207, 1.2287, 1.1737, 1.1375, 1.1121, 1.0934};
    for (int n = 1; n <= 6; ++n)
        g.expect(std::abs(seq3[n - 1].E - t3[n - 1]) <= 5e-4,
                 "kappa=3 n=" + std::to_string(n) + " off its 4-digit value");
    g.expect(std::abs(seq3[0].E - (5.0 + 3.0 * std::sqrt(2.0)) / 7.0) <= 1e-10,
             "kappa=3 depth-1 closed form");
    g.expect(std::abs(seq3[1].E - (9.0 + std::sqrt(33.0)) / 12.0) <= 1e-10,
             "kappa=3 depth-2 closed form");

    const auto seq4 = pingpong::sequence(4, pingpong::Variant::J2_DECREASING, 6);
    g.expect(std::abs(seq4[0].E - 8.0 / 5.0) <= 1e-10, "kappa=4 depth-1 is 8/5");
    // 3-decimal table: 1.512 and 1.476 are truncations of 1.51272 / 1.47651,
    // so the match is held to one unit in the last printed digit.
    const double t4[] = {1.545, 1.512, 1.491, 1.476, 1.466};
    double maxdev = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const double dev = std::abs(seq4[n - 1].E - t4[n - 2]);
        maxdev = std::max(maxdev, dev);
        g.expect(dev < 1e-3, "kappa=4 n=" + std::to_string(n) + " off its 3-digit value");
    }
    g.note("kappa=4 3-digit table max dev " + fmt(maxdev, 3) + " (two entries truncated)");
    g.expect(std::abs(pingpong::zeroth_solution(4).E - (1.0 + 1.0 / std::sqrt(2.0))) <= 1e-12,
             "kappa=4 depth-0 is 1+1/sqrt(2)");
    return g.finish(2, "kappa=3/4 threshold tables and closed forms");
}

// 3. Increasing (F) and mixed (G) families for kappa=3.
int criterion_3() {
    Gate g;
    const auto F = pingpong::sequence(3, pingpong::Variant::F_INCREASING, 6);
    g.expect(std::abs(F[0].E - 2.0 / 7.0) <= 1e-10, "F1 = 2/7");
    g.expect(std::abs(F[1].E - 1.0 / std::sqrt(6.0)) <= 1e-10, "F2 = 1/sqrt(6)");
    const double tF[] = {0.46617, 0.49099, 0.49867, 0.499920};
    for (int n = 3; n <= 6; ++n)
        g.expect(std::abs(F[n - 1].E - tF[n - 3]) <= 1e-4, "F" + std::to_string(n));

    const auto G = pingpong::sequence(3, pingpong::Variant::G_VARIANT, 6);
    g.expect(std::abs(G[0].E - (5.0 - 3.0 * std::sqrt(2.0)) / 7.0) <= 1e-10, "G1");
    g.expect(std::abs(G[1].E - (9.0 - std::sqrt(33.0)) / 12.0) <= 1e-10, "G2");
    const double tG[] = {0.382291, 0.446704, 0.480492, 0.495054};
    for (int n = 3; n <= 6; ++n)
        g.expect(std::abs(G[n - 1].E - tG[n - 3]) <= 1e-4, "G" + std::to_string(n));
    return g.finish(3, "kappa=3 increasing and mixed families");
}

// 4. Minimal polynomials of the kappa=3 depth-3 and depth-4 thresholds.
int criterion_4() {
    Gate g;
    const double E3 = pingpong::solve(make(3, 3)).E;
    const double r3 = (((247.0 * E3 - 398.0) * E3 + 141.0) * E3 - 20.0) * E3 + 4.0;
    g.expect(std::abs(r3) <= 1e-8, "quartic residual " + fmt(r3, 3));
    const double E4 = pingpong::solve(make(3, 4)).E;
    const double r4 = ((224.0 * E4 - 408.0) * E4 + 198.0) * E4 - 27.0;
    g.expect(std::abs(r4) <= 1e-8, "cubic residual " + fmt(r4, 3));
    g.note("residuals " + fmt(r3, 2) + " / " + fmt(r4, 2));
    return g.finish(4, "minimal-polynomial oracles for kappa=3 depths 3-4");
}

// 5. Every produced solution across all families, kappa <= 8, n <= 8 carries
//    negative certificate weights and satisfies the linear relation.
int criterion_5() {
    Gate g;
    int combos = 0, produced = 0, dom = 0, prec = 0, solv = 0;
    int bad_omega = 0, bad_rel = 0;
    for (int kappa = 2; kappa <= 8; ++kappa) {
        std::vector<std::pair<pingpong::Variant, int>> cases = {
            {pingpong::Variant::J2_DECREASING, 1},
            {pingpong::Variant::F_INCREASING, 1},
            {pingpong::Variant::G_VARIANT, 1},
        };
        for (int w = 1; w <= kappa / 2; ++w) {
            cases.emplace_back(pingpong::Variant::WELL_DECREASING, w);
            cases.emplace_back(pingpong::Variant::WELL_INCREASING, w);
        }
        for (int n = 1; n <= 8; ++n) {
            for (const auto& [v, w] : cases) {
                ++combos;
                try {
                    const auto s = pingpong::solve(make(kappa, n, v, w));
                    ++produced;
                    for (double om : s.omega)
                        if (!(om < 0.0)) ++bad_omega;
                    if (pingpong::verify_linear_relation(s, 8) > 1e-8) ++bad_rel;
                } catch (const domain_error&) {
                    ++dom;
                } catch (const precision_error&) {
                    ++prec;
                } catch (const solver_error&) {
                    ++solv;
                }
            }
        }
    }
    g.expect(combos == 424, "enumeration size " + std::to_string(combos));
    g.expect(combos == produced + dom + prec + solv, "unaccounted outcomes");
    g.expect(produced >= 380, "only " + std::to_string(produced) + " solutions produced");
    g.expect(bad_omega == 0, std::to_string(bad_omega) + " nonnegative weights");
    g.expect(bad_rel == 0, std::to_string(bad_rel) + " relation residuals above 1e-8");
    g.note("produced " + std::to_string(produced) + "/" + std::to_string(combos) + " (" +
           std::to_string(dom) + " domain-rejected, " + std::to_string(prec) + "+" +
           std::to_string(solv) + " depth refusals)");
    return g.finish(5, "weight negativity and linear relation on every produced solution");
}

// 6. Interpolated band coefficients: exact rationals, published decimals,
//    and constraint-matrix ranks.
int criterion_6() {
    Gate g;
    const auto r1 = interpolation::solve_coefficients(band(2, 1, {1, 2}));
    g.expect(std::abs(rho_of(r1, 2) - 9.0 / 14.0) <= 1e-12, "kappa=2 band 1 rho_4");

    const auto r2 = interpolation::solve_coefficients(band(2, 2, {1, 2, 3, 5}));
    const double want2[][2] = {{1, 1.0}, {2, 598.0 / 787.0}, {3, 464.0 / 2361.0},
                               {5, 189.0 / 787.0}};
    for (const auto& [j, v] : want2)
        g.expect(std::abs(rho_of(r2, static_cast<int>(j)) - v) <= 1e-10,
                 "kappa=2 band 2 rho at j=" + std::to_string(static_cast<int>(j)));

    const auto r31 = interpolation::solve_coefficients(band(3, 1, {1, 2}));
    g.expect(std::abs(rho_of(r31, 2) - (170.0 - 81.0 * std::sqrt(2.0)) / 92.0) <= 1e-10,
             "kappa=3 band 1 rho_6");

    const auto r32 = interpolation::solve_coefficients(band(3, 2, {1, 2, 3, 6}));
    const double want32[][2] = {{2, 0.8854}, {3, 0.2861}, {6, -0.0452}};
    for (const auto& [j, v] : want32)
        g.expect(std::abs(rho_of(r32, static_cast<int>(j)) - v) <= 5e-4,
                 "kappa=3 band 2 rho at j=" + std::to_string(static_cast<int>(j)));

    const auto r33 = interpolation::solve_coefficients(band(3, 3, {1, 2, 3, 4, 5, 6}));
    const double want33[][2] = {{2, 1.38266}, {3, 1.09831}, {4, 0.56967},
                                {5, 0.18700}, {6, 0.03160}};
    for (const auto& [j, v] : want33)
        g.expect(std::abs(rho_of(r33, static_cast<int>(j)) - v) <= 5e-4,
                 "kappa=3 band 3 rho at j=" + std::to_string(static_cast<int>(j)));

    g.expect(interpolation::solve_coefficients(band(2, 3, {1, 2, 3, 4, 5, 6})).matrix_rank == 5,
             "kappa=2 band 3 rank");
    g.expect(interpolation::solve_coefficients(band(2, 4, {1, 2, 3, 4, 5, 6, 7, 8})).matrix_rank == 7,
             "kappa=2 band 4 rank");
    return g.finish(6, "band interpolation coefficients and ranks");
}

// 7. Certification of the first kappa=2 band, its edge tangencies, and the
//    closed-form factorization of the certified combination.
int criterion_7() {
    Gate g;
    const auto t0 = Clock::now();
    const symbol::Combination c(2, {{1, 1.0}, {2, 9.0 / 14.0}});
    const auto rep = verifier::certify_band(c, 2.0 / 3.0, 1.0, 128, 512);
    g.expect(rep.certified, "band (2/3, 1) not certified");
    if (rep.verdicts.size() >= 2) {
        const auto& lower = rep.verdicts.front();
        g.expect(lower.kind == verifier::VerdictKind::NONNEGATIVE_WITH_ZEROS, "lower edge kind");
        for (double z : {-1.0 / 3.0, 1.0 / 3.0, 1.0})
            g.expect(has_zero_near(lower, z), "lower edge zero near " + fmt(z, 6));
        const auto& upper = rep.verdicts.back();
        for (double z : {0.0, 1.0})
            g.expect(has_zero_near(upper, z), "upper edge zero near " + fmt(z, 6));
        int bad = 0;
        for (std::size_t i = 1; i + 1 < rep.verdicts.size(); ++i)
            if (rep.verdicts[i].kind != verifier::VerdictKind::STRICTLY_POSITIVE) ++bad;
        g.expect(bad == 0, std::to_string(bad) + " interior energies not strictly positive");
    } else {
        g.expect(false, "band report carries no edge verdicts");
    }

    std::mt19937 rng(911);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double maxdev = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double E = 2.0 / 3.0 + u(rng) / 3.0;
        const double lo = std::max(E - 1.0, -1.0), hi = std::min(E + 1.0, 1.0);
        const double x = lo + (hi - lo) * u(rng);
        maxdev = std::max(maxdev, std::abs(verifier::factorization_residual_k2(E, x)));
    }
    g.expect(maxdev <= 1e-10, "factorization deviation " + fmt(maxdev, 3));
    const double dt = seconds_since(t0);
    g.expect(dt < 10.0, "runtime " + fmt(dt, 3) + " s >= 10 s");
    g.note(fmt(dt, 3) + " s; factorization max dev " + fmt(maxdev, 2));
    return g.finish(7, "first-band certificate, edge zeros, factorization");
}

// 8. Index-set validity matrix reproduced by the certified search.
int criterion_8() {
    Gate g;
    auto base2 = band(2, 2, {1, 2, 3, 4});
    const auto res = interpolation::search_sigma(base2, {{1, 2, 3, 4}, {1, 2, 3, 5}}, 8);
    g.expect(res.sigma == std::vector<int>{1, 2, 3, 5}, "winner for kappa=2 band 2");
    if (!res.verdicts.empty()) {
        g.expect(res.verdicts[0].solved, "{1,2,3,4} should solve");
        g.expect(!res.verdicts[0].certified, "{1,2,3,4} should fail the positivity screen");
    } else {
        g.expect(false, "no verdicts recorded");
    }
    const auto alt = interpolation::search_sigma(base2, {{1, 2, 3, 4}, {1, 2, 4, 8}}, 8);
    g.expect(alt.sigma == std::vector<int>{1, 2, 4, 8}, "alternative winner for kappa=2 band 2");

    auto base3 = band(3, 2, {1, 2, 3, 4});
    const auto res3 = interpolation::search_sigma(base3, {{1, 2, 3, 4}, {1, 2, 3, 7}}, 8);
    g.expect(res3.sigma == std::vector<int>{1, 2, 3, 7}, "winner for kappa=3 band 2");
    g.expect(!res3.verdicts.empty() && !res3.verdicts[0].certified,
             "{1,2,3,4} should fail for kappa=3 band 2");
    return g.finish(8, "index-set validity matrix via certified search");
}

// 9. kappa=8 workflow: ansatz threshold, its weight, the one-parameter
//    coefficient family, and band certification for the two quoted members.
int criterion_9() {
    Gate g;
    const double H1 = 0.5 * (std::sqrt(2.0) + 2.0 * std::sqrt(std::sqrt(2.0) - 1.0));
    const double H0 = 1.0 + std::cos(3.0 * PI / 8.0);

    const auto entries = catalog::first_order_ansatz(8);
    const catalog::CatalogEntry* hit = nullptr;
    for (const auto& e : entries)
        if (std::abs(e.E - H1) <= 1e-12) hit = &e;
    g.expect(hit != nullptr, "ansatz misses H1");
    if (hit) {
        bool omega_ok = false;
        for (const auto& pr : hit->provenance) {
            if (pr.source != catalog::Source::ANSATZ || pr.witness.size() != 3) continue;
            if (std::abs(pr.witness[0] - 0.350701) < 1e-3 &&
                std::abs(pr.witness[2] - (-0.7427)) <= 1e-3)
                omega_ok = true;
        }
        g.expect(omega_ok, "omega_0 not within 1e-3 of -0.7427");
    }

    const auto fam = interpolation::solve_single_constraint_family(8, H1, {1, 2, 3});
    g.expect(std::abs(fam.intercept - 0.51952) <= 1e-4, "family intercept " + fmt(fam.intercept, 7));
    g.expect(std::abs(fam.slope - 1.40530) <= 1e-4, "family slope " + fmt(fam.slope, 7));

    // The two quoted members do not certify the full band: both dip negative
    // near a band edge.  The measured minima, the member that does certify,
    // and the mid-band scans are pinned so the failure stays diagnosable.
    const auto r36 = verifier::certify_band(fam.member(-0.36), H1, H0, 48, 256);
    g.expect(r36.certified, "member rho24=-0.36 min " + fmt(r36.global_min, 4) + " at E=" +
                                fmt(r36.argmin.empty() ? 0.0 : r36.argmin[0], 6));
    const auto r51 = verifier::certify_band(fam.member(-0.51), H1, H0, 48, 256);
    g.expect(r51.certified, "member rho24=-0.51 min " + fmt(r51.global_min, 4) + " at E=" +
                                fmt(r51.argmin.empty() ? 0.0 : r51.argmin[0], 6));
    const bool mid = verifier::certify_band(fam.member(-0.2), H1, H0, 48, 256).certified;
    const bool s36 = verifier::scan_2d(fam.member(-0.36), 1.365, 1024).kind ==
                     verifier::VerdictKind::STRICTLY_POSITIVE;
    g.note(std::string("member rho24=-0.2 certifies: ") + (mid ? "yes" : "no") +
           "; certifying window is about (-0.351, -0.052); rho24=-0.36 strictly positive on the "
           "mid-band surface E=1.365: " + (s36 ? "yes" : "no"));
    return g.finish(9, "kappa=8 ansatz, affine family, quoted-member band certificates");
}

// 10. Dimension 3: slice reduction to the planar symbol, the symmetric
//     ansatz point, and the lifted fourth-band certificate grid.
int criterion_10() {
    Gate g;
    std::mt19937 rng(77);
    double maxdev = 0.0;
    for (int kappa : {2, 3, 4, 8}) {
        for (int l = 0; l <= kappa; ++l) {
            const double y = std::cos(l * PI / kappa);
            for (int trial = 0; trial < 25; ++trial) {
                const auto p2 = random_point2(rng);
                for (int j = 1; j <= 4; ++j)
                    maxdev = std::max(maxdev,
                                      std::abs(symbol::g3(j, kappa, {p2.E + y, p2.x, y}) -
                                               symbol::g2(j, kappa, p2)));
            }
        }
    }
    g.expect(maxdev <= 1e-12, "slice reduction deviation " + fmt(maxdev, 3));

    const double Estar = 3.0 / (2.0 * std::sqrt(7.0));
    const auto entries = catalog::ansatz_3d_symmetric(3);
    bool found = false, omega_ok = false;
    for (const auto& e : entries) {
        if (std::abs(e.E - Estar) > 1e-10) continue;
        found = true;
        for (const auto& pr : e.provenance)
            if (pr.source == catalog::Source::ANSATZ && pr.witness.size() == 4 &&
                std::abs(pr.witness[0] - Estar / 3.0) <= 1e-9 &&
                std::abs(pr.witness[3] - (-1.8)) <= 1e-6)
                omega_ok = true;
    }
    g.expect(found, "symmetric ansatz misses 3/(2 sqrt 7)");
    g.expect(omega_ok, "omega_0 not within 1e-6 of -1.8");

    // Reuse of the planar fourth-band weights one dimension up.  The solved
    // full-precision coefficients are required: weights rounded to six
    // decimals already dip to about -7e-7 on the edge slices.
    auto band4 = band(2, 4, {1, 2, 3, 4, 5, 6, 7, 10});
    const auto weights = interpolation::solve_coefficients(band4).combination;
    const auto rep = verifier::certify_band_3d(weights, 4.0 / 3.0, 7.0 / 5.0, 128, 64, 128);
    g.expect(rep.certified, "3-D band (4/3, 7/5) not certified, min " + fmt(rep.global_min, 4));
    int bad = 0;
    for (std::size_t i = 1; i + 1 < rep.verdicts.size(); ++i)
        if (rep.verdicts[i].kind != verifier::VerdictKind::STRICTLY_POSITIVE) ++bad;
    g.expect(bad == 0, std::to_string(bad) + " interior energies not strictly positive");
    g.note("grid 128 energies x 128 x-samples x 64 y-slices (evidence-grade scan)");
    return g.finish(10, "3-D slice identity, symmetric ansatz, lifted band certificate");
}

// 11. Gap decay of the deep decreasing families: log-log slope near -2.
int criterion_11() {
    Gate g;
    const auto t0 = Clock::now();
    const auto s3 = verifier::convergence_study(3, 400);
    const double d3 = seconds_since(t0);
    g.expect(s3.truncated_at == -1, "kappa=3 study truncated");
    g.expect(s3.fit_from == 200, "kappa=3 fit window");
    g.expect(s3.slope > -2.2 && s3.slope < -1.8, "kappa=3 slope " + fmt(s3.slope, 6));
    g.expect(d3 < 60.0, "kappa=3 runtime " + fmt(d3, 3) + " s");

    const auto t1 = Clock::now();
    const auto s4 = verifier::convergence_study(4, 400);
    const double d4 = seconds_since(t1);
    g.expect(s4.truncated_at == -1, "kappa=4 study truncated");
    g.expect(s4.fit_from == 200, "kappa=4 fit window");
    g.expect(s4.slope > -2.2 && s4.slope < -1.8, "kappa=4 slope " + fmt(s4.slope, 6));
    g.expect(d4 < 60.0, "kappa=4 runtime " + fmt(d4, 3) + " s");
    g.note("slopes " + fmt(s3.slope, 5) + " / " + fmt(s4.slope, 5) + " in " + fmt(d3, 2) + " s / " +
           fmt(d4, 2) + " s");
    return g.finish(11, "deep-chain gap decay exponents");
}

// 12. Property sweeps: derivative identities, branch round-trips, the
//     bracket equivalence, mirror/negation covariance, catalog closure.
int criterion_12() {
    Gate g;

    // finite-difference and exact derivative identities; dividing by the
    // realized step (x+h)-(x-h) keeps the step-representation error out
    int bad_fd = 0;
    const double h = 1e-6;
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i <= 399; ++i) {
            const double x = -1.0 + 2.0 * i / 399.0;
            const double xh = x + h, xl = x - h;
            const double fd = (cheb::eval_T(n, xh) - cheb::eval_T(n, xl)) / (xh - xl);
            if (std::abs(fd - cheb::eval_T_derivative(n, x)) > 1e-9) ++bad_fd;
        }
    g.expect(bad_fd == 0, std::to_string(bad_fd) + " finite-difference mismatches");

    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> xs(-0.999, 0.999);
    int bad_exact = 0;
    for (int n = 1; n <= 12; ++n)
        for (int trial = 0; trial < 200; ++trial) {
            const double x = xs(rng);
            const double lhs = (x * x - 1.0) * cheb::eval_U_derivative(n, x);
            const double rhs = n * cheb::eval_T(n, x) - x * cheb::eval_U(n, x);
            if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(rhs))) ++bad_exact;
        }
    g.expect(bad_exact == 0, std::to_string(bad_exact) + " exact-relation mismatches");

    // branch round-trips
    int bad_branch = 0;
    for (int kappa = 2; kappa <= 8; ++kappa)
        for (int j = 0; j < kappa; ++j) {
            const cheb::BranchIndex b(kappa, j);
            for (int trial = 0; trial < 50; ++trial) {
                const double y = xs(rng);
                const double x = cheb::branch_inverse(b, y);
                if (std::abs(cheb::eval_T(kappa, x) - y) > 1e-12) ++bad_branch;
                if (x < b.lower() - 1e-12 || x > b.upper() + 1e-12) ++bad_branch;
            }
        }
    g.expect(bad_branch == 0, std::to_string(bad_branch) + " branch round-trip failures");

    // bracket equivalence for kappa=3: level-matched points annihilate every
    // bracket of U multiples; generic points (guarded away from U zeros) don't
    int bad_bracket = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const double level = xs(rng);
        const double x = cheb::branch_inverse(cheb::BranchIndex(3, 0), level);
        const double y = cheb::branch_inverse(cheb::BranchIndex(3, 1), level);
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b)
                if (std::abs(cheb::bracket_U(3 * a, 3 * b, x, y)) > 1e-9) ++bad_bracket;
    }
    for (int trial = 0; trial < 60; ++trial) {
        const double x = xs(rng), y = xs(rng);
        if (std::abs(cheb::eval_T(3, x) - cheb::eval_T(3, y)) < 1e-3) continue;
        if (std::abs(cheb::eval_U(3, x)) < 1e-2 || std::abs(cheb::eval_U(3, y)) < 1e-2) continue;
        bool all_zero = true;
        for (int a = 1; a <= 5 && all_zero; ++a)
            for (int b = 1; b <= 5 && all_zero; ++b)
                if (std::abs(cheb::bracket_U(3 * a, 3 * b, x, y)) > 1e-9) all_zero = false;
        if (all_zero) ++bad_bracket;
    }
    g.expect(bad_bracket == 0, std::to_string(bad_bracket) + " bracket-equivalence failures");

    // mirror symmetry and negation covariance of the planar symbol
    int bad_mirror = 0, bad_neg = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_point2(rng);
        for (int kappa = 2; kappa <= 6; ++kappa)
            for (int j = 1; j <= 4; ++j) {
                const double base = symbol::g2(j, kappa, p);
                if (std::abs(symbol::g2(j, kappa, {p.E, p.E - p.x}) - base) >
                    1e-12 * (1.0 + std::abs(base)))
                    ++bad_mirror;
                const double sign = (j * kappa) % 2 == 0 ? -1.0 : 1.0;
                if (std::abs(symbol::g2(j, kappa, {-p.E, -p.x}) - sign * base) >
                    1e-12 * (1.0 + std::abs(base)))
                    ++bad_neg;
            }
    }
    g.expect(bad_mirror == 0, std::to_string(bad_mirror) + " mirror failures");
    g.expect(bad_neg == 0, std::to_string(bad_neg) + " negation-covariance failures");

    // catalog closure under E -> -E, sorted and merged
    int bad_cat = 0;
    for (int kappa : {2, 3})
        for (int dim : {2, 3}) {
            const auto entries = catalog::build_catalog(kappa, dim, 3);
            for (std::size_t i = 0; i + 1 < entries.size(); ++i)
                if (!(entries[i].E < entries[i + 1].E)) ++bad_cat;
            for (const auto& e : entries) {
                bool hit = false;
                for (const auto& o : entries)
                    if (std::abs(o.E + e.E) <= 1e-9) hit = true;
                if (!hit) ++bad_cat;
            }
        }
    g.expect(bad_cat == 0, std::to_string(bad_cat) + " catalog closure failures");
    return g.finish(12, "derivative, branch, bracket, symmetry, and closure properties");
}

}  // namespace

int main() {
    int failures = 0;
    failures += criterion_1();
    failures += criterion_2();
    failures += criterion_3();
    failures += criterion_4();
    failures += criterion_5();
    failures += criterion_6();
    failures += criterion_7();
    failures += criterion_8();
    failures += criterion_9();
    failures += criterion_10();
    failures += criterion_11();
    failures += criterion_12();
    std::printf("acceptance: %d of 12 criteria pass\n", 12 - failures);
    return failures;
}
