#include "mourre/symbol.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "mourre/chebyshev.hpp"
#include "mourre/errors.hpp"

namespace mourre::symbol {

using cheb::EQ_TOL;

Combination::Combination(int kappa_, std::vector<std::pair<int, double>> terms_)
    : kappa(kappa_), terms(std::move(terms_)) {
    if (kappa < 1)
        throw domain_error("Combination: kappa must be >= 1");
    if (terms.empty())
        throw domain_error("Combination: at least one term required");
    int prev = 0;
    for (const auto& [j, rho] : terms) {
        (void)rho;
        if (j <= prev)
            throw domain_error("Combination: harmonic indices must be strictly increasing and >= 1");
        prev = j;
    }
}

int Combination::max_harmonic() const {
    return terms.empty() ? 0 : terms.back().first * kappa;
}

namespace {

double clamp_coordinate(double v, double lo, double hi, const char* what) {
    if (v < lo) {
        if (lo - v > EQ_TOL)
            throw domain_error(std::string("validated: ") + what + " below its interval");
        return lo;
    }
    if (v > hi) {
        if (v - hi > EQ_TOL)
            throw domain_error(std::string("validated: ") + what + " above its interval");
        return hi;
    }
    return v;
}

}  // namespace

EnergyPoint2D validated(EnergyPoint2D p) {
    if (std::abs(p.E) > 2.0 + EQ_TOL)
        throw domain_error("validated: energy outside [-2, 2]");
    const double lo = std::max(p.E - 1.0, -1.0);
    const double hi = std::min(p.E + 1.0, 1.0);
    if (lo > hi + EQ_TOL)
        throw domain_error("validated: empty x-interval for this energy");
    p.x = clamp_coordinate(p.x, lo, hi, "x");
    return p;
}

EnergyPoint3D validated(EnergyPoint3D p) {
    if (std::abs(p.E) > 3.0 + EQ_TOL)
        throw domain_error("validated: energy outside [-3, 3]");
    const double ylo = std::max(p.E - 2.0, -1.0);
    const double yhi = std::min(p.E + 2.0, 1.0);
    if (ylo > yhi + EQ_TOL)
        throw domain_error("validated: empty y-interval for this energy");
    p.y = clamp_coordinate(p.y, ylo, yhi, "y");
    const double xlo = std::max(p.E - p.y - 1.0, -1.0);
    const double xhi = std::min(p.E - p.y + 1.0, 1.0);
    if (xlo > xhi + EQ_TOL)
        throw domain_error("validated: empty x-interval for this (E, y)");
    p.x = clamp_coordinate(p.x, xlo, xhi, "x");
    return p;
}

double m_weight(double x) { return 1.0 - x * x; }

double g2(int j, int kappa, EnergyPoint2D p) {
    const int order = j * kappa;
    const double u = p.E - p.x;
    return m_weight(p.x) * cheb::eval_U(order, p.x) + m_weight(u) * cheb::eval_U(order, u);
}

double g3(int j, int kappa, EnergyPoint3D p) {
    const int order = j * kappa;
    const double z = p.E - p.x - p.y;
    return m_weight(p.x) * cheb::eval_U(order, p.x) +
           m_weight(p.y) * cheb::eval_U(order, p.y) +
           m_weight(z) * cheb::eval_U(order, z);
}

double G2(const Combination& c, EnergyPoint2D p) {
    double acc = 0.0;
    for (const auto& [j, rho] : c.terms) acc += rho * g2(j, c.kappa, p);
    return acc;
}

double G3(const Combination& c, EnergyPoint3D p) {
    double acc = 0.0;
    for (const auto& [j, rho] : c.terms) acc += rho * g3(j, c.kappa, p);
    return acc;
}

double dg2_dx(int j, int kappa, EnergyPoint2D p) {
    const int order = j * kappa;
    const double x = p.x;
    const double u = p.E - p.x;
    const double left = -2.0 * x * cheb::eval_U(order, x) +
                        m_weight(x) * cheb::eval_U_derivative(order, x);
    const double right = -2.0 * u * cheb::eval_U(order, u) +
                         m_weight(u) * cheb::eval_U_derivative(order, u);
    return left - right;  // chain rule: d/dx f(E - x) = -f'(E - x)
}

double dG2_dx(const Combination& c, EnergyPoint2D p) {
    double acc = 0.0;
    for (const auto& [j, rho] : c.terms) acc += rho * dg2_dx(j, c.kappa, p);
    return acc;
}

std::string to_json_string(const Combination& c) {
    nlohmann::json out;
    out["kappa"] = c.kappa;
    auto& terms = out["terms"] = nlohmann::json::array();
    for (const auto& [j, rho] : c.terms) terms.push_back({j, rho});
    return out.dump();
}

Combination combination_from_json(std::string_view text) {
    nlohmann::json in = nlohmann::json::parse(text);
    std::vector<std::pair<int, double>> terms;
    for (const auto& t : in.at("terms"))
        terms.emplace_back(t.at(0).get<int>(), t.at(1).get<double>());
    return Combination(in.at("kappa").get<int>(), std::move(terms));
}

}  // namespace mourre::symbol
