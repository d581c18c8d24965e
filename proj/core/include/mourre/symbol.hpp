#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mourre::symbol {

/// Weighted family of harmonics.  For base order kappa the combination
/// describes G = sum_i rho_i * g_{j_i * kappa} with strictly increasing j_i.
struct Combination {
    int kappa = 2;
    std::vector<std::pair<int, double>> terms;  // (j, rho)

    Combination() = default;
    Combination(int kappa, std::vector<std::pair<int, double>> terms);

    int max_harmonic() const;  // largest j * kappa appearing
};

/// A point on the d=2 constant-energy surface: (x, E - x) with both
/// coordinates in [-1, 1].
struct EnergyPoint2D {
    double E = 0;
    double x = 0;
};

/// A point on the d=3 constant-energy surface: (x, y, E - x - y).
struct EnergyPoint3D {
    double E = 0;
    double x = 0;
    double y = 0;
};

/// Clamp a point violating its domain by at most EQ_TOL; reject otherwise.
EnergyPoint2D validated(EnergyPoint2D p);
EnergyPoint3D validated(EnergyPoint3D p);

/// m(x) := 1 - x^2.
double m_weight(double x);

/// g_{j kappa} at a 2-D point: m(x) U_{jk-1}(x) + m(E-x) U_{jk-1}(E-x).
double g2(int j, int kappa, EnergyPoint2D p);

/// 3-D analogue with coordinates (x, y, E-x-y).
double g3(int j, int kappa, EnergyPoint3D p);

/// Weighted sums over a combination.
double G2(const Combination& c, EnergyPoint2D p);
double G3(const Combination& c, EnergyPoint3D p);

/// x-derivatives along the constant-energy surface.
double dg2_dx(int j, int kappa, EnergyPoint2D p);
double dG2_dx(const Combination& c, EnergyPoint2D p);

std::string to_json_string(const Combination& c);
Combination combination_from_json(std::string_view text);

}  // namespace mourre::symbol
