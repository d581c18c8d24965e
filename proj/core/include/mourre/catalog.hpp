#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mourre/pingpong.hpp"

namespace mourre::catalog {

/// How a catalog energy was produced.
enum class Source { ZEROTH_ORDER, PING_PONG, ANSATZ, DIM_SHIFT };

std::string_view to_string(Source s);
Source source_from_string(std::string_view s);

struct Provenance {
    Source source = Source::ZEROTH_ORDER;

    // ZEROTH_ORDER: lattice tuple (j_1..j_dim), E = sum of cos(j_q pi / kappa)
    std::vector<int> tuple;

    // PING_PONG: family, chain depth and well index
    pingpong::Variant variant = pingpong::Variant::J2_DECREASING;
    int n = 0;
    int well_index = 1;

    // ANSATZ: case label (1..6 for the planar cases, 0 for the symmetric
    // 3-D point), witness = {Y0, Y1, omega0} (3-D: {X0, X1, Y1, omega0}
    // with X0 = E/3 and (X1, Y1, E-X1-Y1) the second point)
    int ansatz_case = 0;
    std::vector<double> witness;

    // DIM_SHIFT: planar source energy and shift index l
    double base_E = 0.0;
    int shift_l = 0;

    // true on copies added by the E -> -E closure (the fields above then
    // describe the pre-negation construction)
    bool mirrored = false;

    std::string describe(int kappa) const;
};

struct CatalogEntry {
    double E = 0.0;
    int kappa = 2;
    int dim = 2;
    std::vector<Provenance> provenance;
    int order_m = -1;  // certificate order of the construction (lower bound); -1 unknown
    bool heuristic = false;
};

/// All lattice sums sum_{q=1..dim} cos(j_q pi/kappa), deduplicated, each with
/// its witness tuples.
std::vector<CatalogEntry> zeroth_order(int kappa, int dim);

/// Planar first-order candidates: two witness points x_i = (Y_i, E - Y_i)
/// with g at x_0 a fixed negative multiple omega_0 of g at x_1 for every
/// harmonic.  Cases 1..6 pin one coordinate (E-1, E+1, E/2, a U-root on
/// either side, or nothing) and level-match the rest; each reduces to 1-D
/// bisection over branch tuples.  kappa outside {2,3,4,6} is flagged
/// heuristic.
std::vector<CatalogEntry> first_order_ansatz(int kappa);

/// 3-D candidates with symmetric first point (E/3, E/3, E/3) and second
/// point (X1, X1, E - 2 X1) level-matched to it.
std::vector<CatalogEntry> ansatz_3d_symmetric(int kappa);

/// Lift planar entries to dimension 3 by adding cos(l pi/kappa), l = 0..kappa.
std::vector<CatalogEntry> shift_to_dim3(const std::vector<CatalogEntry>& entries, int kappa);

/// Union of all sources for (kappa, dim), closed under E -> -E, merged at
/// 1e-9 and sorted ascending.  dim=2 collects lattice sums, the ansatz
/// solver and the ping-pong families up to depth n_max; dim=3 additionally
/// shifts the planar catalog and runs the symmetric 3-D ansatz.
std::vector<CatalogEntry> build_catalog(int kappa, int dim, int n_max);

/// Independent cross-check of the zeroth-order set: solves the level
/// condition T_kappa(Y) = T_kappa(E-Y) over branch pairs together with the
/// weight-ratio condition and returns the sorted energies found.
std::vector<double> solve_zeroth_order_numeric(int kappa);

/// Merge duplicates within 1e-9 (concatenating provenance, keeping the
/// smallest known order) and sort ascending.
std::vector<CatalogEntry> merge_entries(std::vector<CatalogEntry> entries);

std::string to_csv(const std::vector<CatalogEntry>& entries);
std::string to_json_string(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(std::string_view text);

}  // namespace mourre::catalog
