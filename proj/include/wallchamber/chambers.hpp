#pragma once

#include "wallchamber/walls.hpp"

#include <vector>

namespace wallchamber {

/// One open cell of the root hyperplane arrangement {theta : theta.d = 0}.
/// signs[j] is +1 or -1 against the j-th positive root (roots in lex order).
struct Cell {
    std::vector<int> signs;
    Cone cone;
    RatVec witness;
};

struct Chamber {
    std::vector<Cell> cells;
    Cone cone;
    /// Extreme rays of the closed chamber, one per row, lex-sorted.
    std::vector<IntVec> g_matrix;
    Integer det;
};

/// Chambers of a representation-finite quiver, sorted by g_matrix.
///
/// Cells of the root arrangement are glued across a shared facet whenever
/// that facet is not covered by the wall of the facet's root. Any geometric
/// inconsistency (a non-simplicial chamber, a cell inside a foreign chamber,
/// a cell facet with no neighbour) throws InternalError.
std::vector<Chamber> enumerate_chambers(WallTable& table);

struct UnimodularReport {
    bool pass = true;
    /// Ray lists of the chambers with |det| != 1.
    std::vector<std::vector<IntVec>> violations;
};

UnimodularReport check_unimodular(const std::vector<Chamber>& chambers);

struct CoverageReport {
    bool pass = false;
    std::size_t facets_shared = 0;
    std::size_t unmatched_facets = 0;
    std::size_t overlapping_pairs = 0;
};

/// Interiors pairwise disjoint and every facet (n-1 of the n rays) shared by
/// exactly two chambers.
CoverageReport check_fan_coverage(const std::vector<Chamber>& chambers);

} // namespace wallchamber
