#pragma once

#include "wallchamber/cone.hpp"
#include "wallchamber/quiver.hpp"

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace wallchamber {

/// Nonzero dimension vectors of total degree exactly `degree`, lexicographic.
std::vector<DimVector> dimension_vectors_of_degree(std::size_t n, long degree);
/// Nonzero dimension vectors with total degree <= bound, ordered by degree,
/// then lexicographically.
std::vector<DimVector> dimension_vectors_up_to(std::size_t n, long bound);

/// Wall of a dimension vector with one- or two-element support, read off
/// the full subquiver on the support.
Cone base_case_wall(const Quiver& q, const DimVector& d);

/// Closed-form wall of (a, b) for the m-Kronecker quiver 1 => 2, from the
/// known Schur roots: real roots (s_i, s_{i+1}), (s_{i+1}, s_i) and, for
/// m >= 3, the imaginary band a^2 + b^2 - mab < 0.
Cone kronecker_wall_oracle(long m, const DimVector& d);

struct SchurReport {
    DimVector d;
    RootLabel label;
    std::size_t wall_dim = 0;
    bool is_schur = false;
    bool is_multiple_of_schur = false;
};

/// Memoized walls Theta_d of one quiver.
///
/// |supp d| <= 2 comes from base_case_wall. Larger supports use the
/// recurrence: Theta_d is the conic hull of Theta_c /\ Theta_{d-c} over all
/// 0 < c < d. Entries are written once and never change, so concurrent
/// readers only contend on the map itself.
class WallTable {
  public:
    explicit WallTable(Quiver quiver) : quiver_(std::move(quiver)) {}

    WallTable(const WallTable&) = delete;
    WallTable& operator=(const WallTable&) = delete;

    const Quiver& quiver() const { return quiver_; }

    Cone wall(const DimVector& d);
    SchurReport classify_schur(const DimVector& d);

    /// Fills the memo for every d with total degree <= degree_bound, one
    /// degree level at a time (levels are computed in parallel), and returns
    /// the walls sorted by d.
    std::vector<std::pair<DimVector, Cone>> sweep(long degree_bound);

    std::size_t memo_size() const;

  private:
    Cone compute(const DimVector& d);
    const Cone* find(const DimVector& d) const;
    void validate(const DimVector& d) const;

    Quiver quiver_;
    mutable std::shared_mutex mutex_;
    std::map<DimVector, Cone> memo_;
};

} // namespace wallchamber
