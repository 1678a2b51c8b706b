#pragma once

#include "wallchamber/walls.hpp"

#include <optional>
#include <vector>

namespace wallchamber {

bool on_wall(WallTable& table, const Weight& theta, const DimVector& d);

/// Every nonzero d with total degree <= degree_bound whose wall contains theta, sorted.
std::vector<DimVector> walls_through(WallTable& table, const Weight& theta, long degree_bound);

/// True iff no wall of total degree <= degree_bound passes through theta.
/// Exact chamber membership once bound_is_exact holds.
bool in_chamber_bounded(WallTable& table, const Weight& theta, long degree_bound);

/// A representation-finite quiver whose highest root has total degree <= bound:
/// every brick is visible to the bounded tests.
bool bound_is_exact(const Quiver& q, long degree_bound);

enum class TfKind { not_equivalent, equivalent_up_to_bound, equivalent_exact };

const char* to_string(TfKind kind);

struct TfWitness {
    DimVector d;
    SegmentHit hit;
};

struct TfVerdict {
    TfKind kind = TfKind::equivalent_up_to_bound;
    std::optional<TfWitness> witness;
    long bound = 0;
};

/// Decides TF equivalence of theta and theta2 by testing every wall of total
/// degree <= degree_bound against the segment between them. A wall met in a
/// point or a proper subsegment separates them and is returned as the witness
/// (smallest total degree, then lexicographically smallest d). Otherwise the
/// answer is exact when bound_is_exact holds and qualified by the bound when
/// it does not.
TfVerdict tf_equivalent_bounded(WallTable& table, const Weight& theta, const Weight& theta2, long degree_bound);

} // namespace wallchamber
