#include "wallchamber/stability.hpp"

#include "wallchamber/errors.hpp"

namespace wallchamber {

namespace {

void check_bound(long bound) {
    if (bound < 1)
        throw PreconditionError("degree bound must be positive");
}

} // namespace

bool on_wall(WallTable& table, const Weight& theta, const DimVector& d) {
    table.quiver().check_length(theta.size(), "on_wall");
    return table.wall(d).contains(std::span<const Rational>(theta.coords));
}

std::vector<DimVector> walls_through(WallTable& table, const Weight& theta, long degree_bound) {
    check_bound(degree_bound);
    table.quiver().check_length(theta.size(), "walls_through");
    std::vector<DimVector> hits;
    for (const auto& [d, w] : table.sweep(degree_bound))
        if (w.contains(std::span<const Rational>(theta.coords)))
            hits.push_back(d);
    return hits;
}

bool in_chamber_bounded(WallTable& table, const Weight& theta, long degree_bound) {
    return walls_through(table, theta, degree_bound).empty();
}

bool bound_is_exact(const Quiver& q, long degree_bound) {
    return q.is_representation_finite() && degree_bound >= q.highest_root_degree();
}

const char* to_string(TfKind kind) {
    switch (kind) {
    case TfKind::not_equivalent:
        return "not_equivalent";
    case TfKind::equivalent_up_to_bound:
        return "equivalent_up_to_bound";
    case TfKind::equivalent_exact:
        return "equivalent_exact";
    }
    return "equivalent_up_to_bound";
}

TfVerdict tf_equivalent_bounded(WallTable& table, const Weight& theta, const Weight& theta2, long degree_bound) {
    check_bound(degree_bound);
    table.quiver().check_length(theta.size(), "tf_equivalent_bounded");
    table.quiver().check_length(theta2.size(), "tf_equivalent_bounded");

    TfVerdict verdict;
    verdict.bound = degree_bound;
    if (theta == theta2) {
        verdict.kind = TfKind::equivalent_exact;
        return verdict;
    }

    table.sweep(degree_bound);
    const auto n = table.quiver().vertex_count();
    for (const auto& d : dimension_vectors_up_to(n, degree_bound)) {
        auto hit = segment_intersection(table.wall(d), theta.coords, theta2.coords);
        if (hit.kind == HitKind::point || hit.kind == HitKind::subsegment) {
            verdict.kind = TfKind::not_equivalent;
            verdict.witness = TfWitness{d, hit};
            return verdict;
        }
    }
    verdict.kind = bound_is_exact(table.quiver(), degree_bound) ? TfKind::equivalent_exact
                                                                : TfKind::equivalent_up_to_bound;
    return verdict;
}

} // namespace wallchamber
