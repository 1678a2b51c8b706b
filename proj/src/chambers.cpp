#include "wallchamber/chambers.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wallchamber {

namespace {

IntVec signed_normal(const DimVector& root, int sign) {
    IntVec v = root.as_int_vec();
    if (sign < 0)
        v = negated(v);
    return v;
}

Cone sign_cone(std::size_t n, const std::vector<DimVector>& roots, const std::vector<int>& signs) {
    std::vector<IntVec> ineqs;
    for (std::size_t j = 0; j < signs.size(); ++j)
        ineqs.push_back(signed_normal(roots[j], signs[j]));
    return Cone::from_constraints(n, ineqs, {});
}

void collect_cells(std::size_t n, const std::vector<DimVector>& roots, std::vector<int>& signs,
                   std::vector<Cell>& out) {
    if (signs.size() == roots.size()) {
        Cone cone = sign_cone(n, roots, signs);
        RatVec witness = relative_interior_point(cone);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            Rational value = dot(std::span<const Integer>(roots[j].as_int_vec()), std::span<const Rational>(witness));
            if (sgn(value) != signs[j])
                throw InternalError("cell witness does not realize its sign vector");
        }
        out.push_back(Cell{signs, std::move(cone), std::move(witness)});
        return;
    }
    for (int s : {1, -1}) {
        signs.push_back(s);
        if (sign_cone(n, roots, signs).dim() == n)
            collect_cells(n, roots, signs, out);
        signs.pop_back();
    }
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// Index j of the root whose hyperplane carries the facet with inward normal f.
std::size_t facet_root(const IntVec& f, const std::vector<DimVector>& roots) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
        IntVec r = roots[j].as_int_vec();
        if (f == r || f == negated(r))
            return j;
    }
    throw InternalError("cell facet does not lie on a root hyperplane");
}

} // namespace

std::vector<Chamber> enumerate_chambers(WallTable& table) {
    const Quiver& q = table.quiver();
    if (!q.is_representation_finite())
        throw PreconditionError("chambers: quiver is not representation-finite");
    const std::size_t n = q.vertex_count();
    auto roots = q.positive_roots();
    std::sort(roots.begin(), roots.end());
    table.sweep(q.highest_root_degree());

    std::vector<Cell> cells;
    std::vector<int> signs;
    collect_cells(n, roots, signs, cells);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i)
        index.emplace(cells[i].signs, i);

    UnionFind uf(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (const auto& f : cells[i].cone.ineqs()) {
            const std::size_t j = facet_root(f, roots);
            auto flipped = cells[i].signs;
            flipped[j] = -flipped[j];
            auto it = index.find(flipped);
            if (it == index.end())
                throw InternalError("cell facet has no neighbouring cell");
            if (it->second < i)
                continue;
            Cone facet = intersect(cells[i].cone, Cone::from_constraints(n, std::vector<IntVec>{}, {f}));
            if (facet.dim() + 1 != n)
                throw InternalError("cell facet is not of codimension one");
            if (!contains_cone(table.wall(roots[j]), facet))
                uf.unite(i, it->second);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t i = 0; i < cells.size(); ++i)
        components[uf.find(i)].push_back(i);

    std::vector<Chamber> chambers;
    for (const auto& [root, members] : components) {
        std::vector<Cone> parts;
        std::vector<Cell> member_cells;
        for (auto i : members) {
            member_cells.push_back(cells[i]);
            parts.push_back(cells[i].cone);
        }
        Chamber ch{std::move(member_cells), conic_hull(parts), {}, 0};
        if (!ch.cone.strongly_convex() || ch.cone.rays().size() != n || ch.cone.dim() != n)
            throw InternalError("chamber cone is not simplicial");
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (uf.find(i) != root && ch.cone.contains(std::span<const Rational>(cells[i].witness)))
                throw InternalError("chamber cone contains a cell of another chamber");
        ch.g_matrix = ch.cone.rays();
        ch.det = determinant(ch.g_matrix);
        chambers.push_back(std::move(ch));
    }
    std::sort(chambers.begin(), chambers.end(),
              [](const Chamber& a, const Chamber& b) { return a.g_matrix < b.g_matrix; });
    return chambers;
}

UnimodularReport check_unimodular(const std::vector<Chamber>& chambers) {
    UnimodularReport report;
    for (const auto& ch : chambers) {
        if (abs(ch.det) != 1) {
            report.pass = false;
            report.violations.push_back(ch.g_matrix);
        }
    }
    return report;
}

CoverageReport check_fan_coverage(const std::vector<Chamber>& chambers) {
    CoverageReport report;
    for (std::size_t a = 0; a < chambers.size(); ++a) {
        RatVec inside = relative_interior_point(chambers[a].cone);
        for (std::size_t b = 0; b < chambers.size(); ++b)
            if (a != b && chambers[b].cone.contains(std::span<const Rational>(inside)))
                ++report.overlapping_pairs;
    }

    std::map<std::vector<IntVec>, std::size_t> facets;
    for (const auto& ch : chambers) {
        for (std::size_t drop = 0; drop < ch.g_matrix.size(); ++drop) {
            std::vector<IntVec> facet;
            for (std::size_t k = 0; k < ch.g_matrix.size(); ++k)
                if (k != drop)
                    facet.push_back(ch.g_matrix[k]);
            ++facets[facet];
        }
    }
    for (const auto& [facet, count] : facets) {
        if (count == 2)
            ++report.facets_shared;
        else
            ++report.unmatched_facets;
    }
    report.pass = !chambers.empty() && report.overlapping_pairs == 0 && report.unmatched_facets == 0;
    return report;
}

} // namespace wallchamber
