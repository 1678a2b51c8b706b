#pragma once

// Test-only helpers for the cone kernel: a brute-force facet enumerator that
// shares no code path with the double description implementation, and
// generators of small random cones.

#include "wallchamber/arith.hpp"
#include "wallchamber/cone.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace wallchamber::testing {

struct RandomCone {
    std::size_t n;
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

// Facet normals of cone(rays) + span(lineality), computed by trying every
// subset of rays whose span together with the lineality is a hyperplane of
// the linear hull and keeping the one-sided ones. Normals are taken inside
// the linear hull, so they match the kernel's canonical inequalities.
inline std::set<IntVec> brute_force_facets(std::size_t n, const std::vector<IntVec>& rays,
                                           const std::vector<IntVec>& lineality) {
    std::vector<IntVec> all = rays;
    all.insert(all.end(), lineality.begin(), lineality.end());
    const std::size_t k = rank(all, n);

    std::vector<RatVec> hull_rows;
    for (const auto& v : all)
        hull_rows.push_back(to_rational(v));
    auto orth = nullspace(hull_rows, n); // the equations of the linear hull

    std::set<IntVec> facets;
    if (k == 0)
        return facets;
    const std::size_t m = rays.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<IntVec> subset = lineality;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i))
                subset.push_back(rays[i]);
        if (rank(subset, n) != k - 1)
            continue;
        std::vector<RatVec> rows;
        for (const auto& v : subset)
            rows.push_back(to_rational(v));
        for (const auto& o : orth)
            rows.push_back(o);
        auto normal_space = nullspace(rows, n);
        if (normal_space.size() != 1)
            continue;
        IntVec v = primitive(std::span<const Rational>(normal_space[0]));
        int sign = 0;
        bool two_sided = false;
        for (const auto& r : rays) {
            int s = sgn(dot(v, r));
            if (s == 0)
                continue;
            if (sign == 0)
                sign = s;
            else if (s != sign)
                two_sided = true;
        }
        if (two_sided || sign == 0)
            continue;
        if (sign < 0)
            v = negated(v);
        facets.insert(v);
    }
    return facets;
}

inline IntVec random_vector(std::mt19937_64& gen, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVec v(n);
    for (auto& x : v)
        x = dist(gen);
    return v;
}

inline RandomCone random_cone(std::mt19937_64& gen, std::size_t max_n = 4, std::size_t max_gens = 6) {
    RandomCone c;
    c.n = std::uniform_int_distribution<std::size_t>(1, max_n)(gen);
    auto rays = std::uniform_int_distribution<std::size_t>(0, max_gens)(gen);
    auto lin = std::uniform_int_distribution<std::size_t>(0, 4)(gen) == 0 ? 1u : 0u;
    for (std::size_t i = 0; i < rays; ++i)
        c.rays.push_back(random_vector(gen, c.n, -3, 3));
    for (std::size_t i = 0; i < lin; ++i)
        c.lineality.push_back(random_vector(gen, c.n, -2, 2));
    return c;
}

inline Cone build(const RandomCone& c) {
    return Cone::from_generators(c.n, c.rays, c.lineality);
}

inline RatVec random_point(std::mt19937_64& gen, std::size_t n) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    RatVec p(n);
    for (auto& x : p) {
        x = Rational(num(gen), den(gen));
        x.canonicalize();
    }
    return p;
}

// Nonnegative combination of the cone's generators; lands in the cone.
inline RatVec random_member(std::mt19937_64& gen, const Cone& c) {
    std::uniform_int_distribution<long> coef(0, 3), lin(-3, 3);
    RatVec p(c.ambient_dim(), Rational(0));
    for (const auto& r : c.rays()) {
        long a = coef(gen);
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += a * r[i];
    }
    for (const auto& l : c.lineality()) {
        long a = lin(gen);
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += a * l[i];
    }
    return p;
}

} // namespace wallchamber::testing
