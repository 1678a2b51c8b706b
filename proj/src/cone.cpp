#include "wallchamber/cone.hpp"

#include "wallchamber/errors.hpp"

#include <algorithm>
#include <string>

namespace wallchamber {

namespace {

struct Generators {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

void check_dims(std::size_t n, const std::vector<IntVec>& vs, const char* what) {
    for (const auto& v : vs)
        if (v.size() != n)
            throw PreconditionError(std::string(what) + ": dimension mismatch (expected " + std::to_string(n) +
                                    ", got " + std::to_string(v.size()) + ")");
}

std::vector<IntVec> primitive_all(const std::vector<RatVec>& vs) {
    std::vector<IntVec> out;
    out.reserve(vs.size());
    for (const auto& v : vs)
        out.push_back(primitive(std::span<const Rational>(v)));
    return out;
}

std::vector<RatVec> rational_all(const std::vector<IntVec>& vs) {
    std::vector<RatVec> out;
    out.reserve(vs.size());
    for (const auto& v : vs)
        out.push_back(to_rational(v));
    return out;
}

// (alpha * u - beta * w) made primitive.
IntVec combine(const Integer& alpha, const IntVec& u, const Integer& beta, const IntVec& w) {
    IntVec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = alpha * u[i] - beta * w[i];
    return primitive(std::span<const Integer>(out));
}

// Incremental double description: the cone { x : A x >= 0, E x = 0 } as
// cone(rays) + span(lineality). The pointed part is kept exact by the
// combinatorial adjacency test on zero sets.
Generators solve_constraints(std::size_t n, const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs) {
    Generators g;
    g.lineality = primitive_all(nullspace(rational_all(eqs), n));

    struct Ray {
        IntVec v;
        std::vector<bool> zero; // over processed inequalities
    };
    std::vector<Ray> rays;
    std::size_t processed = 0;

    for (const auto& a : ineqs) {
        if (is_zero(std::span<const Integer>(a)))
            continue;

        auto pivot = std::find_if(g.lineality.begin(), g.lineality.end(),
                                  [&](const IntVec& l) { return sgn(dot(a, l)) != 0; });
        if (pivot != g.lineality.end()) {
            IntVec l0 = *pivot;
            g.lineality.erase(pivot);
            Integer a_l0 = dot(a, l0);
            if (sgn(a_l0) < 0) {
                l0 = negated(l0);
                a_l0 = -a_l0;
            }
            for (auto& l : g.lineality) {
                Integer a_l = dot(a, l);
                if (sgn(a_l) != 0)
                    l = combine(a_l0, l, a_l, l0);
            }
            for (auto& r : rays) {
                Integer a_r = dot(a, r.v);
                if (sgn(a_r) != 0)
                    r.v = combine(a_l0, r.v, a_r, l0);
                r.zero.push_back(true);
            }
            Ray fresh{l0, std::vector<bool>(processed, true)};
            fresh.zero.push_back(false);
            rays.push_back(std::move(fresh));
            ++processed;
            continue;
        }

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].v);
            if (sgn(value[i]) > 0)
                pos.push_back(i);
            else if (sgn(value[i]) < 0)
                neg.push_back(i);
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sgn(value[i]) >= 0) {
                Ray r = rays[i];
                r.zero.push_back(sgn(value[i]) == 0);
                next.push_back(std::move(r));
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                std::vector<bool> common(processed);
                for (std::size_t k = 0; k < processed; ++k)
                    common[k] = rays[p].zero[k] && rays[q].zero[k];
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q)
                        continue;
                    bool covers = true;
                    for (std::size_t k = 0; k < processed && covers; ++k)
                        if (common[k] && !rays[r].zero[k])
                            covers = false;
                    if (covers)
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                Ray r{combine(value[p], rays[q].v, value[q], rays[p].v), common};
                r.zero.push_back(true);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
        ++processed;
    }

    for (auto& r : rays)
        g.rays.push_back(std::move(r.v));
    std::sort(g.rays.begin(), g.rays.end());
    g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
    return g;
}

// Canonical subspace basis plus directed vectors projected off that subspace.
void canonicalize(std::size_t n, std::vector<IntVec>& directed, std::vector<IntVec>& subspace) {
    auto basis = rational_all(subspace);
    subspace = canonical_basis(basis, n);
    auto canonical = rational_all(subspace);
    std::vector<IntVec> out;
    out.reserve(directed.size());
    for (const auto& v : directed) {
        auto projected = canonical.empty() ? to_rational(v) : project_out(to_rational(v), canonical);
        if (is_zero(std::span<const Rational>(projected)))
            continue;
        out.push_back(primitive(std::span<const Rational>(projected)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    directed = std::move(out);
    std::sort(subspace.begin(), subspace.end());
}

} // namespace

Cone::Cone(std::size_t n, std::vector<IntVec> rays, std::vector<IntVec> lineality, std::vector<IntVec> ineqs,
           std::vector<IntVec> eqs)
    : n_(n), rays_(std::move(rays)), lineality_(std::move(lineality)), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
    canonicalize(n_, rays_, lineality_);
    canonicalize(n_, ineqs_, eqs_);
    verify();
}

Cone Cone::from_generators(std::size_t n, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality) {
    check_dims(n, rays, "cone_from_generators");
    check_dims(n, lineality, "cone_from_generators");
    auto constraints = solve_constraints(n, rays, lineality);
    auto generators = solve_constraints(n, constraints.rays, constraints.lineality);
    return Cone(n, std::move(generators.rays), std::move(generators.lineality), std::move(constraints.rays),
                std::move(constraints.lineality));
}

Cone Cone::from_generators(std::size_t n, const std::vector<RatVec>& rays, const std::vector<RatVec>& lineality) {
    for (const auto& v : rays)
        if (v.size() != n)
            throw PreconditionError("cone_from_generators: dimension mismatch");
    for (const auto& v : lineality)
        if (v.size() != n)
            throw PreconditionError("cone_from_generators: dimension mismatch");
    return from_generators(n, primitive_all(rays), primitive_all(lineality));
}

Cone Cone::from_constraints(std::size_t n, const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs) {
    check_dims(n, ineqs, "cone_from_constraints");
    check_dims(n, eqs, "cone_from_constraints");
    auto generators = solve_constraints(n, ineqs, eqs);
    auto constraints = solve_constraints(n, generators.rays, generators.lineality);
    return Cone(n, std::move(generators.rays), std::move(generators.lineality), std::move(constraints.rays),
                std::move(constraints.lineality));
}

Cone Cone::from_constraints(std::size_t n, const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs) {
    for (const auto& v : ineqs)
        if (v.size() != n)
            throw PreconditionError("cone_from_constraints: dimension mismatch");
    for (const auto& v : eqs)
        if (v.size() != n)
            throw PreconditionError("cone_from_constraints: dimension mismatch");
    return from_constraints(n, primitive_all(ineqs), primitive_all(eqs));
}

Cone Cone::zero(std::size_t n) {
    return from_generators(n, std::vector<IntVec>{}, std::vector<IntVec>{});
}

Cone Cone::whole(std::size_t n) {
    return from_constraints(n, std::vector<IntVec>{}, std::vector<IntVec>{});
}

bool Cone::contains(std::span<const Integer> p) const {
    if (p.size() != n_)
        throw PreconditionError("contains_point: dimension mismatch");
    for (const auto& e : eqs_)
        if (sgn(dot(e, p)) != 0)
            return false;
    for (const auto& v : ineqs_)
        if (sgn(dot(v, p)) < 0)
            return false;
    return true;
}

bool Cone::contains(std::span<const Rational> p) const {
    if (p.size() != n_)
        throw PreconditionError("contains_point: dimension mismatch");
    for (const auto& e : eqs_)
        if (sgn(dot(std::span<const Integer>(e), p)) != 0)
            return false;
    for (const auto& v : ineqs_)
        if (sgn(dot(std::span<const Integer>(v), p)) < 0)
            return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    if (other.n_ != n_)
        throw PreconditionError("contains_cone: dimension mismatch");
    for (const auto& r : other.rays_)
        if (!contains(std::span<const Integer>(r)))
            return false;
    for (const auto& l : other.lineality_) {
        for (const auto& e : eqs_)
            if (sgn(dot(e, l)) != 0)
                return false;
        for (const auto& v : ineqs_)
            if (sgn(dot(v, l)) != 0)
                return false;
    }
    return true;
}

void Cone::verify() const {
    auto fail = [](const std::string& what) { throw InternalError("cone description mismatch: " + what); };
    for (const auto& r : rays_) {
        for (const auto& v : ineqs_)
            if (sgn(dot(v, r)) < 0)
                fail("ray " + to_string(r) + " violates inequality " + to_string(v));
        for (const auto& e : eqs_)
            if (sgn(dot(e, r)) != 0)
                fail("ray " + to_string(r) + " violates equation " + to_string(e));
    }
    for (const auto& l : lineality_) {
        for (const auto& v : ineqs_)
            if (sgn(dot(v, l)) != 0)
                fail("lineality " + to_string(l) + " not orthogonal to inequality " + to_string(v));
        for (const auto& e : eqs_)
            if (sgn(dot(e, l)) != 0)
                fail("lineality " + to_string(l) + " violates equation " + to_string(e));
    }
    if (lineality_.size() + eqs_.size() > n_)
        fail("lineality and equations overdetermine the space");
}

DimensionInfo dimension_info(const Cone& c) {
    return {c.dim(), c.lineality_dim(), c.strongly_convex()};
}

Cone dual_cone(const Cone& c) {
    return Cone(c.n_, c.ineqs_, c.eqs_, c.rays_, c.lineality_);
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw PreconditionError("intersect: dimension mismatch");
    std::vector<IntVec> ineqs = a.ineqs();
    ineqs.insert(ineqs.end(), b.ineqs().begin(), b.ineqs().end());
    std::vector<IntVec> eqs = a.eqs();
    eqs.insert(eqs.end(), b.eqs().begin(), b.eqs().end());
    return Cone::from_constraints(a.ambient_dim(), ineqs, eqs);
}

Cone conic_hull(std::span<const Cone> cones) {
    if (cones.empty())
        throw PreconditionError("conic_hull: empty list");
    const std::size_t n = cones.front().ambient_dim();
    std::vector<IntVec> rays, lineality;
    for (const auto& c : cones) {
        if (c.ambient_dim() != n)
            throw PreconditionError("conic_hull: dimension mismatch");
        rays.insert(rays.end(), c.rays().begin(), c.rays().end());
        lineality.insert(lineality.end(), c.lineality().begin(), c.lineality().end());
    }
    return Cone::from_generators(n, rays, lineality);
}

bool contains_cone(const Cone& a, const Cone& b) {
    return a.contains(b);
}

bool cones_equal(const Cone& a, const Cone& b) {
    return a.contains(b) && b.contains(a);
}

RatVec relative_interior_point(const Cone& c) {
    RatVec p(c.ambient_dim(), Rational(0));
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += r[i];
    return p;
}

const char* to_string(HitKind kind) {
    switch (kind) {
    case HitKind::empty:
        return "empty";
    case HitKind::point:
        return "point";
    case HitKind::subsegment:
        return "subsegment";
    case HitKind::full:
        return "full";
    }
    return "empty";
}

SegmentHit segment_intersection(const Cone& c, std::span<const Rational> p, std::span<const Rational> q) {
    const std::size_t n = c.ambient_dim();
    if (p.size() != n || q.size() != n)
        throw PreconditionError("segment_intersection: dimension mismatch");
    if (std::equal(p.begin(), p.end(), q.begin()))
        throw PreconditionError("segment_intersection: endpoints coincide");

    RatVec dir(n);
    for (std::size_t i = 0; i < n; ++i)
        dir[i] = q[i] - p[i];

    // Feasible parameters form [lo, hi]; constraint v.p + t v.dir >= 0.
    Rational lo = 0, hi = 1;
    auto restrict_ge = [&](const Rational& base, const Rational& slope) {
        if (sgn(slope) == 0) {
            if (sgn(base) < 0)
                return false;
            return true;
        }
        Rational root = -base / slope;
        if (sgn(slope) > 0)
            lo = std::max(lo, root);
        else
            hi = std::min(hi, root);
        return lo <= hi;
    };

    for (const auto& e : c.eqs()) {
        Rational base = dot(std::span<const Integer>(e), p);
        Rational slope = dot(std::span<const Integer>(e), std::span<const Rational>(dir));
        if (!restrict_ge(base, slope) || !restrict_ge(-base, -slope))
            return {};
    }
    for (const auto& v : c.ineqs()) {
        if (!restrict_ge(dot(std::span<const Integer>(v), p), dot(std::span<const Integer>(v), std::span<const Rational>(dir))))
            return {};
    }

    SegmentHit hit;
    hit.t_lo = lo;
    hit.t_hi = hi;
    if (lo == hi)
        hit.kind = HitKind::point;
    else if (sgn(lo) == 0 && hi == 1)
        hit.kind = HitKind::full;
    else
        hit.kind = HitKind::subsegment;
    return hit;
}

} // namespace wallchamber
