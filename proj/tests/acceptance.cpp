// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Everything is exact, so the only tolerances are the wall-clock limits below.

#include "wallchamber/chambers.hpp"
#include "wallchamber/cli.hpp"
#include "wallchamber/errors.hpp"
#include "wallchamber/slice.hpp"
#include "wallchamber/stability.hpp"

#include "cone_oracle.hpp"
#include "json.hpp"
#include "test_support.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

using namespace wallchamber;
using namespace wallchamber::testing;

namespace {

constexpr double kLimitA2Walls = 1.0;
constexpr double kLimitKronecker = 10.0;
constexpr double kLimitA3Recursion = 1.0;
constexpr double kLimitA3Chambers = 30.0;
constexpr double kLimitConeSuite = 60.0;

constexpr int kSameChamberPairs = 100;
constexpr int kScalingTrials = 1000;
constexpr int kConeCases = 500;
constexpr int kSegmentSamples = 50;

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body, double limit = 0) {
    Check c;
    auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0)
        c.require(secs < limit, "runtime over " + std::to_string(limit) + " s");
    std::ostringstream line;
    line << (c.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << std::fixed;
    line.precision(3);
    line << secs << " s)";
    if (!c.ok) {
        line << ": " << c.note;
        ++failures;
    }
    std::cout << line.str() << std::endl;
}

Cone gens(std::size_t n, std::vector<IntVec> rays, std::vector<IntVec> lin = {}) {
    return Cone::from_generators(n, rays, lin);
}

RatVec positive_combination(std::mt19937_64& gen, const std::vector<IntVec>& rays) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 5);
    RatVec p(rays[0].size(), Rational(0));
    for (const auto& r : rays) {
        Rational a = frac(num(gen), den(gen));
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += a * r[i];
    }
    return p;
}

bool in_hit(const SegmentHit& hit, const Rational& t) {
    switch (hit.kind) {
    case HitKind::empty:
        return false;
    case HitKind::full:
        return true;
    default:
        return hit.t_lo <= t && t <= hit.t_hi;
    }
}

void criterion_1(Check& c) {
    WallTable t(linear_a(2));
    c.require(cones_equal(t.wall({1, 0}), gens(2, {}, {int_vec({0, 1})})), "wall (1,0) is not R[P2]");
    c.require(cones_equal(t.wall({0, 1}), gens(2, {}, {int_vec({1, 0})})), "wall (0,1) is not R[P1]");
    c.require(cones_equal(t.wall({1, 1}), gens(2, {int_vec({1, -1})})), "wall (1,1) is not R>=0([P1]-[P2])");
}

void criterion_2(Check& c) {
    for (long m = 0; m <= 3; ++m) {
        WallTable t(kronecker(static_cast<std::size_t>(m)));
        auto walls = t.sweep(12);
        c.require(walls.size() == 90, "m=" + std::to_string(m) + ": expected 90 dimension vectors");
        for (const auto& [d, w] : walls)
            c.require(cones_equal(w, kronecker_wall_oracle(m, d)),
                      "m=" + std::to_string(m) + " d=" + to_string(d) + " disagrees with the closed form");
    }
}

void criterion_3(Check& c) {
    WallTable t(linear_a(3));
    c.require(cones_equal(t.wall({1, 1, 0}), gens(3, {int_vec({1, -1, 0})}, {int_vec({0, 0, 1})})),
              "wall (1,1,0)");
    c.require(cones_equal(t.wall({0, 1, 1}), gens(3, {int_vec({0, 1, -1})}, {int_vec({1, 0, 0})})),
              "wall (0,1,1)");
    c.require(t.wall({1, 1, 1}).rays() == std::vector<IntVec>{int_vec({0, 1, -1}), int_vec({1, -1, 0})} &&
                  t.wall({1, 1, 1}).lineality().empty(),
              "wall (1,1,1)");
}

void criterion_4(Check& c) {
    WallTable a2(linear_a(2));
    auto r11 = a2.classify_schur({1, 1});
    c.require(r11.is_schur && r11.label.kind == RootKind::real, "A2 (1,1) is not a real Schur root");
    auto r22 = a2.classify_schur({2, 2});
    c.require(!r22.is_schur && r22.is_multiple_of_schur, "A2 (2,2) is not multiple-of-Schur only");
    WallTable k3(kronecker(3));
    auto r23 = k3.classify_schur({2, 3});
    c.require(r23.is_schur && r23.label.kind == RootKind::imaginary_nonisotropic,
              "3-Kronecker (2,3) is not an imaginary Schur root");
    WallTable k2(kronecker(2));
    auto r = k2.classify_schur({1, 1});
    c.require(r.is_schur && r.label.kind == RootKind::isotropic, "2-Kronecker (1,1) is not an isotropic Schur root");
    c.require(r11.wall_dim == 1 && r22.wall_dim == 1 && r23.wall_dim == 1 && r.wall_dim == 1,
              "unexpected wall dimensions");
}

void chamber_case(Check& c, const Quiver& q, std::size_t expected, const std::string& name) {
    WallTable t(q);
    auto chambers = enumerate_chambers(t);
    c.require(chambers.size() == expected, name + ": got " + std::to_string(chambers.size()) + " chambers");
    for (const auto& ch : chambers)
        c.require(ch.g_matrix.size() == q.vertex_count() && ch.cone.strongly_convex(), name + ": non-simplicial");
    c.require(check_unimodular(chambers).pass, name + ": |det| != 1");
    c.require(check_fan_coverage(chambers).pass, name + ": fan coverage fails");
}

void criterion_5(Check& c) {
    chamber_case(c, fixture("a1"), 2, "A1");
    chamber_case(c, linear_a(2), 5, "A2");
    chamber_case(c, fixture("a1xa1"), 4, "A1xA1");
    chamber_case(c, linear_a(3), 14, "A3");
}

void criterion_6(Check& c) {
    WallTable a2(linear_a(2));
    auto v = tf_equivalent_bounded(a2, weight({2, -1}), weight({1, -2}), 2);
    c.require(v.kind == TfKind::not_equivalent && v.witness && v.witness->d == DimVector{1, 1},
              "A2 (2,-1)/(1,-2) lacks witness (1,1)");

    std::mt19937_64 gen(6);
    for (const auto& q : {linear_a(2), linear_a(3)}) {
        WallTable t(q);
        auto chambers = enumerate_chambers(t);
        const long bound = q.highest_root_degree();
        for (int i = 0; i < kSameChamberPairs; ++i) {
            const auto& ch = chambers[static_cast<std::size_t>(i) % chambers.size()];
            auto a = positive_combination(gen, ch.g_matrix);
            auto b = positive_combination(gen, ch.g_matrix);
            if (a == b)
                continue;
            c.require(tf_equivalent_bounded(t, Weight{a}, Weight{b}, bound).kind == TfKind::equivalent_exact,
                      "same-chamber pair not equivalent_exact");
        }
    }

    std::vector<Quiver> fixtures{linear_a(2), linear_a(3), fixture("wild123"), kronecker(3), fixture("d4")};
    std::vector<std::unique_ptr<WallTable>> tables;
    for (const auto& q : fixtures)
        tables.push_back(std::make_unique<WallTable>(q));
    std::uniform_int_distribution<long> num(-7, 7), den(1, 5), scale(1, 12);
    for (int i = 0; i < kScalingTrials; ++i) {
        auto& t = *tables[static_cast<std::size_t>(i) % tables.size()];
        RatVec a(t.quiver().vertex_count());
        for (auto& x : a)
            x = frac(num(gen), den(gen));
        if (is_zero(std::span<const Rational>(a)))
            a[0] = 1;
        Rational k = frac(scale(gen), scale(gen));
        if (k == 1)
            k = 2;
        RatVec b = a;
        for (auto& x : b)
            x *= k;
        c.require(tf_equivalent_bounded(t, Weight{a}, Weight{b}, 4).kind != TfKind::not_equivalent,
                  "scaling pair reported not_equivalent");
    }
}

void criterion_7(Check& c) {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < kConeCases; ++i) {
        auto ra = random_cone(gen, 4, 6);
        auto a = build(ra);
        const auto n = ra.n;
        RandomCone rb = random_cone(gen, 4, 6);
        while (rb.n != n)
            rb = random_cone(gen, 4, 6);
        auto b = build(rb);

        a.verify();
        c.require(cones_equal(dual_cone(dual_cone(a)), a), "dual of dual differs");
        c.require(cones_equal(Cone::from_constraints(n, a.ineqs(), a.eqs()), a), "constraints do not round-trip");
        c.require(cones_equal(Cone::from_generators(n, a.rays(), a.lineality()), a), "generators do not round-trip");

        auto meet = intersect(a, b);
        c.require(contains_cone(a, meet) && contains_cone(b, meet), "intersection escapes an operand");
        std::vector<Cone> pair{a, b};
        auto hull = conic_hull(pair);
        c.require(contains_cone(hull, a) && contains_cone(hull, b), "hull misses an operand");
        c.require(contains_cone(a, b) == contains_cone(dual_cone(b), dual_cone(a)), "containment not reversed by duality");
        c.require(a.contains(std::span<const Rational>(random_member(gen, a))), "generator combination not a member");

        RatVec p = coin(gen) ? random_member(gen, a) : random_point(gen, n);
        RatVec q = random_point(gen, n);
        if (p == q)
            continue;
        auto hit = segment_intersection(a, p, q);
        for (int k = 0; k < kSegmentSamples; ++k) {
            Rational t = frac(k, kSegmentSamples - 1);
            RatVec x(n);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = (1 - t) * p[j] + t * q[j];
            c.require(a.contains(std::span<const Rational>(x)) == in_hit(hit, t), "segment hit disagrees with sampling");
        }
    }
}

void criterion_8(Check& c) {
    auto dir = std::filesystem::temp_directory_path() / "wallchamber_acceptance";
    std::filesystem::create_directories(dir);
    auto svg_path = dir / "wild123.svg";
    std::ostringstream out, err;
    int code = run({"slice", "-q", std::string(WALLCHAMBER_FIXTURES) + "/wild123.quiver", "--bound", "8", "-o",
                    svg_path.string()},
                   out, err);
    c.require(code == 0, "slice exited with " + std::to_string(code) + ": " + err.str());

    std::ifstream svg_in(svg_path);
    std::stringstream svg;
    svg << svg_in.rdbuf();
    std::set<std::string> drawn;
    std::regex attr("data-d=\"([0-9,]+)\"");
    const std::string text = svg.str();
    for (std::sregex_iterator it(text.begin(), text.end(), attr), end; it != end; ++it)
        drawn.insert((*it)[1]);
    for (const char* d : {"1,0,0", "0,1,0", "0,0,1", "1,1,0", "0,1,1", "1,1,1"})
        c.require(drawn.count(d) == 1, std::string("wall ") + d + " missing from the SVG");
    c.require(text.find("&lt;= 8") != std::string::npos, "bound missing from the SVG title");

    std::ifstream json_in(dir / "wild123.json");
    auto sidecar = nlohmann::ordered_json::parse(json_in);
    WallTable t(fixture("wild123"));
    c.require(check_slice_sidecar(t, sidecar) == 0, "sidecar vertex off its wall");
    c.require(sidecar["walls"].size() == drawn.size(), "sidecar and SVG list different walls");
    std::filesystem::remove_all(dir);
}

} // namespace

int main() {
    report(1, "A2 walls for (1,0), (0,1), (1,1)", criterion_1, kLimitA2Walls);
    report(2, "Kronecker m=0..3 sweep to degree 12 equals the closed form", criterion_2, kLimitKronecker);
    report(3, "A3 walls through the recursion", criterion_3, kLimitA3Recursion);
    report(4, "Schur classification", criterion_4);
    report(5, "chamber counts, unimodularity, fan coverage", criterion_5, kLimitA3Chambers);
    report(6, "TF equivalence: witness, same-chamber pairs, positive scaling", criterion_6);
    report(7, "cone kernel property suite", criterion_7, kLimitConeSuite);
    report(8, "wild quiver slice at degree 8 with sidecar round trip", criterion_8);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
