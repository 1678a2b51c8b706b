#include "wallchamber/errors.hpp"
#include "wallchamber/json_io.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace wallchamber;
using namespace wallchamber::testing;

TEST_CASE("cone json") {
    WallTable a3(linear_a(3));
    auto j = to_json(a3.wall({1, 1, 0}));
    CHECK(j.dump() == R"({"rays":[[1,-1,0]],"lineality":[[0,0,1]],"ineqs":[[1,-1,0]],"eqs":[[1,1,0]],)"
                      R"("dim":2,"lineality_dim":1})");
    IntVec huge{Integer("123456789012345678901234567890")};
    CHECK_THROWS_AS(to_json(std::span<const Integer>(huge)), InternalError);
}

TEST_CASE("schur and tf json") {
    WallTable k3(kronecker(3));
    auto s = to_json(k3.classify_schur({2, 3}));
    CHECK(s["root_kind"] == "imaginary-nonisotropic");
    CHECK(s["euler_self"] == -5);
    CHECK(s["is_schur"] == true);

    WallTable a2(linear_a(2));
    auto tf = to_json(tf_equivalent_bounded(a2, weight({2, -1}), weight({1, -2}), 2));
    CHECK(tf.dump() == R"({"verdict":"not_equivalent","bound":2,"witness":{"d":[1,1],)"
                       R"("hit":{"kind":"point","t_lo":"1/2","t_hi":"1/2"}}})");
    auto eq = to_json(tf_equivalent_bounded(a2, weight({1, 1}), weight({2, 1}), 2));
    CHECK(eq["verdict"] == "equivalent_exact");
    CHECK(eq["witness"].is_null());
}

TEST_CASE("chamber report json") {
    WallTable a2(linear_a(2));
    auto j = chamber_report_json(enumerate_chambers(a2));
    CHECK(j["chambers"].size() == 5);
    CHECK(j["summary"]["chambers"] == 5);
    CHECK(j["summary"]["facets_shared"] == 5);
    CHECK(j["summary"]["coverage"] == "pass");
    for (const auto& c : j["chambers"])
        CHECK((c["det"] == 1 || c["det"] == -1));
    CHECK(dump(j).back() == '\n');
}
