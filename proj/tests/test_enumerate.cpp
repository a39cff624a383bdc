#include <doctest.h>

#include "oracle.hpp"
#include "ovalis/enumerate.hpp"

using namespace ovalis;

namespace {

EnumSpec dp2(int k, int d, std::optional<int> l, bool obstruct) {
    EnumSpec s;
    s.k = k;
    s.d = d;
    s.l = l;
    s.apply_obstructions = obstruct;
    return s;
}

std::set<std::string> codes(const std::vector<Entry>& es) {
    std::set<std::string> out;
    for (const auto& e : es) out.insert(canonical_code(e.scheme));
    return out;
}

}  // namespace

TEST_CASE("enumerate: small cases") {
    CHECK(gen_sphere_arrangements(0).size() == 1);
    CHECK(gen_sphere_arrangements(3).size() == 2);
    CHECK(gen_dp2_schemes(dp2(1, 3, 8, false)).size() == 47);
    auto one = gen_dp2_schemes(dp2(4, 1, 1, false));
    REQUIRE(one.size() == 1);
    CHECK(canonical_code(one[0].scheme) == canonical_code(parse_scheme("1:0:0:0")));
}

TEST_CASE("enumerate: rooted trees") {
    // rooted trees on m vertices: 1,1,2,4,9,20,48
    const std::vector<size_t> want{0, 1, 1, 2, 4, 9, 20, 48};
    for (int m = 1; m <= 7; ++m) {
        CHECK(gen_rooted_trees(m).size() == want[m]);
        CHECK(oracle::rooted_trees(m).size() == want[m]);
    }
}

TEST_CASE("enumerate: cap") {
    CHECK_THROWS(gen_sphere_arrangements(13));
    CHECK_NOTHROW(gen_sphere_arrangements(3, 3));
    CHECK_THROWS(gen_sphere_arrangements(4, 3));
}

TEST_CASE("enumerate: invalid k or d") {
    CHECK_THROWS_AS(gen_dp2_schemes(dp2(5, 3, 8, false)), EnumError);
    CHECK_THROWS_AS(gen_dp2_schemes(dp2(0, 3, 8, false)), EnumError);
    EnumSpec r;
    r.surface = Surface::DP1;
    r.k = 3;
    r.d = 2;
    r.refined = true;
    CHECK_THROWS_AS(gen_dp1_refined(r), EnumError);
}

TEST_CASE("enumerate: DP2 counts match the multiset generating function") {
    std::vector<long> trees;
    for (int n = 0; n <= 8; ++n) trees.push_back(static_cast<long>(oracle::unrooted_trees(n).size()));
    for (int k = 1; k <= 4; ++k)
        for (int l = 0; l <= 8; ++l) {
            auto es = gen_dp2_schemes(dp2(k, 3, l, false));
            CAPTURE(k);
            CAPTURE(l);
            CHECK(static_cast<long>(es.size()) == oracle::multiset_count(trees, k, l));
            CHECK(codes(es).size() == es.size());
            for (const auto& e : es) {
                CHECK(e.scheme.k() == k);
                CHECK(component_stats(e.scheme).l == l);
            }
        }
}

TEST_CASE("enumerate: output sorted by code") {
    auto es = gen_dp2_schemes(dp2(3, 3, 6, false));
    for (size_t i = 1; i < es.size(); ++i) CHECK(canonical_code(es[i - 1].scheme) < canonical_code(es[i].scheme));
}

TEST_CASE("enumerate: without --ovals every l up to the bound") {
    auto all = gen_dp2_schemes(dp2(2, 2, std::nullopt, false));
    size_t sum = 0;
    for (int l = 0; l <= dp2_max_ovals(2); ++l) sum += gen_dp2_schemes(dp2(2, 2, l, false)).size();
    CHECK(all.size() == sum);
}

TEST_CASE("enumerate: admissible filter equals the verdict") {
    for (int k = 1; k <= 4; ++k) {
        auto all = gen_dp2_schemes(dp2(k, 3, 7, false));
        auto kept = gen_dp2_schemes(dp2(k, 3, 7, true));
        size_t want = 0;
        for (const auto& e : all) want += !dp2_verdict(e.scheme, k, 3).prohibited();
        CHECK(kept.size() == want);
    }
}

TEST_CASE("enumerate: DP1 class 1 with four spheres") {
    EnumSpec s;
    s.surface = Surface::DP1;
    s.k = 4;
    s.d = 1;
    s.apply_obstructions = true;
    auto es = gen_dp1_schemes(s);
    CHECK(es.size() == 3);
    std::set<std::string> got;
    for (const auto& e : es) {
        CHECK(e.scheme.pseudo_lines == 1);
        got.insert(canonical_code(e.scheme));
    }
    CHECK(got.count(canonical_code(parse_scheme("J|0:0:0:0"))));
    CHECK(got.count(canonical_code(parse_scheme("J+1|0:0:0:0"))));
    CHECK(got.count(canonical_code(parse_scheme("J|1:0:0:0"))));
}

TEST_CASE("enumerate: DP1 class 2 excludes the pseudo-line") {
    EnumSpec s;
    s.surface = Surface::DP1;
    s.k = 4;
    s.d = 2;
    s.apply_obstructions = true;
    for (const auto& e : gen_dp1_schemes(s)) CHECK(e.scheme.pseudo_lines == 0);
}

TEST_CASE("enumerate: refined outputs distinguish the sphere pairs") {
    EnumSpec s;
    s.surface = Surface::DP1;
    s.k = 4;
    s.d = 2;
    s.refined = true;
    s.apply_obstructions = true;
    std::set<std::string> got;
    for (const auto& e : gen_dp1_refined(s)) got.insert(canonical_code(e.scheme));
    CHECK(got.count(canonical_code(parse_refined("0|1:0:0:0"))));
    CHECK(got.count(canonical_code(parse_refined("0|0:0:1:0"))));
    CHECK(got.count(canonical_code(parse_refined("0|<<1>>:0:0:0"))));
}

TEST_CASE("enumerate: forgetting the refinement is onto") {
    for (int d = 1; d <= 3; ++d) {
        EnumSpec s;
        s.surface = Surface::DP1;
        s.k = 4;
        s.d = d;
        s.apply_obstructions = true;
        auto plain = gen_dp1_schemes(s);
        s.refined = true;
        auto refined = gen_dp1_refined(s);
        std::set<std::string> image, want;
        for (const auto& r : refined) image.insert(canonical_code(forget(r.scheme)));
        for (const auto& p : plain) want.insert(canonical_code(p.scheme));
        CAPTURE(d);
        CHECK(image == want);
        CHECK(refined.size() >= plain.size());
    }
}
