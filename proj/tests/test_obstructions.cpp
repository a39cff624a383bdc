#include <doctest.h>

#include <map>
#include <set>

#include "ovalis/enumerate.hpp"
#include "ovalis/obstructions.hpp"

using namespace ovalis;

namespace {

Scheme S(const std::string& t) { return parse_scheme(t); }

int sum(const nlohmann::json& a) {
    int s = 0;
    for (const auto& x : a) s += x.get<int>();
    return s;
}

bool replays(const Scheme& s, int d, const Verdict& v, Disjointness mode) {
    const auto& w = v.witness;
    if (v.obstruction == "harnack") return w["l"].get<int>() > w["bound"].get<int>();
    if (v.obstruction == "welschinger") {
        int t = component_stats(s).t;
        int sp = w["s"];
        if (w["t"].get<int>() != t) return false;
        int i = w["spheres"][0];
        RegionTree ti = RegionTree::from_forest(s.spheres[i]);
        std::vector<Nest> n1;
        for (const auto& p : w["paths_1"]) n1.push_back({p.get<std::vector<int>>()});
        if (!selection_ok(ti, n1, mode)) return false;
        if (static_cast<int>(n1.size()) != w["r1"].get<int>()) return false;
        int value = sum(w["depths_1"]);
        if (w["case"] == 1) {
            int j = w["spheres"][1];
            if (i == j) return false;
            RegionTree tj = RegionTree::from_forest(s.spheres[j]);
            std::vector<Nest> n2;
            for (const auto& p : w["paths_2"]) n2.push_back({p.get<std::vector<int>>()});
            if (!selection_ok(tj, n2, mode)) return false;
            if (static_cast<int>(n1.size() + n2.size()) != 2 * sp || n2.size() < 2 || n1.size() % 2 == 0) return false;
            value += sum(w["depths_2"]);
            return value == w["value"] && value > d * sp - (t - 2) && w["bound"] == d * sp - (t - 2);
        }
        return static_cast<int>(n1.size()) == 2 * sp - 1 && value == w["value"] && value > d * sp - (t - 1);
    }
    if (v.obstruction == "two_nests") {
        int t = component_stats(s).t;
        return sum(w["depths"]) > 2 * d - (t - 2);
    }
    if (v.obstruction == "quadruple") return canonical_code(s) == canonical_code(S("<1>+<1>+<1>+<1>:0:0:0"));
    if (v.obstruction == "one_sphere") return sum(w["depths"]) > 2 * d;
    return false;
}

}  // namespace

TEST_CASE("harnack") {
    CHECK(dp2_harnack(S("8:0:0:0"), 3).status == Status::Admissible);
    CHECK(dp2_harnack(S("9:0:0:0"), 3).prohibited());
    CHECK(dp2_harnack(S("0"), 1).status == Status::Admissible);
}

TEST_CASE("welschinger nests") {
    auto v = dp2_welschinger_nests(S("<1>+<1>+<1>:2:0:0"), 3);
    REQUIRE(v.prohibited());
    CHECK(v.witness["value"] == 6);
    CHECK(v.witness["bound"] == 5);
    CHECK(dp2_welschinger_nests(S("3+<1>+<1>:1:0:0"), 3).status == Status::Admissible);
    CHECK(dp2_welschinger_nests(S("<<1>>+<1>+<1>:<1>+<1>+<1>:0:0"), 4).prohibited());
}

TEST_CASE("two nests with four spheres") {
    auto v = dp2_two_nests_k4(S("<<<1>>>:<<<1>>>:0:0"), 3);
    REQUIRE(v.prohibited());
    CHECK(v.witness["value"] == 8);
    CHECK(v.witness["bound"] == 6);
    CHECK(dp2_two_nests_k4(S("<<<1>>>:4:0:0"), 3).status == Status::Admissible);
    CHECK(dp2_two_nests_k4(S("1:1:0:0"), 3).status == Status::Admissible);
}

TEST_CASE("forbidden quadruple") {
    CHECK(dp2_forbidden_quadruple(S("<1>+<1>+<1>+<1>:0:0:0"), 3).prohibited());
    CHECK_FALSE(dp2_forbidden_quadruple(S("<1>+<1>+<1>+1+1:0:0:0"), 3).prohibited());
    CHECK(dp2_forbidden_quadruple(S("<1>+<1>+<1>+<1>:0:0:0"), 4).status == Status::NotApplicable);
}

TEST_CASE("one sphere nests") {
    CHECK(dp2_one_sphere_nests(S("<<1>>+<<1>>+<1>"), 3).prohibited());
    CHECK(dp2_one_sphere_nests(S("8"), 3).status == Status::Admissible);
    CHECK(dp2_one_sphere_nests(S("<1>+<1>+<1>+<1>"), 3).status == Status::Admissible);
}

TEST_CASE("petrovsky on maximal one-sphere schemes") {
    auto max_scheme = [](int l) { return S(std::to_string(l) + ":0:0:0"); };
    auto v = dp2_petrovsky(max_scheme(58), 8);
    REQUIRE(v.prohibited());
    CHECK(2 * 58 > 16 + 88);
    CHECK(v.witness["upper"] == 16 + 88);
    CHECK(dp2_verdict(max_scheme(58), 4, 8).obstruction == "petrovsky");
    CHECK_FALSE(dp2_petrovsky(max_scheme(32), 6).prohibited());
    CHECK_FALSE(dp2_verdict(max_scheme(32), 4, 6).prohibited());
    CHECK(dp2_petrovsky(max_scheme(8), 3).status == Status::NotApplicable);
    CHECK(dp2_petrovsky(S("56+<1>:0:0:0"), 8).status == Status::NotApplicable);
}

TEST_CASE("dp2 verdict examples") {
    CHECK_FALSE(dp2_verdict(S("2:2:2:2"), 4, 3).prohibited());
    CHECK(dp2_verdict(S("<1>+<1>+<1>+<1>:0:0:0"), 4, 3).prohibited());
    CHECK(dp2_verdict(S("<1>+<1>+<1>+<1>:0:0:0"), 4, 3).obstruction == "quadruple");
}

TEST_CASE("dp2 verdict: counts at l=8, d=3") {
    // exact counts under the default knobs; k=3 and k=2 reproduce 81 and 63
    const std::map<int, size_t> want{{4, 74}, {3, 81}, {2, 63}, {1, 28}};
    for (auto [k, n] : want) {
        EnumSpec s;
        s.k = k;
        s.d = 3;
        s.l = 8;
        s.apply_obstructions = true;
        CHECK(gen_dp2_schemes(s).size() == n);
    }
}

TEST_CASE("dp2 verdict: witnesses replay") {
    for (int k = 1; k <= 4; ++k)
        for (int l = 6; l <= 8; ++l) {
            EnumSpec s;
            s.k = k;
            s.d = 3;
            s.l = l;
            for (const auto& e : gen_dp2_schemes(s)) {
                if (!e.verdict.prohibited()) continue;
                CAPTURE(print_canonical(e.scheme));
                CAPTURE(e.verdict.witness.dump());
                CHECK(replays(e.scheme, 3, e.verdict, Disjointness::PerNestDisk));
            }
        }
}

TEST_CASE("dp2 verdict: k=4 only adds prohibitions") {
    EnumSpec s;
    s.k = 4;
    s.d = 3;
    s.l = 8;
    for (const auto& e : gen_dp2_schemes(s)) {
        if (e.verdict.prohibited()) continue;
        CHECK_FALSE(dp2_harnack(e.scheme, 3).prohibited());
        CHECK_FALSE(dp2_welschinger_nests(e.scheme, 3).prohibited());
    }
}

TEST_CASE("dp2 verdict: the k=4 set from k=3 plus four-sphere schemes") {
    EnumSpec s;
    s.d = 3;
    s.l = 8;
    s.apply_obstructions = true;
    s.k = 4;
    std::set<std::string> direct;
    for (const auto& e : gen_dp2_schemes(s)) direct.insert(canonical_code(e.scheme));
    s.k = 3;
    std::set<std::string> built;
    for (const auto& e : gen_dp2_schemes(s)) {
        Scheme p = padded(e.scheme, 4);
        if (dp2_two_nests_k4(p, 3).prohibited() || dp2_forbidden_quadruple(p, 3).prohibited()) continue;
        built.insert(canonical_code(p));
    }
    s.k = 4;
    s.apply_obstructions = false;
    for (const auto& e : gen_dp2_schemes(s))
        if (component_stats(e.scheme).t == 4 && !dp2_verdict(e.scheme, 4, 3).prohibited())
            built.insert(canonical_code(e.scheme));
    CHECK(direct == built);
}

TEST_CASE("monotonicity: more ovals never lift a harnack prohibition") {
    for (int d = 1; d <= 4; ++d)
        for (int l = 0; l <= dp2_max_ovals(d) + 2; ++l) {
            bool p = dp2_harnack(S(std::to_string(l) + ":0"), d).prohibited();
            bool q = dp2_harnack(S(std::to_string(l + 1) + ":0"), d).prohibited();
            CHECK((!p || q));
            bool a = dp1_bounds(S("0|" + std::to_string(l)), d).prohibited() && l > d % 2;
            bool b = dp1_bounds(S("0|" + std::to_string(l + 1)), d).prohibited();
            CHECK((!a || b));
        }
}

TEST_CASE("monotonicity: adding an oval next to a nest keeps a nest prohibition") {
    EnumSpec s;
    s.k = 2;
    s.d = 3;
    s.l = 7;
    for (const auto& e : gen_dp2_schemes(s)) {
        if (!dp2_welschinger_nests(e.scheme, 3).prohibited()) continue;
        for (int i = 0; i < 2; ++i) {
            if (e.scheme.spheres[i].empty()) continue;
            // attach a leaf at every region of sphere i
            RegionTree t = RegionTree::from_forest(e.scheme.spheres[i]);
            for (int v = 0; v < t.vertex_count(); ++v) {
                Forest f = t.rooted_at(v);
                f.push_back(Oval{});
                Scheme g = e.scheme;
                g.spheres[i] = f;
                CHECK(dp2_welschinger_nests(g, 3).prohibited());
            }
        }
    }
}

TEST_CASE("one sphere knob: dropping disjointness only adds prohibitions") {
    Knobs loose;
    loose.one_sphere_disjoint = false;
    EnumSpec s;
    s.k = 1;
    s.d = 3;
    s.l = 8;
    size_t strict_n = 0, loose_n = 0;
    for (const auto& e : gen_dp2_schemes(s)) {
        bool a = dp2_one_sphere_nests(e.scheme, 3).prohibited();
        bool b = dp2_one_sphere_nests(e.scheme, 3, loose).prohibited();
        CHECK((!a || b));
        strict_n += a;
        loose_n += b;
    }
    CHECK(loose_n >= strict_n);
}

TEST_CASE("dp1 parity") {
    CHECK(dp1_parity(S("J|0:0:0:0"), 3).status == Status::Admissible);
    CHECK(dp1_parity(S("1|1:0:0:0"), 3).prohibited());
    CHECK(dp1_parity(S("J+1|0:0:0:0"), 2).prohibited());
    CHECK(dp1_verdict(S("J|0:0:0:0"), 4, 2).obstruction == "parity");
    CHECK(dp1_verdict(S("0|1:0:0:0"), 4, 3).obstruction == "parity");
    for (int k = 1; k <= 4; ++k) {
        CHECK(dp1_verdict(S("J|0"), k, 2).prohibited());
        CHECK(dp1_verdict(S("1|0"), k, 3).prohibited());
    }
}

TEST_CASE("dp1 bounds") {
    CHECK_FALSE(dp1_bounds(S("J+4|0:0:0:0"), 3).prohibited());
    CHECK(dp1_bounds(S("J+5|0:0:0:0"), 3).prohibited());
    CHECK_FALSE(dp1_bounds(S("0|0:0:0:0"), 2).prohibited());
    CHECK(dp1_bounds(S("0|0:0:0:0"), 1).prohibited());
}

TEST_CASE("dp1 nest obstruction") {
    CHECK(dp1_nest_obstruction(S("<1>+<1>|1:1:1:0"), 4).obstruction == "dp1_nests_1");
    CHECK(dp1_nest_obstruction(S("1+<<1>>|<1>:1:1:0"), 4).prohibited());
    auto v = dp1_nest_obstruction(S("1+<<1>>|<1>:1:0:0"), 4);
    CHECK(v.status == Status::Admissible);
    CHECK(dp1_nest_obstruction(S("1+<<1>>|0:0:0:0"), 4).status == Status::NotApplicable);
}

TEST_CASE("refined verdict follows the plain one") {
    CHECK_FALSE(refined_verdict(parse_refined("0|<<1>>:0:0:0"), 2).prohibited());
    CHECK(refined_verdict(parse_refined("J|0:0:0:0"), 2).prohibited());
}
