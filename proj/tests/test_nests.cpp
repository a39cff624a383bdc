#include <doctest.h>

#include <queue>

#include "oracle.hpp"
#include "ovalis/enumerate.hpp"
#include "ovalis/nests.hpp"
#include "ovalis/scheme.hpp"

using namespace ovalis;

namespace {

std::vector<std::vector<int>> all_distances(const RegionTree& t) {
    int n = t.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : t.neighbors(v))
                if (dist[s][w] < 0) dist[s][w] = dist[s][v] + 1, q.push(w);
        }
    }
    return dist;
}

// a nest is the path between two distinct regions
using Ends = std::pair<int, int>;

std::vector<int> path_vertices(const std::vector<std::vector<int>>& dist, Ends e) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[e.first][v] + dist[v][e.second] == dist[e.first][e.second]) out.push_back(v);
    return out;
}

// projection of w onto a path: the path vertex closest to w
int project(const std::vector<std::vector<int>>& dist, const std::vector<int>& path, int w) {
    int best = path[0];
    for (int v : path)
        if (dist[w][v] < dist[w][best]) best = v;
    return best;
}

bool inside_end(const std::vector<std::vector<int>>& dist, Ends n, int end, const std::vector<int>& other) {
    auto p = path_vertices(dist, n);
    for (int w : other)
        if (project(dist, p, w) != end) return false;
    return true;
}

bool oracle_ok(const std::vector<std::vector<int>>& dist, const std::vector<Ends>& sel, Disjointness mode) {
    if (mode == Disjointness::EdgeDisjoint) {
        std::set<std::pair<int, int>> used;
        for (auto e : sel) {
            auto p = path_vertices(dist, e);
            for (int a : p)
                for (int b : p)
                    if (a < b && dist[a][b] == 1 && !used.insert({a, b}).second) return false;
        }
        return true;
    }
    for (size_t i = 0; i < sel.size(); ++i) {
        bool one_end_all[2] = {true, true};
        for (size_t j = 0; j < sel.size(); ++j) {
            if (i == j) continue;
            auto q = path_vertices(dist, sel[j]);
            bool a = inside_end(dist, sel[i], sel[i].first, q), b = inside_end(dist, sel[i], sel[i].second, q);
            one_end_all[0] &= a;
            one_end_all[1] &= b;
            if (mode == Disjointness::PerNestDisk && !a && !b) return false;
        }
        if (mode == Disjointness::EndDisk && !one_end_all[0] && !one_end_all[1]) return false;
    }
    return true;
}

std::set<std::vector<Ends>> brute_selections(const RegionTree& t, int r, Disjointness mode) {
    auto dist = all_distances(t);
    std::vector<Ends> all;
    for (int a = 0; a < t.vertex_count(); ++a)
        for (int b = a + 1; b < t.vertex_count(); ++b) all.push_back({a, b});
    std::set<std::vector<Ends>> out;
    std::vector<Ends> cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(cur.size()) == r) {
            if (oracle_ok(dist, cur, mode)) out.insert(cur);
            return;
        }
        for (size_t i = from; i < all.size(); ++i) {
            cur.push_back(all[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Ends> as_ends(const std::vector<Nest>& sel) {
    std::vector<Ends> out;
    for (const auto& n : sel) out.push_back(std::minmax(n.path.front(), n.path.back()));
    std::sort(out.begin(), out.end());
    return out;
}

RegionTree tree_of(const std::string& sphere) { return RegionTree::from_forest(parse_forest(sphere)); }

std::multiset<int> depths(const std::vector<Nest>& ns) {
    std::multiset<int> d;
    for (const auto& n : ns) d.insert(n.depth());
    return d;
}

}  // namespace

TEST_CASE("nests: small examples") {
    auto chain = sphere_nests(tree_of("<<1>>"));
    int deepest = 0;
    for (const auto& n : chain) deepest = std::max(deepest, n.depth());
    CHECK(deepest == 3);

    auto one = sphere_nests(tree_of("1"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].depth() == 1);

    // on the sphere the two depth-2 nests join into one chain of four circles
    auto two = sphere_nests(tree_of("<1>+<1>"));
    int depth2 = 0, longest = 0;
    for (const auto& n : two) {
        depth2 += n.depth() == 2;
        longest = std::max(longest, n.depth());
    }
    CHECK(longest == 4);
    CHECK(depth2 >= 2);
    CHECK(sphere_code(parse_forest("<1>+<1>")) == sphere_code(parse_forest("<<<1>>>")));
}

TEST_CASE("nests: one per pair of regions") {
    for (int l = 1; l <= 7; ++l)
        for (const auto& f : gen_sphere_arrangements(l)) {
            RegionTree t = RegionTree::from_forest(f);
            auto ns = sphere_nests(t);
            CHECK(ns.size() == static_cast<size_t>(t.vertex_count() * (t.vertex_count() - 1) / 2));
            std::set<Ends> ends;
            for (const auto& n : ns) ends.insert(std::minmax(n.path.front(), n.path.back()));
            CHECK(ends.size() == ns.size());
        }
}

TEST_CASE("nests: four nests of depth two") {
    RegionTree t = tree_of("<1>+<1>+<1>+<1>");
    auto sels = disjoint_nest_selections(t, 4, Disjointness::PerNestDisk);
    int best = 0;
    for (const auto& s : sels) best = std::max(best, s.total);
    CHECK(best == 8);
    int at_best = 0;
    for (const auto& s : sels)
        if (s.total == best) {
            ++at_best;
            CHECK(s.maximal);
            CHECK(depths(s.nests) == std::multiset<int>{2, 2, 2, 2});
        }
    CHECK(at_best == 1);
}

TEST_CASE("nests: r=1 gives every nest") {
    for (const auto& f : gen_sphere_arrangements(5)) {
        RegionTree t = RegionTree::from_forest(f);
        CHECK(disjoint_nest_selections(t, 1, Disjointness::PerNestDisk).size() == sphere_nests(t).size());
    }
}

TEST_CASE("nests: selections agree with a projection-based brute force") {
    for (auto mode : {Disjointness::PerNestDisk, Disjointness::EndDisk, Disjointness::EdgeDisjoint})
        for (int l = 1; l <= 5; ++l)
            for (const auto& f : gen_sphere_arrangements(l)) {
                RegionTree t = RegionTree::from_forest(f);
                for (int r = 2; r <= 3; ++r) {
                    std::set<std::vector<Ends>> lib;
                    int best = 0;
                    for (const auto& s : disjoint_nest_selections(t, r, mode)) {
                        lib.insert(as_ends(s.nests));
                        CHECK(selection_ok(t, s.nests, mode));
                        best = std::max(best, s.total);
                    }
                    CHECK(lib == brute_selections(t, r, mode));
                    auto b = best_selection(t, r, mode, 0);
                    CHECK(bool(b) == (best > 0));
                    if (b) CHECK(b->total == best);
                }
            }
}

TEST_CASE("nests: depth sums never exceed the oval count") {
    for (int l = 1; l <= 7; ++l)
        for (const auto& f : gen_sphere_arrangements(l)) {
            RegionTree t = RegionTree::from_forest(f);
            for (int r = 1; r <= 4; ++r) {
                auto b = best_selection(t, r, Disjointness::PerNestDisk, 0);
                if (b) CHECK(b->total <= l);
            }
        }
}

TEST_CASE("nests: rp2 chains") {
    Forest rp2 = parse_forest("1+<<1>>");
    auto ns = rp2_nests(rp2);
    int deepest = 0;
    for (const auto& n : ns) deepest = std::max(deepest, n.depth());
    CHECK(deepest == 3);
    // the free oval and the outer oval of the chain sit side by side
    bool found = false;
    for (const auto& a : ns)
        for (const auto& b : ns)
            if (a.depth() == 1 && b.depth() == 3 && rp2_disjoint(rp2, a, b)) found = true;
    CHECK(found);
    for (const auto& a : ns)
        for (const auto& b : ns)
            if (a.depth() == 3 && b.depth() == 2) CHECK_FALSE(rp2_disjoint(rp2, a, b));
}

TEST_CASE("disjointness names") {
    for (auto m : {Disjointness::PerNestDisk, Disjointness::EndDisk, Disjointness::EdgeDisjoint})
        CHECK(disjointness_from_string(to_string(m)) == m);
    CHECK_FALSE(disjointness_from_string("bogus"));
}
