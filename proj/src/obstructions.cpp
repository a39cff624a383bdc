#include <algorithm>
#include <functional>
#include <map>

#include "ovalis/obstructions.hpp"

namespace ovalis {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::Admissible: return "admissible";
        case Status::Prohibited: return "prohibited";
        case Status::NotApplicable: return "not-applicable";
    }
    return "?";
}

int dp2_max_ovals(int d) { return d * (d - 1) + 2; }
int dp1_max_ovals(int d) { return d * (d - 1) / 2 + 2; }

namespace {

Verdict admissible() { return {}; }
Verdict not_applicable(const std::string& why) {
    Verdict v;
    v.status = Status::NotApplicable;
    v.witness = {{"reason", why}};
    return v;
}
Verdict prohibited(const std::string& id, json w) {
    Verdict v;
    v.status = Status::Prohibited;
    v.obstruction = id;
    v.witness = std::move(w);
    return v;
}

int nonempty_spheres(const Scheme& s) {
    int t = 0;
    for (const auto& f : s.spheres) t += !f.empty();
    return t;
}

json depths_of(const Selection& sel) {
    json a = json::array();
    for (const auto& n : sel.nests) a.push_back(n.depth());
    return a;
}

json paths_of(const Selection& sel) {
    json a = json::array();
    for (const auto& n : sel.nests) a.push_back(n.path);
    return a;
}

// Cache of best r-selections per sphere for one scheme evaluation.
class BestCache {
public:
    BestCache(const Scheme& s, Disjointness mode) : mode_(mode) {
        for (const auto& f : s.spheres) trees_.push_back(RegionTree::from_forest(f));
    }
    const std::optional<Selection>& get(int sphere, int r) {
        auto key = std::make_pair(sphere, r);
        auto it = memo_.find(key);
        if (it == memo_.end()) it = memo_.emplace(key, best_selection(trees_[sphere], r, mode_, 0)).first;
        return it->second;
    }
    int value(int sphere, int r) {
        const auto& b = get(sphere, r);
        return b ? b->total : -1;
    }

private:
    Disjointness mode_;
    std::vector<RegionTree> trees_;
    std::map<std::pair<int, int>, std::optional<Selection>> memo_;
};

}  // namespace

Verdict dp2_harnack(const Scheme& s, int d) {
    int l = component_stats(s).l;
    int bound = dp2_max_ovals(d);
    if (l > bound) return prohibited("harnack", {{"l", l}, {"bound", bound}});
    return admissible();
}

Verdict dp2_welschinger_nests(const Scheme& s, int d, const Knobs& knobs) {
    const int k = s.k();
    if (k < 2) return not_applicable("needs at least two spheres");
    const int l = component_stats(s).l;
    const int t = nonempty_spheres(s);
    BestCache cache(s, knobs.disjointness);
    for (int sp = 2; 2 * sp - 1 <= l; ++sp) {
        const int bound1 = d * sp - (t - 2);
        const int bound2 = d * sp - (t - 1);
        if (bound1 >= l && bound2 >= l) break;
        for (int r1 = 3; r1 <= 2 * sp - 3; r1 += 2) {
            int r2 = 2 * sp - r1;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (i == j) continue;
                    int a = cache.value(i, r1), b = cache.value(j, r2);
                    if (a < 0 || b < 0 || a + b <= bound1) continue;
                    return prohibited("welschinger", {{"case", 1},
                                                      {"s", sp},
                                                      {"r1", r1},
                                                      {"r2", r2},
                                                      {"spheres", {i, j}},
                                                      {"depths_1", depths_of(*cache.get(i, r1))},
                                                      {"depths_2", depths_of(*cache.get(j, r2))},
                                                      {"paths_1", paths_of(*cache.get(i, r1))},
                                                      {"paths_2", paths_of(*cache.get(j, r2))},
                                                      {"t", t},
                                                      {"bound", bound1},
                                                      {"value", a + b}});
                }
        }
        const int r1 = 2 * sp - 1;
        for (int i = 0; i < k; ++i) {
            int a = cache.value(i, r1);
            if (a <= bound2) continue;
            int j = i == 0 ? 1 : 0;
            return prohibited("welschinger", {{"case", 2},
                                              {"s", sp},
                                              {"r1", r1},
                                              {"r2", 1},
                                              {"spheres", {i, j}},
                                              {"depths_1", depths_of(*cache.get(i, r1))},
                                              {"paths_1", paths_of(*cache.get(i, r1))},
                                              {"t", t},
                                              {"bound", bound2},
                                              {"value", a}});
        }
    }
    return admissible();
}

Verdict dp2_two_nests_k4(const Scheme& s, int d) {
    if (s.k() != 4) return not_applicable("needs four spheres");
    const int t = nonempty_spheres(s);
    const int bound = 2 * d - (t - 2);
    std::vector<std::pair<int, int>> depth;  // (max depth, sphere)
    for (int i = 0; i < s.k(); ++i)
        if (!s.spheres[i].empty()) depth.emplace_back(RegionTree::from_forest(s.spheres[i]).diameter(), i);
    std::sort(depth.rbegin(), depth.rend());
    if (depth.size() < 2) return admissible();
    int value = depth[0].first + depth[1].first;
    if (value > bound)
        return prohibited("two_nests", {{"spheres", {depth[0].second, depth[1].second}},
                                        {"depths", {depth[0].first, depth[1].first}},
                                        {"t", t},
                                        {"bound", bound},
                                        {"value", value}});
    return admissible();
}

Verdict dp2_forbidden_quadruple(const Scheme& s, int d) {
    if (d != 3 || s.k() != 4) return not_applicable("stated for four spheres and class 3");
    static const std::string code = canonical_code(parse_scheme("<1>+<1>+<1>+<1>:0:0:0"));
    if (canonical_code(s) == code) return prohibited("quadruple", {{"scheme", "<1>+<1>+<1>+<1>:0:0:0"}});
    return admissible();
}

Verdict dp2_one_sphere_nests(const Scheme& s, int d, const Knobs& knobs) {
    if (s.k() != 1) return not_applicable("needs one sphere");
    Disjointness mode = knobs.one_sphere_disjoint ? knobs.disjointness : Disjointness::EdgeDisjoint;
    const int bound = 2 * d;
    auto best = best_selection(RegionTree::from_forest(s.spheres[0]), 3, mode, bound);
    if (best)
        return prohibited("one_sphere", {{"depths", depths_of(*best)},
                                         {"paths", paths_of(*best)},
                                         {"bound", bound},
                                         {"value", best->total}});
    return admissible();
}

Verdict dp2_petrovsky(const Scheme& s, int d) {
    if (d % 2) return not_applicable("class must be even");
    const int l = dp2_max_ovals(d);
    const int k = s.k();
    int carrier = -1;
    for (int i = 0; i < k; ++i) {
        if (s.spheres[i].empty()) continue;
        if (carrier >= 0) return not_applicable("more than one non-empty sphere");
        carrier = i;
    }
    if (carrier < 0 || oval_count(s.spheres[carrier]) != l) return not_applicable("not a maximal one-sphere scheme");
    if (sphere_code(s.spheres[carrier]) != sphere_code(Forest(l))) return not_applicable("ovals are nested");
    const int slack = d * (3 * d - 2) / 2;
    const int lo = -14 - slack, hi = 16 + slack;
    json tried = json::array();
    for (int a = 0; a < k; ++a) {
        int chi1 = l + 2 * a;
        int chi2 = 2 - l + 2 * (k - 1 - a);
        bool ok1 = lo <= 2 * chi1 && 2 * chi1 <= hi;
        bool ok2 = lo <= 2 * chi2 && 2 * chi2 <= hi;
        tried.push_back({{"empty_spheres_with_disk_side", a}, {"chi_1", chi1}, {"chi_2", chi2}});
        if (ok1 && ok2) return admissible();
    }
    return prohibited("petrovsky", {{"l", l}, {"lower", lo}, {"upper", hi}, {"halves", tried}});
}

Verdict dp2_verdict(const Scheme& s0, int k, int d, const Knobs& knobs) {
    Scheme s = padded(s0, k);
    std::vector<std::function<Verdict()>> checks{[&] { return dp2_harnack(s, d); }};
    if (k >= 2) checks.push_back([&] { return dp2_welschinger_nests(s, d, knobs); });
    if (k == 4) {
        checks.push_back([&] { return dp2_two_nests_k4(s, d); });
        checks.push_back([&] { return dp2_forbidden_quadruple(s, d); });
    }
    if (k == 1) checks.push_back([&] { return dp2_one_sphere_nests(s, d, knobs); });
    checks.push_back([&] { return dp2_petrovsky(s, d); });
    for (const auto& check : checks) {
        Verdict v = check();
        if (v.prohibited()) return v;
    }
    return admissible();
}

Verdict dp1_parity(const Scheme& s, int d) {
    if (s.pseudo_lines != d % 2)
        return prohibited("parity", {{"pseudo_lines", s.pseudo_lines}, {"required", d % 2}});
    return admissible();
}

Verdict dp1_bounds(const Scheme& s, int d) {
    int l = component_stats(s).l;
    int lo = d % 2, hi = dp1_max_ovals(d);
    if (l < lo || l > hi) return prohibited("bounds", {{"l", l}, {"lower", lo}, {"upper", hi}});
    return admissible();
}

Verdict dp1_nest_obstruction(const Scheme& s, int d) {
    if (s.k() != 4) return not_applicable("needs four spheres");
    const int sh = d / 2, eps = d % 2;
    if (sh < 1) return not_applicable("class too small");
    auto nests = rp2_nests(s.rp2);
    int best_sum = -1, best_big = -1;
    std::pair<int, int> sum_pair, big_pair;
    for (size_t a = 0; a < nests.size(); ++a)
        for (size_t b = a + 1; b < nests.size(); ++b) {
            if (!rp2_disjoint(s.rp2, nests[a], nests[b])) continue;
            int i1 = std::min(nests[a].depth(), nests[b].depth());
            int i2 = std::max(nests[a].depth(), nests[b].depth());
            if (i1 + i2 > best_sum) {
                best_sum = i1 + i2;
                sum_pair = {i1, i2};
            }
            if (i2 > best_big) {
                best_big = i2;
                big_pair = {i1, i2};
            }
        }
    int i3 = 0, i3_sphere = -1;
    for (int i = 0; i < s.k(); ++i) {
        if (s.spheres[i].empty()) continue;
        int dep = RegionTree::from_forest(s.spheres[i]).diameter();
        if (dep > i3) {
            i3 = dep;
            i3_sphere = i;
        }
    }
    if (best_sum < 0 || i3_sphere < 0) return not_applicable("needs two disjoint chains on RP^2 and a sphere nest");
    const int t = nonempty_spheres(s);
    const int bound1 = 3 * sh + eps - t;
    const int bound2 = 3 * sh + eps - (t - 1);
    if (best_sum > bound1)
        return prohibited("dp1_nests_1", {{"i1", sum_pair.first},
                                          {"i2", sum_pair.second},
                                          {"t", t},
                                          {"s", sh},
                                          {"epsilon", eps},
                                          {"bound", bound1},
                                          {"value", best_sum}});
    if (best_big + i3 > bound2)
        return prohibited("dp1_nests_2", {{"i1", big_pair.first},
                                          {"i2", big_pair.second},
                                          {"i3", i3},
                                          {"sphere", i3_sphere},
                                          {"t", t},
                                          {"s", sh},
                                          {"epsilon", eps},
                                          {"bound", bound2},
                                          {"value", best_big + i3}});
    return admissible();
}

Verdict dp1_verdict(const Scheme& s0, int k, int d) {
    Scheme s = padded(s0, k);
    Verdict v = dp1_parity(s, d);
    if (v.prohibited()) return v;
    v = dp1_bounds(s, d);
    if (v.prohibited()) return v;
    if (d >= 4 && k == 4) {
        v = dp1_nest_obstruction(s, d);
        if (v.prohibited()) return v;
    }
    return admissible();
}

Verdict refined_verdict(const RefinedScheme& r, int d) { return dp1_verdict(forget(r), 4, d); }

json to_json(const Verdict& v) {
    json j = {{"status", to_string(v.status)}};
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    j["witness"] = v.witness;
    return j;
}

}  // namespace ovalis
