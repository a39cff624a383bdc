#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "ovalis/enumerate.hpp"

namespace ovalis {

namespace {

struct Item {
    int size;
    const Forest* below;
};

void pick(const std::vector<Item>& items, int limit, int remaining, Forest& cur, std::vector<Forest>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = limit; i >= 0; --i) {
        if (items[i].size > remaining) continue;
        cur.push_back(Oval{*items[i].below});
        pick(items, i, remaining - items[i].size, cur, out);
        cur.pop_back();
    }
}

std::mutex cache_mutex;
std::map<int, std::vector<Forest>> rooted_cache;

const std::vector<Forest>& rooted_locked(int m);

std::vector<Item> items_up_to(int max_size) {
    std::vector<Item> items;
    for (int s = 1; s <= max_size; ++s)
        for (const auto& f : rooted_locked(s)) items.push_back({s, &f});
    return items;
}

const std::vector<Forest>& rooted_locked(int m) {
    auto it = rooted_cache.find(m);
    if (it != rooted_cache.end()) return it->second;
    std::vector<Forest> out;
    if (m == 1) {
        out.push_back({});
    } else {
        auto items = items_up_to(m - 1);
        Forest cur;
        pick(items, static_cast<int>(items.size()) - 1, m - 1, cur, out);
    }
    return rooted_cache.emplace(m, std::move(out)).first->second;
}

void sort_by_code(std::vector<Forest>& v) {
    std::vector<std::pair<std::string, Forest>> keyed;
    for (auto& f : v) keyed.emplace_back(sphere_code(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    v.clear();
    for (auto& [c, f] : keyed) v.push_back(std::move(f));
}

// Multisets of `count` arrangements from `pool` (indexed with sizes) with the
// given total size.
void multisets(const std::vector<std::pair<int, const Forest*>>& pool, int count, int total, size_t start,
               std::vector<Forest>& cur, const std::function<void(const std::vector<Forest>&)>& emit) {
    if (count == 0) {
        if (total == 0) emit(cur);
        return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
        if (pool[i].first > total) continue;
        cur.push_back(*pool[i].second);
        multisets(pool, count - 1, total - pool[i].first, i, cur, emit);
        cur.pop_back();
    }
}

struct SpherePool {
    std::vector<std::vector<Forest>> by_size;
    std::vector<std::pair<int, const Forest*>> flat;
    SpherePool(int max_l, int cap) {
        for (int l = 0; l <= max_l; ++l) by_size.push_back(gen_sphere_arrangements(l, cap));
        for (int l = 0; l <= max_l; ++l)
            for (const auto& f : by_size[l]) flat.emplace_back(l, &f);
    }
    void each(int count, int total, const std::function<void(const std::vector<Forest>&)>& emit) const {
        std::vector<Forest> cur;
        multisets(flat, count, total, 0, cur, emit);
    }
};

std::vector<int> l_range(const EnumSpec& spec, int max_l) {
    std::vector<int> out;
    if (spec.l) {
        if (*spec.l < 0) throw EnumError("oval count must be non-negative");
        out.push_back(*spec.l);
    } else {
        for (int l = 0; l <= max_l; ++l) out.push_back(l);
    }
    for (int l : out)
        if (l > spec.cap) throw EnumError("oval count " + std::to_string(l) + " exceeds cap " + std::to_string(spec.cap));
    return out;
}

}  // namespace

std::vector<Forest> gen_rooted_trees(int m) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (m < 1) return {};
    return rooted_locked(m);
}

std::vector<Forest> gen_sphere_arrangements(int l, int cap) {
    if (l < 0) return {};
    if (l > cap) throw EnumError("oval count " + std::to_string(l) + " exceeds cap " + std::to_string(cap));
    const int n = l + 1;
    std::vector<Forest> out;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        // one centroid: all branches have at most (n-1)/2 vertices
        auto items = items_up_to((n - 1) / 2);
        Forest cur;
        if (n == 1)
            out.push_back({});
        else if (!items.empty())
            pick(items, static_cast<int>(items.size()) - 1, n - 1, cur, out);
        // two centroids: an edge splitting the tree into equal halves
        if (n % 2 == 0) {
            const auto& halves = rooted_locked(n / 2);
            for (size_t a = 0; a < halves.size(); ++a)
                for (size_t b = a; b < halves.size(); ++b) {
                    Forest f = halves[a];
                    f.push_back(Oval{halves[b]});
                    out.push_back(std::move(f));
                }
        }
    }
    sort_by_code(out);
    return out;
}

std::vector<Entry> gen_dp2_schemes(const EnumSpec& spec) {
    if (spec.surface != Surface::DP2) throw EnumError("expected a DP2 spec");
    if (spec.k < 1 || spec.k > 4) throw EnumError("k must be in 1..4");
    if (spec.d < 1) throw EnumError("class must be positive");
    auto ls = l_range(spec, dp2_max_ovals(spec.d));
    SpherePool pool(*std::max_element(ls.begin(), ls.end()), spec.cap);
    std::vector<std::pair<std::string, Entry>> out;
    for (int l : ls)
        pool.each(spec.k, l, [&](const std::vector<Forest>& spheres) {
            Scheme s;
            s.spheres = spheres;
            Verdict v = dp2_verdict(s, spec.k, spec.d, spec.knobs);
            if (spec.apply_obstructions && v.prohibited()) return;
            std::string code = canonical_code(s);
            out.emplace_back(std::move(code), Entry{std::move(s), std::move(v)});
        });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Entry> res;
    for (auto& [c, e] : out) res.push_back(std::move(e));
    return res;
}

namespace {

template <class Fn>
void each_dp1(const EnumSpec& spec, int spheres_per_group, int groups, Fn&& fn) {
    if (spec.surface != Surface::DP1) throw EnumError("expected a DP1 spec");
    if (spec.k < 0 || spec.k > 4) throw EnumError("k must be in 0..4");
    if (spec.d < 1) throw EnumError("class must be positive");
    auto ls = l_range(spec, dp1_max_ovals(spec.d));
    const int max_l = *std::max_element(ls.begin(), ls.end());
    SpherePool pool(max_l, spec.cap);
    for (int l : ls)
        for (int j = 0; j <= 1; ++j)
            for (int m = 0; m + j <= l; ++m) {
                auto rp2s = gen_rooted_trees(m + 1);
                int rest = l - m - j;
                // split rest over the groups of spheres
                std::function<void(int, int, std::vector<std::vector<Forest>>&)> split =
                    [&](int g, int left, std::vector<std::vector<Forest>>& chosen) {
                        if (g == groups) {
                            if (left) return;
                            for (const auto& rp2 : rp2s) fn(rp2, j, chosen);
                            return;
                        }
                        for (int part = 0; part <= left; ++part) {
                            if (g == groups - 1 && part != left) continue;
                            pool.each(spheres_per_group, part, [&](const std::vector<Forest>& group) {
                                chosen.push_back(group);
                                split(g + 1, left - part, chosen);
                                chosen.pop_back();
                            });
                        }
                    };
                std::vector<std::vector<Forest>> chosen;
                split(0, rest, chosen);
            }
}

}  // namespace

std::vector<Entry> gen_dp1_schemes(const EnumSpec& spec) {
    if (spec.refined) throw EnumError("use gen_dp1_refined for refined schemes");
    std::vector<std::pair<std::string, Entry>> out;
    each_dp1(spec, spec.k, 1, [&](const Forest& rp2, int j, const std::vector<std::vector<Forest>>& groups) {
        Scheme s;
        s.surface = Surface::DP1;
        s.rp2 = rp2;
        s.pseudo_lines = j;
        s.spheres = groups[0];
        Verdict v = dp1_verdict(s, spec.k, spec.d);
        if (spec.apply_obstructions && v.prohibited()) return;
        std::string code = canonical_code(s);
        out.emplace_back(std::move(code), Entry{std::move(s), std::move(v)});
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Entry> res;
    for (auto& [c, e] : out) res.push_back(std::move(e));
    return res;
}

std::vector<RefinedEntry> gen_dp1_refined(const EnumSpec& spec) {
    if (spec.k != 4) throw EnumError("refined schemes need k=4");
    std::vector<std::pair<std::string, RefinedEntry>> out;
    each_dp1(spec, 2, 2, [&](const Forest& rp2, int j, const std::vector<std::vector<Forest>>& groups) {
        RefinedScheme r;
        r.rp2 = rp2;
        r.pseudo_lines = j;
        r.positive = {groups[0][0], groups[0][1]};
        r.negative = {groups[1][0], groups[1][1]};
        Verdict v = refined_verdict(r, spec.d);
        if (spec.apply_obstructions && v.prohibited()) return;
        std::string code = canonical_code(r);
        out.emplace_back(std::move(code), RefinedEntry{std::move(r), std::move(v)});
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RefinedEntry> res;
    for (auto& [c, e] : out) res.push_back(std::move(e));
    return res;
}

}  // namespace ovalis
