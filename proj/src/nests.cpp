#include <algorithm>
#include <functional>
#include <set>

#include "ovalis/nests.hpp"

namespace ovalis {

std::string to_string(Disjointness d) {
    switch (d) {
        case Disjointness::PerNestDisk: return "per-nest";
        case Disjointness::EndDisk: return "end-disk";
        case Disjointness::EdgeDisjoint: return "edge-disjoint";
    }
    return "?";
}

std::optional<Disjointness> disjointness_from_string(const std::string& s) {
    if (s == "per-nest") return Disjointness::PerNestDisk;
    if (s == "end-disk") return Disjointness::EndDisk;
    if (s == "edge-disjoint") return Disjointness::EdgeDisjoint;
    return std::nullopt;
}

std::vector<Nest> sphere_nests(const RegionTree& t) {
    std::vector<Nest> out;
    std::vector<int> path;
    std::function<void(int, int)> walk = [&](int v, int parent) {
        path.push_back(v);
        if (path.size() > 1 && path.front() < path.back()) out.push_back(Nest{path});
        for (int w : t.neighbors(v))
            if (w != parent) walk(w, v);
        path.pop_back();
    };
    for (int s = 0; s < t.vertex_count(); ++s) walk(s, -1);
    return out;
}

std::vector<Nest> rp2_nests(const Forest& rp2) {
    RegionTree t = RegionTree::from_forest(rp2);
    std::vector<Nest> out;
    std::vector<int> path;
    // from_forest numbers children after parents, so a neighbour with a larger
    // index is a child.
    std::function<void(int)> down = [&](int v) {
        path.push_back(v);
        if (path.size() > 1) out.push_back(Nest{path});
        for (int w : t.neighbors(v))
            if (w > v) down(w);
        path.pop_back();
    };
    for (int s = 0; s < t.vertex_count(); ++s) down(s);
    return out;
}

std::vector<std::vector<char>> end_components(const RegionTree& t, const Nest& n) {
    std::set<std::pair<int, int>> cut;
    for (size_t i = 0; i + 1 < n.path.size(); ++i) {
        cut.insert({n.path[i], n.path[i + 1]});
        cut.insert({n.path[i + 1], n.path[i]});
    }
    auto flood = [&](int start) {
        std::vector<char> in(t.vertex_count(), 0);
        std::vector<int> stack{start};
        in[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v))
                if (!in[w] && !cut.count({v, w})) {
                    in[w] = 1;
                    stack.push_back(w);
                }
        }
        return in;
    };
    return {flood(n.path.front()), flood(n.path.back())};
}

namespace {

class Selector {
public:
    Selector(const RegionTree& t, std::vector<Nest> nests, Disjointness mode)
        : nests_(std::move(nests)), mode_(mode) {
        std::stable_sort(nests_.begin(), nests_.end(),
                         [](const Nest& a, const Nest& b) { return a.depth() > b.depth(); });
        const size_t n = nests_.size();
        if (mode_ == Disjointness::EdgeDisjoint) {
            std::vector<std::set<std::pair<int, int>>> edges(n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j + 1 < nests_[i].path.size(); ++j) {
                    int a = nests_[i].path[j], b = nests_[i].path[j + 1];
                    edges[i].insert({std::min(a, b), std::max(a, b)});
                }
            clash_.assign(n, std::vector<char>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    for (const auto& e : edges[i])
                        if (edges[j].count(e)) {
                            clash_[i][j] = clash_[j][i] = 1;
                            break;
                        }
            return;
        }
        // inside_[i][j]: bit e set when nest j lies in end e of nest i
        inside_.assign(n, std::vector<unsigned char>(n, 0));
        for (size_t i = 0; i < n; ++i) {
            auto ends = end_components(t, nests_[i]);
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int e = 0; e < 2; ++e) {
                    bool all = true;
                    for (int v : nests_[j].path)
                        if (!ends[e][v]) {
                            all = false;
                            break;
                        }
                    if (all) inside_[i][j] |= 1u << e;
                }
            }
        }
    }

    // visit(sel) returns true to stop
    void run(int r, int floor, bool prune, const std::function<bool(const std::vector<int>&, int)>& visit) {
        r_ = r;
        floor_ = floor;
        prune_ = prune;
        visit_ = &visit;
        chosen_.clear();
        masks_.clear();
        stop_ = false;
        dfs(0, 0);
    }

    const Nest& nest(int i) const { return nests_[i]; }
    void raise_floor(int f) { floor_ = f; }

private:
    bool can_add(int q, std::vector<unsigned char>& new_masks, unsigned char& q_mask) const {
        if (mode_ == Disjointness::EdgeDisjoint) {
            for (int p : chosen_)
                if (clash_[p][q]) return false;
            return true;
        }
        if (mode_ == Disjointness::PerNestDisk) {
            for (int p : chosen_)
                if (!inside_[p][q] || !inside_[q][p]) return false;
            return true;
        }
        new_masks = masks_;
        q_mask = 3;
        for (size_t i = 0; i < chosen_.size(); ++i) {
            int p = chosen_[i];
            new_masks[i] &= inside_[p][q];
            if (!new_masks[i]) return false;
            q_mask &= inside_[q][p];
            if (!q_mask) return false;
        }
        return true;
    }

    void dfs(size_t start, int total) {
        if (stop_) return;
        if (static_cast<int>(chosen_.size()) == r_) {
            if (total > floor_) stop_ = (*visit_)(chosen_, total);
            return;
        }
        const int left = r_ - static_cast<int>(chosen_.size());
        for (size_t q = start; q + left <= nests_.size(); ++q) {
            if (prune_ && total + left * nests_[q].depth() <= floor_) return;
            std::vector<unsigned char> new_masks;
            unsigned char q_mask = 3;
            if (!can_add(static_cast<int>(q), new_masks, q_mask)) continue;
            auto saved = masks_;
            if (mode_ == Disjointness::EndDisk) {
                masks_ = std::move(new_masks);
                masks_.push_back(q_mask);
            }
            chosen_.push_back(static_cast<int>(q));
            dfs(q + 1, total + nests_[q].depth());
            chosen_.pop_back();
            masks_ = std::move(saved);
            if (stop_) return;
        }
    }

    std::vector<Nest> nests_;
    Disjointness mode_;
    std::vector<std::vector<char>> clash_;
    std::vector<std::vector<unsigned char>> inside_;
    int r_ = 0, floor_ = 0;
    bool prune_ = false, stop_ = false;
    const std::function<bool(const std::vector<int>&, int)>* visit_ = nullptr;
    std::vector<int> chosen_;
    std::vector<unsigned char> masks_;
};

}  // namespace

bool selection_ok(const RegionTree& t, const std::vector<Nest>& sel, Disjointness mode) {
    if (mode == Disjointness::EdgeDisjoint) {
        std::set<std::pair<int, int>> used;
        for (const auto& n : sel)
            for (size_t j = 0; j + 1 < n.path.size(); ++j) {
                auto e = std::minmax(n.path[j], n.path[j + 1]);
                if (!used.insert({e.first, e.second}).second) return false;
            }
        return true;
    }
    for (size_t i = 0; i < sel.size(); ++i) {
        auto ends = end_components(t, sel[i]);
        bool some_end_holds_all = false;
        for (int e = 0; e < 2; ++e) {
            bool all = true;
            for (size_t j = 0; j < sel.size() && all; ++j)
                if (j != i)
                    for (int v : sel[j].path)
                        if (!ends[e][v]) all = false;
            some_end_holds_all |= all;
        }
        if (mode == Disjointness::EndDisk && !some_end_holds_all) return false;
        if (mode == Disjointness::PerNestDisk)
            for (size_t j = 0; j < sel.size(); ++j) {
                if (j == i) continue;
                bool in_some = false;
                for (int e = 0; e < 2; ++e) {
                    bool all = true;
                    for (int v : sel[j].path) all = all && ends[e][v];
                    in_some |= all;
                }
                if (!in_some) return false;
            }
    }
    return true;
}

std::vector<Selection> disjoint_nest_selections(const RegionTree& t, int r, Disjointness mode) {
    std::vector<Selection> out;
    if (r < 1) return out;
    Selector sel(t, sphere_nests(t), mode);
    int best = 0;
    sel.run(r, 0, false, [&](const std::vector<int>& chosen, int total) {
        Selection s;
        for (int i : chosen) s.nests.push_back(sel.nest(i));
        s.total = total;
        best = std::max(best, total);
        out.push_back(std::move(s));
        return false;
    });
    for (auto& s : out) s.maximal = s.total == best;
    return out;
}

std::optional<Selection> best_selection(const RegionTree& t, int r, Disjointness mode, int floor) {
    if (r < 1) return std::nullopt;
    Selector sel(t, sphere_nests(t), mode);
    std::optional<Selection> best;
    sel.run(r, floor, true, [&](const std::vector<int>& chosen, int total) {
        Selection s;
        for (int i : chosen) s.nests.push_back(sel.nest(i));
        s.total = total;
        s.maximal = true;
        best = std::move(s);
        sel.raise_floor(total);
        return false;
    });
    return best;
}

bool rp2_disjoint(const Forest& rp2, const Nest& a, const Nest& b) {
    RegionTree t = RegionTree::from_forest(rp2);
    // parent of each region (children have larger indices)
    std::vector<int> parent(t.vertex_count(), -1);
    for (int v = 0; v < t.vertex_count(); ++v)
        for (int w : t.neighbors(v))
            if (w > v) parent[w] = v;
    auto above = [&](int anc, int v) {
        for (; v >= 0; v = parent[v])
            if (v == anc) return true;
        return false;
    };
    int ta = a.path[1], tb = b.path[1];
    return !above(ta, tb) && !above(tb, ta);
}

}  // namespace ovalis
