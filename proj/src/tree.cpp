#include "ovalis/tree.hpp"

#include <algorithm>
#include <functional>

namespace ovalis {

int oval_count(const Forest& f) {
    int n = 0;
    for (const auto& o : f) n += 1 + oval_count(o.inside);
    return n;
}

int forest_depth(const Forest& f) {
    int d = 0;
    for (const auto& o : f) d = std::max(d, 1 + forest_depth(o.inside));
    return d;
}

void RegionTree::add_edge(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
}

int RegionTree::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

RegionTree RegionTree::from_forest(const Forest& f) {
    RegionTree t(1 + oval_count(f));
    int next = 1;
    std::function<void(const Forest&, int)> add = [&](const Forest& g, int parent) {
        for (const auto& o : g) {
            int v = next++;
            t.add_edge(parent, v);
            add(o.inside, v);
        }
    };
    add(f, 0);
    return t;
}

Forest RegionTree::rooted_at(int v) const {
    std::function<Forest(int, int)> build = [&](int u, int parent) {
        Forest f;
        for (int w : adj_[u]) {
            if (w == parent) continue;
            f.push_back(Oval{build(w, u)});
        }
        return f;
    };
    return build(v, -1);
}

std::vector<int> RegionTree::centroids() const {
    const int n = vertex_count();
    std::vector<int> size(n, 1), parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int w : adj_[u]) {
            if (parent[w] != -1) continue;
            parent[w] = u;
            stack.push_back(w);
        }
    }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    std::vector<int> best;
    int best_weight = n + 1;
    for (int u = 0; u < n; ++u) {
        int weight = n - size[u];
        for (int w : adj_[u])
            if (w != parent[u] || u == 0)
                if (parent[w] == u && w != u) weight = std::max(weight, size[w]);
        if (weight < best_weight) {
            best_weight = weight;
            best = {u};
        } else if (weight == best_weight) {
            best.push_back(u);
        }
    }
    return best;
}

int RegionTree::diameter() const {
    auto farthest = [&](int src) {
        std::vector<int> dist(vertex_count(), -1);
        std::vector<int> queue{src};
        dist[src] = 0;
        for (size_t i = 0; i < queue.size(); ++i)
            for (int w : adj_[queue[i]])
                if (dist[w] < 0) {
                    dist[w] = dist[queue[i]] + 1;
                    queue.push_back(w);
                }
        int far = src;
        for (int v = 0; v < vertex_count(); ++v)
            if (dist[v] > dist[far]) far = v;
        return std::make_pair(far, dist[far]);
    };
    return farthest(farthest(0).first).second;
}

std::string rooted_code(const Forest& f) {
    std::vector<std::string> kids;
    kids.reserve(f.size());
    for (const auto& o : f) kids.push_back(rooted_code(o.inside));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

namespace {

std::string code_below(const RegionTree& t, int u, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(u))
        if (w != parent) kids.push_back(code_below(t, w, u));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

}  // namespace

std::string rooted_code(const RegionTree& t, int root) { return code_below(t, root, -1); }

std::string canonical_code(const RegionTree& t) {
    auto c = t.centroids();
    if (c.size() == 1) return rooted_code(t, c[0]);
    std::string a = code_below(t, c[0], c[1]);
    std::string b = code_below(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

std::string print_forest(const Forest& f) {
    int free_ovals = 0;
    std::vector<std::string> terms;
    for (const auto& o : f) {
        if (o.inside.empty())
            ++free_ovals;
        else
            terms.push_back("<" + print_forest(o.inside) + ">");
    }
    std::sort(terms.begin(), terms.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string out = free_ovals ? std::to_string(free_ovals) : "";
    for (const auto& term : terms) {
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

Forest representative_forest(const RegionTree& t) {
    Forest best;
    std::string best_text;
    for (int v = 0; v < t.vertex_count(); ++v) {
        Forest f = t.rooted_at(v);
        std::string s = print_forest(f);
        if (v == 0 || s.size() < best_text.size() || (s.size() == best_text.size() && s < best_text)) {
            best = std::move(f);
            best_text = std::move(s);
        }
    }
    return best;
}

}  // namespace ovalis
