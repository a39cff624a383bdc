#include <algorithm>
#include <functional>
#include <numeric>

#include "ovalis/trigonal.hpp"

namespace ovalis::trigonal {

namespace {

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(i + r) % a.size()] == b[i];
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> check_completion(const Completion& c, int n, const RealGraph* expected) {
    std::vector<std::string> bad;
    const int V = static_cast<int>(c.vertices.size()), E = static_cast<int>(c.edges.size());
    if (static_cast<int>(c.rotation.size()) != V) return {"rotation: one list per vertex required"};
    for (int e = 0; e < E; ++e) {
        const auto& ed = c.edges[e];
        if (ed.from < 0 || ed.from >= V || ed.to < 0 || ed.to >= V) return {"edge " + std::to_string(e) + ": bad end"};
        if (ed.from == ed.to) return {"edge " + std::to_string(e) + ": loop"};
    }
    {
        std::vector<int> seen(E, 0);
        for (int v = 0; v < V; ++v)
            for (int e : c.rotation[v]) {
                if (e < 0 || e >= E || (c.edges[e].from != v && c.edges[e].to != v))
                    return {"rotation at " + std::to_string(v) + ": edge not incident"};
                ++seen[e];
            }
        for (int e = 0; e < E; ++e)
            if (seen[e] != 2) return {"rotation: edge " + std::to_string(e) + " not listed at both ends"};
    }
    auto deg = [&](int v) { return static_cast<int>(c.rotation[v].size()); };
    auto is_out = [&](int v, int e) { return c.edges[e].from == v; };

    // real line: the real edges form one cycle through the real vertices
    {
        std::vector<int> real_deg(V, 0);
        int real_edges = 0;
        for (const auto& e : c.edges)
            if (e.real) {
                ++real_deg[e.from], ++real_deg[e.to], ++real_edges;
                if (!c.vertices[e.from].real || !c.vertices[e.to].real) bad.push_back("real line: real edge at a non-real vertex");
            }
        int real_v = 0;
        for (int v = 0; v < V; ++v)
            if (c.vertices[v].real) {
                ++real_v;
                if (real_deg[v] != 2) bad.push_back("real line: vertex " + std::to_string(v) + " has " + std::to_string(real_deg[v]) + " real edges");
            }
        if (real_v == 0) bad.push_back("real line: no real vertices");
        if (real_edges != real_v) bad.push_back("real line: not a single cycle");
        else if (real_v) {
            int start = -1;
            for (int v = 0; v < V && start < 0; ++v)
                if (c.vertices[v].real) start = v;
            int cur = start, prev_e = -1, steps = 0;
            do {
                int next_e = -1;
                for (int e : c.rotation[cur])
                    if (c.edges[e].real && e != prev_e) { next_e = e; break; }
                if (next_e < 0) break;
                cur = c.edges[next_e].from == cur ? c.edges[next_e].to : c.edges[next_e].from;
                prev_e = next_e;
                ++steps;
            } while (cur != start && steps <= real_v);
            if (cur != start || steps != real_v) bad.push_back("real line: not a single cycle");
        }
    }

    // valences and totals
    long tot[3] = {0, 0, 0};
    for (int v = 0; v < V; ++v) {
        int d = deg(v);
        switch (c.vertices[v].kind) {
            case Kind::Cross:
                if (d == 0 || d % 2) bad.push_back("valence: x vertex " + std::to_string(v) + " has valence " + std::to_string(d));
                tot[0] += d;
                break;
            case Kind::Circle:
                if (d == 0 || d % 4) bad.push_back("valence: o vertex " + std::to_string(v) + " has valence " + std::to_string(d));
                tot[1] += d;
                break;
            case Kind::Dot:
                if (d == 0 || d % 6) bad.push_back("valence: b vertex " + std::to_string(v) + " has valence " + std::to_string(d));
                tot[2] += d;
                break;
            case Kind::Mono:
                if (d < 2 || d % 2) bad.push_back("valence: monochrome vertex " + std::to_string(v) + " has valence " + std::to_string(d));
                break;
        }
    }
    const char* names[3] = {"x", "o", "b"};
    for (int i = 0; i < 3; ++i)
        if (tot[i] != 12L * n)
            bad.push_back(std::string("totals: ") + names[i] + " valences sum to " + std::to_string(tot[i]) + ", need " + std::to_string(12L * n));

    // incidence
    for (int v = 0; v < V; ++v) {
        const auto& vx = c.vertices[v];
        for (int e : c.rotation[v]) {
            Color col = c.edges[e].color;
            bool out = is_out(v, e);
            bool ok = true;
            switch (vx.kind) {
                case Kind::Cross: ok = out ? col == Color::Dotted : col == Color::Solid; break;
                case Kind::Circle: ok = out ? col == Color::Bold : col == Color::Dotted; break;
                case Kind::Dot: ok = out ? col == Color::Solid : col == Color::Bold; break;
                case Kind::Mono: ok = col == vx.color; break;
            }
            if (!ok) {
                bad.push_back("incidence: " + to_string(vx.kind) + " vertex " + std::to_string(v) + " has " +
                              (out ? "outgoing " : "incoming ") + to_string(col) + " edge " + std::to_string(e));
            }
        }
    }

    // orientation: in and out alternate around every vertex, faces are coherent
    for (int v = 0; v < V; ++v) {
        const auto& r = c.rotation[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (is_out(v, r[i]) == is_out(v, r[(i + 1) % r.size()])) {
                bad.push_back("orientation: directions do not alternate at vertex " + std::to_string(v));
                break;
            }
    }
    // darts: 2e leaves `from`, 2e+1 leaves `to`
    std::vector<int> face(2 * E, -1);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * E; ++d0) {
        if (face[d0] >= 0) continue;
        bool fwd = false, back = false, essential = false;
        int d = d0;
        while (face[d] < 0) {
            face[d] = faces;
            int e = d / 2;
            int head = d % 2 ? c.edges[e].from : c.edges[e].to;
            (d % 2 ? back : fwd) = true;
            if (c.vertices[head].kind != Kind::Mono) essential = true;
            const auto& r = c.rotation[head];
            auto it = std::find(r.begin(), r.end(), e);
            size_t pos = static_cast<size_t>(it - r.begin());
            int ne = r[(pos + r.size() - 1) % r.size()];
            d = 2 * ne + (c.edges[ne].from == head ? 0 : 1);
        }
        if (fwd && back) bad.push_back("orientation: face " + std::to_string(faces) + " is not coherently directed");
        if (!essential) bad.push_back("monochrome: face " + std::to_string(faces) + " has no essential corner");
        ++faces;
    }

    // connected and planar
    {
        std::vector<int> parent(V);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
        for (const auto& e : c.edges) parent[root(e.from)] = root(e.to);
        int comps = 0;
        for (int v = 0; v < V; ++v) comps += root(v) == v;
        if (comps != 1) bad.push_back("connected: " + std::to_string(comps) + " components");
        if (V - E + faces != 2)
            bad.push_back("euler: V-E+F = " + std::to_string(V - E + faces) + " (V=" + std::to_string(V) + " E=" +
                          std::to_string(E) + " F=" + std::to_string(faces) + ")");
    }

    // no directed cycle through monochrome vertices only
    {
        std::vector<std::vector<int>> adj(V);
        for (const auto& e : c.edges)
            if (c.vertices[e.from].kind == Kind::Mono && c.vertices[e.to].kind == Kind::Mono) adj[e.from].push_back(e.to);
        std::vector<int> state(V, 0);
        bool cyc = false;
        std::function<void(int)> dfs = [&](int v) {
            state[v] = 1;
            for (int w : adj[v]) {
                if (state[w] == 1) cyc = true;
                else if (state[w] == 0) dfs(w);
            }
            state[v] = 2;
        };
        for (int v = 0; v < V; ++v)
            if (!state[v]) dfs(v);
        if (cyc) bad.push_back("monochrome: directed monochrome cycle");
    }

    // complex conjugation
    {
        bool ok = true;
        for (int v = 0; v < V && ok; ++v) {
            int w = c.vertices[v].mirror;
            if (w < 0 || w >= V || c.vertices[w].mirror != v || c.vertices[w].kind != c.vertices[v].kind ||
                (w == v) != c.vertices[v].real)
                ok = false;
        }
        for (int e = 0; e < E && ok; ++e) {
            int f = c.edges[e].mirror;
            if (f < 0 || f >= E || c.edges[f].mirror != e || c.edges[f].color != c.edges[e].color ||
                c.edges[f].from != c.vertices[c.edges[e].from].mirror || c.edges[f].to != c.vertices[c.edges[e].to].mirror ||
                (f == e) != c.edges[e].real)
                ok = false;
        }
        for (int v = 0; v < V && ok; ++v) {
            int w = c.vertices[v].mirror;
            std::vector<int> img;
            for (int e : c.rotation[v]) img.push_back(c.edges[e].mirror);
            std::reverse(img.begin(), img.end());
            if (!cyclic_match(img, c.rotation[w])) ok = false;
        }
        if (!ok) bad.push_back("symmetry: graph is not invariant under conjugation");
    }

    // matches the given real graph
    if (expected && bad.empty()) {
        std::vector<int> want;
        for (size_t i = 0; i < expected->vertices.size(); ++i) {
            want.push_back(static_cast<int>(expected->vertices[i]));
            want.push_back(10 + static_cast<int>(expected->edges[i]));
        }
        int start = -1;
        for (int v = 0; v < V && start < 0; ++v)
            if (c.vertices[v].real && c.vertices[v].kind != Kind::Mono) start = v;
        std::vector<int> got;
        Color only = Color::Dotted;
        if (start < 0) {
            for (const auto& e : c.edges)
                if (e.real) only = e.color;
        } else {
            int cur = start, prev_e = -1;
            do {
                int next_e = -1;
                for (int e : c.rotation[cur])
                    if (c.edges[e].real && e != prev_e) { next_e = e; break; }
                if (c.vertices[cur].kind != Kind::Mono) {
                    got.push_back(static_cast<int>(c.vertices[cur].kind));
                    got.push_back(10 + static_cast<int>(c.edges[next_e].color));
                }
                cur = c.edges[next_e].from == cur ? c.edges[next_e].to : c.edges[next_e].from;
                prev_e = next_e;
            } while (cur != start);
        }
        bool ok;
        if (want.empty()) {
            ok = got.empty() && only == expected->circle;
        } else {
            // read backwards the edge colour precedes the vertex, so re-pair
            std::vector<int> rev;
            for (size_t i = 0; i < got.size(); i += 2) {
                size_t prev = (i + got.size() - 1) % got.size();
                rev.push_back(got[i]);
                rev.push_back(got[prev]);
            }
            std::vector<int> rv2;
            for (size_t i = rev.size(); i >= 2; i -= 2) {
                rv2.push_back(rev[i - 2]);
                rv2.push_back(rev[i - 1]);
            }
            ok = cyclic_match(want, got) || cyclic_match(want, rv2);
        }
        if (!ok) bad.push_back("real graph: sequence along the real line differs from the expected one");
    }
    return bad;
}

}  // namespace ovalis::trigonal
