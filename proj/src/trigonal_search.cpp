#include <chrono>
#include <string>
#include <unordered_set>

#include "ovalis/trigonal.hpp"

namespace ovalis::trigonal {

namespace {

int valence(Kind k) {
    switch (k) {
        case Kind::Cross: return 2;
        case Kind::Circle: return 4;
        case Kind::Dot: return 6;
        case Kind::Mono: return 4;
    }
    return 0;
}
Color in_color(Kind k) {
    return k == Kind::Cross ? Color::Solid : k == Kind::Circle ? Color::Dotted : Color::Bold;
}
Color out_color(Kind k) {
    return k == Kind::Cross ? Color::Dotted : k == Kind::Circle ? Color::Bold : Color::Solid;
}
bool touches(Kind k, Color c) { return c == in_color(k) || c == out_color(k); }

struct RVertex {
    Kind kind;
    Color color;  // monochrome only
};
struct REdge {
    Color color;
    bool forward;  // directed from vertex j to vertex j+1
};

struct Stub {
    Color color;
    bool out;
    bool mono;
    int vertex;
    int slot;
};
struct Tok {
    bool corner;  // essential corner
    Stub stub;
};

struct Pool {
    int x = 0, o = 0, b = 0;
    bool empty() const { return x == 0 && o == 0 && b == 0; }
};

struct Balance {
    int out[3] = {0, 0, 0}, in[3] = {0, 0, 0};
};
Balance balance(const std::vector<Tok>& t, size_t from, size_t to) {
    Balance r;
    for (size_t i = from; i < to; ++i) {
        if (t[i].corner) continue;
        int c = static_cast<int>(t[i].stub.color);
        (t[i].stub.out ? r.out : r.in)[c]++;
    }
    return r;
}
constexpr int S = static_cast<int>(Color::Solid), B = static_cast<int>(Color::Bold), D = static_cast<int>(Color::Dotted);

// pool fitting a region that holds o circles, if any
std::optional<Pool> fit(const Balance& r, int o) {
    int x = r.in[D] + 2 * o - r.out[D];
    int b3 = r.out[B] + 2 * o - r.in[B];
    if (x < 0 || b3 < 0 || b3 % 3) return std::nullopt;
    int b = b3 / 3;
    if (r.out[S] + 3 * b != r.in[S] + x) return std::nullopt;
    return Pool{x, o, b};
}

struct Budget {};

struct PlacedEdge {
    Stub a, b;
};
struct PlacedVertex {
    Kind kind;
};

class Searcher {
public:
    Searcher(int first_id, long budget_ms)
        : next_id_(first_id), deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms)) {}

    bool solve(const std::vector<Tok>& toks, Pool pool) {
        if (++nodes_ % 2048 == 0 && std::chrono::steady_clock::now() > deadline_) throw Budget{};
        bool has_stub = false, has_corner = false;
        for (const auto& t : toks) (t.corner ? has_corner : has_stub) = true;
        if (!has_stub) return pool.empty() && has_corner;
        if (!has_corner && pool.empty()) return false;

        auto [rot, key] = canonical(toks, pool);
        if (failed_.count(key)) return false;
        std::vector<Tok> t(toks.begin() + static_cast<long>(rot), toks.end());
        t.insert(t.end(), toks.begin(), toks.begin() + static_cast<long>(rot));
        size_t first = 0;
        while (t[first].corner) ++first;
        std::rotate(t.begin(), t.begin() + static_cast<long>(first), t.end());
        const Stub s = t[0].stub;

        const size_t mark_e = edges_.size(), mark_v = placed_.size();
        const int mark_id = next_id_;
        auto undo = [&] {
            edges_.resize(mark_e);
            placed_.resize(mark_v);
            next_id_ = mark_id;
        };

        // join s to another stub on the boundary
        for (size_t j = 1; j < t.size(); ++j) {
            if (t[j].corner) continue;
            const Stub& u = t[j].stub;
            if (u.color != s.color || u.out == s.out || (u.mono && s.mono)) continue;
            std::vector<Tok> inner(t.begin() + 1, t.begin() + static_cast<long>(j));
            std::vector<Tok> outer(t.begin() + static_cast<long>(j) + 1, t.end());
            Balance bi = balance(inner, 0, inner.size());
            for (int o1 = 0; o1 <= pool.o; ++o1) {
                auto p1 = fit(bi, o1);
                if (!p1 || p1->x > pool.x || p1->b > pool.b) continue;
                Pool p2{pool.x - p1->x, pool.o - o1, pool.b - p1->b};
                edges_.push_back({s, u});
                if (solve(inner, *p1) && solve(outer, p2)) return true;
                undo();
            }
        }
        // join s to a new interior vertex
        const Kind kinds[3] = {Kind::Cross, Kind::Circle, Kind::Dot};
        for (Kind k : kinds) {
            int& avail = k == Kind::Cross ? pool.x : k == Kind::Circle ? pool.o : pool.b;
            if (!avail) continue;
            if (s.color != (s.out ? in_color(k) : out_color(k))) continue;
            const int deg = valence(k);
            const int id = next_id_++;
            placed_.push_back({k});
            const bool slot0_out = !s.out;
            std::vector<Tok> grown;
            grown.push_back({true, {}});
            for (int q = deg - 1; q >= 1; --q) {
                bool out = (q % 2 == 0) == slot0_out;
                grown.push_back({false, {out ? out_color(k) : in_color(k), out, false, id, q}});
                grown.push_back({true, {}});
            }
            edges_.push_back({s, {s.color, slot0_out, false, id, 0}});
            grown.insert(grown.end(), t.begin() + 1, t.end());
            --avail;
            bool ok = solve(grown, pool);
            ++avail;
            if (ok) return true;
            undo();
        }
        failed_.insert(key);
        return false;
    }

    long nodes() const { return nodes_; }
    const std::vector<PlacedEdge>& edges() const { return edges_; }
    const std::vector<PlacedVertex>& placed() const { return placed_; }

private:
    static char code(const Tok& t) {
        if (t.corner) return 'Z';
        return static_cast<char>('a' + static_cast<int>(t.stub.color) * 4 + (t.stub.out ? 2 : 0) + (t.stub.mono ? 1 : 0));
    }
    static std::pair<size_t, std::string> canonical(const std::vector<Tok>& toks, const Pool& p) {
        std::string s;
        for (const auto& t : toks) s += code(t);
        const size_t n = s.size();
        std::string dbl = s + s;
        size_t best = 0;
        for (size_t r = 1; r < n; ++r)
            if (dbl.compare(r, n, dbl, best, n) < 0) best = r;
        std::string key = dbl.substr(best, n) + "|" + std::to_string(p.x) + "," + std::to_string(p.o) + "," +
                          std::to_string(p.b);
        return {best, key};
    }

    int next_id_;
    std::chrono::steady_clock::time_point deadline_;
    long nodes_ = 0;
    std::unordered_set<std::string> failed_;
    std::vector<PlacedEdge> edges_;
    std::vector<PlacedVertex> placed_;
};

SearchResult fail(std::string why) {
    SearchResult r;
    r.status = SearchStatus::NotCompletable;
    r.reason = std::move(why);
    return r;
}

}  // namespace

SearchResult search_completion(const RealGraph& rg, int n, long budget_ms) {
    if (n < 1) throw TrigonalError("degree must be positive");
    const size_t nv = rg.vertices.size();
    if (rg.edges.size() != nv) throw TrigonalError("real graph needs one edge per vertex");
    for (Kind k : rg.vertices)
        if (k == Kind::Mono) throw TrigonalError("real graph lists essential vertices only");

    // real cycle, with monochrome vertices where the orientation turns
    std::vector<RVertex> rv;
    std::vector<REdge> re;
    if (nv == 0) {
        rv = {{Kind::Mono, rg.circle}, {Kind::Mono, rg.circle}};
        re = {{rg.circle, true}, {rg.circle, false}};
    }
    for (size_t i = 0; i < nv; ++i) {
        Kind a = rg.vertices[i], b = rg.vertices[(i + 1) % nv];
        Color c = rg.edges[i];
        if (!touches(a, c) || !touches(b, c))
            throw TrigonalError("edge " + std::to_string(i) + " has a colour its ends cannot carry");
        rv.push_back({a, Color::Solid});
        bool a_out = c == out_color(a), b_out = c == out_color(b);
        if (a_out != b_out) {
            re.push_back({c, a_out});
        } else {
            re.push_back({c, a_out});
            rv.push_back({Kind::Mono, c});
            re.push_back({c, !b_out});
        }
    }
    const int m = static_cast<int>(rv.size());

    int rx = 0, ro = 0, rb = 0;
    for (const auto& v : rv) {
        if (v.kind == Kind::Cross) ++rx;
        if (v.kind == Kind::Circle) ++ro;
        if (v.kind == Kind::Dot) ++rb;
    }
    if (rx > 6 * n || (6 * n - rx) % 2) return fail("real zeros of the discriminant do not fit degree 6n");
    if (ro > 3 * n || (3 * n - ro) % 2) return fail("real zeros of b3 do not fit degree 3n");
    if (rb > 2 * n || (2 * n - rb) % 2) return fail("real zeros of b2 do not fit degree 2n");
    Pool pool{(6 * n - rx) / 2, (3 * n - ro) / 2, (2 * n - rb) / 2};

    // stubs on the upper side; positions counterclockwise from the right real edge
    std::vector<std::vector<bool>> dir(m);
    std::vector<Tok> toks;
    for (int j = 0; j < m; ++j) {
        const auto& v = rv[j];
        const int deg = valence(v.kind), k = deg / 2 - 1;
        bool right_out = re[j].forward;
        bool left_out = !re[(j + m - 1) % m].forward;
        dir[j].resize(deg);
        for (int p = 0; p < deg; ++p) dir[j][p] = (p % 2 == 0) == right_out;
        if (dir[j][k + 1] != left_out) return fail("real vertex " + std::to_string(j) + " cannot alternate");
        bool ess = v.kind != Kind::Mono;
        if (ess) toks.push_back({true, {}});
        for (int p = k; p >= 1; --p) {
            bool out = dir[j][p];
            Color c = ess ? (out ? out_color(v.kind) : in_color(v.kind)) : v.color;
            toks.push_back({false, {c, out, !ess, j, p}});
            if (ess) toks.push_back({true, {}});
        }
    }
    {
        Balance all = balance(toks, 0, toks.size());
        auto p = fit(all, pool.o);
        if (!p || p->x != pool.x || p->b != pool.b) return fail("stub colours do not balance the interior vertices");
    }

    Searcher srch(m, budget_ms);
    SearchResult res;
    try {
        bool ok = srch.solve(toks, pool);
        res.nodes = srch.nodes();
        if (!ok) {
            res.status = SearchStatus::NotCompletable;
            res.reason = "exhausted";
            return res;
        }
    } catch (const Budget&) {
        res.status = SearchStatus::Unknown;
        res.reason = "budget exhausted";
        res.nodes = srch.nodes();
        return res;
    }

    // assemble the symmetric graph
    const int inner = static_cast<int>(srch.placed().size());
    Completion c;
    c.n = n;
    c.vertices.resize(m + 2 * inner);
    std::vector<std::vector<int>> slots(m + 2 * inner);
    for (int j = 0; j < m; ++j) {
        c.vertices[j] = {rv[j].kind, true, rv[j].color, j};
        slots[j].assign(valence(rv[j].kind), -1);
    }
    for (int i = 0; i < inner; ++i) {
        Kind k = srch.placed()[i].kind;
        c.vertices[m + i] = {k, false, Color::Solid, m + inner + i};
        c.vertices[m + inner + i] = {k, false, Color::Solid, m + i};
        slots[m + i].assign(valence(k), -1);
        slots[m + inner + i].assign(valence(k), -1);
    }
    auto mirror_v = [&](int v) { return v < m ? v : v < m + inner ? v + inner : v - inner; };
    for (int j = 0; j < m; ++j) {
        int id = static_cast<int>(c.edges.size());
        int to = (j + 1) % m;
        Edge e{re[j].forward ? j : to, re[j].forward ? to : j, re[j].color, true, id};
        c.edges.push_back(e);
        slots[j][0] = id;
        slots[to][valence(rv[to].kind) / 2] = id;
    }
    for (const auto& pe : srch.edges()) {
        const Stub& from = pe.a.out ? pe.a : pe.b;
        const Stub& to = pe.a.out ? pe.b : pe.a;
        int id = static_cast<int>(c.edges.size());
        c.edges.push_back({from.vertex, to.vertex, from.color, false, id + 1});
        c.edges.push_back({mirror_v(from.vertex), mirror_v(to.vertex), from.color, false, id});
        slots[from.vertex][from.slot] = id;
        slots[to.vertex][to.slot] = id;
        for (const Stub* st : {&from, &to}) {
            int v = st->vertex;
            if (v < m) {
                int deg = valence(rv[v].kind);
                slots[v][deg - st->slot] = id + 1;
            } else {
                int deg = valence(c.vertices[v].kind);
                slots[v + inner][(deg - st->slot) % deg] = id + 1;
            }
        }
    }
    c.rotation = std::move(slots);
    for (const auto& r : c.rotation)
        for (int e : r)
            if (e < 0) throw TrigonalError("internal: unfilled stub in completion");
    res.status = SearchStatus::Found;
    res.completion = std::move(c);
    return res;
}

}  // namespace ovalis::trigonal
