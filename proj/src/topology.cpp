#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ovalis/topology.hpp"

namespace ovalis {

using nlohmann::json;

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int mod(int a, int n) { return ((a % n) + n) % n; }

// Pieces are surfaces with one or two marked boundary circles, cut into faces
// by arcs. Everything is 0-based internally.
struct PieceArc {
    int slot_a, a, slot_b, b;
    bool sides_known = false;
    int left = -1, right = -1;
    bool through_v = false;
};

struct Piece {
    int n = 0;
    int slots = 1;
    std::vector<std::vector<int>> seg_face;  // [slot][segment]
    int faces = 1;
    std::vector<PieceArc> arcs;
    std::vector<std::pair<int, Forest>> ovals;  // (face, forest)

    int boundary_face(int slot, int seg) const { return n == 0 ? 0 : seg_face[slot][seg]; }
};

void check_matching(int n, const std::vector<std::pair<int, int>>& arcs, const std::string& what) {
    if (n < 0 || n % 2) throw TopologyError(what + ": odd number of crossing points (" + std::to_string(n) + ")");
    if (static_cast<int>(arcs.size()) * 2 != n)
        throw TopologyError(what + ": " + std::to_string(arcs.size()) + " arcs for " + std::to_string(n) + " points");
    std::vector<int> used(n, 0);
    for (auto [a, b] : arcs) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) throw TopologyError(what + ": bad arc endpoint");
        if (used[a - 1]++ || used[b - 1]++) throw TopologyError(what + ": point used twice");
    }
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = std::minmax(arcs[i].first, arcs[i].second);
            auto [c, d] = std::minmax(arcs[j].first, arcs[j].second);
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw TopologyError(what + ": arcs cross");
        }
}

Piece disk_piece(const Disk& d, const std::string& what) {
    check_matching(d.points, d.arcs, what);
    Piece p;
    p.n = d.points;
    const int n = d.points;
    std::vector<int> partner(n);
    for (auto [a, b] : d.arcs) {
        partner[a - 1] = b - 1;
        partner[b - 1] = a - 1;
    }
    p.seg_face.assign(1, std::vector<int>(n, -1));
    p.faces = n == 0 ? 1 : 0;
    for (int s = 0; s < n; ++s) {
        if (p.seg_face[0][s] >= 0) continue;
        for (int x = s; p.seg_face[0][x] < 0; x = partner[(x + 1) % n]) p.seg_face[0][x] = p.faces;
        ++p.faces;
    }
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        int a = d.arcs[i].first - 1, b = d.arcs[i].second - 1;
        PieceArc arc{0, a, 0, b};
        arc.sides_known = true;
        arc.left = p.seg_face[0][mod(a - 1, n)];
        arc.right = p.seg_face[0][a];
        arc.through_v = static_cast<int>(i) == d.through_v;
        p.arcs.push_back(arc);
    }
    for (const auto& [seg, f] : d.ovals) {
        if (n > 0 && (seg < 1 || seg > n)) throw TopologyError(what + ": face segment out of range");
        p.ovals.emplace_back(n == 0 ? 0 : p.seg_face[0][seg - 1], f);
    }
    return p;
}

Piece annulus_piece(const Annulus& an) {
    const int n = an.points;
    if (n < 0 || n % 2) throw TopologyError("annulus: odd number of crossing points");
    Piece p;
    p.n = n;
    p.slots = 2;
    std::vector<std::vector<std::pair<int, int>>> partner(2, std::vector<std::pair<int, int>>(n, {-1, -1}));
    std::vector<std::vector<int>> disp(2, std::vector<int>(n, 0));
    bool crossing = false;
    for (const auto& a : an.arcs) {
        int ca = a.circle_a, pa = a.point_a - 1, cb = a.circle_b, pb = a.point_b - 1;
        if (pa < 0 || pa >= n || pb < 0 || pb >= n || ca < 0 || ca > 1 || cb < 0 || cb > 1)
            throw TopologyError("annulus: bad arc endpoint");
        if (partner[ca][pa].first >= 0 || partner[cb][pb].first >= 0) throw TopologyError("annulus: point used twice");
        partner[ca][pa] = {cb, pb};
        partner[cb][pb] = {ca, pa};
        if (ca != cb) {
            crossing = true;
        } else {
            int span = mod(pb - pa, n);
            disp[ca][pa] = span;
            disp[cb][pb] = -span;
        }
        p.arcs.push_back(PieceArc{ca, pa, cb, pb});
    }
    for (int c = 0; c < 2; ++c)
        for (int x = 0; x < n; ++x)
            if (partner[c][x].first < 0) throw TopologyError("annulus: unmatched point");
    p.seg_face.assign(2, std::vector<int>(n, -1));
    if (n == 0) {
        p.faces = 1;
    } else {
        p.faces = 0;
        std::vector<int> winding;
        for (int c0 = 0; c0 < 2; ++c0)
            for (int s0 = 0; s0 < n; ++s0) {
                if (p.seg_face[c0][s0] >= 0) continue;
                int c = c0, s = s0, w = 0;
                while (p.seg_face[c][s] < 0) {
                    p.seg_face[c][s] = p.faces;
                    // arrive at the far end of the segment, then follow the arc
                    int x = c == 0 ? (s + 1) % n : s;
                    w += c == 0 ? 1 : -1;
                    auto [c2, y] = partner[c][x];
                    w += disp[c][x];
                    s = c2 == 0 ? y : mod(y - 1, n);
                    c = c2;
                }
                winding.push_back(w);
                ++p.faces;
            }
        if (!crossing) {
            // the face running around the core touches both circles
            int outer1 = -1, outer2 = -1;
            for (int f = 0; f < p.faces; ++f) {
                if (winding[f] == n) outer1 = outer1 < 0 ? f : -2;
                if (winding[f] == -n) outer2 = outer2 < 0 ? f : -2;
            }
            if (outer1 < 0 || outer2 < 0) throw TopologyError("annulus: inconsistent arc sides");
            for (auto& row : p.seg_face)
                for (auto& f : row)
                    if (f == outer2) f = outer1;
            // renumber
            std::map<int, int> ids;
            for (auto& row : p.seg_face)
                for (auto& f : row) f = ids.emplace(f, static_cast<int>(ids.size())).first->second;
            p.faces = static_cast<int>(ids.size());
        }
    }
    for (const auto& [where, f] : an.ovals) {
        auto [c, seg] = where;
        if (n > 0 && (seg < 1 || seg > n || c < 0 || c > 1)) throw TopologyError("annulus: face out of range");
        p.ovals.emplace_back(n == 0 ? 0 : p.seg_face[c][seg - 1], f);
    }
    return p;
}

struct Link {
    int piece_a, slot_a, piece_b, slot_b;
    bool reflect;
};

struct Assembled {
    RegionTree tree;
    std::vector<std::vector<int>> region;  // [piece][face] -> tree vertex
    int circles = 0;
    int through_v = 0;
};

void attach(RegionTree& t, int at, const Forest& f) {
    for (const auto& o : f) {
        int v = t.add_vertex();
        t.add_edge(at, v);
        attach(t, v, o.inside);
    }
}

Assembled assemble(const std::vector<Piece>& pieces, const std::vector<Link>& links) {
    std::vector<int> face_off, node_off;
    int faces = 0, nodes = 0;
    for (const auto& p : pieces) {
        face_off.push_back(faces);
        node_off.push_back(nodes);
        faces += p.faces;
        nodes += p.slots * p.n;
    }
    UnionFind ff(faces), nf(std::max(nodes, 1));
    for (const auto& l : links) {
        const Piece& A = pieces[l.piece_a];
        const Piece& B = pieces[l.piece_b];
        if (A.n != B.n) throw TopologyError("boundary point counts differ across the gluing");
        const int n = A.n;
        if (n == 0) {
            ff.unite(face_off[l.piece_a] + A.boundary_face(l.slot_a, 0), face_off[l.piece_b] + B.boundary_face(l.slot_b, 0));
            continue;
        }
        for (int s = 0; s < n; ++s) {
            int t = l.reflect ? mod(n - 2 - s, n) : s;
            ff.unite(face_off[l.piece_a] + A.seg_face[l.slot_a][s], face_off[l.piece_b] + B.seg_face[l.slot_b][t]);
        }
        for (int x = 0; x < n; ++x) {
            int y = l.reflect ? n - 1 - x : x;
            nf.unite(node_off[l.piece_a] + l.slot_a * n + x, node_off[l.piece_b] + l.slot_b * n + y);
        }
    }
    // circles: components of the arc graph on identified points
    UnionFind cf(std::max(nodes, 1));
    for (size_t i = 0; i < pieces.size(); ++i)
        for (const auto& a : pieces[i].arcs)
            cf.unite(nf.find(node_off[i] + a.slot_a * pieces[i].n + a.a), nf.find(node_off[i] + a.slot_b * pieces[i].n + a.b));
    std::map<int, std::pair<int, const PieceArc*>> circle;  // root -> (piece, arc with known sides)
    std::map<int, bool> circle_v;
    for (size_t i = 0; i < pieces.size(); ++i)
        for (const auto& a : pieces[i].arcs) {
            int root = cf.find(nf.find(node_off[i] + a.slot_a * pieces[i].n + a.a));
            auto& slot = circle[root];
            if (!slot.second && a.sides_known) slot = {static_cast<int>(i), &a};
            circle_v[root] = circle_v[root] || a.through_v;
        }
    Assembled out;
    out.circles = static_cast<int>(circle.size());
    for (const auto& [root, rep] : circle) {
        if (!rep.second) throw TopologyError("closed curve made only of annulus arcs");
        if (circle_v[root]) {
            ++out.through_v;
            ff.unite(face_off[rep.first] + rep.second->left, face_off[rep.first] + rep.second->right);
        }
    }
    std::map<int, int> region_id;
    for (int f = 0; f < faces; ++f) region_id.emplace(ff.find(f), static_cast<int>(region_id.size()));
    out.tree = RegionTree(static_cast<int>(region_id.size()));
    for (const auto& [root, rep] : circle) {
        if (circle_v[root]) continue;
        int a = region_id[ff.find(face_off[rep.first] + rep.second->left)];
        int b = region_id[ff.find(face_off[rep.first] + rep.second->right)];
        if (a == b) throw TopologyError("a closed curve does not separate; arcs are inconsistent");
        out.tree.add_edge(a, b);
    }
    // the region graph of disjoint circles on a sphere is a tree
    if (out.tree.vertex_count() - 1 != out.circles - out.through_v)
        throw TopologyError("region structure is not a tree; arcs are inconsistent");
    std::vector<int> seen(out.tree.vertex_count(), 0), stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : out.tree.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != out.tree.vertex_count()) throw TopologyError("region structure is disconnected");
    out.region.resize(pieces.size());
    for (size_t i = 0; i < pieces.size(); ++i)
        for (int f = 0; f < pieces[i].faces; ++f) out.region[i].push_back(region_id[ff.find(face_off[i] + f)]);
    for (size_t i = 0; i < pieces.size(); ++i)
        for (const auto& [f, forest] : pieces[i].ovals) attach(out.tree, out.region[i][f], forest);
    return out;
}

Forest sphere_of(const std::vector<Piece>& pieces, const std::vector<Link>& links) {
    Assembled a = assemble(pieces, links);
    return a.tree.rooted_at(0);
}

Disk checked_copy(const Disk& d) {
    if (d.through_v >= 0) throw TopologyError("a sphere piece cannot carry an arc through the vertex");
    return d;
}

}  // namespace

Forest double_disk(const Disk& d) {
    Piece p = disk_piece(checked_copy(d), "disk");
    return sphere_of({p, p}, {{0, 0, 1, 0, false}});
}

Forest glue_two_disks(const Disk& a, const Disk& b, bool reflect) {
    return sphere_of({disk_piece(a, "first disk"), disk_piece(b, "second disk")}, {{0, 0, 1, 0, reflect}});
}

Forest glue_disks_to_annulus(const Disk& a, const Disk& b, const Annulus& ann, bool swap, bool reflect) {
    std::vector<Piece> pieces{disk_piece(a, "first disk"), disk_piece(b, "second disk"), annulus_piece(ann)};
    int sa = swap ? 1 : 0;
    return sphere_of(pieces, {{0, 0, 2, sa, reflect}, {1, 0, 2, 1 - sa, reflect}});
}

int glued_circle_count(const Disk& a, const Disk& b, bool reflect) {
    std::vector<Piece> pieces{disk_piece(a, "first disk"), disk_piece(b, "second disk")};
    return assemble(pieces, {{0, 0, 1, 0, reflect}}).circles;
}

Scheme glue_degeneration(const MarkedHalf& s, const MarkedHalf& t, int choice, bool reflect) {
    using K = MarkedHalf::Kind;
    Scheme out;
    out.spheres = s.spheres;
    out.spheres.insert(out.spheres.end(), t.spheres.begin(), t.spheres.end());
    if (s.kind == K::None && t.kind == K::None) return out;
    if (s.kind == K::None || t.kind == K::None)
        throw TopologyError("one side has an empty double curve and the other does not");
    if (s.boundary != t.boundary) throw TopologyError("crossing counts differ on the two sides");
    if (s.kind == K::TwoDisks && t.kind == K::TwoDisks) {
        if (choice != 1 && choice != 2) throw TopologyError("gluing two pairs of disks needs --choice 1 or 2");
        const Disk& h_first = choice == 1 ? t.disk1 : t.disk2;
        const Disk& h_second = choice == 1 ? t.disk2 : t.disk1;
        out.spheres.push_back(glue_two_disks(s.disk1, h_first, reflect));
        out.spheres.push_back(glue_two_disks(s.disk2, h_second, reflect));
        return out;
    }
    if (s.kind == K::Annulus && t.kind == K::Annulus) throw TopologyError("both sides are annuli");
    const MarkedHalf& disks = s.kind == K::TwoDisks ? s : t;
    const MarkedHalf& ring = s.kind == K::Annulus ? s : t;
    if (choice != 0 && choice != 1 && choice != 2) throw TopologyError("choice must be 1 or 2");
    out.spheres.push_back(glue_disks_to_annulus(disks.disk1, disks.disk2, ring.annulus, choice == 2, reflect));
    return out;
}

std::vector<std::pair<int, Scheme>> enumerate_gluings(const MarkedHalf& s, const MarkedHalf& t, bool reflect) {
    if (s.kind == MarkedHalf::Kind::None && t.kind == MarkedHalf::Kind::None)
        return {{0, glue_degeneration(s, t, 0, reflect)}};
    return {{1, glue_degeneration(s, t, 1, reflect)}, {2, glue_degeneration(s, t, 2, reflect)}};
}

Scheme dp2_lift(const PlanePair& p) {
    Scheme s;
    for (const auto& d : p.quartic_ovals) s.spheres.push_back(double_disk(d));
    return s;
}

namespace {

Scheme lift_cone(const ConePair& c) {
    Piece v = disk_piece(c.v_region, "vertex region");
    int v_arcs = 0;
    for (const auto& a : v.arcs) v_arcs += a.through_v;
    if (v_arcs > 1) throw TopologyError("more than one arc through the vertex");
    Assembled a = assemble({v, v}, {{0, 0, 1, 0, false}});
    int root;
    if (c.v_region.through_v >= 0) {
        root = a.region[0][v.arcs[c.v_region.through_v].left];
    } else if (v.faces == 1) {
        root = a.region[0][0];
    } else if (c.v_face >= 1 && c.v_face <= v.n) {
        root = a.region[0][v.seg_face[0][c.v_face - 1]];
    } else {
        throw TopologyError("vertex region has arcs but none passes through the vertex; set v_face");
    }
    Scheme s;
    s.surface = Surface::DP1;
    s.pseudo_lines = a.through_v;
    s.rp2 = a.tree.rooted_at(root);
    for (const auto& d : c.cubic_ovals) s.spheres.push_back(double_disk(d));
    return s;
}

}  // namespace

Scheme dp1_lift(const ConePair& c) { return lift_cone(c); }

RefinedScheme dp1_lift_refined(const ConePair& c) {
    if (c.cubic_ovals.size() != 4) throw TopologyError("refined lift needs four ovals on the cubic section");
    if (c.signs.size() != 4) throw TopologyError("refined lift needs positivity labels on every oval");
    Scheme s = lift_cone(c);
    std::vector<Forest> pos, neg;
    for (int i = 0; i < 4; ++i) (c.signs[i] > 0 ? pos : neg).push_back(s.spheres[i]);
    if (pos.size() != 2) throw TopologyError("refined lift needs two positive and two negative ovals");
    RefinedScheme r;
    r.rp2 = s.rp2;
    r.pseudo_lines = s.pseudo_lines;
    r.positive = {pos[0], pos[1]};
    r.negative = {neg[0], neg[1]};
    return r;
}

// JSON

namespace {

Forest forest_field(const json& j) {
    try {
        return parse_forest(j.at("forest").get<std::string>());
    } catch (const ParseError& e) {
        throw TopologyError(std::string("bad forest: ") + e.what());
    }
}

std::pair<std::string, int> face_ref(const json& f) {
    if (f.is_number_integer()) return {"", f.get<int>()};
    std::string s = f.get<std::string>();
    auto colon = s.find(':');
    if (colon == std::string::npos) throw TopologyError("face must look like name:segment");
    return {s.substr(0, colon), std::stoi(s.substr(colon + 1))};
}

}  // namespace

Disk disk_from_json(const json& j) {
    Disk d;
    d.points = j.value("crossings", 0);
    for (const auto& a : j.value("arcs", json::array())) {
        d.arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        if (a.size() > 2 && a.at(2) == "v") {
            if (d.through_v >= 0) throw TopologyError("more than one arc through the vertex");
            d.through_v = static_cast<int>(d.arcs.size()) - 1;
        }
    }
    for (const auto& o : j.value("ovals", json::array())) d.ovals.emplace_back(face_ref(o.at("face")).second, forest_field(o));
    return d;
}

MarkedHalf marked_half_from_json(const json& j) {
    MarkedHalf h;
    h.source = j.value("source", "");
    for (const auto& s : j.value("spheres", json::array())) {
        try {
            h.spheres.push_back(parse_forest(s.get<std::string>()));
        } catch (const ParseError& e) {
            throw TopologyError(std::string("bad sphere: ") + e.what());
        }
    }
    if (!j.contains("marked")) return h;
    const json& m = j.at("marked");
    std::string kind = m.value("kind", "none");
    h.boundary = m.value("boundary", 0);
    if (kind == "none") return h;
    if (kind == "two_disks") {
        h.kind = MarkedHalf::Kind::TwoDisks;
        h.disk1.points = h.disk2.points = h.boundary;
        for (const auto& a : m.value("arcs", json::array())) {
            std::string disk = a.at(2).get<std::string>();
            auto arc = std::make_pair(a.at(0).get<int>(), a.at(1).get<int>());
            if (disk == "disk1")
                h.disk1.arcs.push_back(arc);
            else if (disk == "disk2")
                h.disk2.arcs.push_back(arc);
            else
                throw TopologyError("arc disk must be disk1 or disk2");
        }
        for (const auto& o : m.value("ovals", json::array())) {
            auto [name, seg] = face_ref(o.at("face"));
            if (name == "disk1")
                h.disk1.ovals.emplace_back(seg, forest_field(o));
            else if (name == "disk2")
                h.disk2.ovals.emplace_back(seg, forest_field(o));
            else
                throw TopologyError("face must name disk1 or disk2");
        }
        return h;
    }
    if (kind == "annulus") {
        h.kind = MarkedHalf::Kind::Annulus;
        h.annulus.points = h.boundary;
        for (const auto& a : m.value("arcs", json::array())) {
            std::string type = a.at(2).get<std::string>();
            if (type.size() != 5 || type[2] != '-') throw TopologyError("annulus arc type must be like b1-b2");
            int ca = type.substr(0, 2) == "b1" ? 0 : type.substr(0, 2) == "b2" ? 1 : -1;
            int cb = type.substr(3, 2) == "b1" ? 0 : type.substr(3, 2) == "b2" ? 1 : -1;
            if (ca < 0 || cb < 0) throw TopologyError("annulus arc type must use b1/b2");
            h.annulus.arcs.push_back({ca, a.at(0).get<int>(), cb, a.at(1).get<int>()});
        }
        for (const auto& o : m.value("ovals", json::array())) {
            auto [name, seg] = face_ref(o.at("face"));
            int c = name == "b1" ? 0 : name == "b2" ? 1 : -1;
            if (c < 0) throw TopologyError("annulus face must name b1 or b2");
            h.annulus.ovals.push_back({{c, seg}, forest_field(o)});
        }
        return h;
    }
    throw TopologyError("unknown marked kind '" + kind + "'");
}

PlanePair plane_pair_from_json(const json& j) {
    PlanePair p;
    p.source = j.value("source", "");
    for (const auto& d : j.at("quartic_ovals")) p.quartic_ovals.push_back(disk_from_json(d));
    return p;
}

ConePair cone_pair_from_json(const json& j) {
    ConePair c;
    c.source = j.value("source", "");
    c.v_region = disk_from_json(j.at("v_region"));
    c.v_face = j.at("v_region").value("v_face", -1);
    bool all_signed = true;
    std::vector<int> signs;
    for (const auto& d : j.value("cubic_ovals", json::array())) {
        c.cubic_ovals.push_back(disk_from_json(d));
        std::string sign = d.value("sign", "");
        if (sign == "+")
            signs.push_back(1);
        else if (sign == "-")
            signs.push_back(-1);
        else
            all_signed = false;
    }
    if (all_signed) c.signs = signs;
    return c;
}

}  // namespace ovalis
