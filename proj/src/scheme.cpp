#include <algorithm>
#include <set>

#include "ovalis/scheme.hpp"

namespace ovalis {

Scheme padded(Scheme s, int k) {
    while (s.k() < k) s.spheres.emplace_back();
    return s;
}

RefinedScheme refine(const Scheme& s) {
    if (s.surface != Surface::DP1 || s.k() != 4) throw std::invalid_argument("refine needs a DP1 scheme with k=4");
    RefinedScheme r;
    r.rp2 = s.rp2;
    r.pseudo_lines = s.pseudo_lines;
    r.positive = {s.spheres[0], s.spheres[1]};
    r.negative = {s.spheres[2], s.spheres[3]};
    return r;
}

Scheme forget(const RefinedScheme& r) {
    Scheme s;
    s.surface = Surface::DP1;
    s.rp2 = r.rp2;
    s.pseudo_lines = r.pseudo_lines;
    s.spheres = {r.positive[0], r.positive[1], r.negative[0], r.negative[1]};
    return s;
}

std::string sphere_code(const Forest& f) { return canonical_code(RegionTree::from_forest(f)); }

namespace {

std::string joined_codes(const std::vector<Forest>& spheres) {
    std::vector<std::string> codes;
    for (const auto& f : spheres) codes.push_back(sphere_code(f));
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes) out += (out.empty() ? "" : ",") + c;
    return out;
}

std::string rp2_code(const Forest& rp2, int j) { return (j ? "J" : "") + rooted_code(rp2); }

std::string print_rp2(const Forest& rp2, int j) {
    if (!j) return print_forest(rp2);
    return rp2.empty() ? "J" : "J+" + print_forest(rp2);
}

std::string print_spheres(std::vector<Forest> spheres) {
    std::vector<std::pair<int, std::string>> items;
    for (const auto& f : spheres) items.emplace_back(-oval_count(f), print_sphere(f));
    std::sort(items.begin(), items.end());
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) out += (i ? ":" : "") + items[i].second;
    return out;
}

}  // namespace

std::string canonical_code(const Scheme& s) {
    if (s.surface == Surface::DP2) return "S" + joined_codes(s.spheres);
    return "P" + rp2_code(s.rp2, s.pseudo_lines) + "|" + joined_codes(s.spheres);
}

std::string canonical_code(const RefinedScheme& r) {
    return "R" + rp2_code(r.rp2, r.pseudo_lines) + ";" + joined_codes({r.positive[0], r.positive[1]}) + ";" +
           joined_codes({r.negative[0], r.negative[1]});
}

std::string print_sphere(const Forest& f) { return print_forest(representative_forest(RegionTree::from_forest(f))); }

std::string print_canonical(const Scheme& s) {
    if (s.surface == Surface::DP2) return s.spheres.empty() ? "0" : print_spheres(s.spheres);
    return print_rp2(s.rp2, s.pseudo_lines) + "|" + print_spheres(s.spheres);
}

std::string print_canonical(const RefinedScheme& r) {
    return print_rp2(r.rp2, r.pseudo_lines) + "|" + print_spheres({r.positive[0], r.positive[1]}) + ":" +
           print_spheres({r.negative[0], r.negative[1]});
}

std::vector<Forest> rootings(const Forest& sphere) {
    RegionTree t = RegionTree::from_forest(sphere);
    std::vector<Forest> out;
    std::set<std::string> seen;
    for (int v = 0; v < t.vertex_count(); ++v) {
        Forest f = t.rooted_at(v);
        if (seen.insert(rooted_code(f)).second) out.push_back(std::move(f));
    }
    return out;
}

bool has_mirror(const Forest& sphere) {
    RegionTree t = RegionTree::from_forest(sphere);
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::vector<std::string> kids;
        for (const auto& o : t.rooted_at(v)) kids.push_back(rooted_code(o.inside));
        std::sort(kids.begin(), kids.end());
        if (std::adjacent_find(kids.begin(), kids.end()) != kids.end()) return true;
    }
    return false;
}

ComponentStats component_stats(const Scheme& s) {
    ComponentStats st;
    st.rp2_ovals = oval_count(s.rp2);
    st.pseudo_lines = s.pseudo_lines;
    st.l = st.rp2_ovals + st.pseudo_lines;
    if (st.l > 0) st.t = 1;
    for (const auto& f : s.spheres) {
        int n = oval_count(f);
        st.sphere_ovals.push_back(n);
        st.l += n;
        st.t += n > 0;
    }
    return st;
}

}  // namespace ovalis
