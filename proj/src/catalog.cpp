#include "ovalis/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <sstream>

#include "ovalis/enumerate.hpp"

#ifndef OVALIS_DATA_DIR
#define OVALIS_DATA_DIR "data"
#endif

namespace ovalis {

using nlohmann::json;

std::string to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::RealizedSymmetric: return "RealizedSymmetric";
        case EntryStatus::Realized: return "Realized";
        case EntryStatus::SymplecticOnly: return "SymplecticOnly";
        case EntryStatus::AdmissibleOpen: return "AdmissibleOpen";
        case EntryStatus::Prohibited: return "Prohibited";
    }
    return "?";
}

bool RealizedRecord::realized_at(int k) const {
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) return false;
    if (k == 4) return labels.count("o") || labels.count("d");
    return labels.count("o*") || labels.count("d*");
}

bool RealizedRecord::symmetric_at(int k) const {
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) return false;
    return labels.count(k == 4 ? "o" : "o*") > 0;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open " + path);
    std::vector<Line> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back({n, line});
    }
    return out;
}

[[noreturn]] void bad_line(const std::string& file, int n, const std::string& what) {
    throw CatalogError(file + ":" + std::to_string(n) + ": " + what);
}

// fields = 0 passes the whole line as one field
void for_records(const std::string& file, size_t fields,
                 const std::function<void(const std::vector<std::string>&, int)>& body) {
    for (const auto& l : read_lines(file)) {
        auto p = fields ? split(l.text, ';') : std::vector<std::string>{l.text};
        if (fields && p.size() != fields) bad_line(file, l.number, "expected " + std::to_string(fields) + " fields");
        try {
            body(p, l.number);
        } catch (const ParseError& e) {
            bad_line(file, l.number, std::string("bad scheme: ") + e.what());
        } catch (const CatalogError& e) {
            bad_line(file, l.number, e.what());
        } catch (const std::logic_error&) {
            bad_line(file, l.number, "bad number");
        }
    }
}

std::vector<int> parse_ks(const std::string& s) {
    std::vector<int> ks;
    for (const auto& p : split(s, ',')) ks.push_back(std::stoi(p));
    return ks;
}

std::set<std::string> parse_labels(const std::string& s) {
    std::set<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) {
        if (w != "o" && w != "o*" && w != "d" && w != "d*") throw CatalogError("unknown label '" + w + "'");
        out.insert(w);
    }
    return out;
}

bool empty_sphere(const Forest& f) { return f.empty(); }

int total_ovals(const Scheme& s) {
    int n = oval_count(s.rp2);
    for (const auto& f : s.spheres) n += oval_count(f);
    return n;
}

Scheme fit_to_k(const Scheme& s, int k) {
    if (s.k() > k) {
        auto t = drop_to_k(s, k);
        if (!t) throw CatalogError("scheme has more than " + std::to_string(k) + " non-empty spheres");
        return *t;
    }
    return s.k() < k ? padded(s, k) : s;
}

// single letters a, b, c in a pattern are replaced by numbers
std::string substitute(const std::string& pattern, const std::map<std::string, long>& vars) {
    std::string out;
    for (size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        bool lone = std::isalpha(static_cast<unsigned char>(c)) &&
                    (i == 0 || !std::isalpha(static_cast<unsigned char>(pattern[i - 1]))) &&
                    (i + 1 == pattern.size() || !std::isalpha(static_cast<unsigned char>(pattern[i + 1])));
        auto it = vars.find(std::string(1, c));
        if (lone && it != vars.end())
            out += std::to_string(it->second);
        else
            out += c;
    }
    return out;
}

// every instance of a pattern record, as scheme text
std::vector<std::string> instances(const LastChapterRecord& r) {
    std::vector<std::string> vars;
    for (const char* v : {"a", "b", "c"})
        if (substitute(r.pattern, {{v, 0}}) != r.pattern) vars.push_back(v);
    std::vector<std::string> out;
    std::map<std::string, long> val;
    constexpr int bound = 12;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == vars.size()) {
            if (r.condition.eval(val)) out.push_back(substitute(r.pattern, val));
            return;
        }
        for (int x = 0; x <= bound; ++x) {
            val[vars[i]] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::optional<std::string> lastchapter_anchor(const Catalog& c, const std::string& code, int k, bool refined) {
    for (const auto& r : c.lastchapter) {
        if (r.refined != refined) continue;
        for (const auto& text : instances(r)) {
            if (refined) {
                if (canonical_code(parse_refined(text)) == code) return r.anchor;
            } else {
                auto s = drop_to_k(parse_scheme(text, Surface::DP1), k);
                if (s && canonical_code(*s) == code) return r.anchor;
            }
        }
    }
    return std::nullopt;
}

std::map<std::string, long> family_vars(const FamilyParams& p) {
    return {{"d", p.d}, {"k1", p.k1}, {"k2", p.k2}, {"h1", p.h[0]}, {"h2", p.h[1]}, {"h3", p.h[2]}, {"h4", p.h[3]}};
}

void check_k_d(Surface surface, int k, int d) {
    int lo = surface == Surface::DP2 ? 1 : 0;
    if (k < lo || k > 4) throw CatalogError("invalid k=" + std::to_string(k));
    if (d < 1) throw CatalogError("invalid class d=" + std::to_string(d));
}

CatalogEntry dp2_status(const Catalog& c, const Scheme& s, int k, int d, const Knobs& knobs) {
    CatalogEntry e;
    e.surface = Surface::DP2;
    e.k = k;
    e.d = d;
    e.code = canonical_code(s);
    e.scheme = print_canonical(s);
    e.verdict = dp2_verdict(s, k, d, knobs);
    if (d == 3) {
        for (const auto& r : c.realized3) {
            if (!r.realized_at(k)) continue;
            auto t = drop_to_k(r.scheme, k);
            if (!t || canonical_code(*t) != e.code) continue;
            e.status = r.symmetric_at(k) ? EntryStatus::RealizedSymmetric : EntryStatus::Realized;
            for (const auto& l : r.labels)
                if ((k == 4) == (l.back() != '*')) e.labels.insert(l);
            e.provenance = r.anchor;
            return e;
        }
    }
    for (const auto& r : c.symplectic) {
        if (r.k != k || r.d != d) continue;
        auto t = drop_to_k(r.scheme, k);
        if (t && canonical_code(*t) == e.code) {
            e.status = EntryStatus::SymplecticOnly;
            e.provenance = r.anchor;
            return e;
        }
    }
    if (k == 4 && d >= 5 && total_ovals(s) == 2 * d + 1) {
        bool found = false;
        for (const auto& p : family_parameters(c, d))
            for (const auto& row : c.family) {
                auto x = expand_family(c, row.id, p);
                if (canonical_code(x.scheme) != e.code) continue;
                if (!found) e.provenance = "table1 row (" + std::to_string(row.id) + ")";
                found = true;
                e.nonsymmetric = e.nonsymmetric || x.forced_nonsymmetric;
            }
        if (found) {
            e.status = EntryStatus::Realized;
            e.labels.insert("d");
            return e;
        }
    }
    e.status = e.verdict.prohibited() ? EntryStatus::Prohibited : EntryStatus::AdmissibleOpen;
    return e;
}

CatalogEntry dp1_status(const Catalog& c, const Scheme& s, int k, int d) {
    CatalogEntry e;
    e.surface = Surface::DP1;
    e.k = k;
    e.d = d;
    e.code = canonical_code(s);
    e.scheme = print_canonical(s);
    e.verdict = dp1_verdict(s, k, d);
    std::optional<std::string> anchor;
    if (d == 2) anchor = lastchapter_anchor(c, e.code, k, false);
    if (anchor) {
        e.status = EntryStatus::Realized;
        e.provenance = *anchor;
    } else if (e.verdict.prohibited()) {
        e.status = EntryStatus::Prohibited;
    } else if (d <= 3) {
        e.status = EntryStatus::Realized;
        e.provenance = "DP1 classification, class <= 3";
    }
    return e;
}

}  // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("OVALIS_DATA"); env && *env) return env;
    return OVALIS_DATA_DIR;
}

std::optional<Scheme> drop_to_k(const Scheme& s, int k) {
    if (s.k() < k) return padded(s, k);
    Scheme t = s;
    int extra = s.k() - k;
    for (int i = t.k() - 1; i >= 0 && extra > 0; --i)
        if (empty_sphere(t.spheres[i])) {
            t.spheres.erase(t.spheres.begin() + i);
            --extra;
        }
    if (extra > 0) return std::nullopt;
    return t;
}

Catalog Catalog::load(const std::string& dir) {
    Catalog c;
    std::string f = dir + "/realized3.txt";
    for_records(f, 4, [&](const std::vector<std::string>& p, int) {
        RealizedRecord r;
        r.ks = parse_ks(p[0]);
        r.text = p[1];
        r.scheme = parse_scheme(p[1], Surface::DP2);
        r.labels = parse_labels(p[2]);
        r.anchor = p[3];
        c.realized3.push_back(std::move(r));
    });
    f = dir + "/knot4.txt";
    for_records(f, 3, [&](const std::vector<std::string>& p, int) {
        c.knot4.push_back({parse_ks(p[0]), p[1], parse_scheme(p[1], Surface::DP2), p[2]});
    });
    f = dir + "/symplectic.txt";
    for_records(f, 4, [&](const std::vector<std::string>& p, int) {
        c.symplectic.push_back({std::stoi(p[0]), std::stoi(p[1]), p[2], parse_scheme(p[2], Surface::DP2), p[3]});
    });
    f = dir + "/lastchapter.txt";
    for_records(f, 5, [&](const std::vector<std::string>& p, int) {
        if (p[1] != "plain" && p[1] != "refined") throw CatalogError("kind must be plain or refined");
        c.lastchapter.push_back({std::stoi(p[0]), p[1] == "refined", p[2], Condition::parse(p[3]), p[4]});
    });
    f = dir + "/family.txt";
    for_records(f, 0, [&](const std::vector<std::string>& p, int) {
        const std::string& text = p[0];
        size_t sp = text.find(' ');
        std::string key = text.substr(0, sp), rest = sp == std::string::npos ? "" : trim(text.substr(sp));
        if (key == "base") {
            c.family_base.push_back(Condition::parse(rest));
        } else if (key == "row") {
            c.family.push_back({std::stoi(rest), "", {}});
        } else if (key == "template" && !c.family.empty()) {
            c.family.back().templ = rest;
        } else if (key == "extra" && !c.family.empty()) {
            c.family.back().extra.push_back(Condition::parse(rest));
        } else {
            throw CatalogError("unexpected '" + key + "'");
        }
    });
    return c;
}

Catalog Catalog::load_default() { return load(default_data_dir()); }

const FamilyRow& Catalog::row(int id) const {
    for (const auto& r : family)
        if (r.id == id) return r;
    throw CatalogError("no family row " + std::to_string(id));
}

CatalogEntry status(const Catalog& c, const std::string& text, Surface surface, int k, int d, const Knobs& knobs) {
    check_k_d(surface, k, d);
    Scheme s = fit_to_k(parse_scheme(text, surface), k);
    return surface == Surface::DP2 ? dp2_status(c, s, k, d, knobs) : dp1_status(c, s, k, d);
}

CatalogEntry refined_status(const Catalog& c, const std::string& text, int d) {
    check_k_d(Surface::DP1, 4, d);
    RefinedScheme r = parse_refined(text);
    CatalogEntry e;
    e.surface = Surface::DP1;
    e.k = 4;
    e.d = d;
    e.code = canonical_code(r);
    e.scheme = print_canonical(r);
    e.verdict = refined_verdict(r, d);
    std::optional<std::string> anchor;
    if (d == 2) anchor = lastchapter_anchor(c, e.code, 4, true);
    if (anchor) {
        e.status = EntryStatus::Realized;
        e.provenance = *anchor;
    } else if (e.verdict.prohibited()) {
        e.status = EntryStatus::Prohibited;
    } else if (d <= 3) {
        e.status = EntryStatus::Realized;
        e.provenance = "DP1 refined classification, class <= 3";
    }
    return e;
}

std::vector<FamilyParams> family_parameters(const Catalog& c, int d) {
    std::vector<FamilyParams> out;
    if (d < 5) return out;
    for (int k1 = 0; k1 <= d - 4; ++k1)
        for (int h1 = 0; h1 <= d - 1; ++h1)
            for (int h2 = 0; h1 + h2 <= d - 1; ++h2)
                for (int h3 = 0; h1 + h2 + h3 <= d - 1; ++h3) {
                    FamilyParams p{d, k1, d - 4 - k1, {h1, h2, h3, d - 1 - h1 - h2 - h3}};
                    auto vars = family_vars(p);
                    bool ok = true;
                    for (const auto& b : c.family_base) ok = ok && b.eval(vars);
                    if (ok) out.push_back(p);
                }
    return out;
}

FamilyExpansion expand_family(const Catalog& c, int row_id, const FamilyParams& p) {
    const FamilyRow& row = c.row(row_id);
    auto vars = family_vars(p);
    for (const auto& [name, v] : vars)
        if (v < 0) throw CatalogError("constraint violated: " + name + " >= 0");
    for (const auto& b : c.family_base)
        if (!b.eval(vars)) throw CatalogError("constraint violated: " + b.text());

    // N(expr, S): evaluate the depth expression
    std::string text;
    const std::string& t = row.templ;
    for (size_t i = 0; i < t.size();) {
        if (t.compare(i, 2, "N(") == 0) {
            size_t comma = t.find(',', i);
            if (comma == std::string::npos) throw CatalogError("bad template " + t);
            long h = eval_expression(t.substr(i + 2, comma - i - 2), vars);
            text += "N(" + std::to_string(h) + ",";
            i = comma + 1;
        } else {
            text += t[i++];
        }
    }
    FamilyExpansion x;
    x.row = row_id;
    x.text = text;
    try {
        x.scheme = parse_scheme(text, Surface::DP2);
    } catch (const ParseError& e) {
        throw CatalogError("template of row " + std::to_string(row_id) + " expands to bad text '" + text + "': " + e.what());
    }
    x.forced_nonsymmetric = true;
    for (const auto& cond : row.extra)
        if (!cond.eval(vars)) {
            x.forced_nonsymmetric = false;
            x.failed_extra.push_back(cond.text());
        }
    x.mirror_free = true;
    for (const auto& f : x.scheme.spheres) x.mirror_free = x.mirror_free && !has_mirror(f);
    x.ovals = total_ovals(x.scheme);
    x.cross_check = x.mirror_free && x.ovals == 2 * p.d + 1;
    return x;
}

bool Audit::pass(const std::string& id) const {
    for (const auto& l : lines)
        if (l.id == id) return l.pass;
    return false;
}

Audit validate(const Catalog& c, const Knobs& knobs) {
    Audit a;
    auto count = [&](int k, bool symmetric) {
        int n = 0;
        for (const auto& r : c.realized3) n += symmetric ? r.symmetric_at(k) : r.realized_at(k);
        return n;
    };
    {
        int r = count(4, false), s = count(4, true);
        a.lines.push_back({"a", r == 48 && s == 19,
                           "k=4: " + std::to_string(r) + " realized (expect 48), " + std::to_string(s) + " symmetric (expect 19)"});
    }
    {
        const int want_r[4] = {0, 17, 38, 49}, want_s[4] = {0, 2, 6, 6};
        bool ok = true;
        std::string detail;
        for (int k = 3; k >= 1; --k) {
            int r = count(k, false), s = count(k, true);
            ok = ok && r == want_r[k] && s == want_s[k];
            detail += "k=" + std::to_string(k) + ": " + std::to_string(r) + "/" + std::to_string(want_r[k]) + " realized, " +
                      std::to_string(s) + "/" + std::to_string(want_s[k]) + " symmetric; ";
        }
        a.lines.push_back({"b", ok, detail});
    }
    {
        std::vector<std::string> bad;
        int checked = 0;
        for (const auto& r : c.realized3)
            for (int k : r.ks) {
                if (!r.realized_at(k)) continue;
                auto s = drop_to_k(r.scheme, k);
                ++checked;
                if (!s) {
                    bad.push_back(r.text + " has too few empty spheres for k=" + std::to_string(k));
                    continue;
                }
                auto v = dp2_verdict(*s, k, 3, knobs);
                if (v.prohibited()) bad.push_back(r.text + " at k=" + std::to_string(k) + " prohibited by " + v.obstruction);
            }
        std::string detail = std::to_string(checked) + " (scheme, k) pairs checked";
        for (const auto& b : bad) detail += "; " + b;
        a.lines.push_back({"c", bad.empty(), detail});
    }
    {
        EnumSpec spec;
        spec.k = 4;
        spec.d = 3;
        spec.l = 8;
        spec.apply_obstructions = true;
        spec.knobs = knobs;
        std::set<std::string> admissible;
        for (const auto& e : gen_dp2_schemes(spec)) admissible.insert(canonical_code(e.scheme));
        int n = 0;
        std::vector<std::string> missing;
        for (const auto& r : c.realized3) {
            if (!r.realized_at(4)) continue;
            ++n;
            if (!admissible.count(canonical_code(r.scheme))) missing.push_back(r.text);
        }
        std::string detail = std::to_string(n) + " realized at k=4 within " + std::to_string(admissible.size()) + " admissible";
        for (const auto& m : missing) detail += "; missing " + m;
        a.lines.push_back({"d", missing.empty(), detail});
    }
    {
        std::vector<std::string> bad;
        for (const auto& r : c.knot4) {
            for (int k : r.ks) {
                auto s = drop_to_k(r.scheme, k);
                if (!s) {
                    bad.push_back(r.text + " does not fit k=" + std::to_string(k));
                    continue;
                }
                std::string code = canonical_code(*s);
                for (const auto& q : c.realized3) {
                    auto t = drop_to_k(q.scheme, k);
                    if (q.realized_at(k) && t && canonical_code(*t) == code)
                        bad.push_back(r.text + " is listed as realized at k=" + std::to_string(k));
                }
            }
            auto v = dp2_verdict(padded(r.scheme, 4), 4, 3, knobs);
            if (!v.prohibited()) a.knot4_flags.push_back(r.text);
        }
        std::string detail = std::to_string(c.knot4.size()) + " entries; " + std::to_string(a.knot4_flags.size()) +
                             " admissible at k=4 (flagged)";
        for (const auto& f : a.knot4_flags) detail += "; flag " + f;
        for (const auto& b : bad) detail += "; " + b;
        a.lines.push_back({"e", bad.empty(), detail});
    }
    {
        std::vector<std::string> bad;
        int plain = 0, refined = 0;
        for (int d = 1; d <= 3; ++d) {
            for (int k = 0; k <= 4; ++k) {
                EnumSpec spec;
                spec.surface = Surface::DP1;
                spec.k = k;
                spec.d = d;
                spec.apply_obstructions = true;
                for (const auto& e : gen_dp1_schemes(spec)) {
                    ++plain;
                    auto st = dp1_status(c, e.scheme, k, d);
                    if (st.status != EntryStatus::Realized) bad.push_back(st.scheme + " (k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
                }
            }
            EnumSpec spec;
            spec.surface = Surface::DP1;
            spec.k = 4;
            spec.d = d;
            spec.refined = true;
            spec.apply_obstructions = true;
            for (const auto& e : gen_dp1_refined(spec)) {
                ++refined;
                auto st = refined_status(c, print_canonical(e.scheme), d);
                if (st.status != EntryStatus::Realized) bad.push_back("refined " + st.scheme + " (d=" + std::to_string(d) + ")");
            }
        }
        for (const auto& r : c.lastchapter)
            for (const auto& text : instances(r)) {
                bool prohibited = r.refined ? refined_verdict(parse_refined(text), 2).prohibited()
                                            : dp1_verdict(parse_scheme(text, Surface::DP1), 4, 2).prohibited();
                if (prohibited) bad.push_back(r.anchor + " instance " + text + " is prohibited");
            }
        std::string detail = std::to_string(plain) + " plain and " + std::to_string(refined) + " refined admissible schemes in class <= 3";
        for (const auto& b : bad) detail += "; not realized: " + b;
        a.lines.push_back({"f", bad.empty(), detail});
    }
    return a;
}

json to_json(const Audit& a) {
    json lines = json::array();
    for (const auto& l : a.lines) lines.push_back({{"id", l.id}, {"pass", l.pass}, {"detail", l.detail}});
    return {{"checks", lines}, {"knot4_flags", a.knot4_flags}};
}

json to_json(const CatalogEntry& e) {
    return {{"scheme", e.scheme},
            {"code", e.code},
            {"surface", e.surface == Surface::DP2 ? "dp2" : "dp1"},
            {"k", e.k},
            {"d", e.d},
            {"status", to_string(e.status)},
            {"labels", e.labels},
            {"provenance", e.provenance},
            {"nonsymmetric", e.nonsymmetric},
            {"verdict", to_json(e.verdict)}};
}

json to_json(const FamilyExpansion& e) {
    return {{"row", e.row},
            {"text", e.text},
            {"scheme", print_canonical(e.scheme)},
            {"ovals", e.ovals},
            {"forced_nonsymmetric", e.forced_nonsymmetric},
            {"failed_extra", e.failed_extra},
            {"mirror_free", e.mirror_free},
            {"cross_check", e.cross_check}};
}

namespace {

json table_json(const Catalog& c, const std::string& table) {
    json rows = json::array();
    auto join_ks = [](const std::vector<int>& ks) {
        std::string s;
        for (int k : ks) s += (s.empty() ? "" : ",") + std::to_string(k);
        return s;
    };
    if (table == "realized3") {
        for (const auto& r : c.realized3)
            rows.push_back({{"k", join_ks(r.ks)}, {"scheme", r.text}, {"labels", r.labels}, {"anchor", r.anchor}});
    } else if (table == "knot4") {
        for (const auto& r : c.knot4) rows.push_back({{"k", join_ks(r.ks)}, {"scheme", r.text}, {"anchor", r.anchor}});
    } else if (table == "symplectic") {
        for (const auto& r : c.symplectic)
            rows.push_back({{"k", std::to_string(r.k)}, {"d", r.d}, {"scheme", r.text}, {"anchor", r.anchor}});
    } else if (table == "lastchapter") {
        std::map<int, json> by_row;
        for (const auto& r : c.lastchapter) {
            auto& j = by_row[r.row];
            j["row"] = r.row;
            j["anchor"] = r.anchor;
            std::string item = r.pattern + (r.condition.empty() ? "" : " with " + r.condition.text());
            j[r.refined ? "refined" : "plain"].push_back(item);
        }
        for (auto& [id, j] : by_row) rows.push_back(j);
    } else if (table == "table1") {
        for (const auto& r : c.family) {
            json extra = json::array();
            for (const auto& e : r.extra) extra.push_back(e.text());
            rows.push_back({{"row", r.id}, {"template", r.templ}, {"extra", extra}});
        }
    } else {
        throw CatalogError("unknown table '" + table + "' (realized3, knot4, symplectic, lastchapter, table1)");
    }
    return rows;
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + cell(x);
        return s;
    }
    return v.dump();
}

}  // namespace

int report_rows(const Catalog& c, const std::string& table) { return static_cast<int>(table_json(c, table).size()); }

std::string report(const Catalog& c, const std::string& table, bool as_json) {
    json rows = table_json(c, table);
    if (as_json) return json{{"table", table}, {"rows", rows}, {"count", rows.size()}}.dump(2);
    std::vector<std::string> keys;
    if (!rows.empty())
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    if (table == "realized3") keys = {"k", "scheme", "labels", "anchor"};
    if (table == "knot4") keys = {"k", "scheme", "anchor"};
    if (table == "symplectic") keys = {"k", "d", "scheme", "anchor"};
    if (table == "lastchapter") keys = {"row", "plain", "refined", "anchor"};
    if (table == "table1") keys = {"row", "template", "extra"};
    std::vector<size_t> width(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        width[i] = keys[i].size();
        for (const auto& r : rows) width[i] = std::max(width[i], cell(r.value(keys[i], json(""))).size());
    }
    std::ostringstream out;
    out << table << " (" << rows.size() << " rows)\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        out << "\n";
    };
    line(keys);
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& k : keys) cells.push_back(cell(r.value(k, json(""))));
        line(cells);
    }
    return out.str();
}

}  // namespace ovalis
