#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ovalis/catalog.hpp"
#include "ovalis/enumerate.hpp"
#include "ovalis/topology.hpp"
#include "ovalis/trigonal.hpp"

using nlohmann::json;
using namespace ovalis;

namespace {

constexpr int exit_input = 2;
constexpr int exit_unknown = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct KnobArgs {
    std::string disjointness = "per-nest";
    bool one_sphere_disjoint = true;

    void add(CLI::App* app) {
        app->add_option("--disjointness", disjointness, "nest disjointness: per-nest, end-disk or edge-disjoint");
        app->add_flag("--one-sphere-disjoint,!--no-one-sphere-disjoint", one_sphere_disjoint,
                      "require disjoint nests in the one-sphere inequality");
    }
    Knobs knobs() const {
        auto d = disjointness_from_string(disjointness);
        if (!d) throw InputError("unknown disjointness '" + disjointness + "'");
        return {*d, one_sphere_disjoint};
    }
};

json scheme_line(const Scheme& s, const Verdict& v) {
    auto st = component_stats(s);
    json j = {{"scheme", print_canonical(s)}, {"l", st.l}, {"t", st.t}, {"verdict", to_string(v.status)}, {"witness", v.witness}};
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    return j;
}

void print_lines(const std::vector<json>& lines, bool as_json, bool count_only) {
    if (count_only) {
        std::cout << lines.size() << "\n";
        return;
    }
    for (const auto& j : lines) {
        if (as_json) {
            std::cout << j.dump() << "\n";
        } else {
            std::cout << j["scheme"].get<std::string>() << "  l=" << j["l"] << " t=" << j["t"] << "  "
                      << j["verdict"].get<std::string>();
            if (j.contains("obstruction")) std::cout << " (" << j["obstruction"].get<std::string>() << ")";
            std::cout << "\n";
        }
    }
    if (as_json)
        std::cout << json{{"count", lines.size()}}.dump() << "\n";
    else
        std::cout << "count: " << lines.size() << "\n";
}

// every obstruction of the dispatcher, one result each
json explain_dp2(const Scheme& s, int k, int d, const Knobs& knobs) {
    json out = json::array();
    auto add = [&](const char* name, const Verdict& v) { out.push_back({{"obstruction", name}, {"result", to_json(v)}}); };
    add("harnack", dp2_harnack(s, d));
    if (k >= 2) add("welschinger_nests", dp2_welschinger_nests(s, d, knobs));
    if (k == 1) add("one_sphere_nests", dp2_one_sphere_nests(s, d, knobs));
    if (k == 4) {
        add("two_nests_k4", dp2_two_nests_k4(s, d));
        add("forbidden_quadruple", dp2_forbidden_quadruple(s, d));
    }
    add("petrovsky", dp2_petrovsky(s, d));
    return out;
}

json explain_dp1(const Scheme& s, int k, int d) {
    json out = json::array();
    auto add = [&](const char* name, const Verdict& v) { out.push_back({{"obstruction", name}, {"result", to_json(v)}}); };
    add("parity", dp1_parity(s, d));
    add("bounds", dp1_bounds(s, d));
    if (k == 4 && d >= 4) add("nest", dp1_nest_obstruction(s, d));
    return out;
}

std::string format_json(const std::string& f) {
    if (f != "json" && f != "text") throw InputError("format must be json or text");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real schemes of curves on real del Pezzo surfaces of degree 2 and 1"};
    app.require_subcommand(1);

    // enum
    auto* en = app.add_subcommand("enum", "enumerate real schemes in a class");
    en->require_subcommand(1);
    int en_k = 4, en_d = 3, en_l = -1, en_cap = 12;
    bool en_adm = false, en_refined = false, en_count = false;
    std::string en_format = "text";
    KnobArgs en_knobs;
    for (auto* sub : {en->add_subcommand("dp2", "degree 2"), en->add_subcommand("dp1", "degree 1")}) {
        sub->add_option("--k", en_k, "number of spheres")->required();
        sub->add_option("--class", en_d, "class d")->required();
        sub->add_option("--ovals", en_l, "exact number of components");
        sub->add_flag("--admissible", en_adm, "keep only schemes no obstruction prohibits");
        sub->add_option("--format", en_format, "json or text");
        sub->add_flag("--count", en_count, "print only the number of schemes");
        sub->add_option("--cap", en_cap, "largest number of ovals on one sphere");
        if (sub->get_name() == "dp1") sub->add_flag("--refined", en_refined, "refined schemes (k=4)");
        if (sub->get_name() == "dp2") en_knobs.add(sub);
    }

    // check
    auto* ck = app.add_subcommand("check", "verdict of the obstructions for one scheme");
    ck->require_subcommand(1);
    int ck_k = 4, ck_d = 3;
    std::string ck_scheme;
    bool ck_explain = false, ck_refined = false;
    KnobArgs ck_knobs;
    for (auto* sub : {ck->add_subcommand("dp2", "degree 2"), ck->add_subcommand("dp1", "degree 1")}) {
        sub->add_option("--k", ck_k, "number of spheres")->required();
        sub->add_option("--class", ck_d, "class d")->required();
        sub->add_option("scheme", ck_scheme, "scheme in ASCII notation")->required();
        sub->add_flag("--explain", ck_explain, "list every obstruction with its result");
        if (sub->get_name() == "dp1") sub->add_flag("--refined", ck_refined, "the scheme is refined (k=4)");
        if (sub->get_name() == "dp2") ck_knobs.add(sub);
    }

    // catalog
    auto* cat = app.add_subcommand("catalog", "realization data");
    cat->require_subcommand(1);
    std::string cat_data, cat_format = "text", cat_table, cat_scheme, cat_surface = "dp2";
    int cat_k = 4, cat_d = 3;
    bool cat_refined = false;
    KnobArgs cat_knobs;
    auto* cat_status = cat->add_subcommand("status", "status of one scheme");
    cat_status->add_option("scheme", cat_scheme, "scheme in ASCII notation")->required();
    cat_status->add_option("--surface", cat_surface, "dp2 or dp1");
    cat_status->add_option("--k", cat_k, "number of spheres")->required();
    cat_status->add_option("--class", cat_d, "class d")->required();
    cat_status->add_flag("--refined", cat_refined, "refined DP1 scheme (k=4)");
    auto* cat_validate = cat->add_subcommand("validate", "cross-validation audit of the data");
    auto* cat_report = cat->add_subcommand("report", "render a table");
    cat_report->add_option("--table", cat_table, "realized3, knot4, symplectic, lastchapter or table1")->required();
    for (auto* sub : {cat_status, cat_validate, cat_report}) {
        sub->add_option("--data", cat_data, "data directory");
        sub->add_option("--format", cat_format, "json or text");
        if (sub != cat_report) cat_knobs.add(sub);
    }

    // family
    auto* fam = app.add_subcommand("family", "non-symmetric family of class d >= 5");
    fam->require_subcommand(1);
    auto* fam_expand = fam->add_subcommand("expand", "expand one row");
    int fam_row = 1;
    FamilyParams fp;
    std::string fam_data;
    fam_expand->add_option("--row", fam_row, "row 1..8")->required();
    fam_expand->add_option("--d", fp.d, "class d")->required();
    fam_expand->add_option("--k1", fp.k1)->required();
    fam_expand->add_option("--k2", fp.k2)->required();
    fam_expand->add_option("--h1", fp.h[0])->required();
    fam_expand->add_option("--h2", fp.h[1])->required();
    fam_expand->add_option("--h3", fp.h[2])->required();
    fam_expand->add_option("--h4", fp.h[3])->required();
    fam_expand->add_option("--data", fam_data, "data directory");

    // trigonal
    auto* tri = app.add_subcommand("trigonal", "real trigonal graphs");
    tri->require_subcommand(1);
    std::string tri_in, tri_graph;
    int tri_n = 0;
    long tri_budget = 60000;
    auto* tri_encode = tri->add_subcommand("encode", "L-scheme to real graph");
    auto* tri_complete = tri->add_subcommand("complete", "search a completion of the real graph");
    auto* tri_trace = tri->add_subcommand("trace", "L-scheme of a trigonal polynomial");
    auto* tri_check = tri->add_subcommand("check", "check a completion");
    for (auto* sub : {tri_encode, tri_complete, tri_trace, tri_check}) {
        sub->add_option("--in", tri_in, "input JSON file")->required();
        if (sub != tri_trace) sub->add_option("--degree", tri_n, "degree n of the fibration");
    }
    tri_complete->add_option("--budget", tri_budget, "time budget in milliseconds");
    tri_check->add_option("--real-graph", tri_graph, "expected real graph or L-scheme");

    // cover
    auto* cov = app.add_subcommand("cover", "real scheme of the lift of a plane or cone arrangement");
    cov->require_subcommand(1);
    std::string cov_in;
    auto* cov2 = cov->add_subcommand("dp2", "plane pair");
    auto* cov1 = cov->add_subcommand("dp1", "cone pair");
    for (auto* sub : {cov2, cov1}) sub->add_option("--in", cov_in, "input JSON file")->required();

    // glue
    auto* glue = app.add_subcommand("glue", "topological gluing of two marked halves");
    std::string glue_s, glue_t;
    int glue_choice = 0;
    bool glue_reflect = false;
    glue->add_option("--s", glue_s, "first marked half")->required();
    glue->add_option("--t", glue_t, "second marked half")->required();
    glue->add_option("--choice", glue_choice, "1 or 2; all choices when omitted");
    glue->add_flag("--reflect", glue_reflect, "glue with the orientation reversed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (en->parsed()) {
            bool dp1 = en->got_subcommand("dp1");
            bool as_json = format_json(en_format) == "json";
            EnumSpec spec;
            spec.surface = dp1 ? Surface::DP1 : Surface::DP2;
            spec.k = en_k;
            spec.d = en_d;
            if (en_l >= 0) spec.l = en_l;
            spec.apply_obstructions = en_adm;
            spec.refined = en_refined;
            spec.cap = en_cap;
            if (!dp1) spec.knobs = en_knobs.knobs();
            std::vector<json> lines;
            if (en_refined) {
                for (const auto& e : gen_dp1_refined(spec)) {
                    json j = scheme_line(forget(e.scheme), e.verdict);
                    j["scheme"] = print_canonical(e.scheme);
                    lines.push_back(j);
                }
            } else {
                for (const auto& e : dp1 ? gen_dp1_schemes(spec) : gen_dp2_schemes(spec)) lines.push_back(scheme_line(e.scheme, e.verdict));
            }
            print_lines(lines, as_json, en_count);
            return 0;
        }
        if (ck->parsed()) {
            bool dp1 = ck->got_subcommand("dp1");
            json out;
            if (ck_refined) {
                if (ck_k != 4) throw InputError("refined schemes need k=4");
                RefinedScheme r = parse_refined(ck_scheme);
                out = {{"scheme", print_canonical(r)}, {"k", 4}, {"d", ck_d}, {"result", to_json(refined_verdict(r, ck_d))}};
                if (ck_explain) out["explain"] = explain_dp1(forget(r), 4, ck_d);
            } else {
                if (ck_k < (dp1 ? 0 : 1) || ck_k > 4) throw InputError("invalid k");
                Scheme s = parse_scheme(ck_scheme, dp1 ? Surface::DP1 : Surface::DP2);
                if (s.k() > ck_k) throw InputError("scheme has more spheres than k");
                s = padded(s, ck_k);
                Knobs knobs = dp1 ? Knobs{} : ck_knobs.knobs();
                Verdict v = dp1 ? dp1_verdict(s, ck_k, ck_d) : dp2_verdict(s, ck_k, ck_d, knobs);
                out = scheme_line(s, v);
                out["k"] = ck_k;
                out["d"] = ck_d;
                out["result"] = to_json(v);
                if (ck_explain) out["explain"] = dp1 ? explain_dp1(s, ck_k, ck_d) : explain_dp2(s, ck_k, ck_d, knobs);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cat->parsed()) {
            bool as_json = format_json(cat_format) == "json";
            Catalog c = cat_data.empty() ? Catalog::load_default() : Catalog::load(cat_data);
            if (cat_status->parsed()) {
                if (cat_surface != "dp2" && cat_surface != "dp1") throw InputError("surface must be dp2 or dp1");
                Surface surface = cat_surface == "dp2" ? Surface::DP2 : Surface::DP1;
                CatalogEntry e = cat_refined ? refined_status(c, cat_scheme, cat_d)
                                             : status(c, cat_scheme, surface, cat_k, cat_d, cat_knobs.knobs());
                if (as_json) {
                    std::cout << to_json(e).dump(2) << "\n";
                } else {
                    std::cout << e.scheme << "  k=" << e.k << " d=" << e.d << "  " << to_string(e.status);
                    for (const auto& l : e.labels) std::cout << " " << l;
                    if (!e.provenance.empty()) std::cout << "  [" << e.provenance << "]";
                    if (e.verdict.prohibited()) std::cout << "  obstruction: " << e.verdict.obstruction;
                    std::cout << "\n";
                }
            } else if (cat_validate->parsed()) {
                Audit a = validate(c, cat_knobs.knobs());
                if (as_json) {
                    std::cout << to_json(a).dump(2) << "\n";
                } else {
                    for (const auto& l : a.lines) std::cout << "(" << l.id << ") " << (l.pass ? "pass" : "FAIL") << "  " << l.detail << "\n";
                }
            } else {
                std::cout << report(c, cat_table, as_json) << (as_json ? "\n" : "");
            }
            return 0;
        }
        if (fam->parsed()) {
            Catalog c = fam_data.empty() ? Catalog::load_default() : Catalog::load(fam_data);
            std::cout << to_json(expand_family(c, fam_row, fp)).dump(2) << "\n";
            return 0;
        }
        if (tri->parsed()) {
            using namespace ovalis::trigonal;
            json in = read_json(tri_in);
            if (tri_trace->parsed()) {
                TrigonalPolynomial p;
                try {
                    p.n = in.at("n").get<int>();
                    p.b2 = in.at("b2").get<std::vector<double>>();
                    p.b3 = in.at("b3").get<std::vector<double>>();
                } catch (const json::exception& e) {
                    throw InputError(std::string("bad polynomial json: ") + e.what());
                }
                std::cout << to_json(trace_trigonal_polynomial(p)).dump(2) << "\n";
                return 0;
            }
            // input is an L-scheme (has "word") or a real graph
            auto graph_of = [&](const json& j, int& n) {
                if (j.contains("word")) {
                    LScheme ls = lscheme_from_json(j);
                    if (n > 0) ls.n = n;
                    n = ls.n;
                    return encode_real_graph(ls);
                }
                if (n < 1) throw InputError("--degree is required for a real graph input");
                return real_graph_from_json(j);
            };
            if (tri_check->parsed()) {
                if (tri_n < 1 && in.contains("n")) tri_n = in["n"].get<int>();
                if (tri_n < 1) throw InputError("--degree is required");
                Completion comp = completion_from_json(in);
                std::optional<RealGraph> want;
                if (!tri_graph.empty()) {
                    int n = tri_n;
                    want = graph_of(read_json(tri_graph), n);
                }
                auto bad = check_completion(comp, tri_n, want ? &*want : nullptr);
                std::cout << json{{"valid", bad.empty()}, {"violations", bad}}.dump(2) << "\n";
                return 0;
            }
            RealGraph g = graph_of(in, tri_n);
            if (tri_encode->parsed()) {
                json out = to_json(g);
                out["n"] = tri_n;
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            SearchResult r = search_completion(g, tri_n, tri_budget);
            json out = {{"status", to_string(r.status)}, {"reason", r.reason}, {"nodes", r.nodes}, {"real_graph", to_json(g)}};
            if (r.completion) {
                out["completion"] = to_json(*r.completion);
                out["violations"] = check_completion(*r.completion, tri_n, &g);
            }
            std::cout << out.dump(2) << "\n";
            return r.status == SearchStatus::Unknown ? exit_unknown : 0;
        }
        if (cov->parsed()) {
            json in = read_json(cov_in);
            json out;
            if (cov2->parsed()) {
                Scheme s = dp2_lift(plane_pair_from_json(in));
                out = {{"scheme", print_canonical(s)}, {"code", canonical_code(s)}};
            } else {
                ConePair cp = cone_pair_from_json(in);
                Scheme s = dp1_lift(cp);
                out = {{"scheme", print_canonical(s)}, {"code", canonical_code(s)}};
                if (!cp.signs.empty()) out["refined"] = print_canonical(dp1_lift_refined(cp));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (glue->parsed()) {
            MarkedHalf s = marked_half_from_json(read_json(glue_s)), t = marked_half_from_json(read_json(glue_t));
            json out = json::array();
            if (glue_choice != 0) {
                if (glue_choice != 1 && glue_choice != 2) throw InputError("choice must be 1 or 2");
                Scheme r = glue_degeneration(s, t, glue_choice, glue_reflect);
                out.push_back({{"choice", glue_choice}, {"scheme", print_canonical(r)}, {"code", canonical_code(r)}});
            } else {
                for (const auto& [choice, r] : enumerate_gluings(s, t, glue_reflect))
                    out.push_back({{"choice", choice}, {"scheme", print_canonical(r)}, {"code", canonical_code(r)}});
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
