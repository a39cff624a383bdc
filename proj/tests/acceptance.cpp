// Prints one PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "ovalis/catalog.hpp"
#include "ovalis/enumerate.hpp"
#include "ovalis/topology.hpp"
#include "ovalis/trigonal.hpp"

using namespace ovalis;

namespace {

constexpr double count_seconds_limit = 10.0;
constexpr long search_budget_ms = 60000;
constexpr double pruning_seconds_limit = 1.0;
constexpr int random_polynomials_per_degree = 12;
constexpr int gluing_cases = 1000;
constexpr int doubling_cases = 500;
constexpr unsigned seed = 271828;

int failures = 0;

void line(int id, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json fixture(const std::string& name) {
    std::ifstream in(std::string(OVALIS_FIXTURES) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return nlohmann::json::parse(in);
}

std::string knob_name(const Knobs& k) {
    return to_string(k.disjointness) + (k.one_sphere_disjoint ? "+one-sphere-disjoint" : "+one-sphere-any");
}

// 1. counts at l=8, d=3
void counts() {
    const std::vector<std::pair<int, size_t>> want{{4, 74}, {3, 79}, {2, 61}, {1, 28}};
    constexpr int shown_per_k = 4;
    std::vector<Knobs> configs;
    for (auto m : {Disjointness::PerNestDisk, Disjointness::EndDisk, Disjointness::EdgeDisjoint})
        for (bool one : {true, false}) configs.push_back({m, one});

    // verdicts of every scheme per configuration
    std::map<int, std::vector<Entry>> all;
    for (auto [k, n] : want) {
        EnumSpec s;
        s.k = k;
        s.d = 3;
        s.l = 8;
        all[k] = gen_dp2_schemes(s);
    }
    bool any_config = false;
    std::string detail;
    std::ostringstream diffs;
    for (size_t c = 0; c < configs.size(); ++c) {
        const Knobs& kn = configs[c];
        bool match = true, fast = true;
        std::string got;
        for (auto [k, n] : want) {
            EnumSpec s;
            s.k = k;
            s.d = 3;
            s.l = 8;
            s.apply_obstructions = true;
            s.knobs = kn;
            auto t0 = std::chrono::steady_clock::now();
            size_t size = gen_dp2_schemes(s).size();
            fast = fast && seconds_since(t0) < count_seconds_limit;
            match = match && size == n;
            got += (got.empty() ? "" : "/") + std::to_string(size);
        }
        if (c == 0) detail = "default " + knob_name(kn) + ": k=4/3/2/1 -> " + got + " (want 74/79/61/28)";
        std::printf("  knobs %-36s k=4/3/2/1 -> %s%s\n", knob_name(kn).c_str(), got.c_str(), fast ? "" : " (slow)");
        any_config = any_config || (match && fast);
        if (c == 0) continue;
        // schemes whose verdict differs from the default configuration
        for (auto [k, n] : want) {
            std::vector<std::string> flipped;
            for (const auto& e : all[k]) {
                bool a = dp2_verdict(e.scheme, k, 3, configs[0]).prohibited();
                bool b = dp2_verdict(e.scheme, k, 3, kn).prohibited();
                if (a != b) flipped.push_back(print_canonical(e.scheme) + (b ? " (now prohibited)" : " (now admissible)"));
            }
            if (flipped.empty()) continue;
            diffs << "  vs default, " << knob_name(kn) << " k=" << k << ": " << flipped.size() << " differ:";
            for (int i = 0; i < std::min<int>(shown_per_k, static_cast<int>(flipped.size())); ++i) diffs << " " << flipped[i];
            if (static_cast<int>(flipped.size()) > shown_per_k) diffs << " ...";
            diffs << "\n";
        }
    }
    std::cout << diffs.str();
    line(1, any_config, detail + (any_config ? "" : "; no single knob configuration matches all four counts"));
}

// 2. arrangement counts against the rooted-forest brute force
void tree_classes() {
    const std::vector<size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47};
    bool ok = true;
    std::string got;
    for (int l = 0; l <= 8; ++l) {
        auto lib = gen_sphere_arrangements(l);
        std::set<std::string> codes;
        for (const auto& f : lib) codes.insert(oracle::code(f));
        ok = ok && lib.size() == want[l] && codes == oracle::unrooted_trees(l) && codes.size() == lib.size();
        got += (l ? "," : "") + std::to_string(lib.size());
    }
    line(2, ok, "l=0..8: " + got);
}

// 3. catalog audit (a)-(d)
void audit(const Catalog& c) {
    Audit a = validate(c);
    bool ok = true;
    std::string detail;
    for (const auto& l : a.lines) {
        if (l.id > "d") continue;
        ok = ok && l.pass;
        detail += "(" + l.id + ") " + (l.pass ? "pass" : "fail") + " ";
    }
    line(3, ok, detail);
}

// 4. named prohibitions
void named() {
    bool quad = dp2_verdict(parse_scheme("<1>+<1>+<1>+<1>:0:0:0"), 4, 3).prohibited();
    bool p58 = dp2_verdict(parse_scheme("58:0:0:0"), 4, 8).prohibited();
    bool p32 = dp2_verdict(parse_scheme("32:0:0:0"), 4, 6).prohibited();
    bool j2 = dp1_verdict(parse_scheme("J|0:0:0:0"), 4, 2).obstruction == "parity";
    bool nj3 = dp1_verdict(parse_scheme("0|0:0:0:0"), 4, 3).obstruction == "parity";
    bool ok = quad && p58 && !p32 && j2 && nj3;
    std::string d = std::string("quadruple ") + (quad ? "prohibited" : "admissible") + ", d=8 l=58 " +
                    (p58 ? "prohibited" : "admissible") + ", d=6 l=32 " + (p32 ? "prohibited" : "not flagged") +
                    ", J at d=2 " + (j2 ? "prohibited" : "allowed") + ", no J at d=3 " + (nj3 ? "prohibited" : "allowed");
    line(4, ok, d);
}

// 5. DP1 classification in class <= 3
void dp1_classification(const Catalog& c) {
    bool ok = true;
    int plain = 0, refined = 0;
    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= 4; ++k) {
            EnumSpec s;
            s.surface = Surface::DP1;
            s.k = k;
            s.d = d;
            s.apply_obstructions = true;
            for (const auto& e : gen_dp1_schemes(s)) {
                ++plain;
                ok = ok && status(c, print_canonical(e.scheme), Surface::DP1, k, d).status == EntryStatus::Realized;
            }
        }
        EnumSpec s;
        s.surface = Surface::DP1;
        s.k = 4;
        s.d = d;
        s.apply_obstructions = true;
        std::set<std::string> want, image;
        for (const auto& e : gen_dp1_schemes(s)) want.insert(canonical_code(e.scheme));
        s.refined = true;
        for (const auto& e : gen_dp1_refined(s)) {
            ++refined;
            image.insert(canonical_code(forget(e.scheme)));
            ok = ok && refined_status(c, print_canonical(e.scheme), d).status == EntryStatus::Realized;
        }
        ok = ok && image == want;
    }
    line(5, ok, std::to_string(plain) + " plain and " + std::to_string(refined) + " refined admissible schemes, all realized; forgetting is onto");
}

// 6. dessins round trip
void dessins() {
    using namespace trigonal;
    std::mt19937 rng(seed);
    std::normal_distribution<double> coef(0.0, 1.0);
    int found = 0, total = 0;
    bool ok = true;
    double worst = 0;
    for (int n : {1, 2}) {
        int got = 0;
        while (got < random_polynomials_per_degree) {
            TrigonalPolynomial p;
            p.n = n;
            for (int i = 0; i <= 2 * n; ++i) p.b2.push_back(coef(rng));
            for (int i = 0; i <= 3 * n; ++i) p.b3.push_back(coef(rng));
            LScheme ls;
            try {
                ls = trace_trigonal_polynomial(p);
            } catch (const DegenerateDiscriminant&) {
                continue;
            }
            ++got;
            ++total;
            RealGraph g = encode_real_graph(ls);
            auto t0 = std::chrono::steady_clock::now();
            auto r = search_completion(g, n, search_budget_ms);
            worst = std::max(worst, seconds_since(t0));
            bool good = r.status == SearchStatus::Found && r.completion && check_completion(*r.completion, n, &g).empty();
            found += good;
            ok = ok && good;
        }
    }
    bool pruned = true;
    double prune_time = 0;
    for (int n : {1, 2}) {
        RealGraph g;
        for (int i = 0; i < 6 * n + 1; ++i) {
            g.vertices.push_back(Kind::Cross);
            g.edges.push_back(i % 2 ? Color::Solid : Color::Dotted);
        }
        auto t0 = std::chrono::steady_clock::now();
        auto r = search_completion(g, n, search_budget_ms);
        double t = seconds_since(t0);
        prune_time = std::max(prune_time, t);
        pruned = pruned && r.status == SearchStatus::NotCompletable && t < pruning_seconds_limit;
    }
    bool fixtures_ok = true;
    for (const char* name : {"cubic_section_n2.json", "hyperbolic_n2.json"}) {
        LScheme ls = lscheme_from_json(fixture(name));
        RealGraph g = encode_real_graph(ls);
        auto r = search_completion(g, ls.n, search_budget_ms);
        fixtures_ok = fixtures_ok && r.status == SearchStatus::Found && check_completion(*r.completion, ls.n, &g).empty();
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d/%d random polynomials found and checked (slowest %.3f s, budget %ld ms); 6n+1 crosses not completable in %.3f s; fixtures %s",
                  found, total, worst, search_budget_ms, prune_time, fixtures_ok ? "found" : "NOT found");
    line(6, ok && total >= 20 && pruned && fixtures_ok, buf);
}

Disk random_disk(int n, std::mt19937& rng) {
    Disk d;
    d.points = n;
    d.arcs = oracle::random_matching(n, rng);
    return d;
}

// 7. gluing
void gluing() {
    std::mt19937 rng(seed + 7);
    int agree = 0;
    for (int i = 0; i < gluing_cases; ++i) {
        int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
        Disk a = random_disk(n, rng), b = random_disk(n, rng);
        bool reflect = i % 2;
        agree += glued_circle_count(a, b, reflect) == oracle::cycle_count(n, a.arcs, b.arcs, reflect);
    }
    auto tj = fixture("glue_example_T.json");
    auto ex = tj.at("expected");
    Scheme g = glue_degeneration(marked_half_from_json(fixture("glue_example_S.json")), marked_half_from_json(tj),
                                 ex.at("choice"), ex.at("reflect"));
    bool fx = canonical_code(g) == canonical_code(parse_scheme("<1>+<2>:3:0:0"));
    line(7, agree == gluing_cases && fx,
         std::to_string(agree) + "/" + std::to_string(gluing_cases) + " circle counts agree; example fixture gives " +
             print_canonical(g) + (fx ? " (matches <1>+<2>:3:0:0)" : " (expected <1>+<2>:3:0:0)"));
}

// 8. double cover
void double_cover() {
    Scheme s = dp2_lift(plane_pair_from_json(fixture("double_cover_dp2.json")));
    bool fx = canonical_code(s) == canonical_code(parse_scheme("1:1:0:0"));
    std::mt19937 rng(seed + 8);
    int agree = 0;
    for (int i = 0; i < doubling_cases; ++i) {
        PlanePair p;
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        std::multiset<std::string> want, got;
        for (int j = 0; j < k; ++j) {
            int n = 2 * std::uniform_int_distribution<int>(0, 4)(rng);
            Disk d = n ? random_disk(n, rng) : Disk{};
            int groups = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int g = 0; g < groups; ++g) {
                auto pool = gen_sphere_arrangements(std::uniform_int_distribution<int>(1, 3)(rng));
                Forest f = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
                d.ovals.push_back({n ? std::uniform_int_distribution<int>(1, n)(rng) : 0, f});
            }
            p.quartic_ovals.push_back(d);
            want.insert(oracle::unrooted(oracle::doubled_disk(n, d.arcs, d.ovals)));
        }
        for (const auto& f : dp2_lift(p).spheres) got.insert(oracle::code(f));
        agree += got == want;
    }
    line(8, fx && agree == doubling_cases,
         "fixture gives " + print_canonical(s) + "; " + std::to_string(agree) + "/" + std::to_string(doubling_cases) +
             " random plane pairs agree with the doubling oracle");
}

// 9. notation round trip
void round_trip() {
    long checked = 0, bad = 0;
    for (int l = 0; l <= 8; ++l)
        for (const auto& f : gen_sphere_arrangements(l)) {
            std::string p = print_sphere(f);
            for (const auto& r : rootings(f)) {
                Forest g = parse_forest(print_forest(r));
                ++checked;
                bad += sphere_code(g) != sphere_code(f) || print_sphere(g) != p;
            }
        }
    for (int k = 1; k <= 4; ++k)
        for (int l = 0; l <= 8; ++l) {
            EnumSpec s;
            s.k = k;
            s.d = 3;
            s.l = l;
            for (const auto& e : gen_dp2_schemes(s)) {
                std::string p = print_canonical(e.scheme);
                Scheme back = parse_scheme(p);
                ++checked;
                bad += canonical_code(back) != canonical_code(e.scheme) || print_canonical(back) != p;
            }
        }
    line(9, bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " texts stable");
}

}  // namespace

int main() {
    const Catalog c = Catalog::load_default();
    const std::vector<std::function<void()>> steps{counts,
                                                   tree_classes,
                                                   [&] { audit(c); },
                                                   named,
                                                   [&] { dp1_classification(c); },
                                                   dessins,
                                                   gluing,
                                                   double_cover,
                                                   round_trip};
    for (size_t i = 0; i < steps.size(); ++i) {
        try {
            steps[i]();
        } catch (const std::exception& e) {
            line(static_cast<int>(i + 1), false, std::string("error: ") + e.what());
        }
    }
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures ? 1 : 0;
}
