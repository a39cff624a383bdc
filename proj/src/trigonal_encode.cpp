#include "ovalis/trigonal.hpp"

namespace ovalis::trigonal {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::Cross: return "x";
        case Kind::Circle: return "o";
        case Kind::Dot: return "b";
        case Kind::Mono: return "m";
    }
    return "?";
}

std::string to_string(Color c) {
    switch (c) {
        case Color::Solid: return "solid";
        case Color::Bold: return "bold";
        case Color::Dotted: return "dotted";
    }
    return "?";
}

Kind kind_from_string(const std::string& s) {
    if (s == "x" || s == "×") return Kind::Cross;
    if (s == "o" || s == "∘") return Kind::Circle;
    if (s == "b" || s == "*" || s == "•") return Kind::Dot;
    if (s == "m") return Kind::Mono;
    throw TrigonalError("unknown vertex kind '" + s + "'");
}

Color color_from_string(const std::string& s) {
    if (s == "solid") return Color::Solid;
    if (s == "bold") return Color::Bold;
    if (s == "dotted") return Color::Dotted;
    throw TrigonalError("unknown edge colour '" + s + "'");
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotCompletable: return "not-completable";
        case SearchStatus::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Color run_color(Run r) { return r == Run::One ? Color::Solid : Color::Dotted; }

// one tangency and the run after it: x, then the vertices forced inside the run
void push_segment(Run r, bool opposite, RealGraph& g) {
    g.vertices.push_back(Kind::Cross);
    if (!opposite) {
        g.edges.push_back(run_color(r));
    } else if (r == Run::Three) {
        g.vertices.push_back(Kind::Circle);
        g.edges.insert(g.edges.end(), {Color::Dotted, Color::Dotted});
    } else {
        g.vertices.insert(g.vertices.end(), {Kind::Dot, Kind::Circle, Kind::Dot});
        g.edges.insert(g.edges.end(), {Color::Solid, Color::Bold, Color::Bold, Color::Solid});
    }
}

}  // namespace

RealGraph encode_real_graph(const LScheme& ls) {
    if (ls.n < 1) throw TrigonalError("degree must be positive");
    struct Tan {
        bool up;
    };
    std::vector<Tan> tans;
    std::vector<std::optional<Run>> runs(1);  // runs[i] follows tangency i-1; runs[0] starts the word
    for (const auto& e : ls.word) {
        if (e.tangency) {
            tans.push_back({e.up});
            runs.emplace_back();
            continue;
        }
        auto& cur = runs.back();
        if (cur && *cur != e.run) throw TrigonalError("run type changes without a tangency");
        cur = e.run;
    }
    const int m = static_cast<int>(tans.size());
    RealGraph g;
    if (m == 0) {
        if (!runs[0]) throw TrigonalError("empty word");
        Run r = *runs[0];
        g.circle = run_color(r);
        if (ls.n % 2) {
            // the seam flips the fibre, so a real zero of b3 is forced
            if (r == Run::Three) {
                g.vertices.push_back(Kind::Circle);
                g.edges.push_back(Color::Dotted);
            } else {
                g.vertices.insert(g.vertices.end(), {Kind::Dot, Kind::Circle, Kind::Dot});
                g.edges.insert(g.edges.end(), {Color::Bold, Color::Bold, Color::Solid});
            }
        }
        return g;
    }
    // the first and last runs are the same run across the seam
    std::optional<Run> wrap = runs.front();
    if (runs.back()) {
        if (wrap && *wrap != *runs.back()) throw TrigonalError("run type changes across the seam without a tangency");
        wrap = runs.back();
    }
    if (!wrap) throw TrigonalError("missing run between the last and first tangency");
    std::vector<Run> between(m);  // between[i]: run after tangency i
    for (int i = 0; i + 1 < m; ++i) {
        if (!runs[i + 1]) throw TrigonalError("missing run between tangencies");
        between[i] = *runs[i + 1];
    }
    between[m - 1] = *wrap;
    for (int i = 0; i < m; ++i) {
        Run before = between[(i + m - 1) % m];
        if (before == between[i]) throw TrigonalError("runs on both sides of a tangency have the same type");
    }
    for (int i = 0; i < m; ++i) {
        bool a = tans[i].up;
        bool b = tans[(i + 1) % m].up;
        if (i == m - 1 && ls.n % 2) b = !b;
        push_segment(between[i], a != b, g);
    }
    return g;
}

}  // namespace ovalis::trigonal
