#include "ovalis/trigonal.hpp"

namespace ovalis::trigonal {

using nlohmann::json;

LScheme lscheme_from_json(const json& j) {
    LScheme ls;
    try {
        ls.n = j.at("n").get<int>();
        for (const auto& e : j.at("word")) {
            Event ev;
            if (e.contains("event")) {
                if (e.at("event") != "tangency") throw TrigonalError("unknown event " + e.at("event").dump());
                ev.tangency = true;
                std::string side = e.at("side");
                if (side != "up" && side != "down") throw TrigonalError("side must be up or down");
                ev.up = side == "up";
            } else {
                std::string r = e.at("run");
                if (r != "one" && r != "three") throw TrigonalError("run must be one or three");
                ev.run = r == "one" ? Run::One : Run::Three;
                ev.length = e.value("length", 1);
                if (ev.length < 1) throw TrigonalError("run length must be positive");
            }
            ls.word.push_back(ev);
        }
        ls.source = j.value("source", "");
    } catch (const json::exception& e) {
        throw TrigonalError(std::string("bad L-scheme json: ") + e.what());
    }
    return ls;
}

json to_json(const LScheme& ls) {
    json w = json::array();
    for (const auto& e : ls.word) {
        if (e.tangency)
            w.push_back({{"event", "tangency"}, {"side", e.up ? "up" : "down"}});
        else
            w.push_back({{"run", e.run == Run::One ? "one" : "three"}, {"length", e.length}});
    }
    return {{"n", ls.n}, {"word", w}, {"source", ls.source}};
}

RealGraph real_graph_from_json(const json& j) {
    RealGraph g;
    try {
        for (const auto& v : j.at("vertices")) g.vertices.push_back(kind_from_string(v.get<std::string>()));
        for (const auto& e : j.at("edges")) g.edges.push_back(color_from_string(e.get<std::string>()));
        if (j.contains("circle")) g.circle = color_from_string(j.at("circle").get<std::string>());
    } catch (const json::exception& e) {
        throw TrigonalError(std::string("bad real graph json: ") + e.what());
    }
    if (g.edges.size() != g.vertices.size()) throw TrigonalError("real graph needs one edge per vertex");
    return g;
}

json to_json(const RealGraph& g) {
    json v = json::array(), e = json::array();
    for (Kind k : g.vertices) v.push_back(to_string(k));
    for (Color c : g.edges) e.push_back(to_string(c));
    json out{{"vertices", v}, {"edges", e}};
    if (g.vertices.empty()) out["circle"] = to_string(g.circle);
    return out;
}

Completion completion_from_json(const json& j) {
    Completion c;
    try {
        c.n = j.at("n").get<int>();
        for (const auto& v : j.at("vertices")) {
            Vertex x;
            x.kind = kind_from_string(v.at("kind").get<std::string>());
            x.real = v.at("real").get<bool>();
            if (x.kind == Kind::Mono) x.color = color_from_string(v.at("color").get<std::string>());
            x.mirror = v.at("mirror").get<int>();
            c.vertices.push_back(x);
        }
        for (const auto& e : j.at("edges")) {
            Edge x;
            x.from = e.at("from").get<int>();
            x.to = e.at("to").get<int>();
            x.color = color_from_string(e.at("color").get<std::string>());
            x.real = e.at("real").get<bool>();
            x.mirror = e.at("mirror").get<int>();
            c.edges.push_back(x);
        }
        c.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw TrigonalError(std::string("bad completion json: ") + e.what());
    }
    return c;
}

json to_json(const Completion& c) {
    json vs = json::array(), es = json::array();
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        const auto& v = c.vertices[i];
        json x{{"id", i}, {"kind", to_string(v.kind)}, {"real", v.real}, {"mirror", v.mirror}};
        if (v.kind == Kind::Mono) x["color"] = to_string(v.color);
        vs.push_back(x);
    }
    for (size_t i = 0; i < c.edges.size(); ++i) {
        const auto& e = c.edges[i];
        es.push_back({{"id", i}, {"from", e.from}, {"to", e.to}, {"color", to_string(e.color)}, {"real", e.real}, {"mirror", e.mirror}});
    }
    return {{"n", c.n}, {"vertices", vs}, {"edges", es}, {"rotation", c.rotation}};
}

}  // namespace ovalis::trigonal
