#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ovalis::trigonal {

struct TrigonalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateDiscriminant : TrigonalError {
    using TrigonalError::TrigonalError;
};

// x: zero of the discriminant, o: zero of b3, b: zero of b2, m: monochrome
enum class Kind { Cross, Circle, Dot, Mono };
enum class Color { Solid, Bold, Dotted };
enum class Run { One, Three };

std::string to_string(Kind k);
std::string to_string(Color c);
Kind kind_from_string(const std::string& s);
Color color_from_string(const std::string& s);

// Fibre events along the base circle. The word starts right after the point
// at infinity of the base.
struct Event {
    bool tangency = false;
    bool up = false;  // double point above the simple real point
    Run run = Run::One;
    int length = 1;
};
struct LScheme {
    int n = 1;
    std::vector<Event> word;
    std::string source;
};

// Cyclic word of coloured vertices; edge i joins vertex i and vertex i+1.
struct RealGraph {
    std::vector<Kind> vertices;
    std::vector<Color> edges;
    Color circle = Color::Dotted;  // colour of the circle when there are no vertices
};

struct Vertex {
    Kind kind = Kind::Cross;
    bool real = false;
    Color color = Color::Solid;  // monochrome vertices only
    int mirror = -1;
};
struct Edge {
    int from = -1, to = -1;
    Color color = Color::Solid;
    bool real = false;
    int mirror = -1;
};
// A graph on the sphere given by a rotation system: rotation[v] lists the
// edges at v counterclockwise.
struct Completion {
    int n = 1;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;
};

RealGraph encode_real_graph(const LScheme& ls);

// Empty when every condition holds; otherwise one line per violation.
std::vector<std::string> check_completion(const Completion& c, int n, const RealGraph* expected = nullptr);

enum class SearchStatus { Found, NotCompletable, Unknown };
std::string to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<Completion> completion;
    std::string reason;
    long nodes = 0;
};

SearchResult search_completion(const RealGraph& rg, int n, long budget_ms = 60000);

struct TrigonalPolynomial {
    int n = 1;
    std::vector<double> b2, b3;  // ascending coefficients, degrees 2n and 3n
};

std::vector<double> discriminant(const TrigonalPolynomial& p);
LScheme trace_trigonal_polynomial(const TrigonalPolynomial& p);

LScheme lscheme_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LScheme& ls);
RealGraph real_graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RealGraph& rg);
Completion completion_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Completion& c);

}  // namespace ovalis::trigonal
