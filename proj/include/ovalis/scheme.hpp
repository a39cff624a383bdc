#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovalis/tree.hpp"

namespace ovalis {

enum class Surface { DP2, DP1 };

struct Scheme {
    Surface surface = Surface::DP2;
    std::vector<Forest> spheres;
    Forest rp2;            // DP1 only
    int pseudo_lines = 0;  // DP1 only, 0 or 1

    int k() const { return static_cast<int>(spheres.size()); }
};

// rp2 + positive pair (first two spheres) + negative pair (last two).
struct RefinedScheme {
    Forest rp2;
    int pseudo_lines = 0;
    std::array<Forest, 2> positive;
    std::array<Forest, 2> negative;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Parse a scheme. The surface is DP1 iff the text contains '|'.
Scheme parse_scheme(const std::string& text);
Scheme parse_scheme(const std::string& text, Surface expected);
Forest parse_forest(const std::string& text);
RefinedScheme parse_refined(const std::string& text);

Scheme padded(Scheme s, int k);
RefinedScheme refine(const Scheme& s);  // needs k=4
Scheme forget(const RefinedScheme& r);

std::string sphere_code(const Forest& f);
std::string canonical_code(const Scheme& s);
std::string canonical_code(const RefinedScheme& r);

std::string print_sphere(const Forest& f);
std::string print_canonical(const Scheme& s);
std::string print_canonical(const RefinedScheme& r);

// All rootings of an arrangement, deduplicated by printed form.
std::vector<Forest> rootings(const Forest& sphere);

bool has_mirror(const Forest& sphere);

struct ComponentStats {
    int l = 0;
    int t = 0;
    int rp2_ovals = 0;
    int pseudo_lines = 0;
    std::vector<int> sphere_ovals;
};
ComponentStats component_stats(const Scheme& s);

}  // namespace ovalis
