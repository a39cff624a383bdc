#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ovalis/obstructions.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

struct EnumSpec {
    Surface surface = Surface::DP2;
    int k = 4;
    int d = 3;
    std::optional<int> l;
    bool apply_obstructions = false;
    bool refined = false;
    Knobs knobs;
    int cap = 12;
};

struct EnumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rooted trees with m vertices, as the forest hanging below the root.
std::vector<Forest> gen_rooted_trees(int m);
// Sphere arrangements of l circles, one per homeomorphism class, sorted by code.
std::vector<Forest> gen_sphere_arrangements(int l, int cap = 12);

struct Entry {
    Scheme scheme;
    Verdict verdict;
};
struct RefinedEntry {
    RefinedScheme scheme;
    Verdict verdict;
};

// Outputs are sorted by canonical code; with apply_obstructions only
// admissible schemes are kept.
std::vector<Entry> gen_dp2_schemes(const EnumSpec& spec);
std::vector<Entry> gen_dp1_schemes(const EnumSpec& spec);
std::vector<RefinedEntry> gen_dp1_refined(const EnumSpec& spec);

}  // namespace ovalis
