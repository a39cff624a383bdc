#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ovalis/tree.hpp"

namespace ovalis {

// How nests in a selection must sit relative to each other on a sphere.
//   PerNestDisk: every other nest lies in one of the two end disks of each nest.
//   EndDisk: for each nest, one single end disk holds all the other nests.
//   EdgeDisjoint: the nests share no oval.
enum class Disjointness { PerNestDisk, EndDisk, EdgeDisjoint };

std::string to_string(Disjointness d);
std::optional<Disjointness> disjointness_from_string(const std::string& s);

// A chain of ovals given as a path of regions v0..vh; depth h.
struct Nest {
    std::vector<int> path;
    int depth() const { return static_cast<int>(path.size()) - 1; }
};

// Contiguous paths of the region tree, each listed once.
std::vector<Nest> sphere_nests(const RegionTree& t);
// Chains on RP^2: region 0 is the non-orientable region; paths run from an
// ancestor region down to a descendant region.
std::vector<Nest> rp2_nests(const Forest& rp2);

// End regions of a nest: components of v0 and vh once its ovals are removed.
std::vector<std::vector<char>> end_components(const RegionTree& t, const Nest& n);

bool selection_ok(const RegionTree& t, const std::vector<Nest>& sel, Disjointness mode);

struct Selection {
    std::vector<Nest> nests;
    int total = 0;
    bool maximal = false;  // attains the largest total among all selections
};

std::vector<Selection> disjoint_nest_selections(const RegionTree& t, int r, Disjointness mode);

// Largest-total selection of r nests whose total exceeds `floor`, if any.
std::optional<Selection> best_selection(const RegionTree& t, int r, Disjointness mode, int floor = 0);

// Two chains on RP^2 are disjoint when neither top oval contains the other.
bool rp2_disjoint(const Forest& rp2, const Nest& a, const Nest& b);

}  // namespace ovalis
