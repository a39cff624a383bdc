#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ovalis {

// An oval together with everything it encloses (relative to a chosen base region).
struct Oval {
    std::vector<Oval> inside;
};
using Forest = std::vector<Oval>;

int oval_count(const Forest& f);
int forest_depth(const Forest& f);

// Unrooted region tree of circles on a sphere: vertices are complementary
// regions, edges are circles.
class RegionTree {
public:
    RegionTree() : adj_(1) {}
    explicit RegionTree(int vertices) : adj_(vertices) {}

    static RegionTree from_forest(const Forest& f);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return vertex_count() - 1; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    void add_edge(int a, int b);
    int add_vertex();

    Forest rooted_at(int v) const;
    std::vector<int> centroids() const;
    int diameter() const;

private:
    std::vector<std::vector<int>> adj_;
};

std::string rooted_code(const Forest& f);
std::string rooted_code(const RegionTree& t, int root);
std::string canonical_code(const RegionTree& t);

// Print a forest in the ASCII notation: free ovals are merged into one leading
// integer, the remaining terms are "<...>", sorted, joined with "+".
std::string print_forest(const Forest& f);

// Representative forest of a sphere arrangement: the rooting whose printed form
// is smallest by (length, text).
Forest representative_forest(const RegionTree& t);

}  // namespace ovalis
