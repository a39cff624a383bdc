#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ovalis/scheme.hpp"

namespace ovalis {

struct TopologyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A disk whose boundary carries `points` marked points 1..points in cyclic
// order. Arcs pair the points without crossing. Faces are named by a boundary
// segment: segment i runs from point i to point i+1 (segment `points` closes
// the circle). Ovals are closed curves inside a face.
struct Disk {
    int points = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, Forest>> ovals;  // (segment, forest)
    int through_v = -1;                         // index into arcs, cone lifts only
};

// An annulus with boundary circles b1, b2, each carrying the same `points`
// marked points. Both circles are numbered in the same rotational direction.
// An arc [i, j] with both ends on one circle cuts off the disk holding the
// segments i, i+1, ..., j-1 of that circle.
struct AnnulusArc {
    int circle_a, point_a, circle_b, point_b;  // circles are 0 (b1) or 1 (b2)
};
struct Annulus {
    int points = 0;
    std::vector<AnnulusArc> arcs;
    std::vector<std::pair<std::pair<int, int>, Forest>> ovals;  // ((circle, segment), forest)
};

struct MarkedHalf {
    enum class Kind { None, TwoDisks, Annulus };
    std::vector<Forest> spheres;
    Kind kind = Kind::None;
    int boundary = 0;
    Disk disk1, disk2;
    Annulus annulus;
    std::string source;
};

struct PlanePair {
    std::vector<Disk> quartic_ovals;  // interiors of the branch-curve ovals
    std::string source;
};

struct ConePair {
    Disk v_region;                 // region around the vertex, bounded by the long component
    std::vector<Disk> cubic_ovals;  // interiors of the ovals of the cubic section
    std::vector<int> signs;        // +1 / -1 per cubic oval, empty when unknown
    int v_face = -1;               // segment of the face holding the vertex, when no arc passes through it
    std::string source;
};

// Sphere obtained by doubling a disk along its boundary.
Forest double_disk(const Disk& d);
// Sphere made of two disks glued along their common boundary.
Forest glue_two_disks(const Disk& a, const Disk& b, bool reflect);
// Sphere made of a disk on each boundary circle of an annulus; `swap` glues
// the first disk to b2 instead of b1.
Forest glue_disks_to_annulus(const Disk& a, const Disk& b, const Annulus& ann, bool swap, bool reflect);

// Number of closed curves made of the arcs of two disks glued along the boundary.
int glued_circle_count(const Disk& a, const Disk& b, bool reflect);

Scheme glue_degeneration(const MarkedHalf& s, const MarkedHalf& t, int choice, bool reflect);
std::vector<std::pair<int, Scheme>> enumerate_gluings(const MarkedHalf& s, const MarkedHalf& t, bool reflect);

Scheme dp2_lift(const PlanePair& p);
Scheme dp1_lift(const ConePair& c);
RefinedScheme dp1_lift_refined(const ConePair& c);

MarkedHalf marked_half_from_json(const nlohmann::json& j);
PlanePair plane_pair_from_json(const nlohmann::json& j);
ConePair cone_pair_from_json(const nlohmann::json& j);
Disk disk_from_json(const nlohmann::json& j);

}  // namespace ovalis
