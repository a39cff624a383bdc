#pragma once

#include <json.hpp>
#include <string>

#include "ovalis/nests.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

enum class Status { Admissible, Prohibited, NotApplicable };
std::string to_string(Status s);

struct Verdict {
    Status status = Status::Admissible;
    std::string obstruction;  // id of the first violated obstruction
    nlohmann::json witness = nlohmann::json::object();

    bool prohibited() const { return status == Status::Prohibited; }
};

struct Knobs {
    Disjointness disjointness = Disjointness::PerNestDisk;
    bool one_sphere_disjoint = true;
};

int dp2_max_ovals(int d);
int dp1_max_ovals(int d);

Verdict dp2_harnack(const Scheme& s, int d);
Verdict dp2_welschinger_nests(const Scheme& s, int d, const Knobs& knobs = {});
Verdict dp2_two_nests_k4(const Scheme& s, int d);
Verdict dp2_forbidden_quadruple(const Scheme& s, int d);
Verdict dp2_one_sphere_nests(const Scheme& s, int d, const Knobs& knobs = {});
Verdict dp2_petrovsky(const Scheme& s, int d);
Verdict dp2_verdict(const Scheme& s, int k, int d, const Knobs& knobs = {});

Verdict dp1_parity(const Scheme& s, int d);
Verdict dp1_bounds(const Scheme& s, int d);
Verdict dp1_nest_obstruction(const Scheme& s, int d);
Verdict dp1_verdict(const Scheme& s, int k, int d);
Verdict refined_verdict(const RefinedScheme& r, int d);

nlohmann::json to_json(const Verdict& v);

}  // namespace ovalis
