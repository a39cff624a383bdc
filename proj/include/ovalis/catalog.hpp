#pragma once

#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovalis/obstructions.hpp"
#include "ovalis/scheme.hpp"

namespace ovalis {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Small condition language over integer variables:
//   a = b, a != b, <, >, <=, >=, x mod m, x in {1,2}, x not in {..},
//   (x,y) in {(1,1),(2,0)}, and, or, p => q
class Condition {
public:
    Condition() = default;
    static Condition parse(const std::string& text);
    bool eval(const std::map<std::string, long>& vars) const;
    const std::string& text() const { return text_; }
    bool empty() const { return !root_; }

    struct Node;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

// Integer arithmetic with + - and mod over named variables.
long eval_expression(const std::string& text, const std::map<std::string, long>& vars);

enum class EntryStatus { RealizedSymmetric, Realized, SymplecticOnly, AdmissibleOpen, Prohibited };
std::string to_string(EntryStatus s);

struct CatalogEntry {
    std::string scheme;  // printed canonical form
    std::string code;
    Surface surface = Surface::DP2;
    int k = 0;
    int d = 0;
    EntryStatus status = EntryStatus::AdmissibleOpen;
    std::set<std::string> labels;
    std::string provenance;
    Verdict verdict;
    bool nonsymmetric = false;
};

struct RealizedRecord {
    std::vector<int> ks;
    std::string text;
    Scheme scheme;  // four spheres
    std::set<std::string> labels;
    std::string anchor;

    // realized on X^k according to the labels
    bool realized_at(int k) const;
    bool symmetric_at(int k) const;
};

struct Knot4Record {
    std::vector<int> ks;
    std::string text;
    Scheme scheme;
    std::string anchor;
};

struct SymplecticRecord {
    int k = 0;
    int d = 0;
    std::string text;
    Scheme scheme;
    std::string anchor;
};

struct LastChapterRecord {
    int row = 0;
    bool refined = false;
    std::string pattern;  // free variables a, b, c count empty ovals
    Condition condition;
    std::string anchor;
};

struct FamilyRow {
    int id = 0;
    std::string templ;
    std::vector<Condition> extra;
};

struct FamilyParams {
    int d = 0, k1 = 0, k2 = 0;
    int h[4] = {0, 0, 0, 0};
};

struct FamilyExpansion {
    int row = 0;
    std::string text;  // template with the parameters substituted
    Scheme scheme;
    bool forced_nonsymmetric = false;
    std::vector<std::string> failed_extra;
    bool mirror_free = false;
    int ovals = 0;
    bool cross_check = false;  // mirror_free and 2d+1 ovals
};

struct Catalog {
    std::vector<RealizedRecord> realized3;
    std::vector<Knot4Record> knot4;
    std::vector<SymplecticRecord> symplectic;
    std::vector<LastChapterRecord> lastchapter;
    std::vector<Condition> family_base;
    std::vector<FamilyRow> family;

    static Catalog load(const std::string& dir);
    static Catalog load_default();

    const FamilyRow& row(int id) const;
};

// OVALIS_DATA overrides the compiled-in data directory.
std::string default_data_dir();

// Drop empty spheres of a four-sphere scheme until k remain; nullopt when
// too few of them are empty.
std::optional<Scheme> drop_to_k(const Scheme& s, int k);

CatalogEntry status(const Catalog& c, const std::string& text, Surface surface, int k, int d, const Knobs& knobs = {});
CatalogEntry refined_status(const Catalog& c, const std::string& text, int d);

// Throws CatalogError naming the violated base constraint.
FamilyExpansion expand_family(const Catalog& c, int row, const FamilyParams& p);
// All parameter choices satisfying the base constraints for class d.
std::vector<FamilyParams> family_parameters(const Catalog& c, int d);

struct AuditLine {
    std::string id;
    bool pass = false;
    std::string detail;
};
struct Audit {
    std::vector<AuditLine> lines;
    std::vector<std::string> knot4_flags;  // knot4 entries admissible at k=4
    bool pass(const std::string& id) const;
};
Audit validate(const Catalog& c, const Knobs& knobs = {});
nlohmann::json to_json(const Audit& a);

// Deterministic rendering of a shipped table: realized3, knot4, lastchapter, table1.
std::string report(const Catalog& c, const std::string& table, bool json);
int report_rows(const Catalog& c, const std::string& table);

nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json to_json(const FamilyExpansion& e);

}  // namespace ovalis
