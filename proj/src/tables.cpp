#include "circulant/tables.hpp"

#include <sstream>

#include "circulant/analysis.hpp"
#include "circulant/bounds.hpp"
#include "circulant/errors.hpp"
#include "circulant/partition.hpp"

namespace circulant {

namespace {

class Csv {
public:
    void cell(const std::string& s) {
        if (!first_) os_ << ',';
        os_ << s;
        first_ = false;
    }
    void cell(std::int64_t v) { cell(std::to_string(v)); }
    void empty() { cell(std::string()); }
    void endrow() {
        os_ << '\n';
        first_ = true;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
    bool first_ = true;
};

void level_header(Csv& csv, const std::string& key, int lmax) {
    csv.cell(key);
    csv.cell("n");
    for (int l = 0; l <= lmax; ++l) csv.cell("l" + std::to_string(l));
    csv.endrow();
}

void padded_row(Csv& csv, std::int64_t key, std::int64_t n, const std::vector<std::int64_t>& cells,
                int lmax) {
    csv.cell(key);
    csv.cell(n);
    for (int l = 0; l <= lmax; ++l) {
        if (l < static_cast<int>(cells.size())) csv.cell(cells[l]);
        else csv.empty();
    }
    csv.endrow();
}

LevelAssignment first_entry_levels(Catalog& cat, int d, std::int64_t k) {
    return distance_levels(*cat.entries(d, k).front().spec);
}

std::string profile_table(Catalog& cat, int degree, std::int64_t k_lo, std::int64_t k_hi,
                          int lmax) {
    Csv csv;
    level_header(csv, "k", lmax);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        LevelAssignment a = first_entry_levels(cat, degree, k);
        padded_row(csv, k, a.spec.order(), a.profile, lmax);
    }
    return csv.str();
}

std::string defect_table(Catalog& cat, int degree, std::int64_t k_lo, std::int64_t k_hi, int lmax) {
    Csv csv;
    level_header(csv, "k", lmax);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        LevelAssignment a = first_entry_levels(cat, degree, k);
        padded_row(csv, k, a.spec.order(), level_defects(a), lmax);
    }
    return csv.str();
}

std::string lmac_table() {
    Csv csv;
    csv.cell("d");
    for (int l = 2; l <= 10; ++l) csv.cell("l" + std::to_string(l));
    csv.endrow();
    for (int d = 2; d <= 9; ++d) {
        csv.cell(d);
        for (int l = 2; l <= 10; ++l) csv.cell(lmac(d, l));
        csv.endrow();
    }
    return csv.str();
}

std::string last_maximal_table() {
    Csv csv;
    csv.cell("d");
    for (int k = 1; k <= 15; ++k) csv.cell("k" + std::to_string(k));
    csv.endrow();
    for (int d = 2; d <= 9; ++d) {
        csv.cell(d);
        for (int k = 1; k <= 15; ++k) csv.cell(last_maximal_level(d, k));
        csv.endrow();
    }
    return csv.str();
}

std::string census_table(Catalog& cat, int degree, std::int64_t k, int want_class) {
    std::vector<FamilyEntry> entries = cat.entries(degree, k);
    const FamilyEntry* pick = &entries.front();
    for (const FamilyEntry& e : entries)
        if (e.class_id && *e.class_id == want_class) pick = &e;
    LevelAssignment a = distance_levels(*pick->spec);
    TypeCensus census = vertex_types(a);
    Csv csv;
    csv.cell("type");
    for (std::int64_t l = 0; l <= k; ++l) csv.cell("l" + std::to_string(l));
    csv.endrow();
    for (int s = 0; s <= degree; ++s) {
        bool any = false;
        for (std::int64_t l = 0; l <= k; ++l) any = any || census.at(l, s) != 0;
        if (!any) continue;  // types that never occur are omitted, as in the source tables
        csv.cell("T" + std::to_string(s));
        for (std::int64_t l = 0; l <= k; ++l) csv.cell(census.at(l, s));
        csv.endrow();
    }
    csv.cell("total");
    for (std::int64_t l = 0; l <= k; ++l) csv.cell(a.profile[l]);
    csv.endrow();
    return csv.str();
}

std::string t1_table() {
    struct Row {
        int degree;
        int class_id;  // 0 = single class
    };
    static const Row rows[] = {{2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 1}, {6, 2},
                               {7, 1}, {7, 2}, {8, 0}, {9, 1}, {9, 2}};
    Csv csv;
    csv.cell("degree");
    csv.cell("class");
    csv.cell("slope");
    csv.cell("intercept");
    csv.endrow();
    for (const Row& r : rows) {
        std::optional<int> c = r.class_id ? std::optional<int>(r.class_id) : std::nullopt;
        std::int64_t at10 = t1_total_formula(r.degree, 10, c);
        std::int64_t at11 = t1_total_formula(r.degree, 11, c);
        csv.cell(r.degree);
        if (r.class_id) csv.cell(r.class_id);
        else csv.cell("-");
        csv.cell(at11 - at10);
        csv.cell(at10 - 10 * (at11 - at10));
        csv.endrow();
    }
    return csv.str();
}

}  // namespace

std::vector<std::string> table_ids() {
    return {"t2", "t3", "t5", "t6", "t7", "t7a", "t7b", "t7c", "t8"};
}

std::string table_csv(const std::string& id, Catalog& cat) {
    if (id == "t2") return profile_table(cat, 5, 1, 6, 6);
    if (id == "t3") return profile_table(cat, 6, 1, 15, 15);
    if (id == "t5") return lmac_table();
    if (id == "t6") return last_maximal_table();
    if (id == "t7") return defect_table(cat, 6, 3, 15, 15);
    if (id == "t7a") return census_table(cat, 4, 12, 1);
    if (id == "t7b") return census_table(cat, 6, 12, 1);
    if (id == "t7c") return census_table(cat, 8, 12, 1);
    if (id == "t8") return t1_table();
    throw UnknownFamily("unknown table id: " + id);
}

}  // namespace circulant
