#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "circulant/graph_spec.hpp"
#include "circulant/search.hpp"

namespace circulant {

enum class Provenance { PaperFormula, PaperSporadic, DerivedBySearch };

const char* to_string(Provenance p);

struct FamilyEntry {
    int degree = 0;
    std::int64_t diameter = 0;
    std::int64_t order = 0;
    std::optional<int> class_id;      // absent for single-class rows and search hits
    std::optional<GraphSpec> spec;    // absent = search-required
    Provenance provenance = Provenance::DerivedBySearch;
};

// Order of the extremal (d = 2..5) or largest known (d = 6..9) circulant
// graph of degree d and diameter k. Degrees 6 and 7 switch on k mod 3,
// degrees 8 and 9 on k mod 2. Throws BelowThreshold when k is under the
// validity bound of the matching formula, UnknownFamily for d outside 2..9.
std::int64_t order_formula(int degree, std::int64_t diameter);

// Tabulated number of isomorphism classes at that order (3 for the single
// exception d=6, k=2; otherwise 1 or 2 by degree and residue).
int class_count(int degree, std::int64_t diameter);

// Explicit generator constructions where the source states them:
// d=2 {1}; d=4 {1, 2k+1}; d=6, k=3m, class 1 {1, 4m+1, 16m^2+4m+1} and
// class 2 {1, 8m^2+2m, 8m^2+6m+2}; d=8, k=2m {1, 4m^3+4m^2+6m+1,
// 4m^4+4m^2-4m, 4m^4+4m^2-2m}; d=9, k=3 the four sporadic sets on n=130;
// d=3 {1} plus the half element (derived). Everything else comes back with
// spec absent, meaning a search is required to materialize it.
FamilyEntry generator_family(int degree, std::int64_t diameter, int class_id);

// Materialized entry table: stated constructions are BFS-validated, families
// the source leaves implicit are filled in by exhaustive witness search and
// cached. Thread-safe; the cache is guarded by a mutex.
class Catalog {
public:
    explicit Catalog(SearchOptions options = {});

    // All entries served for (degree, diameter); throws UnknownFamily when
    // the pair is neither constructible nor searchable at desk scale.
    std::vector<FamilyEntry> entries(int degree, std::int64_t diameter);

    // Diameters <= kmax this catalog can serve for the degree. Search-derived
    // coverage is capped where exhaustive search stops being desk-scale:
    // d=5 k<=20; d=6 non-multiples of 3 up to 14; d=7 k in {3..8,10,11};
    // d=8 odd only k=3; d=9 k in {3,5}.
    std::vector<std::int64_t> coverage(int degree, std::int64_t kmax) const;

    // Entry list for catalog.json, degrees 2..9 up to kmax. Deterministic.
    std::string to_json(std::int64_t kmax);

private:
    std::vector<FamilyEntry> materialize(int degree, std::int64_t diameter);

    SearchOptions options_;
    std::mutex mutex_;
    std::map<std::pair<int, std::int64_t>, std::vector<FamilyEntry>> cache_;
};

}  // namespace circulant
