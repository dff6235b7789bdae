#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/catalog.hpp"
#include "circulant/search.hpp"

namespace circulant {

enum class VerifyScope { Bounds, Defects, Girth, Types, T1, Search, All };

VerifyScope parse_scope(const std::string& name);

struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct VerifyOutcome {
    std::vector<VerifyCheck> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    std::string to_json() const;
};

// Re-derives the invariant suites of every module over the catalog up to
// diameter kmax. Errors inside a check are recorded as failures, not thrown.
VerifyOutcome run_verify(VerifyScope scope, std::int64_t kmax, Catalog& catalog,
                         const SearchOptions& options = {});

}  // namespace circulant
