#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

// Base for everything this library throws deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid GraphSpec arguments (duplicate generators, out-of-range, half on odd n, ...).
struct SpecError : Error {
    using Error::Error;
};

// Connection set does not generate Z_n; BFS from 0 cannot reach every vertex.
struct DisconnectedGraph : Error {
    using Error::Error;
};

// A BFS level exceeded LM_AC(d,l). The bound is proven, so this signals a bug.
struct NegativeDefect : Error {
    using Error::Error;
};

// (degree, diameter, class) combination not covered by the catalog tables.
struct UnknownFamily : Error {
    using Error::Error;
};

// Diameter below the validity threshold of the order formula for that degree.
struct BelowThreshold : Error {
    using Error::Error;
};

// Candidate space of a search exceeds the configured budget.
struct RangeTooLarge : Error {
    using Error::Error;
};

}  // namespace circulant
