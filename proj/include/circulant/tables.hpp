#pragma once

#include <string>
#include <vector>

#include "circulant/catalog.hpp"

namespace circulant {

// Deterministic CSV renderings of the reference tables:
//   t2  degree-5 distance partition profiles, k = 1..6
//   t3  degree-6 distance partition profiles, k = 1..15
//   t5  level bound LM_AC(d,l), degrees 2..9, l = 2..10
//   t6  last maximal level by degree, k = 1..15
//   t7  degree-6 level defects, k = 3..15
//   t7a distance partition by vertex type, degree 4, k = 12
//   t7b distance partition by vertex type, degree 6 class 1, k = 12
//   t7c distance partition by vertex type, degree 8, k = 12
//   t8  total T_1 counts as linear functions of the diameter
// Comma-separated, header row, no quoting; absent cells are empty.
// Throws UnknownFamily for an unknown id.
std::string table_csv(const std::string& table_id, Catalog& catalog);

std::vector<std::string> table_ids();

}  // namespace circulant
