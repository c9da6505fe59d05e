#pragma once

// Index-6 case scan in dimension 9. A class fixes the code word
//   a = (1^m1, 2^m2, 3^m3, 0^(9-m)),  e = (sum a_i e_i)/6,
// and a case adds two prescribed minimal vectors
//   y = (sum c_i e_i)/3 in 2e + L',  c_i = a_i mod 3, |c_i| <= 3,
//   z = (sum d_i e_i)/2 in 3e + L',  d_i = a_i mod 2, |d_i| <= 2,
// taken up to permutations inside each block of equal a_i and z -> -z.

#include <string>
#include <vector>

#include "latmin/realization.hpp"
#include "latmin/report.hpp"

namespace latmin {

struct D6Class {
  std::string name;
  std::vector<std::size_t> m;  ///< (m1, m2, m3)
};

/// {"format": "latmin-d6-classes/1", "classes": [{"name": ..., "m": [m1, m2, m3]}, ...]}
std::vector<D6Class> parse_d6_classes(const std::string& text);

struct D6Case {
  std::size_t cls = 0;  ///< index into the class list
  IntVector word;
  IntVector y;  ///< numerators c
  IntVector z;  ///< numerators d
};

/// Orbit representatives in a fixed order: class, then (y, z) lexicographically.
std::vector<D6Case> d6_cases(const std::vector<D6Class>& classes);

/// Problem for one case: both vectors as extras, symmetry from transpositions
/// inside blocks that fix y and z.
RealizationProblem d6_problem(const D6Case& c);

struct ScanOptions {
  std::size_t limit = 0;  ///< 0 = every case
  unsigned workers = 1;
  RealizationOptions realize;
};

ScanDoc scan_d6(const std::vector<D6Class>& classes, const ScanOptions& opt);

}  // namespace latmin
