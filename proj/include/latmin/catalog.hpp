#pragma once

// Embedded matrices and code problems, addressable by name.
//
//   gram: "n9d5"            barycenter of the n=9, d=5 realization, scale 900
//         "n10d5-barycenter" barycenter of the n=10, d=5 realization, integer scaled
//         "n10d5-min48"      the interior point with minimum 48
//   code: "n9d5", "n10d5"

#include <string>
#include <vector>

#include "latmin/io.hpp"

namespace latmin {

std::vector<std::string> catalog_gram_names();
std::vector<std::string> catalog_code_names();

/// Throws InvalidArgument on an unknown name.
GramFile catalog_gram(const std::string& name);
CodeFile catalog_code(const std::string& name);

/// B-coordinates of the basis (e - e4, e2, ..., e9) of the n=9 lattice.
std::vector<IntVector> n9d5_basis_example();

/// The ten minimal vectors of the n=9 barycenter beyond e1..e9 and x,
/// B-coordinates, sign as listed with a leading negative entry.
std::vector<IntVector> n9d5_implied_vectors();

}  // namespace latmin
