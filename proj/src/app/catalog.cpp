#include "latmin/catalog.hpp"

namespace latmin {

namespace {

const std::vector<std::vector<long>> kN9d5 = {
    {1104, 54, 54, 552, 552, 528, 528, 528, 312},
    {54, 900, 66, 27, 27, -142, -142, -142, 267},
    {54, 66, 900, 27, 27, -142, -142, -142, 267},
    {552, 27, 27, 900, 138, 102, 102, 102, -87},
    {552, 27, 27, 138, 900, 102, 102, 102, -87},
    {528, -142, -142, 102, 102, 900, 216, 216, 186},
    {528, -142, -142, 102, 102, 216, 900, 216, 186},
    {528, -142, -142, 102, 102, 216, 216, 900, 186},
    {312, 267, 267, -87, -87, 186, 186, 186, 900},
};

// vertex barycenter of the 154-vertex polytope, frozen from a realize run
const std::vector<std::vector<long>> kN10d5Barycenter = {
    {12479376, 7836, 7836, 5344260, 5344260, 5344260, 3835833, 3835833, 3835833, 3835833},
    {7836, 6209280, 1105680, 820048, 820048, 820048, -1557150, -1557150, -1557150, -1557150},
    {7836, 1105680, 6209280, 820048, 820048, 820048, -1557150, -1557150, -1557150, -1557150},
    {5344260, 820048, 820048, 6209280, 1578856, 1578856, 714670, 714670, 714670, 714670},
    {5344260, 820048, 820048, 1578856, 6209280, 1578856, 714670, 714670, 714670, 714670},
    {5344260, 820048, 820048, 1578856, 1578856, 6209280, 714670, 714670, 714670, 714670},
    {3835833, -1557150, -1557150, 714670, 714670, 714670, 6209280, 1188768, 1188768, 1188768},
    {3835833, -1557150, -1557150, 714670, 714670, 714670, 1188768, 6209280, 1188768, 1188768},
    {3835833, -1557150, -1557150, 714670, 714670, 714670, 1188768, 1188768, 6209280, 1188768},
    {3835833, -1557150, -1557150, 714670, 714670, 714670, 1188768, 1188768, 1188768, 6209280},
};

const std::vector<std::vector<long>> kN10d5Min48 = {
    {88, -3, -3, 40, 40, 40, 26, 26, 26, 26},
    {-3, 48, 10, 5, 5, 5, -13, -13, -13, -13},
    {-3, 10, 48, 5, 5, 5, -13, -13, -13, -13},
    {40, 5, 5, 48, 14, 14, 4, 4, 4, 4},
    {40, 5, 5, 14, 48, 14, 4, 4, 4, 4},
    {40, 5, 5, 14, 14, 48, 4, 4, 4, 4},
    {26, -13, -13, 4, 4, 4, 48, 8, 8, 8},
    {26, -13, -13, 4, 4, 4, 8, 48, 8, 8},
    {26, -13, -13, 4, 4, 4, 8, 8, 48, 8},
    {26, -13, -13, 4, 4, 4, 8, 8, 8, 48},
};

GramFile gram(const std::vector<std::vector<long>>& rows, long scale) {
  GramFile f;
  f.n = rows.size();
  f.scale = scale;
  f.entries = int_matrix(rows);
  return f;
}

// 1-based image list
SignedPermutation perm(std::initializer_list<long> img) {
  SignedPermutation g = SignedPermutation::identity(img.size());
  std::size_t i = 0;
  for (long a : img) g.image[i++] = static_cast<std::size_t>(a - 1);
  return g;
}

}  // namespace

std::vector<std::string> catalog_gram_names() { return {"n9d5", "n10d5-barycenter", "n10d5-min48"}; }
std::vector<std::string> catalog_code_names() { return {"n9d5", "n10d5"}; }

GramFile catalog_gram(const std::string& name) {
  if (name == "n9d5") return gram(kN9d5, 900);
  if (name == "n10d5-barycenter") return gram(kN10d5Barycenter, 6209280);
  if (name == "n10d5-min48") return gram(kN10d5Min48, 1);
  throw Error(Status::InvalidArgument, "unknown embedded matrix: " + name);
}

CodeFile catalog_code(const std::string& name) {
  CodeFile f;
  f.d = 5;
  f.symmetry = SymmetryMode::Explicit;
  if (name == "n9d5") {
    f.n = 9;
    f.words = {int_vector({1, 1, 1, 2, 2, 2, 2, 2, 0})};
    f.extra = {int_vector({-4, 0, 0, 2, 2, 1, 1, 1, 1})};
    f.perms = {perm({1, 3, 2, 4, 5, 6, 7, 8, 9}), perm({1, 2, 3, 5, 4, 6, 7, 8, 9}),
               perm({1, 2, 3, 4, 5, 7, 6, 8, 9}), perm({1, 2, 3, 4, 5, 7, 8, 6, 9})};
    return f;
  }
  if (name == "n10d5") {
    f.n = 10;
    f.words = {int_vector({1, 1, 1, 2, 2, 2, 2, 2, 2, 2})};
    f.extra = {int_vector({-4, 0, 0, 2, 2, 2, 1, 1, 1, 1})};
    f.perms = {perm({1, 3, 2, 4, 5, 6, 7, 8, 9, 10}), perm({1, 2, 3, 5, 4, 6, 7, 8, 9, 10}),
               perm({1, 2, 3, 5, 6, 4, 7, 8, 9, 10}), perm({1, 2, 3, 4, 5, 6, 8, 7, 9, 10}),
               perm({1, 2, 3, 4, 5, 6, 8, 9, 10, 7})};
    return f;
  }
  throw Error(Status::InvalidArgument, "unknown embedded code: " + name);
}

std::vector<IntVector> n9d5_basis_example() {
  std::vector<IntVector> b;
  IntVector v(9);
  v[0] = 1;
  v[3] = -1;
  b.push_back(v);
  for (std::size_t i = 1; i < 9; ++i) {
    IntVector u(9);
    u[i] = 1;
    b.push_back(u);
  }
  return b;
}

std::vector<IntVector> n9d5_implied_vectors() {
  return {int_vector({-1, 0, 0, 1, 1, 0, 0, 0, 1}), int_vector({-1, 0, 0, 1, 0, 0, 0, 0, 0}),
          int_vector({-1, 0, 0, 0, 1, 0, 0, 0, 0}), int_vector({-2, 1, 0, 1, 1, 1, 1, 1, 0}),
          int_vector({-2, 0, 1, 1, 1, 1, 1, 1, 0}), int_vector({-2, 0, 0, 1, 1, 1, 1, 0, 0}),
          int_vector({-2, 0, 0, 1, 1, 1, 0, 1, 0}), int_vector({-2, 0, 0, 1, 1, 0, 1, 1, 0}),
          int_vector({-3, 1, 1, 1, 1, 1, 1, 1, 0}), int_vector({-3, 0, 0, 1, 1, 1, 1, 1, 1})};
}

}  // namespace latmin
