#pragma once

// Z/dZ-codes of a pair (L, L'): L' has basis e_1..e_n of minimal vectors and
// L is spanned by L' and the vectors (sum_i w_i e_i)/d for the code words w.
// Everything downstream works in coordinates with respect to a basis B of L.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latmin/exact.hpp"

namespace latmin {

struct CodeSpec {
  std::size_t n = 0;
  Integer d = 2;
  std::vector<IntVector> words;  ///< reduced into [0, d)
  std::vector<IntVector> extra;  ///< prescribed minimal vectors, B-coordinates

  /// Validates sizes and reduces word entries mod d.
  static CodeSpec make(std::size_t n, Integer d, std::vector<IntVector> words, std::vector<IntVector> extra = {});
};

struct BasisEmbedding {
  std::size_t n = 0;
  Integer d = 1;
  std::vector<IntVector> ebar;  ///< B-coordinates of e_1..e_n
  std::string description;

  /// Rows are the ebar vectors.
  IntMatrix matrix() const;
};

/// Coordinates of e_1..e_n in a basis B of L.
///
/// One word: the first coefficient w_i that is a unit mod d is scaled to 1,
/// e = (sum w_j e_j)/d takes the place of e_i in B, and
///   e_i = d*e - sum_{j != i} w_j e_j.
/// Several words: B is read off the Hermite form of [d*I; words].
BasisEmbedding basis_embedding(const CodeSpec& c);

/// Elementary divisors of L/L' (SNF of the ebar matrix).
std::vector<Integer> quotient_type(const BasisEmbedding& emb);

/// Coordinates with respect to e_1..e_n of a vector given in B-coordinates.
RatVector to_e_coordinates(const BasisEmbedding& emb, const IntVector& b_coords);
/// B-coordinates of (sum_i num_i e_i)/den; nullopt when that vector is not in L.
std::optional<IntVector> to_b_coordinates(const BasisEmbedding& emb, const IntVector& num, const Integer& den);

// ---------------------------------------------------------------------------

/// Numerators b of vectors x = (sum b_i e_i)/d' in the coset (d/d') e + L',
/// i.e. b_i = w_i mod d', with |b_i| <= d', in lexicographic order.
struct CosetQuery {
  IntVector word;
  Integer d;
  Integer sub;  ///< d', must divide d
};

void for_each_coset_candidate(const CosetQuery& q, const std::function<void(const IntVector&)>& visit);
std::vector<IntVector> coset_candidates(const CosetQuery& q);
/// Analytic size of the candidate set: prod_i (3 if w_i = 0 mod d' else 2).
Integer coset_candidate_count(const CosetQuery& q);

// ---------------------------------------------------------------------------

/// Signed permutation U: U e_i = sign[i] * e_{image[i]}.
struct SignedPermutation {
  std::vector<std::size_t> image;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n);
  std::size_t size() const { return image.size(); }
  IntVector apply(const IntVector& v) const;
  SignedPermutation compose(const SignedPermutation& after) const;  ///< after * this
  IntMatrix matrix() const;
  bool is_identity() const;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

inline constexpr std::size_t kDefaultGroupCap = 2'000'000;

/// All signed permutations mapping the set {+-ebar} to itself and the set
/// {+-extra} to itself, in lexicographic order of (image, sign).
std::vector<SignedPermutation> symmetry_group(const BasisEmbedding& emb, const std::vector<IntVector>& extra,
                                              std::size_t cap = kDefaultGroupCap);

/// Closure of a generator list under composition.
std::vector<SignedPermutation> group_closure(const std::vector<SignedPermutation>& gens, std::size_t n,
                                             std::size_t cap = kDefaultGroupCap);

/// True iff g maps both vector sets to themselves up to sign.
bool preserves(const SignedPermutation& g, const std::vector<IntVector>& ebar, const std::vector<IntVector>& extra);

}  // namespace latmin
