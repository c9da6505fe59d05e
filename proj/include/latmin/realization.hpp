#pragma once

// Realization spaces of codes: the slice of the Ryshkov polyhedron cut out by
// G[ebar_i] = m, G[extra_j] = m, restricted to Gram matrices fixed by a group
// of signed permutations, computed by a cutting-plane loop over an exact
// double description.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latmin/codes.hpp"
#include "latmin/lattice.hpp"
#include "latmin/minkowski.hpp"
#include "latmin/polyhedron.hpp"

namespace latmin {

/// Basis of { G symmetric : U^T G U = G for all U in the group }.
/// One matrix per orbit of signed coordinate pairs {i, j}; orbits that meet
/// their own negative are identically zero and dropped.
struct InvariantBasis {
  std::size_t n = 0;
  std::vector<IntMatrix> basis;
  std::vector<std::pair<std::size_t, std::size_t>> representative;  ///< (i, j), i <= j

  std::size_t dim() const { return basis.size(); }
  RatMatrix compose(std::span<const Rational> x) const;
  /// Coefficients of x -> G(x)[v].
  IntVector functional(std::span<const Integer> v) const;
};

/// Orbits only depend on generators, so `group` may be a generator list.
InvariantBasis invariant_subspace(std::size_t n, const std::vector<SignedPermutation>& group);

struct RealizationProblem {
  BasisEmbedding emb;
  std::vector<IntVector> extras;          ///< B-coordinates of prescribed minimal vectors
  std::vector<SignedPermutation> group;   ///< generators; empty = trivial group
  Rational min_value = 1;
  std::vector<IntVector> working_cuts;    ///< extra starting cuts G[v] >= min_value

  std::size_t n() const { return emb.n; }
  /// ebar followed by extras.
  std::vector<IntVector> equality_vectors() const;
};

struct RealizationProgress {
  std::size_t iteration = 0;
  std::size_t cuts = 0;
  std::size_t vertices = 0;
  std::size_t rays = 0;
};

struct RealizationOptions {
  std::size_t iteration_cap = 10000;
  bool preload_ternary = false;  ///< start with every {-1,0,1} vector as a cut
  std::function<void(const RealizationProgress&)> progress;
};

enum class RealizationStatus { Feasible, Infeasible, Incomplete };

struct RealizationResult {
  RealizationStatus status = RealizationStatus::Incomplete;
  std::size_t subspace_dim = 0;   ///< dimension of the invariant space
  std::size_t slice_dim = 0;      ///< dimension of the affine equality slice in it
  std::size_t polytope_dim = 0;
  std::size_t iterations = 0;

  std::vector<IntVector> cuts;            ///< every v with a constraint G[v] >= m, in insertion order
  std::vector<RatMatrix> vertices;        ///< sorted
  std::vector<Bitset> vertex_cuts;        ///< per vertex: indices into `cuts` that are tight
  std::optional<RatMatrix> barycenter;
  ShortVectorSet minimal;                 ///< minimal vectors of the barycenter
  std::vector<IntVector> implied;         ///< minimal vectors not among +-equality vectors

  /// Infeasible: the LP over invariant coordinates and its Farkas certificate.
  LPProblem certificate_lp;
  FarkasCertificate farkas;
};

class IterationLimitExceeded : public Error {
 public:
  IterationLimitExceeded(std::string msg, RealizationResult partial)
      : Error(Status::IterationLimitExceeded, std::move(msg)), partial_(std::move(partial)) {}
  const RealizationResult& partial() const { return partial_; }

 private:
  RealizationResult partial_;
};

RealizationResult realize(const RealizationProblem& p, const RealizationOptions& opt = {});

/// Independent re-check of a Feasible result: every vertex PD with minimum
/// exactly m attained on the equality vectors, barycenter fixed by the group.
/// Infeasible results: the Farkas certificate verifies.
bool verify_result(const RealizationProblem& p, const RealizationResult& r);

/// U^T G U == G for every generator.
bool group_invariant(const RatMatrix& g, const std::vector<SignedPermutation>& group);

struct FaceReport {
  std::size_t codim = 0;                 ///< 0 = the whole polytope
  std::vector<std::size_t> vertices;     ///< indices into RealizationResult::vertices
  RatMatrix barycenter;
  std::size_t s = 0;
  bool generated_by_min = false;
  std::optional<std::vector<std::size_t>> minimal_basis;

  bool counterexample() const { return generated_by_min && !minimal_basis; }
};

/// Faces of codimension <= depth, each with its vertex barycenter analyzed.
std::vector<FaceReport> scan_faces(const RealizationProblem& p, const RealizationResult& r, std::size_t depth = 1);

struct PerfectionRelation {
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::optional<IntVector> relation;  ///< one coefficient per pair; set iff corank == 1
};

/// Linear relations among the projections y y^T over the pairs of S.
PerfectionRelation perfection_relation(const ShortVectorSet& s);

/// sum_y c_y G[y] == 0.
bool norm_relation_check(const GramMatrix& g, const ShortVectorSet& s, const IntVector& relation);

std::string to_string(RealizationStatus s);

}  // namespace latmin
