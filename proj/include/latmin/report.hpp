#pragma once

// Machine-readable reports. Each document renders to JSON and parses back
// into the same structure, so parse(json()).json() == json() byte for byte.
// Exact rationals are strings "p/q"; vector indices are 0-based.

#include <optional>
#include <string>
#include <vector>

#include "latmin/io.hpp"
#include "latmin/minkowski.hpp"
#include "latmin/realization.hpp"

namespace latmin {

struct AnalysisDoc {
  struct Index {
    Integer index;
    std::vector<Integer> divisors;
    std::vector<std::size_t> subset;
  };
  struct CensusEntry {
    std::vector<Integer> divisors;
    std::size_t count = 0;
  };

  std::size_t n = 0;
  Integer scale = 1;
  Rational min;
  std::size_t s = 0;
  bool well_rounded = false;
  bool generated_by_min = false;
  std::optional<Index> maximal_index;
  std::optional<std::vector<std::size_t>> minimal_basis;
  std::vector<IntVector> minimal_vectors;
  std::optional<std::vector<CensusEntry>> census;

  static AnalysisDoc from(const GramFile& f, const AnalysisReport& r);
  std::string json() const;
  static AnalysisDoc parse(const std::string& json);
  std::string text() const;
};

struct RealizationDoc {
  struct Scaled {
    Integer scale;
    IntMatrix entries;
  };
  struct Barycenter {
    Integer scale;
    Integer min;  ///< minimum of the scaled integral form
    std::size_t s = 0;
    std::optional<IntMatrix> entries;
  };
  struct Face {
    std::size_t codim = 0;
    std::size_t vertices = 0;
    std::size_t s = 0;
    bool generated_by_min = false;
    bool minimal_basis = false;
  };
  struct Certificate {
    bool verified = false;
    std::vector<Rational> eq;
    std::vector<Rational> ineq;
  };

  std::string status;  ///< feasible | infeasible | incomplete
  std::size_t n = 0;
  Integer d;
  std::size_t subspace_dim = 0;
  std::size_t slice_dim = 0;
  std::size_t polytope_dim = 0;
  std::size_t iterations = 0;
  std::size_t cut_count = 0;
  std::size_t vertex_count = 0;
  bool verified = false;
  std::optional<Barycenter> barycenter;
  std::vector<IntVector> implied;
  std::optional<std::vector<Scaled>> vertices;
  std::optional<std::vector<Face>> faces;
  std::optional<Certificate> certificate;
  std::optional<std::vector<IntVector>> cuts;  ///< dumped for incomplete runs

  struct Options {
    bool vertices = false;
    bool barycenter = false;
    bool faces = false;
  };
  static RealizationDoc from(const RealizationProblem& p, const RealizationResult& r, const Options& opt);
  std::string json() const;
  static RealizationDoc parse(const std::string& json);
  std::string text() const;
};

struct VerifyDoc {
  struct Check {
    std::string suite;
    std::string claim;
    std::string value;
    bool pass = false;
  };
  std::string target;
  std::vector<Check> checks;
  bool passed = false;

  std::string json() const;
  static VerifyDoc parse(const std::string& json);
  std::string text() const;
};

struct ScanDoc {
  struct Case {
    std::string cls;
    IntVector y;
    IntVector z;
    std::string status;
    bool minimal_basis = false;  ///< feasible cases: barycenter has a basis of minimal vectors
  };
  struct Profile {
    std::vector<std::size_t> m;  ///< (m1, m2, m3)
    std::size_t count = 0;
  };
  std::size_t classes = 0;
  std::size_t total_cases = 0;
  std::size_t scanned = 0;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t incomplete = 0;
  std::vector<Profile> feasible_profile;
  std::vector<Case> cases;

  std::string json() const;
  static ScanDoc parse(const std::string& json);
  std::string text() const;
};

/// Parse any report by its "report" field and render it again.
std::string rerender_report(const std::string& json);

}  // namespace latmin
