#pragma once

// Flat-file formats. Both are JSON objects written one matrix row or one
// vector per line, integers only. Integers too large for 64 bits are written
// as decimal strings.
//
//   {"format": "latmin-gram/1", "n": 2, "scale": 1,
//    "entries": [[2, 1], [1, 2]]}
//
//   {"format": "latmin-code/1", "n": 9, "d": 5,
//    "words": [[1, 1, 1, 2, 2, 2, 2, 2, 0]],
//    "extra": [[-4, 0, 0, 2, 2, 1, 1, 1, 1]],
//    "symmetry": "auto" | "none" | [[1, 3, 2, 4, ...], ...],
//    "min_value": 1}
//
// Explicit symmetries are image lists of B-coordinate slots, 1-based; a
// negative entry -j sends e_i to -e_j.

#include <string>
#include <vector>

#include "latmin/codes.hpp"
#include "latmin/lattice.hpp"
#include "latmin/realization.hpp"

namespace latmin {

struct GramFile {
  std::size_t n = 0;
  Integer scale = 1;
  IntMatrix entries;

  GramMatrix gram() const { return GramMatrix::from_scaled(entries, scale); }
  static GramFile from(const RatMatrix& g);
};

/// Rejects malformed text (ParseError), asymmetric entries (NotSymmetric),
/// n > 16 (UnsupportedSize) and non-PD matrices (NotPositiveDefinite).
GramFile parse_gram_file(const std::string& text);
std::string render_gram_file(const GramFile& f);

enum class SymmetryMode { Auto, None, Explicit };

struct CodeFile {
  std::size_t n = 0;
  Integer d = 2;
  std::vector<IntVector> words;  ///< reduced mod d on load
  std::vector<IntVector> extra;
  SymmetryMode symmetry = SymmetryMode::Auto;
  std::vector<SignedPermutation> perms;
  Integer min_value = 1;

  CodeSpec spec() const { return CodeSpec::make(n, d, words, extra); }
  /// Auto runs symmetry_group; None uses the trivial group.
  RealizationProblem problem() const;
};

CodeFile parse_code_file(const std::string& text);
std::string render_code_file(const CodeFile& f);

std::string read_text_file(const std::string& path);

}  // namespace latmin
