#include "latmin/io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace latmin {

using jsonio::Json;

namespace {

constexpr const char* kGramFormat = "latmin-gram/1";
constexpr const char* kCodeFormat = "latmin-code/1";

void check_format(const Json& j, const char* expected) {
  if (!j.is_object()) throw Error(Status::ParseError, "expected a JSON object");
  auto it = j.find("format");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != expected))
    throw Error(Status::ParseError, std::string("format must be \"") + expected + "\"");
}

}  // namespace

GramFile GramFile::from(const RatMatrix& g) {
  GramFile f;
  f.n = g.rows();
  auto [scale, m] = clear_denominators(g);
  f.scale = scale;
  f.entries = std::move(m);
  return f;
}

GramFile parse_gram_file(const std::string& text) {
  const Json j = jsonio::parse(text);
  check_format(j, kGramFormat);
  GramFile f;
  f.n = jsonio::get_size(jsonio::field(j, "n"), "n");
  f.scale = jsonio::get_integer(jsonio::field(j, "scale"), "scale");
  if (sgn(f.scale) <= 0) throw Error(Status::ParseError, "scale must be positive");
  f.entries = jsonio::get_matrix(jsonio::field(j, "entries"), "entries");
  if (f.n == 0) throw Error(Status::ParseError, "n must be positive");
  if (f.entries.rows() != f.n || f.entries.cols() != f.n)
    throw Error(Status::ParseError, "entries must be an n x n matrix");
  if (f.n > kMaxDimension) throw Error(Status::UnsupportedSize, "dimension exceeds 16");
  if (!f.entries.is_symmetric()) throw Error(Status::NotSymmetric, "entries are not symmetric");
  (void)f.gram();  // PD check
  return f;
}

std::string render_gram_file(const GramFile& f) {
  Json j;
  j["format"] = kGramFormat;
  j["n"] = f.n;
  j["scale"] = jsonio::put_integer(f.scale);
  j["entries"] = jsonio::put_matrix(f.entries);
  return jsonio::render(j);
}

// ---------------------------------------------------------------------------

RealizationProblem CodeFile::problem() const {
  const CodeSpec c = spec();
  RealizationProblem p;
  p.emb = basis_embedding(c);
  p.extras = c.extra;
  p.min_value = Rational(min_value);
  switch (symmetry) {
    case SymmetryMode::None: break;
    case SymmetryMode::Explicit: p.group = perms; break;
    case SymmetryMode::Auto:
      for (auto& g : symmetry_group(p.emb, p.extras))
        if (!g.is_identity()) p.group.push_back(std::move(g));
      break;
  }
  return p;
}

CodeFile parse_code_file(const std::string& text) {
  const Json j = jsonio::parse(text);
  check_format(j, kCodeFormat);
  CodeFile f;
  f.n = jsonio::get_size(jsonio::field(j, "n"), "n");
  if (f.n == 0) throw Error(Status::ParseError, "n must be positive");
  if (f.n > kMaxDimension) throw Error(Status::UnsupportedSize, "dimension exceeds 16");
  f.d = jsonio::get_integer(jsonio::field(j, "d"), "d");
  if (f.d < 2) throw Error(Status::ParseError, "d must be at least 2");

  const Json& words = jsonio::field(j, "words");
  if (!words.is_array()) throw Error(Status::ParseError, "words: expected an array");
  for (const auto& w : words) f.words.push_back(jsonio::get_vector(w, "words"));
  if (j.contains("extra")) {
    const Json& extra = j["extra"];
    if (!extra.is_array()) throw Error(Status::ParseError, "extra: expected an array");
    for (const auto& v : extra) f.extra.push_back(jsonio::get_vector(v, "extra"));
  }
  for (const auto* vs : {&f.words, &f.extra})
    for (const auto& v : *vs)
      if (v.size() != f.n) throw Error(Status::ParseError, "vector length differs from n");
  for (auto& w : f.words)
    for (auto& x : w) {
      x %= f.d;
      if (sgn(x) < 0) x += f.d;
    }

  if (j.contains("symmetry")) {
    const Json& s = j["symmetry"];
    if (s.is_string()) {
      const auto mode = s.get<std::string>();
      if (mode == "auto") f.symmetry = SymmetryMode::Auto;
      else if (mode == "none") f.symmetry = SymmetryMode::None;
      else throw Error(Status::ParseError, "symmetry must be \"auto\", \"none\" or a list of permutations");
    } else if (s.is_array()) {
      f.symmetry = SymmetryMode::Explicit;
      for (const auto& pj : s) {
        const IntVector img = jsonio::get_vector(pj, "symmetry");
        if (img.size() != f.n) throw Error(Status::ParseError, "permutation length differs from n");
        SignedPermutation g = SignedPermutation::identity(f.n);
        std::vector<bool> hit(f.n, false);
        for (std::size_t i = 0; i < f.n; ++i) {
          const Integer a = abs(img[i]);
          if (sgn(a) == 0 || a > static_cast<unsigned long>(f.n) || hit[a.get_ui() - 1])
            throw Error(Status::ParseError, "not a signed permutation");
          g.image[i] = a.get_ui() - 1;
          g.sign[i] = sgn(img[i]);
          hit[g.image[i]] = true;
        }
        f.perms.push_back(std::move(g));
      }
    } else {
      throw Error(Status::ParseError, "symmetry must be \"auto\", \"none\" or a list of permutations");
    }
  }
  if (j.contains("min_value")) {
    f.min_value = jsonio::get_integer(j["min_value"], "min_value");
    if (sgn(f.min_value) <= 0) throw Error(Status::ParseError, "min_value must be positive");
  }
  return f;
}

std::string render_code_file(const CodeFile& f) {
  Json j;
  j["format"] = kCodeFormat;
  j["n"] = f.n;
  j["d"] = jsonio::put_integer(f.d);
  Json words = Json::array();
  for (const auto& w : f.words) words.push_back(jsonio::put_vector(w));
  j["words"] = words;
  Json extra = Json::array();
  for (const auto& v : f.extra) extra.push_back(jsonio::put_vector(v));
  j["extra"] = extra;
  switch (f.symmetry) {
    case SymmetryMode::Auto: j["symmetry"] = "auto"; break;
    case SymmetryMode::None: j["symmetry"] = "none"; break;
    case SymmetryMode::Explicit: {
      Json ps = Json::array();
      for (const auto& g : f.perms) {
        Json img = Json::array();
        for (std::size_t i = 0; i < g.size(); ++i) img.push_back(g.sign[i] * static_cast<long>(g.image[i] + 1));
        ps.push_back(img);
      }
      j["symmetry"] = ps;
      break;
    }
  }
  j["min_value"] = jsonio::put_integer(f.min_value);
  return jsonio::render(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Status::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace latmin
