#include "latmin/report.hpp"

#include <sstream>

#include "json_util.hpp"

namespace latmin {

using jsonio::Json;
namespace jio = jsonio;

namespace {

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string divisors_str(const std::vector<Integer>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += " ";
    s += d[i].get_str();
  }
  return s + "]";
}

Json put_integers(const std::vector<Integer>& v) { return jio::put_vector(v); }

Json put_indices(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto k : v) a.push_back(k);
  return a;
}

std::vector<std::size_t> get_indices(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Status::ParseError, std::string(what) + ": expected an array");
  std::vector<std::size_t> v;
  for (const auto& e : j) v.push_back(jio::get_size(e, what));
  return v;
}

Json put_vectors(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(jio::put_vector(v));
  return a;
}

std::vector<IntVector> get_vectors(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Status::ParseError, std::string(what) + ": expected an array");
  std::vector<IntVector> out;
  for (const auto& e : j) out.push_back(jio::get_vector(e, what));
  return out;
}

Json put_rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(jio::put_rational(q));
  return a;
}

std::vector<Rational> get_rationals(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Status::ParseError, std::string(what) + ": expected an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(jio::get_rational(e, what));
  return out;
}

void expect_kind(const Json& j, const char* kind) {
  if (jio::get_string(jio::field(j, "report"), "report") != kind)
    throw Error(Status::ParseError, std::string("expected a ") + kind + " report");
}

void matrix_text(std::ostringstream& os, const IntMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).get_str().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "   ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto s = m(i, j).get_str();
      os << ' ' << std::string(width[j] - s.size(), ' ') << s;
    }
    os << '\n';
  }
}

}  // namespace

// ---------------------------------------------------------------------------

AnalysisDoc AnalysisDoc::from(const GramFile& f, const AnalysisReport& r) {
  AnalysisDoc d;
  d.n = r.dim;
  d.scale = f.scale;
  d.min = r.min;
  d.s = r.s;
  d.well_rounded = r.well_rounded;
  d.generated_by_min = r.generated_by_min;
  if (r.max_index) d.maximal_index = Index{r.max_index->index, r.max_index->divisors, r.max_index->subset};
  d.minimal_basis = r.minimal_basis;
  d.minimal_vectors = r.vectors.vectors;
  if (r.census) {
    d.census.emplace();
    for (const auto& [div, count] : *r.census) d.census->push_back({div, count});
  }
  return d;
}

std::string AnalysisDoc::json() const {
  Json j;
  j["report"] = "analysis";
  j["n"] = n;
  j["scale"] = jio::put_integer(scale);
  j["min"] = jio::put_rational(min);
  j["s"] = s;
  j["well_rounded"] = well_rounded;
  j["generated_by_min"] = generated_by_min;
  if (maximal_index) {
    Json m;
    m["index"] = jio::put_integer(maximal_index->index);
    m["divisors"] = put_integers(maximal_index->divisors);
    m["subset"] = put_indices(maximal_index->subset);
    j["maximal_index"] = m;
  } else {
    j["maximal_index"] = nullptr;
  }
  j["minimal_basis"] = minimal_basis ? put_indices(*minimal_basis) : Json(nullptr);
  j["minimal_vectors"] = put_vectors(minimal_vectors);
  if (census) {
    Json c = Json::array();
    for (const auto& e : *census) {
      Json x;
      x["divisors"] = put_integers(e.divisors);
      x["count"] = e.count;
      c.push_back(x);
    }
    j["census"] = c;
  } else {
    j["census"] = nullptr;
  }
  return jio::render(j);
}

AnalysisDoc AnalysisDoc::parse(const std::string& text) {
  const Json j = jio::parse(text);
  expect_kind(j, "analysis");
  AnalysisDoc d;
  d.n = jio::get_size(jio::field(j, "n"), "n");
  d.scale = jio::get_integer(jio::field(j, "scale"), "scale");
  d.min = jio::get_rational(jio::field(j, "min"), "min");
  d.s = jio::get_size(jio::field(j, "s"), "s");
  d.well_rounded = jio::get_bool(jio::field(j, "well_rounded"), "well_rounded");
  d.generated_by_min = jio::get_bool(jio::field(j, "generated_by_min"), "generated_by_min");
  if (const Json& m = jio::field(j, "maximal_index"); !m.is_null())
    d.maximal_index = Index{jio::get_integer(jio::field(m, "index"), "index"),
                            jio::get_vector(jio::field(m, "divisors"), "divisors"),
                            get_indices(jio::field(m, "subset"), "subset")};
  if (const Json& b = jio::field(j, "minimal_basis"); !b.is_null()) d.minimal_basis = get_indices(b, "minimal_basis");
  d.minimal_vectors = get_vectors(jio::field(j, "minimal_vectors"), "minimal_vectors");
  if (const Json& c = jio::field(j, "census"); !c.is_null()) {
    if (!c.is_array()) throw Error(Status::ParseError, "census: expected an array");
    d.census.emplace();
    for (const auto& e : c)
      d.census->push_back({jio::get_vector(jio::field(e, "divisors"), "divisors"),
                           jio::get_size(jio::field(e, "count"), "count")});
  }
  return d;
}

std::string AnalysisDoc::text() const {
  std::ostringstream os;
  os << "dimension        " << n << "\n";
  os << "minimum          " << min.get_str() << "\n";
  os << "pairs s          " << s << "\n";
  os << "well rounded     " << (well_rounded ? "yes" : "no") << "\n";
  os << "generated by min " << (generated_by_min ? "TRUE" : "FALSE") << "\n";
  if (maximal_index) {
    os << "maximal index    " << maximal_index->index.get_str() << "  quotient " << divisors_str(maximal_index->divisors)
       << "\n  witness";
    for (auto k : maximal_index->subset) os << ' ' << vec_str(minimal_vectors[k]);
    os << "\n";
  } else {
    os << "maximal index    -\n";
  }
  if (minimal_basis) {
    os << "minimal basis   ";
    for (auto k : *minimal_basis) os << ' ' << vec_str(minimal_vectors[k]);
    os << "\n";
  } else {
    os << "minimal basis    NONE\n";
  }
  os << "minimal vectors\n";
  for (const auto& v : minimal_vectors) os << "  " << vec_str(v) << "\n";
  if (census) {
    os << "quotient census\n";
    for (const auto& e : *census) os << "  " << divisors_str(e.divisors) << "  x" << e.count << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

RealizationDoc RealizationDoc::from(const RealizationProblem& p, const RealizationResult& r, const Options& opt) {
  RealizationDoc d;
  d.status = to_string(r.status);
  d.n = p.n();
  d.d = p.emb.d;
  d.subspace_dim = r.subspace_dim;
  d.slice_dim = r.slice_dim;
  d.polytope_dim = r.polytope_dim;
  d.iterations = r.iterations;
  d.cut_count = r.cuts.size();
  d.vertex_count = r.vertices.size();
  if (r.status == RealizationStatus::Feasible) {
    d.verified = verify_result(p, r);
    auto [scale, m] = clear_denominators(*r.barycenter);
    Barycenter b;
    b.min = Rational(r.minimal.min * scale).get_num();
    b.scale = std::move(scale);
    b.s = r.minimal.pairs();
    if (opt.barycenter) b.entries = std::move(m);
    d.barycenter = std::move(b);
    d.implied = r.implied;
    if (opt.vertices) {
      d.vertices.emplace();
      for (const auto& v : r.vertices) {
        auto [vs, vm] = clear_denominators(v);
        d.vertices->push_back({vs, vm});
      }
    }
    if (opt.faces) {
      d.faces.emplace();
      for (const auto& f : scan_faces(p, r, 1))
        d.faces->push_back({f.codim, f.vertices.size(), f.s, f.generated_by_min, f.minimal_basis.has_value()});
    }
  } else if (r.status == RealizationStatus::Infeasible) {
    d.verified = verify_result(p, r);
    d.certificate = Certificate{verify_farkas(r.certificate_lp, r.farkas), r.farkas.eq_multipliers,
                                r.farkas.ineq_multipliers};
  } else {
    d.cuts = r.cuts;
  }
  return d;
}

std::string RealizationDoc::json() const {
  Json j;
  j["report"] = "realization";
  j["status"] = status;
  j["n"] = n;
  j["d"] = jio::put_integer(d);
  j["subspace_dim"] = subspace_dim;
  j["slice_dim"] = slice_dim;
  j["polytope_dim"] = polytope_dim;
  j["iterations"] = iterations;
  j["cut_count"] = cut_count;
  j["vertex_count"] = vertex_count;
  j["verified"] = verified;
  if (barycenter) {
    Json b;
    b["scale"] = jio::put_integer(barycenter->scale);
    b["min"] = jio::put_integer(barycenter->min);
    b["s"] = barycenter->s;
    b["entries"] = barycenter->entries ? jio::put_matrix(*barycenter->entries) : Json(nullptr);
    j["barycenter"] = b;
  } else {
    j["barycenter"] = nullptr;
  }
  j["implied"] = put_vectors(implied);
  if (vertices) {
    Json a = Json::array();
    for (const auto& v : *vertices) {
      Json x;
      x["scale"] = jio::put_integer(v.scale);
      x["entries"] = jio::put_matrix(v.entries);
      a.push_back(x);
    }
    j["vertices"] = a;
  } else {
    j["vertices"] = nullptr;
  }
  if (faces) {
    Json a = Json::array();
    for (const auto& f : *faces) {
      Json x;
      x["codim"] = f.codim;
      x["vertices"] = f.vertices;
      x["s"] = f.s;
      x["generated_by_min"] = f.generated_by_min;
      x["minimal_basis"] = f.minimal_basis;
      a.push_back(x);
    }
    j["faces"] = a;
  } else {
    j["faces"] = nullptr;
  }
  if (certificate) {
    Json c;
    c["verified"] = certificate->verified;
    c["eq"] = put_rationals(certificate->eq);
    c["ineq"] = put_rationals(certificate->ineq);
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  j["cuts"] = cuts ? put_vectors(*cuts) : Json(nullptr);
  return jio::render(j);
}

RealizationDoc RealizationDoc::parse(const std::string& text) {
  const Json j = jio::parse(text);
  expect_kind(j, "realization");
  RealizationDoc d;
  d.status = jio::get_string(jio::field(j, "status"), "status");
  if (d.status != "feasible" && d.status != "infeasible" && d.status != "incomplete")
    throw Error(Status::ParseError, "unknown status " + d.status);
  d.n = jio::get_size(jio::field(j, "n"), "n");
  d.d = jio::get_integer(jio::field(j, "d"), "d");
  d.subspace_dim = jio::get_size(jio::field(j, "subspace_dim"), "subspace_dim");
  d.slice_dim = jio::get_size(jio::field(j, "slice_dim"), "slice_dim");
  d.polytope_dim = jio::get_size(jio::field(j, "polytope_dim"), "polytope_dim");
  d.iterations = jio::get_size(jio::field(j, "iterations"), "iterations");
  d.cut_count = jio::get_size(jio::field(j, "cut_count"), "cut_count");
  d.vertex_count = jio::get_size(jio::field(j, "vertex_count"), "vertex_count");
  d.verified = jio::get_bool(jio::field(j, "verified"), "verified");
  if (const Json& b = jio::field(j, "barycenter"); !b.is_null()) {
    Barycenter x;
    x.scale = jio::get_integer(jio::field(b, "scale"), "scale");
    x.min = jio::get_integer(jio::field(b, "min"), "min");
    x.s = jio::get_size(jio::field(b, "s"), "s");
    if (const Json& e = jio::field(b, "entries"); !e.is_null()) x.entries = jio::get_matrix(e, "entries");
    d.barycenter = std::move(x);
  }
  d.implied = get_vectors(jio::field(j, "implied"), "implied");
  if (const Json& v = jio::field(j, "vertices"); !v.is_null()) {
    if (!v.is_array()) throw Error(Status::ParseError, "vertices: expected an array");
    d.vertices.emplace();
    for (const auto& x : v)
      d.vertices->push_back({jio::get_integer(jio::field(x, "scale"), "scale"),
                             jio::get_matrix(jio::field(x, "entries"), "entries")});
  }
  if (const Json& f = jio::field(j, "faces"); !f.is_null()) {
    if (!f.is_array()) throw Error(Status::ParseError, "faces: expected an array");
    d.faces.emplace();
    for (const auto& x : f)
      d.faces->push_back({jio::get_size(jio::field(x, "codim"), "codim"),
                          jio::get_size(jio::field(x, "vertices"), "vertices"), jio::get_size(jio::field(x, "s"), "s"),
                          jio::get_bool(jio::field(x, "generated_by_min"), "generated_by_min"),
                          jio::get_bool(jio::field(x, "minimal_basis"), "minimal_basis")});
  }
  if (const Json& c = jio::field(j, "certificate"); !c.is_null())
    d.certificate = Certificate{jio::get_bool(jio::field(c, "verified"), "verified"),
                                get_rationals(jio::field(c, "eq"), "eq"), get_rationals(jio::field(c, "ineq"), "ineq")};
  if (const Json& c = jio::field(j, "cuts"); !c.is_null()) d.cuts = get_vectors(c, "cuts");
  return d;
}

std::string RealizationDoc::text() const {
  std::ostringstream os;
  os << "status           " << status << "\n";
  os << "n, d             " << n << ", " << d.get_str() << "\n";
  os << "invariant space  " << subspace_dim << "\n";
  os << "equality slice   " << slice_dim << "\n";
  os << "iterations       " << iterations << "\n";
  os << "cuts             " << cut_count << "\n";
  if (status == "feasible") {
    os << "vertices         " << vertex_count << "\n";
    os << "polytope dim     " << polytope_dim << "\n";
    os << "rechecked        " << (verified ? "yes" : "NO") << "\n";
    os << "barycenter scale " << barycenter->scale.get_str() << "  minimum " << barycenter->min.get_str()
       << "  s " << barycenter->s << "\n";
    if (barycenter->entries) matrix_text(os, *barycenter->entries);
    os << "implied vectors  " << implied.size() << "\n";
    for (const auto& v : implied) os << "  " << vec_str(v) << "\n";
    if (faces) {
      os << "faces (codim, vertices, s, generated, basis)\n";
      for (const auto& f : *faces)
        os << "  " << f.codim << "  " << f.vertices << "  " << f.s << "  " << (f.generated_by_min ? "yes" : "no") << "  "
           << (f.minimal_basis ? "yes" : "NONE") << (f.generated_by_min && !f.minimal_basis ? "  <- counterexample" : "")
           << "\n";
    }
    if (vertices) {
      std::size_t k = 0;
      for (const auto& v : *vertices) {
        os << "vertex " << k++ << "  scale " << v.scale.get_str() << "\n";
        matrix_text(os, v.entries);
      }
    }
  } else if (status == "infeasible") {
    os << "certificate      " << (certificate && certificate->verified ? "verified" : "NOT verified") << "\n";
  } else {
    os << "partial state: " << (cuts ? cuts->size() : 0) << " cuts\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::string VerifyDoc::json() const {
  Json j;
  j["report"] = "verify";
  j["target"] = target;
  Json a = Json::array();
  for (const auto& c : checks) {
    Json x;
    x["suite"] = c.suite;
    x["claim"] = c.claim;
    x["value"] = c.value;
    x["pass"] = c.pass;
    a.push_back(x);
  }
  j["checks"] = a;
  j["passed"] = passed;
  return jio::render(j);
}

VerifyDoc VerifyDoc::parse(const std::string& text) {
  const Json j = jio::parse(text);
  expect_kind(j, "verify");
  VerifyDoc d;
  d.target = jio::get_string(jio::field(j, "target"), "target");
  const Json& a = jio::field(j, "checks");
  if (!a.is_array()) throw Error(Status::ParseError, "checks: expected an array");
  for (const auto& x : a)
    d.checks.push_back({jio::get_string(jio::field(x, "suite"), "suite"), jio::get_string(jio::field(x, "claim"), "claim"),
                        jio::get_string(jio::field(x, "value"), "value"), jio::get_bool(jio::field(x, "pass"), "pass")});
  d.passed = jio::get_bool(jio::field(j, "passed"), "passed");
  return d;
}

std::string VerifyDoc::text() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.claim << ": " << c.value << "\n";
  os << (passed ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::string ScanDoc::json() const {
  Json j;
  j["report"] = "cases-d6";
  j["classes"] = classes;
  j["total_cases"] = total_cases;
  j["scanned"] = scanned;
  j["feasible"] = feasible;
  j["infeasible"] = infeasible;
  j["incomplete"] = incomplete;
  Json prof = Json::array();
  for (const auto& p : feasible_profile) {
    Json x;
    x["m"] = put_indices(p.m);
    x["count"] = p.count;
    prof.push_back(x);
  }
  j["feasible_profile"] = prof;
  Json a = Json::array();
  for (const auto& c : cases) {
    Json x;
    x["class"] = c.cls;
    x["y"] = jio::put_vector(c.y);
    x["z"] = jio::put_vector(c.z);
    x["status"] = c.status;
    x["minimal_basis"] = c.minimal_basis;
    a.push_back(x);
  }
  j["cases"] = a;
  return jio::render(j);
}

ScanDoc ScanDoc::parse(const std::string& text) {
  const Json j = jio::parse(text);
  expect_kind(j, "cases-d6");
  ScanDoc d;
  d.classes = jio::get_size(jio::field(j, "classes"), "classes");
  d.total_cases = jio::get_size(jio::field(j, "total_cases"), "total_cases");
  d.scanned = jio::get_size(jio::field(j, "scanned"), "scanned");
  d.feasible = jio::get_size(jio::field(j, "feasible"), "feasible");
  d.infeasible = jio::get_size(jio::field(j, "infeasible"), "infeasible");
  d.incomplete = jio::get_size(jio::field(j, "incomplete"), "incomplete");
  const Json& prof = jio::field(j, "feasible_profile");
  if (!prof.is_array()) throw Error(Status::ParseError, "feasible_profile: expected an array");
  for (const auto& x : prof)
    d.feasible_profile.push_back({get_indices(jio::field(x, "m"), "m"), jio::get_size(jio::field(x, "count"), "count")});
  const Json& a = jio::field(j, "cases");
  if (!a.is_array()) throw Error(Status::ParseError, "cases: expected an array");
  for (const auto& x : a)
    d.cases.push_back({jio::get_string(jio::field(x, "class"), "class"), jio::get_vector(jio::field(x, "y"), "y"),
                       jio::get_vector(jio::field(x, "z"), "z"), jio::get_string(jio::field(x, "status"), "status"),
                       jio::get_bool(jio::field(x, "minimal_basis"), "minimal_basis")});
  return d;
}

std::string ScanDoc::text() const {
  std::ostringstream os;
  for (const auto& c : cases)
    os << c.cls << "  y " << vec_str(c.y) << "  z " << vec_str(c.z) << "  " << c.status
       << (c.status == "feasible" ? (c.minimal_basis ? "  basis" : "  NO BASIS") : "") << "\n";
  os << "classes          " << classes << "\n";
  os << "cases            " << total_cases << "\n";
  os << "scanned          " << scanned << "\n";
  os << "feasible         " << feasible << "\n";
  os << "infeasible       " << infeasible << "\n";
  if (incomplete) os << "incomplete       " << incomplete << "\n";
  for (const auto& p : feasible_profile) {
    os << "  feasible with (m1,m2,m3) = (";
    for (std::size_t k = 0; k < p.m.size(); ++k) os << (k ? "," : "") << p.m[k];
    os << "): " << p.count << "\n";
  }
  return os.str();
}

std::string rerender_report(const std::string& text) {
  const Json j = jio::parse(text);
  const auto kind = jio::get_string(jio::field(j, "report"), "report");
  if (kind == "analysis") return AnalysisDoc::parse(text).json();
  if (kind == "realization") return RealizationDoc::parse(text).json();
  if (kind == "verify") return VerifyDoc::parse(text).json();
  if (kind == "cases-d6") return ScanDoc::parse(text).json();
  throw Error(Status::ParseError, "unknown report kind " + kind);
}

}  // namespace latmin
