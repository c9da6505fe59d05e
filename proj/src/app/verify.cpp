#include "latmin/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "latmin/catalog.hpp"
#include "latmin/minkowski.hpp"

namespace latmin {

namespace {

class Suite {
 public:
  Suite(VerifyDoc& doc, std::string name) : doc_(doc), name_(std::move(name)) {}
  void check(std::string claim, bool pass, std::string value) {
    doc_.checks.push_back({name_, std::move(claim), std::move(value), pass});
  }

 private:
  VerifyDoc& doc_;
  std::string name_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::set<IntVector> normalized(const std::vector<IntVector>& vs) {
  std::set<IntVector> out;
  for (const auto& v : vs) out.insert(sign_normalized(v));
  return out;
}

std::string divisors_str(const std::vector<Integer>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + d[i].get_str();
  return s + "]";
}

// Scaled barycenter as stored: integer entries with the given scale.
bool scaled_equals(const RatMatrix& g, const GramFile& f) {
  auto [scale, m] = clear_denominators(g);
  return scale == f.scale && m == f.entries;
}

void realization_checks(Suite& t, const std::string& code, const RealizationOptions& opt, std::size_t want_vertices,
                        const std::function<void(const RealizationProblem&, const RealizationResult&)>& more) {
  const RealizationProblem p = catalog_code(code).problem();
  RealizationResult r;
  try {
    r = realize(p, opt);
  } catch (const IterationLimitExceeded& e) {
    t.check("realization finishes", false, e.what());
    return;
  }
  t.check("realization is feasible", r.status == RealizationStatus::Feasible, to_string(r.status));
  if (r.status != RealizationStatus::Feasible) return;
  t.check("vertex count " + std::to_string(want_vertices), r.vertices.size() == want_vertices,
          std::to_string(r.vertices.size()));
  t.check("every vertex rechecks", verify_result(p, r), yes_no(verify_result(p, r)));
  t.check("barycenter is fixed by the symmetry group", group_invariant(*r.barycenter, p.group),
          yes_no(group_invariant(*r.barycenter, p.group)));
  more(p, r);
}

void suite_9d5(VerifyDoc& doc, const RealizationOptions& opt) {
  Suite t(doc, "paper-9d5");
  const GramFile printed = catalog_gram("n9d5");
  realization_checks(t, "n9d5", opt, 25, [&](const RealizationProblem&, const RealizationResult& r) {
    auto [scale, m] = clear_denominators(*r.barycenter);
    t.check("barycenter x 900 equals the embedded matrix", scaled_equals(*r.barycenter, printed),
            "scale " + scale.get_str());
    const bool same = normalized(r.implied) == normalized(n9d5_implied_vectors());
    t.check("implied vectors are the ten listed", same, std::to_string(r.implied.size()) + " implied");
  });

  const GramMatrix g = printed.gram();
  const ShortVectorSet s = minimal_vectors(g);
  t.check("embedded matrix has minimum 1 and s = 20", s.min == 1 && s.pairs() == 20,
          "min " + s.min.get_str() + ", s " + std::to_string(s.pairs()));
  const PerfectionRelation pr = perfection_relation(s);
  t.check("perfection rank 19, corank 1", pr.rank == 19 && pr.corank == 1,
          "rank " + std::to_string(pr.rank) + ", corank " + std::to_string(pr.corank));

  const CodeFile code = catalog_code("n9d5");
  const BasisEmbedding emb = basis_embedding(code.spec());
  std::vector<IntVector> s1 = emb.ebar;
  s1.insert(s1.end(), code.extra.begin(), code.extra.end());
  const auto s1n = normalized(s1);
  const auto s2n = normalized(n9d5_implied_vectors());
  bool rel_ok = pr.relation.has_value();
  if (rel_ok)
    for (std::size_t k = 0; k < s.pairs(); ++k) {
      const auto& y = s.vectors[k];
      const Integer want = s1n.count(y) ? 1 : (s2n.count(y) ? -1 : 0);
      if (sgn(want) == 0 || (*pr.relation)[k] != want) rel_ok = false;
    }
  t.check("relation is +1 on e1..e9, x and -1 on the implied vectors", rel_ok, rel_ok ? "matches" : "differs");
  const bool norms = pr.relation && norm_relation_check(g, s, *pr.relation);
  t.check("norm identity holds", norms, yes_no(norms));

  const auto basis = find_minimal_basis(s);
  t.check("minimal vectors contain a basis", basis.has_value(), basis ? "found" : "NONE");
  const auto example = n9d5_basis_example();
  bool minimal = true;
  for (const auto& v : example) minimal = minimal && g[v] == s.min;
  const SublatticeReport ex = vectors_index(example);
  t.check("(e-e4, e2, ..., e9) are minimal with index 1", minimal && ex.index == 1,
          "index " + ex.index.get_str() + (minimal ? "" : ", not all minimal"));
  const SublatticeReport mi = maximal_index(s);
  t.check("maximal index 5", mi.index == 5, mi.index.get_str());
}

void suite_10d5(VerifyDoc& doc, const RealizationOptions& opt) {
  Suite t(doc, "paper-10d5");
  const GramFile frozen = catalog_gram("n10d5-barycenter");
  realization_checks(t, "n10d5", opt, 154, [&](const RealizationProblem&, const RealizationResult& r) {
    auto [scale, m] = clear_denominators(*r.barycenter);
    const Integer min = Rational(r.minimal.min * scale).get_num();
    t.check("scaled barycenter minimum 6209280", min == 6209280, min.get_str());
    t.check("barycenter s = 11", r.minimal.pairs() == 11, std::to_string(r.minimal.pairs()));
    t.check("barycenter equals the embedded scaled matrix", scaled_equals(*r.barycenter, frozen),
            "scale " + scale.get_str());
  });

  {
    const ShortVectorSet s = minimal_vectors(frozen.gram());
    const bool gen = generated_by_min(s);
    const bool basis = find_minimal_basis(s).has_value();
    t.check("embedded barycenter: generated by minimal vectors, no basis", gen && !basis,
            "generated " + yes_no(gen) + ", basis " + (basis ? "found" : "NONE"));
  }

  const GramFile m48 = catalog_gram("n10d5-min48");
  AnalysisOptions ao;
  ao.census = true;
  const AnalysisReport a = analyze(m48.gram(), ao);
  t.check("min-48 matrix: minimum 48", a.min == 48, a.min.get_str());
  t.check("min-48 matrix: s = 11", a.s == 11, std::to_string(a.s));
  t.check("min-48 matrix: well rounded", a.well_rounded, yes_no(a.well_rounded));
  t.check("min-48 matrix: generated by minimal vectors", a.generated_by_min, yes_no(a.generated_by_min));
  t.check("min-48 matrix: no basis of minimal vectors", !a.minimal_basis, a.minimal_basis ? "found" : "NONE");
  const Integer mi = a.max_index ? a.max_index->index : Integer(0);
  t.check("min-48 matrix: maximal index 5", mi == 5, mi.get_str());
  bool census_ok = a.census && !a.census->empty();
  std::string seen;
  if (a.census)
    for (const auto& [div, count] : *a.census) {
      std::vector<Integer> nontrivial;
      for (const auto& x : div)
        if (x != 1) nontrivial.push_back(x);
      const bool cyclic = nontrivial.size() == 1 && nontrivial[0] >= 2 && nontrivial[0] <= 5;
      census_ok = census_ok && cyclic;
      seen += (seen.empty() ? "" : " ") + divisors_str(div) + "x" + std::to_string(count);
    }
  t.check("min-48 matrix: every independent 10-subset has cyclic quotient of order 2..5", census_ok, seen);

  // the min-48 point lies in the same realization slice
  const RealizationProblem p = catalog_code("n10d5").problem();
  RatMatrix g48 = m48.gram().rational();
  for (std::size_t i = 0; i < g48.rows(); ++i)
    for (std::size_t j = 0; j < g48.cols(); ++j) g48(i, j) /= 48;
  bool on_slice = group_invariant(g48, p.group);
  for (const auto& v : p.equality_vectors()) on_slice = on_slice && quadratic_value(g48, v) == 1;
  t.check("min-48 matrix / 48 satisfies the n10d5 equalities and symmetry", on_slice, yes_no(on_slice));
}

}  // namespace

VerifyDoc verify_target(const std::string& target, const RealizationOptions& opt) {
  VerifyDoc doc;
  doc.target = target;
  if (target == "paper-9d5") {
    suite_9d5(doc, opt);
  } else if (target == "paper-10d5") {
    suite_10d5(doc, opt);
  } else if (target == "all") {
    suite_9d5(doc, opt);
    suite_10d5(doc, opt);
  } else {
    throw Error(Status::InvalidArgument, "unknown target " + target + " (paper-9d5, paper-10d5, all)");
  }
  doc.passed = std::all_of(doc.checks.begin(), doc.checks.end(), [](const auto& c) { return c.pass; });
  return doc;
}

}  // namespace latmin
