#include "latmin/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "json_util.hpp"
#include "latmin/minkowski.hpp"

namespace latmin {

namespace {

constexpr std::size_t kN = 9;

struct Pair {
  long c, d;
  auto operator<=>(const Pair&) const = default;
};

// allowed (c, d) for a coordinate with word entry a
std::vector<Pair> pair_types(long a) {
  std::vector<long> cs, ds;
  for (long c = -3; c <= 3; ++c)
    if (((c - a) % 3 + 3) % 3 == 0) cs.push_back(c);
  for (long d = -2; d <= 2; ++d)
    if (((d - a) % 2 + 2) % 2 == 0) ds.push_back(d);
  std::vector<Pair> out;
  for (long c : cs)
    for (long d : ds) out.push_back({c, d});
  return out;
}

// nondecreasing index sequences of length k over t types
void multisets(std::size_t k, std::size_t t, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < t; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

struct Blocks {
  IntVector word;
  std::vector<std::vector<std::size_t>> positions;  // per block value 1, 2, 3, 0
  std::vector<long> value;
};

Blocks blocks_of(const std::vector<std::size_t>& m) {
  Blocks b;
  b.word.assign(kN, 0);
  std::size_t pos = 0;
  const long vals[] = {1, 2, 3};
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<std::size_t> ps;
    for (std::size_t i = 0; i < m[k]; ++i) {
      b.word[pos] = vals[k];
      ps.push_back(pos++);
    }
    if (!ps.empty()) {
      b.positions.push_back(ps);
      b.value.push_back(vals[k]);
    }
  }
  std::vector<std::size_t> rest;
  while (pos < kN) rest.push_back(pos++);
  if (!rest.empty()) {
    b.positions.push_back(rest);
    b.value.push_back(0);
  }
  return b;
}

std::pair<IntVector, IntVector> canonical(const Blocks& b, const std::vector<Pair>& pairs) {
  std::vector<Pair> sorted = pairs;
  for (const auto& ps : b.positions) {
    std::vector<Pair> blk;
    for (auto i : ps) blk.push_back(sorted[i]);
    std::sort(blk.begin(), blk.end());
    for (std::size_t k = 0; k < ps.size(); ++k) sorted[ps[k]] = blk[k];
  }
  IntVector y(kN), z(kN);
  for (std::size_t i = 0; i < kN; ++i) {
    y[i] = sorted[i].c;
    z[i] = sorted[i].d;
  }
  return {y, z};
}

}  // namespace

std::vector<D6Class> parse_d6_classes(const std::string& text) {
  const auto j = jsonio::parse(text);
  auto it = j.find("format");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != "latmin-d6-classes/1"))
    throw Error(Status::ParseError, "format must be \"latmin-d6-classes/1\"");
  const auto& cs = jsonio::field(j, "classes");
  if (!cs.is_array()) throw Error(Status::ParseError, "classes: expected an array");
  std::vector<D6Class> out;
  for (const auto& c : cs) {
    D6Class k;
    k.name = jsonio::get_string(jsonio::field(c, "name"), "name");
    const auto& m = jsonio::field(c, "m");
    if (!m.is_array() || m.size() != 3) throw Error(Status::ParseError, "m: expected [m1, m2, m3]");
    std::size_t total = 0;
    for (const auto& x : m) total += k.m.emplace_back(jsonio::get_size(x, "m"));
    if (total > kN || k.m[0] == 0) throw Error(Status::ParseError, "class " + k.name + ": need m1 >= 1 and m1+m2+m3 <= 9");
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<D6Case> d6_cases(const std::vector<D6Class>& classes) {
  std::vector<D6Case> out;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Blocks b = blocks_of(classes[ci].m);
    std::vector<std::vector<Pair>> types;
    std::vector<std::vector<std::vector<std::size_t>>> choices(b.positions.size());
    for (std::size_t k = 0; k < b.positions.size(); ++k) {
      types.push_back(pair_types(b.value[k]));
      multisets(b.positions[k].size(), types[k].size(), choices[k]);
    }
    std::set<std::pair<IntVector, IntVector>> reps;
    std::vector<Pair> cur(kN);
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == b.positions.size()) {
        auto plus = canonical(b, cur);
        std::vector<Pair> neg = cur;
        for (auto& p : neg) p.d = -p.d;
        auto minus = canonical(b, neg);
        reps.insert(std::min(plus, minus));
        return;
      }
      for (const auto& ch : choices[k]) {
        for (std::size_t i = 0; i < ch.size(); ++i) cur[b.positions[k][i]] = types[k][ch[i]];
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    for (const auto& [y, z] : reps) out.push_back({ci, b.word, y, z});
  }
  return out;
}

RealizationProblem d6_problem(const D6Case& c) {
  RealizationProblem p;
  p.emb = basis_embedding(CodeSpec::make(kN, 6, {c.word}));
  auto yb = to_b_coordinates(p.emb, c.y, 3);
  auto zb = to_b_coordinates(p.emb, c.z, 2);
  if (!yb || !zb) throw Error(Status::Internal, "case vector outside the lattice");
  p.extras = {*yb, *zb};
  // the first coordinate is traded for e in the basis, so it stays put
  for (std::size_t i = 1; i + 1 < kN; ++i) {
    const std::size_t j = i + 1;
    if (c.word[i] != c.word[j] || c.y[i] != c.y[j] || c.z[i] != c.z[j]) continue;
    SignedPermutation g = SignedPermutation::identity(kN);
    std::swap(g.image[i], g.image[j]);
    p.group.push_back(std::move(g));
  }
  return p;
}

ScanDoc scan_d6(const std::vector<D6Class>& classes, const ScanOptions& opt) {
  const std::vector<D6Case> all = d6_cases(classes);
  const std::size_t count = opt.limit ? std::min(opt.limit, all.size()) : all.size();
  std::vector<ScanDoc::Case> results(count);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < count;) {
      const D6Case& c = all[k];
      ScanDoc::Case& out = results[k];
      out.cls = classes[c.cls].name;
      out.y = c.y;
      out.z = c.z;
      try {
        const RealizationResult r = realize(d6_problem(c), opt.realize);
        out.status = to_string(r.status);
        if (r.status == RealizationStatus::Feasible) out.minimal_basis = find_minimal_basis(r.minimal).has_value();
      } catch (const IterationLimitExceeded&) {
        out.status = "incomplete";
      } catch (const Error& e) {
        out.status = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ScanDoc doc;
  doc.classes = classes.size();
  doc.total_cases = all.size();
  doc.scanned = count;
  std::map<std::vector<std::size_t>, std::size_t> profile;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& r = results[k];
    if (r.status == "feasible") {
      ++doc.feasible;
      ++profile[classes[all[k].cls].m];
    } else if (r.status == "infeasible") {
      ++doc.infeasible;
    } else {
      ++doc.incomplete;
    }
  }
  for (const auto& [m, n] : profile) doc.feasible_profile.push_back({m, n});
  doc.cases = std::move(results);
  return doc;
}

}  // namespace latmin
