#include <doctest.h>

#include "latmin/catalog.hpp"
#include "latmin/io.hpp"
#include "latmin/report.hpp"
#include "latmin/scan.hpp"

using namespace latmin;

namespace {

std::string data(const std::string& name) { return read_text_file(std::string(LATMIN_DATA_DIR) + "/" + name); }
std::string sample(const std::string& name) { return read_text_file(std::string(LATMIN_TEST_DATA) + "/" + name); }

Status status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

}  // namespace

TEST_CASE("shipped data files match the embedded catalog") {
  for (const auto& name : catalog_gram_names()) {
    const auto text = data(name + ".gram.json");
    CHECK(text == render_gram_file(catalog_gram(name)));
    const auto f = parse_gram_file(text);
    CHECK(f.entries == catalog_gram(name).entries);
    CHECK(f.scale == catalog_gram(name).scale);
  }
  for (const auto& name : catalog_code_names()) CHECK(data(name + ".code.json") == render_code_file(catalog_code(name)));
}

TEST_CASE("gram file parsing") {
  const auto f = parse_gram_file(sample("identity3.gram.json"));
  CHECK(f.n == 3);
  CHECK(f.entries == IntMatrix::identity(3));
  CHECK(render_gram_file(f) == sample("identity3.gram.json"));
  CHECK(status_of([] { parse_gram_file(sample("asymmetric.gram.json")); }) == Status::NotSymmetric);
  CHECK(status_of([] { parse_gram_file(sample("not_pd.gram.json")); }) == Status::NotPositiveDefinite);
  CHECK(status_of([] { parse_gram_file(sample("oversize.gram.json")); }) == Status::UnsupportedSize);
  CHECK(status_of([] { parse_gram_file(sample("malformed.gram.json")); }) == Status::ParseError);
  CHECK(status_of([] { parse_gram_file("{\"n\": 1, \"scale\": 1, \"entries\": [[1]], \"format\": \"x\"}"); }) ==
        Status::ParseError);
  CHECK(status_of([] { parse_gram_file("{\"n\": 2, \"scale\": 1, \"entries\": [[1]]}"); }) != Status::Ok);
  CHECK(status_of([] { parse_gram_file("{\"n\": 1, \"scale\": 0, \"entries\": [[1]]}"); }) != Status::Ok);
  CHECK(status_of([] { parse_gram_file("not json"); }) == Status::ParseError);
  CHECK(status_of([] { read_text_file("/nonexistent/file"); }) == Status::IoError);
}

TEST_CASE("big integers round trip as strings") {
  GramFile f;
  f.n = 1;
  f.scale = Integer("100000000000000000000000");
  f.entries = IntMatrix(1, 1);
  f.entries(0, 0) = Integer("100000000000000000000001");
  const auto text = render_gram_file(f);
  CHECK(text.find("\"100000000000000000000001\"") != std::string::npos);
  const auto back = parse_gram_file(text);
  CHECK(back.scale == f.scale);
  CHECK(back.entries == f.entries);
  CHECK(render_gram_file(back) == text);
}

TEST_CASE("code file parsing") {
  const auto c = parse_code_file(data("n9d5.code.json"));
  CHECK(c.n == 9);
  CHECK(c.d == 5);
  CHECK(c.symmetry == SymmetryMode::Explicit);
  CHECK(c.perms.size() == 4);
  CHECK(render_code_file(c) == data("n9d5.code.json"));

  const auto toy = parse_code_file(data("n2d2.code.json"));
  CHECK(toy.symmetry == SymmetryMode::None);
  CHECK(toy.problem().group.empty());

  const auto auto_sym = parse_code_file(data("n4d2.code.json"));
  CHECK(auto_sym.symmetry == SymmetryMode::Auto);
  CHECK_FALSE(auto_sym.problem().group.empty());

  const auto reduced = parse_code_file(
      "{\"n\": 3, \"d\": 5, \"words\": [[6, -1, 10]], \"symmetry\": \"none\"}");
  CHECK(reduced.words[0] == int_vector({1, 4, 0}));
  CHECK(reduced.min_value == 1);
  CHECK(status_of([] { parse_code_file("{\"n\": 3, \"d\": 5, \"words\": [[1, 1]]}"); }) != Status::Ok);
  CHECK(status_of([] { parse_code_file("{\"n\": 2, \"d\": 2, \"words\": [[1, 1]], \"symmetry\": [[2, 2]]}"); }) !=
        Status::Ok);
  CHECK(status_of([] { parse_code_file("{\"n\": 2, \"d\": 2, \"words\": [[1, 1]], \"symmetry\": \"some\"}"); }) ==
        Status::ParseError);
}

TEST_CASE("explicit signed permutations") {
  const auto c = parse_code_file(
      "{\"n\": 2, \"d\": 2, \"words\": [[1, 1]], \"symmetry\": [[1, -2]]}");
  REQUIRE(c.perms.size() == 1);
  CHECK(c.perms[0].image == std::vector<std::size_t>{0, 1});
  CHECK(c.perms[0].sign == std::vector<int>{1, -1});
  CHECK(parse_code_file(render_code_file(c)).perms == c.perms);
}

TEST_CASE("analysis report round trip") {
  const auto f = catalog_gram("n10d5-min48");
  AnalysisOptions opt;
  opt.census = true;
  const auto doc = AnalysisDoc::from(f, analyze(f.gram(), opt));
  const auto json = doc.json();
  CHECK(AnalysisDoc::parse(json).json() == json);
  CHECK(rerender_report(json) == json);
  CHECK(json.back() == '\n');
  CHECK(doc.text().find("NONE") != std::string::npos);
}

TEST_CASE("realization report round trip") {
  const auto c = parse_code_file(data("n4d2.code.json"));
  const auto p = c.problem();
  const auto r = realize(p);
  RealizationDoc::Options opt;
  opt.vertices = opt.barycenter = opt.faces = true;
  const auto json = RealizationDoc::from(p, r, opt).json();
  CHECK(rerender_report(json) == json);

  const auto toy = parse_code_file(data("n2d2.code.json")).problem();
  const auto doc = RealizationDoc::from(toy, realize(toy), {});
  CHECK(doc.status == "infeasible");
  REQUIRE(doc.certificate);
  CHECK(doc.certificate->verified);
  CHECK(rerender_report(doc.json()) == doc.json());
}

TEST_CASE("verify and scan reports round trip") {
  VerifyDoc v;
  v.target = "x";
  v.checks.push_back({"suite", "claim", "value", true});
  v.checks.push_back({"suite", "other \"quoted\" claim", "", false});
  CHECK(rerender_report(v.json()) == v.json());
  CHECK(VerifyDoc::parse(v.json()).checks.size() == 2);

  const auto classes = parse_d6_classes(data("d6_classes.json"));
  ScanOptions opt;
  opt.limit = 2;
  const auto scan = scan_d6(classes, opt);
  CHECK(scan.scanned == 2);
  CHECK(scan.total_cases > 2574);
  CHECK(rerender_report(scan.json()) == scan.json());
  CHECK(status_of([] { rerender_report("{\"report\": \"nope\"}"); }) == Status::ParseError);
}

TEST_CASE("d6 classes and cases") {
  const auto classes = parse_d6_classes(data("d6_classes.json"));
  CHECK(classes.size() == 24);
  CHECK(status_of([] { parse_d6_classes("{\"classes\": [{\"name\": \"a\", \"m\": [0, 5, 4]}]}"); }) ==
        Status::ParseError);
  const std::vector<D6Class> one{{"m540", {5, 4, 0}}};
  const auto cases = d6_cases(one);
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) {
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(abs(c.y[i]) <= 3);
      CHECK(abs(c.z[i]) <= 2);
      CHECK(mpz_divisible_ui_p(Integer(c.y[i] - c.word[i]).get_mpz_t(), 3));
      CHECK(mpz_divisible_ui_p(Integer(c.z[i] - c.word[i]).get_mpz_t(), 2));
    }
  }
  const auto p = d6_problem(cases.front());
  CHECK(p.n() == 9);
  CHECK(p.extras.size() == 2);
  for (const auto& g : p.group) CHECK(preserves(g, p.emb.ebar, p.extras));
}
