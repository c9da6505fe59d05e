// latmin command line: analyze, realize, verify, cases-d6.
//
// Exit codes: 0 pass, 1 check failure, 2 invalid input, 3 unsupported size,
// 4 iteration cap, 5 asymmetric matrix, 70 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "latmin/latmin.h"

#ifndef LATMIN_DATA_DIR
#define LATMIN_DATA_DIR "data"
#endif

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInvalid = 2, kTooLarge = 3, kIterationCap = 4, kAsymmetric = 5, kInternal = 70 };

int exit_code(latmin_status s) {
  switch (s) {
    case LATMIN_OK: return kPass;
    case LATMIN_E_UNSUPPORTED_SIZE:
    case LATMIN_E_GROUP_TOO_LARGE: return kTooLarge;
    case LATMIN_E_ITERATION_LIMIT: return kIterationCap;
    case LATMIN_E_NOT_SYMMETRIC: return kAsymmetric;
    case LATMIN_E_INTERNAL: return kInternal;
    default: return kInvalid;
  }
}

int report_error(latmin_status s) {
  std::fprintf(stderr, "latmin: %s: %s\n", latmin_status_name(s), latmin_last_error());
  return exit_code(s);
}

// 0 = library default; -1 = malformed
long iteration_cap() {
  const char* v = std::getenv("LATMIN_ITER_CAP");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long cap = std::strtol(v, &end, 10);
  if (*end != '\0' || cap <= 0) return -1;
  return cap;
}

void emit(const latmin_report* r, bool json) {
  std::fputs(json ? latmin_report_json(r) : latmin_report_text(r), stdout);
}

struct Source {
  std::string path;
  std::string embedded;
};

void add_source(CLI::App* cmd, Source& src, const char* kind) {
  auto* p = cmd->add_option("path", src.path, std::string(kind) + " file");
  auto* e = cmd->add_option("--embedded", src.embedded, "use a built-in " + std::string(kind));
  p->excludes(e);
  e->excludes(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimal-vector analysis and code realization for low-dimensional lattices"};
  app.require_subcommand(1);

  bool json = false;
  bool census = false;
  Source gram_src;
  auto* analyze = app.add_subcommand("analyze", "minimum, kissing number, maximal index and minimal bases of a Gram file");
  add_source(analyze, gram_src, "Gram");
  analyze->add_flag("--census", census, "quotient type of every independent n-subset");
  analyze->add_flag("--json", json, "JSON report");

  Source code_src;
  bool vertices = false, barycenter = false, faces = false;
  auto* realize = app.add_subcommand("realize", "realization polytope of a code with prescribed minimal vectors");
  add_source(realize, code_src, "code");
  realize->add_flag("--vertices", vertices, "print every vertex");
  realize->add_flag("--barycenter", barycenter, "print the scaled barycenter");
  realize->add_flag("--faces", faces, "analyze the barycenters of the facets");
  realize->add_flag("--json", json, "JSON report");

  std::string target;
  auto* verify = app.add_subcommand("verify", "check the computational claims for n9d5 and n10d5");
  verify->add_option("target", target, "paper-9d5 | paper-10d5 | all")->required();
  verify->add_flag("--json", json, "JSON report");

  std::string classes;
  std::size_t limit = 0;
  unsigned parallel = 1;
  auto* cases = app.add_subcommand("cases-d6", "feasibility scan of the index-6 cases in dimension 9");
  cases->add_option("--classes", classes, "class descriptor file (default: data/d6_classes.json)");
  cases->add_option("--limit", limit, "scan only the first N cases");
  cases->add_option("--parallel", parallel, "worker threads")->check(CLI::Range(1u, 256u));
  cases->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInvalid;
  }

  const long cap = iteration_cap();
  if (cap < 0) {
    std::fprintf(stderr, "latmin: LATMIN_ITER_CAP must be a positive integer\n");
    return kInvalid;
  }

  latmin_report* report = nullptr;
  latmin_status st = LATMIN_OK;

  if (analyze->parsed()) {
    latmin_gram* g = nullptr;
    if (gram_src.path.empty() && gram_src.embedded.empty()) {
      std::fprintf(stderr, "latmin: analyze needs a path or --embedded\n");
      return kInvalid;
    }
    st = gram_src.embedded.empty() ? latmin_gram_load(gram_src.path.c_str(), &g)
                                   : latmin_gram_embedded(gram_src.embedded.c_str(), &g);
    if (st != LATMIN_OK) return report_error(st);
    st = latmin_analyze(g, census ? LATMIN_ANALYZE_CENSUS : 0u, &report);
    latmin_gram_free(g);
  } else if (realize->parsed()) {
    latmin_code* c = nullptr;
    if (code_src.path.empty() && code_src.embedded.empty()) {
      std::fprintf(stderr, "latmin: realize needs a path or --embedded\n");
      return kInvalid;
    }
    st = code_src.embedded.empty() ? latmin_code_load(code_src.path.c_str(), &c)
                                   : latmin_code_embedded(code_src.embedded.c_str(), &c);
    if (st != LATMIN_OK) return report_error(st);
    unsigned flags = 0;
    if (vertices) flags |= LATMIN_REALIZE_VERTICES;
    if (barycenter) flags |= LATMIN_REALIZE_BARYCENTER;
    if (faces) flags |= LATMIN_REALIZE_FACES;
    st = latmin_realize(c, flags, static_cast<std::size_t>(cap), &report);
    latmin_code_free(c);
    if (st == LATMIN_E_ITERATION_LIMIT && report) {
      emit(report, json);
      latmin_report_free(report);
      return report_error(st);
    }
  } else if (verify->parsed()) {
    st = latmin_verify(target.c_str(), static_cast<std::size_t>(cap), &report);
  } else if (cases->parsed()) {
    if (classes.empty()) {
      const char* dir = std::getenv("LATMIN_DATA_DIR");
      classes = std::string(dir && *dir ? dir : LATMIN_DATA_DIR) + "/d6_classes.json";
    }
    st = latmin_cases_d6(classes.c_str(), limit, parallel, static_cast<std::size_t>(cap), &report);
  }

  if (st != LATMIN_OK) return report_error(st);
  emit(report, json);
  const int code = latmin_report_passed(report) ? kPass : kCheckFailed;
  latmin_report_free(report);
  return code;
}
