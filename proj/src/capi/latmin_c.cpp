#include "latmin/latmin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "latmin/catalog.hpp"
#include "latmin/io.hpp"
#include "latmin/report.hpp"
#include "latmin/scan.hpp"
#include "latmin/verify.hpp"

struct latmin_gram {
  latmin::GramFile file;
};

struct latmin_code {
  latmin::CodeFile file;
};

struct latmin_report {
  std::string json;
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string g_error;

latmin_status fail(latmin::Status s, const char* what) {
  g_error = what;
  return static_cast<latmin_status>(s);
}

template <class F>
latmin_status guarded(F&& f) {
  g_error.clear();
  try {
    f();
    return LATMIN_OK;
  } catch (const latmin::Error& e) {
    return fail(e.status(), e.what());
  } catch (const std::bad_alloc&) {
    return fail(latmin::Status::Internal, "out of memory");
  } catch (const std::exception& e) {
    return fail(latmin::Status::Internal, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw latmin::Error(latmin::Status::InvalidArgument, std::string(what) + " is null");
}

latmin::RealizationOptions options(size_t cap) {
  latmin::RealizationOptions o;
  if (cap) o.iteration_cap = cap;
  return o;
}

template <class Doc>
latmin_report* make_report(const Doc& d) {
  auto* r = new latmin_report;
  r->json = d.json();
  r->text = d.text();
  return r;
}

}  // namespace

extern "C" {

const char* latmin_version(void) { return "0.1.0"; }

const char* latmin_status_name(latmin_status s) { return latmin::status_name(static_cast<latmin::Status>(s)); }

const char* latmin_last_error(void) { return g_error.c_str(); }

latmin_status latmin_gram_parse(const char* text, latmin_gram** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new latmin_gram{latmin::parse_gram_file(text)};
  });
}

latmin_status latmin_gram_load(const char* path, latmin_gram** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new latmin_gram{latmin::parse_gram_file(latmin::read_text_file(path))};
  });
}

latmin_status latmin_gram_embedded(const char* name, latmin_gram** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new latmin_gram{latmin::catalog_gram(name)};
  });
}

size_t latmin_gram_dim(const latmin_gram* g) { return g ? g->file.n : 0; }

char* latmin_gram_render(const latmin_gram* g) { return g ? dup(latmin::render_gram_file(g->file)) : nullptr; }

void latmin_gram_free(latmin_gram* g) { delete g; }

latmin_status latmin_code_parse(const char* text, latmin_code** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new latmin_code{latmin::parse_code_file(text)};
  });
}

latmin_status latmin_code_load(const char* path, latmin_code** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new latmin_code{latmin::parse_code_file(latmin::read_text_file(path))};
  });
}

latmin_status latmin_code_embedded(const char* name, latmin_code** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new latmin_code{latmin::catalog_code(name)};
  });
}

size_t latmin_code_dim(const latmin_code* c) { return c ? c->file.n : 0; }

char* latmin_code_render(const latmin_code* c) { return c ? dup(latmin::render_code_file(c->file)) : nullptr; }

void latmin_code_free(latmin_code* c) { delete c; }

latmin_status latmin_analyze(const latmin_gram* g, unsigned flags, latmin_report** out) {
  return guarded([&] {
    need(g, "gram");
    need(out, "out");
    latmin::AnalysisOptions o;
    o.census = flags & LATMIN_ANALYZE_CENSUS;
    *out = make_report(latmin::AnalysisDoc::from(g->file, latmin::analyze(g->file.gram(), o)));
  });
}

latmin_status latmin_realize(const latmin_code* c, unsigned flags, size_t iteration_cap, latmin_report** out) {
  latmin::RealizationDoc::Options ro;
  ro.vertices = flags & LATMIN_REALIZE_VERTICES;
  ro.barycenter = flags & LATMIN_REALIZE_BARYCENTER;
  ro.faces = flags & LATMIN_REALIZE_FACES;
  latmin::RealizationProblem p;
  return guarded([&] {
    need(c, "code");
    need(out, "out");
    *out = nullptr;
    p = c->file.problem();
    try {
      *out = make_report(latmin::RealizationDoc::from(p, latmin::realize(p, options(iteration_cap)), ro));
    } catch (const latmin::IterationLimitExceeded& e) {
      *out = make_report(latmin::RealizationDoc::from(p, e.partial(), ro));
      throw;
    }
  });
}

latmin_status latmin_verify(const char* target, size_t iteration_cap, latmin_report** out) {
  return guarded([&] {
    need(target, "target");
    need(out, "out");
    const auto doc = latmin::verify_target(target, options(iteration_cap));
    *out = make_report(doc);
    (*out)->passed = doc.passed;
  });
}

latmin_status latmin_cases_d6(const char* classes_path, size_t limit, unsigned workers, size_t iteration_cap,
                              latmin_report** out) {
  return guarded([&] {
    need(classes_path, "classes_path");
    need(out, "out");
    latmin::ScanOptions o;
    o.limit = limit;
    o.workers = workers;
    o.realize = options(iteration_cap);
    const auto classes = latmin::parse_d6_classes(latmin::read_text_file(classes_path));
    *out = make_report(latmin::scan_d6(classes, o));
  });
}

const char* latmin_report_json(const latmin_report* r) { return r ? r->json.c_str() : ""; }
const char* latmin_report_text(const latmin_report* r) { return r ? r->text.c_str() : ""; }
int latmin_report_passed(const latmin_report* r) { return r && r->passed ? 1 : 0; }
void latmin_report_free(latmin_report* r) { delete r; }

latmin_status latmin_report_rerender(const char* json, char** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = dup(latmin::rerender_report(json));
  });
}

void latmin_string_free(char* s) { std::free(s); }

}  // extern "C"
