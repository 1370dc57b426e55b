#include "gencomm.h"

#include <cstring>
#include <new>
#include <string>

#include "report.hpp"

using namespace gencomm;

struct gc_graph {
  LabeledDigraph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, mapping exceptions onto status codes and the
// thread-local error message.
template <class Fn>
gc_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return GC_OK;
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return GC_EPARSE;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return GC_EINVAL;
  } catch (const std::domain_error& e) {
    t_last_error = e.what();
    return GC_EDOMAIN;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GC_EINTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return GC_EINTERNAL;
  }
}

FieldConfig make_field(gc_field field, uint64_t p) {
  return field_from(field == GC_FIELD_RATIONAL ? "q" : "gfp", p);
}

}  // namespace

extern "C" {

const char* gc_version(void) { return kVersion; }

const char* gc_status_name(gc_status s) {
  switch (s) {
    case GC_OK: return "ok";
    case GC_EINVAL: return "invalid argument";
    case GC_EPARSE: return "parse error";
    case GC_EDOMAIN: return "domain error";
    case GC_EINTERNAL: return "internal error";
  }
  return "unknown";
}

const char* gc_last_error(void) { return t_last_error.c_str(); }

void gc_string_free(char* s) { delete[] s; }

uint64_t gc_default_prime(void) {
  try {
    return default_prime();
  } catch (...) {
    return GfElem::kDefaultModulus;
  }
}

gc_status gc_graph_parse(const char* json, gc_graph** out) {
  return guarded([&] {
    if (!json || !out) throw std::invalid_argument("gc_graph_parse: null argument");
    *out = new gc_graph{LabeledDigraph::from_json(nlohmann::json::parse(json))};
  });
}

gc_status gc_graph_to_json(const gc_graph* g, char** out_json) {
  return guarded([&] {
    if (!g || !out_json) throw std::invalid_argument("gc_graph_to_json: null argument");
    *out_json = dup_string(g->g.to_json().dump());
  });
}

void gc_graph_free(gc_graph* g) { delete g; }

gc_status gc_graph_with_extra_edge(const gc_graph* g, int source, gc_graph** out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("gc_graph_with_extra_edge: null argument");
    *out = new gc_graph{g->g.with_extra_edge(source)};
  });
}

gc_status gc_graph_eulerian_path_exists(const gc_graph* g, int from, int to, int* out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("gc_graph_eulerian_path_exists: null argument");
    *out = g->g.has_eulerian_path(from, to) ? 1 : 0;
  });
}

gc_status gc_graph_signed_sum(const gc_graph* g, int start, long long* out) {
  return guarded([&] {
    if (!g || !out) throw std::invalid_argument("gc_graph_signed_sum: null argument");
    *out = g->g.signed_sum(start);
  });
}

gc_status gc_conjecture(int n, int k, gc_field field, uint64_t p, int trials, uint64_t seed,
                        char** report_json) {
  return guarded([&] {
    if (!report_json) throw std::invalid_argument("gc_conjecture: null output");
    ConjectureReport rep = conjecture_experiment(n, k, make_field(field, p), trials, seed);
    *report_json = dup_string(conjecture_report_json(rep).dump(2));
  });
}

gc_status gc_al_check(int n, int m, gc_field field, uint64_t p, int trials, uint64_t seed,
                      char** report_json) {
  return guarded([&] {
    if (!report_json) throw std::invalid_argument("gc_al_check: null output");
    AlCheckReport rep = al_check(n, m, make_field(field, p), trials, seed);
    *report_json = dup_string(al_check_report_json(rep).dump(2));
  });
}

gc_status gc_block(int n, int r, int j, const char* method, char** report_json) {
  return guarded([&] {
    if (!report_json || !method) throw std::invalid_argument("gc_block: null argument");
    std::string m(method);
    if (m != "direct" && m != "operator")
      throw std::invalid_argument("gc_block: method must be 'direct' or 'operator'");
    *report_json = dup_string(block_report_json(n, r, j, m).dump(2));
  });
}

gc_status gc_ic(int n, int r, int j, char** report_json) {
  return guarded([&] {
    if (!report_json) throw std::invalid_argument("gc_ic: null output");
    *report_json = dup_string(ic_report_json(n, r, j).dump(2));
  });
}

gc_status gc_maximal_graph(int n, int r, int a, int j, char** report_json) {
  return guarded([&] {
    if (!report_json) throw std::invalid_argument("gc_maximal_graph: null output");
    *report_json = dup_string(maximal_graph_report_json(n, r, a, j).dump(2));
  });
}

gc_status gc_structure_report(int n, int r, gc_field field, uint64_t p, char** report_json) {
  return guarded([&] {
    if (!report_json) throw std::invalid_argument("gc_structure_report: null output");
    *report_json = dup_string(structure_report_json(n, r, make_field(field, p)).dump(2));
  });
}

}  // extern "C"
