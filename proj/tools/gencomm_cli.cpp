// Command-line front end. Everything mathematical goes through the C API
// in gencomm.h; this translation unit only parses flags, moves JSON
// around, and maps results onto the exit-code contract:
//   0  every check passed
//   1  a mathematical check failed (witnesses are in the report)
//   2  usage or input error

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencomm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { gc_string_free(s); }
};

struct GraphGuard {
  gc_graph* g = nullptr;
  ~GraphGuard() { gc_graph_free(g); }
};

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

int status_exit(gc_status st) {
  std::cerr << "error: " << gc_status_name(st) << ": " << gc_last_error() << "\n";
  return kExitUsage;
}

gc_field parse_field(const std::string& name) {
  if (name == "q") return GC_FIELD_RATIONAL;
  if (name == "gfp") return GC_FIELD_PRIME;
  throw CLI::ValidationError("--field", "expected q or gfp");
}

// Emits the report as JSON or CSV and returns the exit code implied by
// its "ok" flag.
int emit_report(const std::string& json_text, const std::string& format, const std::string& out_path) {
  nlohmann::json rep = nlohmann::json::parse(json_text);
  std::string payload;
  if (format == "json") {
    payload = rep.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream csv;
    if (rep.contains("nullities")) {
      csv << "trial,nullity\n";
      int t = 0;
      for (const auto& v : rep["nullities"]) csv << t++ << "," << v.get<int>() << "\n";
    } else if (rep.contains("all_zero")) {
      csv << "trials,all_zero\n"
          << rep["config"]["trials"].get<int>() << "," << (rep["all_zero"].get<bool>() ? 1 : 0) << "\n";
    } else {
      csv << "ok\n" << (rep["ok"].get<bool>() ? 1 : 0) << "\n";
    }
    payload = csv.str();
  } else {
    return fail_usage("unknown output format '" + format + "'");
  }
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path);
    if (!f) return fail_usage("cannot write " + out_path);
    f << payload;
  }
  return rep.value("ok", true) ? kExitOk : kExitCheckFailed;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact experiments on generalized commutator operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gc_version()));

  // shared option storage
  int n = 3, k = 2, m = 4, r = 1, a = 0, trials = 20;
  std::string j_sel = "all";
  int j_single = 0;
  std::uint64_t p = 0, seed = 1;
  std::string field = "gfp", out_fmt = "json", out_path, method = "direct";
  std::string graph_path, check_path;

  auto* conjecture = app.add_subcommand("conjecture", "sample the generic nullity of X -> [A_1..A_k, X]");
  conjecture->add_option("--n", n, "matrix size")->required();
  conjecture->add_option("--k", k, "number of factor matrices")->required();
  conjecture->add_option("--field", field, "q | gfp (default gfp)");
  conjecture->add_option("--p", p, "prime modulus (default 2^61-1 or GENCOMM_DEFAULT_P)");
  conjecture->add_option("--trials", trials, "number of random tuples");
  conjecture->add_option("--seed", seed, "root seed");
  conjecture->add_option("--out", out_fmt, "json | csv");
  conjecture->add_option("--output", out_path, "write the report to a file");

  auto* alcheck = app.add_subcommand("al-check", "verify the alternating product vanishes for m >= 2n");
  alcheck->add_option("--n", n, "matrix size")->required();
  alcheck->add_option("--m", m, "number of factors")->required();
  alcheck->add_option("--field", field, "q | gfp (default gfp)");
  alcheck->add_option("--p", p, "prime modulus");
  alcheck->add_option("--trials", trials, "number of random tuples");
  alcheck->add_option("--seed", seed, "root seed");
  alcheck->add_option("--out", out_fmt, "json | csv");
  alcheck->add_option("--output", out_path, "write the report to a file");

  auto* esum = app.add_subcommand("eulerian-sum", "signed Eulerian path count of a graph file");
  esum->add_option("--graph", graph_path, "graph JSON file")->required();
  esum->add_option("--start", a, "start vertex")->required();
  esum->add_option("--out", out_fmt, "json | csv");
  esum->add_option("--output", out_path, "write the report to a file");

  auto* block = app.add_subcommand("block", "one shifted-diagonal block of the specialized operator");
  block->add_option("--n", n, "matrix size")->required();
  block->add_option("--r", r, "half the factor count")->required();
  block->add_option("--j", j_single, "diagonal shift")->required();
  block->add_option("--method", method, "direct | operator");
  block->add_option("--out", out_fmt, "json");
  block->add_option("--output", out_path, "write the report to a file");

  auto* ic = app.add_subcommand("ic", "initial coefficient matrices");
  ic->add_option("--n", n, "matrix size")->required();
  ic->add_option("--r", r, "half the factor count")->required();
  ic->add_option("--j", j_sel, "shift index or 'all'");
  ic->add_option("--check", check_path, "compare against a matrix JSON file (exit 1 on mismatch)");
  ic->add_option("--out", out_fmt, "json");
  ic->add_option("--output", out_path, "write the report to a file");

  auto* maxg = app.add_subcommand("maximal-graph", "greatest admissible graph for a row and shift");
  maxg->add_option("--n", n, "matrix size")->required();
  maxg->add_option("--r", r, "half the factor count")->required();
  maxg->add_option("--a", a, "row vertex")->required();
  maxg->add_option("--j", j_single, "diagonal shift")->required();
  maxg->add_option("--out", out_fmt, "json");
  maxg->add_option("--output", out_path, "write the report to a file");

  auto* structure = app.add_subcommand("structure-report", "verify the initial-coefficient structure");
  structure->add_option("--n", n, "matrix size")->required();
  structure->add_option("--r", r, "half the factor count")->required();
  structure->add_option("--field", field, "q | gfp (default q)");
  structure->add_option("--p", p, "prime modulus");
  structure->add_option("--out", out_fmt, "json");
  structure->add_option("--output", out_path, "write the report to a file");
  bool structure_field_given = false;
  structure->callback([&] { structure_field_given = structure->count("--field") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    StringGuard rep;
    if (conjecture->parsed()) {
      if (k >= 10)
        std::cerr << "note: " << (k + 1) << " permutation factors per trial; expect long runtimes\n";
      gc_status st = gc_conjecture(n, k, parse_field(field), p, trials, seed, &rep.s);
      if (st != GC_OK) return status_exit(st);
      return emit_report(rep.s, out_fmt, out_path);
    }
    if (alcheck->parsed()) {
      if (m > 10)
        std::cerr << "note: " << m << " permutation factors per trial; expect long runtimes\n";
      gc_status st = gc_al_check(n, m, parse_field(field), p, trials, seed, &rep.s);
      if (st != GC_OK) return status_exit(st);
      return emit_report(rep.s, out_fmt, out_path);
    }
    if (esum->parsed()) {
      GraphGuard g;
      gc_status st = gc_graph_parse(read_file(graph_path).c_str(), &g.g);
      if (st != GC_OK) return status_exit(st);
      long long sum = 0;
      st = gc_graph_signed_sum(g.g, a, &sum);
      if (st != GC_OK) return status_exit(st);
      StringGuard gj;
      if (gc_graph_to_json(g.g, &gj.s) != GC_OK) return status_exit(GC_EINTERNAL);
      nlohmann::json out{{"schema", "gencomm-report/1"},
                         {"version", gc_version()},
                         {"command", "eulerian-sum"},
                         {"config", {{"graph", graph_path}, {"start", a}}},
                         {"graph", nlohmann::json::parse(gj.s)},
                         {"sum", sum},
                         {"ok", true}};
      return emit_report(out.dump(), out_fmt, out_path);
    }
    if (block->parsed()) {
      gc_status st = gc_block(n, r, j_single, method.c_str(), &rep.s);
      if (st != GC_OK) return status_exit(st);
      return emit_report(rep.s, out_fmt, out_path);
    }
    if (ic->parsed()) {
      int j = -1;
      if (j_sel != "all") {
        try {
          j = std::stoi(j_sel);
        } catch (...) {
          return fail_usage("--j expects a shift index or 'all'");
        }
      }
      gc_status st = gc_ic(n, r, j, &rep.s);
      if (st != GC_OK) return status_exit(st);
      if (!check_path.empty()) {
        nlohmann::json got = nlohmann::json::parse(std::string(rep.s));
        nlohmann::json want = nlohmann::json::parse(read_file(check_path));
        // The fixture holds one matrix per shift under "matrices".
        nlohmann::json result = got;
        bool match = true;
        nlohmann::json witnesses = nlohmann::json::array();
        for (auto it = want.at("matrices").begin(); it != want.at("matrices").end(); ++it) {
          if (!got["matrices"].contains(it.key()) || got["matrices"][it.key()] != it.value()) {
            match = false;
            witnesses.push_back({{"j", it.key()}, {"expected", it.value()}});
          }
        }
        result["check"] = {{"file", check_path}, {"match", match}, {"witnesses", witnesses}};
        result["ok"] = match;
        return emit_report(result.dump(), out_fmt, out_path);
      }
      return emit_report(rep.s, out_fmt, out_path);
    }
    if (maxg->parsed()) {
      gc_status st = gc_maximal_graph(n, r, a, j_single, &rep.s);
      if (st != GC_OK) return status_exit(st);
      return emit_report(rep.s, out_fmt, out_path);
    }
    if (structure->parsed()) {
      if (!structure_field_given) field = "q";  // exact by default here
      gc_status st = gc_structure_report(n, r, parse_field(field), p, &rep.s);
      if (st != GC_OK) return status_exit(st);
      return emit_report(rep.s, out_fmt, out_path);
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }
  return fail_usage("no subcommand");
}
