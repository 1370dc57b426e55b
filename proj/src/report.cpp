#include "report.hpp"

#include <cstdlib>

namespace gencomm {

std::uint64_t default_prime() {
  const char* env = std::getenv("GENCOMM_DEFAULT_P");
  if (!env) return GfElem::kDefaultModulus;
  std::uint64_t p = std::strtoull(env, nullptr, 10);
  if (!is_prime_u64(p)) throw std::invalid_argument("GENCOMM_DEFAULT_P is not prime");
  return p;
}

nlohmann::json field_to_json(const FieldConfig& f) {
  if (f.kind == FieldKind::kRational) return {{"kind", "q"}};
  return {{"kind", "gfp"}, {"p", std::to_string(f.p)}};
}

FieldConfig field_from(const std::string& kind, std::uint64_t p) {
  FieldConfig f;
  if (kind == "q" || kind == "rational") {
    f.kind = FieldKind::kRational;
  } else if (kind == "gfp" || kind == "prime") {
    f.kind = FieldKind::kPrime;
    f.p = p ? p : default_prime();
    if (!is_prime_u64(f.p)) throw std::invalid_argument("field modulus is not prime");
  } else {
    throw std::invalid_argument("unknown field kind '" + kind + "' (expected q or gfp)");
  }
  return f;
}

nlohmann::json report_envelope(const std::string& command, nlohmann::json config) {
  return nlohmann::json{
      {"schema", kReportSchema}, {"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

nlohmann::json conjecture_report_json(const ConjectureReport& rep) {
  nlohmann::json j = report_envelope("conjecture", {{"n", rep.n},
                                                    {"k", rep.k},
                                                    {"field", field_to_json(rep.field)},
                                                    {"trials", rep.trials},
                                                    {"seed", rep.seed}});
  j["expected_nullity"] = rep.expected_nullity;
  j["asserted"] = rep.asserted;
  j["nullities"] = rep.nullities;
  j["agreeing"] = rep.agreeing;
  nlohmann::json witnesses = nlohmann::json::array();
  for (int t = 0; t < rep.trials; ++t)
    if (rep.nullities[static_cast<size_t>(t)] != rep.expected_nullity)
      witnesses.push_back({{"trial", t}, {"nullity", rep.nullities[static_cast<size_t>(t)]}});
  j["witnesses"] = witnesses;
  j["ok"] = !rep.asserted || rep.ok;
  return j;
}

nlohmann::json al_check_report_json(const AlCheckReport& rep) {
  nlohmann::json j = report_envelope("al-check", {{"n", rep.n},
                                                  {"m", rep.m},
                                                  {"field", field_to_json(rep.field)},
                                                  {"trials", rep.trials},
                                                  {"seed", rep.seed}});
  j["all_zero"] = rep.all_zero;
  j["witnesses"] = rep.failing_trials;
  j["ok"] = rep.all_zero;
  return j;
}

nlohmann::json block_report_json(int n, int r, int j, const std::string& method) {
  BlockOperator blk = method == "operator" ? block_via_operator(n, r, j) : block_direct(n, r, j);
  nlohmann::json rep =
      report_envelope("block", {{"n", n}, {"r", r}, {"j", j}, {"method", method}});
  rep["block"] = block_to_json(blk);
  rep["ok"] = true;
  return rep;
}

nlohmann::json ic_report_json(int n, int r, int j) {
  Exponents e = Exponents::canonical(r);
  if (n <= r) throw std::invalid_argument("ic: need n > r");
  nlohmann::json mats = nlohmann::json::object();
  nlohmann::json nullities = nlohmann::json::object();
  auto add = [&](int shift) {
    Matrix<Int> ic = ic_via_maximal(shift, n, e);
    mats[std::to_string(shift)] = matrix_to_json(ic);
    nullities[std::to_string(shift)] = nullity(ic);
  };
  if (j < 0)
    for (int shift = 0; shift < n; ++shift) add(shift);
  else
    add(((j % n) + n) % n);
  nlohmann::json rep = report_envelope("ic", {{"n", n}, {"r", r}, {"j", j < 0 ? "all" : std::to_string(j)}});
  rep["matrices"] = mats;
  rep["nullities"] = nullities;
  rep["ok"] = true;
  return rep;
}

nlohmann::json maximal_graph_report_json(int n, int r, int a, int j) {
  Exponents e = Exponents::canonical(r);
  LabeledDigraph g = maximal_graph(a, j, n, e);
  nlohmann::json rep = report_envelope("maximal-graph", {{"n", n}, {"r", r}, {"a", a}, {"j", j}});
  rep["graph"] = g.to_json();
  rep["top_flower_t"] = max_top_flower(a, j, n, e);
  rep["ok"] = true;
  return rep;
}

nlohmann::json structure_report_json(int n, int r, const FieldConfig& f) {
  StructureReport sr = structure_report(n, r, f);
  nlohmann::json rep = report_envelope("structure-report", {{"n", n}, {"r", r}, {"field", field_to_json(f)}});
  rep.update(structure_report_to_json(sr));
  return rep;
}

nlohmann::json eulerian_sum_report_json(const LabeledDigraph& g, int start) {
  nlohmann::json rep = report_envelope("eulerian-sum", {{"graph", g.to_json()}, {"start", start}});
  rep["sum"] = g.signed_sum(start);
  rep["paths"] = static_cast<long long>(g.eulerian_paths(start).size());
  rep["ok"] = true;
  return rep;
}

}  // namespace gencomm
