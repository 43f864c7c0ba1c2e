#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "barnette/io.hpp"
#include "barnette/oracle.hpp"
#include "barnette/partition.hpp"
#include "barnette/verify.hpp"

namespace {

using nlohmann::json;
using namespace barnette;

constexpr int kExitValidation = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBadPath = 4;
constexpr int kExitCaseExhausted = 5;
constexpr int kExitPropertyViolation = 6;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

struct Options {
  std::string format = "rot1";
  std::string out_path;
  bool timings = false;
};

InstanceRecord load_instance(const std::string& input, const std::string& format) {
  std::ifstream f(input, std::ios::binary);
  if (!f) fail(ErrorKind::MalformedStream, "cannot open " + input);
  if (format == "rot1") {
    auto g = read_rot1(f);
    return make_record(input, std::move(g), "file:" + input);
  }
  if (format == "planar_code") {
    auto entries = read_planar_code(f, input);
    for (auto& e : entries)
      if (e.record) return std::move(*e.record);
    fail(ErrorKind::MalformedStream, "no valid graph in " + input);
  }
  fail(ErrorKind::MalformedStream, "unknown format " + format);
}

void emit(const json& j, const Options& opt) {
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    f << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

json base_report(const std::string& instance, const std::string& command) {
  json j;
  j["instance"] = instance;
  j["command"] = command;
  j["artifacts"] = json::array();
  return j;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::HypothesisViolated:
      return kExitHypothesis;
    case ErrorKind::NotAPath:
    case ErrorKind::NotSameColor:
      return kExitBadPath;
    case ErrorKind::CaseExhausted:
      return kExitCaseExhausted;
    default:
      return kExitValidation;
  }
}

json hypothesis_to_json(const HypothesisReport& rep) {
  return json::parse(hypothesis_json(rep));
}

int cmd_check(const std::string& input, const Options& opt) {
  Timer t;
  json j = base_report(input, "check");
  try {
    InstanceRecord rec = load_instance(input, opt.format);
    j["n"] = rec.graph.vertex_count();
    j["edges"] = rec.graph.edge_count();
    j["faces"] = rec.graph.face_count();
    j["hypothesis"] = hypothesis_to_json(rec.hypothesis);
    j["outcome"] = rec.hypothesis.holds() ? "ok" : "hypothesis-failed";
    if (opt.timings) j["timings"] = {{"total_ms", t.ms()}};
    emit(j, opt);
    return rec.hypothesis.holds() ? 0 : kExitHypothesis;
  } catch (const Error& e) {
    j["outcome"] = "error";
    j["error"] = e.what();
    emit(j, opt);
    return kExitValidation;
  }
}

int cmd_partition(const std::string& input, const std::string& path_arg, const std::string& mode,
                  const std::string& dot_path, const std::string& dot_dual_path, bool exhaustive,
                  const Options& opt) {
  Timer t;
  json j = base_report(input, "partition");
  try {
    InstanceRecord rec = load_instance(input, opt.format);
    PathABC abc{};
    {
      std::istringstream ps(path_arg);
      char comma;
      if (!(ps >> abc.a >> comma >> abc.b >> comma >> abc.c))
        fail(ErrorKind::NotAPath, "expected --path a,b,c");
    }
    std::vector<std::string> trace;
    TreePartition p;
    if (exhaustive) {
      PartitionConstraint c;
      if (mode == "through")
        c.require_S = {abc.a, abc.b, abc.c};
      else
        c = PartitionConstraint{{abc.a, abc.b}, {abc.c}};
      p = base_case_partition(rec.graph, c);
      trace.push_back("exhaustive");
    } else if (mode == "through") {
      p = partition_through(rec.graph, abc, &trace);
    } else if (mode == "edge-avoid") {
      p = partition_edge_avoid(rec.graph, abc, &trace);
    } else {
      fail(ErrorKind::NotAPath, "unknown mode " + mode);
    }
    DualGraph d = build_dual(rec.graph);
    HamCycle h = partition_to_ham(rec.graph, p, d);
    j["mode"] = mode == "through" ? "through" : "edge_avoid";
    j["path"] = {abc.a, abc.b, abc.c};
    j["S"] = p.S;
    j["T"] = p.T;
    j["case_trace"] = trace;
    j["ham_cycle"] = h.order;
    j["outcome"] = "ok";
    if (!dot_path.empty()) {
      std::ofstream df(dot_path);
      df << dot_primal(rec.graph, &p);
      j["artifacts"].push_back(dot_path);
    }
    if (!dot_dual_path.empty()) {
      std::ofstream df(dot_dual_path);
      df << dot_dual(d, &h);
      j["artifacts"].push_back(dot_dual_path);
    }
    if (opt.timings) j["timings"] = {{"total_ms", t.ms()}};
    emit(j, opt);
    return 0;
  } catch (const Error& e) {
    j["outcome"] = "error";
    j["error"] = e.what();
    emit(j, opt);
    return exit_code_for(e);
  }
}

int cmd_verify(const std::string& input, bool use_oracle, int jobs, const Options& opt) {
  Timer t;
  json j = base_report(input, "verify");
  try {
    InstanceRecord rec = load_instance(input, opt.format);
    SweepResult r = verify_sweep(rec, use_oracle, jobs);
    j["hypothesis"] = hypothesis_to_json(rec.hypothesis);
    j["paths_total"] = r.paths_total;
    j["paths_checked"] = r.paths_checked;
    j["through_checked"] = r.through_checked;
    j["property_failures"] = r.property_failures;
    j["oracle_used"] = r.oracle_used;
    j["oracle_skipped"] = r.oracle_skipped;
    j["oracle_disagreements"] = r.oracle_disagreements;
    j["seeds_audited"] = r.seeds_audited;
    j["seed_audit_failures"] = r.seed_audit_failures;
    j["failures"] = r.failures;
    if (!r.hypothesis_ok) {
      j["outcome"] = "hypothesis-failed";
      if (opt.timings) j["timings"] = {{"total_ms", t.ms()}};
      emit(j, opt);
      return kExitHypothesis;
    }
    j["outcome"] = r.ok() ? "ok" : "property-violation";
    if (opt.timings) j["timings"] = {{"total_ms", t.ms()}};
    emit(j, opt);
    return r.ok() ? 0 : kExitPropertyViolation;
  } catch (const Error& e) {
    j["outcome"] = "error";
    j["error"] = e.what();
    emit(j, opt);
    return exit_code_for(e);
  }
}

int cmd_gen(const std::string& catalog_name, int steps, uint64_t seed, const Options& opt) {
  json j = base_report(catalog_name.empty() ? "generated" : catalog_name, "gen");
  try {
    InstanceRecord rec =
        catalog_name.empty() ? random_instance(seed, steps) : catalog(catalog_name);
    std::string path = opt.out_path.empty() ? rec.name + ".rot" : opt.out_path;
    std::ofstream f(path, std::ios::binary);
    if (opt.format == "planar_code")
      write_planar_code_one(rec.graph, f);
    else
      write_rot1(rec.graph, f);
    j["artifacts"].push_back(path);
    j["instance"] = rec.name;
    j["n"] = rec.graph.vertex_count();
    json degs = json::array();
    for (int v = 0; v < rec.graph.vertex_count(); ++v) degs.push_back(rec.graph.degree(v));
    j["degrees"] = degs;
    j["provenance"] = rec.provenance;
    j["hypothesis"] = hypothesis_to_json(rec.hypothesis);
    j["outcome"] = "ok";
    Options stdout_only = opt;
    stdout_only.out_path.clear();
    emit(j, stdout_only);
    return 0;
  } catch (const Error& e) {
    j["outcome"] = "error";
    j["error"] = e.what();
    Options stdout_only = opt;
    stdout_only.out_path.clear();
    emit(j, stdout_only);
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-tree partitions of even plane triangulations and dual Hamilton cycles"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "input/output graph format")
      ->check(CLI::IsMember({"rot1", "planar_code"}));
  app.add_option("--out", opt.out_path, "write the report (or generated file) here");
  app.add_flag("--timings", opt.timings, "include wall-clock timings in the report");

  std::string input, path_arg, mode = "edge-avoid", dot_path, dot_dual_path, catalog_name;
  bool sweep = false, use_oracle = false, exhaustive = false;
  int jobs = 1, steps = 0;
  uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "validate, color and test the acyclicity hypothesis");
  check->add_option("input", input, "graph file")->required();

  auto* part = app.add_subcommand("partition", "produce a two-tree partition for a path");
  part->add_option("input", input, "graph file")->required();
  part->add_option("--path", path_arg, "path a,b,c")->required();
  part->add_option("--mode", mode, "through | edge-avoid")
      ->check(CLI::IsMember({"through", "edge-avoid"}));
  part->add_option("--dot", dot_path, "write a DOT rendering of the partition");
  part->add_option("--dot-dual", dot_dual_path, "write a DOT rendering of the dual cycle");
  part->add_flag("--exhaustive", exhaustive, "bypass the constructive drivers");

  auto* verify = app.add_subcommand("verify", "sweep all paths and verify both properties");
  verify->add_option("input", input, "graph file")->required();
  verify->add_flag("--sweep", sweep, "sweep every path (default behaviour)");
  verify->add_flag("--oracle", use_oracle, "cross-check against the brute-force oracles");
  verify->add_option("--jobs", jobs, "parallel workers over paths")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "write an instance file");
  gen->add_option("--catalog", catalog_name, "catalog instance name");
  gen->add_option("--steps", steps, "number of octahedral expansions");
  gen->add_option("--seed", seed, "expansion seed");

  for (auto* sc : {check, part, verify, gen}) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cmd_check(input, opt);
  if (part->parsed())
    return cmd_partition(input, path_arg, mode, dot_path, dot_dual_path, exhaustive, opt);
  if (verify->parsed()) return cmd_verify(input, use_oracle, jobs, opt);
  if (gen->parsed()) return cmd_gen(catalog_name, steps, seed, opt);
  return 1;
}
