// Copyright 2026 The patc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "patc/driver.hpp"
#include "patc/parser.hpp"
#include "patc/pretty.hpp"
#include "patc/runtime.hpp"
#include "patc/semantics.hpp"

using namespace patc;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json diags_json(const std::vector<Diagnostic>& ds) {
  json a = json::array();
  for (auto& d : ds) a.push_back(json::parse(to_json_text(d)));
  return a;
}

json times_json(const std::vector<PhaseTime>& ts) {
  json o = json::object();
  for (auto& t : ts) o[t.name] = t.ms;
  return o;
}

void print_diags(const std::vector<Diagnostic>& ds) {
  for (auto& d : ds) std::cerr << render(d);
}

void print_times(const std::vector<PhaseTime>& ts) {
  double total = 0;
  for (auto& t : ts) {
    fmt::print(stderr, "{:>12} {:10.3f} ms\n", t.name, t.ms);
    total += t.ms;
  }
  fmt::print(stderr, "{:>12} {:10.3f} ms\n", "total", total);
}

void dump_constraints(const CheckReport& r) {
  if (!r.typing) return;
  for (auto& c : r.typing->constraints)
    std::cout << types::to_string(c) << "  # " << c.origin.rule << " @ " << r.file << ":" << c.origin.span.line
              << ":" << c.origin.span.col << "\n";
  if (r.solution)
    for (auto& [v, p] : *r.solution) std::cout << to_string(Pattern::var(v)) << " = " << to_string(p) << "\n";
}

int write_smtlib(const CheckReport& r, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto stem = fs::path(r.file).stem().string();
  auto qs = smt_queries(r);
  for (size_t i = 0; i < qs.size(); ++i) {
    std::ofstream out(fs::path(dir) / fmt::format("{}.{}.smt2", stem, i));
    if (!out) {
      std::cerr << "patc: cannot write to " << dir << "\n";
      return kExitIo;
    }
    out << qs[i].script;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string file;
  std::string mode = "interface";
  bool dump = false;
  std::string smtlib;
  bool json = false;
  bool time = false;
};

int cmd_check(const CheckArgs& a) {
  CheckOptions opt;
  opt.mode = *mode_from_name(a.mode);
  auto r = check_file(a.file, opt);
  if (r.ok() && !a.smtlib.empty()) {
    int rc = write_smtlib(r, a.smtlib);
    if (rc) return rc;
  }
  if (a.json) {
    json o{{"command", "check"},
           {"file", r.file},
           {"mode", a.mode},
           {"exit_code", r.exit_code},
           {"diagnostics", diags_json(r.diags)},
           {"times_ms", times_json(r.times)}};
    if (r.typing) o["constraints"] = r.typing->constraints.size();
    std::cout << o.dump(2) << "\n";
    return r.exit_code;
  }
  if (a.dump) dump_constraints(r);
  print_diags(r.diags);
  if (r.ok())
    std::cout << fmt::format("{}: ok ({} mode, {} constraints, {} pattern variables)\n", r.file, a.mode,
                             r.typing->constraints.size(), r.typing->num_vars);
  if (a.time) print_times(r.times);
  return r.exit_code;
}

struct RunArgs {
  std::string file;
  std::string mode = "interface";
  uint64_t seed = 1;
  int64_t max_steps = 100000;
  bool trace = false;
  bool unsafe = false;
  bool json = false;
  bool time = false;
};

int exit_for(runtime::OutcomeKind k) {
  switch (k) {
    case runtime::OutcomeKind::kTerminated: return kExitOk;
    case runtime::OutcomeKind::kDeadlock: return kExitDeadlock;
    case runtime::OutcomeKind::kFailGuardHit: return kExitFailGuard;
    case runtime::OutcomeKind::kStepLimit: return kExitStepLimit;
  }
  return kExitDeadlock;
}

int cmd_run(const RunArgs& a) {
  CheckOptions opt;
  opt.mode = *mode_from_name(a.mode);
  opt.typecheck = !a.unsafe;
  auto r = check_file(a.file, opt);
  if (!r.ok()) {
    if (a.json) {
      std::cout << json{{"command", "run"}, {"file", r.file}, {"exit_code", r.exit_code},
                        {"diagnostics", diags_json(r.diags)}}
                       .dump(2)
                << "\n";
    } else {
      print_diags(r.diags);
    }
    return r.exit_code;
  }
  runtime::Options ro;
  ro.seed = a.seed;
  ro.max_steps = a.max_steps;
  ro.trace = a.trace && !a.json;
  if (!a.json) {
    ro.on_output = [](const std::string& s) { std::cout << s << std::flush; };
    ro.on_trace = [](const std::string& s) { std::cerr << s << "\n"; };
  }
  auto t0 = std::chrono::steady_clock::now();
  auto res = runtime::run(*r.ir, ro);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::vector<Diagnostic> diags;
  if (res.outcome.kind != runtime::OutcomeKind::kTerminated) {
    Diagnostic d;
    d.phase = Phase::kRuntime;
    d.file = r.file;
    d.span = res.outcome.span;
    d.rule = runtime::outcome_name(res.outcome.kind);
    d.message = res.outcome.detail;
    diags.push_back(d);
  }
  for (auto& n : res.notes) {
    Diagnostic d;
    d.severity = Severity::kNote;
    d.phase = Phase::kRuntime;
    d.file = r.file;
    d.rule = "monitor";
    d.message = n;
    diags.push_back(d);
  }
  int code = exit_for(res.outcome.kind);
  if (a.json) {
    std::cout << json{{"command", "run"},
                      {"file", r.file},
                      {"seed", a.seed},
                      {"exit_code", code},
                      {"outcome", runtime::outcome_name(res.outcome.kind)},
                      {"steps", res.steps},
                      {"output", res.output},
                      {"diagnostics", diags_json(diags)}}
                     .dump(2)
              << "\n";
    return code;
  }
  print_diags(diags);
  if (a.time) {
    auto ts = r.times;
    ts.push_back({"run", ms});
    print_times(ts);
  }
  return code;
}

struct BenchArgs {
  std::string dir;
  int reps = 10;
  std::string mode = "interface";
  bool json = false;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (auto& e : fs::directory_iterator(a.dir, ec))
    if (e.path().extension() == ".pat") files.push_back(e.path());
  if (ec) {
    std::cerr << "patc: cannot read directory " << a.dir << "\n";
    return kExitIo;
  }
  std::sort(files.begin(), files.end());
  json rows = json::array();
  if (!a.json) fmt::print("{:<20} {:>6} {:>12} {:>8}\n", "program", "strict", "mean (ms)", "CV (%)");
  int worst = kExitOk;
  for (auto& f : files) {
    CheckOptions lower;
    lower.typecheck = false;
    auto front = check_file(f.string(), lower);
    if (!front.ok()) {
      print_diags(front.diags);
      worst = std::max(worst, front.exit_code);
      continue;
    }
    CheckOptions strict;
    strict.mode = Mode::kStrict;
    bool strict_ok = check_ir(*front.ir, strict).ok();
    CheckOptions opt;
    opt.mode = *mode_from_name(a.mode);
    std::vector<double> samples;
    bool ok = true;
    for (int i = 0; i < a.reps; ++i) {
      auto r = check_ir(*front.ir, opt);
      ok = ok && r.ok();
      double ms = 0;
      for (auto& t : r.times) ms += t.ms;
      samples.push_back(ms);
    }
    double mean = 0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    double var = 0;
    for (double s : samples) var += (s - mean) * (s - mean);
    var /= static_cast<double>(samples.size());
    double cv = mean > 0 ? 100.0 * std::sqrt(var) / mean : 0.0;
    auto name = f.stem().string();
    if (!ok) worst = std::max(worst, static_cast<int>(kExitType));
    if (a.json) {
      rows.push_back({{"program", name}, {"strict", strict_ok}, {"ok", ok}, {"mean_ms", mean}, {"cv_percent", cv}});
    } else {
      fmt::print("{:<20} {:>6} {:>12.3f} {:>8.2f}{}\n", name, strict_ok ? "●" : "○", mean, cv,
                 ok ? "" : "  (type error)");
    }
  }
  if (a.json) std::cout << json{{"command", "bench"}, {"reps", a.reps}, {"mode", a.mode}, {"rows", rows}}.dump(2) << "\n";
  return worst;
}

struct ParseArgs {
  std::string file;
  bool ir = false;
  bool pretty = false;
};

int cmd_parse(const ParseArgs& a) {
  auto src = read_file(a.file);
  if (!src) {
    std::cerr << a.file << ": error[io]: cannot read file\n";
    return kExitIo;
  }
  try {
    auto p = parse_program(*src, a.file);
    if (a.ir) {
      auto lowered = ir::to_ir(ir::desugar(p));
      std::cout << (a.pretty ? ir::print_ir(lowered) : ir::dump_ir(lowered));
    } else {
      std::cout << (a.pretty ? print_program(p) : dump_program(p));
    }
  } catch (const PatError& e) {
    auto d = e.diag();
    if (d.file.empty()) d.file = a.file;
    std::cerr << render(d);
    return d.phase == Phase::kParse ? kExitParse : kExitType;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"patc: typechecker and interpreter for Pat"};
  app.require_subcommand(1);
  const auto modes = CLI::IsMember({"strict", "interface"});

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "typecheck a program");
  check->add_option("file", ca.file, "source file")->required();
  check->add_option("--mode", ca.mode, "strict or interface (default)")->check(modes);
  check->add_flag("--dump-constraints", ca.dump, "print generated constraints and the solution");
  check->add_option("--smtlib", ca.smtlib, "write one SMT-LIB2 file per solved constraint into DIR");
  check->add_flag("--json", ca.json, "machine-readable output");
  check->add_flag("--time", ca.time, "print phase timings");

  RunArgs ra;
  auto* run = app.add_subcommand("run", "typecheck, then execute a program");
  run->add_option("file", ra.file, "source file")->required();
  run->add_option("--mode", ra.mode, "strict or interface (default)")->check(modes);
  run->add_option("--seed", ra.seed, "scheduler seed");
  run->add_option("--max-steps", ra.max_steps, "step budget")->check(CLI::NonNegativeNumber);
  run->add_flag("--trace", ra.trace, "print one line per reduction step to stderr");
  run->add_flag("--unsafe", ra.unsafe, "skip typechecking");
  run->add_flag("--json", ra.json, "machine-readable output");
  run->add_flag("--time", ra.time, "print phase timings");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time typechecking of every .pat file in a directory");
  bench->add_option("dir", ba.dir, "corpus directory")->required();
  bench->add_option("--reps", ba.reps, "repetitions per program")->check(CLI::PositiveNumber);
  bench->add_option("--mode", ba.mode, "strict or interface (default)")->check(modes);
  bench->add_flag("--json", ba.json, "machine-readable output");

  ParseArgs pa;
  auto* parse = app.add_subcommand("parse", "dump the syntax tree");
  parse->add_option("file", pa.file, "source file")->required();
  parse->add_flag("--ir", pa.ir, "dump the lowered IR instead");
  parse->add_flag("--pretty", pa.pretty, "print as source text");

  CLI11_PARSE(app, argc, argv);
  if (*check) return cmd_check(ca);
  if (*run) return cmd_run(ra);
  if (*bench) return cmd_bench(ba);
  return cmd_parse(pa);
}
