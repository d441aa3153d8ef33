// Copyright 2026 lapbe contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "lapbe/encoder.hpp"
#include "lapbe/lattice.hpp"
#include "lapbe/qasm.hpp"
#include "lapbe/resources.hpp"
#include "lapbe/simulator.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitDegenerate = 4;

struct RunConfig {
  lapbe::LaplacianSpec spec;
  std::string out;
  std::optional<std::pair<int, int>> sweep;
  std::uint32_t cap = 20;
  std::string format = "json";
  int threads = 0;
  bool corrupt = false;  // test hook: perturb the circuit before verifying
};

lapbe::GridAxisSpec parse_axis(const std::string& text) {
  lapbe::GridAxisSpec axis;
  bool have_n = false;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw lapbe::SpecificationError("malformed axis field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "n") {
      axis.n_qubits = std::stoi(value);
      have_n = true;
    } else if (key == "h") {
      axis.spacing = std::stod(value);
    } else if (key == "bc") {
      axis.bc = lapbe::parse_bc(value);
    } else {
      throw lapbe::SpecificationError("unknown axis key '" + key + "'");
    }
  }
  if (!have_n) throw lapbe::SpecificationError("axis needs n=<qubits>");
  return axis;
}

std::pair<int, int> parse_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw lapbe::SpecificationError("sweep must be <lo>..<hi>");
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo < 1 || hi < lo)
    throw lapbe::SpecificationError("sweep range must satisfy 1 <= lo <= hi");
  return {lo, hi};
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw lapbe::SpecificationError("cannot read config " + path);
  ordered_json j;
  in >> j;
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw lapbe::SpecificationError("config must declare schema: 1");
  if (j.contains("axes")) {
    for (const auto& a : j["axes"]) {
      lapbe::GridAxisSpec axis;
      axis.n_qubits = a.at("n_qubits").get<int>();
      axis.spacing = a.value("spacing", 1.0);
      axis.bc = lapbe::parse_bc(a.value("bc", "periodic"));
      cfg.spec.axes.push_back(axis);
    }
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file)
    throw lapbe::SpecificationError("cannot open output file " + path);
  return file;
}

ordered_json spec_json(const lapbe::LaplacianSpec& spec) {
  ordered_json axes = ordered_json::array();
  for (const auto& a : spec.axes) {
    axes.push_back({{"n_qubits", a.n_qubits},
                    {"spacing", a.spacing},
                    {"bc", lapbe::bc_name(a.bc)}});
  }
  return axes;
}

std::string spec_label(const lapbe::LaplacianSpec& spec) {
  std::string label;
  for (const auto& a : spec.axes) label += lapbe::bc_tag(a.bc);
  return label;
}

int cmd_build(const RunConfig& cfg) {
  const auto desc = lapbe::build_nd(cfg.spec);
  const std::string base = cfg.out.empty() ? "encoding" : cfg.out;

  std::ofstream qasm(base + ".qasm");
  if (!qasm) throw lapbe::SpecificationError("cannot write " + base + ".qasm");
  lapbe::write_qasm3(desc.circuit, qasm);

  ordered_json j;
  j["schema"] = 1;
  j["alpha"] = desc.alpha;
  j["ancilla_count"] = desc.ancilla_count;
  j["system_qubits"] = desc.system_qubits;
  j["axes"] = spec_json(desc.spec);
  j["registers"] = ordered_json::array();
  for (const auto& r : desc.circuit.layout().registers()) {
    if (r.size == 0) continue;
    j["registers"].push_back(
        {{"name", r.name}, {"size", r.size}, {"offset", r.offset}});
  }
  std::ofstream meta(base + ".json");
  if (!meta) throw lapbe::SpecificationError("cannot write " + base + ".json");
  meta << j.dump(2) << '\n';

  std::cout << "wrote " << base << ".qasm and " << base << ".json\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto desc = lapbe::build_nd(cfg.spec);
  if (cfg.corrupt)
    desc.circuit.append(lapbe::Gate::x(0));

  lapbe::SimOptions opts;
  opts.max_qubits = cfg.cap;
  const auto block = lapbe::extract_block(desc, opts);
  const auto oracle = lapbe::build_scaled_nd(cfg.spec);

  double max_dev = 0.0;
  std::uint64_t worst_r = 0, worst_c = 0;
  for (std::uint64_t r = 0; r < block.dim; ++r) {
    for (std::uint64_t c = 0; c < block.dim; ++c) {
      const double dev = std::abs(block.at(r, c) - oracle.at(r, c));
      if (dev > max_dev) {
        max_dev = dev;
        worst_r = r;
        worst_c = c;
      }
    }
  }

  if (!cfg.out.empty()) {
    std::ofstream csv(cfg.out);
    if (!csv) throw lapbe::SpecificationError("cannot write " + cfg.out);
    csv << "row,col,value\n";
    for (std::uint64_t r = 0; r < block.dim; ++r)
      for (std::uint64_t c = 0; c < block.dim; ++c)
        csv << r << ',' << c << ',' << lapbe::format_double(block.at(r, c))
            << '\n';
  }

  std::cout << "spec " << spec_label(cfg.spec) << " dim " << block.dim << '\n';
  std::cout << "max_abs_deviation " << lapbe::format_double(max_dev) << " at "
            << worst_r << ' ' << worst_c << '\n';
  const bool pass = max_dev <= 1e-10;
  std::cout << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

int cmd_success(const RunConfig& cfg) {
  lapbe::SimOptions opts;
  opts.max_qubits = cfg.cap;

  std::ofstream file;
  std::ostream& out = open_output(file, cfg.out);
  out << "label,size,value\n";

  std::vector<lapbe::LaplacianSpec> specs;
  if (cfg.sweep) {
    if (cfg.spec.axes.size() != 1)
      throw lapbe::SpecificationError("--sweep requires exactly one axis");
    for (int n = cfg.sweep->first; n <= cfg.sweep->second; ++n) {
      lapbe::LaplacianSpec s = cfg.spec;
      s.axes[0].n_qubits = n;
      specs.push_back(s);
    }
  } else {
    specs.push_back(cfg.spec);
  }

  for (const auto& spec : specs) {
    const auto v = lapbe::test_state(spec);
    const auto desc = lapbe::build_nd(spec);
    const double p = lapbe::success_probability(desc, v, opts);

    const auto reference = lapbe::build_scaled_nd(spec).apply(v);
    double p_ref = 0.0;
    for (double x : reference) p_ref += x * x;
    if (std::abs(p - p_ref) > 1e-10)
      throw std::runtime_error("success probability disagrees with oracle");

    out << spec_label(spec) << ',' << spec.total_qubits() << ','
        << lapbe::format_double(p) << '\n';
  }
  return 0;
}

int cmd_resources(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& out = open_output(file, cfg.out);

  if (cfg.sweep) {
    if (cfg.spec.axes.size() != 1)
      throw lapbe::SpecificationError("--sweep requires exactly one axis");
    out << "label,size,value\n";
    for (int n = cfg.sweep->first; n <= cfg.sweep->second; ++n) {
      lapbe::LaplacianSpec s = cfg.spec;
      s.axes[0].n_qubits = n;
      const auto symbolic = lapbe::estimate_nd(s);
      const auto lowered = lapbe::lower_and_count(lapbe::build_nd(s).circuit);
      out << "symbolic_t," << n << ',' << symbolic.t_count << '\n';
      out << "lowered_t," << n << ',' << lowered.t_count << '\n';
    }
    return 0;
  }

  const auto symbolic = lapbe::estimate_nd(cfg.spec);
  const auto desc = lapbe::build_nd(cfg.spec);
  const auto lowered = lapbe::lower_and_count(desc.circuit);
  const auto metrics = desc.circuit.metrics();

  if (cfg.format == "csv") {
    out << "label,size,value\n";
    out << "symbolic_t," << cfg.spec.total_qubits() << ',' << symbolic.t_count
        << '\n';
    out << "lowered_t," << cfg.spec.total_qubits() << ',' << lowered.t_count
        << '\n';
    return 0;
  }

  ordered_json j;
  j["schema"] = 1;
  j["axes"] = spec_json(cfg.spec);
  j["symbolic"] = ordered_json::parse(lapbe::report_to_json(symbolic));
  j["lowered"] = ordered_json::parse(lapbe::report_to_json(lowered));
  j["ir_metrics"] = {{"gate_count", metrics.gate_count},
                     {"two_plus_qubit_count", metrics.two_plus_qubit_count},
                     {"depth", metrics.depth}};
  j["lowered_within_symbolic"] =
      lowered.toffoli_count <= symbolic.toffoli_count;
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-encoding circuits for finite-difference Laplacians"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* cap_env = std::getenv("LAPQBE_CAP"))
    cfg.cap = static_cast<std::uint32_t>(std::atoi(cap_env));

  std::vector<std::string> axis_args;
  std::string config_path, sweep_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--axis", axis_args,
                    "axis spec n=<int>,h=<float>,bc=<p|d|n> (repeatable)");
    sub->add_option("--config", config_path, "JSON config file (schema 1)");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--cap", cfg.cap, "simulation cap in qubits");
    sub->add_option("--threads", cfg.threads, "OpenMP thread count");
    sub->add_option("--format", cfg.format, "csv|json");
  };

  auto* build = app.add_subcommand("build", "emit OpenQASM and descriptor");
  add_common(build);
  auto* verify = app.add_subcommand("verify", "check circuit against oracle");
  add_common(verify);
  verify->add_flag("--corrupt", cfg.corrupt)->group("");  // test hook
  auto* success = app.add_subcommand("success", "success-probability sweep");
  add_common(success);
  success->add_option("--sweep", sweep_arg, "qubit range <lo>..<hi>");
  auto* resources = app.add_subcommand("resources", "resource estimates");
  add_common(resources);
  resources->add_option("--sweep", sweep_arg, "qubit range <lo>..<hi>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (!axis_args.empty()) {
      cfg.spec.axes.clear();  // flags override the config file
      for (const auto& a : axis_args) cfg.spec.axes.push_back(parse_axis(a));
    }
    if (!sweep_arg.empty()) cfg.sweep = parse_sweep(sweep_arg);
    if (cfg.format != "csv" && cfg.format != "json")
      throw lapbe::SpecificationError("--format must be csv or json");
    cfg.spec.validate();
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*success) return cmd_success(cfg);
    if (*resources) return cmd_resources(cfg);
    return kExitUsage;
  } catch (const lapbe::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const lapbe::DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const lapbe::SpecificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << app.help() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
