// wittmod: batch verification and small interactive queries.

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wittmod/closure.hpp"
#include "wittmod/error.hpp"
#include "wittmod/expression.hpp"
#include "wittmod/verify.hpp"
#include "wittmod/weight_module.hpp"

namespace {

using namespace wittmod;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

void print_rows(const std::vector<std::array<std::string, 3>>& rows, bool csv) {
  if (csv) {
    std::cout << "x,v,x.v\n";
    for (const auto& r : rows) {
      std::cout << csv_field(r[0]) << ',' << csv_field(r[1]) << ',' << csv_field(r[2]) << '\n';
    }
    return;
  }
  for (const auto& r : rows) {
    std::cout << r[0] << " . " << r[1] << " = " << r[2] << '\n';
  }
}

int run_verify(const std::string& config, const std::vector<std::string>& suites, const std::string& out,
               bool no_timing) {
  const Report report = run_verification(read_file(config), suites);
  const std::string text = report.to_json(!no_timing);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
  }
  for (const auto& r : report.records) {
    if (!r.passed) {
      std::cerr << "FAIL " << r.suite << '/' << r.check << ": " << r.witness << '\n';
    }
  }
  std::cerr << report.records.size() << " checks, " << report.failures() << " failed\n";
  return report.all_passed() ? 0 : 1;
}

int run_act(const std::string& module, const std::string& op, const std::vector<std::string>& on, bool csv) {
  const LieElement x = parse_lie_element(op);
  std::vector<std::array<std::string, 3>> rows;
  const ModuleSpec spec = parse_module(module);
  for (const auto& v : on) {
    if (const auto* omega = std::get_if<OmegaModuleSpec>(&spec)) {
      const OmegaElement e = parse_omega_element(v);
      rows.push_back({x.to_string(), e.to_string(), act(*omega, x, e).to_string()});
    } else {
      const WeightVector w = parse_weight_vector(v);
      rows.push_back({x.to_string(), w.to_string(),
                      act_intermediate(std::get<IntermediateSpec>(spec), x, w).to_string()});
    }
  }
  print_rows(rows, csv);
  return 0;
}

int run_weighting(const std::string& module, const std::string& extension, const std::string& weights,
                  const std::string& window, bool csv) {
  const ModuleSpec spec = parse_module(module);
  const auto* omega = std::get_if<OmegaModuleSpec>(&spec);
  if (omega == nullptr) {
    throw Error(ErrorCode::invalid_argument, "weighting needs an omega module");
  }
  // The extension is given as a module descriptor whose group and f are used.
  const ModuleSpec ext = parse_module(extension);
  const auto* ext_omega = std::get_if<OmegaModuleSpec>(&ext);
  if (ext_omega == nullptr) {
    throw Error(ErrorCode::invalid_argument, "extension must be given as kind=omega; group=...; f=...");
  }
  const auto ws = parse_scalar_list(weights);
  const auto ops = window_operators(omega->group(), parse_scalar(window).real());
  std::vector<std::array<std::string, 3>> rows;
  std::vector<Part> parts{Part::one};
  if (omega->is_super()) {
    parts.push_back(Part::xi);
  }
  for (const auto& c : ws) {
    for (const Part p : parts) {
      const WeightKey key = weighted_key(*omega, c, p);
      for (const auto& s : ops) {
        rows.push_back({s.to_string(), key.to_string(), weighting_act(*omega, LieElement(s), c, p).to_string()});
      }
    }
  }
  print_rows(rows, csv);
  const bool ok = weighting_matches_intermediate(*omega, ext_omega->f, ws, ops);
  std::cout << "matches " << (omega->is_super() ? "sV(" : "V(")
            << (GaussianRational(1) - omega->alpha).to_string() << "): " << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}

int run_closure(const std::string& module, const std::vector<std::string>& seeds, const std::string& window,
                long degree, std::size_t rounds) {
  const ModuleSpec spec = parse_module(module);
  const auto* omega = std::get_if<OmegaModuleSpec>(&spec);
  if (omega == nullptr) {
    throw Error(ErrorCode::invalid_argument, "closure needs an omega module");
  }
  ClosureBounds bounds;
  bounds.degree = degree;
  bounds.max_rounds = rounds;
  bounds.window = parse_scalar(window).real();
  std::vector<OmegaElement> seed_vectors;
  for (const auto& s : seeds) {
    seed_vectors.push_back(parse_omega_element(s));
  }
  const SimplicityCertificate cert = simplicity_certificate(*omega, seed_vectors, bounds);
  std::cout << "verdict: " << to_string(cert.verdict) << '\n';
  for (const auto& sc : cert.seeds) {
    std::cout << "seed " << sc.seed.to_string() << ": " << to_string(sc.verdict) << " after "
              << sc.closure.rounds << " rounds, dimension " << sc.closure.basis.size() << '\n';
    for (const auto& b : sc.closure.basis) {
      std::cout << "  " << b.to_string() << '\n';
    }
  }
  if (cert.verdict == Verdict::simple_witness) {
    std::cout << "replay: " << (verify_certificate(*omega, cert) ? "ok" : "FAILED") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt and Virasoro type algebras, their Omega modules and weightings"};
  app.require_subcommand(1);

  std::string config;
  std::vector<std::string> suites;
  std::string out;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "run verification suites from a JSON config");
  verify->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);
  verify->add_option("--suite", suites, "suite to run (repeatable); overrides the config list");
  verify->add_option("--out", out, "report path, '-' for stdout");
  verify->add_flag("--no-timing", no_timing, "omit wall times so reports compare byte for byte");

  std::string module;
  std::string op;
  std::vector<std::string> on;
  bool csv = false;
  auto* act_cmd = app.add_subcommand("act", "print an action table");
  act_cmd->add_option("--module", module, "e.g. \"kind=omega; group=1; alpha=1\"")->required();
  act_cmd->add_option("--op", op, "Lie element, e.g. L[1]")->required();
  act_cmd->add_option("--on", on, "module elements")->required();
  act_cmd->add_flag("--csv", csv, "CSV output");

  std::string extension;
  std::string weights;
  std::string window = "2";
  auto* weighting = app.add_subcommand("weighting", "weighting action and comparison with V(1 - alpha)");
  weighting->add_option("--module", module)->required();
  weighting->add_option("--extension", extension, "module descriptor carrying the extended character")->required();
  weighting->add_option("--weights", weights, "comma separated weights")->required();
  weighting->add_option("--window", window, "operator window bound");
  weighting->add_flag("--csv", csv, "CSV output");

  std::vector<std::string> seeds;
  long degree = 8;
  std::size_t rounds = 16;
  auto* closure_cmd = app.add_subcommand("closure", "closure of seeds and simplicity verdict");
  closure_cmd->add_option("--module", module)->required();
  closure_cmd->add_option("--seed", seeds, "seed elements, e.g. x or \"xi*(1)\"")->required();
  closure_cmd->add_option("--window", window, "operator window bound");
  closure_cmd->add_option("--degree", degree, "degree bound");
  closure_cmd->add_option("--rounds", rounds, "round limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      return run_verify(config, suites, out, no_timing);
    }
    if (*act_cmd) {
      return run_act(module, op, on, csv);
    }
    if (*weighting) {
      return run_weighting(module, extension, weights, window, csv);
    }
    if (*closure_cmd) {
      return run_closure(module, seeds, window, degree, rounds);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
