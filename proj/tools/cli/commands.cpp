// Copyright 2026 The qclone Authors
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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "qclone/analysis.hpp"
#include "qclone/compiler.hpp"
#include "qclone/protocol.hpp"

namespace qclone::cli {

namespace {

using nlohmann::json;
using protocol::ProtocolConfig;
using protocol::Variant;

constexpr double kFidelityTolerance = 1e-10;
constexpr double kIteratedTolerance = 1e-9;
constexpr double kCircuitFidelityTolerance = 1e-8;

ProtocolConfig make_config(const RunConfig& cfg) {
  ProtocolConfig config;
  config.n = cfg.n;
  config.t = cfg.t;
  config.variant = protocol::parse_variant(cfg.variant);
  config.validate();
  return config;
}

Variant pure_input_variant(const RunConfig& cfg) {
  const Variant v = protocol::parse_variant(cfg.variant);
  if (v == Variant::kWithReference) {
    throw Error(ErrorCode::kInvalidArgument, "this command loads a pure input; use standard or rotated");
  }
  return v;
}

/// A state orthogonal to psi: (-conj(b), conj(a)).
StateVector orthogonal(const StateVector& psi) {
  Vector v(2);
  v << -std::conj(psi[1]), std::conj(psi[0]);
  return StateVector(v, psi.layout());
}

json check(double value, double tolerance, bool expected = true) {
  const bool holds = value < tolerance;
  return {{"value", value}, {"tolerance", tolerance}, {"expected", expected}, {"holds", holds},
          {"passed", holds == expected}};
}

json fidelity_check(double fidelity, double tolerance) {
  return {{"fidelity", fidelity}, {"tolerance", tolerance}, {"passed", fidelity >= 1.0 - tolerance}};
}

bool all_passed(const json& items) {
  return std::all_of(items.begin(), items.end(), [](const json& j) { return j.at("passed").get<bool>(); });
}

json role_labels(const RegisterLayout& layout, const std::vector<int>& qubits) {
  json out = json::array();
  for (int q : qubits) out.push_back(layout.role(q).label());
  return out;
}

}  // namespace

CommandResult cmd_demo(const RunConfig& cfg) {
  pure_input_variant(cfg);
  const ProtocolConfig config = make_config(cfg);
  const InputState input = parse_input_state(cfg.psi, cfg.seed);
  const StateVector encoded = protocol::encode(config, input.psi);

  json marginals = json::array();
  const DensityOperator half = DensityOperator::maximally_mixed(RegisterLayout::wires(1));
  std::vector<Role> singles{Role::data()};
  for (int i = 1; i <= config.n; ++i) singles.push_back(Role::signal(i));
  for (const Role& r : singles) {
    const std::vector<Role> one{r};
    const double dev = protocol::reduce(encoded, one).max_deviation(half);
    json entry = check(dev, tol::kState);
    entry["subsystem"] = r.label();
    if (config.n == 1 && r.kind == RoleKind::kSignal) {
      // A lone clone leaks the input; whether it shows depends on the input, so the
      // value is reported without a verdict (the audit compares several inputs).
      entry["expected"] = nullptr;
      entry["passed"] = true;
    }
    marginals.push_back(entry);
  }

  std::vector<int> targets;
  if (cfg.target) {
    targets.push_back(*cfg.target);
  } else {
    for (int i = 1; i <= config.n; ++i) targets.push_back(i);
  }
  json decryption = json::array();
  for (int target : targets) {
    const auto outcome = protocol::decrypt(encoded, config, target, input.psi);
    json entry = fidelity_check(*outcome.fidelity_vs_input, kFidelityTolerance);
    entry["target"] = target;
    decryption.push_back(entry);
  }

  const StateVector other = orthogonal(input.psi);
  const StateVector encoded_other = protocol::encode(config, other);
  const int target = targets.front();
  const double spread = trace_distance(protocol::decrypt(encoded, config, target).residual(),
                                       protocol::decrypt(encoded_other, config, target).residual());
  json key = check(spread, tol::kState);
  key["target"] = target;

  json report{{"command", "demo"},
              {"n", config.n},
              {"t", config.t},
              {"variant", std::string(protocol::to_string(config.variant))},
              {"input", {{"source", input.source}, {"amplitudes", amplitudes_json(input.psi)}}},
              {"fully_encrypted", config.n > 1},
              {"marginals", marginals},
              {"decryption", decryption},
              {"key_consumption", key}};
  const bool passed = all_passed(marginals) && all_passed(decryption) && key.at("passed").get<bool>();
  report["passed"] = passed;
  return {report, passed};
}

CommandResult cmd_sweep(const RunConfig& cfg, std::string& csv) {
  if (cfg.n < 1) throw Error(ErrorCode::kInvalidArgument, "clone count n must be >= 1");
  if (cfg.points < 1) throw Error(ErrorCode::kInvalidArgument, "--points must be >= 1");
  const std::vector<double> grid = analysis::uniform_grid(0.0, cfg.tmax, cfg.points);
  const std::vector<analysis::SweepRow> rows = analysis::sweep_fig_s1(grid, cfg.n);
  std::ostringstream os;
  analysis::write_sweep_csv(os, rows, kReportDigits);
  csv = os.str();

  double worst = 0.0;
  std::size_t peak = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, std::abs(rows[i].I_formula - rows[i].I_simulated));
    if (rows[i].I_simulated > rows[peak].I_simulated) peak = i;
  }
  const bool passed = worst < tol::kMatrix;
  json report{{"command", "sweep"},
              {"n", cfg.n},
              {"points", cfg.points},
              {"tmax", cfg.tmax},
              {"rows", rows.size()},
              {"max_abs_difference", worst},
              {"tolerance", tol::kMatrix},
              {"peak", {{"t", rows[peak].t}, {"I", rows[peak].I_simulated}}},
              {"passed", passed}};
  return {report, passed};
}

CommandResult cmd_compile(const RunConfig& cfg) {
  const Variant variant = pure_input_variant(cfg);
  const ProtocolConfig config = make_config(cfg);
  if (cfg.what != "enc" && cfg.what != "dec" && cfg.what != "both") {
    throw Error(ErrorCode::kInvalidArgument, "--what must be enc, dec or both");
  }
  const compiler::CircuitFormat format = compiler::parse_circuit_format(cfg.format);
  const int n = config.n;
  const bool want_enc = cfg.what != "dec";
  const bool want_dec = cfg.what != "enc";

  json report{{"command", "compile"},
              {"n", n},
              {"t", config.t},
              {"variant", std::string(protocol::to_string(variant))},
              {"format", cfg.format}};
  bool passed = true;
  std::optional<compiler::GateCircuit> enc;
  std::optional<compiler::GateCircuit> dec;

  if (want_enc) {
    enc = compiler::compile_encoding(n, config.t, variant);
    const auto eq = compiler::equivalence_up_to_global_phase(protocol::encoding_unitary(n, config.t, variant),
                                                             compiler::circuit_to_unitary(*enc));
    const int formula = 4 * n;
    report["encoding"] = {{"two_qubit", enc->two_qubit_count()},
                          {"one_qubit", enc->one_qubit_count()},
                          {"formula_two_qubit", formula},
                          {"count_matches", enc->two_qubit_count() == formula},
                          {"equivalent", eq.equivalent},
                          {"max_deviation", eq.max_entry_deviation}};
    passed = passed && eq.equivalent && enc->two_qubit_count() == formula;
  }

  if (want_dec) {
    const protocol::AlphaCoefficients alphas = protocol::decoding_alphas(n, config.t, variant);
    dec = n >= 2 ? compiler::compile_decoding(n, alphas) : compiler::compile_single_pair_decoder(alphas);
    const auto eq = compiler::equivalence_up_to_global_phase(protocol::decoding_unitary(n, alphas, 1).matrix,
                                                             compiler::circuit_to_unitary(*dec));
    json entry{{"two_qubit", dec->two_qubit_count()},
               {"one_qubit", dec->one_qubit_count()},
               {"equivalent", eq.equivalent},
               {"max_deviation", eq.max_entry_deviation}};
    passed = passed && eq.equivalent;
    if (n >= 2) {
      const compiler::GateCircuit v_tilde = compiler::basis_change_V_tilde();
      const int basis = 2 * v_tilde.two_qubit_count();
      const int formula = 15 * n + 7;
      entry["basis_change_two_qubit"] = basis;
      entry["controlled_two_qubit"] = dec->two_qubit_count() - basis;
      entry["formula_two_qubit"] = formula;
      entry["count_matches"] = dec->two_qubit_count() == formula;
      passed = passed && dec->two_qubit_count() == formula;
    } else {
      entry["formula_two_qubit"] = nullptr;
    }
    report["decoding"] = entry;
  }

  if (enc && dec) {
    const InputState input = parse_input_state(cfg.psi, cfg.seed);
    ProtocolConfig pure = config;
    StateVector state = protocol::prepare_initial(pure, input.psi);
    const RegisterLayout& layout = state.layout();
    std::vector<int> enc_wires{layout.qubit(Role::data())};
    for (int i = 1; i <= n; ++i) enc_wires.push_back(layout.qubit(Role::signal(i)));
    std::vector<int> dec_wires{layout.qubit(Role::signal(1))};
    for (int i = 1; i <= n; ++i) dec_wires.push_back(layout.qubit(Role::noise(i)));
    compiler::apply_circuit(state, *enc, enc_wires);
    compiler::apply_circuit(state, *dec, dec_wires);
    const auto outcome = protocol::make_outcome(state, layout.qubit(Role::signal(1)), input.psi);
    json rt = fidelity_check(*outcome.fidelity_vs_input, kCircuitFidelityTolerance);
    rt["input"] = input.source;
    report["round_trip"] = rt;
    passed = passed && rt.at("passed").get<bool>();
    const int total = enc->two_qubit_count() + dec->two_qubit_count();
    report["total"] = {{"two_qubit", total},
                       {"formula_bound", n >= 2 ? json(21 * n + 11) : json(nullptr)},
                       {"within_bound", n < 2 || total <= 21 * n + 11}};
  }

  if (cfg.out) {
    const std::filesystem::path dir(*cfg.out);
    std::filesystem::create_directories(dir);
    const std::string ext = format == compiler::CircuitFormat::kText ? ".txt" : ".qasm";
    json files = json::array();
    if (enc) {
      const std::string path = (dir / ("encoding" + ext)).string();
      write_atomic(path, compiler::export_circuit(*enc, format));
      files.push_back(path);
    }
    if (dec) {
      const std::string path = (dir / ("decoding" + ext)).string();
      write_atomic(path, compiler::export_circuit(*dec, format));
      files.push_back(path);
    }
    report["files"] = files;
  }
  report["passed"] = passed;
  return {report, passed};
}

CommandResult cmd_audit(const RunConfig& cfg) {
  const analysis::AuditReport audit = analysis::encryption_audit(cfg.n);
  json checks = json::array();
  for (const analysis::AuditCheck& c : audit.checks) {
    checks.push_back({{"claim", c.claim},
                      {"subsystem", c.subsystem},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"expected", c.expected},
                      {"holds", c.holds},
                      {"passed", c.passed()}});
  }
  json capacity{{"coherent_information_lower_bound", audit.capacity.lower_bound_at_t},
                {"decoded_channel", audit.capacity.decoded_channel},
                {"single_signal", audit.capacity.single_signal ? json(*audit.capacity.single_signal) : json(nullptr)}};
  const bool passed = audit.all_passed();
  json report{{"command", "audit"},          {"n", audit.n},
              {"t", audit.t},                {"inputs", audit.inputs},
              {"fully_encrypted", audit.fully_encrypted}, {"checks", checks},
              {"capacity", capacity},        {"passed", passed}};
  return {report, passed};
}

CommandResult cmd_iterate(const RunConfig& cfg) {
  const protocol::IteratedCloningPlan plan = protocol::iterated_cloning_plan(cfg.k);
  const InputState input = parse_input_state(cfg.psi, cfg.seed);
  const StateVector state = protocol::execute(plan, input.psi);

  json clones = json::array();
  for (std::size_t c = 0; c < plan.clones.size(); ++c) {
    const int index = static_cast<int>(c);
    const auto outcome = protocol::decrypt_clone(plan, state, index, input.psi);
    json entry = fidelity_check(*outcome.fidelity_vs_input, kIteratedTolerance);
    entry["clone"] = plan.clones[c].role.label();
    entry["key"] = role_labels(plan.layout, plan.key_qubits(index));
    clones.push_back(entry);
  }

  // Swapping a signal clone's key qubits at every level decrypts nothing.
  const StateVector zero = protocol::execute(plan, protocol::named_qubit("0"));
  const StateVector one = protocol::execute(plan, protocol::named_qubit("1"));
  double worst = 0.0;
  for (std::size_t c = 0; c < plan.clones.size(); ++c) {
    if (plan.clones[c].role.kind != RoleKind::kSignal) continue;
    const int index = static_cast<int>(c);
    std::vector<std::array<int, 2>> wrong = plan.key(index);
    for (auto& pair : wrong) std::swap(pair[0], pair[1]);
    const auto a = protocol::decrypt_clone_with_key(plan, zero, index, wrong);
    const auto b = protocol::decrypt_clone_with_key(plan, one, index, wrong);
    worst = std::max(worst, trace_distance(a.recovered, b.recovered));
  }
  json wrong_key = check(worst, kIteratedTolerance);
  wrong_key["rule"] = "signal clones, key qubits swapped at every level";

  const bool passed = all_passed(clones) && wrong_key.at("passed").get<bool>();
  json report{{"command", "iterate"},
              {"k", plan.k},
              {"input", {{"source", input.source}, {"amplitudes", amplitudes_json(input.psi)}}},
              {"num_clones", plan.clones.size()},
              {"num_noise", plan.num_noise()},
              {"key_size", 2 * plan.k},
              {"clones", clones},
              {"wrong_key", wrong_key},
              {"passed", passed}};
  return {report, passed};
}

CommandResult cmd_variants(const RunConfig& cfg) {
  pure_input_variant(cfg);
  ProtocolConfig config = make_config(cfg);
  config.variant = Variant::kStandard;
  const int n = config.n;
  const InputState input = parse_input_state(cfg.psi, cfg.seed);
  const StateVector encoded = protocol::encode(config, input.psi);

  json substitution = json::array();
  for (int j = 2; j <= n; ++j) {
    const std::vector<int> lost{j};
    const auto o = protocol::decrypt_with_substitution(encoded, config, lost, 1, input.psi);
    json entry = fidelity_check(*o.fidelity_vs_input, kFidelityTolerance);
    entry["lost_noise"] = lost;
    substitution.push_back(entry);
  }
  if (n >= 3) {
    std::vector<int> lost;
    for (int j = 2; j <= n; ++j) lost.push_back(j);
    const auto o = protocol::decrypt_with_substitution(encoded, config, lost, 1, input.psi);
    json entry = fidelity_check(*o.fidelity_vs_input, kFidelityTolerance);
    entry["lost_noise"] = lost;
    substitution.push_back(entry);
  }

  json from_a;
  if (n % 2 == 0) {
    from_a = fidelity_check(*protocol::decrypt_from_A(encoded, config, input.psi).fidelity_vs_input,
                            kFidelityTolerance);
    from_a["rejected"] = false;
  } else {
    bool rejected = false;
    try {
      protocol::decrypt_from_A(encoded, config, input.psi);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::kOddCloneCount;
    }
    from_a = {{"rejected", rejected}, {"passed", rejected}};
  }

  const json reverse =
      fidelity_check(*protocol::reverse_encoding_recovery(encoded, config, input.psi).fidelity_vs_input,
                     kFidelityTolerance);

  ProtocolConfig rotated = config;
  rotated.variant = Variant::kRotatedX2;
  const json rotated_check = fidelity_check(
      *protocol::decrypt(protocol::encode(rotated, input.psi), rotated, 1, input.psi).fidelity_vs_input,
      kFidelityTolerance);

  json erasure = json::array();
  if (n >= 2) {
    const DensityOperator reference = analysis::erasure_reference_state(n - 1);
    for (int skip = 1; skip <= n; ++skip) {
      std::vector<Role> kept;
      for (int j = 1; j <= n; ++j) {
        if (j == skip) continue;
        kept.push_back(Role::signal(j));
        kept.push_back(Role::noise(j));
      }
      json entry = check(protocol::reduce(encoded, kept).max_deviation(reference), tol::kState);
      entry["erased_pair"] = skip;
      erasure.push_back(entry);
    }
  }

  const bool passed = all_passed(substitution) && from_a.at("passed").get<bool>() &&
                      reverse.at("passed").get<bool>() && rotated_check.at("passed").get<bool>() &&
                      all_passed(erasure);
  json report{{"command", "variants"},
              {"n", n},
              {"input", {{"source", input.source}, {"amplitudes", amplitudes_json(input.psi)}}},
              {"substitution", substitution},
              {"decrypt_from_A", from_a},
              {"reverse_encoding", reverse},
              {"rotated", rotated_check},
              {"erasure", erasure},
              {"passed", passed}};
  return {report, passed};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encrypted qubit cloning: simulation, analysis and circuit compilation"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for Haar-random inputs");
    sub->add_option("--psi", cfg.psi, "input state: 0, 1, +, -, +i, -i or re0,im0,re1,im1");
    sub->add_option("--out", cfg.out, "output path");
  };

  CLI::App* demo = app.add_subcommand("demo", "encrypt, audit and decrypt one input");
  demo->add_option("--n", cfg.n, "number of clones");
  demo->add_option("--t", cfg.t, "coupling angle");
  demo->add_option("--target", cfg.target, "decrypt only this clone");
  demo->add_option("--variant", cfg.variant, "standard or rotated");
  add_common(demo);

  CLI::App* sweep = app.add_subcommand("sweep", "coherent information over t, as CSV");
  sweep->add_option("--n", cfg.n, "number of clones");
  sweep->add_option("--points", cfg.points, "grid points on [0, tmax]");
  sweep->add_option("--tmax", cfg.tmax, "grid end");
  sweep->add_option("--out", cfg.out, "CSV path (stdout when absent)");

  CLI::App* compile = app.add_subcommand("compile", "compile encoder and decoder to gates");
  compile->add_option("--n", cfg.n, "number of clones");
  compile->add_option("--t", cfg.t, "coupling angle");
  compile->add_option("--variant", cfg.variant, "standard or rotated");
  compile->add_option("--format", cfg.format, "text or openqasm2");
  compile->add_option("--what", cfg.what, "enc, dec or both");
  compile->add_option("--seed", cfg.seed, "seed for the round-trip input");
  compile->add_option("--psi", cfg.psi, "round-trip input state");
  compile->add_option("--out", cfg.out, "directory for circuit files");

  CLI::App* audit = app.add_subcommand("audit", "check that unauthorized subsystems carry no input");
  audit->add_option("--n", cfg.n, "number of clones");
  audit->add_option("--out", cfg.out, "report path");

  CLI::App* iterate = app.add_subcommand("iterate", "k rounds of three-way cloning");
  iterate->add_option("--k", cfg.k, "iteration depth");
  add_common(iterate);

  CLI::App* variants = app.add_subcommand("variants", "lost-qubit substitution and alternative recoveries");
  variants->add_option("--n", cfg.n, "number of clones");
  add_common(variants);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    CommandResult result;
    if (app.got_subcommand(sweep)) {
      std::string csv;
      result = cmd_sweep(cfg, csv);
      if (cfg.out) {
        write_atomic(*cfg.out, csv);
        out << dump_report(result.report);
      } else {
        out << csv;
      }
      if (!result.passed) err << "sweep: formula and simulation disagree\n";
      return result.passed ? 0 : 1;
    }
    if (app.got_subcommand(demo)) {
      result = cmd_demo(cfg);
    } else if (app.got_subcommand(compile)) {
      result = cmd_compile(cfg);
    } else if (app.got_subcommand(audit)) {
      result = cmd_audit(cfg);
    } else if (app.got_subcommand(iterate)) {
      result = cmd_iterate(cfg);
    } else {
      result = cmd_variants(cfg);
    }
    const std::string text = dump_report(result.report);
    if (cfg.out && !app.got_subcommand(compile)) {
      write_atomic(*cfg.out, text);
    } else {
      out << text;
    }
    return result.passed ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qclone::cli
