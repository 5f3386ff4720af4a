// Copyright 2026 The procmat Authors
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

#include "cli.hpp"

#include "procmat/builtin.hpp"
#include "procmat/causal_game.hpp"
#include "procmat/classical.hpp"
#include "procmat/hs_expansion.hpp"
#include "procmat/process.hpp"
#include "procmat/process_io.hpp"
#include "procmat/random.hpp"
#include "procmat/standard.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace procmat::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every --json document has exactly these four fields.
struct Report {
  std::string command;
  std::string verdict;
  json metrics = json::object();
  json artifacts = json::array();

  [[nodiscard]] json to_json() const {
    return {{"command", command}, {"verdict", verdict}, {"metrics", metrics},
            {"artifacts", artifacts}};
  }
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string num(double v, int precision = 16) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(24) << key << value << '\n';
}

json dims_json(const LabSystems& s) {
  return {{"A1", s.a1}, {"A2", s.a2}, {"B1", s.b1}, {"B2", s.b2}};
}

ComplexMatrix state_by_name(const std::string& name) {
  if (auto rho = standard::named_state(name)) return *rho;
  std::string known;
  for (auto n : standard::state_names()) known += (known.empty() ? "" : ", ") + std::string(n);
  throw UsageError("unknown state '" + name + "' (known: " + known + ")");
}

ComplexMatrix unitary_by_name(const std::string& name, std::uint64_t seed) {
  if (name == "random") {
    Rng rng = split_rng(seed, 0);
    return haar_unitary(2, rng);
  }
  if (auto u = standard::named_unitary(name)) return *u;
  std::string known;
  for (auto n : standard::unitary_names()) known += (known.empty() ? "" : ", ") + std::string(n);
  throw UsageError("unknown unitary '" + name + "' (known: " + known + ", random)");
}

std::string hs_label(int index, int d) {
  if (index == 0) return "I";
  if (d == 2) return std::string(1, "IXYZ"[index]);
  return "s" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::string path;
  std::string mode = "both";
  double tol = 1e-9;
  int probes = 25;
  std::uint64_t seed = 0x5eed;
};

int cmd_validate(const ValidateOptions& o, Context& c) {
  const auto mode = parse_validation_mode(o.mode);
  if (!mode) throw UsageError("unknown mode '" + o.mode + "'");
  const ProcessMatrix w = read_process_file(o.path);
  const ProbeOptions probe{o.probes, o.seed, o.tol};
  const ValidationRecord rec = validate(w, *mode, probe);

  Report r{"validate", rec.valid ? "valid" : "invalid"};
  r.metrics["dims"] = dims_json(w.systems());
  r.metrics["mode"] = to_string(*mode);
  r.metrics["positive"] = rec.positive;
  r.metrics["min_eigenvalue"] = rec.min_eigenvalue;
  r.metrics["max_eigenvalue"] = rec.max_eigenvalue;
  r.metrics["trace"] = rec.trace;
  r.metrics["trace_residual"] = rec.trace_residual;
  json forbidden = json::array();
  if (rec.structural) {
    for (const auto& f : rec.structural->forbidden) {
      forbidden.push_back({{"type", f.type.name()}, {"weight", f.weight}});
    }
    r.metrics["structural_accept"] = rec.structural->accept;
    r.metrics["normalization_residual"] = rec.structural->normalization_residual;
  }
  r.metrics["forbidden_terms"] = forbidden;
  if (rec.probe) {
    r.metrics["probe"] = {{"passed", rec.probe->passed},
                          {"pairs", rec.probe->pairs_tested},
                          {"worst_residual", rec.probe->worst_residual},
                          {"worst_pair", rec.probe->worst_pair},
                          {"seed", o.seed}};
  }

  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    row(c.out, "process", o.path + " (" + w.systems().to_string() + ")");
    row(c.out, "mode", to_string(*mode));
    row(c.out, "verdict", rec.valid ? "VALID" : "INVALID");
    row(c.out, "min eigenvalue", num(rec.min_eigenvalue, 12));
    row(c.out, "trace", num(rec.trace, 12) + " (residual " + num(rec.trace_residual, 3) + ")");
    if (rec.structural) {
      std::string list;
      for (const auto& f : rec.structural->forbidden) {
        list += (list.empty() ? "" : ", ") + f.type.name() + " (" + num(f.weight, 3) + ")";
      }
      row(c.out, "identity coefficient",
          num(rec.structural->identity_coefficient, 12) + " (residual " +
              num(rec.structural->normalization_residual, 3) + ")");
      row(c.out, "forbidden terms", list.empty() ? "none" : list);
    }
    if (rec.probe) {
      row(c.out, "probe",
          std::string(rec.probe->passed ? "passed" : "FAILED") + ", " +
              std::to_string(rec.probe->pairs_tested) + " CPTP pairs, worst |P - 1| = " +
              num(rec.probe->worst_residual, 3));
    }
  }
  return rec.valid ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& path, Context& c) {
  const ProcessMatrix w = read_process_file(path);
  const LabSystems& s = w.systems();
  const HSTermReport report = expand(w.matrix(), s);
  const StructuralVerdict verdict = classify_validity(report);
  const auto dims = s.dims();

  Report r{"classify", verdict.accept ? "accept" : "reject"};
  r.metrics["dims"] = dims_json(s);
  json terms = json::array();
  for (const auto& t : report.terms()) {
    terms.push_back({{"index", t.index},
                     {"type", t.type().name()},
                     {"class", to_string(classify_type(t.type()))},
                     {"coefficient", t.coefficient}});
  }
  r.metrics["terms"] = terms;
  r.metrics["identity_coefficient"] = verdict.identity_coefficient;
  r.metrics["normalization_residual"] = verdict.normalization_residual;
  r.metrics["signals_a_to_b"] = verdict.signals_a_to_b;
  r.metrics["signals_b_to_a"] = verdict.signals_b_to_a;
  json forbidden = json::array();
  for (const auto& f : verdict.forbidden) forbidden.push_back(f.type.name());
  r.metrics["forbidden_types"] = forbidden;

  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    c.out << std::left << std::setw(20) << "term" << std::setw(12) << "type" << std::setw(16)
          << "class" << "coefficient\n";
    for (const auto& t : report.terms()) {
      std::string label;
      for (int f = 0; f < 4; ++f) {
        label += (f ? "," : "") + hs_label(t.index[f], dims[f]);
      }
      c.out << std::left << std::setw(20) << "(" + label + ")" << std::setw(12)
            << t.type().name() << std::setw(16) << to_string(classify_type(t.type()))
            << num(t.coefficient, 12) << '\n';
    }
    c.out << '\n';
    row(c.out, "verdict", verdict.accept ? "ACCEPT" : "REJECT");
    row(c.out, "normalization residual", num(verdict.normalization_residual, 3));
    std::string directions;
    if (verdict.signals_a_to_b) directions += "A->B ";
    if (verdict.signals_b_to_a) directions += "B->A ";
    row(c.out, "signalling", directions.empty() ? "none" : directions);
    std::string list;
    for (const auto& f : verdict.forbidden) list += (list.empty() ? "" : ", ") + f.type.name();
    row(c.out, "forbidden types", list.empty() ? "none" : list);
  }
  return verdict.accept ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// game

int cmd_game_run(const std::string& path, const std::string& protocol, Context& c) {
  if (protocol != "basis-switch") throw UsageError("unknown protocol '" + protocol + "'");
  const ProcessMatrix w = read_process_file(path);
  if (w.systems() != LabSystems(2, 2, 2, 2)) {
    throw UsageError("the basis-switch protocol needs qubit systems, got " +
                     w.systems().to_string());
  }
  const GameScore score = success_probability(w, basis_switch_strategy());
  const bool exceeds = score.p_succ > 0.75 + 1e-9;

  Report r{"game run", exceeds ? "exceeds-causal-bound" : "within-causal-bound"};
  r.metrics["protocol"] = protocol;
  r.metrics["p_succ"] = score.p_succ;
  r.metrics["p_x_eq_b_given_bprime_0"] = score.alice_guesses_b;
  r.metrics["p_y_eq_a_given_bprime_1"] = score.bob_guesses_a;
  r.metrics["causal_bound"] = 0.75;

  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    row(c.out, "protocol", protocol);
    row(c.out, "P(x=b | b'=0)", num(score.alice_guesses_b));
    row(c.out, "P(y=a | b'=1)", num(score.bob_guesses_a));
    row(c.out, "p_succ", num(score.p_succ));
    row(c.out, "causal bound", "0.75");
    row(c.out, "verdict", exceeds ? "exceeds the causal bound" : "within the causal bound");
  }
  return kOk;
}

int cmd_bruteforce(int message_dim, std::uint64_t cap, Context& c) {
  if (message_dim < 1) throw UsageError("--message-dim must be positive");
  const BruteForceResult res = causal_bruteforce(message_dim, cap);
  const bool holds = res.best <= Fraction(3, 4);
  std::ostringstream exact;
  exact << res.best.numerator() << '/' << res.best.denominator();

  Report r{"game brute-force", holds ? "bound-holds" : "bound-exceeded"};
  r.metrics["message_dim"] = message_dim;
  r.metrics["max_p_succ"] = exact.str();
  r.metrics["max_p_succ_value"] = boost::rational_cast<double>(res.best);
  r.metrics["strategies"] = res.strategies;
  r.metrics["witness"] = {{"order", to_string(res.witness.order)},
                          {"encoding", res.witness.encoding},
                          {"sender_guess", res.witness.sender_guess},
                          {"receiver_guess", res.witness.receiver_guess}};

  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    row(c.out, "message dimension", std::to_string(message_dim));
    row(c.out, "strategies", std::to_string(res.strategies));
    row(c.out, "max p_succ", exact.str());
    row(c.out, "witness", res.witness.describe());
  }
  return holds ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// decompose-classical

int cmd_decompose(const std::string& path, const std::string& prefix, Context& c) {
  const ProcessMatrix w = read_process_file(path);
  Report r{"decompose-classical", ""};
  std::optional<CausalDecomposition> result;
  try {
    result = decompose(ClassicalProcess::from_process(w));
  } catch (const InvalidProcessError& e) {
    r.verdict = "invalid";
    r.metrics["message"] = e.what();
    if (c.json) {
      c.out << r.to_json().dump(2) << '\n';
    } else {
      c.err << "decompose-classical: " << e.what() << '\n';
    }
    return kNegative;
  }
  const CausalDecomposition& dec = *result;

  const std::string first = prefix + "b_not_before_a.json";
  const std::string second = prefix + "a_not_before_b.json";
  const auto parent = std::filesystem::path(first).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  write_process_file(first, dec.w_b_not_before_a);
  write_process_file(second, dec.w_a_not_before_b);

  const bool v1 = validate(dec.w_b_not_before_a, ValidationMode::structural).valid;
  const bool v2 = validate(dec.w_a_not_before_b, ValidationMode::structural).valid;
  const bool ok = v1 && v2 && dec.q >= 0.0 && dec.q <= 1.0 && dec.recombination_residual <= 1e-9;

  r.verdict = ok ? "causally-separable" : "failed";
  r.metrics["q"] = dec.q;
  r.metrics["m"] = dec.m;
  r.metrics["shifts"] = dec.shifts;
  r.metrics["recombination_residual"] = dec.recombination_residual;
  r.metrics["b_not_before_a_valid"] = v1;
  r.metrics["a_not_before_b_valid"] = v2;
  r.artifacts = {first, second};

  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    row(c.out, "q", num(dec.q));
    row(c.out, "m", num(dec.m));
    row(c.out, "shifts", std::to_string(dec.shifts));
    row(c.out, "recombination residual", num(dec.recombination_residual, 3));
    row(c.out, "B not before A", first + (v1 ? " (valid)" : " (INVALID)"));
    row(c.out, "A not before B", second + (v2 ? " (valid)" : " (INVALID)"));
  }
  return ok ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// builtin

struct BuiltinOptions {
  std::string name;
  std::string rho;
  std::string channel = "identity";
  std::string sigma = "mixed";
  std::string unitary = "h";
  std::string memory;
  std::string w1, w2;
  double q = 0.5;
  int d_a1 = 0, d_b1 = 0;
  int d_a2 = 2, d_b2 = 2;
  std::uint64_t seed = 0x5eed;
  std::string out;
};

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "ocb",   "state", "channel-b-to-a", "channel-a-to-b", "channel-with-memory",
      "mixture", "ctc"};
  return names;
}

ProcessMatrix make_builtin(const BuiltinOptions& o) {
  if (o.name == "ocb") return builtin::ocb();
  if (o.name == "state") {
    const ComplexMatrix rho = state_by_name(o.rho.empty() ? "singlet" : o.rho);
    const int n = static_cast<int>(rho.rows());
    int d_a1 = o.d_a1;
    if (d_a1 == 0) {
      const int root = static_cast<int>(std::lround(std::sqrt(n)));
      d_a1 = root * root == n ? root : n;
    }
    if (n % d_a1 != 0) throw UsageError("--d-a1 does not divide the state dimension");
    const int d_b1 = o.d_b1 ? o.d_b1 : n / d_a1;
    return builtin::state(rho, d_a1, d_b1, o.d_a2, o.d_b2);
  }
  if (o.name == "channel-b-to-a" || o.name == "channel-a-to-b") {
    const ComplexMatrix u = unitary_by_name(o.channel, o.seed);
    const CPMap channel = cj_from_kraus({u});
    const ComplexMatrix rho = state_by_name(o.rho.empty() ? "zero" : o.rho);
    return o.name == "channel-b-to-a" ? builtin::channel_b_to_a(channel, rho, o.d_a2)
                                      : builtin::channel_a_to_b(channel, rho, o.d_b2);
  }
  if (o.name == "channel-with-memory") {
    if (o.memory.empty()) throw UsageError("channel-with-memory needs --memory");
    return builtin::channel_with_memory(read_process_file(o.memory), o.d_a2);
  }
  if (o.name == "mixture") {
    if (o.w1.empty() || o.w2.empty()) throw UsageError("mixture needs --w1 and --w2");
    return builtin::mixture(o.q, read_process_file(o.w1), read_process_file(o.w2));
  }
  if (o.name == "ctc") {
    return builtin::ctc(state_by_name(o.sigma), unitary_by_name(o.unitary, o.seed));
  }
  throw UsageError("unknown builtin '" + o.name + "'");
}

int cmd_builtin(const BuiltinOptions& o, Context& c) {
  const ProcessMatrix w = make_builtin(o);
  if (o.out.empty()) {
    c.out << to_process_json(w) << '\n';
    return kOk;
  }
  write_process_file(o.out, w);
  Report r{"builtin", "written"};
  r.metrics["name"] = o.name;
  r.metrics["dims"] = dims_json(w.systems());
  r.metrics["trace"] = w.matrix().trace().real();
  r.artifacts = {o.out};
  if (c.json) {
    c.out << r.to_json().dump(2) << '\n';
  } else {
    row(c.out, "builtin", o.name);
    row(c.out, "systems", w.systems().to_string());
    row(c.out, "written", o.out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"procmat: bipartite process matrices, validation and causal games"};
  app.set_version_flag("--version", "procmat 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Machine-readable output");

  std::function<int()> action;

  ValidateOptions vo;
  auto* validate_cmd = app.add_subcommand("validate", "Check that a process file is a valid process");
  validate_cmd->add_option("path", vo.path, "Process JSON file")->required();
  validate_cmd->add_option("--mode", vo.mode, "structural, probe or both")
      ->check(CLI::IsMember({"structural", "probe", "both"}))
      ->capture_default_str();
  validate_cmd->add_option("--tol", vo.tol, "Probe tolerance on |P - 1|")->capture_default_str();
  validate_cmd->add_option("--probes", vo.probes, "Random CPTP pairs to test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate_cmd->add_option("--seed", vo.seed, "Probe seed")->capture_default_str();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(vo, ctx); }; });

  BuiltinOptions bo;
  auto* builtin_cmd = app.add_subcommand("builtin", "Write a standard process matrix");
  builtin_cmd->add_option("name", bo.name, "Builtin name")
      ->required()
      ->check(CLI::IsMember(builtin_names()));
  builtin_cmd->add_option("--rho", bo.rho, "Named state (state, channel-*)");
  builtin_cmd->add_option("--channel", bo.channel, "Named unitary channel or 'random'")
      ->capture_default_str();
  builtin_cmd->add_option("--sigma", bo.sigma, "Named state (ctc)")->capture_default_str();
  builtin_cmd->add_option("--u", bo.unitary, "Named unitary or 'random' (ctc)")
      ->capture_default_str();
  builtin_cmd->add_option("--memory", bo.memory, "Process file on (A1, 1, B1, B2)");
  builtin_cmd->add_option("--q", bo.q, "Mixing weight of --w1")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  builtin_cmd->add_option("--w1", bo.w1, "First process file (mixture)");
  builtin_cmd->add_option("--w2", bo.w2, "Second process file (mixture)");
  builtin_cmd->add_option("--d-a1", bo.d_a1, "A1 dimension (state)");
  builtin_cmd->add_option("--d-b1", bo.d_b1, "B1 dimension (state)");
  builtin_cmd->add_option("--d-a2", bo.d_a2, "A2 dimension")->capture_default_str();
  builtin_cmd->add_option("--d-b2", bo.d_b2, "B2 dimension")->capture_default_str();
  builtin_cmd->add_option("--seed", bo.seed, "Seed for 'random' unitaries")->capture_default_str();
  builtin_cmd->add_option("--out", bo.out, "Output file (stdout if omitted)");
  builtin_cmd->callback([&] { action = [&] { return cmd_builtin(bo, ctx); }; });

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "Print the Hilbert-Schmidt term table");
  classify_cmd->add_option("path", classify_path, "Process JSON file")->required();
  classify_cmd->callback([&] { action = [&] { return cmd_classify(classify_path, ctx); }; });

  auto* game_cmd = app.add_subcommand("game", "The two-party guessing game");
  game_cmd->require_subcommand(1);
  std::string game_path;
  std::string protocol = "basis-switch";
  auto* run_cmd = game_cmd->add_subcommand("run", "Score a protocol on a process file");
  run_cmd->add_option("path", game_path, "Process JSON file")->required();
  run_cmd->add_option("--protocol", protocol, "Protocol name")->capture_default_str();
  run_cmd->callback([&] { action = [&] { return cmd_game_run(game_path, protocol, ctx); }; });

  int message_dim = 2;
  std::uint64_t cap = kMaxStrategies;
  auto* brute_cmd =
      game_cmd->add_subcommand("brute-force", "Best deterministic strategy in a fixed order");
  brute_cmd->add_option("--message-dim", message_dim, "Letters in the one-way message")
      ->required();
  brute_cmd->add_option("--cap", cap, "Refuse to enumerate more strategies than this")
      ->capture_default_str();
  brute_cmd->callback([&] { action = [&] { return cmd_bruteforce(message_dim, cap, ctx); }; });

  std::string decompose_path;
  std::string prefix = "decomposition-";
  auto* decompose_cmd = app.add_subcommand(
      "decompose-classical", "Split a diagonal process into two one-way processes");
  decompose_cmd->add_option("path", decompose_path, "Diagonal process JSON file")->required();
  decompose_cmd->add_option("--out-prefix", prefix, "Prefix for the two component files")
      ->capture_default_str();
  decompose_cmd->callback(
      [&] { action = [&] { return cmd_decompose(decompose_path, prefix, ctx); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFailure;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    if (ctx.json) {
      Report r{app.get_subcommands().front()->get_name(), "error"};
      r.metrics["message"] = e.what();
      out << r.to_json().dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace procmat::cli
