#include "steinberg_rsk/cli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "steinberg_rsk/verify.hpp"

namespace srsk {

CommandResult CommandResult::error(ExitCode code, std::string message) {
  CommandResult r;
  r.code = code;
  r.diagnostics.push_back(std::move(message));
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"map",  "unmap",   "dual",    "tauhat", "rsk",    "evac",
                                                 "rect", "enum-syd", "enum-pp", "census", "verify", "poset"};
  return names;
}

bool command_reads_input(const std::string& command) { return command != "verify"; }

namespace {

constexpr std::uint64_t kCalibrationSeed = 0x5eed;

// One calibration per (prime, trials), on its own source so that the
// caller's seeded stream is the same whether or not the cache is warm.
const Correspondence& calibrated_engine(const OracleConfig& config) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, Correspondence> cache;
  const std::lock_guard lock(mu);
  const auto key = std::make_pair(config.field.prime(), config.trials);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Rng rng(kCalibrationSeed);
    it = cache.emplace(key, Correspondence(VariantRsk::calibrated(4, config, rng))).first;
  }
  return it->second;
}

struct Session {
  OracleConfig config;
  Rng rng;
  std::uint64_t seed;

  const Correspondence& correspondence() const { return calibrated_engine(config); }
};

Json parse(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("input is not valid JSON: ") + e.what());
  }
}

std::pair<int, int> read_pq(const Json& j) {
  const auto get = [&](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1 ||
        j.at(key).get<long long>() > 64) {
      throw SchemaError(std::string("expected {\"p\", \"q\"} with ") + key + " an integer in 1..64");
    }
    return j.at(key).get<int>();
  };
  return {get("p"), get("q")};
}

Json tauhat_of(const std::string& input, Session& s) {
  const auto first = input.find_first_not_of(" \t\r\n");
  const bool json = first != std::string::npos && (input[first] == '{' || input[first] == '[');
  if (json) {
    const Json j = parse(input);
    if (!(j.is_object() && j.contains("entries"))) return to_json(tau_hat(from_json<PartialPermutation>(j)));
    const FieldMatrix x = from_json<FieldMatrix>(j);
    return to_json(schubert_position(bordered_e_flag(x), bordered_f_flag(x.rows(), x.cols(), x.field())));
  }
  const FieldMatrix x = field_matrix_from_csv(input, s.config.field);
  return to_json(schubert_position(bordered_e_flag(x), bordered_f_flag(x.rows(), x.cols(), x.field())));
}

Json check_json(const CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"failures", c.failures}};
}

CommandResult verify(const CliOptions& o, Session& s) {
  if (o.pmax < 1 || o.qmax < 1) return CommandResult::error(ExitCode::InputError, "verify: --pmax and --qmax must be positive");
  const Correspondence& corr = s.correspondence();
  Rng calibration_rng(kCalibrationSeed);
  const CalibrationReport calibration = calibrate(4, s.config, calibration_rng);
  const auto checks = verify_all(corr, s.config, o.pmax, o.qmax, s.rng);
  CommandResult r;
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back(check_json(c));
    if (!c.passed) {
      r.code = ExitCode::Failure;
      for (const auto& f : c.failures) r.diagnostics.push_back("failed: " + c.name + ": " + f);
      if (c.failures.empty()) r.diagnostics.push_back("failed: " + c.name);
    }
  }
  if (!calibration.selected()) {
    r.code = ExitCode::Failure;
    r.diagnostics.push_back("failed: calibration did not select a unique convention");
  }
  if (r.code != ExitCode::Ok) return r;
  r.payload = Json{{"seed", s.seed},
                   {"prime", s.config.field.prime()},
                   {"trials", s.config.trials},
                   {"pmax", o.pmax},
                   {"qmax", o.qmax},
                   {"calibration", to_json(calibration)},
                   {"checks", list},
                   {"passed", true}};
  return r;
}

Json dispatch(const CliOptions& o, const std::string& input, Session& s) {
  const std::string& cmd = o.command;
  if (cmd == "tauhat") return tauhat_of(input, s);
  const Json j = parse(input);
  if (cmd == "map") return to_json(s.correspondence().forward(from_json<PartialPermutation>(j), s.rng));
  if (cmd == "unmap") return to_json(s.correspondence().inverse(from_json<CorrespondenceTriple>(j), s.rng));
  if (cmd == "dual") return to_json(s.correspondence().dual(from_json<PartialPermutation>(j), s.rng));
  if (cmd == "rsk") {
    if (j.is_object() && j.contains("entries")) {
      const auto [qhat, phat] = s.correspondence().rsk().forward(from_json<MarginMatrix>(j), s.rng);
      return {{"qhat", to_json(qhat)}, {"phat", to_json(phat)}};
    }
    if (!(j.is_object() && j.contains("qhat") && j.contains("phat"))) {
      throw SchemaError("rsk: expected a margin matrix or {\"qhat\", \"phat\"}");
    }
    return to_json(s.correspondence().rsk().inverse(from_json<RowStandardTableau>(j.at("qhat")),
                                                    from_json<RowStandardTableau>(j.at("phat")), s.rng));
  }
  if (cmd == "evac") return to_json(evacuate(from_json<RowStandardTableau>(j)));
  if (cmd == "rect") {
    if (!j.is_object() || !j.contains("tableau") || !j.contains("index") || !j.at("index").is_number_integer()) {
      throw SchemaError("rect: expected {\"tableau\": ..., \"index\": i}");
    }
    const RowStandardTableau t = from_json<RowStandardTableau>(j.at("tableau"));
    const long long i = j.at("index").get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) > t.length()) throw SchemaError("rect: index out of range");
    return to_json(rectify(t, static_cast<std::size_t>(i)));
  }
  if (cmd == "enum-syd") {
    Json out = Json::array();
    for (const auto& d : enumerate_syd(from_json<Signature>(j))) {
      Json e = to_json(d);
      e["admissible"] = is_admissible(d);
      out.push_back(e);
    }
    return out;
  }
  if (cmd == "enum-pp") {
    const auto [p, q] = read_pq(j);
    Json out = Json::array();
    for (const auto& t : enumerate_pp(p, q)) out.push_back(to_json(t));
    return out;
  }
  if (cmd == "census") {
    const auto [p, q] = read_pq(j);
    return to_json(census(s.correspondence(), p, q, s.rng));
  }
  if (cmd == "poset") {
    const auto nodes = enumerate_syd(from_json<Signature>(j));
    Json nj = Json::array();
    for (const auto& d : nodes) nj.push_back(to_json(d));
    auto edges = closure_hasse_edges(nodes);
    std::sort(edges.begin(), edges.end());
    Json ej = Json::array();
    for (const auto& [lo, hi] : edges) ej.push_back({lo, hi});
    return {{"nodes", nj}, {"edges", ej}};
  }
  throw SchemaError("unknown command \"" + cmd + "\"");
}

}  // namespace

CommandResult run_command(const CliOptions& o, const std::string& input) {
  if (std::find(command_names().begin(), command_names().end(), o.command) == command_names().end()) {
    return CommandResult::error(ExitCode::InputError, "unknown command \"" + o.command + "\"");
  }
  if (o.strict && o.trials && !o.seed) {
    return CommandResult::error(ExitCode::InputError, "--strict: --trials requires --seed");
  }
  if (o.trials && *o.trials < 2) return CommandResult::error(ExitCode::InputError, "--trials must be at least 2");
  try {
    const std::uint64_t seed = o.seed ? *o.seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
    OracleConfig config = OracleConfig::from_env();
    if (o.trials) config.trials = *o.trials;
    Session s{config, Rng(seed), seed};
    CommandResult r;
    if (o.command == "verify") {
      r = verify(o, s);
    } else {
      r.payload = dispatch(o, input, s);
    }
    if (!o.seed) r.diagnostics.push_back("seed " + std::to_string(seed));
    return r;
  } catch (const SchemaError& e) {
    return CommandResult::error(ExitCode::InputError, e.what());
  } catch (const Json::exception& e) {
    return CommandResult::error(ExitCode::InputError, std::string("malformed input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return CommandResult::error(ExitCode::InputError, e.what());
  } catch (const std::exception& e) {
    return CommandResult::error(ExitCode::Failure, e.what());
  }
}

}  // namespace srsk
