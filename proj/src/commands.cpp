#include "tcm/commands.hpp"

#include "tcm/lamplighter.hpp"
#include "tcm/machine_io.hpp"
#include "tcm/sampling.hpp"
#include "tcm/series.hpp"

namespace tcm::cli {

using nlohmann::json;

MachineKind parse_kind(std::string_view kind) {
  if (kind == "cayley")
    return MachineKind::cayley;
  if (kind == "twisted")
    return MachineKind::twisted;
  throw FormatError("unknown machine kind '" + std::string(kind) + "'");
}

MealyMachine build_machine(const FiniteMonoid &monoid, MachineKind kind) {
  return kind == MachineKind::cayley ? cayley_machine(monoid) : twisted_cayley_machine(monoid);
}

Predicates check_predicates(const MealyMachine &m) {
  return {is_invertible(m), is_reversible(m), is_bireversible(m)};
}

namespace {

json predicates_json(const Predicates &p) {
  return {{"invertible", p.invertible}, {"reversible", p.reversible}, {"bireversible", p.bireversible}};
}

json machine_json(const MealyMachine &m, const std::string &source) {
  return {{"fingerprint", machine_fingerprint(m)},
          {"source", source},
          {"states", m.num_states()},
          {"letters", m.num_letters()}};
}

json header(const std::string &command) {
  return {{"schema", kReportSchema}, {"tool_version", kToolVersion}, {"command", command}};
}

std::string status(bool ok) { return ok ? "pass" : "fail"; }

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(const CheckResult &r) {
    ++checked;
    if (!r.ok && failures++ == 0)
      first_failure = r.diff;
  }

  json to_json() const {
    json j = {{"checked", checked}, {"failures", failures}, {"status", status(failures == 0)}};
    if (failures)
      j["first_failure"] = first_failure;
    return j;
  }
};

Tally run_state_maps(const MealyMachine &machine, const GroupPtr &group, std::size_t depth) {
  Tally tally;
  const StateMapChecker checker(machine, group, depth);
  const std::size_t alphabet = machine.num_letters();
  for (std::size_t length = 1; length <= depth; ++length) {
    Word w(length, 0);
    while (true) {
      for (Element a = 0; a < group->order(); ++a)
        tally.record(checker.check(a, w));
      std::size_t i = length;
      while (i > 0 && ++w[i - 1] == alphabet)
        w[--i] = 0;
      if (i == 0)
        break;
    }
  }
  return tally;
}

Tally run_conjugation(const GroupPtr &group, std::size_t depth, std::size_t samples,
                  std::uint64_t seed) {
  Tally tally;
  sampling::Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto g = sampling::unit_series(rng, group, 3, 2);
    const auto h = sampling::pair_series(rng, group, 3, 2);
    const auto f = sampling::pair_coeffs(rng, *group, depth + 1);
    tally.record(verify_conjugation(g, h, f, depth));
  }
  return tally;
}

json run_kernel(const GroupPtr &group, std::size_t window, bool &ok) {
  std::uint64_t configs = 0, in_kernel = 0, recovery_failures = 0;
  std::string first_failure;
  for (const auto &config : window_configs(*group, window)) {
    ++configs;
    const bool trivial = kernel_test(group, config);
    if (config.empty()) {
      if (!trivial && first_failure.empty())
        first_failure = "empty configuration is not in the kernel";
      continue;
    }
    if (trivial) {
      ++in_kernel;
      if (first_failure.empty())
        first_failure = "nonzero configuration in the kernel: " +
                        LamplighterElement(group, config, 0).to_string();
    }
    const Element top = config.rbegin()->second;
    if (leading_lamp_recovery(group, config) != Pair{top, top}) {
      ++recovery_failures;
      if (first_failure.empty())
        first_failure = "leading lamp not recovered for " +
                        LamplighterElement(group, config, 0).to_string();
    }
  }
  ok = first_failure.empty();
  json j = {{"window", {0, window}},
            {"configs", configs},
            {"nonzero_in_kernel", in_kernel},
            {"recovery_failures", recovery_failures},
            {"status", status(ok)}};
  if (!ok)
    j["first_failure"] = first_failure;
  return j;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap,
                            const std::string &what) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    value *= base;
    if (value > cap)
      throw CapExceeded(what + " exceeds the cap of " + std::to_string(cap));
  }
  return value;
}

} // namespace

json check_report(const MealyMachine &m) {
  json j = header("check");
  j["machine"] = machine_json(m, "file");
  j["predicates"] = predicates_json(check_predicates(m));
  return j;
}

VerifyOutcome run_verify(const VerifyOptions &options) {
  const auto &group = options.group;
  checked_power(group->pair_count(), options.depth, options.caps.words, "|L|^depth");
  checked_power(group->order(), options.window + 1, options.caps.configs, "|A|^(window+1)");
  if (options.depth == 0)
    throw FormatError("depth must be at least 1");

  const MealyMachine machine =
      options.machine ? *options.machine : twisted_cayley_machine(group->monoid());
  if (machine.num_states() != group->order() || machine.num_letters() != group->pair_count())
    throw FormatError("machine shape does not match the twisted Cayley machine of " +
                      group->spec());

  const Predicates predicates = check_predicates(machine);
  const Tally state_maps = run_state_maps(machine, group, options.depth);
  const Tally conjugation = run_conjugation(group, options.depth, options.samples, options.seed);
  bool kernel_ok = false;
  json kernel = run_kernel(group, options.window, kernel_ok);

  VerifyOutcome out;
  out.report = header("verify");
  out.report["group"] = group->spec();
  out.report["machine"] = machine_json(machine, options.machine ? "file" : "twisted_cayley");
  out.report["predicates"] = predicates_json(predicates);
  out.report["state_maps"] = state_maps.to_json();
  out.report["state_maps"]["depth"] = options.depth;
  out.report["conjugation"] = conjugation.to_json();
  out.report["conjugation"]["depth"] = options.depth;
  out.report["conjugation"]["seed"] = options.seed;
  out.report["kernel"] = std::move(kernel);

  const bool checks_ok = state_maps.failures == 0 && conjugation.failures == 0 && kernel_ok;
  out.report["passed"] = checks_ok && predicates.bireversible;
  if (!checks_ok)
    out.exit_code = kContradiction;
  else if (!predicates.bireversible)
    out.exit_code = kPredicateFalse;
  return out;
}

json ball_report(const BallResult &result, const GroupPtr &group) {
  json j = header("ball");
  j["group"] = group->spec();
  j["radius"] = result.radius;
  j["depth"] = result.depth;
  json spheres = json::array();
  for (std::size_t r = 0; r <= result.radius; ++r)
    spheres.push_back({{"radius", r},
                       {"words", result.word_counts[r]},
                       {"sphere", result.sphere_sizes[r]},
                       {"oracle", result.oracle_sphere_sizes[r]}});
  j["spheres"] = std::move(spheres);
  json depths = json::object();
  for (const auto &[depth, count] : result.separating_depths)
    depths[std::to_string(depth)] = count;
  j["separating_depths"] = std::move(depths);
  j["distinct_elements"] = result.distinct_elements;
  j["disagreements"] = result.disagreements;
  if (result.disagreements)
    j["first_disagreement"] = result.first_disagreement;
  j["consistent"] = result.consistent();
  return j;
}

std::string render_report(const json &report) { return report.dump(2) + "\n"; }

} // namespace tcm::cli
