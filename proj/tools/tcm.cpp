// tcm: build, check and verify twisted Cayley machines.
//
// Exit codes: 0 success, 1 predicate false, 2 input error, 3 resource cap,
// 4 verification contradiction.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tcm/ball.hpp"
#include "tcm/commands.hpp"
#include "tcm/machine_io.hpp"

namespace {

using namespace tcm;
using namespace tcm::cli;

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int cmd_build(const std::string &group_spec, const std::string &table_path,
              const std::string &kind, const std::string &out_path) {
  const MachineKind k = parse_kind(kind);
  FiniteMonoid monoid = table_path.empty() ? parse_group_spec(group_spec)->monoid()
                                           : parse_monoid_table(read_file(table_path));
  const MealyMachine m = build_machine(monoid, k);
  emit(serialize_machine(m), out_path);
  auto &info = out_path.empty() ? std::cerr : std::cout;
  info << "states: " << m.num_states() << "\nletters: " << m.num_letters() << "\n";
  return kSuccess;
}

int cmd_check(const std::string &machine_path, const std::string &report_path) {
  const MealyMachine m = parse_machine(read_file(machine_path));
  const Predicates p = check_predicates(m);
  std::cout << std::boolalpha << "invertible: " << p.invertible << "\nreversible: " << p.reversible
            << "\nbireversible: " << p.bireversible << "\n";
  if (!report_path.empty())
    write_file(report_path, render_report(check_report(m)));
  return p.bireversible ? kSuccess : kPredicateFalse;
}

int cmd_verify(const VerifyOptions &options, const std::string &report_path) {
  const auto start = std::chrono::steady_clock::now();
  const VerifyOutcome outcome = run_verify(options);
  const auto &r = outcome.report;
  std::cout << "group: " << options.group->spec() << "\n"
            << "bireversible: " << (r["predicates"]["bireversible"].get<bool>() ? "true" : "false")
            << "\n"
            << "state_maps: " << r["state_maps"]["status"].get<std::string>() << " ("
            << r["state_maps"]["checked"] << " checks)\n"
            << "conjugation: " << r["conjugation"]["status"].get<std::string>() << " ("
            << r["conjugation"]["checked"] << " samples)\n"
            << "kernel: " << r["kernel"]["status"].get<std::string>() << " ("
            << r["kernel"]["configs"] << " configurations)\n";
  for (const char *section : {"state_maps", "conjugation", "kernel"})
    if (r[section].contains("first_failure"))
      std::cout << section << " diff: " << r[section]["first_failure"].get<std::string>() << "\n";
  if (!report_path.empty())
    write_file(report_path, render_report(r));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "wall clock: " << ms << " ms\n";
  return outcome.exit_code;
}

int cmd_ball(const BallOptions &options, const std::string &report_path) {
  const auto start = std::chrono::steady_clock::now();
  const BallResult result = run_ball(options);
  std::cout << "radius  words  sphere  oracle\n";
  for (std::size_t r = 0; r <= result.radius; ++r)
    std::cout << r << "  " << result.word_counts[r] << "  " << result.sphere_sizes[r] << "  "
              << result.oracle_sphere_sizes[r] << "\n";
  std::cout << "separating depths:";
  for (const auto &[depth, count] : result.separating_depths)
    std::cout << " " << depth << ":" << count;
  std::cout << "\nconsistent: " << (result.consistent() ? "true" : "false") << "\n";
  if (result.disagreements)
    std::cout << "disagreement: " << result.first_disagreement << "\n";
  if (!report_path.empty())
    write_file(report_path, render_report(ball_report(result, options.group)));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "wall clock: " << ms << " ms\n";
  return result.consistent() ? kSuccess : kContradiction;
}

int cmd_export(const std::string &machine_path, const std::string &format,
               const std::string &out_path) {
  if (format != "dot" && format != "json")
    throw FormatError("unknown export format '" + format + "'");
  const MealyMachine m = parse_machine(read_file(machine_path));
  emit(format == "dot" ? to_dot(m) : serialize_machine(m), out_path);
  return kSuccess;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Twisted Cayley machines and lamplighter groups"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string group = "2", table, kind = "twisted", out, machine, report, format = "dot";
  std::size_t depth = 6, window = 5, samples = 50, radius = 4;
  std::uint64_t seed = 0, max_words = 65536, max_configs = 4096;

  auto *build = app.add_subcommand("build", "Construct a Cayley or twisted Cayley machine");
  build->add_option("--group", group, "Invariant factors, e.g. 2x2");
  build->add_option("--table", table, "Monoid multiplication table (JSON array of arrays)");
  build->add_option("--kind", kind, "cayley or twisted")->check(CLI::IsMember({"cayley", "twisted"}));
  build->add_option("--out", out, "Output machine file (stdout if omitted)");

  auto *check = app.add_subcommand("check", "Report invertibility, reversibility, bireversibility");
  check->add_option("--machine,machine", machine, "Machine JSON file")->required();
  check->add_option("--report", report, "Write a JSON report");

  auto *verify = app.add_subcommand("verify", "Run the series, kernel and sampled checks");
  verify->add_option("--group", group, "Invariant factors, e.g. 2x2")->required();
  verify->add_option("--machine", machine, "Use this machine instead of the constructed one");
  verify->add_option("--depth", depth, "Word length for the exhaustive series check");
  verify->add_option("--window", window, "Lamp window [0, window] for the kernel test");
  verify->add_option("--samples", samples, "Sampled conjugation checks");
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--max-words", max_words, "Cap on |L|^depth");
  verify->add_option("--max-configs", max_configs, "Cap on |A|^(window+1)");
  verify->add_option("--report", report, "Write a JSON report");

  auto *ball = app.add_subcommand("ball", "Compare portraits and lamplighter normal forms on a ball");
  ball->add_option("--group", group, "Invariant factors, e.g. 2")->required();
  ball->add_option("--radius", radius, "Word length bound");
  ball->add_option("--depth", depth, "Portrait depth");
  ball->add_option("--max-words", max_words, "Cap on |L|^depth");
  ball->add_option("--report", report, "Write a JSON report");

  auto *exporter = app.add_subcommand("export", "Render a machine as DOT or JSON");
  exporter->add_option("--machine,machine", machine, "Machine JSON file")->required();
  exporter->add_option("--format", format, "dot or json");
  exporter->add_option("--out", out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (build->parsed())
      return cmd_build(group, table, kind, out);
    if (check->parsed())
      return cmd_check(machine, report);
    if (verify->parsed()) {
      VerifyOptions options;
      options.group = parse_group_spec(group);
      if (!machine.empty())
        options.machine = parse_machine(read_file(machine));
      options.depth = depth;
      options.window = window;
      options.samples = samples;
      options.seed = seed;
      options.caps = {max_words, max_configs};
      return cmd_verify(options, report);
    }
    if (ball->parsed()) {
      BallOptions options;
      options.group = parse_group_spec(group);
      options.radius = radius;
      options.depth = depth;
      options.portrait_cap = max_words;
      return cmd_ball(options, report);
    }
    if (exporter->parsed())
      return cmd_export(machine, format, out);
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << "\nhint: raise the cap or shrink the enumeration\n";
    return kCapExceeded;
  } catch (const DepthTooLarge &e) {
    std::cerr << "error: " << e.what() << "\nhint: lower --depth or raise --max-words\n";
    return kCapExceeded;
  } catch (const tcm::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
