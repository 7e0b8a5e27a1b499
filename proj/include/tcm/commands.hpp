#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tcm/algebra.hpp"
#include "tcm/ball.hpp"
#include "tcm/mealy.hpp"

/// The reproducible reports behind the `tcm` command-line tool.
namespace tcm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kContradiction = 4,
};

inline constexpr int kReportSchema = 1;
inline constexpr const char *kToolVersion = TCM_VERSION;

enum class MachineKind { cayley, twisted };

MachineKind parse_kind(std::string_view kind);
MealyMachine build_machine(const FiniteMonoid &monoid, MachineKind kind);

struct Predicates {
  bool invertible = false;
  bool reversible = false;
  bool bireversible = false;
};

Predicates check_predicates(const MealyMachine &m);
nlohmann::json check_report(const MealyMachine &m);

struct Caps {
  std::uint64_t words = 65536;  // |L|^depth
  std::uint64_t configs = 4096; // |A|^(window+1)
};

struct VerifyOptions {
  GroupPtr group;
  /// Replaces the constructed twisted Cayley machine when set.
  std::optional<MealyMachine> machine;
  std::size_t depth = 6;
  std::size_t window = 5;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  Caps caps;
};

struct VerifyOutcome {
  nlohmann::json report;
  int exit_code = kSuccess;
};

/// Throws CapExceeded before doing any work if a cap is exceeded, and
/// FormatError if an override machine has the wrong shape.
VerifyOutcome run_verify(const VerifyOptions &options);

nlohmann::json ball_report(const BallResult &result, const GroupPtr &group);

/// Pretty JSON with sorted keys and a trailing newline.
std::string render_report(const nlohmann::json &report);

} // namespace tcm::cli
