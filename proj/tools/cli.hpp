#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liecoh::cli {

enum class Command { Betti, Profile, DiamondB2, Verify, Cocycles, ExportMatrix };
enum class Format { Table, Json, Csv };

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kBadInput = 2,
  kUnknownFamily = 3,
  kIOFailure = 4,
};

struct RunConfig {
  Command command = Command::Profile;

  // Input source: a built-in family or a JSON algebra file (not both).
  std::optional<std::string> family;  // aff | heisenberg | abelian | diamond
  std::optional<std::string> input_path;
  int m = 1;                        // heisenberg parameter
  int d = 0;                        // abelian dimension
  int ext = 0;                      // extra abelian summand R^ext
  std::vector<std::string> lambda;  // diamond entries, `p/q` or `p/q+r/si`

  std::optional<int> degree;
  Format format = Format::Table;
  std::optional<std::string> output_path;

  // verify
  std::optional<std::uint64_t> seed;
  std::optional<std::string> profile_path;
};

/// Default seed of the verify sweep; LIECOH_SEED overrides it, --seed
/// overrides both.
inline constexpr std::uint64_t kDefaultSeed = 20180101;

/// Executes one command. Reports go to `out` (or to config.output_path),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

}  // namespace liecoh::cli
