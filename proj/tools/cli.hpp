#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "incseq/field.hpp"
#include "incseq/poly.hpp"

namespace incseq::cli {

enum class Format { text, json };

/// Invalid flags or flag combinations; the runner exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global settings shared by every subcommand, after validation.
struct RunConfig {
  /// Space-separated subcommand path, e.g. `kakeya verify`.
  std::string command;
  std::optional<int> n;
  std::optional<int> q;
  /// Canonical field spec; empty when neither --field nor --q was given.
  std::string field;
  /// Canonical embedding; empty when q is unknown.
  std::string embedding;
  TermOrder order = TermOrder::deglex;
  Format format = Format::text;
  std::uint64_t seed = 1;

  /// `gb --n 2 --q 3 --field gf:3 --embedding grid:2 --order deglex --format text --seed 1`.
  std::string canonical() const;
};

/// Parses only the global part of an invocation (subcommand options are
/// validated too but dropped). Throws UsageError.
RunConfig parse_config(const std::vector<std::string>& args);

/// Runs one invocation; args exclude the program name. Returns 0 on success,
/// 1 when a verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incseq::cli
