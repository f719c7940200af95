#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bbwu/bbw.hpp"
#include "bbwu/grassmann.hpp"
#include "bbwu/ulrich.hpp"

namespace bbwu::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Thrown for malformed command-line values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "3,1,0" and the repetition shorthand "10^10,0^10" into integers.
/// `arg` names the option in error messages.
std::vector<Entry> parse_int_list(std::string_view text, std::string_view arg);

// JSON encodings. Big integers are decimal strings, rationals
// {"num": ..., "den": ...}, weights integer arrays.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const ExactRational& v);
nlohmann::json to_json(const GLWeight& w);
nlohmann::json to_json(const CohomologyReport& r);
nlohmann::json to_json(const UlrichVerdict& v);
nlohmann::json bundle_summary(const HomogeneousBundle& b);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& doc);

/// Runs the tool. `env_cache` is the fallback cache directory (normally the
/// BBW_ULRICH_CACHE environment variable).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cache = std::nullopt);

}  // namespace bbwu::cli
