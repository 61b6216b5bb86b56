#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chromsym/hessenberg.hpp"

namespace chromsym::cli {

enum class Command { Info, Csp, Schur, Verify, Poincare, Colourings, Kostka, Sweep };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::Info;
  std::optional<ReverseHessenberg> r;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> m_max;
  Format format = Format::Text;
  bool parallel = false;
  std::optional<long> limit;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;

/// Executes a parsed configuration. Throws chromsym::Error for invalid input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; never throws. Invalid input is reported on `err`
/// with status kInvalidInput.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromsym::cli
