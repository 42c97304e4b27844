#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncalc {

// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
inline constexpr int exit_ok = 0;
inline constexpr int exit_math_failure = 1;
inline constexpr int exit_input_error = 2;

struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> ideal_path;   // fodc --ideal
  std::string fodc_choice = "universal";   // cartan --fodc
  std::optional<std::string> cartan_path;  // reconstruct --cartan
  std::string side = "right";              // dual/cartan --side
  std::optional<std::string> field;        // --field Q | Fp:<p>
  std::uint64_t seed = 0;                  // --seed
  std::string format = "human";            // --format human|json
  std::optional<std::string> out_path;     // --out
};

int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace ncalc
