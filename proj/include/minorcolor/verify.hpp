#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "minorcolor/json_io.hpp"

namespace minorcolor {

/// Knobs shared by the property suites. trials == 0 picks the suite default.
struct VerifyOptions {
  int trials = 0;
  int gmax = 5;
  int hmax = 4;
  std::uint64_t seed = 1;
  std::filesystem::path g0;       // gap
  int k0 = 1;                     // gap
  std::filesystem::path fixture;  // lemma-remove
  std::filesystem::path input;    // gadget: optional single G1
  std::uint64_t size_limit = 1'000'000;
  std::uint64_t node_budget = 50'000'000;
};

/// Report: {"suite", "pass", "checks", "failures", "inconclusive",
/// "counterexample" (first failure or null), plus suite details}.
/// An inconclusive check (budget ran out) is not a pass.
json run_verify(const std::string& suite, const VerifyOptions& options);

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();

}  // namespace minorcolor
