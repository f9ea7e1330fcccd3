#pragma once

/// The acceptance checks, runnable from the CLI and from the test suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isokit/io.hpp"

namespace isokit::selftest {

struct Options {
  std::uint64_t seed = 1;
  /// Negative control: "k0-constant" corrupts the constant of the closed form
  /// checked by criterion 1.
  std::string mutation;
  unsigned threads = 1;
};

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Deterministic evidence (counts, pinned values, first failure).
  io::Json details;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` in [1, kCriterionCount].
Criterion run(int id, const Options& opts);

/// Runs every criterion; `progress` is called after each one.
std::vector<Criterion> run_all(const Options& opts, const std::function<void(const Criterion&)>& progress = {});

/// {"timestamp", "seed", "mutation", "criteria": [...], "pass"}; timings
/// are left out so reruns compare byte for byte once "timestamp" is dropped.
io::Json report(const std::vector<Criterion>& results, const Options& opts);

}  // namespace isokit::selftest
