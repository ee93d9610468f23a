#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scottrep/normalize.hpp"

namespace scottrep {

inline constexpr double kDefaultUnknownThreshold = 0.01;

// Sample count, seed and fuel for the sampled check suites.
struct SampleOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t fuel = kDefaultFuel;
};

enum class Verdict { Pass, Inconclusive, Fail };

std::string to_string(Verdict v);

// Exit status convention shared by the CLI: 0 pass, 2 too many Unknowns,
// 3 a law failed.
int exit_code(Verdict v);

struct LawTally {
  std::string law;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
  std::optional<std::string> counterexample;

  // `describe` is only invoked for the first failure.
  void record(const EqResult& r, const std::function<std::string()>& describe);
  void record(bool holds, const std::function<std::string()>& describe);

  std::size_t total() const noexcept { return pass + fail + unknown; }
  double unknown_rate() const noexcept;
  Verdict verdict(double unknown_threshold = kDefaultUnknownThreshold) const;
};

struct LawReport {
  std::string suite;
  std::vector<LawTally> laws;

  // Finds or appends the named law.
  LawTally& law(const std::string& name);
  const LawTally* find(const std::string& name) const;
  // Appends other's laws, prefixing their names.
  void append(const LawReport& other, const std::string& prefix = "");

  std::size_t failures() const;
  std::size_t unknowns() const;
  Verdict verdict(double unknown_threshold = kDefaultUnknownThreshold) const;

  // {"suite", "verdict", "laws": [{law, pass, fail, unknown, counterexample?}]}
  std::string to_json(double unknown_threshold = kDefaultUnknownThreshold) const;
  std::string to_text(double unknown_threshold = kDefaultUnknownThreshold) const;
};

}  // namespace scottrep
