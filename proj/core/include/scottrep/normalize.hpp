#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "scottrep/term.hpp"

namespace scottrep {

inline constexpr std::size_t kDefaultFuel = 10000;

// A Subst-free beta-normal term.
struct NormalForm {
  Term term;
  std::size_t fuel_spent = 0;
};

struct FuelExhausted {
  Term partial;
  std::size_t fuel_spent = 0;
};

using NormalizeResult = std::variant<NormalForm, FuelExhausted>;

// Leftmost-outermost normalization.  Every substitution push and every beta
// contraction costs one unit of fuel.
NormalizeResult normalize(const Term& t, std::size_t fuel = kDefaultFuel);

enum class EqVerdict { Equal, Distinct, Unknown };

struct EqResult {
  EqVerdict verdict = EqVerdict::Unknown;
  std::size_t fuel_spent = 0;

  static EqResult equal(std::size_t spent = 0) { return {EqVerdict::Equal, spent}; }
  static EqResult distinct(std::size_t spent = 0) { return {EqVerdict::Distinct, spent}; }
  static EqResult unknown(std::size_t spent = 0) { return {EqVerdict::Unknown, spent}; }

  bool is_equal() const noexcept { return verdict == EqVerdict::Equal; }
  bool is_distinct() const noexcept { return verdict == EqVerdict::Distinct; }
  bool is_unknown() const noexcept { return verdict == EqVerdict::Unknown; }
};

// Conjunction: Distinct dominates, then Unknown.
EqResult operator&&(const EqResult& a, const EqResult& b);

std::string to_string(EqVerdict v);

// Each side gets the full fuel budget.  Throws TermError on a scope mismatch.
EqResult beta_eq(const Term& s, const Term& t, std::size_t fuel = kDefaultFuel);

}  // namespace scottrep
