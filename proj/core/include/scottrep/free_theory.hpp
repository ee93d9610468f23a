#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"

namespace scottrep {

// An element of T(A)_n: either an index 1..n or a constant label of A.
struct FreeElement {
  enum class Tag { Index, Label };
  Tag tag = Tag::Index;
  std::size_t value = 1;  // 1-based index, or position in the label list

  friend bool operator==(const FreeElement&, const FreeElement&) = default;
};

// The free algebraic theory on a finite set of constants:
// T(A)_n = {1, .., n} ⊔ A, where constants absorb substitution and indices
// project.
class FreeTheory {
 public:
  using Element = FreeElement;

  explicit FreeTheory(std::vector<std::string> labels);

  Element var(std::size_t n, std::size_t i) const;
  Element label(std::string_view name) const;
  Element subst(const Element& f, std::span<const Element> g, std::size_t n) const;
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const;
  Element sample(std::size_t n, Rng& rng) const;
  std::vector<Element> enumerate(std::size_t n) const;

  std::string render(const Element& e) const;
  // Accepts a label name or a decimal index.
  Element parse(std::string_view text, std::size_t n) const;
  std::string name() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

}  // namespace scottrep
