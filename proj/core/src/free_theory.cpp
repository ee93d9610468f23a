#include "scottrep/free_theory.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "scottrep/term.hpp"

namespace scottrep {

FreeTheory::FreeTheory(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].empty()) throw std::invalid_argument("empty constant label");
    if (std::isdigit(static_cast<unsigned char>(labels_[k][0]))) {
      throw std::invalid_argument("constant label '" + labels_[k] + "' starts with a digit");
    }
    if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(k), labels_[k]) !=
        labels_.begin() + static_cast<std::ptrdiff_t>(k)) {
      throw std::invalid_argument("duplicate constant label '" + labels_[k] + "'");
    }
  }
}

FreeElement FreeTheory::var(std::size_t n, std::size_t i) const {
  if (i == 0 || i > n) throw TermError("index " + std::to_string(i) + " exceeds scope " + std::to_string(n));
  return {FreeElement::Tag::Index, i};
}

FreeElement FreeTheory::label(std::string_view name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
  return {FreeElement::Tag::Label, static_cast<std::size_t>(it - labels_.begin())};
}

FreeElement FreeTheory::subst(const Element& f, std::span<const Element> g, std::size_t) const {
  if (f.tag == FreeElement::Tag::Label) return f;
  if (f.value > g.size()) {
    throw TermError("index " + std::to_string(f.value) + " exceeds tuple of length " + std::to_string(g.size()));
  }
  return g[f.value - 1];
}

EqResult FreeTheory::eq(const Element& a, const Element& b, std::size_t, std::size_t) const {
  return a == b ? EqResult::equal() : EqResult::distinct();
}

FreeElement FreeTheory::sample(std::size_t n, Rng& rng) const {
  const std::size_t size = n + labels_.size();
  if (size == 0) throw std::invalid_argument("T(∅)_0 is empty; nothing to sample");
  const std::size_t k = rng.below(size);
  if (k < n) return {FreeElement::Tag::Index, k + 1};
  return {FreeElement::Tag::Label, k - n};
}

std::vector<FreeElement> FreeTheory::enumerate(std::size_t n) const {
  std::vector<FreeElement> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back({FreeElement::Tag::Index, i});
  for (std::size_t k = 0; k < labels_.size(); ++k) out.push_back({FreeElement::Tag::Label, k});
  return out;
}

std::string FreeTheory::render(const Element& e) const {
  if (e.tag == FreeElement::Tag::Label) return labels_.at(e.value);
  return std::to_string(e.value);
}

FreeElement FreeTheory::parse(std::string_view text, std::size_t n) const {
  if (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0]))) {
    std::size_t i = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw std::invalid_argument("bad index '" + std::string(text) + "'");
    }
    return var(n, i);
  }
  return label(text);
}

std::string FreeTheory::name() const {
  std::string out = "free{";
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k > 0) out += ",";
    out += labels_[k];
  }
  return out + "}";
}

}  // namespace scottrep
