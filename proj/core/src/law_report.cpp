#include "scottrep/law_report.hpp"

#include <cstdio>

#include <json.hpp>

namespace scottrep {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Inconclusive: return 2;
    case Verdict::Fail: return 3;
  }
  return 3;
}

void LawTally::record(const EqResult& r, const std::function<std::string()>& describe) {
  switch (r.verdict) {
    case EqVerdict::Equal:
      ++pass;
      return;
    case EqVerdict::Unknown:
      ++unknown;
      return;
    case EqVerdict::Distinct:
      ++fail;
      if (!counterexample) counterexample = describe();
      return;
  }
}

void LawTally::record(bool holds, const std::function<std::string()>& describe) {
  record(holds ? EqResult::equal() : EqResult::distinct(), describe);
}

double LawTally::unknown_rate() const noexcept {
  return total() == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(total());
}

Verdict LawTally::verdict(double unknown_threshold) const {
  if (fail > 0) return Verdict::Fail;
  if (unknown_rate() > unknown_threshold) return Verdict::Inconclusive;
  return Verdict::Pass;
}

LawTally& LawReport::law(const std::string& name) {
  for (LawTally& t : laws) {
    if (t.law == name) return t;
  }
  LawTally t;
  t.law = name;
  laws.push_back(std::move(t));
  return laws.back();
}

const LawTally* LawReport::find(const std::string& name) const {
  for (const LawTally& t : laws) {
    if (t.law == name) return &t;
  }
  return nullptr;
}

void LawReport::append(const LawReport& other, const std::string& prefix) {
  for (LawTally t : other.laws) {
    t.law = prefix + t.law;
    laws.push_back(std::move(t));
  }
}

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (const LawTally& t : laws) n += t.fail;
  return n;
}

std::size_t LawReport::unknowns() const {
  std::size_t n = 0;
  for (const LawTally& t : laws) n += t.unknown;
  return n;
}

Verdict LawReport::verdict(double unknown_threshold) const {
  Verdict v = Verdict::Pass;
  for (const LawTally& t : laws) {
    const Verdict lv = t.verdict(unknown_threshold);
    if (lv == Verdict::Fail) return Verdict::Fail;
    if (lv == Verdict::Inconclusive) v = Verdict::Inconclusive;
  }
  return v;
}

std::string LawReport::to_json(double unknown_threshold) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["verdict"] = to_string(verdict(unknown_threshold));
  j["laws"] = nlohmann::ordered_json::array();
  for (const LawTally& t : laws) {
    nlohmann::ordered_json e;
    e["law"] = t.law;
    e["pass"] = t.pass;
    e["fail"] = t.fail;
    e["unknown"] = t.unknown;
    if (t.counterexample) e["counterexample"] = *t.counterexample;
    j["laws"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string LawReport::to_text(double unknown_threshold) const {
  std::string out = suite + ": " + to_string(verdict(unknown_threshold)) + "\n";
  for (const LawTally& t : laws) {
    char line[256];
    std::snprintf(line, sizeof line, "  %-32s %-12s pass=%zu fail=%zu unknown=%zu\n", t.law.c_str(),
                  to_string(t.verdict(unknown_threshold)).c_str(), t.pass, t.fail, t.unknown);
    out += line;
    if (t.counterexample) out += "    counterexample: " + *t.counterexample + "\n";
  }
  return out;
}

}  // namespace scottrep
