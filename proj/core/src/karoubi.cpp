#include "scottrep/karoubi.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

namespace scottrep {

std::optional<std::size_t> Monoid::find(const std::string& name) const {
  const auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

bool Monoid::commutative() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Monoid::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (op(a, a) == a) out.push_back(a);
  }
  return out;
}

LawReport Monoid::check_laws() const {
  LawReport report;
  report.suite = "monoid";
  LawTally& unit_law = report.law("unit");
  for (std::size_t a = 0; a < size(); ++a) {
    unit_law.record(op(unit, a) == a && op(a, unit) == a, [&] { return "unit with " + elements[a]; });
  }
  LawTally& assoc = report.law("assoc");
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      for (std::size_t c = 0; c < size(); ++c) {
        assoc.record(op(op(a, b), c) == op(a, op(b, c)),
                     [&] { return "(" + elements[a] + elements[b] + ")" + elements[c]; });
      }
    }
  }
  return report;
}

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  Matrix2 out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return out;
}

Monoid matrix_monoid(const std::vector<std::string>& names, const std::vector<Matrix2>& matrices) {
  if (names.size() != matrices.size() || names.empty()) throw CategoryError("one name per matrix");
  Monoid m;
  m.elements = names;
  const auto index = [&](const Matrix2& x) -> std::size_t {
    for (std::size_t k = 0; k < matrices.size(); ++k) {
      const Matrix2& e = matrices[k];
      if (e[0][0] == x[0][0] && e[0][1] == x[0][1] && e[1][0] == x[1][0] && e[1][1] == x[1][1]) return k;
    }
    throw CategoryError("matrices are not closed under multiplication");
  };
  for (const Matrix2& x : matrices) {
    for (const Matrix2& y : matrices) m.table.push_back(index(multiply(x, y)));
  }
  const Matrix2 identity{{{1, 0}, {0, 1}}};
  m.unit = index(identity);
  return m;
}

Monoid matrix_monoid() {
  return matrix_monoid({"a", "b", "c"}, {Matrix2{{{1, 0}, {0, 1}}}, Matrix2{{{1, 0}, {0, 0}}}, Matrix2{{{-1, 0}, {0, 0}}}});
}

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<std::size_t> ids,
                         std::vector<std::optional<std::size_t>> compose)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), ids_(std::move(ids)), compose_(std::move(compose)) {
  const std::size_t A = arrows_.size();
  if (ids_.size() != objects_.size()) throw CategoryError("one identity per object");
  if (compose_.size() != A * A) throw CategoryError("composition table has the wrong size");
  for (const Arrow& f : arrows_) {
    if (f.src >= objects_.size() || f.dst >= objects_.size()) throw CategoryError("arrow " + f.name + " has a bad endpoint");
  }
  for (std::size_t x = 0; x < objects_.size(); ++x) {
    if (ids_[x] >= A || arrows_[ids_[x]].src != x || arrows_[ids_[x]].dst != x) {
      throw CategoryError("identity of " + objects_[x] + " is not an endomorphism of it");
    }
  }
  for (std::size_t g = 0; g < A; ++g) {
    for (std::size_t f = 0; f < A; ++f) {
      const auto& h = compose_[g * A + f];
      if (arrows_[f].dst != arrows_[g].src) {
        if (h) throw CategoryError("composite given for non-composable " + arrows_[g].name + " ∘ " + arrows_[f].name);
        continue;
      }
      if (!h) throw CategoryError("missing composite " + arrows_[g].name + " ∘ " + arrows_[f].name);
      if (*h >= A || arrows_[*h].src != arrows_[f].src || arrows_[*h].dst != arrows_[g].dst) {
        throw CategoryError("composite " + arrows_[g].name + " ∘ " + arrows_[f].name + " is mistyped");
      }
    }
  }
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  const auto& h = compose_.at(g * arrows_.size() + f);
  if (!h) throw CategoryError("cannot compose " + arrows_.at(g).name + " with " + arrows_.at(f).name);
  return *h;
}

std::vector<std::size_t> FinCategory::hom(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < arrows_.size(); ++f) {
    if (arrows_[f].src == a && arrows_[f].dst == b) out.push_back(f);
  }
  return out;
}

std::optional<std::size_t> FinCategory::find_object(const std::string& name) const {
  const auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> FinCategory::find_arrow(const std::string& name) const {
  for (std::size_t f = 0; f < arrows_.size(); ++f) {
    if (arrows_[f].name == name) return f;
  }
  return std::nullopt;
}

bool FinCategory::idempotent(std::size_t f) const {
  return arrows_.at(f).src == arrows_[f].dst && compose(f, f) == f;
}

LawReport FinCategory::check_laws() const {
  LawReport report;
  report.suite = "category";
  report.law("left_unit");
  report.law("right_unit");
  report.law("assoc");
  const std::size_t A = arrows_.size();
  for (std::size_t f = 0; f < A; ++f) {
    const Arrow& a = arrows_[f];
    report.laws[0].record(compose(ids_[a.dst], f) == f, [&] { return "id ∘ " + a.name; });
    report.laws[1].record(compose(f, ids_[a.src]) == f, [&] { return a.name + " ∘ id"; });
  }
  for (std::size_t f = 0; f < A; ++f) {
    for (std::size_t g = 0; g < A; ++g) {
      if (arrows_[f].dst != arrows_[g].src) continue;
      const std::size_t gf = compose(g, f);
      for (std::size_t h = 0; h < A; ++h) {
        if (arrows_[g].dst != arrows_[h].src) continue;
        report.laws[2].record(compose(h, gf) == compose(compose(h, g), f), [&] {
          const std::string& hn = arrows_[h].name;
          const std::string& gn = arrows_[g].name;
          const std::string& fn = arrows_[f].name;
          return hn + " ∘ (" + gn + " ∘ " + fn + ") = " + arrows_[compose(h, gf)].name + " but (" + hn + " ∘ " + gn +
                 ") ∘ " + fn + " = " + arrows_[compose(compose(h, g), f)].name;
        });
      }
    }
  }
  return report;
}

FinCategory FinCategory::from_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CategoryError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> obj_index, arrow_index;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (!obj_index.emplace(objects[i], i).second) throw CategoryError("duplicate object " + objects[i]);
    }
    const auto obj = [&](const std::string& name) {
      const auto it = obj_index.find(name);
      if (it == obj_index.end()) throw CategoryError("unknown object " + name);
      return it->second;
    };
    std::vector<Arrow> arrows;
    for (const json& h : j.at("homs")) {
      Arrow a{h.at("name").get<std::string>(), obj(h.at("src").get<std::string>()), obj(h.at("dst").get<std::string>())};
      if (!arrow_index.emplace(a.name, arrows.size()).second) throw CategoryError("duplicate arrow " + a.name);
      arrows.push_back(std::move(a));
    }
    const auto arrow = [&](const std::string& name) {
      const auto it = arrow_index.find(name);
      if (it == arrow_index.end()) throw CategoryError("unknown arrow " + name);
      return it->second;
    };
    std::vector<std::size_t> ids(objects.size());
    const json& jids = j.at("ids");
    for (std::size_t x = 0; x < objects.size(); ++x) ids[x] = arrow(jids.at(objects[x]).get<std::string>());
    const std::size_t A = arrows.size();
    std::vector<std::optional<std::size_t>> table(A * A);
    const json& comp = j.contains("compose") ? j.at("compose") : j.at("compose-table");
    for (const json& row : comp) {
      const auto names = row.get<std::vector<std::string>>();
      if (names.size() != 3) throw CategoryError("compose rows are [g, f, g∘f]");
      auto& slot = table[arrow(names[0]) * A + arrow(names[1])];
      const std::size_t h = arrow(names[2]);
      if (slot && *slot != h) throw CategoryError("conflicting composite " + names[0] + " ∘ " + names[1]);
      slot = h;
    }
    return FinCategory(std::move(objects), std::move(arrows), std::move(ids), std::move(table));
  } catch (const json::exception& e) {
    throw CategoryError(std::string("malformed category: ") + e.what());
  }
}

std::string FinCategory::to_json() const {
  nlohmann::ordered_json j;
  j["objects"] = objects_;
  j["homs"] = nlohmann::ordered_json::array();
  for (const Arrow& a : arrows_) {
    j["homs"].push_back({{"name", a.name}, {"src", objects_[a.src]}, {"dst", objects_[a.dst]}});
  }
  j["compose"] = nlohmann::ordered_json::array();
  const std::size_t A = arrows_.size();
  for (std::size_t g = 0; g < A; ++g) {
    for (std::size_t f = 0; f < A; ++f) {
      if (const auto& h = compose_[g * A + f]) {
        j["compose"].push_back({arrows_[g].name, arrows_[f].name, arrows_[*h].name});
      }
    }
  }
  j["ids"] = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < objects_.size(); ++x) j["ids"][objects_[x]] = arrows_[ids_[x]].name;
  return j.dump(2);
}

FinCategory monoid_category(const Monoid& m) {
  std::vector<FinCategory::Arrow> arrows;
  for (const auto& e : m.elements) arrows.push_back({e, 0, 0});
  std::vector<std::optional<std::size_t>> table(m.table.begin(), m.table.end());
  return FinCategory({"*"}, std::move(arrows), {m.unit}, std::move(table));
}

FinCategory function_category(const std::vector<std::string>& objects, const std::vector<std::size_t>& sizes,
                              const std::vector<FunctionArrow>& generators) {
  if (objects.size() != sizes.size()) throw CategoryError("one size per object");
  std::vector<FunctionArrow> arrows;
  const auto find = [&](std::size_t src, std::size_t dst, const std::vector<std::size_t>& map) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].src == src && arrows[i].dst == dst && arrows[i].map == map) return i;
    }
    return std::nullopt;
  };
  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < objects.size(); ++x) {
    std::vector<std::size_t> id(sizes[x]);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    ids.push_back(arrows.size());
    arrows.push_back({"id_" + objects[x], x, x, std::move(id)});
  }
  for (const FunctionArrow& g : generators) {
    if (g.src >= sizes.size() || g.dst >= sizes.size() || g.map.size() != sizes[g.src] ||
        std::any_of(g.map.begin(), g.map.end(), [&](std::size_t v) { return v >= sizes[g.dst]; })) {
      throw CategoryError("generator " + g.name + " is not a function between the given sets");
    }
    if (!find(g.src, g.dst, g.map)) arrows.push_back(g);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t A = arrows.size();
    for (std::size_t f = 0; f < A; ++f) {
      for (std::size_t g = 0; g < A; ++g) {
        if (arrows[f].dst != arrows[g].src) continue;
        std::vector<std::size_t> map(arrows[f].map.size());
        for (std::size_t i = 0; i < map.size(); ++i) map[i] = arrows[g].map[arrows[f].map[i]];
        if (!find(arrows[f].src, arrows[g].dst, map)) {
          arrows.push_back({arrows[g].name + "∘" + arrows[f].name, arrows[f].src, arrows[g].dst, std::move(map)});
          grew = true;
        }
      }
    }
  }
  const std::size_t A = arrows.size();
  std::vector<std::optional<std::size_t>> table(A * A);
  for (std::size_t g = 0; g < A; ++g) {
    for (std::size_t f = 0; f < A; ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      std::vector<std::size_t> map(arrows[f].map.size());
      for (std::size_t i = 0; i < map.size(); ++i) map[i] = arrows[g].map[arrows[f].map[i]];
      table[g * A + f] = find(arrows[f].src, arrows[g].dst, map);
    }
  }
  std::vector<FinCategory::Arrow> plain;
  for (const auto& a : arrows) plain.push_back({a.name, a.src, a.dst});
  return FinCategory(objects, std::move(plain), std::move(ids), std::move(table));
}

FinCategory three_object_fixture() {
  return function_category({"X", "Y", "Z"}, {2, 1, 2},
                           {{"e", 0, 0, {0, 0}}, {"r", 0, 1, {0, 0}}, {"s", 1, 0, {0}}, {"w", 2, 2, {1, 0}},
                            {"t", 1, 2, {0}}});
}

std::optional<std::size_t> KaroubiEnvelope::object_of(std::size_t base, std::size_t idem) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].base == base && objects[i].idem == idem) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> KaroubiEnvelope::arrow_of(std::size_t src, std::size_t dst, std::size_t base) const {
  for (std::size_t g : category.hom(src, dst)) {
    if (base_arrow[g] == base) return g;
  }
  return std::nullopt;
}

KaroubiEnvelope set_karoubi(const FinCategory& c) {
  KaroubiEnvelope k;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (std::size_t f : c.hom(x, x)) {
      if (!c.idempotent(f)) continue;
      k.objects.push_back({x, f});
      names.push_back("(" + c.object_name(x) + "," + c.arrow(f).name + ")");
    }
  }
  const std::size_t N = k.objects.size();
  std::vector<FinCategory::Arrow> arrows;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::size_t> ids(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      const auto [x1, f1] = k.objects[i];
      const auto [x2, f2] = k.objects[j];
      for (std::size_t g : c.hom(x1, x2)) {
        if (c.compose(c.compose(f2, g), f1) != g) continue;
        index[{i, j, g}] = arrows.size();
        if (i == j && g == f1) ids[i] = arrows.size();
        k.base_arrow.push_back(g);
        arrows.push_back({c.arrow(g).name + ":" + names[i] + "->" + names[j], i, j});
      }
    }
  }
  const std::size_t A = arrows.size();
  std::vector<std::optional<std::size_t>> table(A * A);
  for (std::size_t g = 0; g < A; ++g) {
    for (std::size_t f = 0; f < A; ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      const auto it = index.find({arrows[f].src, arrows[g].dst, c.compose(k.base_arrow[g], k.base_arrow[f])});
      if (it != index.end()) table[g * A + f] = it->second;
    }
  }
  k.category = FinCategory(std::move(names), std::move(arrows), std::move(ids), std::move(table));
  return k;
}

FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor f;
  for (std::size_t x = 0; x < c.object_count(); ++x) f.objects.push_back(x);
  for (std::size_t a = 0; a < c.arrow_count(); ++a) f.arrows.push_back(a);
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor out;
  for (std::size_t x : f.objects) out.objects.push_back(g.objects.at(x));
  for (std::size_t a : f.arrows) out.arrows.push_back(g.arrows.at(a));
  return out;
}

void check_functor(LawTally& tally, const FinCategory& src, const FinCategory& dst, const FinFunctor& F) {
  for (std::size_t a = 0; a < src.arrow_count(); ++a) {
    const auto& arr = src.arrow(a);
    const auto& img = dst.arrow(F.arrows.at(a));
    tally.record(img.src == F.objects.at(arr.src) && img.dst == F.objects.at(arr.dst),
                 [&] { return "typing of " + arr.name; });
  }
  for (std::size_t x = 0; x < src.object_count(); ++x) {
    tally.record(F.arrows[src.id(x)] == dst.id(F.objects[x]), [&] { return "identity of " + src.object_name(x); });
  }
  for (std::size_t f = 0; f < src.arrow_count(); ++f) {
    for (std::size_t g = 0; g < src.arrow_count(); ++g) {
      if (src.arrow(f).dst != src.arrow(g).src) continue;
      const bool composable = dst.arrow(F.arrows[f]).dst == dst.arrow(F.arrows[g]).src;
      tally.record(composable && F.arrows[src.compose(g, f)] == dst.compose(F.arrows[g], F.arrows[f]),
                   [&] { return "composite " + src.arrow(g).name + " ∘ " + src.arrow(f).name; });
    }
  }
}

FinFunctor embed(const FinCategory& c, const KaroubiEnvelope& k) {
  FinFunctor F;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto o = k.object_of(x, c.id(x));
    if (!o) throw CategoryError("envelope lacks (X, id)");
    F.objects.push_back(*o);
  }
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto g = k.arrow_of(F.objects[c.arrow(a).src], F.objects[c.arrow(a).dst], a);
    if (!g) throw CategoryError("envelope lacks the image of " + c.arrow(a).name);
    F.arrows.push_back(*g);
  }
  return F;
}

LawReport check_embedding(const FinCategory& c, const KaroubiEnvelope& k) {
  LawReport report;
  report.suite = "embedding";
  const FinFunctor F = embed(c, k);
  check_functor(report.law("functor"), c, k.category, F);
  LawTally& ff = report.law("fully_faithful");
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    for (std::size_t y = 0; y < c.object_count(); ++y) {
      std::set<std::size_t> image;
      for (std::size_t a : c.hom(x, y)) image.insert(F.arrows[a]);
      const auto target = k.category.hom(F.objects[x], F.objects[y]);
      const bool bijective = image.size() == c.hom(x, y).size() &&
                             std::set<std::size_t>(target.begin(), target.end()) == image;
      ff.record(bijective, [&] { return "hom(" + c.object_name(x) + ", " + c.object_name(y) + ")"; });
    }
  }
  return report;
}

Splitting split_idempotent(const KaroubiEnvelope& k, std::size_t x, std::size_t f) {
  const FinCategory& K = k.category;
  if (K.arrow(f).src != x || K.arrow(f).dst != x || !K.idempotent(f)) {
    throw CategoryError(K.arrow(f).name + " is not an idempotent on " + K.object_name(x));
  }
  const std::size_t base = k.objects[x].base;
  const std::size_t fb = k.base_arrow[f];
  const auto y = k.object_of(base, fb);
  if (!y) throw CategoryError("envelope lacks the splitting object");
  const auto r = k.arrow_of(x, *y, fb);
  const auto s = k.arrow_of(*y, x, fb);
  if (!r || !s) throw CategoryError("envelope lacks the splitting arrows");
  return {*y, *r, *s};
}

LawReport check_splitting(const KaroubiEnvelope& k) {
  LawReport report;
  report.suite = "splitting";
  LawTally& t = report.law("split");
  const FinCategory& K = k.category;
  for (std::size_t x = 0; x < K.object_count(); ++x) {
    for (std::size_t f : K.hom(x, x)) {
      if (!K.idempotent(f)) continue;
      const Splitting sp = split_idempotent(k, x, f);
      t.record(K.compose(sp.retraction, sp.section) == K.id(sp.object) && K.compose(sp.section, sp.retraction) == f,
               [&] { return "splitting " + K.arrow(f).name; });
    }
  }
  return report;
}

namespace {

// mu : set_karoubi(set_karoubi(C)) -> set_karoubi(C), ((X, a), b) ↦ (X, b).
FinFunctor multiplication(const KaroubiEnvelope& k, const KaroubiEnvelope& kk) {
  FinFunctor F;
  for (const KaroubiObject& o : kk.objects) {
    const auto img = k.object_of(k.objects[o.base].base, k.base_arrow[o.idem]);
    if (!img) throw CategoryError("multiplication has no image object");
    F.objects.push_back(*img);
  }
  for (std::size_t g = 0; g < kk.category.arrow_count(); ++g) {
    const auto& a = kk.category.arrow(g);
    const auto img = k.arrow_of(F.objects[a.src], F.objects[a.dst], k.base_arrow[kk.base_arrow[g]]);
    if (!img) throw CategoryError("multiplication has no image arrow");
    F.arrows.push_back(*img);
  }
  return F;
}

// set_karoubi(F) : set_karoubi(C) -> set_karoubi(D), (X, f) ↦ (F X, F f).
FinFunctor karoubi_map(const KaroubiEnvelope& kc, const KaroubiEnvelope& kd, const FinFunctor& F) {
  FinFunctor G;
  for (const KaroubiObject& o : kc.objects) {
    const auto img = kd.object_of(F.objects[o.base], F.arrows[o.idem]);
    if (!img) throw CategoryError("set_karoubi(F) has no image object");
    G.objects.push_back(*img);
  }
  for (std::size_t g = 0; g < kc.category.arrow_count(); ++g) {
    const auto& a = kc.category.arrow(g);
    const auto img = kd.arrow_of(G.objects[a.src], G.objects[a.dst], F.arrows[kc.base_arrow[g]]);
    if (!img) throw CategoryError("set_karoubi(F) has no image arrow");
    G.arrows.push_back(*img);
  }
  return G;
}

void record_equal(LawTally& t, const FinFunctor& a, const FinFunctor& b, const std::string& what) {
  const bool same_shape = a.objects.size() == b.objects.size() && a.arrows.size() == b.arrows.size();
  if (!same_shape) {
    t.record(false, [&] { return what + ": functors have different domains"; });
    return;
  }
  for (std::size_t x = 0; x < a.objects.size(); ++x) {
    t.record(a.objects[x] == b.objects[x], [&] { return what + " on object " + std::to_string(x); });
  }
  for (std::size_t f = 0; f < a.arrows.size(); ++f) {
    t.record(a.arrows[f] == b.arrows[f], [&] { return what + " on arrow " + std::to_string(f); });
  }
}

}  // namespace

LawReport karoubi_monad_check(const FinCategory& c) {
  LawReport report;
  report.suite = "monad";
  const KaroubiEnvelope k = set_karoubi(c);
  const KaroubiEnvelope kk = set_karoubi(k.category);
  const KaroubiEnvelope kkk = set_karoubi(kk.category);

  const FinFunctor eta_c = embed(c, k);
  const FinFunctor eta_k = embed(k.category, kk);
  const FinFunctor mu_c = multiplication(k, kk);
  const FinFunctor mu_k = multiplication(kk, kkk);

  check_functor(report.law("eta_functor"), c, k.category, eta_c);
  check_functor(report.law("mu_functor"), kk.category, k.category, mu_c);

  const FinFunctor id_k = identity_functor(k.category);
  record_equal(report.law("left_unit"), compose_functors(mu_c, eta_k), id_k, "mu ∘ eta K");
  record_equal(report.law("right_unit"), compose_functors(mu_c, karoubi_map(k, kk, eta_c)), id_k, "mu ∘ K eta");
  record_equal(report.law("assoc"), compose_functors(mu_c, karoubi_map(kkk, kk, mu_c)),
               compose_functors(mu_c, mu_k), "mu ∘ K mu vs mu ∘ mu K");
  return report;
}

std::size_t endo_iso_count(const FinCategory& c, std::size_t x) {
  const auto endos = c.hom(x, x);
  std::size_t count = 0;
  for (std::size_t f : endos) {
    const bool invertible = std::any_of(endos.begin(), endos.end(), [&](std::size_t g) {
      return c.compose(g, f) == c.id(x) && c.compose(f, g) == c.id(x);
    });
    if (invertible) ++count;
  }
  return count;
}

LawReport karoubi_check(const FinCategory& c, const std::string& name) {
  LawReport report;
  report.suite = "karoubi(" + name + ")";
  report.append(c.check_laws(), "base.");
  const KaroubiEnvelope k = set_karoubi(c);
  report.append(k.category.check_laws(), "envelope.");
  std::size_t idempotents = 0;
  for (std::size_t f = 0; f < c.arrow_count(); ++f) idempotents += c.idempotent(f) ? 1 : 0;
  report.law("envelope.object_count").record(k.objects.size() == idempotents, [&] {
    return std::to_string(k.objects.size()) + " objects for " + std::to_string(idempotents) + " idempotents";
  });
  report.append(check_splitting(k));
  report.append(check_embedding(c, k), "embed.");
  report.append(karoubi_monad_check(c), "monad.");
  return report;
}

LawReport matrix_example_check() {
  LawReport report;
  report.suite = "matrix monoid";
  const Monoid m = matrix_monoid();
  report.append(m.check_laws(), "monoid.");
  report.law("monoid.commutative").record(m.commutative(), [] { return std::string("ab != ba for some pair"); });
  const std::size_t a = *m.find("a"), b = *m.find("b"), c = *m.find("c");
  report.law("c_c_is_b").record(m.op(c, c) == b, [&] { return "c c = " + m.elements[m.op(c, c)]; });
  report.law("idempotents").record(m.idempotents() == std::vector<std::size_t>{a, b}, [] {
    return std::string("idempotents are not {a, b}");
  });

  const FinCategory base = monoid_category(m);
  const KaroubiEnvelope k = set_karoubi(base);
  const std::size_t xb = *k.object_of(0, b);
  const std::size_t xa = *k.object_of(0, a);
  const auto endo = k.category.hom(xb, xb);
  std::vector<std::size_t> bases;
  for (std::size_t g : endo) bases.push_back(k.base_arrow[g]);
  std::sort(bases.begin(), bases.end());
  report.law("hom_b_b").record(bases == std::vector<std::size_t>{b, c}, [&] {
    return std::to_string(endo.size()) + " endomorphisms of (*,b)";
  });
  report.law("iso_count_b").record(endo_iso_count(k.category, xb) == 2, [&] {
    return std::to_string(endo_iso_count(k.category, xb)) + " isomorphisms of (*,b)";
  });
  report.law("iso_count_a").record(endo_iso_count(k.category, xa) == 1, [&] {
    return std::to_string(endo_iso_count(k.category, xa)) + " isomorphisms of (*,a)";
  });
  report.law("identity_b").record(k.base_arrow[k.category.id(xb)] == b, [] { return std::string("id of (*,b)"); });
  return report;
}

}  // namespace scottrep
