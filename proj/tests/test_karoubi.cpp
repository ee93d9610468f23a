#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <set>
#include <tuple>

#include "scottrep/karoubi.hpp"

using namespace scottrep;

namespace {

// Functions between finite sets, closed under composition by brute force.
struct Fn {
  std::size_t src, dst;
  std::vector<std::size_t> map;
  auto key() const { return std::tie(src, dst, map); }
  bool operator<(const Fn& o) const { return key() < o.key(); }
  bool operator==(const Fn& o) const { return key() == o.key(); }
};

Fn after(const Fn& g, const Fn& f) {
  Fn h{f.src, g.dst, {}};
  for (std::size_t v : f.map) h.map.push_back(g.map[v]);
  return h;
}

std::set<Fn> closure(const std::vector<std::size_t>& sizes, const std::vector<Fn>& gens) {
  std::set<Fn> all;
  for (std::size_t x = 0; x < sizes.size(); ++x) {
    Fn id{x, x, {}};
    for (std::size_t v = 0; v < sizes[x]; ++v) id.map.push_back(v);
    all.insert(id);
  }
  all.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Fn> snapshot(all.begin(), all.end());
    for (const Fn& f : snapshot) {
      for (const Fn& g : snapshot) {
        if (f.dst == g.src && all.insert(after(g, f)).second) grew = true;
      }
    }
  }
  return all;
}

// Objects and arrows of the idempotent completion, counted from the definition.
std::pair<std::size_t, std::size_t> envelope_size(const std::set<Fn>& arrows) {
  std::vector<Fn> idem;
  for (const Fn& f : arrows) {
    if (f.src == f.dst && after(f, f) == f) idem.push_back(f);
  }
  std::size_t homs = 0;
  for (const Fn& a : idem) {
    for (const Fn& b : idem) {
      for (const Fn& g : arrows) {
        if (g.src == a.src && g.dst == b.src && after(b, after(g, a)) == g) ++homs;
      }
    }
  }
  return {idem.size(), homs};
}

Matrix2 mul(const Matrix2& x, const Matrix2& y) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Karoubi, MatrixMonoidTableMatchesMultiplication) {
  const std::vector<Matrix2> ms{Matrix2{{{1, 0}, {0, 1}}}, Matrix2{{{1, 0}, {0, 0}}}, Matrix2{{{-1, 0}, {0, 0}}}};
  const Monoid m = matrix_monoid();
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.elements[m.unit], "a");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix2 p = mul(ms[i], ms[j]);
      EXPECT_EQ(ms[m.op(i, j)], p) << m.elements[i] << m.elements[j];
    }
  }
  EXPECT_TRUE(m.commutative());
  EXPECT_EQ(m.check_laws().verdict(), Verdict::Pass);
  EXPECT_THROW(matrix_monoid({"a", "b"}, {Matrix2{{{1, 0}, {0, 1}}}, Matrix2{{{2, 0}, {0, 0}}}}), CategoryError);
}

TEST(Karoubi, MatrixExample) {
  const FinCategory base = monoid_category(matrix_monoid());
  const KaroubiEnvelope k = set_karoubi(base);
  const std::size_t b = *base.find_arrow("b"), c = *base.find_arrow("c");
  const auto star_b = k.object_of(0, b);
  ASSERT_TRUE(star_b.has_value());
  const auto hom = k.category.hom(*star_b, *star_b);
  ASSERT_EQ(hom.size(), 2u);
  std::set<std::size_t> bases;
  for (std::size_t g : hom) bases.insert(k.base_arrow[g]);
  EXPECT_EQ(bases, (std::set<std::size_t>{b, c}));
  EXPECT_EQ(base.compose(c, c), b);
  EXPECT_EQ(endo_iso_count(k.category, *star_b), 2u);
  EXPECT_EQ(k.category.id(*star_b), *k.arrow_of(*star_b, *star_b, b));
  EXPECT_EQ(matrix_example_check().verdict(), Verdict::Pass);
}

TEST(Karoubi, FixtureMatchesEnumeration) {
  const std::vector<Fn> gens{{0, 0, {0, 0}}, {0, 1, {0, 0}}, {1, 0, {0}}, {2, 2, {1, 0}}, {1, 2, {0}}};
  const auto arrows = closure({2, 1, 2}, gens);
  const FinCategory c = three_object_fixture();
  EXPECT_EQ(c.arrow_count(), arrows.size());
  const auto [objects, homs] = envelope_size(arrows);
  const KaroubiEnvelope k = set_karoubi(c);
  EXPECT_EQ(k.category.object_count(), objects);
  EXPECT_EQ(k.category.arrow_count(), homs);
}

TEST(Karoubi, LawsOnBothBases) {
  EXPECT_EQ(karoubi_check(monoid_category(matrix_monoid()), "matrix").verdict(), Verdict::Pass);
  const LawReport r = karoubi_check(three_object_fixture(), "fixture");
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
  for (const char* law : {"split", "embed.functor", "embed.fully_faithful", "monad.left_unit", "monad.right_unit",
                          "monad.assoc"}) {
    ASSERT_NE(r.find(law), nullptr) << law;
    EXPECT_GT(r.find(law)->pass, 0u) << law;
  }
}

TEST(Karoubi, SplittingByHand) {
  const FinCategory c = three_object_fixture();
  const KaroubiEnvelope k = set_karoubi(c);
  const std::size_t x = *c.find_object("X");
  const std::size_t e = *c.find_arrow("e");
  const std::size_t xid = *k.object_of(x, c.id(x));
  const Splitting s = split_idempotent(k, xid, *k.arrow_of(xid, xid, e));
  EXPECT_EQ(k.category.compose(s.retraction, s.section), k.category.id(s.object));
  EXPECT_EQ(k.base_arrow[k.category.compose(s.section, s.retraction)], e);
}

TEST(Karoubi, EnvelopeIsIdempotentComplete) {
  // An idempotent g on (X, f) in K(C) is already an object (X, g) of K(C).
  const FinCategory c = three_object_fixture();
  const KaroubiEnvelope k = set_karoubi(c);
  for (std::size_t g = 0; g < k.category.arrow_count(); ++g) {
    if (!k.category.idempotent(g)) continue;
    const std::size_t base = k.objects[k.category.arrow(g).src].base;
    EXPECT_TRUE(k.object_of(base, k.base_arrow[g]).has_value()) << k.category.arrow(g).name;
  }
  EXPECT_EQ(check_splitting(set_karoubi(k.category)).verdict(), Verdict::Pass);
}

TEST(Karoubi, JsonRoundTrip) {
  const FinCategory c = three_object_fixture();
  const FinCategory back = FinCategory::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.arrow_count(), c.arrow_count());
  std::string alt = c.to_json();
  const auto pos = alt.find("\"compose\"");
  ASSERT_NE(pos, std::string::npos);
  alt.replace(pos, 9, "\"compose-table\"");
  EXPECT_EQ(FinCategory::from_json(alt).to_json(), c.to_json());
}

TEST(Karoubi, MalformedCategoriesAreRejected) {
  EXPECT_THROW(FinCategory::from_json("{"), CategoryError);
  EXPECT_THROW(FinCategory::from_json(R"({"objects":["*"],"homs":[{"name":"e","src":"*","dst":"*"}],
      "ids":{"*":"e"},"compose":[]})"),
               CategoryError);
  EXPECT_THROW(FinCategory::from_json(R"({"objects":["*"],"homs":[{"name":"e","src":"*","dst":"Q"}],
      "ids":{"*":"e"},"compose":[["e","e","e"]]})"),
               CategoryError);
}

TEST(Karoubi, NonAssociativeFixtureFails) {
  const FinCategory c = FinCategory::from_json(read_file(std::string(SCOTTREP_TEST_DATA) + "/nonassociative.json"));
  const LawReport r = c.check_laws();
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  ASSERT_TRUE(r.find("assoc")->counterexample.has_value());
  EXPECT_NE(r.find("assoc")->counterexample->find("but"), std::string::npos);
}

TEST(Karoubi, FunctorComposition) {
  const FinCategory c = three_object_fixture();
  const FinFunctor id = identity_functor(c);
  EXPECT_EQ(compose_functors(id, id), id);
  LawTally t;
  check_functor(t, c, c, id);
  EXPECT_EQ(t.fail, 0u);
  FinFunctor broken = id;
  std::swap(broken.arrows[0], broken.arrows[1]);
  LawTally bad;
  check_functor(bad, c, c, broken);
  EXPECT_GT(bad.fail, 0u);
}

TEST(Karoubi, LambdaMonoidsIsomorphic) {
  SampleOptions opt;
  opt.samples = 40;
  EXPECT_EQ(monoid_iso_check(opt).verdict(), Verdict::Pass);
}
