#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scottrep/ccc.hpp"
#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/term.hpp"

namespace scottrep {

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite monoid given by its multiplication table.
struct Monoid {
  std::vector<std::string> elements;
  std::vector<std::size_t> table;  // op(a, b) = table[a * size + b]
  std::size_t unit = 0;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table.at(a * size() + b); }
  std::optional<std::size_t> find(const std::string& name) const;
  bool commutative() const;
  std::vector<std::size_t> idempotents() const;
  // Unit and associativity over every element.
  LawReport check_laws() const;
};

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

Matrix2 multiply(const Matrix2& x, const Matrix2& y);

// The monoid generated by multiplying the given matrices; every product
// must be one of them.
Monoid matrix_monoid(const std::vector<std::string>& names, const std::vector<Matrix2>& matrices);

// a = 1, b = diag(1, 0), c = diag(-1, 0).
Monoid matrix_monoid();

// A finite category with a dense composition table.
class FinCategory {
 public:
  struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t dst = 0;
  };

  FinCategory() = default;
  // compose[g * arrows + f] holds g ∘ f for composable pairs.
  FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<std::size_t> ids,
              std::vector<std::optional<std::size_t>> compose);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_.at(x); }
  const Arrow& arrow(std::size_t f) const { return arrows_.at(f); }
  std::size_t id(std::size_t x) const { return ids_.at(x); }
  std::size_t compose(std::size_t g, std::size_t f) const;
  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  bool idempotent(std::size_t f) const;

  // Typing of identities and composites, unit laws and associativity over
  // every composable pair and triple.
  LawReport check_laws() const;

  // {"objects": [..], "homs": [{"name", "src", "dst"}], "compose": [[g, f, g∘f], ..],
  //  "ids": {object: arrow}}.  "compose-table" is accepted for "compose".
  static FinCategory from_json(const std::string& text);
  std::string to_json() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> ids_;
  std::vector<std::optional<std::size_t>> compose_;
};

// The one-object category of a monoid.
FinCategory monoid_category(const Monoid& m);

// Finite sets of the given sizes and the closure of the generating functions
// under composition; composite names are built from the generators'.
struct FunctionArrow {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
  std::vector<std::size_t> map;
};
FinCategory function_category(const std::vector<std::string>& objects, const std::vector<std::size_t>& sizes,
                              const std::vector<FunctionArrow>& generators);

// X = {0, 1}, Y = {0}, Z = {0, 1} with e = const 0 on X, r : X -> Y,
// s : Y -> X, t : Y -> Z and the swap w on Z.
FinCategory three_object_fixture();

// An object (X, f) with f ∘ f = f.
struct KaroubiObject {
  std::size_t base = 0;
  std::size_t idem = 0;
};

// set_karoubi(C) together with the bookkeeping back to C.  Each arrow of the
// envelope is a base arrow g : (X1, f1) -> (X2, f2) with f2 ∘ g ∘ f1 = g.
struct KaroubiEnvelope {
  FinCategory category;
  std::vector<KaroubiObject> objects;
  std::vector<std::size_t> base_arrow;

  std::optional<std::size_t> object_of(std::size_t base, std::size_t idem) const;
  std::optional<std::size_t> arrow_of(std::size_t src, std::size_t dst, std::size_t base) const;
};

KaroubiEnvelope set_karoubi(const FinCategory& c);

// A functor between finite categories as object and arrow maps.
struct FinFunctor {
  std::vector<std::size_t> objects;
  std::vector<std::size_t> arrows;

  friend bool operator==(const FinFunctor&, const FinFunctor&) = default;
};

FinFunctor identity_functor(const FinCategory& c);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
// Typing, identities and composition, exhaustively.
void check_functor(LawTally& tally, const FinCategory& src, const FinCategory& dst, const FinFunctor& f);

// iota : C -> set_karoubi(C), X ↦ (X, id_X).
FinFunctor embed(const FinCategory& c, const KaroubiEnvelope& k);

// iota is a functor and each hom_C(X, Y) -> hom_K(iota X, iota Y) is a bijection.
LawReport check_embedding(const FinCategory& c, const KaroubiEnvelope& k);

struct Splitting {
  std::size_t object;     // (Y, f) in the envelope
  std::size_t retraction;  // r = f : X -> (Y, f)
  std::size_t section;     // s = f : (Y, f) -> X
};

// Splits an idempotent f on the envelope object x via (f, f).
Splitting split_idempotent(const KaroubiEnvelope& k, std::size_t x, std::size_t f);

// r ∘ s = id and s ∘ r = f for every idempotent of the envelope.
LawReport check_splitting(const KaroubiEnvelope& k);

// The completion monad at C: eta = embed and mu((X, a), b) = (X, b).  Checks
// both functors, the unit laws and associativity, exhaustively.
LawReport karoubi_monad_check(const FinCategory& c);

// Invertible endomorphisms of x, by search for two-sided inverses.
std::size_t endo_iso_count(const FinCategory& c, std::size_t x);

// Category laws of the base and of its envelope, splitting, embedding and
// the monad laws.
LawReport karoubi_check(const FinCategory& c, const std::string& name);

// The matrix-monoid envelope: hom((*, b), (*, b)) = {b, c}, both invertible,
// with c ∘ c = b.
LawReport matrix_example_check();

// L0 = ({f closed | lam(rho(f)) = f}, ∘, lam(x1)) and L1 = (Λ_1, •, x1) with
// rho : L0 -> L1 and lam : L1 -> L0.  The carriers are infinite, so only
// membership, the operations and the maps are provided.
struct LambdaMonoids {
  std::size_t fuel = kDefaultFuel;

  EqResult in_L0(const Term& f) const;
  Term op0(const Term& f, const Term& g) const;
  Term unit0() const;
  Term op1(const Term& s, const Term& t) const;
  Term unit1() const;
  Term rho(const Term& f) const;
  Term lam(const Term& t) const;
};

LambdaMonoids monoid_L0_L1(std::size_t fuel = kDefaultFuel);

// Monoid laws of L0 and L1 and that rho, lam are inverse homomorphisms, on
// samples.
LawReport monoid_iso_check(const SampleOptions& options = {});

// R against set_karoubi(M(L0)): sampled objects are L0 members, and R
// identities and composites satisfy the envelope's conditions.
LawReport r_as_karoubi_check(const SampleOptions& options = {});

}  // namespace scottrep
