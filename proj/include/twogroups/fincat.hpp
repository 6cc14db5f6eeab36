#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twogroups {

// Object and morphism handles are indices into one category's tables.
struct ObjId {
  std::uint32_t v = 0;
  friend bool operator==(ObjId a, ObjId b) { return a.v == b.v; }
  friend bool operator!=(ObjId a, ObjId b) { return a.v != b.v; }
  friend bool operator<(ObjId a, ObjId b) { return a.v < b.v; }
};

struct MorId {
  std::uint32_t v = 0;
  friend bool operator==(MorId a, MorId b) { return a.v == b.v; }
  friend bool operator!=(MorId a, MorId b) { return a.v != b.v; }
  friend bool operator<(MorId a, MorId b) { return a.v < b.v; }
};

// Sentinel for non-composable pairs in the dense composition table.
inline constexpr MorId kNoMor{0xffffffffu};

struct MorArrow {
  MorId id;
  ObjId dom;
  ObjId cod;
};

// Severity of a reported violation.  Structural problems (dangling ids,
// wrong table shapes, typing mismatches) are distinct from genuine law
// failures; the CLI maps them to different exit codes.
enum class Severity { Structural, Law };

struct Violation {
  Severity severity = Severity::Law;
  std::string law;                      // stable tag, e.g. "ASSOC", "ZIGZAG1"
  std::vector<std::int64_t> witness;    // indices identifying the instance
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checked = 0;  // law instances enumerated

  bool ok() const { return violations.empty(); }
  bool has_structural() const;
  bool has(const std::string& law) const;
  void add(Severity s, std::string law, std::vector<std::int64_t> witness,
           std::string detail);
  // Appends another report, prefixing its law tags (prefix may be empty).
  void merge(const ValidationReport& other, const std::string& prefix = "");
  std::string to_string() const;  // one line per violation, deterministic
};

// A finite category as fully tabulated data.  Objects are 0..objects-1;
// morphisms are stored flat, indexed by id.  compose_table[f][g] is the
// diagrammatic composite (f first, then g), kNoMor when cod(f) != dom(g).
// Instances are immutable after construction; all checks are pure.
struct FinCategory {
  std::size_t objects = 0;
  std::vector<MorArrow> morphisms;
  std::vector<MorId> identity;                      // per object
  std::vector<std::vector<MorId>> compose_table;

  // optional metadata, reporting only
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;

  std::size_t morphism_count() const { return morphisms.size(); }
  const MorArrow& arrow(MorId f) const { return morphisms[f.v]; }
  MorId identity_of(ObjId x) const { return identity[x.v]; }
  MorId compose(MorId f, MorId g) const { return compose_table[f.v][g.v]; }
  bool composable(MorId f, MorId g) const {
    return arrow(f).cod == arrow(g).dom;
  }

  friend bool operator==(const FinCategory& a, const FinCategory& b);
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Composes a chain of morphisms in diagrammatic order, checking that each
// consecutive pair lines up; throws std::logic_error naming the bad leg.
MorId compose_chain(const FinCategory& c, const std::vector<MorId>& legs);

// A functor between tabulated categories: per-object and per-morphism maps.
struct FinFunctor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> ob_map;
  std::vector<MorId> mor_map;

  ObjId on_ob(ObjId x) const { return ob_map[x.v]; }
  MorId on_mor(MorId f) const { return mor_map[f.v]; }
};

FinFunctor identity_functor(CatPtr c);
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);

// Natural transformation between parallel functors; component[x] lives in
// the target category with dom = F(x), cod = G(x).
struct NatTransform {
  FinFunctor source;
  FinFunctor target;
  std::vector<MorId> component;
};

// Vertical composite of natural transformations (s then t).
NatTransform compose_nat(const NatTransform& s, const NatTransform& t);

// Exhaustive validation.  Structural problems short-circuit the law checks
// that would read out-of-range tables.
ValidationReport validate_category(const FinCategory& c);
ValidationReport validate_functor(const FinFunctor& f);
ValidationReport validate_nat(const NatTransform& t);

// Product category C x D: objects and morphisms are pairs ordered
// lexicographically in (C-index, D-index); composition is componentwise.
FinCategory product_category(const FinCategory& c, const FinCategory& d);

inline std::uint32_t pair_index(std::uint32_t a, std::uint32_t b,
                                std::size_t d_count) {
  return static_cast<std::uint32_t>(a * d_count + b);
}

// Opposite category: dom/cod swapped, compose_op(f, g) = compose(g, f).
FinCategory opposite_category(const FinCategory& c);

// Discrete category on n objects (identities only).
FinCategory discrete_category(std::size_t n);
FinCategory terminal_category();

// Two-sided inverse of f, found by exhaustive search; unique when it exists.
std::optional<MorId> is_isomorphism(const FinCategory& c, MorId f);

// Inverse of every morphism at once (nullopt where none).
std::vector<std::optional<MorId>> morphism_inverses(const FinCategory& c);

}  // namespace twogroups
