#pragma once

#include "twogroups/fincat.hpp"
#include "twogroups/grouptable.hpp"

namespace twogroups {

// Weak monoidal structure over a FinCategory.  The tensor is a tabulated
// functor from the product category base x base; assoc/lunit/runit are
// dense component tables keyed by object tuples.  Immutable once built.
//
//   assoc[x][y][z] : (x(x)y)(x)z -> x(x)(y(x)z)
//   lunit[x]       : 1(x)x -> x
//   runit[x]       : x(x)1 -> x
struct MonoidalStructure {
  CatPtr base;
  CatPtr square;  // product_category(*base, *base), owned here
  FinFunctor tensor;
  ObjId unit;
  std::vector<MorId> assoc;  // flattened, (x * n + y) * n + z
  std::vector<MorId> lunit;
  std::vector<MorId> runit;

  std::size_t object_count() const { return base->objects; }

  ObjId tensor_ob(ObjId x, ObjId y) const {
    return tensor.ob_map[pair_index(x.v, y.v, base->objects)];
  }
  MorId tensor_mor(MorId f, MorId g) const {
    return tensor.mor_map[pair_index(f.v, g.v, base->morphism_count())];
  }
  MorId assoc_at(ObjId x, ObjId y, ObjId z) const {
    const std::size_t n = base->objects;
    return assoc[(x.v * n + y.v) * n + z.v];
  }
  MorId lunit_at(ObjId x) const { return lunit[x.v]; }
  MorId runit_at(ObjId x) const { return runit[x.v]; }

  friend bool operator==(const MonoidalStructure& a, const MonoidalStructure& b);
};

// Assembles the structure, constructing the product category and tensor
// functor from the given dense tables (tensor_ob[x*n+y], tensor_mor[f*m+g]).
MonoidalStructure make_monoidal(CatPtr base, std::vector<ObjId> tensor_ob,
                                std::vector<MorId> tensor_mor, ObjId unit,
                                std::vector<MorId> assoc, std::vector<MorId> lunit,
                                std::vector<MorId> runit);

// Strict monoidal structure on the discrete category over a monoid table.
MonoidalStructure discrete_monoidal(const MulTable& t);

// Pentagon over all object 4-tuples; report.checked == |Ob|^4.
ValidationReport check_pentagon(const MonoidalStructure& m);

// Triangle over all object pairs; report.checked == |Ob|^2.
ValidationReport check_triangle(const MonoidalStructure& m);

// Aggregate: base category laws, tensor functoriality (which is exactly the
// interchange law), naturality of a/l/r, invertibility of all structure
// components, pentagon and triangle.
ValidationReport validate_monoidal(const MonoidalStructure& m);

// True iff every structure component is an identity morphism.
bool is_strict(const MonoidalStructure& m);

}  // namespace twogroups
