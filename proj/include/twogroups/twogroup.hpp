#pragma once

#include "twogroups/monoidal.hpp"

namespace twogroups {

// Chosen adjoint-equivalence candidate: per object a dual, a unit
// i_x : 1 -> x(x)dual(x) and a counit e_x : dual(x)(x)x -> 1.  The zig-zag
// identities are a property checked by check_zigzags, not a constructor
// guarantee.
struct CoherentData {
  std::vector<ObjId> dual;
  std::vector<MorId> unit_i;
  std::vector<MorId> counit_e;
};

// Weak-invertibility certificate for one object: a weak inverse together
// with witnessing isomorphisms 1 -> x(x)dual and dual(x)x -> 1.
struct ObjectWitness {
  ObjId dual;
  MorId unit_iso;    // 1 -> x (x) dual
  MorId counit_iso;  // dual (x) x -> 1
};

struct WeakTwoGroup {
  MonoidalStructure m;
  std::vector<ObjectWitness> object_witness;   // per object
  std::vector<MorId> morphism_inverse;         // per morphism
};

struct CoherentTwoGroup {
  MonoidalStructure m;
  CoherentData data;
};

// Crossed module: groups G, H, homomorphism t : H -> G and a left action
// of G on H by automorphisms, subject to
//   t(alpha(g, h)) = g t(h) g^-1        (equivariance)
//   alpha(t(h), h') = h h' h^-1         (Peiffer identity)
struct CrossedModule {
  MulTable g;
  MulTable h;
  std::vector<std::uint32_t> t;       // H -> G
  std::vector<std::uint32_t> action;  // [gi * |H| + hi] -> H
};

ValidationReport validate_crossed_module(const CrossedModule& x);

// ---- weak side -----------------------------------------------------------

struct FoundInverse {
  ObjId y;
  MorId gamma;  // x (x) y -> 1
  MorId xi;     // y (x) x -> 1
};

// Exhaustive search in ascending object order, then ascending morphism id
// for the witnesses; first hit wins, for reproducible reports.
std::optional<FoundInverse> find_weak_inverse(const MonoidalStructure& m, ObjId x);

struct WeakCertification {
  std::optional<WeakTwoGroup> group;
  ValidationReport report;  // failing objects/morphisms when absent
};

// Requires validate_monoidal(m) already passing.
WeakCertification check_weak_2group(const MonoidalStructure& m);

// ---- coherent side --------------------------------------------------------

// Zig-zag 1:  l_x ; r_x^-1  =  (i_x (x) 1) ; a_{x,dual,x} ; (1 (x) e_x)
// Zig-zag 2:  r_d ; l_d^-1  =  (1 (x) i_x) ; a^-1_{d,x,d} ; (e_x (x) 1)
// checked for every object; typing problems are structural.
ValidationReport check_zigzags(const MonoidalStructure& m, const CoherentData& data);

// Aggregates validate_monoidal, invertibility of all morphisms and of the
// chosen units/counits, and both zig-zags.
ValidationReport validate_coherent(const CoherentTwoGroup& g);

// ---- derived functors ------------------------------------------------------

// f |-> f^-1 as a functor from the opposite category; every morphism must
// be invertible.
FinFunctor inverse_functor(const CoherentTwoGroup& g);

// The contravariant * : sends x to dual(x); on f : x -> y the composite
//   dual(y) -> dual(y)(x)1 -> dual(y)(x)(x(x)dual(x)) -> dual(y)(x)(y(x)dual(x))
//           -> (dual(y)(x)y)(x)dual(x) -> 1(x)dual(x) -> dual(x)
// with f inserted on the middle strand.
FinFunctor star_functor(const CoherentTwoGroup& g);

// Covariant inv = * after ^-1; on f : x -> y gives dual(x) -> dual(y).
FinFunctor inv_functor(const CoherentTwoGroup& g);

// inv(fg) = inv(f) inv(g) and inv(identity) = identity, exhaustively.
ValidationReport check_inv_functorial(const CoherentTwoGroup& g);

// ---- instance generators ----------------------------------------------------

// Discrete strict 2-group on a finite group; rejects non-group tables.
CoherentTwoGroup from_group(const MulTable& t);

// One-object instance on an abelian group: morphisms are the elements, all
// structure maps are the zero element; data uses the supplied i and e.
std::pair<MonoidalStructure, CoherentData> deloop_abelian(const MulTable& t,
                                                          std::uint32_t i_choice,
                                                          std::uint32_t e_choice);

// Strict 2-group of a crossed module: objects G, a morphism g -> t(h)g for
// each (h, g), composition (h', .) after (h, g) = (h'h, g), tensor
// (h1,g1)(x)(h2,g2) = (h1 alpha(g1,h2), g1 g2).
CoherentTwoGroup from_crossed_module(const CrossedModule& x);

}  // namespace twogroups
