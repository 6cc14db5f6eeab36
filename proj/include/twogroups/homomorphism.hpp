#pragma once

#include "twogroups/twogroup.hpp"

namespace twogroups {

// Weak monoidal functor: an underlying functor between the base categories
// plus the coherence cells
//   f2[x*n+y] : F(x)(x)F(y) -> F(x(x)y)     (components in the target)
//   f0        : 1' -> F(1)
struct MonoidalFunctor {
  FinFunctor f;
  std::vector<MorId> f2;
  MorId f0;

  MorId f2_at(ObjId x, ObjId y, std::size_t n_src) const {
    return f2[x.v * n_src + y.v];
  }
};

MonoidalFunctor identity_monoidal_functor(const MonoidalStructure& m);

// Underlying functor validity, F2 naturality in both arguments, F2/F0
// invertibility, the associativity coherence square and both unit squares.
ValidationReport validate_monoidal_functor(const MonoidalStructure& src,
                                           const MonoidalStructure& tgt,
                                           const MonoidalFunctor& fm);

// Composite functor: underlying maps compose; at (x, y) the coherence cell
// is G2 at (Fx, Fy) followed by G(F2 at (x, y)); the unit cell is G0
// followed by G(F0).
MonoidalFunctor compose_monoidal_functors(const MonoidalStructure& a,
                                          const MonoidalStructure& b,
                                          const MonoidalStructure& c,
                                          const MonoidalFunctor& fm,
                                          const MonoidalFunctor& gm);

// Weak monoidal natural transformation between parallel monoidal functors.
struct MonoidalNatTransform {
  NatTransform t;
};

// The two compatibility squares: (th_x (x) th_y) ; G2 = F2 ; th_{x(x)y}
// and F0 ; th_1 = G0, plus naturality of the underlying transformation.
ValidationReport validate_monoidal_nat(const MonoidalStructure& src,
                                       const MonoidalStructure& tgt,
                                       const MonoidalFunctor& fm,
                                       const MonoidalFunctor& gm,
                                       const MonoidalNatTransform& th);

// Images of weak-inverse witnesses: given gamma : x(x)y -> 1 and
// xi : y(x)x -> 1, returns (F2;F(xi);F0^-1, F2;F(gamma);F0^-1), which
// witness F(y) as a weak inverse of F(x).
std::pair<MorId, MorId> preserved_weak_inverse(const MonoidalStructure& src,
                                               const MonoidalStructure& tgt,
                                               const MonoidalFunctor& fm,
                                               ObjId x, ObjId y, MorId gamma,
                                               MorId xi);

// The three constructions of the comparison isomorphism
//   F_-1 : dual'(F(x)) -> F(dual(x))
// from the coherent data of source and target.  All structure maps are
// taken in the target; i_x/e_x of the source appear through F.
MorId f_minus_one_f1(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
                     const MonoidalFunctor& fm, ObjId x);
MorId f_minus_one_f1prime(const CoherentTwoGroup& src,
                          const CoherentTwoGroup& tgt,
                          const MonoidalFunctor& fm, ObjId x);
MorId f_minus_one_f2(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
                     const MonoidalFunctor& fm, ObjId x);

// H1:  i_{F(x)} ; (1 (x) fm1) ; F2  =  F0 ; F(i_x)
// H2:  (fm1 (x) 1) ; F2 ; F(e_x)  =  e_{F(x)} ; F0
bool check_h1(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
              const MonoidalFunctor& fm, ObjId x, MorId fm1);
bool check_h2(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
              const MonoidalFunctor& fm, ObjId x, MorId fm1);

}  // namespace twogroups
