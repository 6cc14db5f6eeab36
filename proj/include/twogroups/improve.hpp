#pragma once

#include "twogroups/homomorphism.hpp"

namespace twogroups {

// Per-object choice of weak inverse and witness isomorphisms, not assumed
// to satisfy the zig-zag identities.
struct InverseChoice {
  std::vector<ObjId> dual;
  std::vector<MorId> unit_i;    // 1 -> x (x) dual
  std::vector<MorId> counit_e;  // dual (x) x -> 1
};

InverseChoice choice_from_data(const CoherentData& d);

// Deterministic choice read off the certificates (which were themselves
// found in index order).
InverseChoice choose_inverse_data(const WeakTwoGroup& w);

// Thrown when the improved data fails validate_coherent; this contradicts
// the improvement theorem, so it is an internal error, and the witness
// report is attached for diagnosis.
struct ImproveContradiction : std::logic_error {
  ValidationReport report;
  explicit ImproveContradiction(const ValidationReport& rep)
      : std::logic_error("improve: output failed validate_coherent\n" +
                         rep.to_string()),
        report(rep) {}
};

// Keeps dual and counit, replaces each unit i_x by the composite
//   i ; (1(x)l^-1) ; (1(x)(e^-1(x)1)) ; (1(x)a) ; a^-1 ; (i^-1(x)1) ;
//   a^-1 ; (l(x)1)
// and post-validates the result, aborting with the witness on failure.
CoherentTwoGroup improve(const MonoidalStructure& m, const InverseChoice& ch);

// Forgets the adjoint equivalences down to weak-invertibility certificates;
// morphism inverses are recomputed by search.
WeakTwoGroup forget(const CoherentTwoGroup& g);

// The identity homomorphism between two coherent structures sharing one
// underlying monoidal structure; its F_-1 is the comparison isomorphism
// between the two choices of dual data.
MonoidalFunctor roundtrip_homomorphism(const CoherentTwoGroup& g,
                                       const CoherentTwoGroup& g2);

}  // namespace twogroups
