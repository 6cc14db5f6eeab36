#include "twogroups/improve.hpp"

namespace twogroups {

InverseChoice choice_from_data(const CoherentData& d) {
  return {d.dual, d.unit_i, d.counit_e};
}

InverseChoice choose_inverse_data(const WeakTwoGroup& w) {
  InverseChoice ch;
  ch.dual.reserve(w.object_witness.size());
  ch.unit_i.reserve(w.object_witness.size());
  ch.counit_e.reserve(w.object_witness.size());
  for (const ObjectWitness& ow : w.object_witness) {
    ch.dual.push_back(ow.dual);
    ch.unit_i.push_back(ow.unit_iso);
    ch.counit_e.push_back(ow.counit_iso);
  }
  return ch;
}

namespace {

MorId invert_or_throw(const FinCategory& c, MorId f, const char* what) {
  auto inv = is_isomorphism(c, f);
  if (!inv) throw std::invalid_argument(std::string("improve: ") + what +
                                        " not invertible");
  return *inv;
}

}  // namespace

CoherentTwoGroup improve(const MonoidalStructure& m, const InverseChoice& ch) {
  const FinCategory& c = *m.base;
  const std::size_t n = c.objects;
  if (ch.dual.size() != n || ch.unit_i.size() != n || ch.counit_e.size() != n)
    throw std::invalid_argument("improve: choice tables have wrong size");

  CoherentTwoGroup out;
  out.m = m;
  out.data.dual = ch.dual;
  out.data.counit_e = ch.counit_e;  // the counit is kept as chosen
  out.data.unit_i.resize(n);

  for (std::uint32_t xv = 0; xv < n; ++xv) {
    ObjId x{xv};
    ObjId d = ch.dual[xv];
    MorId i = ch.unit_i[xv];
    MorId e = ch.counit_e[xv];
    {
      const MorArrow& ai = c.arrow(i);
      const MorArrow& ae = c.arrow(e);
      if (ai.dom != m.unit || ai.cod != m.tensor_ob(x, d) ||
          ae.dom != m.tensor_ob(d, x) || ae.cod != m.unit)
        throw std::invalid_argument("improve: choice mistyped at object " +
                                    std::to_string(xv));
    }
    MorId e_inv = invert_or_throw(c, e, "e_x");
    MorId i_inv = invert_or_throw(c, i, "i_x");
    ObjId xd = m.tensor_ob(x, d);
    out.data.unit_i[xv] = compose_chain(
        c,
        {i,
         m.tensor_mor(c.identity_of(x), invert_or_throw(c, m.lunit_at(d), "l")),
         m.tensor_mor(c.identity_of(x),
                      m.tensor_mor(e_inv, c.identity_of(d))),
         m.tensor_mor(c.identity_of(x), m.assoc_at(d, x, d)),
         invert_or_throw(c, m.assoc_at(x, d, xd), "a"),
         m.tensor_mor(i_inv, c.identity_of(xd)),
         invert_or_throw(c, m.assoc_at(m.unit, x, d), "a"),
         m.tensor_mor(m.lunit_at(x), c.identity_of(d))});
  }

  ValidationReport rep = validate_coherent(out);
  if (!rep.ok()) throw ImproveContradiction(rep);
  return out;
}

WeakTwoGroup forget(const CoherentTwoGroup& g) {
  WeakTwoGroup w;
  w.m = g.m;
  const FinCategory& c = *g.m.base;
  w.morphism_inverse.resize(c.morphism_count());
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    w.morphism_inverse[f] = invert_or_throw(c, MorId{f}, "morphism");
  w.object_witness.resize(c.objects);
  for (std::uint32_t x = 0; x < c.objects; ++x)
    w.object_witness[x] = {g.data.dual[x], g.data.unit_i[x],
                           g.data.counit_e[x]};
  return w;
}

MonoidalFunctor roundtrip_homomorphism(const CoherentTwoGroup& g,
                                       const CoherentTwoGroup& g2) {
  if (!(g.m == g2.m))
    throw std::invalid_argument(
        "roundtrip_homomorphism: underlying monoidal structures differ");
  return identity_monoidal_functor(g.m);
}

}  // namespace twogroups
