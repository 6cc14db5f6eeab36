#include "twogroups/homomorphism.hpp"

#include <stdexcept>

namespace twogroups {

namespace {

MorId invert_or_throw(const FinCategory& c, MorId f, const char* what) {
  auto inv = is_isomorphism(c, f);
  if (!inv) throw std::invalid_argument(std::string(what) + ": not invertible");
  return *inv;
}

}  // namespace

MonoidalFunctor identity_monoidal_functor(const MonoidalStructure& m) {
  MonoidalFunctor fm;
  fm.f = identity_functor(m.base);
  const std::size_t n = m.object_count();
  fm.f2.resize(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      fm.f2[x * n + y] = m.base->identity_of(m.tensor_ob(ObjId{x}, ObjId{y}));
  fm.f0 = m.base->identity_of(m.unit);
  return fm;
}

ValidationReport validate_monoidal_functor(const MonoidalStructure& src,
                                           const MonoidalStructure& tgt,
                                           const MonoidalFunctor& fm) {
  ValidationReport rep;
  const std::size_t n = src.object_count();
  const FinCategory& d = *tgt.base;
  if (!fm.f.source || !(*fm.f.source == *src.base) || !fm.f.target ||
      !(*fm.f.target == *tgt.base)) {
    rep.add(Severity::Structural, "MFUNCTOR_SHAPE", {},
            "underlying functor does not connect the given instances");
    return rep;
  }
  rep.merge(validate_functor(fm.f));
  if (!rep.ok()) return rep;
  if (fm.f2.size() != n * n) {
    rep.add(Severity::Structural, "F2_SHAPE", {}, "F2 table wrong size");
    return rep;
  }
  if (fm.f0.v >= d.morphism_count()) {
    rep.add(Severity::Structural, "F0_RANGE", {}, "F0 out of range");
    return rep;
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      MorId f2 = fm.f2_at(ObjId{x}, ObjId{y}, n);
      if (f2.v >= d.morphism_count()) {
        rep.add(Severity::Structural, "F2_RANGE", {x, y}, "F2 out of range");
        return rep;
      }
      const MorArrow& a = d.arrow(f2);
      ObjId dom = tgt.tensor_ob(fm.f.on_ob(ObjId{x}), fm.f.on_ob(ObjId{y}));
      ObjId cod = fm.f.on_ob(src.tensor_ob(ObjId{x}, ObjId{y}));
      if (a.dom != dom || a.cod != cod)
        rep.add(Severity::Structural, "F2_TYPING", {x, y},
                "F2 must go F(x)F(y) -> F(xy)");
    }
  {
    const MorArrow& a = d.arrow(fm.f0);
    if (a.dom != tgt.unit || a.cod != fm.f.on_ob(src.unit))
      rep.add(Severity::Structural, "F0_TYPING", {}, "F0 must go 1' -> F(1)");
  }
  if (rep.has_structural()) return rep;

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      ++rep.checked;
      if (!is_isomorphism(d, fm.f2_at(ObjId{x}, ObjId{y}, n)))
        rep.add(Severity::Law, "F2_NOT_ISO", {x, y}, "F2 not invertible");
    }
  if (!is_isomorphism(d, fm.f0))
    rep.add(Severity::Law, "F0_NOT_ISO", {}, "F0 not invertible");

  // naturality of F2 in both arguments
  const FinCategory& c = *src.base;
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    for (std::uint32_t g = 0; g < c.morphism_count(); ++g) {
      const MorArrow &af = c.morphisms[f], &ag = c.morphisms[g];
      ++rep.checked;
      MorId lhs = compose_chain(
          d, {tgt.tensor_mor(fm.f.on_mor(MorId{f}), fm.f.on_mor(MorId{g})),
              fm.f2_at(af.cod, ag.cod, n)});
      MorId rhs = compose_chain(
          d, {fm.f2_at(af.dom, ag.dom, n),
              fm.f.on_mor(src.tensor_mor(MorId{f}, MorId{g}))});
      if (lhs != rhs)
        rep.add(Severity::Law, "F2_NATURAL", {f, g}, "F2 not natural");
    }

  // associativity coherence square
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        ++rep.checked;
        ObjId X{x}, Y{y}, Z{z};
        ObjId fx = fm.f.on_ob(X), fy = fm.f.on_ob(Y), fz = fm.f.on_ob(Z);
        MorId lhs = compose_chain(
            d, {tgt.tensor_mor(fm.f2_at(X, Y, n), d.identity_of(fz)),
                fm.f2_at(src.tensor_ob(X, Y), Z, n),
                fm.f.on_mor(src.assoc_at(X, Y, Z))});
        MorId rhs = compose_chain(
            d, {tgt.assoc_at(fx, fy, fz),
                tgt.tensor_mor(d.identity_of(fx), fm.f2_at(Y, Z, n)),
                fm.f2_at(X, src.tensor_ob(Y, Z), n)});
        if (lhs != rhs)
          rep.add(Severity::Law, "F_ASSOC_SQUARE", {x, y, z},
                  "associativity coherence square fails");
      }

  // unit squares
  for (std::uint32_t x = 0; x < n; ++x) {
    ++rep.checked;
    ObjId X{x};
    ObjId fx = fm.f.on_ob(X);
    MorId l_lhs = compose_chain(
        d, {tgt.tensor_mor(fm.f0, d.identity_of(fx)),
            fm.f2_at(src.unit, X, n), fm.f.on_mor(src.lunit_at(X))});
    if (l_lhs != tgt.lunit_at(fx))
      rep.add(Severity::Law, "F_UNIT_L", {x}, "left unit square fails");
    MorId r_lhs = compose_chain(
        d, {tgt.tensor_mor(d.identity_of(fx), fm.f0),
            fm.f2_at(X, src.unit, n), fm.f.on_mor(src.runit_at(X))});
    if (r_lhs != tgt.runit_at(fx))
      rep.add(Severity::Law, "F_UNIT_R", {x}, "right unit square fails");
  }
  return rep;
}

MonoidalFunctor compose_monoidal_functors(const MonoidalStructure& a,
                                          const MonoidalStructure& b,
                                          const MonoidalStructure& c,
                                          const MonoidalFunctor& fm,
                                          const MonoidalFunctor& gm) {
  (void)b;
  MonoidalFunctor h;
  h.f = compose_functors(fm.f, gm.f);
  const std::size_t n = a.object_count();
  const std::size_t nb = fm.f.target->objects;
  const FinCategory& dc = *c.base;
  h.f2.resize(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      ObjId fx = fm.f.on_ob(ObjId{x}), fy = fm.f.on_ob(ObjId{y});
      h.f2[x * n + y] = compose_chain(
          dc, {gm.f2[fx.v * nb + fy.v],
               gm.f.on_mor(fm.f2[x * n + y])});
    }
  h.f0 = compose_chain(dc, {gm.f0, gm.f.on_mor(fm.f0)});
  return h;
}

ValidationReport validate_monoidal_nat(const MonoidalStructure& src,
                                       const MonoidalStructure& tgt,
                                       const MonoidalFunctor& fm,
                                       const MonoidalFunctor& gm,
                                       const MonoidalNatTransform& th) {
  ValidationReport rep = validate_nat(th.t);
  if (!rep.ok()) return rep;
  const FinCategory& d = *tgt.base;
  const std::size_t n = src.object_count();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      ++rep.checked;
      ObjId X{x}, Y{y};
      MorId lhs = compose_chain(
          d, {tgt.tensor_mor(th.t.component[x], th.t.component[y]),
              gm.f2_at(X, Y, n)});
      MorId rhs = compose_chain(
          d, {fm.f2_at(X, Y, n),
              th.t.component[src.tensor_ob(X, Y).v]});
      if (lhs != rhs)
        rep.add(Severity::Law, "MNAT_TENSOR", {x, y},
                "tensor compatibility square fails");
    }
  ++rep.checked;
  MorId lhs = compose_chain(d, {fm.f0, th.t.component[src.unit.v]});
  if (lhs != gm.f0)
    rep.add(Severity::Law, "MNAT_UNIT", {}, "F0 ; theta_1 != G0");
  return rep;
}

std::pair<MorId, MorId> preserved_weak_inverse(const MonoidalStructure& src,
                                               const MonoidalStructure& tgt,
                                               const MonoidalFunctor& fm,
                                               ObjId x, ObjId y, MorId gamma,
                                               MorId xi) {
  const FinCategory& cs = *src.base;
  const FinCategory& d = *tgt.base;
  const MorArrow& ag = cs.arrow(gamma);
  const MorArrow& ax = cs.arrow(xi);
  if (ag.dom != src.tensor_ob(x, y) || ag.cod != src.unit ||
      ax.dom != src.tensor_ob(y, x) || ax.cod != src.unit)
    throw std::invalid_argument("preserved_weak_inverse: witnesses mistyped");
  const std::size_t n = src.object_count();
  MorId f0_inv = invert_or_throw(d, fm.f0, "F0");
  MorId from_xi = compose_chain(
      d, {fm.f2_at(y, x, n), fm.f.on_mor(xi), f0_inv});
  MorId from_gamma = compose_chain(
      d, {fm.f2_at(x, y, n), fm.f.on_mor(gamma), f0_inv});
  return {from_xi, from_gamma};
}

namespace {

struct FmContext {
  const MonoidalStructure& s;
  const MonoidalStructure& t;
  const FinCategory& d;       // target category
  const MonoidalFunctor& fm;
  std::size_t n;              // source object count

  FmContext(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
            const MonoidalFunctor& f)
      : s(src.m), t(tgt.m), d(*tgt.m.base), fm(f), n(src.m.object_count()) {}

  MorId inv(MorId f, const char* what) const { return invert_or_throw(d, f, what); }
  MorId id(ObjId x) const { return d.identity_of(x); }
};

}  // namespace

// F1: l^-1 ; e^-1(x)1 ; a ; 1(x)i^-1 ; 1(x)F0 ; 1(x)F(i_x) ; 1(x)F2^-1 ;
//     a^-1 ; e(x)1 ; l   from dual'(F(x)) to F(dual(x)).
MorId f_minus_one_f1(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
                     const MonoidalFunctor& fm, ObjId x) {
  FmContext c(src, tgt, fm);
  ObjId fx = fm.f.on_ob(x);
  ObjId dfx = tgt.data.dual[fx.v];              // codomain's chosen dual
  ObjId fdx = fm.f.on_ob(src.data.dual[x.v]);   // F of the domain's dual
  MorId e = tgt.data.counit_e[fx.v];
  MorId i = tgt.data.unit_i[fx.v];
  return compose_chain(
      c.d,
      {c.inv(c.t.lunit_at(dfx), "l"),
       c.t.tensor_mor(c.inv(e, "e"), c.id(dfx)),
       c.t.assoc_at(dfx, fx, dfx),
       c.t.tensor_mor(c.id(dfx), c.inv(i, "i")),
       c.t.tensor_mor(c.id(dfx), fm.f0),
       c.t.tensor_mor(c.id(dfx), fm.f.on_mor(src.data.unit_i[x.v])),
       c.t.tensor_mor(c.id(dfx),
                      c.inv(fm.f2_at(x, src.data.dual[x.v], c.n), "F2")),
       c.inv(c.t.assoc_at(dfx, fx, fdx), "a"),
       c.t.tensor_mor(e, c.id(fdx)),
       c.t.lunit_at(fdx)});
}

// F1': the first four legs of F1 collapse to r^-1.
MorId f_minus_one_f1prime(const CoherentTwoGroup& src,
                          const CoherentTwoGroup& tgt,
                          const MonoidalFunctor& fm, ObjId x) {
  FmContext c(src, tgt, fm);
  ObjId fx = fm.f.on_ob(x);
  ObjId dfx = tgt.data.dual[fx.v];
  ObjId fdx = fm.f.on_ob(src.data.dual[x.v]);
  MorId e = tgt.data.counit_e[fx.v];
  return compose_chain(
      c.d,
      {c.inv(c.t.runit_at(dfx), "r"),
       c.t.tensor_mor(c.id(dfx), fm.f0),
       c.t.tensor_mor(c.id(dfx), fm.f.on_mor(src.data.unit_i[x.v])),
       c.t.tensor_mor(c.id(dfx),
                      c.inv(fm.f2_at(x, src.data.dual[x.v], c.n), "F2")),
       c.inv(c.t.assoc_at(dfx, fx, fdx), "a"),
       c.t.tensor_mor(e, c.id(fdx)),
       c.t.lunit_at(fdx)});
}

// F2: r^-1 ; 1(x)i ; a^-1 ; e(x)1 ; F0(x)1 ; F(e_x^-1)(x)1 ; F2^-1(x)1 ;
//     a ; 1(x)i^-1 ; r.
MorId f_minus_one_f2(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
                     const MonoidalFunctor& fm, ObjId x) {
  FmContext c(src, tgt, fm);
  const FinCategory& cs = *src.m.base;
  ObjId fx = fm.f.on_ob(x);
  ObjId dfx = tgt.data.dual[fx.v];
  ObjId fdx = fm.f.on_ob(src.data.dual[x.v]);
  MorId e = tgt.data.counit_e[fx.v];
  MorId i = tgt.data.unit_i[fx.v];
  MorId es_inv = invert_or_throw(cs, src.data.counit_e[x.v], "e_x");
  return compose_chain(
      c.d,
      {c.inv(c.t.runit_at(dfx), "r"),
       c.t.tensor_mor(c.id(dfx), i),
       c.inv(c.t.assoc_at(dfx, fx, dfx), "a"),
       c.t.tensor_mor(e, c.id(dfx)),
       c.t.tensor_mor(fm.f0, c.id(dfx)),
       c.t.tensor_mor(fm.f.on_mor(es_inv), c.id(dfx)),
       c.t.tensor_mor(c.inv(fm.f2_at(src.data.dual[x.v], x, c.n), "F2"),
                      c.id(dfx)),
       c.t.assoc_at(fdx, fx, dfx),
       c.t.tensor_mor(c.id(fdx), c.inv(i, "i")),
       c.t.runit_at(fdx)});
}

bool check_h1(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
              const MonoidalFunctor& fm, ObjId x, MorId fm1) {
  FmContext c(src, tgt, fm);
  ObjId fx = fm.f.on_ob(x);
  MorId lhs = compose_chain(
      c.d, {tgt.data.unit_i[fx.v],
            c.t.tensor_mor(c.id(fx), fm1),
            fm.f2_at(x, src.data.dual[x.v], c.n)});
  MorId rhs = compose_chain(c.d, {fm.f0, fm.f.on_mor(src.data.unit_i[x.v])});
  return lhs == rhs;
}

bool check_h2(const CoherentTwoGroup& src, const CoherentTwoGroup& tgt,
              const MonoidalFunctor& fm, ObjId x, MorId fm1) {
  FmContext c(src, tgt, fm);
  ObjId fx = fm.f.on_ob(x);
  MorId lhs = compose_chain(
      c.d, {c.t.tensor_mor(fm1, c.id(fx)),
            fm.f2_at(src.data.dual[x.v], x, c.n),
            fm.f.on_mor(src.data.counit_e[x.v])});
  MorId rhs = compose_chain(c.d, {tgt.data.counit_e[fx.v], fm.f0});
  return lhs == rhs;
}

}  // namespace twogroups
