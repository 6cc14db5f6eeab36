#include "twogroups/twogroup.hpp"

#include <sstream>
#include <stdexcept>

namespace twogroups {

ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport rep;
  if (!is_group(x.g))
    rep.add(Severity::Structural, "XMOD_G", {}, "G is not a group");
  if (!is_group(x.h))
    rep.add(Severity::Structural, "XMOD_H", {}, "H is not a group");
  if (x.t.size() != x.h.order || x.action.size() != x.g.order * x.h.order)
    rep.add(Severity::Structural, "XMOD_SHAPE", {}, "t/action tables wrong size");
  if (!rep.ok()) return rep;

  const std::size_t ng = x.g.order, nh = x.h.order;
  for (std::uint32_t v : x.t)
    if (v >= ng) {
      rep.add(Severity::Structural, "XMOD_T_RANGE", {}, "t value out of range");
      return rep;
    }
  for (std::uint32_t v : x.action)
    if (v >= nh) {
      rep.add(Severity::Structural, "XMOD_ACT_RANGE", {}, "action value out of range");
      return rep;
    }

  auto act = [&](std::uint32_t gi, std::uint32_t hi) { return x.action[gi * nh + hi]; };
  const std::uint32_t eg = static_cast<std::uint32_t>(find_identity(x.g));
  const std::uint32_t eh = static_cast<std::uint32_t>(find_identity(x.h));

  for (std::uint32_t a = 0; a < nh; ++a)
    for (std::uint32_t b = 0; b < nh; ++b) {
      ++rep.checked;
      if (x.t[x.h.mul(a, b)] != x.g.mul(x.t[a], x.t[b]))
        rep.add(Severity::Law, "XMOD_T_HOM", {a, b}, "t not a homomorphism");
    }
  for (std::uint32_t hi = 0; hi < nh; ++hi)
    if (act(eg, hi) != hi)
      rep.add(Severity::Law, "XMOD_ACT_UNIT", {hi}, "action of 1 not trivial");
  for (std::uint32_t g1 = 0; g1 < ng; ++g1)
    for (std::uint32_t g2 = 0; g2 < ng; ++g2)
      for (std::uint32_t hi = 0; hi < nh; ++hi) {
        ++rep.checked;
        if (act(x.g.mul(g1, g2), hi) != act(g1, act(g2, hi)))
          rep.add(Severity::Law, "XMOD_ACT_COMP", {g1, g2, hi},
                  "action not multiplicative");
      }
  for (std::uint32_t gi = 0; gi < ng; ++gi)
    for (std::uint32_t a = 0; a < nh; ++a)
      for (std::uint32_t b = 0; b < nh; ++b) {
        ++rep.checked;
        if (act(gi, x.h.mul(a, b)) != x.h.mul(act(gi, a), act(gi, b)))
          rep.add(Severity::Law, "XMOD_ACT_AUT", {gi, a, b},
                  "action not by homomorphisms");
      }
  for (std::uint32_t gi = 0; gi < ng; ++gi)
    for (std::uint32_t hi = 0; hi < nh; ++hi) {
      ++rep.checked;
      std::uint32_t lhs = x.t[act(gi, hi)];
      std::uint32_t rhs =
          x.g.mul(x.g.mul(gi, x.t[hi]), group_inverse(x.g, gi));
      if (lhs != rhs)
        rep.add(Severity::Law, "XMOD_EQUIVARIANT", {gi, hi},
                "t(alpha(g,h)) != g t(h) g^-1");
    }
  for (std::uint32_t a = 0; a < nh; ++a)
    for (std::uint32_t b = 0; b < nh; ++b) {
      ++rep.checked;
      std::uint32_t lhs = act(x.t[a], b);
      std::uint32_t rhs = x.h.mul(x.h.mul(a, b), group_inverse(x.h, a));
      if (lhs != rhs)
        rep.add(Severity::Law, "XMOD_PEIFFER", {a, b},
                "alpha(t(h), h') != h h' h^-1");
    }
  (void)eh;
  return rep;
}

std::optional<FoundInverse> find_weak_inverse(const MonoidalStructure& m, ObjId x) {
  const FinCategory& c = *m.base;
  for (std::uint32_t yv = 0; yv < c.objects; ++yv) {
    ObjId y{yv};
    ObjId xy = m.tensor_ob(x, y);
    ObjId yx = m.tensor_ob(y, x);
    std::optional<MorId> gamma, xi;
    for (std::uint32_t f = 0; f < c.morphism_count() && !gamma; ++f) {
      const MorArrow& a = c.morphisms[f];
      if (a.dom == xy && a.cod == m.unit && is_isomorphism(c, MorId{f}))
        gamma = MorId{f};
    }
    if (!gamma) continue;
    for (std::uint32_t f = 0; f < c.morphism_count() && !xi; ++f) {
      const MorArrow& a = c.morphisms[f];
      if (a.dom == yx && a.cod == m.unit && is_isomorphism(c, MorId{f}))
        xi = MorId{f};
    }
    if (xi) return FoundInverse{y, *gamma, *xi};
  }
  return std::nullopt;
}

WeakCertification check_weak_2group(const MonoidalStructure& m) {
  WeakCertification out;
  const FinCategory& c = *m.base;
  WeakTwoGroup w;
  w.m = m;
  w.morphism_inverse.resize(c.morphism_count());
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    auto inv = is_isomorphism(c, MorId{f});
    if (!inv) {
      out.report.add(Severity::Law, "MOR_NOT_INVERTIBLE", {f},
                     "morphism has no two-sided inverse");
      continue;
    }
    w.morphism_inverse[f] = *inv;
  }
  w.object_witness.resize(c.objects);
  for (std::uint32_t xv = 0; xv < c.objects; ++xv) {
    auto found = find_weak_inverse(m, ObjId{xv});
    ++out.report.checked;
    if (!found) {
      out.report.add(Severity::Law, "NO_WEAK_INVERSE", {xv},
                     "object has no weak inverse");
      continue;
    }
    // store the unit-direction witness: gamma is inverted once here
    w.object_witness[xv] = {found->y, *is_isomorphism(c, found->gamma),
                            found->xi};
  }
  if (out.report.ok()) out.group = std::move(w);
  return out;
}

namespace {

// typing of (dual, i, e) tables; structural on failure
bool data_typing(const MonoidalStructure& m, const CoherentData& d,
                 ValidationReport& rep) {
  const FinCategory& c = *m.base;
  const std::size_t n = c.objects;
  if (d.dual.size() != n || d.unit_i.size() != n || d.counit_e.size() != n) {
    rep.add(Severity::Structural, "DATA_SHAPE", {}, "coherent data tables wrong size");
    return false;
  }
  bool ok = true;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (d.dual[x].v >= n || d.unit_i[x].v >= c.morphism_count() ||
        d.counit_e[x].v >= c.morphism_count()) {
      rep.add(Severity::Structural, "DATA_RANGE", {x}, "coherent data id out of range");
      ok = false;
      continue;
    }
    const MorArrow& i = c.arrow(d.unit_i[x]);
    if (i.dom != m.unit || i.cod != m.tensor_ob(ObjId{x}, d.dual[x])) {
      rep.add(Severity::Structural, "DATA_TYPING", {x},
              "i_x must go 1 -> x(x)dual");
      ok = false;
    }
    const MorArrow& e = c.arrow(d.counit_e[x]);
    if (e.dom != m.tensor_ob(d.dual[x], ObjId{x}) || e.cod != m.unit) {
      rep.add(Severity::Structural, "DATA_TYPING", {x},
              "e_x must go dual(x)x -> 1");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport check_zigzags(const MonoidalStructure& m, const CoherentData& d) {
  ValidationReport rep;
  if (!data_typing(m, d, rep)) return rep;
  const FinCategory& c = *m.base;
  for (std::uint32_t xv = 0; xv < c.objects; ++xv) {
    ObjId x{xv};
    ObjId dual = d.dual[xv];
    MorId i = d.unit_i[xv], e = d.counit_e[xv];
    auto r_inv = is_isomorphism(c, m.runit_at(x));
    auto l_inv = is_isomorphism(c, m.lunit_at(dual));
    auto a_inv = is_isomorphism(c, m.assoc_at(dual, x, dual));
    if (!r_inv || !l_inv || !a_inv) {
      rep.add(Severity::Law, "STRUCTURE_NOT_ISO", {xv},
              "unitor/associator not invertible at x");
      continue;
    }
    ++rep.checked;
    // zig-zag 1: 1(x)x -> x(x)1
    MorId z1_lhs = compose_chain(c, {m.lunit_at(x), *r_inv});
    MorId z1_rhs = compose_chain(
        c, {m.tensor_mor(i, c.identity_of(x)), m.assoc_at(x, dual, x),
            m.tensor_mor(c.identity_of(x), e)});
    if (z1_lhs != z1_rhs)
      rep.add(Severity::Law, "ZIGZAG1", {xv}, "first zig-zag identity fails");
    ++rep.checked;
    // zig-zag 2: dual(x)1 -> 1(x)dual
    MorId z2_lhs = compose_chain(c, {m.runit_at(dual), *l_inv});
    MorId z2_rhs = compose_chain(
        c, {m.tensor_mor(c.identity_of(dual), i), *a_inv,
            m.tensor_mor(e, c.identity_of(dual))});
    if (z2_lhs != z2_rhs)
      rep.add(Severity::Law, "ZIGZAG2", {xv}, "second zig-zag identity fails");
  }
  return rep;
}

ValidationReport validate_coherent(const CoherentTwoGroup& g) {
  ValidationReport rep = validate_monoidal(g.m);
  if (rep.has_structural()) return rep;
  const FinCategory& c = *g.m.base;
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    ++rep.checked;
    if (!is_isomorphism(c, MorId{f}))
      rep.add(Severity::Law, "MOR_NOT_INVERTIBLE", {f},
              "morphism has no two-sided inverse");
  }
  ValidationReport typing;
  if (!data_typing(g.m, g.data, typing)) {
    rep.merge(typing);
    return rep;
  }
  for (std::uint32_t x = 0; x < c.objects; ++x) {
    ++rep.checked;
    if (!is_isomorphism(c, g.data.unit_i[x]))
      rep.add(Severity::Law, "UNIT_NOT_ISO", {x}, "i_x not invertible");
    if (!is_isomorphism(c, g.data.counit_e[x]))
      rep.add(Severity::Law, "COUNIT_NOT_ISO", {x}, "e_x not invertible");
  }
  if (!rep.ok()) return rep;
  rep.merge(check_zigzags(g.m, g.data));
  return rep;
}

FinFunctor inverse_functor(const CoherentTwoGroup& g) {
  const FinCategory& c = *g.m.base;
  FinFunctor f;
  f.source = std::make_shared<const FinCategory>(opposite_category(c));
  f.target = g.m.base;
  f.ob_map.resize(c.objects);
  for (std::uint32_t x = 0; x < c.objects; ++x) f.ob_map[x] = ObjId{x};
  f.mor_map.resize(c.morphism_count());
  for (std::uint32_t i = 0; i < c.morphism_count(); ++i) {
    auto inv = is_isomorphism(c, MorId{i});
    if (!inv)
      throw std::invalid_argument("inverse_functor: non-invertible morphism");
    f.mor_map[i] = *inv;
  }
  return f;
}

namespace {

// The * composite for f : x -> y, read off the string diagram with the cup
// labelled i_x and the cap labelled e_y:
//   dual(y) -> dual(y)1 -> dual(y)(x dual(x)) -> dual(y)(y dual(x))
//           -> (dual(y) y) dual(x) -> 1 dual(x) -> dual(x)
MorId star_on(const MonoidalStructure& m, const CoherentData& d, MorId f) {
  const FinCategory& c = *m.base;
  const MorArrow& a = c.arrow(f);
  ObjId x = a.dom, y = a.cod;
  ObjId dx = d.dual[x.v], dy = d.dual[y.v];
  auto require = [](std::optional<MorId> v, const char* what) {
    if (!v) throw std::invalid_argument(std::string("star_functor: ") + what);
    return *v;
  };
  MorId r_inv = require(is_isomorphism(c, m.runit_at(dy)), "r not invertible");
  MorId a_inv =
      require(is_isomorphism(c, m.assoc_at(dy, y, dx)), "a not invertible");
  return compose_chain(
      c, {r_inv, m.tensor_mor(c.identity_of(dy), d.unit_i[x.v]),
          m.tensor_mor(c.identity_of(dy),
                       m.tensor_mor(f, c.identity_of(dx))),
          a_inv, m.tensor_mor(d.counit_e[y.v], c.identity_of(dx)),
          m.lunit_at(dx)});
}

}  // namespace

FinFunctor star_functor(const CoherentTwoGroup& g) {
  const FinCategory& c = *g.m.base;
  FinFunctor f;
  f.source = std::make_shared<const FinCategory>(opposite_category(c));
  f.target = g.m.base;
  f.ob_map.resize(c.objects);
  for (std::uint32_t x = 0; x < c.objects; ++x) f.ob_map[x] = g.data.dual[x];
  f.mor_map.resize(c.morphism_count());
  for (std::uint32_t i = 0; i < c.morphism_count(); ++i)
    f.mor_map[i] = star_on(g.m, g.data, MorId{i});
  return f;
}

FinFunctor inv_functor(const CoherentTwoGroup& g) {
  const FinCategory& c = *g.m.base;
  FinFunctor f;
  f.source = g.m.base;
  f.target = g.m.base;
  f.ob_map.resize(c.objects);
  for (std::uint32_t x = 0; x < c.objects; ++x) f.ob_map[x] = g.data.dual[x];
  f.mor_map.resize(c.morphism_count());
  for (std::uint32_t i = 0; i < c.morphism_count(); ++i) {
    auto inv = is_isomorphism(c, MorId{i});
    if (!inv)
      throw std::invalid_argument("inv_functor: non-invertible morphism");
    f.mor_map[i] = star_on(g.m, g.data, *inv);
  }
  return f;
}

ValidationReport check_inv_functorial(const CoherentTwoGroup& g) {
  ValidationReport rep;
  FinFunctor inv = inv_functor(g);
  const FinCategory& c = *g.m.base;
  for (std::uint32_t x = 0; x < c.objects; ++x) {
    ++rep.checked;
    if (inv.mor_map[c.identity_of(ObjId{x}).v] != c.identity_of(g.data.dual[x]))
      rep.add(Severity::Law, "INV_ID", {x}, "inv(identity) != identity");
  }
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    for (std::uint32_t h = 0; h < c.morphism_count(); ++h) {
      if (c.morphisms[f].cod != c.morphisms[h].dom) continue;
      ++rep.checked;
      MorId lhs = inv.mor_map[c.compose(MorId{f}, MorId{h}).v];
      MorId rhs = c.compose(inv.mor_map[f], inv.mor_map[h]);
      if (lhs != rhs)
        rep.add(Severity::Law, "INV_COMP", {f, h}, "inv(fg) != inv(f)inv(g)");
    }
  return rep;
}

CoherentTwoGroup from_group(const MulTable& t) {
  if (!is_group(t)) throw std::invalid_argument("from_group: not a group table");
  CoherentTwoGroup g;
  g.m = discrete_monoidal(t);
  const std::size_t n = t.order;
  g.data.dual.resize(n);
  g.data.unit_i.resize(n);
  g.data.counit_e.resize(n);
  const MorId id1 = g.m.base->identity_of(g.m.unit);
  for (std::uint32_t a = 0; a < n; ++a) {
    g.data.dual[a] = ObjId{group_inverse(t, a)};
    g.data.unit_i[a] = id1;
    g.data.counit_e[a] = id1;
  }
  return g;
}

std::pair<MonoidalStructure, CoherentData> deloop_abelian(const MulTable& t,
                                                          std::uint32_t i_choice,
                                                          std::uint32_t e_choice) {
  if (!is_group(t) || !is_abelian(t))
    throw std::invalid_argument("deloop_abelian: table is not an abelian group");
  if (i_choice >= t.order || e_choice >= t.order)
    throw std::invalid_argument("deloop_abelian: i/e choice out of range");
  const std::size_t n = t.order;
  FinCategory c;
  c.objects = 1;
  c.morphisms.resize(n);
  for (std::uint32_t f = 0; f < n; ++f) c.morphisms[f] = {MorId{f}, ObjId{0}, ObjId{0}};
  const std::uint32_t e = static_cast<std::uint32_t>(find_identity(t));
  c.identity = {MorId{e}};
  c.compose_table.assign(n, std::vector<MorId>(n, kNoMor));
  for (std::uint32_t f = 0; f < n; ++f)
    for (std::uint32_t g = 0; g < n; ++g) c.compose_table[f][g] = MorId{t.mul(f, g)};
  CatPtr base = std::make_shared<const FinCategory>(std::move(c));

  std::vector<ObjId> tob = {ObjId{0}};
  std::vector<MorId> tmor(n * n);
  for (std::uint32_t f = 0; f < n; ++f)
    for (std::uint32_t g = 0; g < n; ++g) tmor[f * n + g] = MorId{t.mul(f, g)};
  MonoidalStructure m =
      make_monoidal(base, std::move(tob), std::move(tmor), ObjId{0},
                    {MorId{e}}, {MorId{e}}, {MorId{e}});
  CoherentData d;
  d.dual = {ObjId{0}};
  d.unit_i = {MorId{i_choice}};
  d.counit_e = {MorId{e_choice}};
  return {std::move(m), std::move(d)};
}

CoherentTwoGroup from_crossed_module(const CrossedModule& x) {
  ValidationReport rep = validate_crossed_module(x);
  if (!rep.ok())
    throw std::invalid_argument("from_crossed_module: invalid crossed module\n" +
                                rep.to_string());
  const std::size_t ng = x.g.order, nh = x.h.order;
  auto act = [&](std::uint32_t gi, std::uint32_t hi) { return x.action[gi * nh + hi]; };
  auto mor_id = [&](std::uint32_t hi, std::uint32_t gi) {
    return MorId{static_cast<std::uint32_t>(hi * ng + gi)};
  };
  const std::uint32_t eh = static_cast<std::uint32_t>(find_identity(x.h));

  FinCategory c;
  c.objects = ng;
  c.morphisms.resize(ng * nh);
  for (std::uint32_t hi = 0; hi < nh; ++hi)
    for (std::uint32_t gi = 0; gi < ng; ++gi)
      c.morphisms[mor_id(hi, gi).v] = {mor_id(hi, gi), ObjId{gi},
                                       ObjId{x.g.mul(x.t[hi], gi)}};
  c.identity.resize(ng);
  for (std::uint32_t gi = 0; gi < ng; ++gi) c.identity[gi] = mor_id(eh, gi);
  const std::size_t mm = ng * nh;
  c.compose_table.assign(mm, std::vector<MorId>(mm, kNoMor));
  for (std::uint32_t h1 = 0; h1 < nh; ++h1)
    for (std::uint32_t g1 = 0; g1 < ng; ++g1)
      for (std::uint32_t h2 = 0; h2 < nh; ++h2) {
        std::uint32_t g2 = x.g.mul(x.t[h1], g1);  // cod of (h1, g1)
        c.compose_table[mor_id(h1, g1).v][mor_id(h2, g2).v] =
            mor_id(x.h.mul(h2, h1), g1);
      }
  CatPtr base = std::make_shared<const FinCategory>(std::move(c));

  std::vector<ObjId> tob(ng * ng);
  for (std::uint32_t a = 0; a < ng; ++a)
    for (std::uint32_t b = 0; b < ng; ++b) tob[a * ng + b] = ObjId{x.g.mul(a, b)};
  std::vector<MorId> tmor(mm * mm);
  for (std::uint32_t h1 = 0; h1 < nh; ++h1)
    for (std::uint32_t g1 = 0; g1 < ng; ++g1)
      for (std::uint32_t h2 = 0; h2 < nh; ++h2)
        for (std::uint32_t g2 = 0; g2 < ng; ++g2)
          tmor[mor_id(h1, g1).v * mm + mor_id(h2, g2).v] =
              mor_id(x.h.mul(h1, act(g1, h2)), x.g.mul(g1, g2));

  const std::uint32_t eg = static_cast<std::uint32_t>(find_identity(x.g));
  std::vector<MorId> assoc(ng * ng * ng);
  for (std::uint32_t a = 0; a < ng; ++a)
    for (std::uint32_t b = 0; b < ng; ++b)
      for (std::uint32_t cc = 0; cc < ng; ++cc)
        assoc[(a * ng + b) * ng + cc] = mor_id(eh, x.g.mul(x.g.mul(a, b), cc));
  std::vector<MorId> lun(ng), run(ng);
  for (std::uint32_t a = 0; a < ng; ++a) lun[a] = run[a] = mor_id(eh, a);

  CoherentTwoGroup out;
  out.m = make_monoidal(base, std::move(tob), std::move(tmor), ObjId{eg},
                        std::move(assoc), std::move(lun), std::move(run));
  out.data.dual.resize(ng);
  out.data.unit_i.resize(ng);
  out.data.counit_e.resize(ng);
  for (std::uint32_t a = 0; a < ng; ++a) {
    out.data.dual[a] = ObjId{group_inverse(x.g, a)};
    out.data.unit_i[a] = mor_id(eh, eg);
    out.data.counit_e[a] = mor_id(eh, eg);
  }
  return out;
}

}  // namespace twogroups
