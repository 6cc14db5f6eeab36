#include "twogroups/monoidal.hpp"

#include <stdexcept>

namespace twogroups {

bool operator==(const MonoidalStructure& a, const MonoidalStructure& b) {
  return *a.base == *b.base && a.tensor.ob_map == b.tensor.ob_map &&
         a.tensor.mor_map == b.tensor.mor_map && a.unit == b.unit &&
         a.assoc == b.assoc && a.lunit == b.lunit && a.runit == b.runit;
}

MonoidalStructure make_monoidal(CatPtr base, std::vector<ObjId> tensor_ob,
                                std::vector<MorId> tensor_mor, ObjId unit,
                                std::vector<MorId> assoc, std::vector<MorId> lunit,
                                std::vector<MorId> runit) {
  MonoidalStructure m;
  m.base = base;
  m.square = std::make_shared<const FinCategory>(product_category(*base, *base));
  m.tensor.source = m.square;
  m.tensor.target = base;
  m.tensor.ob_map = std::move(tensor_ob);
  m.tensor.mor_map = std::move(tensor_mor);
  m.unit = unit;
  m.assoc = std::move(assoc);
  m.lunit = std::move(lunit);
  m.runit = std::move(runit);
  return m;
}

MonoidalStructure discrete_monoidal(const MulTable& t) {
  if (!is_monoid(t))
    throw std::invalid_argument("discrete_monoidal: table is not a monoid");
  const std::size_t n = t.order;
  CatPtr base = std::make_shared<const FinCategory>(discrete_category(n));
  std::vector<ObjId> tob(n * n);
  std::vector<MorId> tmor(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      tob[a * n + b] = ObjId{t.mul(a, b)};
      tmor[a * n + b] = MorId{t.mul(a, b)};
    }
  std::vector<MorId> assoc(n * n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        assoc[(a * n + b) * n + c] = MorId{t.mul(t.mul(a, b), c)};
  std::vector<MorId> lun(n), run(n);
  for (std::uint32_t a = 0; a < n; ++a) lun[a] = run[a] = MorId{a};
  return make_monoidal(base, std::move(tob), std::move(tmor),
                       ObjId{static_cast<std::uint32_t>(find_identity(t))},
                       std::move(assoc), std::move(lun), std::move(run));
}

namespace {

// Table shapes, id ranges and component typing; all structural.
void monoidal_structure_checks(const MonoidalStructure& m, ValidationReport& rep) {
  const std::size_t n = m.base->objects;
  const std::size_t mm = m.base->morphism_count();
  if (!m.square || !(*m.square == product_category(*m.base, *m.base))) {
    rep.add(Severity::Structural, "TENSOR_SOURCE", {},
            "tensor source is not the product category of the base");
    return;
  }
  if (m.tensor.ob_map.size() != n * n || m.tensor.mor_map.size() != mm * mm ||
      m.assoc.size() != n * n * n || m.lunit.size() != n || m.runit.size() != n) {
    rep.add(Severity::Structural, "MONOIDAL_SHAPE", {}, "table sizes wrong");
    return;
  }
  if (m.unit.v >= n) {
    rep.add(Severity::Structural, "UNIT_RANGE", {}, "unit object out of range");
    return;
  }
  for (MorId f : m.assoc)
    if (f.v >= mm) {
      rep.add(Severity::Structural, "ASSOC_RANGE", {}, "assoc id out of range");
      return;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (m.lunit[x].v >= mm || m.runit[x].v >= mm) {
      rep.add(Severity::Structural, "UNITOR_RANGE", {(std::int64_t)x},
              "unitor id out of range");
      return;
    }

  ValidationReport fr = validate_functor(m.tensor);
  if (fr.has_structural()) {
    rep.merge(fr, "TENSOR_");
    return;
  }

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        const MorArrow& a = m.base->arrow(m.assoc_at(ObjId{x}, ObjId{y}, ObjId{z}));
        ObjId lhs = m.tensor_ob(m.tensor_ob(ObjId{x}, ObjId{y}), ObjId{z});
        ObjId rhs = m.tensor_ob(ObjId{x}, m.tensor_ob(ObjId{y}, ObjId{z}));
        if (a.dom != lhs || a.cod != rhs)
          rep.add(Severity::Structural, "ASSOC_TYPING", {x, y, z},
                  "a_{x,y,z} must go (xy)z -> x(yz)");
      }
  for (std::uint32_t x = 0; x < n; ++x) {
    const MorArrow& l = m.base->arrow(m.lunit_at(ObjId{x}));
    if (l.dom != m.tensor_ob(m.unit, ObjId{x}) || l.cod != ObjId{x})
      rep.add(Severity::Structural, "LUNIT_TYPING", {x}, "l_x must go 1x -> x");
    const MorArrow& r = m.base->arrow(m.runit_at(ObjId{x}));
    if (r.dom != m.tensor_ob(ObjId{x}, m.unit) || r.cod != ObjId{x})
      rep.add(Severity::Structural, "RUNIT_TYPING", {x}, "r_x must go x1 -> x");
  }
}

}  // namespace

ValidationReport check_pentagon(const MonoidalStructure& m) {
  ValidationReport rep;
  const std::uint32_t n = static_cast<std::uint32_t>(m.base->objects);
  const FinCategory& c = *m.base;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z)
        for (std::uint32_t w = 0; w < n; ++w) {
          ++rep.checked;
          ObjId X{x}, Y{y}, Z{z}, W{w};
          MorId lhs = compose_chain(
              c, {m.tensor_mor(m.assoc_at(X, Y, Z), c.identity_of(W)),
                  m.assoc_at(X, m.tensor_ob(Y, Z), W),
                  m.tensor_mor(c.identity_of(X), m.assoc_at(Y, Z, W))});
          MorId rhs = compose_chain(
              c, {m.assoc_at(m.tensor_ob(X, Y), Z, W),
                  m.assoc_at(X, Y, m.tensor_ob(Z, W))});
          if (lhs != rhs)
            rep.add(Severity::Law, "PENTAGON", {x, y, z, w}, "pentagon fails");
        }
  return rep;
}

ValidationReport check_triangle(const MonoidalStructure& m) {
  ValidationReport rep;
  const std::uint32_t n = static_cast<std::uint32_t>(m.base->objects);
  const FinCategory& c = *m.base;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      ++rep.checked;
      ObjId X{x}, Y{y};
      MorId lhs = compose_chain(
          c, {m.assoc_at(X, m.unit, Y),
              m.tensor_mor(c.identity_of(X), m.lunit_at(Y))});
      MorId rhs = m.tensor_mor(m.runit_at(X), c.identity_of(Y));
      if (lhs != rhs)
        rep.add(Severity::Law, "TRIANGLE", {x, y}, "triangle fails");
    }
  return rep;
}

ValidationReport validate_monoidal(const MonoidalStructure& m) {
  ValidationReport rep;
  rep.merge(validate_category(*m.base));
  if (!rep.ok()) return rep;

  monoidal_structure_checks(m, rep);
  if (rep.has_structural()) return rep;

  // interchange law == functoriality of the tensor on the product category
  rep.merge(validate_functor(m.tensor), "TENSOR_");
  if (!rep.ok()) return rep;

  const FinCategory& c = *m.base;
  const std::uint32_t n = static_cast<std::uint32_t>(c.objects);
  const std::uint32_t mm = static_cast<std::uint32_t>(c.morphism_count());

  // naturality of the associator in all three arguments
  for (std::uint32_t f = 0; f < mm; ++f)
    for (std::uint32_t g = 0; g < mm; ++g)
      for (std::uint32_t h = 0; h < mm; ++h) {
        ++rep.checked;
        const MorArrow &af = c.morphisms[f], &ag = c.morphisms[g],
                       &ah = c.morphisms[h];
        MorId lhs = compose_chain(
            c, {m.tensor_mor(m.tensor_mor(MorId{f}, MorId{g}), MorId{h}),
                m.assoc_at(af.cod, ag.cod, ah.cod)});
        MorId rhs = compose_chain(
            c, {m.assoc_at(af.dom, ag.dom, ah.dom),
                m.tensor_mor(MorId{f}, m.tensor_mor(MorId{g}, MorId{h}))});
        if (lhs != rhs)
          rep.add(Severity::Law, "A_NATURAL", {f, g, h},
                  "associator not natural");
      }

  // naturality of the unitors
  for (std::uint32_t f = 0; f < mm; ++f) {
    const MorArrow& af = c.morphisms[f];
    ++rep.checked;
    MorId l_lhs = compose_chain(
        c, {m.tensor_mor(c.identity_of(m.unit), MorId{f}), m.lunit_at(af.cod)});
    MorId l_rhs = compose_chain(c, {m.lunit_at(af.dom), MorId{f}});
    if (l_lhs != l_rhs)
      rep.add(Severity::Law, "L_NATURAL", {f}, "left unitor not natural");
    MorId r_lhs = compose_chain(
        c, {m.tensor_mor(MorId{f}, c.identity_of(m.unit)), m.runit_at(af.cod)});
    MorId r_rhs = compose_chain(c, {m.runit_at(af.dom), MorId{f}});
    if (r_lhs != r_rhs)
      rep.add(Severity::Law, "R_NATURAL", {f}, "right unitor not natural");
  }

  // every structure component invertible
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        ++rep.checked;
        if (!is_isomorphism(c, m.assoc_at(ObjId{x}, ObjId{y}, ObjId{z})))
          rep.add(Severity::Law, "A_NOT_ISO", {x, y, z},
                  "associator component not invertible");
      }
  for (std::uint32_t x = 0; x < n; ++x) {
    ++rep.checked;
    if (!is_isomorphism(c, m.lunit_at(ObjId{x})))
      rep.add(Severity::Law, "L_NOT_ISO", {x}, "left unitor not invertible");
    if (!is_isomorphism(c, m.runit_at(ObjId{x})))
      rep.add(Severity::Law, "R_NOT_ISO", {x}, "right unitor not invertible");
  }

  rep.merge(check_pentagon(m));
  rep.merge(check_triangle(m));
  return rep;
}

bool is_strict(const MonoidalStructure& m) {
  const FinCategory& c = *m.base;
  for (std::uint32_t x = 0; x < c.objects; ++x)
    for (std::uint32_t y = 0; y < c.objects; ++y)
      for (std::uint32_t z = 0; z < c.objects; ++z) {
        MorId a = m.assoc_at(ObjId{x}, ObjId{y}, ObjId{z});
        if (a != c.identity_of(c.arrow(a).dom)) return false;
      }
  for (std::uint32_t x = 0; x < c.objects; ++x) {
    MorId l = m.lunit_at(ObjId{x});
    if (l != c.identity_of(c.arrow(l).dom)) return false;
    MorId r = m.runit_at(ObjId{x});
    if (r != c.identity_of(c.arrow(r).dom)) return false;
  }
  return true;
}

}  // namespace twogroups
