#include "twogroups/fincat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twogroups {

bool ValidationReport::has_structural() const {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.severity == Severity::Structural;
  });
}

bool ValidationReport::has(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

void ValidationReport::add(Severity s, std::string law,
                           std::vector<std::int64_t> witness, std::string detail) {
  violations.push_back({s, std::move(law), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const Violation& v : other.violations) {
    violations.push_back({v.severity, prefix + v.law, v.witness, v.detail});
  }
  checked += other.checked;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << (v.severity == Severity::Structural ? "STRUCTURAL " : "FAIL ") << v.law
       << " witness";
    for (std::int64_t w : v.witness) os << ' ' << w;
    if (!v.detail.empty()) os << "  # " << v.detail;
    os << '\n';
  }
  return os.str();
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.objects != b.objects || a.morphisms.size() != b.morphisms.size())
    return false;
  for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
    if (a.morphisms[i].id != b.morphisms[i].id ||
        a.morphisms[i].dom != b.morphisms[i].dom ||
        a.morphisms[i].cod != b.morphisms[i].cod)
      return false;
  }
  return a.identity == b.identity && a.compose_table == b.compose_table;
}

MorId compose_chain(const FinCategory& c, const std::vector<MorId>& legs) {
  if (legs.empty()) throw std::logic_error("compose_chain: empty chain");
  MorId acc = legs[0];
  for (std::size_t i = 1; i < legs.size(); ++i) {
    if (!c.composable(acc, legs[i])) {
      std::ostringstream os;
      os << "compose_chain: leg " << i << " (mor " << legs[i].v
         << ", dom " << c.arrow(legs[i]).dom.v << ") does not follow cod "
         << c.arrow(acc).cod.v;
      throw std::logic_error(os.str());
    }
    acc = c.compose(acc, legs[i]);
  }
  return acc;
}

FinFunctor identity_functor(CatPtr c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  f.ob_map.resize(c->objects);
  for (std::uint32_t i = 0; i < c->objects; ++i) f.ob_map[i] = ObjId{i};
  f.mor_map.resize(c->morphism_count());
  for (std::uint32_t i = 0; i < c->morphism_count(); ++i) f.mor_map[i] = MorId{i};
  return f;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
  if (!f.target || !g.source || !(*f.target == *g.source))
    throw std::invalid_argument("compose_functors: middle categories differ");
  FinFunctor h;
  h.source = f.source;
  h.target = g.target;
  h.ob_map.reserve(f.ob_map.size());
  for (ObjId x : f.ob_map) h.ob_map.push_back(g.on_ob(x));
  h.mor_map.reserve(f.mor_map.size());
  for (MorId m : f.mor_map) h.mor_map.push_back(g.on_mor(m));
  return h;
}

NatTransform compose_nat(const NatTransform& s, const NatTransform& t) {
  NatTransform r;
  r.source = s.source;
  r.target = t.target;
  const FinCategory& d = *s.source.target;
  r.component.resize(s.component.size());
  for (std::size_t x = 0; x < s.component.size(); ++x) {
    r.component[x] = d.compose(s.component[x], t.component[x]);
  }
  return r;
}

namespace {

// Range and shape checks shared by the validators.  Returns false when the
// tables cannot be traversed safely.
bool category_structure(const FinCategory& c, ValidationReport& rep) {
  bool ok = true;
  const std::size_t m = c.morphisms.size();
  for (std::size_t i = 0; i < m; ++i) {
    const MorArrow& a = c.morphisms[i];
    if (a.id.v != i)
      rep.add(Severity::Structural, "MOR_ID", {(std::int64_t)i},
              "morphism id does not match its index"),
          ok = false;
    if (a.dom.v >= c.objects || a.cod.v >= c.objects)
      rep.add(Severity::Structural, "MOR_RANGE", {(std::int64_t)i},
              "dom/cod object out of range"),
          ok = false;
  }
  if (c.identity.size() != c.objects) {
    rep.add(Severity::Structural, "IDENTITY_SHAPE", {},
            "identity map size != object count");
    ok = false;
  } else {
    for (std::size_t x = 0; x < c.objects; ++x) {
      if (c.identity[x].v >= m) {
        rep.add(Severity::Structural, "IDENTITY_RANGE", {(std::int64_t)x},
                "identity morphism id out of range");
        ok = false;
      }
    }
  }
  if (c.compose_table.size() != m) {
    rep.add(Severity::Structural, "COMPOSE_SHAPE", {},
            "compose table row count != morphism count");
    return false;
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (c.compose_table[f].size() != m) {
      rep.add(Severity::Structural, "COMPOSE_SHAPE", {(std::int64_t)f},
              "compose table row has wrong length");
      return false;
    }
    for (std::size_t g = 0; g < m; ++g) {
      MorId h = c.compose_table[f][g];
      if (h != kNoMor && h.v >= m) {
        rep.add(Severity::Structural, "COMPOSE_RANGE",
                {(std::int64_t)f, (std::int64_t)g}, "composite id out of range");
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  if (!category_structure(c, rep)) return rep;
  if (rep.has_structural()) return rep;

  const std::size_t m = c.morphisms.size();
  for (std::size_t x = 0; x < c.objects; ++x) {
    const MorArrow& id = c.arrow(c.identity[x]);
    if (id.dom.v != x || id.cod.v != x)
      rep.add(Severity::Structural, "IDENTITY_TYPING", {(std::int64_t)x},
              "identity(x) must have dom = cod = x");
  }
  if (rep.has_structural()) return rep;

  // compose defined exactly on composable pairs, respecting dom/cod
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      MorId h = c.compose_table[f][g];
      bool comp = c.morphisms[f].cod == c.morphisms[g].dom;
      ++rep.checked;
      if (comp && h == kNoMor)
        rep.add(Severity::Structural, "COMPOSE_MISSING",
                {(std::int64_t)f, (std::int64_t)g},
                "composable pair has no composite");
      else if (!comp && h != kNoMor)
        rep.add(Severity::Structural, "COMPOSE_SPURIOUS",
                {(std::int64_t)f, (std::int64_t)g},
                "composite defined on non-composable pair");
      else if (comp && (c.arrow(h).dom != c.morphisms[f].dom ||
                        c.arrow(h).cod != c.morphisms[g].cod))
        rep.add(Severity::Structural, "COMPOSE_TYPING",
                {(std::int64_t)f, (std::int64_t)g},
                "composite has wrong dom/cod");
    }
  }
  if (rep.has_structural()) return rep;

  // unit laws
  for (std::size_t f = 0; f < m; ++f) {
    const MorArrow& a = c.morphisms[f];
    ++rep.checked;
    if (c.compose(c.identity[a.dom.v], MorId{(std::uint32_t)f}).v != f)
      rep.add(Severity::Law, "UNIT_LEFT", {(std::int64_t)f},
              "identity(dom f) . f != f");
    if (c.compose(MorId{(std::uint32_t)f}, c.identity[a.cod.v]).v != f)
      rep.add(Severity::Law, "UNIT_RIGHT", {(std::int64_t)f},
              "f . identity(cod f) != f");
  }

  // associativity over all composable triples
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (c.morphisms[f].cod != c.morphisms[g].dom) continue;
      MorId fg = c.compose_table[f][g];
      for (std::size_t h = 0; h < m; ++h) {
        if (c.morphisms[g].cod != c.morphisms[h].dom) continue;
        ++rep.checked;
        MorId gh = c.compose_table[g][h];
        if (c.compose(fg, MorId{(std::uint32_t)h}) !=
            c.compose(MorId{(std::uint32_t)f}, gh))
          rep.add(Severity::Law, "ASSOC",
                  {(std::int64_t)f, (std::int64_t)g, (std::int64_t)h},
                  "(fg)h != f(gh)");
      }
    }
  }
  return rep;
}

ValidationReport validate_functor(const FinFunctor& f) {
  ValidationReport rep;
  if (!f.source || !f.target) {
    rep.add(Severity::Structural, "FUNCTOR_SHAPE", {}, "missing source/target");
    return rep;
  }
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  if (f.ob_map.size() != c.objects || f.mor_map.size() != c.morphism_count()) {
    rep.add(Severity::Structural, "FUNCTOR_SHAPE", {},
            "map tables have wrong size");
    return rep;
  }
  for (std::size_t x = 0; x < c.objects; ++x)
    if (f.ob_map[x].v >= d.objects)
      rep.add(Severity::Structural, "FUNCTOR_RANGE", {(std::int64_t)x},
              "object image out of range");
  for (std::size_t i = 0; i < c.morphism_count(); ++i)
    if (f.mor_map[i].v >= d.morphism_count())
      rep.add(Severity::Structural, "FUNCTOR_RANGE", {(std::int64_t)i},
              "morphism image out of range");
  if (rep.has_structural()) return rep;

  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorArrow& a = c.morphisms[i];
    const MorArrow& b = d.arrow(f.mor_map[i]);
    ++rep.checked;
    if (b.dom != f.ob_map[a.dom.v] || b.cod != f.ob_map[a.cod.v])
      rep.add(Severity::Law, "FUNCTOR_DOMCOD", {(std::int64_t)i},
              "image has wrong dom/cod");
  }
  if (!rep.ok()) return rep;

  for (std::size_t x = 0; x < c.objects; ++x) {
    ++rep.checked;
    if (f.mor_map[c.identity[x].v] != d.identity[f.ob_map[x].v])
      rep.add(Severity::Law, "FUNCTOR_ID", {(std::int64_t)x},
              "identity not preserved");
  }
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    for (std::size_t j = 0; j < c.morphism_count(); ++j) {
      if (c.morphisms[i].cod != c.morphisms[j].dom) continue;
      ++rep.checked;
      MorId lhs = f.mor_map[c.compose_table[i][j].v];
      MorId rhs = d.compose(f.mor_map[i], f.mor_map[j]);
      if (lhs != rhs)
        rep.add(Severity::Law, "FUNCTOR_COMP", {(std::int64_t)i, (std::int64_t)j},
                "F(fg) != F(f)F(g)");
    }
  }
  return rep;
}

ValidationReport validate_nat(const NatTransform& t) {
  ValidationReport rep;
  const FinFunctor& f = t.source;
  const FinFunctor& g = t.target;
  if (!f.source || !g.source || !(*f.source == *g.source) ||
      !(*f.target == *g.target)) {
    rep.add(Severity::Structural, "NAT_SHAPE", {}, "functors not parallel");
    return rep;
  }
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  if (t.component.size() != c.objects) {
    rep.add(Severity::Structural, "NAT_SHAPE", {},
            "component count != object count");
    return rep;
  }
  for (std::size_t x = 0; x < c.objects; ++x) {
    if (t.component[x].v >= d.morphism_count()) {
      rep.add(Severity::Structural, "NAT_RANGE", {(std::int64_t)x},
              "component out of range");
      continue;
    }
    const MorArrow& a = d.arrow(t.component[x]);
    if (a.dom != f.ob_map[x] || a.cod != g.ob_map[x])
      rep.add(Severity::Structural, "NAT_TYPING", {(std::int64_t)x},
              "component must go F(x) -> G(x)");
  }
  if (rep.has_structural()) return rep;

  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorArrow& a = c.morphisms[i];
    ++rep.checked;
    MorId lhs = d.compose(f.mor_map[i], t.component[a.cod.v]);
    MorId rhs = d.compose(t.component[a.dom.v], g.mor_map[i]);
    if (lhs != rhs)
      rep.add(Severity::Law, "NAT_SQUARE", {(std::int64_t)i},
              "naturality square fails");
  }
  return rep;
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  FinCategory p;
  p.objects = c.objects * d.objects;
  const std::size_t mc = c.morphism_count(), md = d.morphism_count();
  p.morphisms.resize(mc * md);
  for (std::uint32_t i = 0; i < mc; ++i) {
    for (std::uint32_t j = 0; j < md; ++j) {
      std::uint32_t id = pair_index(i, j, md);
      p.morphisms[id] = {MorId{id},
                         ObjId{pair_index(c.morphisms[i].dom.v,
                                          d.morphisms[j].dom.v, d.objects)},
                         ObjId{pair_index(c.morphisms[i].cod.v,
                                          d.morphisms[j].cod.v, d.objects)}};
    }
  }
  p.identity.resize(p.objects);
  for (std::uint32_t x = 0; x < c.objects; ++x)
    for (std::uint32_t y = 0; y < d.objects; ++y)
      p.identity[pair_index(x, y, d.objects)] =
          MorId{pair_index(c.identity[x].v, d.identity[y].v, md)};
  p.compose_table.assign(mc * md, std::vector<MorId>(mc * md, kNoMor));
  for (std::uint32_t i = 0; i < mc; ++i)
    for (std::uint32_t j = 0; j < md; ++j)
      for (std::uint32_t k = 0; k < mc; ++k)
        for (std::uint32_t l = 0; l < md; ++l) {
          MorId a = c.compose_table[i][k];
          MorId b = d.compose_table[j][l];
          if (a != kNoMor && b != kNoMor)
            p.compose_table[pair_index(i, j, md)][pair_index(k, l, md)] =
                MorId{pair_index(a.v, b.v, md)};
        }
  return p;
}

FinCategory opposite_category(const FinCategory& c) {
  FinCategory o = c;
  for (MorArrow& a : o.morphisms) std::swap(a.dom, a.cod);
  const std::size_t m = c.morphism_count();
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      o.compose_table[f][g] = c.compose_table[g][f];
  return o;
}

FinCategory discrete_category(std::size_t n) {
  FinCategory c;
  c.objects = n;
  c.morphisms.resize(n);
  c.identity.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.morphisms[i] = {MorId{i}, ObjId{i}, ObjId{i}};
    c.identity[i] = MorId{i};
  }
  c.compose_table.assign(n, std::vector<MorId>(n, kNoMor));
  for (std::uint32_t i = 0; i < n; ++i) c.compose_table[i][i] = MorId{i};
  return c;
}

FinCategory terminal_category() { return discrete_category(1); }

std::optional<MorId> is_isomorphism(const FinCategory& c, MorId f) {
  const MorArrow& a = c.arrow(f);
  for (std::uint32_t g = 0; g < c.morphism_count(); ++g) {
    const MorArrow& b = c.morphisms[g];
    if (b.dom != a.cod || b.cod != a.dom) continue;
    if (c.compose(f, MorId{g}) == c.identity[a.dom.v] &&
        c.compose(MorId{g}, f) == c.identity[a.cod.v])
      return MorId{g};
  }
  return std::nullopt;
}

std::vector<std::optional<MorId>> morphism_inverses(const FinCategory& c) {
  std::vector<std::optional<MorId>> inv(c.morphism_count());
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f)
    inv[f] = is_isomorphism(c, MorId{f});
  return inv;
}

}  // namespace twogroups
