#include "doctest.h"
#include "twogroups/twogroup.hpp"

using namespace twogroups;

namespace {

// {1, s} with s*s = s: a monoid that is not a group
MulTable idempotent_monoid() {
  MulTable t;
  t.order = 2;
  t.table = {0, 1, 1, 1};
  return t;
}

int zn_zigzag_sum(const MulTable& t, std::uint32_t i, std::uint32_t e) {
  return static_cast<int>(t.mul(i, e));
}

// deloop evaluation oracle: in deloop(Z_n) with zero structure maps, a
// composite of morphisms is just the sum of its non-structural legs
CoherentTwoGroup deloop_group(const MulTable& t, std::uint32_t i, std::uint32_t e) {
  auto [m, d] = deloop_abelian(t, i, e);
  return CoherentTwoGroup{std::move(m), std::move(d)};
}

}  // namespace

TEST_CASE("from_group validates on Z2, Z3, S3") {
  for (auto t : {cyclic_group(2), cyclic_group(3), symmetric3()}) {
    CoherentTwoGroup g = from_group(t);
    CHECK(validate_coherent(g).ok());
    CHECK(is_strict(g.m));
  }
  CHECK_THROWS_AS(from_group(idempotent_monoid()), std::invalid_argument);
}

TEST_CASE("deloop_abelian: coherent for i+e = 0, weak otherwise") {
  CHECK(validate_coherent(deloop_group(cyclic_group(3), 1, 2)).ok());
  CHECK(validate_coherent(deloop_group(cyclic_group(3), 0, 0)).ok());

  CoherentTwoGroup bad = deloop_group(cyclic_group(3), 1, 1);
  ValidationReport rep = validate_coherent(bad);
  CHECK(!rep.ok());
  CHECK(rep.has("ZIGZAG1"));
  CHECK(rep.has("ZIGZAG2"));
  // still a weak 2-group
  CHECK(validate_monoidal(bad.m).ok());
  CHECK(check_weak_2group(bad.m).group.has_value());

  MulTable s3 = symmetric3();
  CHECK_THROWS_AS(deloop_abelian(s3, 0, 0), std::invalid_argument);
}

TEST_CASE("check_zigzags matches the i+e oracle on deloop(Z3)") {
  MulTable z3 = cyclic_group(3);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t e = 0; e < 3; ++e) {
      auto [m, d] = deloop_abelian(z3, i, e);
      ValidationReport rep = check_zigzags(m, d);
      bool want_pass = zn_zigzag_sum(z3, i, e) == 0;
      CHECK(rep.ok() == want_pass);
      if (!want_pass) {
        CHECK(rep.has("ZIGZAG1"));
        CHECK(rep.has("ZIGZAG2"));
      }
    }
}

TEST_CASE("check_zigzags: strict group data passes; mistyped data structural") {
  CoherentTwoGroup g = from_group(cyclic_group(4));
  CHECK(check_zigzags(g.m, g.data).ok());

  CoherentData broken = g.data;
  broken.unit_i[1] = g.m.base->identity_of(ObjId{1});  // wrong dom/cod
  CHECK(check_zigzags(g.m, broken).has_structural());
}

TEST_CASE("check_weak_2group: groups certify, idempotent monoid fails") {
  WeakCertification c1 = check_weak_2group(from_group(cyclic_group(2)).m);
  REQUIRE(c1.group.has_value());
  for (std::uint32_t x = 0; x < 2; ++x) {
    CHECK(c1.group->object_witness[x].dual == ObjId{(2 - x) % 2});
    CHECK(c1.group->object_witness[x].unit_iso ==
          c1.group->m.base->identity_of(ObjId{0}));
  }

  WeakCertification c2 =
      check_weak_2group(deloop_abelian(cyclic_group(3), 0, 0).first);
  REQUIRE(c2.group.has_value());
  CHECK(c2.group->object_witness[0].dual == ObjId{0});

  MonoidalStructure mon = discrete_monoidal(idempotent_monoid());
  REQUIRE(validate_monoidal(mon).ok());
  WeakCertification c3 = check_weak_2group(mon);
  CHECK(!c3.group.has_value());
  CHECK(c3.report.has("NO_WEAK_INVERSE"));
  // the failing object is s (index 1)
  bool found = false;
  for (const auto& v : c3.report.violations)
    if (v.law == "NO_WEAK_INVERSE") {
      CHECK(v.witness == std::vector<std::int64_t>{1});
      found = true;
    }
  CHECK(found);
}

TEST_CASE("find_weak_inverse: unit object, first-hit determinism") {
  MonoidalStructure z2 = from_group(cyclic_group(2)).m;
  auto w = find_weak_inverse(z2, ObjId{0});
  REQUIRE(w.has_value());
  CHECK(w->y == ObjId{0});
  CHECK(w->gamma == z2.lunit_at(ObjId{0}));
  CHECK(w->xi == z2.lunit_at(ObjId{0}));

  MonoidalStructure z3 = deloop_abelian(cyclic_group(3), 0, 0).first;
  auto v = find_weak_inverse(z3, ObjId{0});
  REQUIRE(v.has_value());
  CHECK(v->y == ObjId{0});
  CHECK(v->gamma == MorId{0});  // ascending morphism id
  CHECK(v->xi == MorId{0});

  MonoidalStructure mon = discrete_monoidal(idempotent_monoid());
  CHECK(!find_weak_inverse(mon, ObjId{1}).has_value());
}

TEST_CASE("inverse_functor: f maps to its inverse, functorially") {
  CoherentTwoGroup g = deloop_group(cyclic_group(3), 1, 2);
  FinFunctor inv = inverse_functor(g);
  CHECK(inv.mor_map[0] == MorId{0});
  CHECK(inv.mor_map[1] == MorId{2});
  CHECK(inv.mor_map[2] == MorId{1});
  CHECK(validate_functor(inv).ok());
  // (1.1)^-1 = 2^-1 = 1 = 1^-1 . 1^-1 reversed
  const FinCategory& c = *g.m.base;
  CHECK(inv.mor_map[c.compose(MorId{1}, MorId{1}).v] ==
        c.compose(inv.mor_map[1], inv.mor_map[1]));

  CoherentTwoGroup s3 = from_group(symmetric3());
  CHECK(validate_functor(inverse_functor(s3)).ok());
}

TEST_CASE("star_functor on deloop(Z3): *(f) = i + f + e") {
  MulTable z3 = cyclic_group(3);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t e = 0; e < 3; ++e) {
      CoherentTwoGroup g = deloop_group(z3, i, e);
      FinFunctor star = star_functor(g);
      for (std::uint32_t f = 0; f < 3; ++f) {
        std::uint32_t want = (i + f + e) % 3;
        CHECK(star.mor_map[f] == MorId{want});
      }
    }
  // i = 1, e = 2: *(f) = f; i = e = 1: *(f) = f + 2
  CoherentTwoGroup a = deloop_group(z3, 1, 2);
  CHECK(star_functor(a).mor_map[1] == MorId{1});
  CoherentTwoGroup b = deloop_group(z3, 1, 1);
  CHECK(star_functor(b).mor_map[1] == MorId{0});

  // strict group: identities map to the identity of the dual
  CoherentTwoGroup s3 = from_group(symmetric3());
  FinFunctor star = star_functor(s3);
  for (std::uint32_t x = 0; x < 6; ++x)
    CHECK(star.mor_map[s3.m.base->identity_of(ObjId{x}).v] ==
          s3.m.base->identity_of(s3.data.dual[x]));
}

TEST_CASE("inv_functor: covariant composite of ^-1 and *") {
  MulTable z3 = cyclic_group(3);
  CoherentTwoGroup g = deloop_group(z3, 1, 2);
  FinFunctor inv = inv_functor(g);
  for (std::uint32_t f = 0; f < 3; ++f)
    CHECK(inv.mor_map[f] == MorId{(3 - f) % 3});  // inv(f) = -f

  CoherentTwoGroup z2 = from_group(cyclic_group(2));
  FinFunctor iz2 = inv_functor(z2);
  CHECK(iz2.ob_map[1] == ObjId{1});
  for (std::uint32_t f = 0; f < 2; ++f) CHECK(iz2.mor_map[f] == MorId{f});
  CHECK(validate_functor(iz2).ok());
}

TEST_CASE("check_inv_functorial agrees with the zig-zag status") {
  MulTable z3 = cyclic_group(3);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t e = 0; e < 3; ++e) {
      CoherentTwoGroup g = deloop_group(z3, i, e);
      bool zz = check_zigzags(g.m, g.data).ok();
      bool fun = check_inv_functorial(g).ok();
      CHECK(zz == fun);
    }
  CHECK(check_inv_functorial(from_group(cyclic_group(2))).ok());
  CHECK(check_inv_functorial(from_group(symmetric3())).ok());
}

TEST_CASE("zig-zag 1 holds iff zig-zag 2 holds (isomorphism data)") {
  for (std::size_t n : {3, 4, 5}) {
    MulTable t = cyclic_group(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t e = 0; e < n; ++e) {
        auto [m, d] = deloop_abelian(t, i, e);
        ValidationReport rep = check_zigzags(m, d);
        CHECK(rep.has("ZIGZAG1") == rep.has("ZIGZAG2"));
      }
  }
}

TEST_CASE("crossed module: validation and degenerate cases") {
  // (G = Z2, H = Z2, t = id, alpha trivial)
  CrossedModule x;
  x.g = cyclic_group(2);
  x.h = cyclic_group(2);
  x.t = {0, 1};
  x.action = {0, 1, 0, 1};
  CHECK(validate_crossed_module(x).ok());
  CoherentTwoGroup g = from_crossed_module(x);
  CHECK(g.m.object_count() == 2);
  CHECK(g.m.base->morphism_count() == 4);
  CHECK(is_strict(g.m));
  CHECK(validate_coherent(g).ok());

  // (G = Z2, H = trivial) reduces to from_group(Z2)
  CrossedModule deg1;
  deg1.g = cyclic_group(2);
  deg1.h = cyclic_group(1);
  deg1.t = {0};
  deg1.action = {0, 0};
  CoherentTwoGroup a = from_crossed_module(deg1);
  CoherentTwoGroup b = from_group(cyclic_group(2));
  CHECK(a.m == b.m);
  CHECK(a.data.dual == b.data.dual);
  CHECK(a.data.unit_i == b.data.unit_i);

  // (G = trivial, H = Z3) reduces to deloop_abelian(Z3, 0, 0)
  CrossedModule deg2;
  deg2.g = cyclic_group(1);
  deg2.h = cyclic_group(3);
  deg2.t = {0, 0, 0};
  deg2.action = {0, 1, 2};
  CoherentTwoGroup c = from_crossed_module(deg2);
  auto [m0, d0] = deloop_abelian(cyclic_group(3), 0, 0);
  CHECK(c.m == m0);
  CHECK(c.data.dual == d0.dual);

  // violated Peiffer identity rejected: t = 0 with conjugation-free action
  // on a *nonabelian* H would break; fake it by corrupting t on Z2 x Z2
  CrossedModule bad = x;
  bad.t = {0, 0};
  // now equivariance holds trivially but the Peiffer identity needs
  // alpha(t(h), h') = h h' h^-1 = h'; it still holds (abelian H), so break
  // the action shape instead
  bad.action = {0, 1, 1, 0};  // g=1 acts by swap; equivariance fails
  CHECK(!validate_crossed_module(bad).ok());
  CHECK_THROWS_AS(from_crossed_module(bad), std::invalid_argument);
}

TEST_CASE("from_crossed_module: S3-action instance is strict and coherent") {
  // G = Z2 acting on H = Z3 by inversion, t trivial
  CrossedModule x;
  x.g = cyclic_group(2);
  x.h = cyclic_group(3);
  x.t = {0, 0, 0};
  x.action = {0, 1, 2, 0, 2, 1};
  REQUIRE(validate_crossed_module(x).ok());
  CoherentTwoGroup g = from_crossed_module(x);
  CHECK(is_strict(g.m));
  CHECK(validate_coherent(g).ok());
  CHECK(g.m.base->morphism_count() == 6);
}

TEST_CASE("weak inverse exists for every object of coherent instances") {
  std::vector<CoherentTwoGroup> gs;
  gs.push_back(from_group(cyclic_group(2)));
  gs.push_back(from_group(symmetric3()));
  gs.push_back(deloop_group(cyclic_group(3), 1, 2));
  CrossedModule x;
  x.g = cyclic_group(2);
  x.h = cyclic_group(2);
  x.t = {0, 1};
  x.action = {0, 1, 0, 1};
  gs.push_back(from_crossed_module(x));
  for (const auto& g : gs) {
    REQUIRE(validate_coherent(g).ok());
    for (std::uint32_t ob = 0; ob < g.m.object_count(); ++ob)
      CHECK(find_weak_inverse(g.m, ObjId{ob}).has_value());
  }
}

#include "instances_testutil.hpp"

TEST_CASE("anomalous Z2: valid, non-strict, coherent for the right data") {
  MonoidalStructure m = anomalous_z2_structure();
  CHECK(validate_monoidal(m).ok());
  CHECK(!is_strict(m));

  for (int v = 0; v < 3; ++v) {
    CoherentTwoGroup g = anomalous_z2(v);
    CHECK(validate_coherent(g).ok());
    CHECK(check_inv_functorial(g).ok());
  }

  // phaseless data fails the zig-zag at object 1 (the cocycle is 1 there)
  CoherentTwoGroup bad = anomalous_z2(0);
  bad.data.unit_i[1] = m.base->identity_of(ObjId{0});
  ValidationReport rep = validate_coherent(bad);
  CHECK(!rep.ok());
  CHECK(rep.has("ZIGZAG1"));
  for (const auto& v : rep.violations)
    CHECK((v.law == "ZIGZAG1" || v.law == "ZIGZAG2"));
  // and zig-zag failure again matches inv-functoriality failure
  CHECK(!check_inv_functorial(bad).ok());
}

TEST_CASE("validate_coherent on deloop(Z3,1,1) fails zig-zags only") {
  auto [m, d] = deloop_abelian(cyclic_group(3), 1, 1);
  ValidationReport rep = validate_coherent(CoherentTwoGroup{m, d});
  REQUIRE(!rep.ok());
  for (const auto& v : rep.violations)
    CHECK((v.law == "ZIGZAG1" || v.law == "ZIGZAG2"));
}
