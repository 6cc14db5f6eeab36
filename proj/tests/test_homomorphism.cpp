#include "doctest.h"
#include "twogroups/homomorphism.hpp"
#include "twogroups/improve.hpp"

using namespace twogroups;

namespace {

CoherentTwoGroup deloop_group(const MulTable& t, std::uint32_t i, std::uint32_t e) {
  auto [m, d] = deloop_abelian(t, i, e);
  return CoherentTwoGroup{std::move(m), std::move(d)};
}

// endofunctor of deloop(Z_n): identity underlying functor, F2 == c, F0 = f0
MonoidalFunctor deloop_endofunctor(const MonoidalStructure& m, std::uint32_t c,
                                   std::uint32_t f0) {
  MonoidalFunctor fm;
  fm.f = identity_functor(m.base);
  fm.f2 = {MorId{c}};
  fm.f0 = MorId{f0};
  return fm;
}

// oracle: composites in deloop(Z_n) are sums of their non-structural legs
std::uint32_t znm(std::uint32_t n, long v) {
  long r = v % (long)n;
  if (r < 0) r += n;
  return (std::uint32_t)r;
}

}  // namespace

TEST_CASE("validate_monoidal_functor on deloop(Z3): F0 = -c forced") {
  MonoidalStructure m = deloop_group(cyclic_group(3), 1, 2).m;
  for (std::uint32_t c = 0; c < 3; ++c) {
    CHECK(validate_monoidal_functor(m, m, deloop_endofunctor(m, c, znm(3, -(long)c)))
              .ok());
  }
  ValidationReport rep = validate_monoidal_functor(m, m, deloop_endofunctor(m, 1, 1));
  CHECK(!rep.ok());
  CHECK(rep.has("F_UNIT_L"));
  CHECK(rep.has("F_UNIT_R"));
  CHECK(!rep.has("F_ASSOC_SQUARE"));  // c+c = c+c holds regardless
}

TEST_CASE("validate_monoidal_functor: identity functor passes everywhere") {
  std::vector<CoherentTwoGroup> gs = {from_group(cyclic_group(2)),
                                      from_group(symmetric3()),
                                      deloop_group(cyclic_group(5), 2, 3)};
  for (const auto& g : gs) {
    MonoidalFunctor id = identity_monoidal_functor(g.m);
    CHECK(validate_monoidal_functor(g.m, g.m, id).ok());
  }
}

TEST_CASE("validate_monoidal_nat on deloop(Z3): first square forces theta = 0") {
  MonoidalStructure m = deloop_group(cyclic_group(3), 1, 2).m;
  MonoidalFunctor f = deloop_endofunctor(m, 1, 2);
  MonoidalFunctor g = deloop_endofunctor(m, 1, 2);
  REQUIRE(validate_monoidal_functor(m, m, f).ok());

  for (std::uint32_t d = 0; d < 3; ++d) {
    MonoidalNatTransform th;
    th.t.source = f.f;
    th.t.target = g.f;
    th.t.component = {MorId{d}};
    ValidationReport rep = validate_monoidal_nat(m, m, f, g, th);
    // d + d + 1 = 1 + d forces d = 0
    CHECK(rep.ok() == (d == 0));
    if (d != 0) CHECK(rep.has("MNAT_TENSOR"));
  }
}

TEST_CASE("compose_monoidal_functors: identities and component addition") {
  MonoidalStructure m = deloop_group(cyclic_group(3), 1, 2).m;
  MonoidalFunctor f = deloop_endofunctor(m, 1, 2);
  MonoidalFunctor g = deloop_endofunctor(m, 2, 1);
  MonoidalFunctor id = identity_monoidal_functor(m);

  MonoidalFunctor fid = compose_monoidal_functors(m, m, m, f, id);
  CHECK(fid.f2 == f.f2);
  CHECK(fid.f0 == f.f0);
  MonoidalFunctor idf = compose_monoidal_functors(m, m, m, id, f);
  CHECK(idf.f2 == f.f2);
  CHECK(idf.f0 == f.f0);

  MonoidalFunctor fg = compose_monoidal_functors(m, m, m, f, g);
  CHECK(fg.f2 == std::vector<MorId>{MorId{0}});  // 1 + 2
  CHECK(validate_monoidal_functor(m, m, fg).ok());
}

TEST_CASE("composite of validated functors validates (category laws)") {
  MonoidalStructure m = deloop_group(cyclic_group(5), 2, 3).m;
  MonoidalFunctor f = deloop_endofunctor(m, 1, 4);
  MonoidalFunctor g = deloop_endofunctor(m, 3, 2);
  MonoidalFunctor h = deloop_endofunctor(m, 2, 3);
  REQUIRE(validate_monoidal_functor(m, m, f).ok());
  REQUIRE(validate_monoidal_functor(m, m, g).ok());
  CHECK(validate_monoidal_functor(m, m, compose_monoidal_functors(m, m, m, f, g)).ok());

  // associativity of composition, on the tables
  MonoidalFunctor ab = compose_monoidal_functors(m, m, m, f, g);
  MonoidalFunctor bc = compose_monoidal_functors(m, m, m, g, h);
  MonoidalFunctor l = compose_monoidal_functors(m, m, m, ab, h);
  MonoidalFunctor r = compose_monoidal_functors(m, m, m, f, bc);
  CHECK(l.f2 == r.f2);
  CHECK(l.f0 == r.f0);
  CHECK(l.f.ob_map == r.f.ob_map);
  CHECK(l.f.mor_map == r.f.mor_map);
}

TEST_CASE("2-homomorphisms compose vertically and stay monoidal") {
  MonoidalStructure m = deloop_group(cyclic_group(3), 1, 2).m;
  MonoidalFunctor f = deloop_endofunctor(m, 1, 2);
  MonoidalNatTransform a, b;
  a.t.source = f.f;
  a.t.target = f.f;
  a.t.component = {MorId{0}};
  b = a;
  NatTransform ab = compose_nat(a.t, b.t);
  MonoidalNatTransform th;
  th.t = ab;
  CHECK(validate_monoidal_nat(m, m, f, f, th).ok());
}

TEST_CASE("preserved_weak_inverse") {
  MonoidalStructure m = deloop_group(cyclic_group(3), 1, 2).m;
  // identity functor returns (xi, gamma) unchanged
  MonoidalFunctor id = identity_monoidal_functor(m);
  auto [xi1, ga1] = preserved_weak_inverse(m, m, id, ObjId{0}, ObjId{0},
                                           MorId{2}, MorId{1});
  CHECK(xi1 == MorId{1});
  CHECK(ga1 == MorId{2});

  // c = 1 functor, gamma = xi = 2: each output is 1 + 2 + 1 = 1
  MonoidalFunctor f = deloop_endofunctor(m, 1, 2);
  auto [xi2, ga2] = preserved_weak_inverse(m, m, f, ObjId{0}, ObjId{0},
                                           MorId{2}, MorId{2});
  CHECK(xi2 == MorId{1});
  CHECK(ga2 == MorId{1});

  // strict Z2 group functor: identities map to identities
  CoherentTwoGroup z2 = from_group(cyclic_group(2));
  MonoidalFunctor idz = identity_monoidal_functor(z2.m);
  auto [xi3, ga3] = preserved_weak_inverse(
      z2.m, z2.m, idz, ObjId{1}, ObjId{1}, z2.m.base->identity_of(ObjId{0}),
      z2.m.base->identity_of(ObjId{0}));
  CHECK(xi3 == z2.m.base->identity_of(ObjId{0}));
  CHECK(ga3 == z2.m.base->identity_of(ObjId{0}));

  // outputs are isomorphisms
  CHECK(is_isomorphism(*m.base, xi2).has_value());

  // mistyped witnesses rejected
  CHECK_THROWS_AS(preserved_weak_inverse(z2.m, z2.m, idz, ObjId{1}, ObjId{0},
                                         z2.m.base->identity_of(ObjId{0}),
                                         z2.m.base->identity_of(ObjId{0})),
                  std::invalid_argument);
}

TEST_CASE("F_-1: identity homomorphism on a strict group gives the identity") {
  CoherentTwoGroup z2 = from_group(cyclic_group(2));
  MonoidalFunctor id = identity_monoidal_functor(z2.m);
  for (std::uint32_t x = 0; x < 2; ++x) {
    MorId v1 = f_minus_one_f1(z2, z2, id, ObjId{x});
    CHECK(v1 == z2.m.base->identity_of(z2.data.dual[x]));
    CHECK(f_minus_one_f1prime(z2, z2, id, ObjId{x}) == v1);
    CHECK(f_minus_one_f2(z2, z2, id, ObjId{x}) == v1);
    CHECK(check_h1(z2, z2, id, ObjId{x}, v1));
    CHECK(check_h2(z2, z2, id, ObjId{x}, v1));
  }
}

TEST_CASE("F_-1 on deloop(Z3): oracle i_s - i_t + F0 - c, all three agree") {
  MulTable z3 = cyclic_group(3);
  // sources and targets range over the coherent choices (e = -i)
  for (std::uint32_t is = 0; is < 3; ++is)
    for (std::uint32_t it = 0; it < 3; ++it)
      for (std::uint32_t c = 0; c < 3; ++c) {
        CoherentTwoGroup src = deloop_group(z3, is, znm(3, -(long)is));
        CoherentTwoGroup tgt = deloop_group(z3, it, znm(3, -(long)it));
        std::uint32_t f0 = znm(3, -(long)c);
        MonoidalFunctor fm = deloop_endofunctor(src.m, c, f0);
        REQUIRE(validate_monoidal_functor(src.m, tgt.m, fm).ok());

        MorId want{znm(3, (long)is - (long)it + (long)f0 - (long)c)};
        MorId v1 = f_minus_one_f1(src, tgt, fm, ObjId{0});
        MorId v1p = f_minus_one_f1prime(src, tgt, fm, ObjId{0});
        MorId v2 = f_minus_one_f2(src, tgt, fm, ObjId{0});
        CHECK(v1 == want);
        CHECK(v1p == want);
        CHECK(v2 == want);
        CHECK(check_h1(src, tgt, fm, ObjId{0}, v1));
        CHECK(check_h2(src, tgt, fm, ObjId{0}, v1));
      }
}

TEST_CASE("F_-1 pinned cases: c = 0 and c = 1 on deloop(Z3) data (1,2)") {
  MulTable z3 = cyclic_group(3);
  CoherentTwoGroup g = deloop_group(z3, 1, 2);
  MonoidalFunctor f0 = deloop_endofunctor(g.m, 0, 0);
  CHECK(f_minus_one_f1(g, g, f0, ObjId{0}) == MorId{0});
  CHECK(f_minus_one_f2(g, g, f0, ObjId{0}) == MorId{0});

  MonoidalFunctor f1 = deloop_endofunctor(g.m, 1, 2);
  MorId v = f_minus_one_f1(g, g, f1, ObjId{0});
  // oracle: i_s - i_t + F0 - c = 1 - 1 + 2 - 1 = 1
  CHECK(v == MorId{1});
  CHECK(f_minus_one_f2(g, g, f1, ObjId{0}) == v);
}

TEST_CASE("F1 and F1' differ when the target zig-zag fails") {
  // F1 = F1' is exactly the target's second zig-zag; break it
  MulTable z3 = cyclic_group(3);
  CoherentTwoGroup src = deloop_group(z3, 1, 2);
  CoherentTwoGroup tgt = deloop_group(z3, 1, 1);  // i+e != 0
  MonoidalFunctor id = deloop_endofunctor(src.m, 0, 0);
  MorId v1 = f_minus_one_f1(src, tgt, id, ObjId{0});
  MorId v1p = f_minus_one_f1prime(src, tgt, id, ObjId{0});
  CHECK(v1 != v1p);
}

TEST_CASE("H1/H2 reject a wrong candidate") {
  CoherentTwoGroup g = deloop_group(cyclic_group(3), 1, 2);
  MonoidalFunctor id = identity_monoidal_functor(g.m);
  MorId good = f_minus_one_f1(g, g, id, ObjId{0});
  MorId bad{(good.v + 1) % 3};
  CHECK(check_h1(g, g, id, ObjId{0}, good));
  CHECK(!check_h1(g, g, id, ObjId{0}, bad));
  CHECK(check_h2(g, g, id, ObjId{0}, good));
  CHECK(!check_h2(g, g, id, ObjId{0}, bad));
}

#include "instances_testutil.hpp"

TEST_CASE("F_-1 agreement across anomalous Z2 data variants") {
  for (int vs = 0; vs < 3; ++vs)
    for (int vt = 0; vt < 3; ++vt) {
      CoherentTwoGroup src = anomalous_z2(vs);
      CoherentTwoGroup tgt = anomalous_z2(vt);
      REQUIRE(validate_coherent(src).ok());
      REQUIRE(validate_coherent(tgt).ok());
      MonoidalFunctor id = identity_monoidal_functor(src.m);
      REQUIRE(validate_monoidal_functor(src.m, tgt.m, id).ok());
      for (std::uint32_t x = 0; x < 2; ++x) {
        MorId v1 = f_minus_one_f1(src, tgt, id, ObjId{x});
        CHECK(v1 == f_minus_one_f1prime(src, tgt, id, ObjId{x}));
        CHECK(v1 == f_minus_one_f2(src, tgt, id, ObjId{x}));
        CHECK(check_h1(src, tgt, id, ObjId{x}, v1));
        CHECK(check_h2(src, tgt, id, ObjId{x}, v1));
      }
    }
}
