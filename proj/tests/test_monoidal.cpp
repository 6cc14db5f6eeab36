#include <map>

#include "doctest.h"
#include "twogroups/coherence.hpp"
#include "twogroups/monoidal.hpp"
#include "twogroups/twogroup.hpp"

using namespace twogroups;

namespace {

// deloop of Z_n with constant structure maps (a, l, r); valid only for
// certain constants, which is exactly what the negative tests rely on
MonoidalStructure deloop_with(const MulTable& t, std::uint32_t a, std::uint32_t l,
                              std::uint32_t r) {
  MonoidalStructure m = deloop_abelian(t, 0, 0).first;
  m.assoc = {MorId{a}};
  m.lunit = {MorId{l}};
  m.runit = {MorId{r}};
  return m;
}

}  // namespace

TEST_CASE("tensor_ob / tensor_mor are table lookups") {
  MonoidalStructure z3 = deloop_abelian(cyclic_group(3), 0, 0).first;
  CHECK(z3.tensor_mor(MorId{1}, MorId{1}) == MorId{2});
  CHECK(z3.tensor_ob(z3.unit, z3.unit) ==
        z3.base->arrow(z3.lunit_at(z3.unit)).dom);

  CoherentTwoGroup dz2 = from_group(cyclic_group(2));
  CHECK(dz2.m.tensor_ob(ObjId{1}, ObjId{1}) == ObjId{0});
}

TEST_CASE("check_pentagon: strict instances pass, constant associator fails") {
  MonoidalStructure s3 = from_group(symmetric3()).m;
  ValidationReport rep = check_pentagon(s3);
  CHECK(rep.ok());
  CHECK(rep.checked == 6 * 6 * 6 * 6);

  MonoidalStructure z3 = deloop_abelian(cyclic_group(3), 0, 0).first;
  rep = check_pentagon(z3);
  CHECK(rep.ok());
  CHECK(rep.checked == 1);

  // a == 1: left side of the pentagon is 1+1+1 = 0, right side 1+1 = 2
  MonoidalStructure bad = deloop_with(cyclic_group(3), 1, 0, 0);
  rep = check_pentagon(bad);
  CHECK(!rep.ok());
  CHECK(rep.violations.front().law == "PENTAGON");
}

TEST_CASE("check_triangle: strict passes, l == 1 fails") {
  MonoidalStructure z3 = deloop_abelian(cyclic_group(3), 0, 0).first;
  ValidationReport rep = check_triangle(z3);
  CHECK(rep.ok());
  CHECK(rep.checked == 1);

  CoherentTwoGroup z4 = from_group(cyclic_group(4));
  rep = check_triangle(z4.m);
  CHECK(rep.ok());
  CHECK(rep.checked == 16);

  MonoidalStructure bad = deloop_with(cyclic_group(3), 0, 1, 0);
  rep = check_triangle(bad);
  CHECK(!rep.ok());
  CHECK(rep.violations.front().law == "TRIANGLE");
}

TEST_CASE("validate_monoidal over the generator suite") {
  for (std::size_t n : {2, 3, 4}) {
    CHECK(validate_monoidal(deloop_abelian(cyclic_group(n), 0, 0).first).ok());
    CHECK(validate_monoidal(from_group(cyclic_group(n)).m).ok());
  }
  CHECK(validate_monoidal(from_group(symmetric3()).m).ok());
}

TEST_CASE("validate_monoidal: corrupted tensor cell fails with witness") {
  MonoidalStructure z3 = deloop_abelian(cyclic_group(3), 0, 0).first;
  z3.tensor.mor_map[1 * 3 + 1] = MorId{0};  // 1(x)1 should be 2
  ValidationReport rep = validate_monoidal(z3);
  CHECK(!rep.ok());
}

TEST_CASE("is_strict") {
  CHECK(is_strict(from_group(cyclic_group(2)).m));
  CHECK(is_strict(deloop_abelian(cyclic_group(3), 1, 1).first));
  CHECK(!is_strict(deloop_with(cyclic_group(3), 0, 1, 1)));
}

TEST_CASE("deloop with l = r = 1 is a valid non-strict instance") {
  MonoidalStructure m = deloop_with(cyclic_group(3), 0, 1, 1);
  CHECK(validate_monoidal(m).ok());
  CHECK(!is_strict(m));
}

namespace {

// every parenthesized word over the instance's objects, frontier fixed;
// used by the Mac Lane spot check
void all_trees(const std::vector<ObjId>& word, std::size_t lo, std::size_t hi,
               std::vector<TreePtr>& out) {
  if (hi - lo == 1) {
    out.push_back(WordTree::of(word[lo]));
    return;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    std::vector<TreePtr> ls, rs;
    all_trees(word, lo, mid, ls);
    all_trees(word, mid, hi, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(WordTree::node(l, r));
  }
}

std::string tree_key(const TreePtr& t) {
  if (t->leaf) return t->unit_leaf ? "1" : "o" + std::to_string(t->obj.v);
  return "(" + tree_key(t->left) + tree_key(t->right) + ")";
}

struct Move {
  TreePtr to;
  MorId mor;
};

void local_moves(const CoherenceContext& ctx, const TreePtr& t,
                 std::vector<Move>& out);

// single structural step at the root: one associator, one unitor, or one
// unit insertion
void root_moves(const CoherenceContext& ctx, const TreePtr& t,
                std::vector<Move>& out) {
  const MonoidalStructure& m = ctx.structure();
  if (!t->leaf) {
    const TreePtr &a = t->left, &b = t->right;
    if (!a->leaf) {
      TreePtr to = WordTree::node(a->left, WordTree::node(a->right, b));
      out.push_back({to, m.assoc_at(tree_object(m, a->left),
                                    tree_object(m, a->right),
                                    tree_object(m, b))});
    }
    if (!b->leaf) {
      TreePtr to = WordTree::node(WordTree::node(a, b->left), b->right);
      out.push_back({to, ctx.invert(m.assoc_at(tree_object(m, a),
                                               tree_object(m, b->left),
                                               tree_object(m, b->right)))});
    }
    if (a->leaf && a->unit_leaf)
      out.push_back({b, m.lunit_at(tree_object(m, b))});
    if (b->leaf && b->unit_leaf)
      out.push_back({a, m.runit_at(tree_object(m, a))});
  }
  out.push_back({WordTree::node(WordTree::one(), t),
                 ctx.invert(m.lunit_at(tree_object(m, t)))});
  out.push_back({WordTree::node(t, WordTree::one()),
                 ctx.invert(m.runit_at(tree_object(m, t)))});
}

void local_moves(const CoherenceContext& ctx, const TreePtr& t,
                 std::vector<Move>& out) {
  const MonoidalStructure& m = ctx.structure();
  const FinCategory& c = ctx.cat();
  root_moves(ctx, t, out);
  if (t->leaf) return;
  std::vector<Move> ls, rs;
  local_moves(ctx, t->left, ls);
  local_moves(ctx, t->right, rs);
  for (const Move& mv : ls)
    out.push_back({WordTree::node(mv.to, t->right),
                   m.tensor_mor(mv.mor, c.identity_of(tree_object(m, t->right)))});
  for (const Move& mv : rs)
    out.push_back({WordTree::node(t->left, mv.to),
                   m.tensor_mor(c.identity_of(tree_object(m, t->left)), mv.mor)});
}

std::size_t leaf_count(const TreePtr& t) {
  if (t->leaf) return 1;
  return leaf_count(t->left) + leaf_count(t->right);
}

// BFS over trees with the same frontier; every path between two trees must
// produce the same structural morphism, and it must match coherence_iso
void spot_check(const MonoidalStructure& m, const std::vector<ObjId>& word,
                std::size_t max_units) {
  CoherenceContext ctx(m);
  std::vector<TreePtr> roots;
  if (word.empty())
    roots.push_back(WordTree::one());
  else
    all_trees(word, 0, word.size(), roots);
  REQUIRE(!roots.empty());
  TreePtr start = roots.front();

  std::map<std::string, std::pair<TreePtr, MorId>> seen;
  std::vector<TreePtr> frontier = {start};
  seen[tree_key(start)] = {start, m.base->identity_of(tree_object(m, start))};
  std::size_t base_leaves = leaf_count(start);
  while (!frontier.empty()) {
    std::vector<TreePtr> next;
    for (const TreePtr& t : frontier) {
      MorId here = seen[tree_key(t)].second;
      std::vector<Move> moves;
      local_moves(ctx, t, moves);
      for (const Move& mv : moves) {
        if (leaf_count(mv.to) > base_leaves + max_units) continue;
        MorId there = m.base->compose(here, mv.mor);
        auto it = seen.find(tree_key(mv.to));
        if (it == seen.end()) {
          seen[tree_key(mv.to)] = {mv.to, there};
          next.push_back(mv.to);
        } else {
          CHECK(it->second.second == there);  // Mac Lane: all routes agree
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [key, val] : seen) {
    CHECK(ctx.coherence_iso(start, val.first) == val.second);
  }
  for (const TreePtr& r : roots) CHECK(seen.count(tree_key(r)) == 1);
}

}  // namespace

TEST_CASE("Mac Lane spot check on words of length <= 4") {
  MonoidalStructure nonstrict = deloop_with(cyclic_group(3), 0, 1, 1);
  REQUIRE(validate_monoidal(nonstrict).ok());
  ObjId o{0};
  spot_check(nonstrict, {}, 2);
  spot_check(nonstrict, {o}, 2);
  spot_check(nonstrict, {o, o}, 2);
  spot_check(nonstrict, {o, o, o}, 1);
  spot_check(nonstrict, {o, o, o, o}, 1);

  CoherentTwoGroup z2 = from_group(cyclic_group(2));
  spot_check(z2.m, {ObjId{0}, ObjId{1}, ObjId{1}}, 1);
  spot_check(z2.m, {ObjId{1}, ObjId{1}, ObjId{1}, ObjId{0}}, 1);
}

TEST_CASE("strictness implies pentagon and triangle pass") {
  for (std::size_t n : {2, 3, 5}) {
    MonoidalStructure m = from_group(cyclic_group(n)).m;
    REQUIRE(is_strict(m));
    CHECK(check_pentagon(m).ok());
    CHECK(check_triangle(m).ok());
  }
}
