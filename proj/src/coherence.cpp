#include "twogroups/coherence.hpp"

#include <stdexcept>

namespace twogroups {

TreePtr WordTree::one() {
  auto t = std::make_shared<WordTree>();
  t->leaf = true;
  t->unit_leaf = true;
  return t;
}

TreePtr WordTree::of(ObjId x) {
  auto t = std::make_shared<WordTree>();
  t->leaf = true;
  t->unit_leaf = false;
  t->obj = x;
  return t;
}

TreePtr WordTree::node(TreePtr l, TreePtr r) {
  auto t = std::make_shared<WordTree>();
  t->leaf = false;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

ObjId tree_object(const MonoidalStructure& m, const TreePtr& t) {
  if (t->leaf) return t->unit_leaf ? m.unit : t->obj;
  return m.tensor_ob(tree_object(m, t->left), tree_object(m, t->right));
}

std::vector<ObjId> tree_frontier(const TreePtr& t) {
  std::vector<ObjId> out;
  auto walk = [&](auto&& self, const TreePtr& u) -> void {
    if (u->leaf) {
      if (!u->unit_leaf) out.push_back(u->obj);
      return;
    }
    self(self, u->left);
    self(self, u->right);
  };
  walk(walk, t);
  return out;
}

ObjId word_object(const MonoidalStructure& m, const std::vector<ObjId>& word) {
  if (word.empty()) return m.unit;
  ObjId acc = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) acc = m.tensor_ob(acc, word[i]);
  return acc;
}

CoherenceContext::CoherenceContext(const MonoidalStructure& m)
    : m_(&m), inv_(morphism_inverses(*m.base)) {}

MorId CoherenceContext::invert(MorId f) const {
  if (f.v >= inv_.size() || !inv_[f.v])
    throw std::logic_error("CoherenceContext: morphism not invertible");
  return *inv_[f.v];
}

namespace {

// A leaf of the left comb produced by the flattening sweep.  Unit leaves
// are carried along and eliminated afterwards.
struct CombLeaf {
  bool unit;
  ObjId obj;  // unit object for unit leaves, kept for interpretation
};

ObjId comb_object(const MonoidalStructure& m, const std::vector<CombLeaf>& comb) {
  if (comb.empty()) return m.unit;
  ObjId acc = comb[0].obj;
  for (std::size_t i = 1; i < comb.size(); ++i) acc = m.tensor_ob(acc, comb[i].obj);
  return acc;
}

struct Flattened {
  MorId mor;                  // tree -> left comb (units retained)
  std::vector<CombLeaf> comb;
};

// merge: given a left comb P (object p_obj) and a tree B, produce the
// morphism P (x) B -> left comb over P's leaves followed by B's leaves,
// using inverse associators only.  B's subtrees are flattened recursively.
MorId merge_comb(const CoherenceContext& ctx, std::vector<CombLeaf>& acc,
                 ObjId p_obj, const TreePtr& b);

Flattened flatten(const CoherenceContext& ctx, const TreePtr& t) {
  const MonoidalStructure& m = ctx.structure();
  const FinCategory& c = ctx.cat();
  if (t->leaf) {
    CombLeaf l{t->unit_leaf, t->unit_leaf ? m.unit : t->obj};
    return {c.identity_of(l.obj), {l}};
  }
  Flattened fa = flatten(ctx, t->left);
  ObjId b_obj = tree_object(m, t->right);
  // (flatten(A) (x) 1_B) ; merge
  MorId step = m.tensor_mor(fa.mor, c.identity_of(b_obj));
  ObjId p_obj = comb_object(m, fa.comb);
  std::vector<CombLeaf> comb = fa.comb;
  MorId rest = merge_comb(ctx, comb, p_obj, t->right);
  return {c.compose(step, rest), std::move(comb)};
}

MorId merge_comb(const CoherenceContext& ctx, std::vector<CombLeaf>& acc,
                 ObjId p_obj, const TreePtr& b) {
  const MonoidalStructure& m = ctx.structure();
  const FinCategory& c = ctx.cat();
  if (b->leaf) {
    CombLeaf l{b->unit_leaf, b->unit_leaf ? m.unit : b->obj};
    acc.push_back(l);
    return c.identity_of(m.tensor_ob(p_obj, l.obj));
  }
  ObjId b1 = tree_object(m, b->left);
  ObjId b2 = tree_object(m, b->right);
  // P (x) (B1 (x) B2) -> (P (x) B1) (x) B2
  MorId a_inv = ctx.invert(m.assoc_at(p_obj, b1, b2));
  MorId m1 = merge_comb(ctx, acc, p_obj, b->left);
  ObjId p1_obj = comb_object(m, acc);
  MorId step = m.tensor_mor(m1, c.identity_of(b2));
  MorId m2 = merge_comb(ctx, acc, p1_obj, b->right);
  return compose_chain(c, {a_inv, step, m2});
}

// Eliminates unit leaves left to right from a left comb; returns the
// composite comb -> unit-free word interpretation.
MorId eliminate_units(const CoherenceContext& ctx, std::vector<CombLeaf> comb) {
  const MonoidalStructure& m = ctx.structure();
  const FinCategory& c = ctx.cat();
  MorId total = c.identity_of(comb_object(m, comb));
  for (;;) {
    std::size_t k = comb.size();
    for (std::size_t i = 0; i < comb.size(); ++i)
      if (comb[i].unit) {
        k = i;
        break;
      }
    if (k == comb.size()) break;
    MorId step;
    if (comb.size() == 1) {
      // single unit leaf; its interpretation is already the unit object
      step = c.identity_of(m.unit);
    } else if (k == 0) {
      // innermost pair is (1 (x) l2): remove with the left unitor
      step = m.lunit_at(comb[1].obj);
      ObjId acc = comb[1].obj;
      for (std::size_t j = 2; j < comb.size(); ++j) {
        step = m.tensor_mor(step, c.identity_of(comb[j].obj));
        acc = m.tensor_ob(acc, comb[j].obj);
      }
    } else {
      // (P (x) 1) with P the comb of leaves 0..k-1: right unitor
      std::vector<CombLeaf> prefix(comb.begin(), comb.begin() + k);
      step = m.runit_at(comb_object(m, prefix));
      for (std::size_t j = k + 1; j < comb.size(); ++j)
        step = m.tensor_mor(step, c.identity_of(comb[j].obj));
    }
    comb.erase(comb.begin() + k);
    total = c.compose(total, step);
  }
  return total;
}

}  // namespace

MorId CoherenceContext::normalize(const TreePtr& t) const {
  Flattened f = flatten(*this, t);
  MorId elim = eliminate_units(*this, f.comb);
  return cat().compose(f.mor, elim);
}

MorId CoherenceContext::coherence_iso(const TreePtr& from, const TreePtr& to) const {
  if (tree_frontier(from) != tree_frontier(to))
    throw std::logic_error("coherence_iso: frontiers differ");
  return cat().compose(normalize(from), invert(normalize(to)));
}

}  // namespace twogroups
