#pragma once

#include <memory>

#include "twogroups/monoidal.hpp"

namespace twogroups {

// A parenthesized tensor word.  Unit leaves are tracked syntactically and
// never compared with object ids: in one-object instances the unit object
// coincides with every other object, so elision decisions must not look at
// the interpretation.
struct WordTree;
using TreePtr = std::shared_ptr<const WordTree>;

struct WordTree {
  bool leaf = true;
  bool unit_leaf = false;
  ObjId obj{};     // meaningful for non-unit leaves
  TreePtr left, right;

  static TreePtr one();
  static TreePtr of(ObjId x);
  static TreePtr node(TreePtr l, TreePtr r);
};

// Interpretation of a tree in an instance.
ObjId tree_object(const MonoidalStructure& m, const TreePtr& t);

// Non-unit leaves, left to right.
std::vector<ObjId> tree_frontier(const TreePtr& t);

// Left-parenthesized unit-free interpretation of a word of objects; the
// empty word denotes the unit object.
ObjId word_object(const MonoidalStructure& m, const std::vector<ObjId>& word);

// Precomputed inverse table plus checked composition helpers for one
// monoidal instance.  All morphisms reached through it must be invertible.
class CoherenceContext {
 public:
  explicit CoherenceContext(const MonoidalStructure& m);

  const MonoidalStructure& structure() const { return *m_; }
  const FinCategory& cat() const { return *m_->base; }

  MorId invert(MorId f) const;  // throws std::logic_error when not invertible

  // Canonical normalization morphism t -> word_object(frontier(t)), built by
  // an associate-left sweep followed by left-to-right unit elimination.
  MorId normalize(const TreePtr& t) const;

  // Canonical structural isomorphism between trees with equal frontiers:
  // normalize(from) ; normalize(to)^-1.
  MorId coherence_iso(const TreePtr& from, const TreePtr& to) const;

 private:
  const MonoidalStructure* m_;
  std::vector<std::optional<MorId>> inv_;
};

}  // namespace twogroups
