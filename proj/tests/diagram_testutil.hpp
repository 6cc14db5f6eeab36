#pragma once

#include <random>

#include "twogroups/diagram.hpp"

namespace twogroups {
namespace diagram {

// Random valid diagram: a random boundary word followed by random layers
// built cell by cell against the current word.
inline Diagram random_diagram(std::mt19937& rng, int max_width = 4,
                              int max_layers = 4) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  Diagram d;
  int w0 = pick(max_width + 1);
  for (int i = 0; i < w0; ++i)
    d.top.push_back(pick(2) ? Wire::Up : Wire::Down);
  Word cur = d.top;
  int layers = pick(max_layers + 1);
  for (int li = 0; li < layers; ++li) {
    Layer l;
    std::size_t pos = 0;
    while (pos < cur.size() || l.cells.empty()) {
      int roll = pick(10);
      if (roll < 2 && static_cast<int>(cur.size()) + 2 <= max_width + 2) {
        l.cells.push_back(pick(2) ? Cell::CupI : Cell::CupEInv);
      } else if (roll < 4 && pos + 1 < cur.size() && cur[pos] == Wire::Up &&
                 cur[pos + 1] == Wire::Down) {
        l.cells.push_back(Cell::CapE);
        pos += 2;
      } else if (roll < 4 && pos + 1 < cur.size() && cur[pos] == Wire::Down &&
                 cur[pos + 1] == Wire::Up) {
        l.cells.push_back(Cell::CapIInv);
        pos += 2;
      } else if (pos < cur.size()) {
        l.cells.push_back(cur[pos] == Wire::Down ? Cell::IdDown : Cell::IdUp);
        pos += 1;
      } else {
        break;
      }
    }
    if (l.cells.empty()) continue;
    cur = l.output();
    d.layers.push_back(std::move(l));
  }
  d.bottom = cur;
  return d;
}

// Applies up to `count` random rule steps (canonicalizing between steps)
// and returns the result together with the rules that were used.
inline Diagram random_walk(const Diagram& d, std::mt19937& rng, int count,
                           std::size_t max_generators,
                           std::vector<RuleTag>* used = nullptr) {
  Diagram cur = canonical(d);
  for (int k = 0; k < count; ++k) {
    auto steps = enumerate_steps(cur, max_generators);
    if (steps.empty()) break;
    const RewriteStep& s = steps[rng() % steps.size()];
    if (used) used->push_back(s.rule);
    cur = canonical(apply_rule(cur, s));
  }
  return cur;
}

}  // namespace diagram
}  // namespace twogroups
