#include "twogroups/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace twogroups {
namespace diagram {

int in_arity(Cell c) {
  switch (c) {
    case Cell::IdDown:
    case Cell::IdUp:
      return 1;
    case Cell::CupI:
    case Cell::CupEInv:
      return 0;
    case Cell::CapE:
    case Cell::CapIInv:
      return 2;
  }
  return 0;
}

int out_arity(Cell c) {
  switch (c) {
    case Cell::IdDown:
    case Cell::IdUp:
      return 1;
    case Cell::CupI:
    case Cell::CupEInv:
      return 2;
    case Cell::CapE:
    case Cell::CapIInv:
      return 0;
  }
  return 0;
}

Word cell_inputs(Cell c) {
  switch (c) {
    case Cell::IdDown:
      return {Wire::Down};
    case Cell::IdUp:
      return {Wire::Up};
    case Cell::CupI:
    case Cell::CupEInv:
      return {};
    case Cell::CapE:
      return {Wire::Up, Wire::Down};
    case Cell::CapIInv:
      return {Wire::Down, Wire::Up};
  }
  return {};
}

Word cell_outputs(Cell c) {
  switch (c) {
    case Cell::IdDown:
      return {Wire::Down};
    case Cell::IdUp:
      return {Wire::Up};
    case Cell::CupI:
      return {Wire::Down, Wire::Up};
    case Cell::CupEInv:
      return {Wire::Up, Wire::Down};
    case Cell::CapE:
    case Cell::CapIInv:
      return {};
  }
  return {};
}

bool is_identity_cell(Cell c) { return c == Cell::IdDown || c == Cell::IdUp; }

const char* cell_name(Cell c) {
  switch (c) {
    case Cell::IdDown:
      return "ID-";
    case Cell::IdUp:
      return "ID+";
    case Cell::CupI:
      return "CUPI";
    case Cell::CupEInv:
      return "CUPE'";
    case Cell::CapE:
      return "CAPE";
    case Cell::CapIInv:
      return "CAPI'";
  }
  return "?";
}

Word Layer::input() const {
  Word w;
  for (Cell c : cells)
    for (Wire x : cell_inputs(c)) w.push_back(x);
  return w;
}

Word Layer::output() const {
  Word w;
  for (Cell c : cells)
    for (Wire x : cell_outputs(c)) w.push_back(x);
  return w;
}

bool validate_diagram(const Diagram& d) {
  Word cur = d.top;
  for (const Layer& l : d.layers) {
    if (l.input() != cur) return false;
    cur = l.output();
  }
  return cur == d.bottom;
}

std::size_t generator_count(const Diagram& d) {
  std::size_t n = 0;
  for (const Layer& l : d.layers)
    for (Cell c : l.cells)
      if (!is_identity_cell(c)) ++n;
  return n;
}

Diagram single_wire(Wire w) {
  Diagram d;
  d.top = {w};
  d.bottom = {w};
  return d;
}

Diagram empty_diagram() { return Diagram{}; }

namespace {

Cell id_cell(Wire w) { return w == Wire::Down ? Cell::IdDown : Cell::IdUp; }

Layer identity_layer(const Word& w) {
  Layer l;
  for (Wire x : w) l.cells.push_back(id_cell(x));
  return l;
}

bool identity_only(const Layer& l) {
  for (Cell c : l.cells)
    if (!is_identity_cell(c)) return false;
  return true;
}

int in_start(const Layer& l, int ci) {
  int s = 0;
  for (int i = 0; i < ci; ++i) s += in_arity(l.cells[i]);
  return s;
}

int out_start(const Layer& l, int ci) {
  int s = 0;
  for (int i = 0; i < ci; ++i) s += out_arity(l.cells[i]);
  return s;
}

// index of the cell of l producing output wire pos, or -1
int producer_index(const Layer& l, int pos) {
  int s = 0;
  for (std::size_t i = 0; i < l.cells.size(); ++i) {
    int a = out_arity(l.cells[i]);
    if (pos < s + a) return static_cast<int>(i);
    s += a;
  }
  return -1;
}

// Moves a generator one layer up when planar isotopy allows it: a cap needs
// its two producers to be adjacent identity cells, a cup needs its gap not
// to lie under a cap (that would be the stacked form, slide territory) nor
// inside another cup's output pair.
bool try_move_up(Diagram& d, std::size_t li, std::size_t ci) {
  Layer& l = d.layers[li];
  Layer& p = d.layers[li - 1];
  Cell cell = l.cells[ci];
  if (is_identity_cell(cell)) return false;
  int i0 = in_start(l, static_cast<int>(ci));
  if (in_arity(cell) == 2) {
    int p1 = producer_index(p, i0);
    int p2 = producer_index(p, i0 + 1);
    if (p1 < 0 || p2 < 0 || p2 != p1 + 1) return false;
    if (!is_identity_cell(p.cells[p1]) || !is_identity_cell(p.cells[p2]))
      return false;
    p.cells.erase(p.cells.begin() + p1, p.cells.begin() + p2 + 1);
    p.cells.insert(p.cells.begin() + p1, cell);
    l.cells.erase(l.cells.begin() + ci);
    return true;
  }
  // cup at gap g
  int g = i0;
  int w = 0;
  for (Cell c : p.cells) w += out_arity(c);
  std::size_t insert_at = 0;
  if (w == 0) {
    if (!p.cells.empty()) return false;
    insert_at = 0;
  } else if (g == 0) {
    if (producer_index(p, 0) != 0) return false;
    insert_at = 0;
  } else if (g == w) {
    if (producer_index(p, g - 1) != static_cast<int>(p.cells.size()) - 1)
      return false;
    insert_at = p.cells.size();
  } else {
    int pl = producer_index(p, g - 1);
    int pr = producer_index(p, g);
    if (pl == pr) return false;
    if (pr != pl + 1) return false;
    insert_at = static_cast<std::size_t>(pl) + 1;
  }
  p.cells.insert(p.cells.begin() + insert_at, cell);
  Word outs = cell_outputs(cell);
  l.cells[ci] = id_cell(outs[0]);
  l.cells.insert(l.cells.begin() + ci + 1, id_cell(outs[1]));
  return true;
}

}  // namespace

Diagram canonical(const Diagram& d) {
  Diagram out = d;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t li = 1; li < out.layers.size() && !moved; ++li)
      for (std::size_t ci = 0; ci < out.layers[li].cells.size() && !moved; ++ci)
        moved = try_move_up(out, li, ci);
  }
  std::vector<Layer> kept;
  for (const Layer& l : out.layers)
    if (!identity_only(l)) kept.push_back(l);
  out.layers = std::move(kept);
  return out;
}

const char* rule_name(RuleTag t) {
  switch (t) {
    case RuleTag::LoopI:
      return "LOOP_I";
    case RuleTag::LoopE:
      return "LOOP_E";
    case RuleTag::CancelI:
      return "CANCEL_I";
    case RuleTag::CancelE:
      return "CANCEL_E";
    case RuleTag::SlideI:
      return "SLIDE_I";
    case RuleTag::SlideE:
      return "SLIDE_E";
  }
  return "?";
}

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::Remove:
      return "REMOVE";
    case StepKind::Insert:
      return "INSERT";
    case StepKind::FlatToStack:
      return "FLAT_TO_STACK";
    case StepKind::StackToFlatLeft:
      return "STACK_TO_FLAT_LEFT";
    case StepKind::StackToFlatRight:
      return "STACK_TO_FLAT_RIGHT";
  }
  return "?";
}

namespace {

void rule_cells(RuleTag t, Cell& cup, Cell& cap) {
  switch (t) {
    case RuleTag::LoopI:
    case RuleTag::CancelI:
    case RuleTag::SlideI:
      cup = Cell::CupI;
      cap = Cell::CapIInv;
      break;
    default:
      cup = Cell::CupEInv;
      cap = Cell::CapE;
      break;
  }
}

Word pair_word(RuleTag t) {
  return (t == RuleTag::LoopI || t == RuleTag::CancelI || t == RuleTag::SlideI)
             ? Word{Wire::Down, Wire::Up}
             : Word{Wire::Up, Wire::Down};
}

Word boundary_word(const Diagram& d, int a) {
  if (a == 0) return d.top;
  return d.layers[a - 1].output();
}

[[noreturn]] void bad_match(const char* why) {
  throw std::invalid_argument(std::string("apply_rule: ") + why);
}

}  // namespace

std::vector<RuleInfo> rewrite_rules() {
  std::vector<RuleInfo> rules;
  auto stacked = [](Cell top, Cell bottom) {
    Diagram d;
    d.top = cell_inputs(top);
    d.layers = {Layer{{top}}, Layer{{bottom}}};
    d.bottom = cell_outputs(bottom);
    return d;
  };
  auto wires = [](const Word& w) {
    Diagram d;
    d.top = w;
    d.layers = {identity_layer(w)};
    d.bottom = w;
    return d;
  };
  rules.push_back({RuleTag::LoopI, "loop removal (i i^-1 = 1)",
                   stacked(Cell::CupI, Cell::CapIInv), empty_diagram()});
  rules.push_back({RuleTag::LoopE, "loop removal (e^-1 e = 1)",
                   stacked(Cell::CupEInv, Cell::CapE), empty_diagram()});
  rules.push_back({RuleTag::CancelI, "cancellation (i^-1 i = 1)",
                   stacked(Cell::CapIInv, Cell::CupI),
                   wires({Wire::Down, Wire::Up})});
  rules.push_back({RuleTag::CancelE, "cancellation (e e^-1 = 1)",
                   stacked(Cell::CapE, Cell::CupEInv),
                   wires({Wire::Up, Wire::Down})});
  {
    Diagram flat;
    flat.top = cell_inputs(Cell::CapE);
    flat.layers = {Layer{{Cell::CapE, Cell::CupEInv}}};
    flat.bottom = cell_outputs(Cell::CupEInv);
    rules.push_back({RuleTag::SlideE, "horizontal slide (e family)", flat,
                     stacked(Cell::CapE, Cell::CupEInv)});
  }
  {
    Diagram flat;
    flat.top = cell_inputs(Cell::CapIInv);
    flat.layers = {Layer{{Cell::CapIInv, Cell::CupI}}};
    flat.bottom = cell_outputs(Cell::CupI);
    rules.push_back({RuleTag::SlideI, "horizontal slide (i family)", flat,
                     stacked(Cell::CapIInv, Cell::CupI)});
  }
  return rules;
}

Diagram apply_rule(const Diagram& d, const RewriteStep& s) {
  Cell cup, cap;
  rule_cells(s.rule, cup, cap);
  Diagram out = d;
  const bool is_loop = s.rule == RuleTag::LoopI || s.rule == RuleTag::LoopE;
  const bool is_cancel =
      s.rule == RuleTag::CancelI || s.rule == RuleTag::CancelE;
  const bool is_slide = s.rule == RuleTag::SlideI || s.rule == RuleTag::SlideE;

  switch (s.kind) {
    case StepKind::Remove: {
      if (!is_loop && !is_cancel)
        bad_match("REMOVE applies to loop/cancel rules");
      if (s.a < 0 || s.a + 1 >= static_cast<int>(out.layers.size()))
        bad_match("layer out of range");
      Layer& la = out.layers[s.a];
      Layer& lb = out.layers[s.a + 1];
      if (is_loop) {
        if (s.b < 0 || s.b >= static_cast<int>(la.cells.size()) ||
            la.cells[s.b] != cup)
          bad_match("no cup at position");
        if (s.c < 0 || s.c >= static_cast<int>(lb.cells.size()) ||
            lb.cells[s.c] != cap)
          bad_match("no cap at position");
        if (in_start(lb, s.c) != out_start(la, s.b))
          bad_match("cup and cap not wired together");
        lb.cells.erase(lb.cells.begin() + s.c);
        la.cells.erase(la.cells.begin() + s.b);
      } else {
        if (s.b < 0 || s.b >= static_cast<int>(la.cells.size()) ||
            la.cells[s.b] != cap)
          bad_match("no cap at position");
        if (s.c < 0 || s.c >= static_cast<int>(lb.cells.size()) ||
            lb.cells[s.c] != cup)
          bad_match("no cup at position");
        if (in_start(lb, s.c) != out_start(la, s.b))
          bad_match("cup not stacked under the cap");
        Word ins = cell_inputs(cap);
        la.cells[s.b] = id_cell(ins[0]);
        la.cells.insert(la.cells.begin() + s.b + 1, id_cell(ins[1]));
        Word outs = cell_outputs(cup);
        lb.cells[s.c] = id_cell(outs[0]);
        lb.cells.insert(lb.cells.begin() + s.c + 1, id_cell(outs[1]));
      }
      break;
    }
    case StepKind::Insert: {
      if (!is_loop && !is_cancel)
        bad_match("INSERT applies to loop/cancel rules");
      if (s.a < 0 || s.a > static_cast<int>(out.layers.size()))
        bad_match("boundary out of range");
      Word w = boundary_word(out, s.a);
      Word pw = pair_word(s.rule);
      Layer first, second;
      if (is_loop) {
        if (s.b < 0 || s.b > static_cast<int>(w.size()))
          bad_match("gap out of range");
        // cup layer then cap layer on the fresh pair; in an identity layer
        // the gap position is also the cell index
        first = identity_layer(w);
        first.cells.insert(first.cells.begin() + s.b, cup);
        second = identity_layer(w);
        second.cells.insert(second.cells.begin() + s.b, cap);
      } else {
        if (s.b < 0 || s.b + 1 >= static_cast<int>(w.size()))
          bad_match("wire pair out of range");
        if (w[s.b] != pw[0] || w[s.b + 1] != pw[1])
          bad_match("wire pair has wrong orientation");
        first = identity_layer(w);
        first.cells.erase(first.cells.begin() + s.b,
                          first.cells.begin() + s.b + 2);
        first.cells.insert(first.cells.begin() + s.b, cap);
        Word reduced = w;
        reduced.erase(reduced.begin() + s.b, reduced.begin() + s.b + 2);
        second = identity_layer(reduced);
        second.cells.insert(second.cells.begin() + s.b, cup);
      }
      out.layers.insert(out.layers.begin() + s.a, {first, second});
      break;
    }
    case StepKind::FlatToStack: {
      if (!is_slide) bad_match("FLAT_TO_STACK applies to slide rules");
      if (s.a < 0 || s.a >= static_cast<int>(out.layers.size()))
        bad_match("layer out of range");
      Layer& la = out.layers[s.a];
      if (s.b < 0 || s.b >= static_cast<int>(la.cells.size()) ||
          la.cells[s.b] != cap)
        bad_match("no cap at position");
      if (s.c < 0 || s.c >= static_cast<int>(la.cells.size()) ||
          la.cells[s.c] != cup || s.c == s.b)
        bad_match("no cup at position");
      int lo = std::min(s.b, s.c), hi = std::max(s.b, s.c);
      for (int i = lo + 1; i < hi; ++i)
        if (out_arity(la.cells[i]) != 0)
          bad_match("a wire separates the cap and the cup");
      la.cells.erase(la.cells.begin() + s.c);
      int capidx = s.c < s.b ? s.b - 1 : s.b;
      int slot = out_start(la, capidx);
      Layer fresh = identity_layer(la.output());
      fresh.cells.insert(fresh.cells.begin() + slot, cup);
      out.layers.insert(out.layers.begin() + s.a + 1, fresh);
      break;
    }
    case StepKind::StackToFlatLeft:
    case StepKind::StackToFlatRight: {
      if (!is_slide) bad_match("STACK_TO_FLAT applies to slide rules");
      if (s.a < 0 || s.a + 1 >= static_cast<int>(out.layers.size()))
        bad_match("layer out of range");
      Layer& la = out.layers[s.a];
      Layer& lb = out.layers[s.a + 1];
      if (s.b < 0 || s.b >= static_cast<int>(la.cells.size()) ||
          la.cells[s.b] != cap)
        bad_match("no cap at position");
      if (s.c < 0 || s.c >= static_cast<int>(lb.cells.size()) ||
          lb.cells[s.c] != cup)
        bad_match("no cup at position");
      if (in_start(lb, s.c) != out_start(la, s.b))
        bad_match("cup not stacked under the cap");
      Word outs = cell_outputs(cup);
      lb.cells[s.c] = id_cell(outs[0]);
      lb.cells.insert(lb.cells.begin() + s.c + 1, id_cell(outs[1]));
      int at = s.kind == StepKind::StackToFlatLeft ? s.b : s.b + 1;
      la.cells.insert(la.cells.begin() + at, cup);
      break;
    }
  }
  if (!validate_diagram(out))
    throw std::logic_error("apply_rule: produced an invalid diagram");
  return out;
}

std::vector<RewriteStep> enumerate_steps(const Diagram& d,
                                         std::size_t max_generators) {
  std::vector<RewriteStep> steps;
  const std::size_t gens = generator_count(d);

  // removals and stacked slides over adjacent layers
  for (int a = 0; a + 1 < static_cast<int>(d.layers.size()); ++a) {
    const Layer& la = d.layers[a];
    const Layer& lb = d.layers[a + 1];
    for (int b = 0; b < static_cast<int>(la.cells.size()); ++b) {
      Cell top = la.cells[b];
      if (is_identity_cell(top)) continue;
      for (int c = 0; c < static_cast<int>(lb.cells.size()); ++c) {
        Cell bot = lb.cells[c];
        if (is_identity_cell(bot)) continue;
        if ((top == Cell::CupI && bot == Cell::CapIInv) ||
            (top == Cell::CupEInv && bot == Cell::CapE)) {
          if (in_start(lb, c) == out_start(la, b)) {
            RuleTag t = top == Cell::CupI ? RuleTag::LoopI : RuleTag::LoopE;
            steps.push_back({t, StepKind::Remove, a, b, c});
          }
        }
        if ((top == Cell::CapIInv && bot == Cell::CupI) ||
            (top == Cell::CapE && bot == Cell::CupEInv)) {
          if (in_start(lb, c) == out_start(la, b)) {
            RuleTag ct =
                top == Cell::CapIInv ? RuleTag::CancelI : RuleTag::CancelE;
            RuleTag st =
                top == Cell::CapIInv ? RuleTag::SlideI : RuleTag::SlideE;
            steps.push_back({ct, StepKind::Remove, a, b, c});
            steps.push_back({st, StepKind::StackToFlatLeft, a, b, c});
            steps.push_back({st, StepKind::StackToFlatRight, a, b, c});
          }
        }
      }
    }
  }

  // flat slides within one layer; only output-free cells may sit between
  for (int a = 0; a < static_cast<int>(d.layers.size()); ++a) {
    const Layer& la = d.layers[a];
    for (int b = 0; b < static_cast<int>(la.cells.size()); ++b) {
      Cell cb = la.cells[b];
      if (cb != Cell::CapE && cb != Cell::CapIInv) continue;
      RuleTag t = cb == Cell::CapE ? RuleTag::SlideE : RuleTag::SlideI;
      Cell want = cb == Cell::CapE ? Cell::CupEInv : Cell::CupI;
      for (int dir : {1, -1}) {
        for (int c = b + dir; c >= 0 && c < static_cast<int>(la.cells.size());
             c += dir) {
          if (la.cells[c] == want) {
            steps.push_back({t, StepKind::FlatToStack, a, b, c});
            break;
          }
          if (out_arity(la.cells[c]) != 0) break;
        }
      }
    }
  }

  // insertions, bounded by the generator cap
  if (gens + 2 <= max_generators) {
    for (int a = 0; a <= static_cast<int>(d.layers.size()); ++a) {
      Word w = boundary_word(d, a);
      for (int b = 0; b <= static_cast<int>(w.size()); ++b) {
        steps.push_back({RuleTag::LoopI, StepKind::Insert, a, b, 0});
        steps.push_back({RuleTag::LoopE, StepKind::Insert, a, b, 0});
      }
      for (int b = 0; b + 1 < static_cast<int>(w.size()); ++b) {
        if (w[b] == Wire::Down && w[b + 1] == Wire::Up)
          steps.push_back({RuleTag::CancelI, StepKind::Insert, a, b, 0});
        if (w[b] == Wire::Up && w[b + 1] == Wire::Down)
          steps.push_back({RuleTag::CancelE, StepKind::Insert, a, b, 0});
      }
    }
  }
  return steps;
}

Diagram replay(const Diagram& d, const RewriteTrace& t) {
  Diagram cur = canonical(d);
  for (const RewriteStep& s : t.steps) cur = canonical(apply_rule(cur, s));
  return cur;
}

namespace {

std::string state_key(const Diagram& d) { return serialize_diagram(d); }

struct SearchNode {
  Diagram d;
  int parent;
  RewriteStep step;  // applied to parent to reach this node
};

// finds a short step sequence from `from` to `to`; usually a single step
// (the reverse of the recorded one), but canonicalization can slide a cell
// past the pattern, in which case a bounded search recovers a short path
std::vector<RewriteStep> invert_step(const Diagram& from, const Diagram& to,
                                     std::size_t cap) {
  struct Entry {
    Diagram d;
    int parent;
    RewriteStep step;
  };
  std::vector<Entry> q;
  std::unordered_map<std::string, int> vis;
  q.push_back({from, -1, {}});
  vis[state_key(from)] = 0;
  std::size_t head = 0, level_end = 1;
  int depth = 0;
  while (head < q.size() && depth < 4) {
    for (; head < level_end; ++head) {
      Diagram cur = q[head].d;
      for (const RewriteStep& s : enumerate_steps(cur, cap)) {
        Diagram nd = canonical(apply_rule(cur, s));
        std::string key = state_key(nd);
        if (vis.count(key)) continue;
        int idx = static_cast<int>(q.size());
        q.push_back({nd, static_cast<int>(head), s});
        vis[key] = idx;
        if (nd == to) {
          std::vector<RewriteStep> path;
          for (int i = idx; q[i].parent >= 0; i = q[i].parent)
            path.push_back(q[i].step);
          std::reverse(path.begin(), path.end());
          return path;
        }
      }
      if (q.size() > 20000) break;
    }
    level_end = q.size();
    ++depth;
  }
  throw std::logic_error("equivalent: could not invert a search step");
}

}  // namespace

std::optional<RewriteTrace> equivalent(const Diagram& d1, const Diagram& d2,
                                       int max_steps) {
  if (!validate_diagram(d1) || !validate_diagram(d2))
    throw std::invalid_argument("equivalent: invalid diagram");
  if (d1.top != d2.top || d1.bottom != d2.bottom)
    throw std::invalid_argument("equivalent: boundary mismatch");

  Diagram c1 = canonical(d1);
  Diagram c2 = canonical(d2);
  const std::size_t cap =
      std::max(generator_count(c1), generator_count(c2)) + 4;
  constexpr std::size_t kStateLimit = 400000;

  if (c1 == c2) return RewriteTrace{};

  std::vector<SearchNode> nodes[2];
  std::unordered_map<std::string, int> seen[2];
  std::vector<int> frontier[2];
  int depth[2] = {0, 0};

  nodes[0].push_back({c1, -1, {}});
  seen[0][state_key(c1)] = 0;
  frontier[0] = {0};
  nodes[1].push_back({c2, -1, {}});
  seen[1][state_key(c2)] = 0;
  frontier[1] = {0};

  int meet[2] = {-1, -1};

  while (meet[0] < 0 && !frontier[0].empty() && !frontier[1].empty() &&
         depth[0] + depth[1] < max_steps) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<int> next;
    for (int ni : frontier[side]) {
      Diagram cur = nodes[side][ni].d;  // copy; nodes may reallocate below
      for (const RewriteStep& s : enumerate_steps(cur, cap)) {
        Diagram nd = canonical(apply_rule(cur, s));
        if (generator_count(nd) > cap) continue;
        std::string key = state_key(nd);
        if (seen[side].count(key)) continue;
        int idx = static_cast<int>(nodes[side].size());
        nodes[side].push_back({nd, ni, s});
        seen[side][key] = idx;
        next.push_back(idx);
        auto other = seen[1 - side].find(key);
        if (other != seen[1 - side].end()) {
          meet[side] = idx;
          meet[1 - side] = other->second;
          break;
        }
      }
      if (meet[0] >= 0 || meet[1] >= 0) break;
      if (nodes[side].size() > kStateLimit) return std::nullopt;
    }
    if (meet[0] >= 0 || meet[1] >= 0) break;
    frontier[side] = std::move(next);
    ++depth[side];
  }

  if (meet[0] < 0 || meet[1] < 0) return std::nullopt;

  RewriteTrace trace;
  {
    std::vector<RewriteStep> fwd;
    for (int i = meet[0]; nodes[0][i].parent >= 0; i = nodes[0][i].parent)
      fwd.push_back(nodes[0][i].step);
    for (auto it = fwd.rbegin(); it != fwd.rend(); ++it)
      trace.steps.push_back(*it);
  }
  {
    // the backward side recorded steps away from c2; invert them
    std::vector<int> chain;
    for (int i = meet[1]; i >= 0; i = nodes[1][i].parent) chain.push_back(i);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const Diagram& child = nodes[1][chain[k]].d;
      const Diagram& parent = nodes[1][chain[k + 1]].d;
      for (const RewriteStep& s : invert_step(child, parent, cap))
        trace.steps.push_back(s);
    }
  }
  if (static_cast<int>(trace.steps.size()) > max_steps) return std::nullopt;
  if (!(replay(d1, trace) == c2))
    throw std::logic_error("equivalent: trace replay check failed");
  return trace;
}

Diagram iprime_diagram() {
  Diagram d;
  d.top = {};
  d.layers = {Layer{{Cell::CupI}},
              Layer{{Cell::IdDown, Cell::CupEInv, Cell::IdUp}},
              Layer{{Cell::CapIInv, Cell::IdDown, Cell::IdUp}}};
  d.bottom = {Wire::Down, Wire::Up};
  return d;
}

Diagram iprime_zigzag1_lhs() {
  Diagram d;
  d.top = {Wire::Down};
  d.layers = {Layer{{Cell::CupI, Cell::IdDown}},
              Layer{{Cell::IdDown, Cell::CupEInv, Cell::CapE}},
              Layer{{Cell::CapIInv, Cell::IdDown}}};
  d.bottom = {Wire::Down};
  return d;
}

Diagram iprime_zigzag2_lhs() {
  Diagram d;
  d.top = {Wire::Up};
  d.layers = {Layer{{Cell::IdUp, Cell::CupI}},
              Layer{{Cell::IdUp, Cell::IdDown, Cell::CupEInv, Cell::IdUp}},
              Layer{{Cell::IdUp, Cell::CapIInv, Cell::IdDown, Cell::IdUp}},
              Layer{{Cell::CapE, Cell::IdUp}}};
  d.bottom = {Wire::Up};
  return d;
}

MorId evaluate(const Diagram& d, const MonoidalStructure& m,
               const InverseChoice& ch, ObjId x) {
  if (!validate_diagram(d))
    throw std::invalid_argument("evaluate: diagram does not type-check");
  if (x.v >= m.object_count() || ch.dual.size() <= x.v ||
      ch.unit_i.size() <= x.v || ch.counit_e.size() <= x.v)
    throw std::invalid_argument("evaluate: choice tables too small");
  const FinCategory& c = *m.base;
  ObjId dual = ch.dual[x.v];
  MorId i = ch.unit_i[x.v];
  MorId e = ch.counit_e[x.v];
  {
    const MorArrow& ai = c.arrow(i);
    const MorArrow& ae = c.arrow(e);
    if (ai.dom != m.unit || ai.cod != m.tensor_ob(x, dual) ||
        ae.dom != m.tensor_ob(dual, x) || ae.cod != m.unit)
      throw std::invalid_argument("evaluate: i/e mistyped for x");
  }
  CoherenceContext ctx(m);
  MorId i_inv = ctx.invert(i);
  MorId e_inv = ctx.invert(e);

  auto wire_obj = [&](Wire w) { return w == Wire::Down ? x : dual; };
  auto wire_tree = [&](Wire w) { return WordTree::of(wire_obj(w)); };
  auto cell_tree = [&](Cell cl, bool dom) -> TreePtr {
    Word w = dom ? cell_inputs(cl) : cell_outputs(cl);
    if (w.empty()) return WordTree::one();
    if (w.size() == 1) return wire_tree(w[0]);
    return WordTree::node(wire_tree(w[0]), wire_tree(w[1]));
  };
  auto cell_mor = [&](Cell cl) -> MorId {
    switch (cl) {
      case Cell::IdDown:
        return c.identity_of(x);
      case Cell::IdUp:
        return c.identity_of(dual);
      case Cell::CupI:
        return i;
      case Cell::CupEInv:
        return e_inv;
      case Cell::CapE:
        return e;
      case Cell::CapIInv:
        return i_inv;
    }
    return c.identity_of(x);
  };
  auto word_of = [&](const Word& w) {
    std::vector<ObjId> obs;
    for (Wire wr : w) obs.push_back(wire_obj(wr));
    return obs;
  };

  MorId acc = c.identity_of(word_object(m, word_of(d.top)));
  for (const Layer& l : d.layers) {
    TreePtr dom_tree, cod_tree;
    MorId layer_mor{};
    bool first = true;
    for (Cell cl : l.cells) {
      TreePtr dt = cell_tree(cl, true);
      TreePtr ct = cell_tree(cl, false);
      MorId mm = cell_mor(cl);
      if (first) {
        dom_tree = dt;
        cod_tree = ct;
        layer_mor = mm;
        first = false;
      } else {
        dom_tree = WordTree::node(dom_tree, dt);
        cod_tree = WordTree::node(cod_tree, ct);
        layer_mor = m.tensor_mor(layer_mor, mm);
      }
    }
    if (first) {
      dom_tree = WordTree::one();
      cod_tree = WordTree::one();
      layer_mor = c.identity_of(m.unit);
    }
    MorId into = ctx.invert(ctx.normalize(dom_tree));
    MorId outof = ctx.normalize(cod_tree);
    acc = compose_chain(c, {acc, into, layer_mor, outof});
  }
  ObjId want = word_object(m, word_of(d.bottom));
  if (c.arrow(acc).cod != want)
    throw std::logic_error("evaluate: result has unexpected codomain");
  return acc;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream os;
  auto word = [&](const Word& w) {
    for (Wire x : w) os << ' ' << (x == Wire::Down ? '-' : '+');
  };
  os << "TOP";
  word(d.top);
  os << '\n';
  for (const Layer& l : d.layers) {
    os << "LAYER";
    for (Cell c : l.cells) os << ' ' << cell_name(c);
    os << '\n';
  }
  os << "BOTTOM";
  word(d.bottom);
  os << '\n';
  return os.str();
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

Wire parse_wire(const std::string& t) {
  if (t == "-") return Wire::Down;
  if (t == "+") return Wire::Up;
  throw std::runtime_error("diagram parse: bad wire token '" + t + "'");
}

Cell parse_cell(const std::string& t) {
  if (t == "ID-") return Cell::IdDown;
  if (t == "ID+") return Cell::IdUp;
  if (t == "CUPI") return Cell::CupI;
  if (t == "CUPE'") return Cell::CupEInv;
  if (t == "CAPE") return Cell::CapE;
  if (t == "CAPI'") return Cell::CapIInv;
  throw std::runtime_error("diagram parse: bad cell token '" + t + "'");
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines.front()[0] != "TOP")
    throw std::runtime_error("diagram parse: expected TOP line");
  if (lines.size() < 2 || lines.back()[0] != "BOTTOM")
    throw std::runtime_error("diagram parse: expected BOTTOM line");
  Diagram d;
  for (std::size_t i = 1; i < lines.front().size(); ++i)
    d.top.push_back(parse_wire(lines.front()[i]));
  for (std::size_t li = 1; li + 1 < lines.size(); ++li) {
    if (lines[li][0] != "LAYER")
      throw std::runtime_error("diagram parse: expected LAYER line");
    Layer l;
    for (std::size_t i = 1; i < lines[li].size(); ++i)
      l.cells.push_back(parse_cell(lines[li][i]));
    d.layers.push_back(std::move(l));
  }
  for (std::size_t i = 1; i < lines.back().size(); ++i)
    d.bottom.push_back(parse_wire(lines.back()[i]));
  if (!validate_diagram(d))
    throw std::runtime_error("diagram parse: boundaries do not chain");
  return d;
}

std::string serialize_trace(const RewriteTrace& t) {
  std::ostringstream os;
  os << "STEPS " << t.steps.size() << '\n';
  for (const RewriteStep& s : t.steps)
    os << "STEP " << rule_name(s.rule) << ' ' << kind_name(s.kind) << ' ' << s.a
       << ' ' << s.b << ' ' << s.c << '\n';
  return os.str();
}

namespace {

RuleTag parse_rule(const std::string& t) {
  for (RuleTag r : {RuleTag::LoopI, RuleTag::LoopE, RuleTag::CancelI,
                    RuleTag::CancelE, RuleTag::SlideI, RuleTag::SlideE})
    if (t == rule_name(r)) return r;
  throw std::runtime_error("trace parse: bad rule '" + t + "'");
}

StepKind parse_kind(const std::string& t) {
  for (StepKind k : {StepKind::Remove, StepKind::Insert, StepKind::FlatToStack,
                     StepKind::StackToFlatLeft, StepKind::StackToFlatRight})
    if (t == kind_name(k)) return k;
  throw std::runtime_error("trace parse: bad step kind '" + t + "'");
}

}  // namespace

RewriteTrace parse_trace(const std::string& text) {
  auto lines = tokenize_lines(text);
  RewriteTrace t;
  for (const auto& toks : lines) {
    if (toks[0] == "STEPS") continue;
    if (toks[0] != "STEP") continue;
    if (toks.size() != 6)
      throw std::runtime_error("trace parse: bad STEP line");
    RewriteStep s;
    s.rule = parse_rule(toks[1]);
    s.kind = parse_kind(toks[2]);
    s.a = std::stoi(toks[3]);
    s.b = std::stoi(toks[4]);
    s.c = std::stoi(toks[5]);
    t.steps.push_back(s);
  }
  return t;
}

}  // namespace diagram
}  // namespace twogroups
