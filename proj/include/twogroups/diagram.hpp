#pragma once

#include <optional>
#include <string>

#include "twogroups/coherence.hpp"
#include "twogroups/improve.hpp"

namespace twogroups {
namespace diagram {

// String-diagram calculus for a single object x with its chosen weak
// inverse.  Wires are oriented: a downward wire is x, an upward wire is
// the dual.  Diagrams are grids of layers read top to bottom; each layer
// is a horizontal word of cells.
enum class Wire : std::uint8_t { Down, Up };

// The four cup/cap generators plus identity wires:
//   CupI    = i      : creates (Down, Up)
//   CupEInv = e^-1   : creates (Up, Down)
//   CapE    = e      : consumes (Up, Down)
//   CapIInv = i^-1   : consumes (Down, Up)
enum class Cell : std::uint8_t { IdDown, IdUp, CupI, CupEInv, CapE, CapIInv };

using Word = std::vector<Wire>;

int in_arity(Cell c);
int out_arity(Cell c);
Word cell_inputs(Cell c);
Word cell_outputs(Cell c);
bool is_identity_cell(Cell c);
const char* cell_name(Cell c);  // ID-, ID+, CUPI, CUPE', CAPE, CAPI'

struct Layer {
  std::vector<Cell> cells;
  Word input() const;
  Word output() const;
  friend bool operator==(const Layer& a, const Layer& b) {
    return a.cells == b.cells;
  }
};

struct Diagram {
  Word top;
  std::vector<Layer> layers;
  Word bottom;
  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.top == b.top && a.layers == b.layers && a.bottom == b.bottom;
  }
};

// Boundary matching: consecutive layer words chain from top to bottom.
bool validate_diagram(const Diagram& d);

std::size_t generator_count(const Diagram& d);  // non-identity cells

Diagram single_wire(Wire w);
Diagram empty_diagram();

// Normal form modulo interchange: every generator cell sits in the
// earliest layer planar isotopy allows, identity-only layers removed.
// Stacked cap-over-cup configurations are NOT flattened; relating them to
// the side-by-side form is the job of the slide rules.
Diagram canonical(const Diagram& d);

// ---- rewrite rules ---------------------------------------------------------

enum class RuleTag { LoopI, LoopE, CancelI, CancelE, SlideI, SlideE };

// Remove/Insert belong to the loop and cancellation rules; the slide rules
// exchange a stacked cap-over-cup with the cap-and-cup-in-one-layer form
// (the cup emerging left or right of the cap).
enum class StepKind {
  Remove,
  Insert,
  FlatToStack,
  StackToFlatLeft,
  StackToFlatRight
};

// Position conventions (indices into the diagram the step is applied to):
//   Remove (loops):        a = cup layer, b = cup cell, c = cap cell (layer a+1)
//   Remove (cancels):      a = cap layer, b = cap cell, c = cup cell (layer a+1)
//   Insert:                a = boundary index (0..#layers), b = wire/gap position
//   FlatToStack:           a = layer, b = cap cell, c = cup cell (same layer)
//   StackToFlat{L,R}:      a = cap layer, b = cap cell, c = cup cell (layer a+1)
struct RewriteStep {
  RuleTag rule;
  StepKind kind;
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const RewriteStep& x, const RewriteStep& y) {
    return x.rule == y.rule && x.kind == y.kind && x.a == y.a && x.b == y.b &&
           x.c == y.c;
  }
};

const char* rule_name(RuleTag t);
const char* kind_name(StepKind k);

// One rule with its boundary typing and the two local forms as diagrams.
struct RuleInfo {
  RuleTag tag;
  std::string name;
  Diagram lhs;
  Diagram rhs;
};

// The six bidirectional local rules of the calculus.
std::vector<RuleInfo> rewrite_rules();

// Applies one step; throws std::invalid_argument when the pattern does not
// match at the given position.  The result is a raw grid (not
// canonicalized) and always validates.
Diagram apply_rule(const Diagram& d, const RewriteStep& step);

// Every step applicable to d whose result stays within max_generators.
std::vector<RewriteStep> enumerate_steps(const Diagram& d,
                                         std::size_t max_generators);

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

// Replays a trace: canonicalize, then apply and re-canonicalize per step.
Diagram replay(const Diagram& d, const RewriteTrace& t);

// Bidirectional breadth-first search over canonical forms, bounded by
// max_steps total rule applications; states may grow at most four
// generator cells beyond the larger endpoint.  Returns a trace with
// replay(d1, trace) == canonical(d2), or nullopt on exhaustion
// (inconclusive, not a disproof).  Throws on boundary mismatch.
std::optional<RewriteTrace> equivalent(const Diagram& d1, const Diagram& d2,
                                       int max_steps);

// ---- fixtures from the improvement proof ------------------------------------

// The replacement unit i' as a 3-generator diagram: empty top, (Down, Up)
// bottom.
Diagram iprime_diagram();

// (i'(x)1) ; a ; (1(x)e)  with i' expanded: a single down wire when the
// calculus is sound.
Diagram iprime_zigzag1_lhs();

// (1(x)i') ; a^-1 ; (e(x)1) wrapped for the second identity: single up wire.
Diagram iprime_zigzag2_lhs();

// ---- interpretation ----------------------------------------------------------

// Interprets the diagram in an instance: boundary words become
// left-parenthesized unit-free tensor words over {x, dual}, each layer the
// tensor of its cells conjugated by the canonical coherence isomorphisms.
MorId evaluate(const Diagram& d, const MonoidalStructure& m,
               const InverseChoice& ch, ObjId x);

// ---- serialization -----------------------------------------------------------

// Line-per-layer text grid:
//   TOP - +
//   LAYER CUPI ID-
//   BOTTOM - + - +
// '#' starts a comment; boundary words use '-' (down) and '+' (up).
std::string serialize_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);  // throws std::runtime_error

std::string serialize_trace(const RewriteTrace& t);
RewriteTrace parse_trace(const std::string& text);

}  // namespace diagram
}  // namespace twogroups
