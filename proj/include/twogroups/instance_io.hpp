#pragma once

#include <stdexcept>
#include <string>

#include "twogroups/homomorphism.hpp"

namespace twogroups {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One instance file: a monoidal structure plus, optionally, the chosen
// dual/unit/counit tables.
struct InstanceData {
  MonoidalStructure m;
  std::optional<CoherentData> data;
};

bool same_instance(const InstanceData& a, const InstanceData& b);

// GENERATOR directives:
//   group:<name>              discrete strict 2-group on a named group
//   deloop:<name>:<i>:<e>     one-object instance; i/e may be '?' for a
//                             seeded random invertible choice
//   xmod:<G>:<H>:<t>:<alpha>  crossed module; t in {id, trivial},
//                             alpha in {trivial}
// Group names: Z1..Z32, S3.
InstanceData instance_from_directive(const std::string& directive,
                                     std::uint64_t seed = 0);

// Plain whitespace-separated text, one directive per line, '#' comments.
// Sections, in order: OBJECTS, MORPHISMS (id dom cod triples), IDENTITY,
// COMPOSE (dense rows, -1 for non-composable), TENSOR_OB, TENSOR_MOR,
// UNIT, ASSOC, LUNIT, RUNIT, then optionally DUAL, UNIT_I, COUNIT_E.
// Alternatively a single GENERATOR line replaces all tables.
InstanceData parse_instance(const std::string& text, std::uint64_t seed = 0);
InstanceData load_instance(const std::string& path, std::uint64_t seed = 0);

std::string serialize_instance(const MonoidalStructure& m,
                               const CoherentData* data);
void save_instance(const std::string& path, const MonoidalStructure& m,
                   const CoherentData* data);

// Functor file: FUNCTOR, OB_MAP (n entries), MOR_MAP (m entries),
// F2 (n*n entries), F0 (one id); tables reference the two instance files.
MonoidalFunctor parse_functor(const std::string& text, const InstanceData& src,
                              const InstanceData& dst);
MonoidalFunctor load_functor(const std::string& path, const InstanceData& src,
                             const InstanceData& dst);

std::string read_file(const std::string& path);   // throws ParseError
void write_file(const std::string& path, const std::string& text);

}  // namespace twogroups
