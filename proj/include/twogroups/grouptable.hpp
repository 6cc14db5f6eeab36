#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twogroups {

// Multiplication table of a finite magma; mul(a, b) row-major.  Used both
// for genuine groups and for the monoid counterexamples.
struct MulTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> table;  // order * order entries

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[a * order + b];
  }
};

// Two-sided identity element, if any.
int find_identity(const MulTable& t);

bool is_monoid(const MulTable& t);   // associative with two-sided identity
bool is_group(const MulTable& t);    // monoid with two-sided inverses
bool is_abelian(const MulTable& t);

std::uint32_t group_inverse(const MulTable& t, std::uint32_t a);

MulTable cyclic_group(std::size_t n);
MulTable symmetric3();  // permutations of {0,1,2}, composed left to right

// Lookup by name: Z1..Z32, S3.  Throws std::invalid_argument otherwise.
MulTable named_group(const std::string& name);

}  // namespace twogroups
