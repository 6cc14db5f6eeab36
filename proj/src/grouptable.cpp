#include "twogroups/grouptable.hpp"

#include <array>
#include <stdexcept>

namespace twogroups {

int find_identity(const MulTable& t) {
  for (std::uint32_t e = 0; e < t.order; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < t.order && ok; ++a)
      ok = t.mul(e, a) == a && t.mul(a, e) == a;
    if (ok) return static_cast<int>(e);
  }
  return -1;
}

bool is_monoid(const MulTable& t) {
  if (t.order == 0 || t.table.size() != t.order * t.order) return false;
  for (std::uint32_t x : t.table)
    if (x >= t.order) return false;
  if (find_identity(t) < 0) return false;
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < t.order; ++b)
      for (std::uint32_t c = 0; c < t.order; ++c)
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) return false;
  return true;
}

bool is_group(const MulTable& t) {
  if (!is_monoid(t)) return false;
  const std::uint32_t e = static_cast<std::uint32_t>(find_identity(t));
  for (std::uint32_t a = 0; a < t.order; ++a) {
    bool inv = false;
    for (std::uint32_t b = 0; b < t.order && !inv; ++b)
      inv = t.mul(a, b) == e && t.mul(b, a) == e;
    if (!inv) return false;
  }
  return true;
}

bool is_abelian(const MulTable& t) {
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < a; ++b)
      if (t.mul(a, b) != t.mul(b, a)) return false;
  return true;
}

std::uint32_t group_inverse(const MulTable& t, std::uint32_t a) {
  const std::uint32_t e = static_cast<std::uint32_t>(find_identity(t));
  for (std::uint32_t b = 0; b < t.order; ++b)
    if (t.mul(a, b) == e && t.mul(b, a) == e) return b;
  throw std::invalid_argument("group_inverse: element has no inverse");
}

MulTable cyclic_group(std::size_t n) {
  MulTable t;
  t.order = n;
  t.table.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t.table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  return t;
}

MulTable symmetric3() {
  // elements are permutations of {0,1,2} in lexicographic order
  static const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) -> std::uint32_t {
    for (std::uint32_t i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("symmetric3: permutation lookup failed");
  };
  MulTable t;
  t.order = 6;
  t.table.resize(36);
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) {
      // p * q applies p first, then q
      std::array<int, 3> r;
      for (int i = 0; i < 3; ++i) r[i] = perms[b][perms[a][i]];
      t.table[a * 6 + b] = index_of(r);
    }
  return t;
}

MulTable named_group(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      n = 0;
    }
    if (n >= 1 && n <= 32) return cyclic_group(static_cast<std::size_t>(n));
  }
  throw std::invalid_argument("named_group: unknown group '" + name + "'");
}

}  // namespace twogroups
