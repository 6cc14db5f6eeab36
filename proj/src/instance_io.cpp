#include "twogroups/instance_io.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace twogroups {

bool same_instance(const InstanceData& a, const InstanceData& b) {
  if (!(a.m == b.m)) return false;
  if (a.data.has_value() != b.data.has_value()) return false;
  if (!a.data) return true;
  return a.data->dual == b.data->dual && a.data->unit_i == b.data->unit_i &&
         a.data->counit_e == b.data->counit_e;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint32_t directive_choice(const std::string& tok, std::size_t order,
                               std::mt19937_64& rng) {
  if (tok == "?") return static_cast<std::uint32_t>(rng() % order);
  int v = -1;
  try {
    v = std::stoi(tok);
  } catch (...) {
    v = -1;
  }
  if (v < 0 || v >= static_cast<int>(order))
    throw ParseError("directive: choice '" + tok + "' out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

InstanceData instance_from_directive(const std::string& directive,
                                     std::uint64_t seed) {
  std::vector<std::string> parts = split(directive, ':');
  std::mt19937_64 rng(seed);
  try {
    if (parts[0] == "group" && parts.size() == 2) {
      CoherentTwoGroup g = from_group(named_group(parts[1]));
      return {std::move(g.m), std::move(g.data)};
    }
    if (parts[0] == "deloop" && parts.size() == 4) {
      MulTable t = named_group(parts[1]);
      std::uint32_t i = directive_choice(parts[2], t.order, rng);
      std::uint32_t e = directive_choice(parts[3], t.order, rng);
      auto [m, d] = deloop_abelian(t, i, e);
      return {std::move(m), std::move(d)};
    }
    if (parts[0] == "xmod" && parts.size() == 5) {
      CrossedModule x;
      x.g = named_group(parts[1]);
      x.h = named_group(parts[2]);
      if (parts[3] == "id") {
        if (x.g.order != x.h.order)
          throw ParseError("xmod: t=id needs |G| == |H|");
        x.t.resize(x.h.order);
        for (std::uint32_t h = 0; h < x.h.order; ++h) x.t[h] = h;
      } else if (parts[3] == "trivial") {
        x.t.assign(x.h.order,
                   static_cast<std::uint32_t>(find_identity(x.g)));
      } else {
        throw ParseError("xmod: unknown t '" + parts[3] + "'");
      }
      if (parts[4] == "trivial") {
        x.action.resize(x.g.order * x.h.order);
        for (std::uint32_t g = 0; g < x.g.order; ++g)
          for (std::uint32_t h = 0; h < x.h.order; ++h)
            x.action[g * x.h.order + h] = h;
      } else {
        throw ParseError("xmod: unknown alpha '" + parts[4] + "'");
      }
      CoherentTwoGroup g = from_crossed_module(x);
      return {std::move(g.m), std::move(g.data)};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("directive: ") + e.what());
  }
  throw ParseError("unknown GENERATOR directive '" + directive + "'");
}

namespace {

// sequential token reader over '#'-commented text
class Tokens {
 public:
  explicit Tokens(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string t;
      while (ls >> t) toks_.push_back(t);
    }
  }
  bool done() const { return pos_ >= toks_.size(); }
  const std::string& peek() const {
    if (done()) throw ParseError("unexpected end of file");
    return toks_[pos_];
  }
  std::string next() {
    if (done()) throw ParseError("unexpected end of file");
    return toks_[pos_++];
  }
  void expect(const std::string& kw) {
    std::string t = next();
    if (t != kw)
      throw ParseError("expected '" + kw + "', found '" + t + "'");
  }
  long integer() {
    std::string t = next();
    try {
      std::size_t used = 0;
      long v = std::stol(t, &used);
      if (used != t.size()) throw ParseError("bad integer '" + t + "'");
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("bad integer '" + t + "'");
    }
  }
  std::uint32_t index(std::size_t bound, const char* what) {
    long v = integer();
    if (v < 0 || v >= static_cast<long>(bound))
      throw ParseError(std::string(what) + " id out of range");
    return static_cast<std::uint32_t>(v);
  }
  MorId mor_or_none(std::size_t bound) {
    long v = integer();
    if (v == -1) return kNoMor;
    if (v < 0 || v >= static_cast<long>(bound))
      throw ParseError("morphism id out of range");
    return MorId{static_cast<std::uint32_t>(v)};
  }

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

InstanceData parse_instance(const std::string& text, std::uint64_t seed) {
  Tokens tk(text);
  if (tk.peek() == "GENERATOR") {
    tk.next();
    std::string directive = tk.next();
    if (!tk.done())
      throw ParseError("GENERATOR is mutually exclusive with explicit tables");
    return instance_from_directive(directive, seed);
  }

  tk.expect("OBJECTS");
  long n = tk.integer();
  if (n < 1 || n > 4096) throw ParseError("OBJECTS count out of range");
  tk.expect("MORPHISMS");
  long mm = tk.integer();
  if (mm < 1 || mm > 65536) throw ParseError("MORPHISMS count out of range");

  FinCategory c;
  c.objects = static_cast<std::size_t>(n);
  c.morphisms.resize(mm);
  std::vector<bool> seen(mm, false);
  for (long k = 0; k < mm; ++k) {
    std::uint32_t id = tk.index(mm, "morphism");
    std::uint32_t dom = tk.index(n, "object");
    std::uint32_t cod = tk.index(n, "object");
    if (seen[id]) throw ParseError("duplicate morphism id");
    seen[id] = true;
    c.morphisms[id] = {MorId{id}, ObjId{dom}, ObjId{cod}};
  }
  tk.expect("IDENTITY");
  c.identity.resize(n);
  for (long k = 0; k < n; ++k) c.identity[k] = MorId{tk.index(mm, "morphism")};
  tk.expect("COMPOSE");
  c.compose_table.assign(mm, std::vector<MorId>(mm));
  for (long f = 0; f < mm; ++f)
    for (long g = 0; g < mm; ++g) c.compose_table[f][g] = tk.mor_or_none(mm);

  tk.expect("TENSOR_OB");
  std::vector<ObjId> tob(n * n);
  for (long k = 0; k < n * n; ++k) tob[k] = ObjId{tk.index(n, "object")};
  tk.expect("TENSOR_MOR");
  std::vector<MorId> tmor(mm * mm);
  for (long k = 0; k < mm * mm; ++k) tmor[k] = MorId{tk.index(mm, "morphism")};
  tk.expect("UNIT");
  ObjId unit{tk.index(n, "object")};
  tk.expect("ASSOC");
  std::vector<MorId> assoc(n * n * n);
  for (long k = 0; k < n * n * n; ++k) assoc[k] = MorId{tk.index(mm, "morphism")};
  tk.expect("LUNIT");
  std::vector<MorId> lun(n);
  for (long k = 0; k < n; ++k) lun[k] = MorId{tk.index(mm, "morphism")};
  tk.expect("RUNIT");
  std::vector<MorId> run(n);
  for (long k = 0; k < n; ++k) run[k] = MorId{tk.index(mm, "morphism")};

  InstanceData out;
  out.m = make_monoidal(std::make_shared<const FinCategory>(std::move(c)),
                        std::move(tob), std::move(tmor), unit, std::move(assoc),
                        std::move(lun), std::move(run));

  if (!tk.done()) {
    tk.expect("DUAL");
    CoherentData d;
    d.dual.resize(n);
    for (long k = 0; k < n; ++k) d.dual[k] = ObjId{tk.index(n, "object")};
    tk.expect("UNIT_I");
    d.unit_i.resize(n);
    for (long k = 0; k < n; ++k) d.unit_i[k] = MorId{tk.index(mm, "morphism")};
    tk.expect("COUNIT_E");
    d.counit_e.resize(n);
    for (long k = 0; k < n; ++k) d.counit_e[k] = MorId{tk.index(mm, "morphism")};
    out.data = std::move(d);
  }
  if (!tk.done()) throw ParseError("trailing tokens after COUNIT_E");
  return out;
}

std::string serialize_instance(const MonoidalStructure& m,
                               const CoherentData* data) {
  std::ostringstream os;
  const FinCategory& c = *m.base;
  const std::size_t n = c.objects, mm = c.morphism_count();
  os << "OBJECTS " << n << '\n';
  os << "MORPHISMS " << mm << '\n';
  for (std::size_t i = 0; i < mm; ++i)
    os << i << ' ' << c.morphisms[i].dom.v << ' ' << c.morphisms[i].cod.v
       << '\n';
  os << "IDENTITY";
  for (std::size_t x = 0; x < n; ++x) os << ' ' << c.identity[x].v;
  os << '\n';
  os << "COMPOSE\n";
  for (std::size_t f = 0; f < mm; ++f) {
    for (std::size_t g = 0; g < mm; ++g) {
      MorId h = c.compose_table[f][g];
      os << (g ? " " : "") << (h == kNoMor ? -1L : static_cast<long>(h.v));
    }
    os << '\n';
  }
  os << "TENSOR_OB\n";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      os << (y ? " " : "") << m.tensor.ob_map[x * n + y].v;
    os << '\n';
  }
  os << "TENSOR_MOR\n";
  for (std::size_t f = 0; f < mm; ++f) {
    for (std::size_t g = 0; g < mm; ++g)
      os << (g ? " " : "") << m.tensor.mor_map[f * mm + g].v;
    os << '\n';
  }
  os << "UNIT " << m.unit.v << '\n';
  os << "ASSOC\n";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z)
        os << (z ? " " : "") << m.assoc[(x * n + y) * n + z].v;
      os << '\n';
    }
  os << "LUNIT";
  for (std::size_t x = 0; x < n; ++x) os << ' ' << m.lunit[x].v;
  os << '\n';
  os << "RUNIT";
  for (std::size_t x = 0; x < n; ++x) os << ' ' << m.runit[x].v;
  os << '\n';
  if (data) {
    os << "DUAL";
    for (std::size_t x = 0; x < n; ++x) os << ' ' << data->dual[x].v;
    os << '\n';
    os << "UNIT_I";
    for (std::size_t x = 0; x < n; ++x) os << ' ' << data->unit_i[x].v;
    os << '\n';
    os << "COUNIT_E";
    for (std::size_t x = 0; x < n; ++x) os << ' ' << data->counit_e[x].v;
    os << '\n';
  }
  return os.str();
}

MonoidalFunctor parse_functor(const std::string& text, const InstanceData& src,
                              const InstanceData& dst) {
  Tokens tk(text);
  const std::size_t n = src.m.object_count();
  const std::size_t mm = src.m.base->morphism_count();
  const std::size_t nd = dst.m.object_count();
  const std::size_t md = dst.m.base->morphism_count();
  tk.expect("FUNCTOR");
  MonoidalFunctor fm;
  fm.f.source = src.m.base;
  fm.f.target = dst.m.base;
  tk.expect("OB_MAP");
  fm.f.ob_map.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    fm.f.ob_map[k] = ObjId{tk.index(nd, "object")};
  tk.expect("MOR_MAP");
  fm.f.mor_map.resize(mm);
  for (std::size_t k = 0; k < mm; ++k)
    fm.f.mor_map[k] = MorId{tk.index(md, "morphism")};
  tk.expect("F2");
  fm.f2.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k)
    fm.f2[k] = MorId{tk.index(md, "morphism")};
  tk.expect("F0");
  fm.f0 = MorId{tk.index(md, "morphism")};
  if (!tk.done()) throw ParseError("trailing tokens after F0");
  return fm;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot write file '" + path + "'");
  os << text;
}

InstanceData load_instance(const std::string& path, std::uint64_t seed) {
  return parse_instance(read_file(path), seed);
}

MonoidalFunctor load_functor(const std::string& path, const InstanceData& src,
                             const InstanceData& dst) {
  return parse_functor(read_file(path), src, dst);
}

void save_instance(const std::string& path, const MonoidalStructure& m,
                   const CoherentData* data) {
  write_file(path, serialize_instance(m, data));
}

}  // namespace twogroups
