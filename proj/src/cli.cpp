#include "twogroups/cli.hpp"

#include <ostream>
#include <sstream>

#include "twogroups/diagram.hpp"
#include "twogroups/improve.hpp"

namespace twogroups {
namespace cli {

namespace {

int report_result(const ValidationReport& rep, std::ostream& out) {
  out << rep.to_string();
  if (rep.has_structural()) {
    out << "RESULT STRUCTURAL\n";
    return kStructural;
  }
  if (!rep.ok()) {
    out << "RESULT FAIL\n";
    return kLawViolation;
  }
  out << "RESULT PASS\n";
  return kPass;
}

}  // namespace

int cmd_validate(const std::string& path, const std::string& level,
                 std::ostream& out) {
  InstanceData inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  out << "INSTANCE objects " << inst.m.object_count() << " morphisms "
      << inst.m.base->morphism_count() << '\n';
  out << "LEVEL " << level << '\n';
  ValidationReport rep = validate_monoidal(inst.m);
  if (level == "monoidal" || rep.has_structural())
    return report_result(rep, out);
  if (level == "weak") {
    if (rep.ok()) rep.merge(check_weak_2group(inst.m).report);
    return report_result(rep, out);
  }
  if (level == "coherent") {
    if (!inst.data) {
      out << "PARSE ERROR coherent level needs DUAL/UNIT_I/COUNIT_E\n";
      return kStructural;
    }
    if (rep.ok())
      rep = validate_coherent(CoherentTwoGroup{inst.m, *inst.data});
    return report_result(rep, out);
  }
  out << "PARSE ERROR unknown level '" << level << "'\n";
  return kStructural;
}

int cmd_improve(const std::string& path, const std::string& out_path,
                std::ostream& out) {
  InstanceData inst;
  try {
    inst = load_instance(path);
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  ValidationReport rep = validate_monoidal(inst.m);
  if (!rep.ok()) return report_result(rep, out);
  WeakCertification cert = check_weak_2group(inst.m);
  if (!cert.group) {
    rep.merge(cert.report);
    return report_result(rep, out);
  }
  InverseChoice ch = inst.data ? choice_from_data(*inst.data)
                               : choose_inverse_data(*cert.group);
  try {
    CoherentTwoGroup improved = improve(inst.m, ch);
    save_instance(out_path, improved.m, &improved.data);
  } catch (const std::invalid_argument& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  out << "IMPROVED -> " << out_path << '\n';
  out << "RESULT PASS\n";
  return kPass;
}

int cmd_check_hom(const std::string& functor_path, const std::string& src_path,
                  const std::string& dst_path, std::ostream& out) {
  InstanceData src, dst;
  MonoidalFunctor fm;
  try {
    src = load_instance(src_path);
    dst = load_instance(dst_path);
    fm = load_functor(functor_path, src, dst);
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  if (!src.data || !dst.data) {
    out << "PARSE ERROR both instances need DUAL/UNIT_I/COUNIT_E\n";
    return kStructural;
  }
  CoherentTwoGroup gs{src.m, *src.data};
  CoherentTwoGroup gd{dst.m, *dst.data};
  ValidationReport pre = validate_coherent(gs);
  pre.merge(validate_coherent(gd));
  if (!pre.ok()) {
    out << pre.to_string();
    out << "RESULT " << (pre.has_structural() ? "STRUCTURAL" : "FAIL") << '\n';
    return pre.has_structural() ? kStructural : kLawViolation;
  }

  ValidationReport rep = validate_monoidal_functor(src.m, dst.m, fm);
  out << rep.to_string();
  out << "CHECK monoidal_functor " << (rep.ok() ? "PASS" : "FAIL") << '\n';
  if (rep.has_structural()) {
    out << "RESULT STRUCTURAL\n";
    return kStructural;
  }
  if (!rep.ok()) {
    out << "CHECK fminus1_agree SKIP\n";
    out << "CHECK H1 SKIP\nCHECK H2 SKIP\n";
    out << "RESULT FAIL\n";
    return kLawViolation;
  }

  bool agree = true, h1 = true, h2 = true;
  for (std::uint32_t x = 0; x < src.m.object_count(); ++x) {
    MorId v1 = f_minus_one_f1(gs, gd, fm, ObjId{x});
    MorId v1p = f_minus_one_f1prime(gs, gd, fm, ObjId{x});
    MorId v2 = f_minus_one_f2(gs, gd, fm, ObjId{x});
    if (!(v1 == v1p && v1 == v2)) {
      agree = false;
      out << "FAIL FMINUS1_AGREE witness " << x << '\n';
    }
    if (!check_h1(gs, gd, fm, ObjId{x}, v1)) {
      h1 = false;
      out << "FAIL H1 witness " << x << '\n';
    }
    if (!check_h2(gs, gd, fm, ObjId{x}, v1)) {
      h2 = false;
      out << "FAIL H2 witness " << x << '\n';
    }
  }
  out << "CHECK fminus1_agree " << (agree ? "PASS" : "FAIL") << '\n';
  out << "CHECK H1 " << (h1 ? "PASS" : "FAIL") << '\n';
  out << "CHECK H2 " << (h2 ? "PASS" : "FAIL") << '\n';
  bool ok = agree && h1 && h2;
  out << "RESULT " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kPass : kLawViolation;
}

int cmd_prove(const std::string& d1_path, const std::string& d2_path,
              int max_steps, const std::string& trace_out_path,
              std::ostream& out) {
  diagram::Diagram d1, d2;
  try {
    d1 = diagram::parse_diagram(read_file(d1_path));
    d2 = diagram::parse_diagram(read_file(d2_path));
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  std::optional<diagram::RewriteTrace> tr;
  try {
    tr = diagram::equivalent(d1, d2, max_steps);
  } catch (const std::invalid_argument& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  if (!tr) {
    out << "INCONCLUSIVE bound " << max_steps << " exhausted\n";
    return kInconclusive;
  }
  std::string text = diagram::serialize_trace(*tr);
  // intermediate grids as comments, replayable by eye
  {
    std::ostringstream os;
    os << text;
    diagram::Diagram cur = diagram::canonical(d1);
    os << "# start\n";
    std::istringstream grid(diagram::serialize_diagram(cur));
    std::string l;
    while (std::getline(grid, l)) os << "# " << l << '\n';
    for (const diagram::RewriteStep& s : tr->steps) {
      cur = diagram::canonical(diagram::apply_rule(cur, s));
      os << "# after " << diagram::rule_name(s.rule) << ' '
         << diagram::kind_name(s.kind) << '\n';
      std::istringstream g2(diagram::serialize_diagram(cur));
      while (std::getline(g2, l)) os << "# " << l << '\n';
    }
    text = os.str();
  }
  if (!trace_out_path.empty()) {
    try {
      write_file(trace_out_path, text);
    } catch (const std::exception& e) {
      out << "PARSE ERROR " << e.what() << '\n';
      return kStructural;
    }
  } else {
    out << text;
  }
  out << "PROVED steps " << tr->steps.size() << '\n';
  return kPass;
}

int cmd_gen(const std::string& directive, const std::string& out_path,
            std::uint64_t seed, std::ostream& out) {
  InstanceData inst;
  try {
    inst = instance_from_directive(directive, seed);
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  std::string text = "# generated from " + directive + "\n" +
                     serialize_instance(inst.m, inst.data ? &*inst.data : nullptr);
  try {
    write_file(out_path, text);
  } catch (const std::exception& e) {
    out << "PARSE ERROR " << e.what() << '\n';
    return kStructural;
  }
  out << "GENERATED -> " << out_path << '\n';
  return kPass;
}

}  // namespace cli
}  // namespace twogroups
