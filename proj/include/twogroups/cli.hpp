#pragma once

#include <iosfwd>
#include <string>

#include "twogroups/instance_io.hpp"

namespace twogroups {
namespace cli {

// Exit codes shared by all subcommands:
//   0 pass, 1 law violation, 2 structural/parse error, 3 inconclusive
// (prove only).  Reports are human-readable but line-stable.
inline constexpr int kPass = 0;
inline constexpr int kLawViolation = 1;
inline constexpr int kStructural = 2;
inline constexpr int kInconclusive = 3;

int cmd_validate(const std::string& path, const std::string& level,
                 std::ostream& out);

// Improves the instance, writing DUAL/UNIT_I/COUNIT_E sections; the choice
// comes from the file's own data when present, otherwise from the weak
// certificate.
int cmd_improve(const std::string& path, const std::string& out_path,
                std::ostream& out);

int cmd_check_hom(const std::string& functor_path, const std::string& src_path,
                  const std::string& dst_path, std::ostream& out);

int cmd_prove(const std::string& d1_path, const std::string& d2_path,
              int max_steps, const std::string& trace_out_path,
              std::ostream& out);

int cmd_gen(const std::string& directive, const std::string& out_path,
            std::uint64_t seed, std::ostream& out);

}  // namespace cli
}  // namespace twogroups
