#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specalg {

/// Command dispatch behind the `specalg` binary. Exit codes:
///   0 success / refinement holds / all laws hold / compatible
///   1 refinement false / some law fails / incompatible
///   2 usage error
///   3 parse error
///   4 undefined operation (control conflict, signature or alphabet mismatch)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specalg
