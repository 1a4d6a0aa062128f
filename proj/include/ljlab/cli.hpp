#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ljlab::cli
{

inline constexpr const char* kVersion = "0.1.0";

enum ExitStatus : int
{
	kPass = 0,
	kCheckFailure = 1,
	kUsage = 2,
	kInternal = 3,
};

/// Runs `ljlab <args...>` (args excludes the program name). The report goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ljlab::cli
