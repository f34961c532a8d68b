#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigtau {

// One CLI invocation; args excludes the program name. Results go to out,
// complaints to err. Returns the process exit code: 0 on success, 1 on a
// usage error (bad flags, malformed slope or word text, bad format name),
// 2 on a domain error (zero or non-coprime input, out-of-range arguments,
// exceeded caps).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigtau
