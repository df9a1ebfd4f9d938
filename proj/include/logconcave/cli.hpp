#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logconcave {

// Entry point behind the lcverify binary. args excludes the program name.
// Exit codes: 0 all checks pass, 1 inequality violation or failed
// certification, 2 malformed input or usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logconcave
