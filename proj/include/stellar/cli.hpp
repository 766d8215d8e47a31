// Command-line front end; run() is the whole program so it can be driven
// in-process by tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stellar {

// args excludes the program name. Returns 0 on success, 1 on domain errors
// (the library's error name prefixes the message), 2 on usage/parse errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stellar
