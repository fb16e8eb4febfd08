#ifndef SUSPKIT_CLI_HPP
#define SUSPKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace suspkit::cli {

// Exit codes: 0 decided/valid, 1 decided-negative, 2 usage or parse error,
// 3 required oracle input missing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace suspkit::cli

#endif
