#ifndef HDC_CLIRUN_HPP
#define HDC_CLIRUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hdc {

// Runs one CLI invocation. Exit status: 0 on success, 2 on domain errors
// (machine-readable error JSON on err), 1 on internal errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace hdc

#endif
