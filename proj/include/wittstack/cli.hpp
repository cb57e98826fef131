#ifndef WITTSTACK_CLI_HPP
#define WITTSTACK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wittstack {

// Full command-line front end. Returns 0 on success, 1 on domain errors,
// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittstack

#endif
