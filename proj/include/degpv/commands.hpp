#ifndef DEGPV_COMMANDS_HPP
#define DEGPV_COMMANDS_HPP

#include <iosfwd>

#include "degpv/config.hpp"

namespace degpv {

// CLI subcommand implementations. Results go to `out`, diagnostics to `err`.
// Exit-code contract: 0 pass, 1 numeric/suite failure, 2 usage/config error.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_monodromy(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_backlund(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_surface(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace degpv

#endif
