#ifndef LYNPBW_COMMANDS_HPP
#define LYNPBW_COMMANDS_HPP

#include <iosfwd>

#include "lynpbw/presentation.hpp"

namespace lynpbw {

struct CommandOptions {
    long max_degree = -1;  // overrides the presentation's bound when >= 0
    BracketMode mode = BracketMode::Tau;
    Side side = Side::Left;
    int orders = 2;             // extra random orders for basis verification
    unsigned long seed = 1;
    bool machine = false;       // suppress comment lines
    std::vector<int> subalphabet;  // initial-segment sizes Y1[, Y2]
    int threads = 1;
    std::string poly;           // expression for `rearrange`
};

// Dispatches one of: gb, basis, pbw, heights, rearrange, coideal,
// check-comult, ore, hilbert, chains, report-all.  Returns 0 on all-pass and
// 1 when a check reports a violation; input problems are raised as errors.
int run_command(const std::string& command, const Presentation& pres, const CommandOptions& opts,
                std::ostream& out);

} // namespace lynpbw

#endif
