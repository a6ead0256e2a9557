#pragma once

#include <string>

#include "tropws/cycle.hpp"
#include "tropws/matrix.hpp"

namespace trop {

// External tropicalization oracle: a command invoked with two extra path
// arguments (request file, response file). The request holds a projection
// matrix block and the cycle block of Trop U; the response must be a cycle
// block. Responses are untrusted and validated by the caller.
struct OracleSpec {
    std::string command;
    int timeout_sec = 60;
};

// Writes the request, runs the command, parses the response. Throws
// oracle_error on nonzero exit, timeout or an unparsable response.
TropicalCycle oracle_query(const OracleSpec& spec, const IMat& projection,
                           const TropicalCycle& trop_u);

// run a shell command with a timeout; returns the exit status
int run_with_timeout(const std::string& command, int timeout_sec);

}  // namespace trop
