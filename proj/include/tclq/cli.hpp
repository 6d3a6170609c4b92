#pragma once

namespace tclq {

// Exit codes: 0 ok, 1 not converged under --require-converged, 2 config or
// usage error, 3 non-physical state encountered.
int run_cli(int argc, char** argv);

}  // namespace tclq
