#pragma once

namespace qsemi {

/// Entry point of the command-line driver; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace qsemi
