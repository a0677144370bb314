#pragma once

namespace fencekit {

// exit codes: 0 success, 1 anomaly or failed verification, 2 bad input
int run_cli(int argc, char** argv);

}  // namespace fencekit
