#pragma once

#include <cstddef>

namespace divland {

// Execution choice for the data-parallel kernels. The serial path is the
// reference implementation; the parallel path must produce identical output.
enum class Execution { serial, parallel };

// Thread count taken from DIVLAND_THREADS when set, else the OpenMP default.
int configured_threads();
void apply_thread_env();

} // namespace divland
