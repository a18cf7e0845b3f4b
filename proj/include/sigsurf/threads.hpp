#pragma once

namespace sigsurf {

// Optional cap from the SIGSURF_THREADS environment variable; 0 = no cap.
int thread_cap();

// Installs the cap on the OpenMP runtime (no-op without OpenMP or cap).
void apply_thread_cap();

// Number of threads parallel kernels will actually use.
int effective_threads();

}  // namespace sigsurf
