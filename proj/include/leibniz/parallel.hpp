#pragma once

namespace leibniz {

/// Selects between the serial reference path and the OpenMP kernel.
/// Both paths must produce identical results.
enum class Execution { serial, parallel };

/// Thread cap for the OpenMP kernels. Initialized from LEIBNIZ_LAB_THREADS
/// (0 or unset means the OpenMP default).
int thread_count();
void set_thread_count(int threads);

}  // namespace leibniz
