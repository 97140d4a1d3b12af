#pragma once

namespace twistkit {

/// Upper bound on worker threads used by the per-tuple validators
/// (TWISTKIT_THREADS in the CLI).  1 disables threading.
void set_thread_cap(unsigned cap);
unsigned thread_cap();

} // namespace twistkit
