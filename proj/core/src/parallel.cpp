#include "twistkit/parallel.hpp"

#include <atomic>

namespace twistkit {

namespace {
std::atomic<unsigned> g_cap{1};
}

void set_thread_cap(unsigned cap) { g_cap.store(cap == 0 ? 1 : cap); }
unsigned thread_cap() { return g_cap.load(); }

} // namespace twistkit
