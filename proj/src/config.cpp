#include "ulrich/config.hpp"

#include "ulrich/errors.hpp"

#include <atomic>

namespace ulrich {

namespace {
std::atomic<int> g_window_factor{2};
}

int window_factor()
{
    return g_window_factor.load(std::memory_order_relaxed);
}

void set_window_factor(int factor)
{
    if (factor < 2 || factor > 64)
        raise(errc::internal, "window factor must lie in [2, 64], got " + std::to_string(factor));
    g_window_factor.store(factor, std::memory_order_relaxed);
}

} // namespace ulrich
