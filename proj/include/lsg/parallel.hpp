#ifndef LSG_PARALLEL_HPP
#define LSG_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace lsg {

// Runs f(i) for i in [0, n) on up to `threads` workers and returns the
// results by index, so assembly order never depends on the schedule.  The
// lowest-index exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(int n, int threads, F f) {
    std::vector<T> out(n);
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, n);
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (std::thread& th : pool) th.join();
    for (int i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return out;
}

}  // namespace lsg

#endif
