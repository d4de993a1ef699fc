#include "vacpol/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vacpol
{
void parallel_for(std::size_t count,
                  unsigned threads,
                  std::function<void(std::size_t)> const& body)
{
    unsigned const workers
        = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), count));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            body(i);
        }
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    std::size_t const block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
        std::size_t const begin = w * block;
        std::size_t const end = std::min(count, begin + block);
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                {
                    body(i);
                }
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                {
                    failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}
}  // namespace vacpol
