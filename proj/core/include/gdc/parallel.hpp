// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gdc
{

// Run fn(0..n-1) over a pool of hardware threads. Sweep drivers use this
// for the per-point computations and then write results in index order, so
// file contents never depend on completion order. If any calls throw, the
// exception from the lowest index is rethrown after all workers finish,
// which keeps the failure deterministic too. max_workers of 0 means one
// worker per hardware thread.
template <typename Fn> void parallel_for(std::size_t n, Fn &&fn, std::size_t max_workers = 0)
{
    if (max_workers == 0)
    {
        const unsigned hw = std::thread::hardware_concurrency();
        max_workers = hw > 0 ? hw : 1;
    }
    const std::size_t workers = std::min(n, max_workers);

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try
            {
                fn(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (auto &t : pool)
        t.join();

    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace gdc
