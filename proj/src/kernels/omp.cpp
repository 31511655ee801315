//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file kernels/omp.cpp
//! OpenMP kernel: shards are distributed over threads, each thread keeps a
//! private table and the tables are merged at the end.
//---------------------------------------------------------------------------//
#include <omp.h>

#include <algorithm>
#include <exception>
#include <vector>

#include "bellworlds/kernels.hpp"

namespace bellworlds::kernels::omp
{
int max_threads()
{
    return omp_get_max_threads();
}

CounterTable accumulate(std::uint64_t n_runs, std::uint64_t seed, ShardBody const& body)
{
    RngStream const parent{seed};
    auto const n_shards = static_cast<std::int64_t>(shard_count(n_runs));
    std::vector<CounterTable> partial(static_cast<std::size_t>(omp_get_max_threads()));
    std::exception_ptr error;

#pragma omp parallel
    {
        CounterTable& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t shard = 0; shard < n_shards; ++shard)
        {
            try
            {
                auto s = static_cast<std::uint64_t>(shard);
                RngStream rng = parent.substream(s);
                std::uint64_t runs = std::min(shard_runs, n_runs - s * shard_runs);
                body(rng, runs, local);
            }
            catch (...)
            {
#pragma omp critical
                error = std::current_exception();
            }
        }
    }
    if (error)
        std::rethrow_exception(error);

    // Counts are integers below 2^53, so the merge order does not matter
    CounterTable total;
    for (auto const& t : partial)
        total += t;
    return total;
}

}  // namespace bellworlds::kernels::omp
