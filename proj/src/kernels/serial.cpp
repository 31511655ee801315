//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file kernels/serial.cpp
//! Reference implementation: shards run one after another.
//---------------------------------------------------------------------------//
#include <algorithm>

#include "bellworlds/kernels.hpp"
#include "bellworlds/sausage.hpp"

namespace bellworlds::kernels
{
std::uint64_t shard_count(std::uint64_t n_runs)
{
    return (n_runs + shard_runs - 1) / shard_runs;
}

namespace serial
{
CounterTable accumulate(std::uint64_t n_runs, std::uint64_t seed, ShardBody const& body)
{
    RngStream parent{seed};
    CounterTable total;
    for (std::uint64_t shard = 0; shard < shard_count(n_runs); ++shard)
    {
        RngStream rng = parent.substream(shard);
        std::uint64_t runs = std::min(shard_runs, n_runs - shard * shard_runs);
        body(rng, runs, total);
    }
    return total;
}
}  // namespace serial

CounterTable classify_uniform(Angle alpha, Angle beta, std::uint64_t n_samples,
                              std::uint64_t seed, Execution exec)
{
    return accumulate(exec, n_samples, seed,
                      [alpha, beta](RngStream& rng, std::uint64_t runs, CounterTable& table) {
                          for (std::uint64_t i = 0; i < runs; ++i)
                          {
                              Angle rho = sample_dr(rng).rho();
                              table.add(0, classify_world(rho, alpha, beta));
                          }
                      });
}

}  // namespace bellworlds::kernels
