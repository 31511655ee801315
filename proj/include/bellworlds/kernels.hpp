//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/kernels.hpp
//! Sharded Monte Carlo accumulation.
//!
//! A batch of n runs is cut into fixed-size shards; shard k draws from
//! sub-stream k of the batch seed. The partition does not depend on the
//! thread count, so the serial reference and the OpenMP kernel produce
//! identical tables.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <functional>

#include "geometry.hpp"
#include "lrm.hpp"
#include "rng.hpp"

namespace bellworlds
{
enum class Execution
{
    serial,
    parallel,
};

namespace kernels
{
inline constexpr std::uint64_t shard_runs = 8192;

//! Simulate \c runs runs from \c rng and add them to \c table.
using ShardBody = std::function<void(RngStream& rng, std::uint64_t runs,
                                     CounterTable& table)>;

std::uint64_t shard_count(std::uint64_t n_runs);

namespace serial
{
CounterTable accumulate(std::uint64_t n_runs, std::uint64_t seed, ShardBody const& body);
}

namespace omp
{
CounterTable accumulate(std::uint64_t n_runs, std::uint64_t seed, ShardBody const& body);
int max_threads();
}

inline CounterTable accumulate(Execution exec, std::uint64_t n_runs,
                               std::uint64_t seed, ShardBody const& body)
{
    return exec == Execution::serial ? serial::accumulate(n_runs, seed, body)
                                     : omp::accumulate(n_runs, seed, body);
}

/*!
 * Classify \c n_samples uniformly drawn world angles at fixed axes.
 *
 * Counts land in row 0 of the returned table.
 */
CounterTable classify_uniform(Angle alpha, Angle beta, std::uint64_t n_samples,
                              std::uint64_t seed, Execution exec);

}  // namespace kernels
}  // namespace bellworlds
