//---------------------------------------------------------------------------//
// Copyright 2026 bellworlds developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bellworlds/rng.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>

namespace bellworlds
{
//---------------------------------------------------------------------------//
/*!
 * Seedable, splittable random stream.
 *
 * The engine is a 64-bit Mersenne twister. Sub-stream \c k of a stream with
 * seed \c s is the stream seeded with \c derive_seed(s, k), which mixes both
 * values through two rounds of the SplitMix64 finalizer. All conversions to
 * reals and small integers are done here with fixed bit manipulations, so a
 * given seed produces the same draws on every platform.
 */
class RngStream
{
  public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed);

    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

    //! Independent child stream number \c stream.
    RngStream substream(std::uint64_t stream) const
    {
        return RngStream{derive_seed(seed_, stream)};
    }

    std::uint64_t seed() const { return seed_; }

    //! Raw 64 random bits.
    std::uint64_t bits() { return engine_(); }
    //! Uniform real in [0, 1) with 53 random bits.
    double uniform();
    //! Uniform integer in [0, 4).
    int uniform4() { return static_cast<int>(engine_() >> 62); }
    //! True with probability one half.
    bool coin() { return (engine_() >> 63) != 0; }

    // UniformRandomBitGenerator interface
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

//! SplitMix64 output function.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace bellworlds
