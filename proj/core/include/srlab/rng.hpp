// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace srlab {

/// Philox4x64-10 counter-based block function (Salmon et al., SC'11).
/// Bit-compatible with Random123 and numpy.random.Philox.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

PhiloxCounter philox4x64(PhiloxCounter counter, PhiloxKey key);

/// SplitMix64 output function, used to fold identifiers into stream ids.
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Combines a list of identifiers (experiment tag, N, mode, sample index,
/// ...) into one stream id. Order-sensitive.
std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> parts);

/// Deterministic uniform stream keyed by (master_seed, stream_id).
///
/// Draw i is a pure function of (master_seed, stream_id, i): it is lane
/// i % 4 of the Philox block at counter i / 4. Two streams with the same
/// key produce the same sequence on every platform and schedule.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    /// Uniform in [0, 1) on the 2^-53 grid.
    double draw_unit();
    std::uint64_t next_u64();

    std::uint64_t master_seed() const { return key_[0]; }
    std::uint64_t stream_id() const { return key_[1]; }
    std::uint64_t draws_consumed() const { return index_; }

  private:
    PhiloxKey key_;
    std::uint64_t index_ = 0;
    std::uint64_t block_ = ~std::uint64_t{0};
    PhiloxCounter buffer_{};
};

}  // namespace srlab
