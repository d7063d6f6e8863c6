// SPDX-License-Identifier: Apache-2.0
//
// wptsim - multi-user scheduling simulator for far-field wireless power transfer
// Copyright (C) 2026 wptsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#ifndef WPTSIM_RNG_HPP
#define WPTSIM_RNG_HPP

#include <cstdint>

namespace wptsim {

/// What a draw is for. Separate purposes give independent streams per
/// (slot, ue), so adding or skipping one kind of draw never shifts another.
enum class DrawPurpose : std::uint64_t { fading = 0, distance = 1 };

namespace detail {

// SplitMix64 finalizer: a full-avalanche bijection on 64 bits.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

} // namespace detail

/// Counter-based uniform stream: every draw is a pure hash of
/// (seed, replication, slot, ue, purpose). Draw order is therefore
/// independent of scheduling policy and thread layout, and any draw can be
/// recomputed in isolation.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t replication,
                                  std::uint64_t slot, std::uint64_t ue, DrawPurpose purpose) {
    using namespace detail;
    std::uint64_t h = mix64(seed + golden);
    h = mix64(h ^ (replication + golden));
    h = mix64(h ^ (slot + golden));
    h = mix64(h ^ (ue + golden * (static_cast<std::uint64_t>(purpose) + 1)));
    return mix64(h);
}

/// Uniform double strictly inside (0, 1): (k + 0.5) / 2^53 over the top 53
/// bits, so inverse-CDF transforms never see 0 or 1.
inline double to_unit_open(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform_draw(std::uint64_t seed, std::uint64_t replication, std::uint64_t slot,
                           std::uint64_t ue, DrawPurpose purpose) {
    return to_unit_open(counter_hash(seed, replication, slot, ue, purpose));
}

/// Per-slot view of the stream with the (seed, replication, slot) prefix
/// hashed once. Produces bit-identical values to uniform_draw.
class SlotRng {
  public:
    SlotRng(std::uint64_t seed, std::uint64_t replication, std::uint64_t slot) {
        using namespace detail;
        std::uint64_t h = mix64(seed + golden);
        h = mix64(h ^ (replication + golden));
        prefix_ = mix64(h ^ (slot + golden));
    }

    [[nodiscard]] double uniform(std::uint64_t ue, DrawPurpose purpose) const {
        using namespace detail;
        const std::uint64_t h =
            mix64(prefix_ ^ (ue + golden * (static_cast<std::uint64_t>(purpose) + 1)));
        return to_unit_open(mix64(h));
    }

  private:
    std::uint64_t prefix_ = 0;
};

} // namespace wptsim

#endif // WPTSIM_RNG_HPP
