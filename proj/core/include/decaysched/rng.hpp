#pragma once

#include <cstdint>
#include <initializer_list>

namespace decaysched {

/// SplitMix64 finalizer: a full-avalanche permutation of 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based deterministic stream: hashes (seed, words...) to a
/// 64-bit value. The same key yields the same value on every platform,
/// which is what makes seeded runs and common-random-numbers coupling
/// reproducible. There is no hidden generator state; callers build keys
/// from whatever identifies a draw (replication index, job id, field
/// tag, ...).
std::uint64_t keyed_bits(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

/// Map 64 random bits to a double in [0, 1) using the top 53 bits.
double u01_from_bits(std::uint64_t bits);

double keyed_u01(std::uint64_t seed, std::initializer_list<std::uint64_t> words);

}  // namespace decaysched
