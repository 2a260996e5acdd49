#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace polarsim {

// SplitMix64 finalizer; used to derive independent substream seeds from a
// master seed and a path of indices (cell, run, purpose tag).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t w : path)
        h = splitmix64(h ^ w);
    return h;
}

// Stream purpose tags, kept distinct so reordering work never aliases streams.
namespace stream_tag {
inline constexpr std::uint64_t graph = 0x6772617068ULL;
inline constexpr std::uint64_t hawkes_params = 0x6861776b6573ULL;
inline constexpr std::uint64_t events = 0x6576656e7473ULL;
inline constexpr std::uint64_t initial_opinions = 0x696e6974ULL;
inline constexpr std::uint64_t replay = 0x7265706c6179ULL;
}  // namespace stream_tag

inline std::mt19937_64 substream(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    return std::mt19937_64(mix_seed(master, path));
}

}  // namespace polarsim
