#pragma once

#include <cstdint>
#include <string_view>

namespace tweetsent {

/// splitmix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for a named pipeline stage. Pure function of (master, stage).
constexpr std::uint64_t stage_seed(std::uint64_t master, std::string_view stage) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : stage) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return mix64(master ^ mix64(h));
}

/// Seed for the i-th member of an indexed family (forest tree, fold, ...).
constexpr std::uint64_t indexed_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + mix64(index + 1));
}

}  // namespace tweetsent
