#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cascade {

// FNV-1a, used for manifest file hashes and derived RNG seeds.
inline uint64_t fnv1a64(std::string_view data, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline uint64_t fnv1a64_mix(uint64_t h, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xFFu;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data);

// Hashes a file's contents; throws DataError when the file cannot be read.
std::string hash_file_hex(const std::string& path);

// Deterministic seed for a (base seed, label, index) triple, independent of
// processing order so parallel generation stays reproducible.
inline uint64_t derive_seed(uint64_t base, std::string_view label, uint64_t index) {
  return fnv1a64_mix(fnv1a64(label, base ^ 0x9e3779b97f4a7c15ULL), index);
}

}  // namespace cascade
