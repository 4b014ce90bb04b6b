#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <string>

namespace kfslam {

// 256-bit binary feature descriptor compared under hamming distance.
struct BinaryDescriptor {
  std::array<std::uint64_t, 4> words{0, 0, 0, 0};

  bool operator==(const BinaryDescriptor&) const = default;

  bool TestBit(int i) const {
    return (words[i >> 6] >> (i & 63)) & 1ull;
  }
  void FlipBit(int i) { words[i >> 6] ^= (1ull << (i & 63)); }
};

inline int HammingDistance(const BinaryDescriptor& a,
                           const BinaryDescriptor& b) {
  int d = 0;
  for (int i = 0; i < 4; ++i) d += std::popcount(a.words[i] ^ b.words[i]);
  return d;
}

template <typename Rng>
BinaryDescriptor RandomDescriptor(Rng& rng) {
  BinaryDescriptor d;
  for (auto& w : d.words) w = rng();
  return d;
}

// Flips `count` distinct random bits. Models descriptor corruption between
// observations of the same physical feature.
template <typename Rng>
BinaryDescriptor CorruptDescriptor(const BinaryDescriptor& d, int count,
                                   Rng& rng) {
  BinaryDescriptor out = d;
  std::uniform_int_distribution<int> pick(0, 255);
  int flipped = 0;
  while (flipped < count) {
    const int bit = pick(rng);
    if (!(out.TestBit(bit) != d.TestBit(bit))) {
      out.FlipBit(bit);
      ++flipped;
    }
  }
  return out;
}

inline std::string ToHex(const BinaryDescriptor& d) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(64);
  for (int w = 3; w >= 0; --w) {
    for (int n = 15; n >= 0; --n) {
      s.push_back(digits[(d.words[w] >> (4 * n)) & 0xf]);
    }
  }
  return s;
}

inline BinaryDescriptor FromHex(const std::string& s) {
  BinaryDescriptor d;
  for (int i = 0; i < 64 && i < static_cast<int>(s.size()); ++i) {
    const char c = s[i];
    std::uint64_t v = 0;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = 10 + c - 'a';
    else if (c >= 'A' && c <= 'F') v = 10 + c - 'A';
    const int w = 3 - i / 16;
    const int n = 15 - i % 16;
    d.words[w] |= v << (4 * n);
  }
  return d;
}

}  // namespace kfslam
