#ifndef BRIDGEPLAN_IO_HPP
#define BRIDGEPLAN_IO_HPP

#include <bit>
#include <cstdint>
#include <cstdio>
#include <string>

namespace bridgeplan::io {

static_assert(std::endian::native == std::endian::little,
              "binary artifact formats assume a little-endian host");

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// 17 significant digits round-trips any double; used by every text artifact
// so identical runs produce identical bytes.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bridgeplan::io

#endif
