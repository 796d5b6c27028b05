#pragma once

#include <array>
#include <cstdint>

namespace convdens {

/// Counter-based pseudo-random generator (Philox4x32-10, Salmon et al. 2011).
///
/// State is (key, stream, block counter); every output block is a pure
/// function of these, so independent substreams can be consumed in any
/// order and still reproduce bit-identical values.  Substream convention
/// used throughout this project: a replication set with base `seed` gives
/// task (a, b) the stream id substream(a, b).
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0, 1), 53-bit resolution.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard normal draw via the inverse CDF (no rejection, one uniform
  /// consumed per variate).
  double normal();

  std::uint64_t seed() const {
    return static_cast<std::uint64_t>(key_[0]) |
           (static_cast<std::uint64_t>(key_[1]) << 32);
  }
  std::uint64_t stream() const { return stream_; }

  /// One raw 4x32 block for the given (key, counter); exposed for the
  /// known-answer tests.
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 2>& key,
      const std::array<std::uint32_t, 4>& counter);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_ = 0;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

/// Quantile of the standard normal distribution (Wichura's AS 241,
/// double-precision branch). Requires p in (0, 1).
double inverse_normal_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// Packs two 32-bit task coordinates into one stream id.
inline std::uint64_t substream(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace convdens
