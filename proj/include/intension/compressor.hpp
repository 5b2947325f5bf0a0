#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "intension/error.hpp"

namespace intension {

using Bytes = std::vector<std::uint8_t>;

/// Computable stand-in for Kolmogorov complexity: maps a byte string to the
/// length of its compressed form. Implementations must be deterministic.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual std::string_view name() const = 0;
  virtual std::size_t compressed_size(std::span<const std::uint8_t> data) const = 0;
};

/// Length of the input itself. Useful for checking serialization arithmetic.
class IdentityCompressor final : public Compressor {
 public:
  std::string_view name() const override { return "identity"; }
  std::size_t compressed_size(std::span<const std::uint8_t> data) const override { return data.size(); }
};

/// DEFLATE in the zlib container at a fixed level. compress2 keeps no state
/// between calls, so one instance may be shared across threads.
class ZlibCompressor final : public Compressor {
 public:
  explicit ZlibCompressor(int level = Z_BEST_COMPRESSION) : level_(level) {}

  std::string_view name() const override { return "zlib"; }

  std::size_t compressed_size(std::span<const std::uint8_t> data) const override {
    uLongf out_len = compressBound(static_cast<uLong>(data.size()));
    std::vector<Bytef> out(out_len);
    const int rc = compress2(out.data(), &out_len, data.data(), static_cast<uLong>(data.size()), level_);
    if (rc != Z_OK) throw Error(ErrorKind::CompressorFailure, "zlib compress2 returned " + std::to_string(rc));
    return out_len;
  }

 private:
  int level_;
};

inline std::vector<std::string_view> compressor_names() { return {"identity", "zlib"}; }

inline std::unique_ptr<Compressor> make_compressor(std::string_view name) {
  if (name == "identity") return std::make_unique<IdentityCompressor>();
  if (name == "zlib") return std::make_unique<ZlibCompressor>();
  throw Error(ErrorKind::UnknownCompressor, "no compressor named '" + std::string(name) + "'");
}

}  // namespace intension
