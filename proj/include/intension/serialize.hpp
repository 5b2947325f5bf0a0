#pragma once

// Canonical byte encodings used as complexity carriers.
//
// Intension mode (canonical_serialize):
//   u16 count
//   count x { u16 id_length, id bytes (UTF-8), u16 degree }
// All integers are big-endian. Properties are sorted by id (bytewise). The
// degree is round(d * 65536) saturated at 65535, so 1.0 reads back as
// 65535/65536. The concept name is not encoded.
//
// Extension mode (extension_serialize), for singleton/extensional concepts:
//   u16 universe_size
//   ceil(universe_size / 8) bitmap bytes; bit i (LSB-first within byte i/8)
//   is set iff universe[i] is a property of the concept with degree > 0.
//
// Joint strings are f_bytes, 0x1F, w_bytes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "intension/compressor.hpp"
#include "intension/concept_model.hpp"

namespace intension {

inline constexpr std::uint8_t kJointSeparator = 0x1F;
inline constexpr double kFixedPointScale = 65536.0;

enum class SerializationMode { Intension, Extension };

inline std::uint16_t quantize_degree(double d) {
  detail::check_degree(d, "quantize_degree");
  const double q = std::nearbyint(d * kFixedPointScale);
  return static_cast<std::uint16_t>(std::min(q, 65535.0));
}

inline double dequantize_degree(std::uint16_t q) { return static_cast<double>(q) / kFixedPointScale; }

namespace detail {

inline void put_u16(Bytes& out, std::size_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline std::uint16_t get_u16(std::span<const std::uint8_t> in, std::size_t& pos) {
  if (pos + 2 > in.size()) throw Error(ErrorKind::ParseError, "truncated concept encoding");
  const auto v = static_cast<std::uint16_t>((in[pos] << 8) | in[pos + 1]);
  pos += 2;
  return v;
}

}  // namespace detail

inline Bytes canonical_serialize(const Concept& c) {
  std::vector<const PropertyDegree*> sorted;
  for (const auto& p : c.properties()) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id.str() < b->id.str(); });
  if (sorted.size() > 0xFFFF) throw Error(ErrorKind::LengthMismatch, "too many properties to encode");

  Bytes out;
  detail::put_u16(out, sorted.size());
  for (const auto* p : sorted) {
    const auto& id = p->id.str();
    if (id.size() > 0xFFFF) throw Error(ErrorKind::InvalidPropertyId, "property id longer than 65535 bytes");
    detail::put_u16(out, id.size());
    out.insert(out.end(), id.begin(), id.end());
    detail::put_u16(out, quantize_degree(p->degree));
  }
  return out;
}

/// Inverse of canonical_serialize; degrees come back quantized.
inline Concept canonical_deserialize(std::span<const std::uint8_t> bytes, std::string name) {
  std::size_t pos = 0;
  const std::size_t count = detail::get_u16(bytes, pos);
  std::vector<PropertyDegree> props;
  props.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = detail::get_u16(bytes, pos);
    if (pos + len > bytes.size()) throw Error(ErrorKind::ParseError, "truncated property id");
    std::string id(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    props.push_back({PropertyId(std::move(id)), dequantize_degree(detail::get_u16(bytes, pos))});
  }
  if (pos != bytes.size()) throw Error(ErrorKind::ParseError, "trailing bytes after concept encoding");
  return Concept(std::move(name), std::move(props));
}

inline Bytes extension_serialize(const Concept& c, std::span<const PropertyId> universe) {
  if (universe.size() > 0xFFFF) throw Error(ErrorKind::LengthMismatch, "universe too large to encode");
  for (const auto& p : c.properties())
    if (std::find(universe.begin(), universe.end(), p.id) == universe.end())
      throw Error(ErrorKind::UnknownProperty, "'" + p.id.str() + "' is not in the universe");
  Bytes out;
  detail::put_u16(out, universe.size());
  std::vector<std::uint8_t> bitmap((universe.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const auto d = c.degree_of(universe[i]);
    if (d && *d > 0.0) bitmap[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  out.insert(out.end(), bitmap.begin(), bitmap.end());
  return out;
}

inline Bytes joint_bytes(std::span<const std::uint8_t> f, std::span<const std::uint8_t> w) {
  Bytes out(f.begin(), f.end());
  out.push_back(kJointSeparator);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace intension
