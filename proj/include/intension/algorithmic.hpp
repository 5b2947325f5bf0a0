#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>

#include "intension/compressor.hpp"
#include "intension/concept_model.hpp"
#include "intension/serialize.hpp"

namespace intension {

/// |I| below this many bits is within compressor framing noise.
inline constexpr double kNoiseFloorBits = 64.0;

/// Framing allowance in k_joint <= k_f + k_w + slack.
inline constexpr double kJointSlackBits = 64.0;

/// Complexity estimates in bits: 8 x (compressed length - compressed length of
/// the empty string), floored at zero.
struct ComplexityEstimate {
  double k_f = 0.0;
  double k_w = 0.0;
  double k_joint = 0.0;
  double k_w_given_f = 0.0;
  double overhead = 0.0;
};

/// Scores rather than calibrated probabilities. The log2 fields always satisfy
/// log2_conditional == log2_prior + mutual_information exactly (all terms are
/// whole multiples of 8 bits). The linear fields are 2^(log2 field) and so are
/// exact powers of two; they underflow to 0 once k_w passes ~1074 bits.
struct AlgorithmicInheritance {
  /// k_f + k_w - k_joint; may be slightly negative from compressor noise.
  double mutual_information = 0.0;
  double prior_estimate = 0.0;        // 2^-k_w
  double conditional_estimate = 0.0;  // prior_estimate * 2^mutual_information
  double log2_prior = 0.0;
  double log2_conditional = 0.0;      // -k_w_given_f before the zero floor

  bool noisy() const noexcept { return std::abs(mutual_information) < kNoiseFloorBits; }
};

/// Sum of per-property complexities minus the whole-concept complexity.
struct AlgorithmicInteraction {
  double inter_f = 0.0;
  double inter_w = 0.0;
  double inter_fw = 0.0;
};

namespace detail {

inline double complexity_bits(std::span<const std::uint8_t> data, std::size_t baseline, const Compressor& comp) {
  const std::size_t len = comp.compressed_size(data);
  return len > baseline ? 8.0 * static_cast<double>(len - baseline) : 0.0;
}

inline std::size_t empty_baseline(const Compressor& comp) { return comp.compressed_size({}); }

inline Bytes serialize_for(const Concept& c, SerializationMode mode, std::span<const PropertyId> universe) {
  return mode == SerializationMode::Intension ? canonical_serialize(c) : extension_serialize(c, universe);
}

}  // namespace detail

inline ComplexityEstimate estimate_complexities(std::span<const std::uint8_t> f_bytes,
                                                std::span<const std::uint8_t> w_bytes, const Compressor& comp) {
  const std::size_t base = detail::empty_baseline(comp);
  ComplexityEstimate e;
  e.overhead = 8.0 * static_cast<double>(base);
  e.k_f = detail::complexity_bits(f_bytes, base, comp);
  e.k_w = detail::complexity_bits(w_bytes, base, comp);
  e.k_joint = detail::complexity_bits(joint_bytes(f_bytes, w_bytes), base, comp);
  e.k_w_given_f = std::max(0.0, e.k_joint - e.k_f);
  return e;
}

inline ComplexityEstimate estimate_complexities(const Concept& f, const Concept& w, const Compressor& comp) {
  return estimate_complexities(canonical_serialize(f), canonical_serialize(w), comp);
}

/// Extension-mode variant: concepts are encoded as membership bitmaps over `universe`.
inline ComplexityEstimate estimate_extension_complexities(const Concept& f, const Concept& w,
                                                          std::span<const PropertyId> universe, const Compressor& comp) {
  return estimate_complexities(extension_serialize(f, universe), extension_serialize(w, universe), comp);
}

inline AlgorithmicInheritance algorithmic_inheritance(const ComplexityEstimate& e) {
  AlgorithmicInheritance r;
  r.mutual_information = e.k_f + e.k_w - e.k_joint;
  r.log2_prior = -e.k_w;
  r.log2_conditional = r.log2_prior + r.mutual_information;
  r.prior_estimate = std::exp2(r.log2_prior);
  r.conditional_estimate = std::exp2(r.log2_conditional);
  return r;
}

inline AlgorithmicInheritance algorithmic_inheritance(const Concept& f, const Concept& w, const Compressor& comp,
                                                      SerializationMode mode = SerializationMode::Intension,
                                                      std::span<const PropertyId> universe = {}) {
  return algorithmic_inheritance(estimate_complexities(detail::serialize_for(f, mode, universe),
                                                       detail::serialize_for(w, mode, universe), comp));
}

/// Diagnostic split of the compressor estimates into per-property sums and
/// interaction remainders. Per-property complexity is that of the one-property
/// concept; the pooled sum counts shared properties once per concept.
inline AlgorithmicInteraction algorithmic_interaction(const Concept& f, const Concept& w, const Compressor& comp) {
  const std::size_t base = detail::empty_baseline(comp);
  auto per_property = [&](const Concept& c) {
    double sum = 0.0;
    for (const auto& p : c.properties())
      sum += detail::complexity_bits(canonical_serialize(Concept(c.name(), {p})), base, comp);
    return sum;
  };
  const auto e = estimate_complexities(f, w, comp);
  const double sum_f = per_property(f);
  const double sum_w = per_property(w);
  return {sum_f - e.k_f, sum_w - e.k_w, sum_f + sum_w - e.k_joint};
}

}  // namespace intension
