#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>

#include "intension/concept_model.hpp"
#include "intension/shannon.hpp"

namespace intension {

/// n properties for F, m for W, k of them shared; s = n + m - k properties in
/// total, each with degree p = 1/s.
class ExclusiveCaseParams {
 public:
  ExclusiveCaseParams(std::size_t n, std::size_t m, std::size_t k) : n_(n), m_(m), k_(k) {
    if (n < 1 || m < 1 || k > std::min(n, m))
      throw Error(ErrorKind::InvalidOverlap, "need n >= 1, m >= 1 and 0 <= k <= min(n, m)");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t s() const noexcept { return n_ + m_ - k_; }
  double p() const noexcept { return 1.0 / static_cast<double>(s()); }

 private:
  std::size_t n_, m_, k_;
};

struct ExclusiveAlgorithmic {
  /// log2(k/n); empty when k = 0 (no overlap, the logarithm diverges).
  std::optional<double> mutual_information;
  /// (m/s)(k/n).
  double conditional = 0.0;

  bool no_overlap() const noexcept { return !mutual_information.has_value(); }
};

/// Instance ids are 1-based positions in a universe of `universe_size` instances.
struct ExtensionalPair {
  std::set<std::size_t> f_extension;
  std::set<std::size_t> w_extension;
  std::size_t universe_size = 0;
};

struct ReductionCheck {
  double extensional = 0.0;
  double intensional_exact = 0.0;
};

namespace detail {

inline double ratio(std::size_t num, std::size_t den) { return static_cast<double>(num) / static_cast<double>(den); }

inline void check_pair(const ExtensionalPair& pair) {
  for (const auto* ext : {&pair.f_extension, &pair.w_extension})
    for (std::size_t id : *ext)
      if (id < 1 || id > pair.universe_size)
        throw Error(ErrorKind::UnknownProperty,
                    "instance " + std::to_string(id) + " outside universe 1.." + std::to_string(pair.universe_size));
  if (pair.f_extension.empty()) throw Error(ErrorKind::EmptyAntecedent, "F has an empty extension");
}

}  // namespace detail

/// P(W|F) = k/n.
inline double exclusive_shannon(const ExclusiveCaseParams& params) { return detail::ratio(params.k(), params.n()); }

/// I(F:W) = log2(k/n) and P(W|F) = P(W) 2^I = (m/s)(k/n).
inline ExclusiveAlgorithmic exclusive_algorithmic(const ExclusiveCaseParams& params) {
  ExclusiveAlgorithmic r;
  r.conditional = detail::ratio(params.m() * params.k(), params.s() * params.n());
  if (params.k() > 0) r.mutual_information = std::log2(detail::ratio(params.k(), params.n()));
  return r;
}

/// k/n - (m/s)(k/n) = k(s - m) / (n s); zero exactly when k = n.
inline double framework_discrepancy(const ExclusiveCaseParams& params) {
  if (params.k() == 0) throw Error(ErrorKind::ZeroOverlap, "discrepancy needs k >= 1");
  return detail::ratio(params.k() * (params.s() - params.m()), params.n() * params.s());
}

/// |F ∩ W| / |F|.
inline double extensional_inheritance(const ExtensionalPair& pair) {
  detail::check_pair(pair);
  std::size_t common = 0;
  for (std::size_t id : pair.f_extension) common += pair.w_extension.count(id);
  return detail::ratio(common, pair.f_extension.size());
}

/// One property x_i per instance over a uniform one-hot instance world, so that
/// each concept's degree is 1/N per held instance.
inline ReductionCheck singleton_reduction_check(const ExtensionalPair& pair) {
  if (pair.universe_size > kMaxUniverse)
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(pair.universe_size) + " instances exceeds the cap");
  const double extensional = extensional_inheritance(pair);

  InstanceTable table;
  for (std::size_t i = 1; i <= pair.universe_size; ++i) {
    table.universe.emplace_back("x" + std::to_string(i));
    table.rows.push_back({Mask{1} << (i - 1), 1.0});
  }
  const WorldModel world = world_from_instances(table);
  const double degree = 1.0 / static_cast<double>(pair.universe_size);

  auto make = [&](const char* name, const std::set<std::size_t>& ext) -> std::optional<Concept> {
    if (ext.empty()) return std::nullopt;
    std::vector<PropertyDegree> props;
    for (std::size_t id : ext) props.push_back({table.universe[id - 1], degree});
    return Concept(name, std::move(props));
  };
  const auto f = make("F", pair.f_extension);
  const auto w = make("W", pair.w_extension);
  // The union of no property events is the null event.
  const double intensional = w ? shannon_inheritance(*f, *w, world).exact_conditional : 0.0;
  return {extensional, intensional};
}

}  // namespace intension
