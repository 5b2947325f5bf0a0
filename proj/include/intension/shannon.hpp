#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include "intension/concept_model.hpp"

namespace intension {

/// Widest variable set accepted by interaction_information (2^12 subset entropies).
inline constexpr std::size_t kMaxInteractionVars = 12;

inline constexpr std::string_view kInteractionConvention = "McGill-inclusion-exclusion";

/// Entropy in bits (base 2).
struct EntropyValue {
  double bits = 0.0;
};

struct ConceptPairEntropies {
  EntropyValue h_f;
  EntropyValue h_w;
  EntropyValue h_fw;
};

struct InteractionReport {
  std::vector<PropertyId> subset;
  double value = 0.0;
  std::string_view convention = kInteractionConvention;
};

/// Intermediate quantities of the Shannon estimate that do not need P(F) > 0.
struct ShannonTerms {
  double antecedent = 0.0;  // P(F)
  double prior = 0.0;       // P(W)
  double joint = 0.0;       // P(F and W)
  double mutual_information = 0.0;
  double estimate = 0.0;    // P(W) * 2^I(F;W)
};

struct ShannonInheritance {
  double mutual_information = 0.0;
  double exact_conditional = 0.0;
  /// Not clamped; values above 1 expose the uniformity simplification.
  double estimate_conditional = 0.0;
  double prior = 0.0;
  double discrepancy = 0.0;

  bool estimate_exceeds_one() const noexcept { return estimate_conditional > 1.0; }
};

namespace detail {

inline double surprisal_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

template <typename Range>
double entropy_bits(const Range& probabilities) {
  std::vector<double> terms;
  terms.reserve(std::size(probabilities));
  for (double p : probabilities) terms.push_back(surprisal_term(p));
  return accurate_sum(terms);
}

/// Sums a table over 2^width cells into 2^|positions| buckets; bucket bit j
/// is the source bit at positions[j]. Cells are visited in ascending order.
inline std::vector<double> marginalize(std::span<const double> table, std::span<const std::size_t> positions) {
  std::vector<double> buckets(std::size_t{1} << positions.size(), 0.0);
  for (std::size_t cell = 0; cell < table.size(); ++cell) {
    if (table[cell] == 0.0) continue;
    std::size_t b = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) b |= ((cell >> positions[j]) & 1u) << j;
    buckets[b] += table[cell];
  }
  return buckets;
}

inline std::vector<std::size_t> resolve_vars(std::span<const PropertyId> vars, const WorldModel& world) {
  std::vector<std::size_t> idx;
  idx.reserve(vars.size());
  for (const auto& v : vars) {
    const std::size_t i = world.index_of(v);
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw Error(ErrorKind::DuplicateProperty, "'" + v.str() + "' appears twice in the variable set");
    idx.push_back(i);
  }
  return idx;
}

/// Joint of the two concept indicators; index bit 0 = F holds, bit 1 = W holds.
inline std::array<double, 4> indicator_joint(const Concept& f, const Concept& w, const WorldModel& world) {
  const Mask fm = world.mask_of(f);
  const Mask wm = world.mask_of(w);
  std::array<std::vector<double>, 4> cells;
  const auto probs = world.probabilities();
  for (Mask m = 0; m < probs.size(); ++m) {
    if (probs[m] == 0.0) continue;
    cells[((m & fm) ? 1u : 0u) | ((m & wm) ? 2u : 0u)].push_back(probs[m]);
  }
  return {accurate_sum(cells[0]), accurate_sum(cells[1]), accurate_sum(cells[2]), accurate_sum(cells[3])};
}

inline ConceptPairEntropies entropies_of_joint(const std::array<double, 4>& j) {
  const std::array<double, 2> pf{j[0] + j[2], j[1] + j[3]};
  const std::array<double, 2> pw{j[0] + j[1], j[2] + j[3]};
  return {{entropy_bits(pf)}, {entropy_bits(pw)}, {entropy_bits(j)}};
}

}  // namespace detail

inline EntropyValue binary_entropy(double d) {
  detail::check_degree(d, "binary_entropy");
  return {detail::surprisal_term(d) + detail::surprisal_term(1.0 - d)};
}

/// Entropy of the marginal distribution over `vars`.
inline EntropyValue subset_entropy(std::span<const PropertyId> vars, const WorldModel& world) {
  if (vars.empty()) throw Error(ErrorKind::SubsetTooSmall, "subset_entropy needs at least one variable");
  const auto idx = detail::resolve_vars(vars, world);
  return {detail::entropy_bits(detail::marginalize(world.probabilities(), idx))};
}

/// Entropies of the binary indicators "x is F", "x is W" and of their joint.
inline ConceptPairEntropies concept_pair_entropies(const Concept& f, const Concept& w, const WorldModel& world) {
  return detail::entropies_of_joint(detail::indicator_joint(f, w, world));
}

/// I(F;W) = H(F) + H(W) - H(F,W) over the concept indicators.
inline double mutual_information(const Concept& f, const Concept& w, const WorldModel& world) {
  const auto e = concept_pair_entropies(f, w, world);
  return e.h_f.bits + e.h_w.bits - e.h_fw.bits;
}

/// H(W | F) evaluated directly from the conditional distributions.
inline EntropyValue conditional_entropy(const Concept& w, const Concept& f, const WorldModel& world) {
  const auto j = detail::indicator_joint(f, w, world);
  double h = 0.0;
  for (unsigned fv = 0; fv < 2; ++fv) {
    const double pf = j[fv] + j[fv | 2u];
    if (pf <= 0.0) continue;
    h += pf * (detail::surprisal_term(j[fv] / pf) + detail::surprisal_term(j[fv | 2u] / pf));
  }
  return {h};
}

/// Interaction information of `vars` as -sum over T of (-1)^|T| H(T), T ranging
/// over all subsets. Two variables give their mutual information; the parity
/// triple Z = X xor Y gives -1 bit.
inline InteractionReport interaction_information(std::span<const PropertyId> vars, const WorldModel& world) {
  if (vars.size() < 2) throw Error(ErrorKind::SubsetTooSmall, "interaction information needs at least two variables");
  if (vars.size() > kMaxInteractionVars)
    throw Error(ErrorKind::SubsetTooLarge, std::to_string(vars.size()) + " variables exceeds the lattice cap of " +
                                               std::to_string(kMaxInteractionVars));
  const auto idx = detail::resolve_vars(vars, world);
  const auto joint = detail::marginalize(world.probabilities(), idx);

  const std::size_t k = idx.size();
  std::vector<double> terms;
  terms.reserve(std::size_t{1} << k);
  std::vector<std::size_t> positions;
  for (std::size_t subset = 1; subset < (std::size_t{1} << k); ++subset) {
    positions.clear();
    for (std::size_t j = 0; j < k; ++j)
      if (subset & (std::size_t{1} << j)) positions.push_back(j);
    const double h = detail::entropy_bits(detail::marginalize(joint, positions));
    terms.push_back(std::popcount(subset) % 2 == 1 ? h : -h);
  }
  return {{vars.begin(), vars.end()}, detail::accurate_sum(terms), kInteractionConvention};
}

/// The correction term that makes
///   I(F;W) = (sum_i H(F_i) + sum_j H(W_j) - H(all properties)) - adjustment
/// an identity. Shared properties count once in each sum.
inline double total_interaction_adjustment(const Concept& f, const Concept& w, const WorldModel& world) {
  std::vector<PropertyId> combined;
  for (const auto& p : f.properties()) combined.push_back(p.id);
  for (const auto& p : w.properties())
    if (!f.contains(p.id)) combined.push_back(p.id);
  if (combined.size() > kMaxInteractionVars)
    throw Error(ErrorKind::SubsetTooLarge, std::to_string(combined.size()) + " combined properties exceeds the cap");

  std::vector<double> singles;
  for (const auto* c : {&f, &w})
    for (const auto& p : c->properties()) singles.push_back(binary_entropy(world.marginal(world.index_of(p.id))).bits);
  const double h_all = subset_entropy(combined, world).bits;
  return detail::accurate_sum(singles) - h_all - mutual_information(f, w, world);
}

inline ShannonTerms shannon_terms(const Concept& f, const Concept& w, const WorldModel& world) {
  const auto j = detail::indicator_joint(f, w, world);
  const auto e = detail::entropies_of_joint(j);
  ShannonTerms t;
  t.antecedent = j[1] + j[3];
  t.prior = j[2] + j[3];
  t.joint = j[3];
  t.mutual_information = e.h_f.bits + e.h_w.bits - e.h_fw.bits;
  t.estimate = t.prior * std::exp2(t.mutual_information);
  return t;
}

/// Exact P(W|F) from the world next to the estimate P(W) * 2^I(F;W).
inline ShannonInheritance shannon_inheritance(const Concept& f, const Concept& w, const WorldModel& world) {
  const auto t = shannon_terms(f, w, world);
  if (t.antecedent <= 0.0)
    throw Error(ErrorKind::ConditioningOnNull, "P(" + f.name() + ") = 0, the conditional is undefined");
  ShannonInheritance r;
  r.mutual_information = t.mutual_information;
  r.exact_conditional = t.joint / t.antecedent;
  r.estimate_conditional = t.estimate;
  r.prior = t.prior;
  r.discrepancy = r.estimate_conditional - r.exact_conditional;
  return r;
}

}  // namespace intension
