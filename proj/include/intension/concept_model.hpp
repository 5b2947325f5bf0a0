#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intension/error.hpp"

namespace intension {

/// Largest universe the exact world model enumerates (2^24 table entries).
inline constexpr std::size_t kMaxUniverse = 24;

/// A declared degree that differs from the world's marginal by more than this
/// is reported as a mismatch; the world's marginal wins.
inline constexpr double kDegreeTolerance = 1e-6;

/// Bit i of a mask refers to position i of the world's universe.
using Mask = std::uint32_t;

namespace detail {

inline bool is_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

/// Neumaier-compensated sum; the order of `values` fixes the result.
template <typename Range>
double accurate_sum(const Range& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

inline void check_degree(double d, const std::string& where) {
  if (!(d >= 0.0 && d <= 1.0))
    throw Error(ErrorKind::InvalidDegree, where + " degree " + std::to_string(d) + " outside [0,1]");
}

}  // namespace detail

class PropertyId {
 public:
  explicit PropertyId(std::string id) : id_(std::move(id)) {
    if (!detail::is_token(id_))
      throw Error(ErrorKind::InvalidPropertyId, "property id '" + id_ + "' must be a nonempty token without whitespace");
  }

  const std::string& str() const noexcept { return id_; }

  friend bool operator==(const PropertyId&, const PropertyId&) = default;
  friend auto operator<=>(const PropertyId&, const PropertyId&) = default;

 private:
  std::string id_;
};

struct PropertyDegree {
  PropertyId id;
  double degree;
};

/// A named, nonempty list of distinct properties with degrees in [0,1].
class Concept {
 public:
  Concept(std::string name, std::vector<PropertyDegree> properties)
      : name_(std::move(name)), properties_(std::move(properties)) {
    if (!detail::is_token(name_))
      throw Error(ErrorKind::InvalidPropertyId, "concept name '" + name_ + "' must be a nonempty token");
    if (properties_.empty()) throw Error(ErrorKind::EmptyConcept, "concept '" + name_ + "' has no properties");
    for (std::size_t i = 0; i < properties_.size(); ++i) {
      detail::check_degree(properties_[i].degree, name_ + "." + properties_[i].id.str());
      for (std::size_t j = 0; j < i; ++j)
        if (properties_[j].id == properties_[i].id)
          throw Error(ErrorKind::DuplicateProperty,
                      "concept '" + name_ + "' lists '" + properties_[i].id.str() + "' twice");
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const PropertyDegree> properties() const noexcept { return properties_; }
  std::size_t size() const noexcept { return properties_.size(); }

  std::optional<double> degree_of(const PropertyId& id) const {
    for (const auto& p : properties_)
      if (p.id == id) return p.degree;
    return std::nullopt;
  }

  bool contains(const PropertyId& id) const { return degree_of(id).has_value(); }

 private:
  std::string name_;
  std::vector<PropertyDegree> properties_;
};

/// Exact joint distribution over s binary property variables, stored as a
/// dense table of 2^s probabilities indexed by assignment mask. Immutable.
class WorldModel {
 public:
  /// Takes nonnegative weights and normalizes them once.
  WorldModel(std::vector<PropertyId> universe, std::vector<double> weights)
      : universe_(std::move(universe)), probabilities_(std::move(weights)) {
    if (universe_.size() > kMaxUniverse)
      throw Error(ErrorKind::UniverseTooLarge,
                  std::to_string(universe_.size()) + " properties exceeds the cap of " + std::to_string(kMaxUniverse));
    for (std::size_t i = 0; i < universe_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (universe_[i] == universe_[j])
          throw Error(ErrorKind::DuplicateProperty, "universe lists '" + universe_[i].str() + "' twice");
    if (probabilities_.size() != (std::size_t{1} << universe_.size()))
      throw Error(ErrorKind::LengthMismatch, "weight table must have 2^s entries");
    for (double w : probabilities_)
      if (!std::isfinite(w) || w < 0.0)
        throw Error(ErrorKind::InvalidDegree, "world weights must be finite and nonnegative");
    const double total = detail::accurate_sum(probabilities_);
    if (!(total > 0.0)) throw Error(ErrorKind::EmptyTable, "world weights sum to zero");
    if (total != 1.0)
      for (double& p : probabilities_) p /= total;
  }

  std::span<const PropertyId> universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  std::span<const double> probabilities() const noexcept { return probabilities_; }
  double probability(Mask mask) const { return probabilities_.at(mask); }

  std::optional<std::size_t> find(const PropertyId& id) const {
    auto it = std::find(universe_.begin(), universe_.end(), id);
    if (it == universe_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - universe_.begin());
  }

  std::size_t index_of(const PropertyId& id) const {
    if (auto i = find(id)) return *i;
    throw Error(ErrorKind::UnknownProperty, "'" + id.str() + "' is not in the world universe");
  }

  Mask mask_of(std::span<const PropertyId> ids) const {
    Mask mask = 0;
    for (const auto& id : ids) mask |= Mask{1} << index_of(id);
    return mask;
  }

  Mask mask_of(const Concept& c) const {
    Mask mask = 0;
    for (const auto& p : c.properties()) mask |= Mask{1} << index_of(p.id);
    return mask;
  }

  /// P(property at `index` holds).
  double marginal(std::size_t index) const {
    const Mask bit = Mask{1} << index;
    std::vector<double> held;
    held.reserve(probabilities_.size() / 2);
    for (Mask m = 0; m < probabilities_.size(); ++m)
      if (m & bit) held.push_back(probabilities_[m]);
    return detail::accurate_sum(held);
  }

  /// Total mass on assignments where at least one bit of `mask` is set.
  double any_probability(Mask mask) const {
    std::vector<double> hit;
    for (Mask m = 0; m < probabilities_.size(); ++m)
      if (m & mask) hit.push_back(probabilities_[m]);
    return detail::accurate_sum(hit);
  }

 private:
  std::vector<PropertyId> universe_;
  std::vector<double> probabilities_;
};

struct InstanceRow {
  Mask mask;
  double weight;
};

/// Weighted rows of held-property masks over an ordered universe.
struct InstanceTable {
  std::vector<PropertyId> universe;
  std::vector<InstanceRow> rows;
};

struct ExclusiveWorld {
  WorldModel world;
  Concept f;
  Concept w;
};

struct DegreeMismatch {
  std::string concept_name;
  PropertyId property;
  double declared;
  double actual;
};

inline std::vector<PropertyId> make_universe(std::span<const std::string> ids) {
  std::vector<PropertyId> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.emplace_back(id);
  return out;
}

inline WorldModel build_independent_world(std::vector<PropertyId> universe, std::span<const double> marginals) {
  if (universe.size() != marginals.size())
    throw Error(ErrorKind::LengthMismatch, "universe and marginal lists differ in length");
  if (universe.size() > kMaxUniverse)
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(universe.size()) + " properties exceeds the cap");
  for (std::size_t i = 0; i < marginals.size(); ++i) detail::check_degree(marginals[i], universe[i].str());

  std::vector<double> table(std::size_t{1} << universe.size(), 0.0);
  table[0] = 1.0;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    const std::size_t filled = std::size_t{1} << i;
    const double p = marginals[i];
    for (std::size_t m = 0; m < filled; ++m) {
      table[m | filled] = table[m] * p;
      table[m] *= 1.0 - p;
    }
  }
  return WorldModel(std::move(universe), std::move(table));
}

/// One-hot world over s = n + m - k properties named p1..ps, each held with
/// probability 1/s. F owns the first n properties, W the last m.
inline ExclusiveWorld build_exclusive_world(std::size_t n, std::size_t m, std::size_t k) {
  if (n < 1 || m < 1 || k > std::min(n, m))
    throw Error(ErrorKind::InvalidOverlap, "need n >= 1, m >= 1 and 0 <= k <= min(n, m)");
  const std::size_t s = n + m - k;
  if (s > kMaxUniverse)
    throw Error(ErrorKind::UniverseTooLarge, "s = " + std::to_string(s) + " exceeds the cap");

  std::vector<PropertyId> universe;
  for (std::size_t i = 0; i < s; ++i) universe.emplace_back("p" + std::to_string(i + 1));

  const double p = 1.0 / static_cast<double>(s);
  std::vector<double> table(std::size_t{1} << s, 0.0);
  for (std::size_t i = 0; i < s; ++i) table[std::size_t{1} << i] = p;

  std::vector<PropertyDegree> fp, wp;
  for (std::size_t i = 0; i < n; ++i) fp.push_back({universe[i], p});
  for (std::size_t i = s - m; i < s; ++i) wp.push_back({universe[i], p});

  return ExclusiveWorld{WorldModel(std::move(universe), std::move(table)), Concept("F", std::move(fp)),
                        Concept("W", std::move(wp))};
}

inline WorldModel world_from_instances(const InstanceTable& table) {
  if (table.universe.size() > kMaxUniverse)
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(table.universe.size()) + " properties exceeds the cap");
  const std::size_t cells = std::size_t{1} << table.universe.size();
  std::vector<double> weights(cells, 0.0);
  for (const auto& row : table.rows) {
    if (!std::isfinite(row.weight) || row.weight < 0.0)
      throw Error(ErrorKind::InvalidDegree, "instance weights must be finite and nonnegative");
    if (row.mask >= cells) throw Error(ErrorKind::UnknownProperty, "instance row sets a bit outside the universe");
    weights[row.mask] += row.weight;
  }
  if (!(detail::accurate_sum(weights) > 0.0)) throw Error(ErrorKind::EmptyTable, "instance table has no positive weight");
  return WorldModel(table.universe, std::move(weights));
}

/// Inverse of world_from_instances: one row per assignment with positive mass.
inline InstanceTable to_instance_table(const WorldModel& world) {
  InstanceTable table{{world.universe().begin(), world.universe().end()}, {}};
  const auto probs = world.probabilities();
  for (Mask m = 0; m < probs.size(); ++m)
    if (probs[m] > 0.0) table.rows.push_back({m, probs[m]});
  return table;
}

/// P(x is C), with "x is C" read as the union of C's property events.
inline double concept_event_probability(const Concept& c, const WorldModel& world) {
  return world.any_probability(world.mask_of(c));
}

/// P(x is F and x is W) under the same union semantics.
inline double concept_joint_probability(const Concept& f, const Concept& w, const WorldModel& world) {
  const Mask fm = world.mask_of(f);
  const Mask wm = world.mask_of(w);
  const auto probs = world.probabilities();
  std::vector<double> hit;
  for (Mask m = 0; m < probs.size(); ++m)
    if ((m & fm) && (m & wm)) hit.push_back(probs[m]);
  return detail::accurate_sum(hit);
}

inline std::vector<DegreeMismatch> degree_mismatches(const Concept& c, const WorldModel& world) {
  std::vector<DegreeMismatch> out;
  for (const auto& p : c.properties()) {
    const double actual = world.marginal(world.index_of(p.id));
    if (std::abs(actual - p.degree) > kDegreeTolerance) out.push_back({c.name(), p.id, p.degree, actual});
  }
  return out;
}

}  // namespace intension
