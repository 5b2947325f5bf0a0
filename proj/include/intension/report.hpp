#pragma once

// Aggregated inheritance reports and their text/JSON renderings.
//
// JSON is one flat object on one line, keys in fixed order, numbers printed
// with 12 significant digits. Missing values are the literal strings
// "undefined" (no conditional when P(from) = 0) and "skipped" (algorithmic
// engine not run).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "intension/algorithmic.hpp"
#include "intension/closed_forms.hpp"
#include "intension/shannon.hpp"

namespace intension {

inline constexpr std::string_view kUndefined = "undefined";
inline constexpr std::string_view kSkipped = "skipped";
inline constexpr std::string_view kEstimateAboveOne = "estimate>1";
inline constexpr std::string_view kAlgorithmicNoise = "algorithmic-noise";

struct InheritanceReport {
  std::string from_concept;
  std::string to_concept;
  std::optional<double> exact_conditional;
  double shannon_estimate = 0.0;
  double mutual_information_shannon = 0.0;
  std::optional<std::string> compressor;
  std::optional<double> algorithmic_estimate;
  std::optional<double> algorithmic_log2_estimate;
  std::optional<double> mutual_information_algorithmic;
  /// Sorted, without duplicates.
  std::vector<std::string> warnings;

  friend bool operator==(const InheritanceReport&, const InheritanceReport&) = default;
};

inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Scores `from` -> `to`. Pass a compressor to run the algorithmic engine.
inline InheritanceReport build_report(const Concept& from, const Concept& to, const WorldModel& world,
                                      const Compressor* compressor = nullptr) {
  InheritanceReport r;
  r.from_concept = from.name();
  r.to_concept = to.name();

  const auto terms = shannon_terms(from, to, world);
  if (terms.antecedent > 0.0) {
    const auto s = shannon_inheritance(from, to, world);
    r.exact_conditional = s.exact_conditional;
    r.shannon_estimate = s.estimate_conditional;
    r.mutual_information_shannon = s.mutual_information;
  } else {
    r.shannon_estimate = terms.estimate;
    r.mutual_information_shannon = terms.mutual_information;
  }
  if (r.shannon_estimate > 1.0) r.warnings.emplace_back(kEstimateAboveOne);

  for (const auto* c : {&from, &to})
    for (const auto& m : degree_mismatches(*c, world))
      r.warnings.push_back("degree-mismatch:" + m.concept_name + "." + m.property.str() +
                           ":declared=" + format_number(m.declared) + ":world=" + format_number(m.actual));

  if (compressor) {
    const auto a = algorithmic_inheritance(from, to, *compressor);
    r.compressor = std::string(compressor->name());
    r.algorithmic_estimate = a.conditional_estimate;
    r.algorithmic_log2_estimate = a.log2_conditional;
    r.mutual_information_algorithmic = a.mutual_information;
    if (a.noisy()) r.warnings.emplace_back(kAlgorithmicNoise);
  }

  std::sort(r.warnings.begin(), r.warnings.end());
  r.warnings.erase(std::unique(r.warnings.begin(), r.warnings.end()), r.warnings.end());
  return r;
}

namespace detail {

template <typename T>
std::string value_or(const std::optional<T>& v, std::string_view missing) {
  if (!v) return std::string(missing);
  if constexpr (std::is_same_v<T, double>)
    return format_number(*v);
  else
    return *v;
}

template <typename T>
std::string json_value_or(const std::optional<T>& v, std::string_view missing) {
  if (!v) return nlohmann::json(std::string(missing)).dump();
  if constexpr (std::is_same_v<T, double>)
    return format_number(*v);
  else
    return nlohmann::json(*v).dump();
}

inline std::optional<double> optional_number(const nlohmann::json& j, const char* key, std::string_view missing) {
  const auto& v = j.at(key);
  if (v.is_string()) {
    if (v.get<std::string>() != missing)
      throw Error(ErrorKind::ParseError, std::string(key) + " must be a number or \"" + std::string(missing) + "\"");
    return std::nullopt;
  }
  return v.get<double>();
}

}  // namespace detail

inline std::string to_json(const InheritanceReport& r) {
  using nlohmann::json;
  std::string out = "{";
  out += "\"from_concept\":" + json(r.from_concept).dump();
  out += ",\"to_concept\":" + json(r.to_concept).dump();
  out += ",\"exact_conditional\":" + detail::json_value_or(r.exact_conditional, kUndefined);
  out += ",\"shannon_estimate\":" + format_number(r.shannon_estimate);
  out += ",\"mutual_information_shannon\":" + format_number(r.mutual_information_shannon);
  out += ",\"compressor\":" + detail::json_value_or(r.compressor, kSkipped);
  out += ",\"algorithmic_estimate\":" + detail::json_value_or(r.algorithmic_estimate, kSkipped);
  out += ",\"algorithmic_log2_estimate\":" + detail::json_value_or(r.algorithmic_log2_estimate, kSkipped);
  out += ",\"mutual_information_algorithmic\":" + detail::json_value_or(r.mutual_information_algorithmic, kSkipped);
  out += ",\"warnings\":" + json(r.warnings).dump();
  out += "}";
  return out;
}

inline InheritanceReport report_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    InheritanceReport r;
    r.from_concept = j.at("from_concept").get<std::string>();
    r.to_concept = j.at("to_concept").get<std::string>();
    r.exact_conditional = detail::optional_number(j, "exact_conditional", kUndefined);
    r.shannon_estimate = j.at("shannon_estimate").get<double>();
    r.mutual_information_shannon = j.at("mutual_information_shannon").get<double>();
    if (auto c = j.at("compressor").get<std::string>(); c != kSkipped) r.compressor = c;
    r.algorithmic_estimate = detail::optional_number(j, "algorithmic_estimate", kSkipped);
    r.algorithmic_log2_estimate = detail::optional_number(j, "algorithmic_log2_estimate", kSkipped);
    r.mutual_information_algorithmic = detail::optional_number(j, "mutual_information_algorithmic", kSkipped);
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::string to_text(const InheritanceReport& r) {
  std::ostringstream out;
  out << "from_concept=" << r.from_concept << '\n'
      << "to_concept=" << r.to_concept << '\n'
      << "exact_conditional=" << detail::value_or(r.exact_conditional, kUndefined) << '\n'
      << "shannon_estimate=" << format_number(r.shannon_estimate) << '\n'
      << "mutual_information_shannon=" << format_number(r.mutual_information_shannon) << '\n'
      << "compressor=" << detail::value_or(r.compressor, kSkipped) << '\n'
      << "algorithmic_estimate=" << detail::value_or(r.algorithmic_estimate, kSkipped) << '\n'
      << "algorithmic_log2_estimate=" << detail::value_or(r.algorithmic_log2_estimate, kSkipped) << '\n'
      << "mutual_information_algorithmic=" << detail::value_or(r.mutual_information_algorithmic, kSkipped) << '\n';
  for (const auto& w : r.warnings) out << "warning=" << w << '\n';
  return out.str();
}

inline std::string exclusive_summary(const ExclusiveCaseParams& params) {
  const auto alg = exclusive_algorithmic(params);
  std::ostringstream out;
  out << "n=" << params.n() << " m=" << params.m() << " k=" << params.k() << " s=" << params.s()
      << " p=" << format_number(params.p()) << " shannon=" << format_number(exclusive_shannon(params))
      << " algorithmic=" << format_number(alg.conditional)
      << " mutual_information=" << (alg.no_overlap() ? std::string("no-overlap") : format_number(*alg.mutual_information))
      << " discrepancy=" << (alg.no_overlap() ? std::string(kUndefined) : format_number(framework_discrepancy(params)))
      << '\n';
  return out.str();
}

/// Agreement tolerance between the extensional value and the enumerated one.
inline constexpr double kReductionTolerance = 1e-12;

inline std::string extensional_summary(const ExtensionalPair& pair) {
  const auto check = singleton_reduction_check(pair);
  auto ids = [](const std::set<std::size_t>& ext) {
    std::string s;
    for (std::size_t id : ext) s += (s.empty() ? "" : ",") + std::to_string(id);
    return s.empty() ? std::string("-") : s;
  };
  const bool match = std::abs(check.extensional - check.intensional_exact) <= kReductionTolerance;
  std::ostringstream out;
  out << "universe=" << pair.universe_size << " f=" << ids(pair.f_extension) << " w=" << ids(pair.w_extension)
      << " extensional=" << format_number(check.extensional)
      << " intensional=" << format_number(check.intensional_exact) << " match=" << (match ? "true" : "false") << '\n';
  return out.str();
}

inline std::string interaction_summary(const InteractionReport& report) {
  std::string vars;
  for (const auto& v : report.subset) vars += (vars.empty() ? "" : ",") + v.str();
  return "vars=" + vars + " convention=" + std::string(report.convention) +
         " interaction_information=" + format_number(report.value) + "\n";
}

}  // namespace intension
