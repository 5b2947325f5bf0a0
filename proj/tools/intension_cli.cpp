// intension: command-line front end for the inheritance engines.

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "intension/intension.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUndefined = 3;

const intension::Concept& find_concept(const std::vector<intension::Concept>& concepts, const std::string& name) {
  for (const auto& c : concepts)
    if (c.name() == name) return c;
  throw intension::Error(intension::ErrorKind::UnknownProperty, "no concept named '" + name + "'");
}

std::set<std::size_t> parse_ids(const std::string& text) {
  std::set<std::size_t> ids;
  if (text.empty() || text == "-") return ids;
  for (const auto& tok : intension::detail::split_commas(text))
    ids.insert(intension::detail::parse_number<std::size_t>("argument", 0, tok));
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intensional inheritance between property-defined concepts"};
  app.require_subcommand(1);

  std::string world_path, concepts_path, from, to, compressor_name = "zlib", format = "text";
  bool algorithmic = false;
  auto* score = app.add_subcommand("score", "Score inheritance of --to from --from in a world");
  score->add_option("--world", world_path, "World file")->required();
  score->add_option("--concepts", concepts_path, "Concept file");
  score->add_option("--from", from, "Antecedent concept")->required();
  score->add_option("--to", to, "Consequent concept")->required();
  score->add_flag("--algorithmic", algorithmic, "Also run the compression-based estimate");
  auto* comp_opt = score->add_option("--compressor", compressor_name, "Compressor: identity or zlib");
  score->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::size_t n = 0, m = 0, k = 0;
  auto* exclusive = app.add_subcommand("exclusive", "Mutually exclusive closed forms");
  exclusive->add_option("--n", n, "Properties of F")->required();
  exclusive->add_option("--m", m, "Properties of W")->required();
  exclusive->add_option("--k", k, "Shared properties")->required();

  std::size_t universe = 0;
  std::string f_ids, w_ids;
  auto* extensional = app.add_subcommand("extensional", "Extensional inheritance and the singleton reduction");
  extensional->add_option("--universe", universe, "Number of instances")->required();
  extensional->add_option("--f", f_ids, "Instances of F, comma-separated (1-based)")->required();
  extensional->add_option("--w", w_ids, "Instances of W, comma-separated (1-based), or -")->required();

  std::string vars;
  auto* interaction = app.add_subcommand("interaction", "Interaction information of a property set");
  interaction->add_option("--world", world_path, "World file")->required();
  interaction->add_option("--vars", vars, "Property ids, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*score) {
      auto loaded = intension::load_world(world_path);
      auto concepts = std::move(loaded.concepts);
      if (!concepts_path.empty())
        for (auto& c : intension::load_concepts(concepts_path)) concepts.push_back(std::move(c));
      const auto& f = find_concept(concepts, from);
      const auto& w = find_concept(concepts, to);

      std::unique_ptr<intension::Compressor> compressor;
      if (algorithmic || comp_opt->count() > 0) compressor = intension::make_compressor(compressor_name);

      const auto report = intension::build_report(f, w, loaded.world, compressor.get());
      std::cout << (format == "json" ? intension::to_json(report) + "\n" : intension::to_text(report));
      if (!report.exact_conditional) {
        std::cerr << "error: P(" << from << ") = 0, conditional undefined\n";
        return kExitUndefined;
      }
    } else if (*exclusive) {
      std::cout << intension::exclusive_summary(intension::ExclusiveCaseParams(n, m, k));
    } else if (*extensional) {
      std::cout << intension::extensional_summary({parse_ids(f_ids), parse_ids(w_ids), universe});
    } else if (*interaction) {
      const auto loaded = intension::load_world(world_path);
      std::vector<intension::PropertyId> ids;
      for (const auto& v : intension::detail::split_commas(vars)) ids.emplace_back(v);
      std::cout << intension::interaction_summary(intension::interaction_information(ids, loaded.world));
    }
  } catch (const intension::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
