#include "kwsym/cli.hpp"

#include <CLI11.hpp>

#include "kwsym/configuration.hpp"
#include "kwsym/error.hpp"
#include "kwsym/matcher.hpp"
#include "kwsym/partition.hpp"
#include "kwsym/permutation.hpp"
#include "kwsym/schema.hpp"
#include "kwsym/tableaux.hpp"

namespace kwsym {

namespace {

void print_extend(int n, int v, const std::string& map, std::ostream& out) {
  const ConfigurationMap config(v, parse_targets(map));
  if (config.n_keywords() != n) {
    throw InvalidArgument("--map has " + std::to_string(config.n_keywords()) +
                          " targets but --n is " + std::to_string(n));
  }
  const auto ext = extend(config);
  const auto lambda = type_to_partition(cycle_type(ext.permutation()));
  out << to_string(cycle_decomposition(ext.permutation())) << '\n'
      << to_string(lambda) << '\n'
      << class_size(lambda) << '\n';
}

void print_classes(int n, int v, std::ostream& out) {
  const auto classes = admissible_partitions(n, v);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << to_string(classes[i]) << '\t' << class_size(classes[i]);
    if (i + 1 < classes.size()) out << '\t' << to_string(dominance_compare(classes[i], classes[i + 1]));
    out << '\n';
  }
}

void print_census(int n, int v, std::uint64_t cap, std::ostream& out) {
  for (const auto& [lambda, count] : class_census(n, v, cap)) {
    out << to_string(lambda) << '\t' << count << '\n';
  }
}

void print_tabloids(const std::string& shape_text, bool list, const std::string& act,
                    bool matrix, std::uint64_t cap, std::ostream& out) {
  const auto shape = parse_partition(shape_text);
  out << tabloid_count(shape) << '\n';
  if (!list && act.empty()) return;
  const auto basis = enumerate_tabloids(shape, cap);
  std::optional<Permutation> pi;
  if (!act.empty()) {
    if (shape.n() == 0) throw InvalidArgument("--act needs a shape with at least one box");
    pi = parse_cycles(act, static_cast<std::size_t>(shape.n()));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << i + 1 << '\t' << to_string(basis[i]);
    if (pi) {
      const auto image = act_on_tabloid(*pi, basis[i]);
      out << '\t' << tabloid_rank(image) + 1 << '\t' << to_string(image);
    }
    out << '\n';
  }
  if (matrix && pi) out << to_string(representation_matrix(*pi, shape, cap));
}

void print_match(const std::string& schema_path, const std::string& query_text, std::size_t k,
                 bool by_class, std::ostream& out) {
  const auto vocabulary = build_vocabulary(load_schema(schema_path));
  const auto query = parse_query(query_text);
  const auto results = top_k_configurations(score_matrix(query, vocabulary), k);
  if (!by_class) {
    for (std::size_t i = 0; i < results.size(); ++i) out << format_ranked(i + 1, results[i]) << '\n';
    return;
  }
  // Keep each configuration's overall rank inside its group.
  std::map<std::vector<int>, std::size_t> rank_of;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto targets = results[i].config.targets();
    rank_of.emplace(std::vector<int>(targets.begin(), targets.end()), i + 1);
  }
  for (const auto& group : rank_by_class(results)) {
    out << "class\t" << to_string(group.cycle_class) << '\t' << group.members.size() << '\t'
        << (group.relation_to_next ? to_string(*group.relation_to_next) : "-") << '\n';
    for (const auto& member : group.members) {
      const auto targets = member.config.targets();
      out << format_ranked(rank_of.at(std::vector<int>(targets.begin(), targets.end())), member)
          << '\n';
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Keyword-query configurations as elements of the symmetric group", "kwsym"};
  app.require_subcommand(1);
  std::uint64_t cap = kDefaultEnumerationCap;
  app.add_option("--cap", cap, "Upper bound on enumerations")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));

  int n = 0;
  int v = 0;
  auto add_nv = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Number of keywords N")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--v", v, "Vocabulary size V")->required()->check(CLI::NonNegativeNumber);
  };

  std::string schema_path;
  auto* vocab = app.add_subcommand("vocab", "Print the vocabulary of a schema");
  vocab->add_option("schema", schema_path, "Schema file")->required();

  std::string map;
  auto* extend_cmd = app.add_subcommand("extend", "Extend a configuration to a permutation");
  add_nv(extend_cmd);
  extend_cmd->add_option("--map", map, "Targets j1,...,jN")->required();

  auto* classes = app.add_subcommand("classes", "Admissible cycle classes with sizes");
  add_nv(classes);

  auto* census = app.add_subcommand("census", "Brute-force class census of all configurations");
  add_nv(census);

  std::string shape;
  std::string act;
  bool list = false;
  bool matrix = false;
  auto* tabloids = app.add_subcommand("tabloids", "Count, list and act on tabloids");
  tabloids->add_option("--shape", shape, "Partition such as (3,2)")->required();
  tabloids->add_flag("--list", list, "List the tabloid basis");
  auto* act_opt = tabloids->add_option("--act", act, "Permutation in cycle notation");
  tabloids->add_flag("--matrix", matrix, "Print the representation matrix")->needs(act_opt);

  std::string query;
  std::size_t k = 1;
  bool by_class = false;
  auto* match = app.add_subcommand("match", "Rank configurations of a keyword query");
  match->add_option("schema", schema_path, "Schema file")->required();
  match->add_option("--query", query, "Keyword query")->required();
  match->add_option("--k", k, "Number of configurations")->check(CLI::PositiveNumber);
  match->add_flag("--by-class", by_class, "Group results by cycle class");

  std::vector<const char*> argv{"kwsym"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vocab) {
      out << format_vocabulary(build_vocabulary(load_schema(schema_path)));
    } else if (*extend_cmd) {
      print_extend(n, v, map, out);
    } else if (*classes) {
      print_classes(n, v, out);
    } else if (*census) {
      print_census(n, v, cap, out);
    } else if (*tabloids) {
      print_tabloids(shape, list, act, matrix, cap, out);
    } else if (*match) {
      print_match(schema_path, query, k, by_class, out);
    }
  } catch (const CapExceeded& e) {
    err << "kwsym: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "kwsym: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace kwsym
