// Command-line front end: analyze, reconstruct, compare, verify, enumerate, kx.
// Exit codes: 0 success, 1 a verification check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#ifdef HYPERTREE_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "hypertree/hypertree.hpp"

namespace {

using hypertree::io::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

hypertree::PointedTree read_pointed(const std::string& path) {
  return hypertree::normalize(hypertree::io::pointed_tree_from_json(read_json(path)));
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
  std::vector<std::string> inputs;
  std::string format;
  int max_edges = 0;
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
  bool pointed = false;

  hypertree::BuildOptions build() const { return {cap, jobs}; }
  hypertree::SweepOptions sweep() const { return {jobs, build()}; }
  const std::string& input() const {
    if (inputs.empty()) throw InputError("--input is required");
    return inputs.front();
  }
};

int run_analyze(const Options& o) {
  const auto t = read_pointed(o.input());
  const auto aug = hypertree::augment(t);
  auto c = hypertree::build_complex(aug.tree, o.build());
  c.basepoint_order = t.basepoint_order();
  c.attached = aug.attached;
  if (o.format == "dot") {
    std::cout << hypertree::io::hasse_to_dot(c.abstract());
  } else {
    print_json(hypertree::io::complex_to_json(c, aug.tree.tree));
  }
  return 0;
}

int run_reconstruct(const Options& o) {
  const auto c = hypertree::io::complex_from_json(read_json(o.input()));
  const auto t = hypertree::reconstruct_original(c);
  if (o.format == "dot") {
    std::cout << hypertree::io::tree_to_dot(t.tree, t.basepoint);
  } else {
    print_json(hypertree::io::tree_to_json(t));
  }
  return 0;
}

int run_compare(const Options& o) {
  if (o.inputs.size() != 2) throw InputError("compare needs exactly two --input files");
  const auto a = read_pointed(o.inputs[0]);
  const auto b = read_pointed(o.inputs[1]);
  const auto sa = hypertree::signature(a, o.build());
  const auto sb = hypertree::signature(b, o.build());
  const std::string verdict = sa == sb ? "equivalent" : "distinct";
  if (o.format == "json") {
    print_json({{"result", verdict},
                {"a", hypertree::io::signature_to_json(sa)},
                {"b", hypertree::io::signature_to_json(sb)}});
  } else {
    std::cout << verdict << '\n'
              << "a: " << hypertree::io::signature_to_json(sa).dump() << '\n'
              << "b: " << hypertree::io::signature_to_json(sb).dump() << '\n';
  }
  return 0;
}

int run_verify(const Options& o) {
  std::vector<std::pair<std::string, hypertree::VerificationReport>> reports;
  if (!o.inputs.empty()) {
    reports.emplace_back("check_pointed", hypertree::check_pointed(read_pointed(o.input()), o.build()));
  } else {
    const int per_tree = o.max_edges > 0 ? o.max_edges : 9;
    const int pairwise = o.max_edges > 0 ? o.max_edges : 8;
    reports.emplace_back("pointed_sweep", hypertree::pointed_sweep(per_tree, o.sweep()));
    reports.emplace_back("uniqueness_sweep", hypertree::uniqueness_sweep(pairwise, o.sweep()));
    reports.emplace_back("corollary_sweep", hypertree::corollary_sweep(per_tree, o.sweep()));
  }
  bool ok = true;
  if (o.format == "json") {
    json out = json::object();
    for (const auto& [name, r] : reports) out[name] = hypertree::report_to_json(r);
    print_json(out);
  }
  for (const auto& [name, r] : reports) {
    ok = ok && r.passed();
    if (o.format != "json") {
      std::cout << "== " << name << '\n';
      hypertree::print_report(std::cout, r);
    }
  }
  return ok ? 0 : kExitCheckFailed;
}

int run_enumerate(const Options& o) {
  if (o.max_edges < 1) throw InputError("--max-edges must be at least 1");
  json out = json::array();
  std::ostringstream text;
  auto emit = [&](const hypertree::Tree& tree, std::optional<hypertree::Vertex> p) {
    if (o.format == "dot") {
      text << hypertree::io::tree_to_dot(tree, p);
    } else if (o.format == "table") {
      text << tree.edge_count() << '\t'
           << (p ? hypertree::vertex_rooted_code(tree, *p) : hypertree::free_code(tree)) << '\n';
    } else {
      out.push_back(hypertree::io::tree_to_json(tree, p));
    }
  };
  if (o.pointed) {
    for (const auto& t : hypertree::enumerate_pointed(o.max_edges)) emit(t.tree, t.basepoint);
  } else {
    for (const auto& t : hypertree::enumerate_trees(o.max_edges)) emit(t, std::nullopt);
  }
  if (o.format == "dot" || o.format == "table") {
    std::cout << text.str();
  } else {
    print_json(out);
  }
  return 0;
}

int run_kx(const Options& o) {
  const auto doc = hypertree::io::tree_document_from_json(read_json(o.input()));
  const auto tree = hypertree::normalize(doc.tree);
  const int kx = hypertree::kx_size(tree, o.build());
  const int hd = hypertree::homogeneity_degree(tree);
  if (o.format == "json") {
    print_json({{"kx_size", kx}, {"homogeneity_degree", hd}});
  } else {
    std::cout << "kx_size\thomogeneity_degree\n" << kx << '\t' << hd << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell complexes of C(p,X) for finite trees"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, const std::string& default_format,
                        std::vector<std::string> formats) {
    o.format = default_format;
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--cap", o.cap, "Maximum number of cells per complex");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Tree JSON -> complex JSON (or Hasse DOT)");
  analyze->add_option("--input", o.inputs, "Tree JSON file")->required()->expected(1);
  auto* reconstruct = app.add_subcommand("reconstruct", "Complex JSON -> tree JSON");
  reconstruct->add_option("--input", o.inputs, "Complex JSON file")->required()->expected(1);
  auto* compare = app.add_subcommand("compare", "Decide whether two pointed trees share C(p,X)");
  compare->add_option("--input", o.inputs, "Tree JSON file (give twice)")->required();
  auto* verify = app.add_subcommand("verify", "Run checks on one tree or exhaustive sweeps");
  verify->add_option("--input", o.inputs, "Tree JSON file")->expected(1);
  verify->add_option("--max-edges", o.max_edges, "Sweep bound")->check(CLI::PositiveNumber);
  auto* enumerate = app.add_subcommand("enumerate", "List trees or pointed trees");
  enumerate->add_option("--max-edges", o.max_edges, "Maximum number of edges")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--pointed", o.pointed, "One entry per basepoint class");
  auto* kx = app.add_subcommand("kx", "Size of K(X) next to the homogeneity degree");
  kx->add_option("--input", o.inputs, "Tree JSON file")->required()->expected(1);

  for (auto* sub : {analyze, reconstruct}) add_common(sub, "json", {"json", "dot"});
  for (auto* sub : {compare, verify, kx}) add_common(sub, "table", {"json", "table"});
  add_common(enumerate, "json", {"json", "dot", "table"});
  o.format.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  auto* chosen = app.get_subcommands().front();
  if (o.format.empty()) o.format = chosen == analyze || chosen == reconstruct || chosen == enumerate ? "json" : "table";

  try {
    if (chosen == analyze) return run_analyze(o);
    if (chosen == reconstruct) return run_reconstruct(o);
    if (chosen == compare) return run_compare(o);
    if (chosen == verify) return run_verify(o);
    if (chosen == enumerate) return run_enumerate(o);
    return run_kx(o);
  } catch (const hypertree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON document: " << e.what() << '\n';
  }
  return kExitBadInput;
}
