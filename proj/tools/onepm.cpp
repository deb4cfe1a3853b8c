// onepm: generate extremal 1-planar families, solve matchings, check bounds.
//
// Exit codes: 0 ok/holds, 1 usage, 2 parse or unreadable input,
// 3 precondition, 4 property violated, 5 unimplemented family.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onepm/onepm.hpp"

namespace fs = std::filesystem;
using namespace onepm;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, precondition = 3, violation = 4, unimplemented = 5 };

struct Run {
  std::ostringstream out;
  RunManifest manifest;

  std::string input(const std::string& path) {
    std::string text = read_file(path);
    manifest.input_digests.emplace_back(path, fnv1a64(text));
    return text;
  }

  void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::parse_error, "cannot write " + path);
    f << text;
    manifest.outputs.emplace_back(path, fnv1a64(text));
  }
};

bool is_drawing_text(const std::string& text) { return text.rfind("1pg ", 0) == 0; }

Graph load_graph(Run& run, const std::string& path) {
  const std::string text = run.input(path);
  return is_drawing_text(text) ? parse_1pg(text).graph() : parse_edge_list(text);
}

OnePlanarDrawing load_drawing(Run& run, const std::string& path) { return parse_1pg(run.input(path)); }

/// A vertex set given as a witness file, `side0`/`side1` of the bipartition,
/// or a comma separated list (possibly empty).
VertexSet load_set(Run& run, const std::string& spec, const Graph& g) {
  if (spec == "side0" || spec == "side1") {
    const auto sides = bipartition(g);
    if (!sides) fail(Errc::not_bipartite, "graph has no bipartition");
    return spec == "side0" ? sides->first : sides->second;
  }
  if (!spec.empty() && fs::is_regular_file(spec)) return parse_witness(run.input(spec)).s;
  std::vector<Vertex> ids;
  std::stringstream in(spec);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    ids.push_back(static_cast<Vertex>(detail::parse_int(tok, 1)));
  }
  VertexSet s(std::move(ids));
  s.require_within(g.vertex_count());
  return s;
}

std::string verdict(const BoundCheck& c) {
  return "lhs=" + c.lhs.str() + " rhs=" + c.rhs.str() + (c.holds ? " holds" : " violated");
}

struct Options {
  std::string family;
  int s = 0, k = 0, g = 0, n = 0, x = 0;
  std::uint64_t seed = 1;
  std::string out_dir = ".";

  std::string graph_path;
  std::string mode = "matching";
  int limit = default_bruteforce_limit;

  std::string what, input, t_spec, s_spec, provenance, generator, ledger;
  int delta = 0;
  std::optional<std::uint64_t> shuffle_seed;

  std::string manifest_path;
};

int cmd_generate(Run& run, const Options& o) {
  FamilyInstance inst;
  try {
    if (o.family == "delta3") inst = family_delta3(o.s);
    else if (o.family == "delta4") inst = family_delta4(o.s);
    else if (o.family == "delta4-k5") inst = family_delta4_k5(o.k);
    else if (o.family == "delta5") inst = family_delta5(o.g);
    else if (o.family == "delta6") inst = family_delta6(o.g);
    else if (o.family == "delta7") inst = family_delta7(o.g);
    else if (o.family == "random") {
      inst.drawing = random_oneplanar(o.n, o.x, o.seed);
      inst.graph = inst.drawing.graph();
      inst.name = "random-n" + std::to_string(o.n) + "-x" + std::to_string(o.x) + "-seed" + std::to_string(o.seed);
      inst.delta = min_degree(inst.graph);
      if (inst.graph.vertex_count() <= default_bruteforce_limit) inst.witness = tutte_berge_bruteforce(inst.graph).s;
      inst.predicted_deficiency = odd_components(inst.graph, inst.witness).odd_count - static_cast<int>(inst.witness.size());
      inst.predicted_matching_upper = matching_upper_from_witness(inst.graph, inst.witness);
    } else {
      std::cerr << "error: unknown family '" << o.family << "'\n";
      return usage;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::unimplemented ? unimplemented : usage;
  }
  fs::create_directories(o.out_dir);
  const fs::path base = fs::path(o.out_dir) / inst.name;
  run.write(base.string() + ".graph", format_edge_list(inst.graph));
  run.write(base.string() + ".1pg", format_1pg(inst.drawing));
  run.write(base.string() + ".witness",
            format_witness({inst.witness, inst.predicted_deficiency, inst.predicted_matching_upper}));
  run.out << inst.name << " n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count() << " delta=" << inst.delta
          << " crossings=" << inst.drawing.dummy_count() << " deficiency=" << inst.predicted_deficiency
          << " matching_upper=" << inst.predicted_matching_upper << '\n';
  return ok;
}

int cmd_solve(Run& run, const Options& o) {
  const Graph g = load_graph(run, o.graph_path);
  if (o.mode == "matching") {
    const Matching m = maximum_matching(g);
    run.out << "matching " << m.size() << '\n';
    for (const Edge& e : m.edges) run.out << "m " << e.u << ' ' << e.v << '\n';
    return ok;
  }
  const auto w = tutte_berge_bruteforce(g, o.limit);
  if (o.mode == "oracle") {
    run.out << format_witness({w.s, w.deficiency, (g.vertex_count() - w.deficiency) / 2});
    return ok;
  }
  const int matched = maximum_matching(g).size();
  if (2 * matched == g.vertex_count() - w.deficiency) {
    run.out << "equal\n";
    return ok;
  }
  run.out << "mismatch n=" << g.vertex_count() << " matching=" << matched << " deficiency=" << w.deficiency << '\n';
  run.out << format_witness({w.s, w.deficiency, (g.vertex_count() - w.deficiency) / 2});
  return violation;
}

Provenance load_provenance(Run& run, const Options& o, const std::string& input_text) {
  if (!o.provenance.empty()) return Provenance::from_drawing(load_drawing(run, o.provenance));
  if (!o.generator.empty()) return Provenance::from_generator(o.generator);
  if (is_drawing_text(input_text)) return Provenance::from_drawing(parse_1pg(input_text));
  return {};
}

int cmd_check(Run& run, const Options& o) {
  const std::string text = run.input(o.input);
  const bool drawing_input = is_drawing_text(text);
  auto drawing = [&] {
    if (!drawing_input) fail(Errc::parse_error, o.input + " is not a 1pg drawing");
    return parse_1pg(text);
  };
  const Graph g = drawing_input ? parse_1pg(text).graph() : parse_edge_list(text);

  if (o.what == "obs1") {
    const auto d = drawing();
    const auto sides = bipartition(g);
    if (!sides) fail(Errc::not_bipartite, "graph is not bipartite");
    const auto c = check_observation1(d, *sides);
    run.out << verdict(c) << '\n';
    return c.holds ? ok : violation;
  }
  if (o.what == "lemma5" || o.what == "lemma6") {
    const auto d = drawing();
    const VertexSet t = load_set(run, o.t_spec, g);
    const auto c = o.what == "lemma5" ? lemma5_check(d, t) : lemma6_check(d, t);
    run.out << verdict(c) << '\n';
    return c.holds ? ok : violation;
  }
  if (o.what == "lemma7" || o.what == "lemma8") {
    const VertexSet s = load_set(run, o.s_spec, g);
    const auto prov = load_provenance(run, o, text);
    const auto c = o.what == "lemma7" ? lemma7_check(g, s, o.delta, prov) : lemma8_check(g, s, prov);
    run.out << verdict(c) << '\n';
    return c.holds ? ok : violation;
  }
  if (o.what == "theorem1") {
    const auto r = theorem1_certify(g, o.delta, load_provenance(run, o, text));
    run.out << "|M|=" << r.matching << " bound=" << r.bound.str();
    if (!r.applicable) {
      run.out << " not-applicable threshold=" << r.threshold << '\n';
      return ok;
    }
    run.out << (r.holds ? " holds" : " fails") << (r.tight ? " tight" : "") << '\n';
    return r.holds ? ok : violation;
  }
  if (o.what == "charge") {
    const auto d = drawing();
    const VertexSet s = load_set(run, o.s_spec, g);
    const auto ledger = charging_run(d, s, s.complement(g.vertex_count()), {o.shuffle_seed});
    const auto report = charge_verify(ledger);
    if (!o.ledger.empty()) run.write(o.ledger, format_ledger(ledger));
    run.out << "chords " << ledger.added_chords.size() << " deltav " << ledger.delta_vertices.size() << '\n';
    run.out << "total " << ledger.sum_of_charges << ' ' << ledger.rhs_bound << '\n';
    run.out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) run.out << "violation " << v << '\n';
    return report.ok() ? ok : violation;
  }
  std::cerr << "error: unknown check '" << o.what << "'\n";
  return usage;
}

int cmd_validate(Run& run, const Options& o) {
  const auto d = load_drawing(run, o.input);
  const auto report = validate(d);
  if (!report.ok()) {
    for (const auto& v : report.violations) run.out << "violation " << v << '\n';
    return violation;
  }
  const auto part = crossing_partition(d);
  run.out << "valid n=" << d.real_count() << " m=" << d.edge_count() << " crossings=" << d.dummy_count()
          << " crossed=" << part.crossed.size() << " uncrossed=" << part.uncrossed.size();
  if (detail::planarization_components(d).first == 1) run.out << " faces=" << faces(d).size();
  run.out << '\n';
  return ok;
}

int dispatch(const std::vector<std::string>& argv, Run& run, std::string* manifest_path);

int cmd_replay(Run& run, const std::string& path) {
  const RunManifest recorded = parse_manifest(run.input(path));
  Run again;
  const int code = dispatch(recorded.argv, again, nullptr);
  again.manifest.outputs.emplace_back("-", fnv1a64(again.out.str()));
  int mismatches = 0;
  for (const auto& [file, digest] : recorded.input_digests) {
    const auto it = std::find_if(again.manifest.input_digests.begin(), again.manifest.input_digests.end(),
                                 [&](const auto& p) { return p.first == file; });
    if (it == again.manifest.input_digests.end() || it->second != digest) {
      run.out << "changed input " << file << '\n';
      ++mismatches;
    }
  }
  for (const auto& [file, digest] : recorded.outputs) {
    const auto it = std::find_if(again.manifest.outputs.begin(), again.manifest.outputs.end(),
                                 [&](const auto& p) { return p.first == file; });
    if (it == again.manifest.outputs.end() || it->second != digest) {
      run.out << "mismatch " << file << '\n';
      ++mismatches;
    }
  }
  run.out << (mismatches == 0 ? "reproduced" : "not reproduced") << " exit=" << code << '\n';
  return mismatches == 0 ? ok : violation;
}

int dispatch(const std::vector<std::string>& argv, Run& run, std::string* manifest_path) {
  CLI::App app{"1-planar matching bounds toolkit", "onepm"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--manifest", o.manifest_path, "Write a run manifest to this path");

  auto* gen = app.add_subcommand("generate", "Write .graph, .1pg and .witness files for a family instance");
  gen->add_option("family", o.family, "delta3|delta4|delta4-k5|delta5|delta6|delta7|random")->required();
  gen->add_option("--s", o.s, "Base size for delta3/delta4");
  gen->add_option("--k", o.k, "Number of K5 copies for delta4-k5");
  gen->add_option("--g", o.g, "Number of blocks for delta5/6/7");
  gen->add_option("--n", o.n, "Vertex count for random");
  gen->add_option("--x", o.x, "Crossing count for random");
  gen->add_option("--seed", o.seed, "Seed for random")->capture_default_str();
  gen->add_option("-o,--out", o.out_dir, "Output directory")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Maximum matching, Tutte-Berge oracle, or duality check");
  solve->add_option("graph", o.graph_path, "Edge list or 1pg file")->required();
  solve->add_option("--mode", o.mode, "matching|oracle|duality")
      ->check(CLI::IsMember({"matching", "oracle", "duality"}))
      ->capture_default_str();
  solve->add_option("--limit", o.limit, "Largest n for the exhaustive search")->capture_default_str();

  auto* check = app.add_subcommand("check", "Evaluate one inequality or audit a charging run");
  check->add_option("what", o.what, "obs1|lemma5|lemma6|lemma7|lemma8|theorem1|charge")
      ->required()
      ->check(CLI::IsMember({"obs1", "lemma5", "lemma6", "lemma7", "lemma8", "theorem1", "charge"}));
  check->add_option("input", o.input, "Graph or drawing file")->required();
  check->add_option("--T", o.t_spec, "T as witness file, side0|side1, or comma list");
  check->add_option("--S", o.s_spec, "S as witness file or comma list");
  check->add_option("--delta", o.delta, "Minimum degree class");
  check->add_option("--provenance", o.provenance, "Drawing attesting 1-planarity");
  check->add_option("--generator", o.generator, "Generator name attesting 1-planarity");
  check->add_option("--seed", o.shuffle_seed, "Shuffle the chord order of the charging run");
  check->add_option("--ledger", o.ledger, "Write the charging ledger here");

  auto* val = app.add_subcommand("validate", "Validate a 1pg drawing");
  val->add_option("drawing", o.input, "1pg file")->required();

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare output digests");
  replay->add_option("manifest", replay_path, "Manifest file")->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    run.out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  if (manifest_path) *manifest_path = o.manifest_path;

  auto* sub = app.get_subcommands().front();
  run.manifest.command = sub->get_name();
  for (const std::string& a : argv)
    if (a != "--manifest" && a != o.manifest_path) run.manifest.argv.push_back(a);
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    run.manifest.arguments.emplace_back(name, opt->as<std::string>());
  }

  try {
    if (sub == gen) return cmd_generate(run, o);
    if (sub == solve) return cmd_solve(run, o);
    if (sub == check) return cmd_check(run, o);
    if (sub == val) return cmd_validate(run, o);
    return cmd_replay(run, replay_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::parse_error: return parse;
      case Errc::unimplemented: return unimplemented;
      default: return precondition;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Run run;
  std::string manifest_path;
  const int code = dispatch(args, run, &manifest_path);
  std::cout << run.out.str();
  if (!manifest_path.empty() && code != usage) {
    run.manifest.outputs.emplace_back("-", fnv1a64(run.out.str()));
    std::ofstream(manifest_path, std::ios::binary) << format_manifest(run.manifest);
  }
  return code;
}
