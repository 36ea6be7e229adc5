// Command-line front end: complex ingestion, pipeline orchestration and
// tabulated reports. Exit codes: 0 success/PASS, 1 verification failure,
// 2 invalid input.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "raagpres/builder.hpp"
#include "raagpres/io.hpp"
#include "raagpres/oracle.hpp"
#include "raagpres/simplifier.hpp"

using namespace raagpres;

namespace {

struct RunConfig {
  std::string input;
  std::string n_spec = "1";
  std::string format = "text";
  std::string seed;
  std::string order;       // comma-separated face names
  std::string keep;        // comma-separated a:b edges
  std::string loop;        // comma-separated vertices
  int max_cycle_len = 6;
  long coset_limit = 1'000'000;
};

std::pair<int, int> parse_n_range(const std::string& spec) {
  auto dots = spec.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = std::stoi(spec);
  } else {
    lo = std::stoi(spec.substr(0, dots));
    hi = std::stoi(spec.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad n range: " + spec);
  return {lo, hi};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

ComplexFile load(const std::string& path) {
  auto file = parse_complex_file(path);
  auto rep = validate(file.complex);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
    throw ParseError("complex fails validation");
  }
  return file;
}

OrderedTree tree_for(const ComplexFile& file) {
  if (file.ordering)
    return ordering_and_tree(file.complex, *file.ordering,
                             file.tree ? &*file.tree : nullptr);
  return ordering_and_tree(file.complex, file.complex.vertex_name(0));
}

SimplifyOptions simplify_options(const RunConfig& cfg) {
  SimplifyOptions opts;
  opts.face_order = split_commas(cfg.order);
  for (const auto& tok : split_commas(cfg.keep)) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("keep edges look like a:b");
    opts.keep_edges.emplace_back(tok.substr(0, colon), tok.substr(colon + 1));
  }
  return opts;
}

int cmd_validate(const RunConfig& cfg) {
  auto file = parse_complex_file(cfg.input);
  auto rep = validate(file.complex);
  if (rep.ok()) {
    std::cout << "valid: " << file.complex.vertex_count() << " vertices, "
              << file.complex.edge_count() << " edges, "
              << file.complex.triangle_count() << " triangles\n";
    return 0;
  }
  for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
  return 2;
}

int cmd_invariants(const RunConfig& cfg) {
  auto file = load(cfg.input);
  const auto& c = file.complex;
  auto h1 = homology_h1(c);
  if (cfg.format == "machine") {
    std::ostringstream os;
    os << "{\n  \"chi\": " << euler_characteristic(c)
       << ",\n  \"chi_raag\": " << euler_characteristic_raag(c)
       << ",\n  \"h1_free_rank\": " << h1.free_rank << ",\n  \"h1_torsion\": [";
    for (std::size_t i = 0; i < h1.torsion.size(); ++i)
      os << (i ? ", " : "") << h1.torsion[i];
    os << "],\n  \"one_acyclic\": " << (h1.one_acyclic ? "true" : "false")
       << ",\n  \"h1_obstructs_simple_connectivity\": "
       << (h1.h1_obstructs_simple_connectivity ? "true" : "false") << "\n}\n";
    std::cout << os.str();
  } else {
    std::cout << "chi(complex) = " << euler_characteristic(c) << "\n"
              << "chi(group) = " << euler_characteristic_raag(c) << "\n"
              << "H1 = " << AbelianInvariants{h1.free_rank, h1.torsion}.to_string()
              << "\n"
              << "1-acyclic: " << (h1.one_acyclic ? "yes" : "no") << "\n"
              << "H1 obstructs simple connectivity: "
              << (h1.h1_obstructs_simple_connectivity ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_build(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  if (lo != hi) throw std::invalid_argument("build takes a single n");
  auto tree = cfg.seed.empty() ? tree_for(file)
                               : ordering_and_tree(file.complex, cfg.seed);
  auto ctx = make_build_context(file.complex, tree, lo);
  auto p = build_gamma_presentation(ctx);
  if (cfg.format == "machine")
    std::cout << presentation_to_json(p, file.complex, lo) << "\n";
  else
    std::cout << presentation_to_text(p);
  return 0;
}

int cmd_table(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  auto tree = tree_for(file);
  std::cout << "n\tgenerators\trelators\tdeficiency\teuler_bound\n";
  for (int n = lo; n <= hi; ++n) {
    auto ctx = make_build_context(file.complex, tree, n);
    auto p = build_gamma_presentation(ctx);
    int gens = static_cast<int>(p.generators().size());
    int rels = static_cast<int>(p.relators().size());
    int expected = file.complex.vertex_count() - 1 +
                   n * (1 - euler_characteristic(file.complex));
    if (rels != expected)
      throw std::logic_error("relator count diverges from the size formula");
    std::cout << n << "\t" << gens << "\t" << rels << "\t" << rels - gens << "\t"
              << n * (1 - euler_characteristic(file.complex)) - 1 << "\n";
  }
  return 0;
}

int cmd_overlay_simplify(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  if (lo != hi) throw std::invalid_argument("overlay-simplify takes a single n");
  OrderingSpec spec;
  const OrderingSpec* spec_ptr = nullptr;
  if (file.ordering) {
    spec.ordering = *file.ordering;
    if (file.tree) spec.tree = *file.tree;
    spec_ptr = &spec;
  }
  auto run = overlay_simplify_pipeline(file.complex, lo, simplify_options(cfg),
                                       spec_ptr);
  if (cfg.format == "machine") {
    std::cout << presentation_to_json(run.presentation, *run.ambient, lo) << "\n";
    std::cout << log_to_json(run.log) << "\n";
  } else {
    std::cout << presentation_to_text(run.presentation);
    std::cout << log_to_text(run.log);
    auto fams = remaining_families(run.presentation);
    std::cout << "remaining families: " << fams.size();
    for (const auto& [a, b] : fams) std::cout << " F(" << a << "," << b << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  if (lo != hi) throw std::invalid_argument("verify takes a single n");
  VerificationReport rep;
  if (file.complex.triangle_count() == 0) {
    auto tree = tree_for(file);
    auto ctx = make_build_context(file.complex, tree, lo);
    auto p = build_gamma_presentation(ctx);
    rep = verify_presentation(p, ctx, cfg.coset_limit);
  } else {
    OrderingSpec spec;
    const OrderingSpec* spec_ptr = nullptr;
    if (file.ordering) {
      spec.ordering = *file.ordering;
      if (file.tree) spec.tree = *file.tree;
      spec_ptr = &spec;
    }
    auto run = overlay_simplify_pipeline(file.complex, lo, simplify_options(cfg),
                                         spec_ptr);
    rep = verify_presentation(run.presentation, run.ctx, cfg.coset_limit);
  }
  if (cfg.format == "machine")
    std::cout << report_to_json(rep, lo) << "\n";
  else
    std::cout << report_to_text(rep, lo);
  return rep.pass(lo) ? 0 : 1;
}

int cmd_dicks_leary(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  if (lo != hi) throw std::invalid_argument("dicks-leary takes a single n");
  auto dl = dicks_leary(file.complex, lo, cfg.max_cycle_len);
  bool all_sound = true;
  for (const auto& r : dl.presentation.relators())
    if (!trivial_in_group(dicks_leary_expand(dl, r.word), file.complex))
      all_sound = false;
  if (cfg.format == "machine")
    std::cout << presentation_to_json(dl.presentation, file.complex, lo) << "\n";
  else
    std::cout << presentation_to_text(dl.presentation);
  std::cout << (all_sound ? "all relators trivial in the ambient group\n"
                          : "UNSOUND RELATORS PRESENT\n");
  return all_sound ? 0 : 1;
}

int cmd_cone_off(const RunConfig& cfg) {
  auto file = load(cfg.input);
  auto [lo, hi] = parse_n_range(cfg.n_spec);
  if (lo != hi) throw std::invalid_argument("cone-off takes a single n");
  auto loop = split_commas(cfg.loop);
  if (loop.empty()) throw std::invalid_argument("--loop is required");
  auto run = cone_off_pipeline(file.complex, loop, lo);
  if (cfg.format == "machine") {
    std::cout << presentation_to_json(run.presentation, *run.ambient, lo) << "\n";
    std::cout << log_to_json(run.log) << "\n";
  } else {
    std::cout << presentation_to_text(run.presentation);
    std::cout << log_to_text(run.log);
    auto fams = remaining_families(run.presentation);
    std::cout << "remaining families: " << fams.size();
    for (const auto& [a, b] : fams) std::cout << " F(" << a << "," << b << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentations of level subgroups of right-angled Artin groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("RAAGPRES_COSET_LIMIT"))
    cfg.coset_limit = std::atol(env);

  auto add_common = [&](CLI::App* sub, bool with_n) {
    sub->add_option("input", cfg.input, "complex file")->required();
    if (with_n) sub->add_option("--n", cfg.n_spec, "level, or range a..b");
    sub->add_option("--format", cfg.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    return sub;
  };

  auto* v = add_common(app.add_subcommand("validate", "check a complex file"), false);
  auto* inv = add_common(app.add_subcommand("invariants", "chi, H1 and flags"), false);
  auto* b = add_common(app.add_subcommand("build", "explicit level-subgroup presentation"), true);
  b->add_option("--seed", cfg.seed, "BFS seed vertex");
  auto* t = add_common(app.add_subcommand("table", "counts across an n range"), true);
  auto* os = add_common(
      app.add_subcommand("overlay-simplify", "2-complex pipeline with elimination"),
      true);
  os->add_option("--order", cfg.order, "elimination order override (faces)");
  os->add_option("--keep", cfg.keep, "families to pin, a:b pairs");
  auto* ver = add_common(app.add_subcommand("verify", "oracle checks"), true);
  ver->add_option("--coset-limit", cfg.coset_limit, "Todd-Coxeter coset cap");
  ver->add_option("--order", cfg.order, "elimination order override (faces)");
  ver->add_option("--keep", cfg.keep, "families to pin, a:b pairs");
  auto* dl = add_common(
      app.add_subcommand("dicks-leary", "truncated kernel presentation"), true);
  dl->add_option("--max-cycle-len", cfg.max_cycle_len, "cycle length bound");
  auto* co = add_common(app.add_subcommand("cone-off", "cone off an edge loop"), true);
  co->add_option("--loop", cfg.loop, "loop vertices, comma separated")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_validate(cfg);
    if (inv->parsed()) return cmd_invariants(cfg);
    if (b->parsed()) return cmd_build(cfg);
    if (t->parsed()) return cmd_table(cfg);
    if (os->parsed()) return cmd_overlay_simplify(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (dl->parsed()) return cmd_dicks_leary(cfg);
    if (co->parsed()) return cmd_cone_off(cfg);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
