#include "wqo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wqo/bench.hpp"
#include "wqo/census.hpp"
#include "wqo/error.hpp"
#include "wqo/generator.hpp"
#include "wqo/term_io.hpp"
#include "wqo/whistle.hpp"

namespace wqo::cli {

namespace {

struct Options {
  std::string sig_path;
  std::uint32_t k = 2;
  std::string wqo;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::uint32_t cap = 1000;
  std::uint32_t size = 50;
  int repeats = 3;
  unsigned threads = 0;
  bool audit = false;
  bool naive = false;
  std::string corpus_path;
  std::string dump_path;
  std::string term1, term2;
  std::string stream_path;
};

SignaturePtr signature(const Options &o) {
  return o.sig_path.empty() ? default_signature() : load_signature(o.sig_path);
}

std::vector<WqoSpec> spec_list(const std::string &names, std::uint32_t k) {
  if (names.empty() || names == "all")
    return named_wqos(k);
  std::vector<WqoSpec> specs;
  std::stringstream in(names);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty())
      specs.push_back(parse_wqo_name(name, k));
  }
  if (specs.empty())
    throw Error("no WQO names given");
  return specs;
}

int cmd_compare(const Options &o, std::ostream &out) {
  auto sig = signature(o);
  WqoSpec spec = parse_wqo_name(o.wqo, o.k);
  Tree s = parse_tree(o.term1, sig);
  Tree t = parse_tree(o.term2, sig);
  auto ps = make_profile(s, spec.required_measures(), o.k);
  auto pt = make_profile(t, spec.required_measures(), o.k);
  for (WqoId id : spec.display_order())
    out << letter(id) << '\t' << (holds(id, ps, pt) ? "related" : "unrelated") << '\n';
  bool related = rel(spec, ps, pt);
  out << (related ? "RELATED" : "UNRELATED") << '\n';
  return related ? 0 : 1;
}

template <class Checker> int run_stream(Checker &checker, const Options &o, std::ostream &out) {
  auto sig = signature(o);
  std::ifstream in(o.stream_path);
  if (!in)
    throw Error("cannot open stream file '" + o.stream_path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos)
      continue;
    Tree t = [&] {
      try {
        return parse_tree(line, sig);
      } catch (const ParseError &e) {
        throw ParseError(e.message(), e.offset(), lineno);
      }
    }();
    PushOutcome r = checker.push(t);
    if (r.whistled()) {
      out << r.position << "\tWHISTLE\t" << *r.witness << '\n';
      return 0;
    }
    out << r.position << "\tADMIT\n";
  }
  return 1;
}

int cmd_whistle(const Options &o, std::ostream &out) {
  WqoSpec spec = parse_wqo_name(o.wqo, o.k);
  if (o.naive) {
    NaiveChecker checker(spec);
    return run_stream(checker, o, out);
  }
  SequenceChecker checker(spec);
  return run_stream(checker, o, out);
}

int cmd_census(const Options &o, std::ostream &out, std::ostream &err) {
  auto specs = spec_list(o.wqo, o.k);
  GeneratorConfig cfg;
  cfg.sig = signature(o);
  cfg.seed = o.seed;
  cfg.corpus_size = o.n;
  cfg.size_cap = o.cap;

  std::vector<Tree> corpus;
  if (!o.corpus_path.empty()) {
    corpus = load_trees(o.corpus_path, cfg.sig);
  } else {
    if (auto warning = validate(cfg))
      err << "warning: " << *warning << '\n';
    corpus = generate_corpus(cfg);
  }
  if (!o.dump_path.empty()) {
    std::ofstream dump(o.dump_path);
    if (!dump)
      throw Error("cannot write corpus to '" + o.dump_path + "'");
    write_trees(dump, corpus);
  }

  RelationTable table(corpus, o.k, o.threads);
  CensusResult result = census(table, specs);
  result.seed = o.corpus_path.empty() ? o.seed : 0;
  result.size_cap = o.cap;
  result.y_threshold = o.k;
  write_census_tsv(out, result);
  if (!o.audit)
    return 0;
  AuditReport report = hierarchy_audit(table, specs);
  write_audit(out, report);
  return report.ok() ? 0 : 1;
}

int cmd_bench(const Options &o, std::ostream &out) {
  WqoSpec spec = parse_wqo_name(o.wqo, o.k);
  BenchReport report = bench_whistle(spec, signature(o), o.n, o.size, o.seed, o.repeats);
  write_bench_tsv(out, report);
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Well-quasi orders on trees: comparison, whistles, census and benchmarks"};
  app.require_subcommand(1);
  app.add_option("--sig", o.sig_path, "signature file (default: a/0 b/1 c/2 d/3)");
  app.add_option("--k", o.k, "threshold for Y (constructors used at least k times)")
      ->check(CLI::Range(2u, 1000000u));

  auto *compare = app.add_subcommand("compare", "decide s <= t for one WQO");
  compare->add_option("--wqo", o.wqo, "WQO name, e.g. H or YZE")->required();
  compare->add_option("s", o.term1, "first term")->required();
  compare->add_option("t", o.term2, "second term")->required();

  auto *whistle = app.add_subcommand("whistle", "push a stream of terms until the whistle blows");
  whistle->add_option("--wqo", o.wqo, "WQO name")->required();
  whistle->add_flag("--naive", o.naive, "use the all-pairs reference checker");
  whistle->add_option("stream", o.stream_path, "file with one term per line")->required();

  auto *census_cmd = app.add_subcommand("census", "count related pairs over a random corpus");
  o.n = 400;
  census_cmd->add_option("--wqo", o.wqo, "comma-separated WQO names, or 'all'");
  census_cmd->add_option("--seed", o.seed, "generator seed");
  census_cmd->add_option("--n", o.n, "corpus size");
  census_cmd->add_option("--cap", o.cap, "largest tree size drawn");
  census_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  census_cmd->add_option("--corpus", o.corpus_path, "read the corpus from a tree file");
  census_cmd->add_option("--dump", o.dump_path, "write the corpus to a tree file");
  census_cmd->add_flag("--audit", o.audit, "check the discriminative-power hierarchy");

  auto *bench = app.add_subcommand("bench", "time optimized and naive whistles at n and 2n");
  bench->add_option("--wqo", o.wqo, "WQO name")->required();
  bench->add_option("--n", o.n, "stream length");
  bench->add_option("--size", o.size, "typical tree size");
  bench->add_option("--seed", o.seed, "stream seed");
  bench->add_option("--repeats", o.repeats, "runs per measurement, best is kept");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*compare)
      return cmd_compare(o, out);
    if (*whistle)
      return cmd_whistle(o, out);
    if (*census_cmd)
      return cmd_census(o, out, err);
    if (*bench) {
      if (bench->count("--n") == 0)
        o.n = 1000;
      return cmd_bench(o, out);
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace wqo::cli
