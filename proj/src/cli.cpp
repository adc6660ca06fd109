#include "knotalt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <thread>

#include "knotalt/corpus.hpp"
#include "knotalt/invariants.hpp"
#include "knotalt/random_diagram.hpp"
#include "knotalt/report.hpp"

namespace knotalt {

namespace fs = std::filesystem;

namespace {

struct Job {
  std::string source;
  std::optional<DiagramInput> input;
  std::optional<std::string> load_error;
};

bool diagram_file(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".pd" || ext == ".json";
}

// Files named on the command line are taken as given; directories
// contribute their .pd and .json files in sorted order.
std::vector<Job> collect(const std::vector<std::string>& paths) {
  std::vector<Job> jobs;
  auto load = [&](const fs::path& p) {
    try {
      for (auto& d : load_diagram_file(p.string())) jobs.push_back(Job{p.string(), std::move(d), {}});
    } catch (const InputError& e) {
      jobs.push_back(Job{p.string(), std::nullopt, e.what()});
    }
  };
  for (const auto& arg : paths) {
    const fs::path p(arg);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::recursive_directory_iterator(p, ec))
        if (entry.is_regular_file() && diagram_file(entry.path())) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) load(f);
    } else {
      load(p);
    }
  }
  return jobs;
}

struct DotKind {
  enum { Spatial, Seifert, LabeledSeifert, Height } kind = Spatial;
  int index = 0;
};

std::optional<DotKind> parse_dot_kind(const std::string& s) {
  if (s == "spatial") return DotKind{DotKind::Spatial};
  if (s == "seifert") return DotKind{DotKind::Seifert};
  if (s == "labeled-seifert") return DotKind{DotKind::LabeledSeifert};
  if (s.size() > 1 && s[0] == 'g' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }) && s.size() < 8)
    return DotKind{DotKind::Height, std::stoi(s.substr(1))};
  return std::nullopt;
}

std::string dot_for(const Analysis& a, const DotKind& k) {
  switch (k.kind) {
    case DotKind::Spatial:
      return export_dot(a.spatial);
    case DotKind::Seifert:
      return export_dot(a.labeled, false);
    case DotKind::LabeledSeifert:
      return export_dot(a.labeled, true);
    case DotKind::Height:
      break;
  }
  if (k.index >= static_cast<int>(a.subgraphs.size()))
    throw InputError("no height subgraph g" + std::to_string(k.index) + "; diagram has g0 to g" +
                     std::to_string(static_cast<int>(a.subgraphs.size()) - 1));
  return export_dot(a.labeled, a.subgraphs[k.index]);
}

const CLI::Validator kDotKindValidator(
    [](std::string& s) -> std::string {
      return parse_dot_kind(s) ? std::string{} : "expected spatial, seifert, labeled-seifert or g<i>";
    },
    "KIND");

struct ClassifyArgs {
  std::vector<std::string> paths;
  std::string format = "text";
  std::optional<int> outer_dart;
  std::string check = "all";
  std::string dot;
  unsigned jobs = 0;
  bool timings = false;
};

Record process(const Job& job, const ClassifyArgs& args) {
  if (!job.input) {
    return error_record(fs::path(job.source).stem().string(), job.source, ErrorKind::Input,
                        *job.load_error);
  }
  const auto& in = *job.input;
  ClassifyOptions options;
  options.outer_dart = args.outer_dart ? args.outer_dart : in.outer_dart;
  const CheckSet checks = args.check == "alternative"   ? CheckSet::Alternative
                          : args.check == "homogeneous" ? CheckSet::Homogeneous
                                                        : CheckSet::All;
  try {
    const auto start = std::chrono::steady_clock::now();
    const Analysis a = analyze(in.pd, options, in.name);
    const auto stop = std::chrono::steady_clock::now();
    Record r = make_record(a, checks);
    r.source = job.source;
    if (args.timings) r.milliseconds = std::chrono::duration<double, std::milli>(stop - start).count();
    if (!args.dot.empty()) r.dot = dot_for(a, *parse_dot_kind(args.dot));
    return r;
  } catch (const InputError& e) {
    return error_record(in.name, job.source, ErrorKind::Input, e.what());
  } catch (const ConsistencyError& e) {
    return error_record(in.name, job.source, ErrorKind::Consistency, e.what());
  }
}

int exit_status(const std::vector<Record>& records) {
  int status = kSuccess;
  for (const auto& r : records) {
    if (!r.error) continue;
    status = std::max<int>(status, r.error->kind == ErrorKind::Consistency ? kConsistencyError
                                                                           : kInputError);
  }
  return status;
}

int run_classify(const ClassifyArgs& args, std::ostream& out) {
  const auto jobs = collect(args.paths);
  std::vector<Record> records(jobs.size());
  unsigned workers = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) records[i] = process(jobs[i], args);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  if (args.format == "json") {
    out << to_json(records).dump(2) << "\n";
  } else {
    for (const auto& r : records) out << to_text(r);
    if (records.size() != 1) out << to_text(summarize(records));
  }
  return exit_status(records);
}

struct GraphArgs {
  std::string path;
  std::string kind = "labeled-seifert";
  bool dot = false;
  std::optional<int> outer_dart;
};

void list_graph(const Analysis& a, const DotKind& k, std::ostream& out) {
  if (k.kind == DotKind::Spatial) {
    for (const auto& v : a.spatial.vertices)
      out << "r" << v.region << " " << to_string(v.color) << "\n";
    for (const auto& e : a.spatial.edges)
      out << "r" << e.from << " -> r" << e.to << " " << to_string(e.sign) << "\n";
    return;
  }
  const auto& g = a.labeled;
  std::vector<int> vertices;
  std::vector<int> edges;
  if (k.kind == DotKind::Height) {
    dot_for(a, k);  // range check
    vertices = a.subgraphs[k.index].vertices;
    edges = a.subgraphs[k.index].edges;
  } else {
    for (int v = 0; v < g.graph.vertex_count; ++v) vertices.push_back(v);
    for (const auto& e : g.graph.edges) edges.push_back(e.id);
  }
  for (int v : vertices) {
    out << "c" << v;
    if (k.kind != DotKind::Seifert) out << " height " << g.heights[v];
    out << "\n";
  }
  for (int id : edges) {
    const auto& e = g.graph.edges[id];
    out << "c" << e.u << " -- c" << e.v << " " << to_string(e.sign) << "\n";
  }
}

int run_graph(const GraphArgs& args, std::ostream& out, std::ostream& err) {
  const auto kind = *parse_dot_kind(args.kind);
  try {
    for (const auto& in : load_diagram_file(args.path)) {
      ClassifyOptions options;
      options.outer_dart = args.outer_dart ? args.outer_dart : in.outer_dart;
      const Analysis a = analyze(in.pd, options, in.name);
      if (args.dot)
        out << dot_for(a, kind);
      else
        list_graph(a, kind, out);
    }
  } catch (const InputError& e) {
    err << args.path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << args.path << ": internal consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  }
  return kSuccess;
}

struct SelfcheckArgs {
  std::uint64_t seed = 1;
  int count = 500;
  int max_crossings = 8;
  std::string fault;
};

struct Tally {
  int passed = 0;
  int failed = 0;
  std::string first_failure;
};

int run_selfcheck(const SelfcheckArgs& args, std::ostream& out) {
  ClassifyOptions options;
  if (args.fault == "spatial-sign") options.fault = FaultInjection::SpatialSignByLabels;

  std::vector<DiagramInput> inputs = load_builtin_corpus();
  const std::size_t corpus_size = inputs.size();
  std::mt19937_64 rng(args.seed);
  RandomDiagramOptions ropt;
  ropt.max_crossings = args.max_crossings;
  for (int i = 0; i < args.count; ++i) {
    auto g = random_diagram(rng, ropt);
    inputs.push_back(DiagramInput{"random-" + std::to_string(i), std::move(g.pd), g.outer_dart});
  }

  // Ordered by first appearance so output follows the check order.
  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  auto record = [&](const std::string& diagram, const InvariantCheck& c) {
    if (!tallies.count(c.name)) order.push_back(c.name);
    auto& t = tallies[c.name];
    if (c.ok) {
      ++t.passed;
    } else if (t.failed++ == 0) {
      t.first_failure = diagram + ": " + c.detail;
    }
  };

  for (const auto& in : inputs) {
    ClassifyOptions o = options;
    o.outer_dart = in.outer_dart;
    try {
      const Analysis a = build_analysis(in.pd, o, in.name);
      record(in.name, InvariantCheck{"pipeline runs without error", true, {}});
      for (const auto& c : structural_checks(a)) record(in.name, c);
      for (const auto& c : metamorphic_checks(in.pd, o)) record(in.name, c);
    } catch (const std::exception& e) {
      record(in.name + " " + to_text(in.pd), InvariantCheck{"pipeline runs without error", false, e.what()});
    }
  }

  bool ok = true;
  for (const auto& name : order) {
    const auto& t = tallies[name];
    if (t.failed == 0) {
      out << "PASS " << name << " (" << t.passed << " diagrams)\n";
    } else {
      ok = false;
      out << "FAIL " << name << " (" << t.failed << " of " << t.passed + t.failed
          << " diagrams; first: " << t.first_failure << ")\n";
    }
  }
  if (ok) {
    out << "all invariants hold (" << args.count << " random + corpus)\n";
    return kSuccess;
  }
  out << "invariant violated over " << args.count << " random + " << corpus_size
      << " corpus diagrams; reproduce with --seed " << args.seed << " --count " << args.count
      << " --max-crossings " << args.max_crossings << "\n";
  return kConsistencyError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide homogeneity and alternativity of oriented link diagrams.", "knot-alt"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify diagrams in files or directories");
  classify->add_option("paths", classify_args.paths, "PD text or JSON files, or directories")
      ->required();
  classify->add_option("--format", classify_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--outer-dart", classify_args.outer_dart,
                       "Take the region in this dart's corner as the outer region");
  classify->add_option("--check", classify_args.check, "Which properties to report")
      ->check(CLI::IsMember({"all", "alternative", "homogeneous"}));
  classify->add_option("--dot", classify_args.dot, "Attach a DOT export of this graph")
      ->check(kDotKindValidator);
  classify->add_option("--jobs", classify_args.jobs, "Worker threads (0: one per core)");
  classify->add_flag("--timings", classify_args.timings, "Report per-diagram run time");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Print one graph of a diagram");
  graph->add_option("path", graph_args.path, "PD text or JSON file")->required();
  graph->add_option("--kind", graph_args.kind, "spatial, seifert, labeled-seifert or g<i>")
      ->check(kDotKindValidator);
  graph->add_flag("--dot", graph_args.dot, "Emit Graphviz DOT instead of an edge list");
  graph->add_option("--outer-dart", graph_args.outer_dart,
                    "Take the region in this dart's corner as the outer region");

  SelfcheckArgs selfcheck_args;
  auto* selfcheck = app.add_subcommand("selfcheck", "Check invariants on random and built-in diagrams");
  selfcheck->add_option("--seed", selfcheck_args.seed, "Random seed")->envname("KNOT_ALT_SEED");
  selfcheck->add_option("--count", selfcheck_args.count, "Number of random diagrams")
      ->check(CLI::NonNegativeNumber);
  selfcheck->add_option("--max-crossings", selfcheck_args.max_crossings,
                        "Crossing bound for random diagrams")
      ->check(CLI::Range(1, 40));
  selfcheck->add_option("--inject-fault", selfcheck_args.fault)
      ->check(CLI::IsMember({"spatial-sign"}))
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  if (*classify) return run_classify(classify_args, out);
  if (*graph) return run_graph(graph_args, out, err);
  return run_selfcheck(selfcheck_args, out);
}

}  // namespace knotalt
