// hexoct: command-line driver for the enumeration, classification,
// projection and G-graph computations.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hexoct/claims.hpp"
#include "hexoct/error.hpp"
#include "hexoct/io.hpp"
#include "hexoct/parallel.hpp"

namespace fs = std::filesystem;
using namespace hexoct;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string subgroup;
  std::string cache_dir;
  std::string output;
  std::string format;
  int jobs = 0;
  bool with_float = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> rep;
  bool check_spectrum = false;
  bool check_components = false;
};

void log(const std::string& msg) { std::cerr << "hexoct: " << msg << '\n'; }

void emit(const Options& o, const std::string& content) {
  if (o.output.empty() || o.output == "-") {
    std::cout << content;
    return;
  }
  write_file(o.output, content);
  log("wrote " + o.output);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

SubgroupName require_subgroup(const Options& o) {
  if (o.subgroup.empty()) throw UsageError("--subgroup is required");
  auto n = parse_subgroup_name(o.subgroup);
  if (!n) throw UsageError("unknown subgroup '" + o.subgroup + "' (expected T, D10, D6, C5, D4, C3, C2 or trivial)");
  return *n;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("--format " + o.format + " is not supported here (use " + list + ")");
}

// Cached state shared by the subcommands.
class Session {
 public:
  explicit Session(const Options& o) : opts_(o), cache_{o.cache_dir} {}

  const GroupSet& b6() {
    if (!b6_) b6_ = enumerate_b6();
    return *b6_;
  }
  const GroupSet& b6_plus() {
    if (!b6_plus_) b6_plus_ = enumerate_b6_plus();
    return *b6_plus_;
  }

  // Pair search, written to enumerate.json. With `force` the cache is ignored.
  void enumerate(bool force) {
    if (!force && fs::exists(cache_.enumerate())) {
      const std::string text = read_file(cache_.enumerate());
      reps_ = reps_from_json(Json::parse(text));
      enumerate_sha_ = sha256_hex(text);
      return;
    }
    log("searching B6 for A5 subgroups");
    reps_ = find_all_icosahedral_subgroups(b6(), {opts_.jobs, std::nullopt});
    const std::string text = dump(enumerate_to_json(b6().size(), b6_plus().size(), *reps_));
    write_file(cache_.enumerate(), text);
    enumerate_sha_ = sha256_hex(text);
    log("wrote " + cache_.enumerate().string());
  }

  // catalog.json. A catalog built from another enumeration is rebuilt when
  // `rebuild_stale`, otherwise rejected.
  void classify(bool force, bool rebuild_stale) {
    if (!reps_) enumerate(false);
    if (!force && fs::exists(cache_.catalog())) {
      const std::string text = read_file(cache_.catalog());
      try {
        catalog_ = catalog_from_json(Json::parse(text), enumerate_sha_);
        catalog_sha_ = sha256_hex(text);
        return;
      } catch (const StaleCache&) {
        if (!rebuild_stale) throw;
        log("catalog.json does not match enumerate.json; rebuilding");
      }
    }
    log("classifying " + std::to_string(reps_->size()) + " A5 subgroups");
    catalog_ = hexoct::classify(*reps_, b6(), b6_plus(), opts_.jobs);
    const std::string text = dump(catalog_to_json(*catalog_, enumerate_sha_));
    write_file(cache_.catalog(), text);
    write_file(cache_.dir / "cryst-class.json", dump(subgroup_class_to_json(catalog_->cryst_class)));
    catalog_sha_ = sha256_hex(text);
    log("wrote " + cache_.catalog().string());
  }

  const RepCatalog& catalog() {
    if (!catalog_) classify(false, false);
    return *catalog_;
  }
  const std::vector<IcosaRep>& reps() {
    if (!reps_) enumerate(false);
    return *reps_;
  }

  // A G-graph, reusing the cached adjacency when it was built from this catalog.
  GGraph graph(SubgroupName n) {
    const auto& cat = catalog();
    const auto path = cache_.ggraph(subgroup_name(n));
    if (fs::exists(path)) {
      if (auto adj = cached_adjacency(Json::parse(read_file(path)), catalog_sha_))
        return GGraph{n, facts(n).order, std::move(*adj)};
    }
    return build_ggraph(cat.cryst_class.members, n, opts_.jobs);
  }

  void store_graph(const GGraph& g, const SpectrumReport& s) {
    write_file(cache_.ggraph(subgroup_name(g.subgroup)), dump(ggraph_to_json(g, s, catalog_sha_)));
  }

  Workspace workspace() {
    Workspace ws;
    ws.jobs = opts_.jobs;
    ws.b6 = b6();
    ws.b6_plus = b6_plus();
    ws.a5 = reps();
    ws.catalog = catalog();
    log("building subgroup catalog and G-graphs");
    complete_workspace(ws);
    for (auto n : kAllSubgroups) store_graph(ws.graphs.at(n), ws.spectra.at(n));
    return ws;
  }

  const std::string& catalog_sha() const { return catalog_sha_; }

 private:
  const Options& opts_;
  CacheLayout cache_;
  std::optional<GroupSet> b6_, b6_plus_;
  std::optional<std::vector<IcosaRep>> reps_;
  std::optional<RepCatalog> catalog_;
  std::string enumerate_sha_, catalog_sha_;
};

std::string render_claims(const std::vector<Claim>& claims, const std::string& format) {
  if (format == "json") return dump(render_json(claims));
  if (format == "csv") {
    std::string out = "id,status,expected,observed\n";
    for (const auto& c : claims)
      out += csv_field(c.id) + "," + claim_status_name(c.status) + "," + csv_field(c.expected) + "," +
             csv_field(c.observed) + "\n";
    return out;
  }
  return render_markdown(claims);
}

void print_claim_lines(const std::vector<Claim>& claims, std::ostream& os) {
  for (const auto& c : claims) os << claim_status_name(c.status) << "  " << c.id << "  " << c.observed << '\n';
}

int cmd_enumerate(const Options& o) {
  require_format(o, {"json", "md"});
  Session s(o);
  s.enumerate(true);
  const auto& reps = s.reps();
  if (o.format == "json") {
    emit(o, dump(enumerate_to_json(s.b6().size(), s.b6_plus().size(), reps)));
  } else {
    std::ostringstream md;
    md << "| quantity | value |\n|---|---|\n";
    md << "| B6 order | " << s.b6().size() << " |\n| B6+ order | " << s.b6_plus().size() << " |\n";
    md << "| A5 subgroups | " << reps.size() << " |\n";
    emit(o, md.str());
  }
  return kExitOk;
}

int cmd_classify(const Options& o) {
  require_format(o, {"json", "md", "csv"});
  Session s(o);
  s.classify(false, true);
  const auto& cat = s.catalog();
  if (o.format == "json") {
    Json classes = Json::array();
    for (const auto& c : cat.classes)
      classes.push_back({{"type", iso_type_name(c.iso_type)},
                         {"size", c.size},
                         {"chi_C2", c.representative.character[IcoClass::C2]},
                         {"chi_C3", c.representative.character[IcoClass::C3]}});
    emit(o, dump({{"a5_subgroups", cat.total_a5_subgroups},
                  {"classes", classes},
                  {"b6plus_split", {cat.b6plus_split[0].size(), cat.b6plus_split[1].size()}}}));
  } else {
    std::ostringstream t;
    const bool md = o.format == "md";
    t << (md ? "| type | chi(C2) | chi(C3) | size |\n|---|---|---|---|\n" : "type,chi_C2,chi_C3,size\n");
    for (const auto& c : cat.classes) {
      const int c2 = c.representative.character[IcoClass::C2], c3 = c.representative.character[IcoClass::C3];
      if (md)
        t << "| " << iso_type_name(c.iso_type) << " | " << c2 << " | " << c3 << " | " << c.size << " |\n";
      else
        t << iso_type_name(c.iso_type) << ',' << c2 << ',' << c3 << ',' << c.size << '\n';
    }
    if (md) t << "\nB6+ split of the crystallographic class: " << cat.b6plus_split[0].size() << " + "
              << cat.b6plus_split[1].size() << "\n";
    emit(o, t.str());
  }
  return kExitOk;
}

int cmd_project(const Options& o) {
  require_format(o, {"json", "csv", "md"});
  IcosaRep rep = build_ihat();
  if (o.rep) {
    Session s(o);
    const auto& cat = s.catalog();
    if (*o.rep >= cat.cryst_reps.size())
      throw UsageError("--rep must be below " + std::to_string(cat.cryst_reps.size()));
    rep = cat.cryst_reps[*o.rep];
  }
  const ProjectionBundle b = compute_projection(rep);
  if (o.format == "json") {
    emit(o, dump(projection_to_json(b, o.with_float)));
  } else if (o.format == "csv") {
    emit(o, orbit_csv(b.orbit));
  } else {
    std::ostringstream md;
    auto block = [&](const char* name, const QfMat& m) {
      md << "### " << name << "\n\n";
      for (std::size_t i = 0; i < m.rows(); ++i) {
        md << "|";
        for (std::size_t k = 0; k < m.cols(); ++k) md << ' ' << m(i, k).to_string() << " |";
        md << '\n';
        if (i == 0) {
          md << '|';
          for (std::size_t k = 0; k < m.cols(); ++k) md << "---|";
          md << '\n';
        }
      }
      md << '\n';
    };
    block("P1", b.p1);
    block("P2", b.p2);
    block("R", b.r);
    block("pi_parallel", b.pi_par);
    block("T1(g2)", b.irreps.t1[0]);
    block("T1(g3)", b.irreps.t1[1]);
    block("T2(g2)", b.irreps.t2[0]);
    block("T2(g3)", b.irreps.t2[1]);
    emit(o, md.str());
  }
  return kExitOk;
}

int cmd_graph(const Options& o) {
  require_format(o, {"json", "csv", "md"});
  const SubgroupName n = require_subgroup(o);
  Session s(o);
  const GGraph g = s.graph(n);
  const SpectrumReport rep = spectrum(g, o.jobs);
  s.store_graph(g, rep);

  std::vector<Claim> checks;
  if (o.check_spectrum)
    for (auto& c : spectrum_claims(g, rep)) checks.push_back(std::move(c));
  if (o.check_components)
    for (auto& c : component_claims(g, rep)) checks.push_back(std::move(c));
  print_claim_lines(checks, std::cerr);

  if (o.format == "json") {
    emit(o, dump(ggraph_to_json(g, rep, s.catalog_sha())));
  } else if (o.format == "csv") {
    std::ostringstream csv;
    for (const auto& row : g.adjacency) {
      for (std::size_t j = 0; j < row.size(); ++j) csv << (j ? "," : "") << row[j];
      csv << '\n';
    }
    emit(o, csv.str());
  } else {
    std::ostringstream md;
    md << "| subgroup | degree | spectrum | components | triangle-free |\n|---|---|---|---|---|\n";
    md << "| " << subgroup_name(n) << " | " << rep.degree << " | " << format_spectrum(rep.eigenvalues) << " | "
       << rep.components.size() << " | " << (rep.triangle_free ? "yes" : "no") << " |\n";
    emit(o, md.str());
  }
  return all_pass(checks) ? kExitOk : kExitFail;
}

int run_claims(const Options& o, bool fresh) {
  require_format(o, {"md", "json", "csv"});
  Session s(o);
  if (fresh) {
    s.enumerate(true);
    s.classify(true, true);
  }
  const Workspace ws = s.workspace();
  log("checking claims");
  const auto claims = all_claims(ws, o.seed);
  Options out = o;
  if (fresh && out.output.empty()) out.output = (fs::path(o.cache_dir) / ("report." + o.format)).string();
  emit(out, render_claims(claims, o.format));
  if (fresh) print_claim_lines(claims, std::cout);
  const bool ok = all_pass(claims);
  log(ok ? "all claims pass" : "some claims FAIL");
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystallographic icosahedral representations in six dimensions"};
  app.require_subcommand(1);
  Options o;
  const char* env_cache = std::getenv("HEXOCT_CACHE_DIR");
  o.cache_dir = env_cache && *env_cache ? env_cache : ".hexoct-cache";
  o.jobs = default_jobs();

  auto common = [&](CLI::App* sub, const char* default_format) {
    sub->preparse_callback([&o, f = std::string(default_format)](std::size_t) { o.format = f; });
    sub->add_option("--cache-dir", o.cache_dir, "cache directory (env HEXOCT_CACHE_DIR)");
    sub->add_option("--output,-o", o.output, "output file ('-' or empty for stdout)");
    sub->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for a shuffled re-run of the pair search");
    sub->add_flag("--float", o.with_float, "add rounded floating-point views of exact matrices");
    sub->add_option("--subgroup", o.subgroup, "T, D10, D6, C5, D4, C3, C2 or trivial");
  };

  auto* enumerate = app.add_subcommand("enumerate", "find every A5 subgroup of B6 and cache the result");
  auto* classify = app.add_subcommand("classify", "classify the A5 subgroups into conjugacy classes");
  auto* project = app.add_subcommand("project", "projection operators and reduced irreps of one representation");
  auto* graph = app.add_subcommand("graph", "build a G-graph and its exact spectrum");
  auto* report = app.add_subcommand("report", "check every claim, reusing cached artifacts");
  auto* verify = app.add_subcommand("verify-all", "recompute everything and check every claim");

  // Format defaults differ per subcommand and are applied before its options parse.
  common(enumerate, "json");
  common(classify, "md");
  common(project, "json");
  common(graph, "json");
  common(report, "md");
  common(verify, "md");
  project->add_option("--rep", o.rep, "index into the crystallographic class (default: the reference)");
  graph->add_flag("--check-spectrum", o.check_spectrum, "compare the spectrum with the published one");
  graph->add_flag("--check-components", o.check_components, "compare the components with the published ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*classify) return cmd_classify(o);
    if (*project) return cmd_project(o);
    if (*graph) return cmd_graph(o);
    if (*report) return run_claims(o, false);
    if (*verify) return run_claims(o, true);
  } catch (const UsageError& e) {
    std::cerr << "hexoct: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "hexoct: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "hexoct: error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
