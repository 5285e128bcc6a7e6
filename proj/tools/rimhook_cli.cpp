// rimhook: command-line front end.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "rimhook/classical.hpp"
#include "rimhook/enumeration.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/io.hpp"
#include "rimhook/pakmap.hpp"
#include "rimhook/series.hpp"
#include "rimhook/verify.hpp"

using namespace rimhook;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "text";
  std::string shape;
  std::string hook;
  std::string corner;
  std::string candidate;
  std::string svg;
  std::string kind;
  std::string what;
  std::vector<std::string> shapes;
  int k = 0;
  int r = 1;
  int bound = 8;
  bool steps = false;
  VerifyConfig verify;
  std::uint64_t ceiling = kDefaultEnumCeiling;
  std::uint64_t seed = 0;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string read_input(const Options& o) {
  if (o.in.empty() || o.in == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(o.in);
  if (!f) throw DomainError("cannot open " + o.in);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

// Collects output; flushed to --out or stdout once the command succeeds.
struct Sink {
  std::ostringstream text;
  json doc = json::object();
};

Partition need_shape(const Options& o) {
  if (o.shape.empty()) throw CLI::ValidationError("--shape", "required for this subcommand");
  return parse_partition(o.shape);
}

std::string grid_text(const Filling& f) { return format_grid(f); }

std::string cells_text(const std::vector<Cell>& cells) {
  std::string s;
  for (const auto& u : cells) s += (s.empty() ? "" : " ") + to_string(u);
  return s;
}

json cells_json(const std::vector<Cell>& cells) {
  json a = json::array();
  for (const auto& u : cells) a.push_back(to_json(u));
  return a;
}

void cmd_info(const Options& o, Sink& s) {
  Partition lambda = need_shape(o);
  if (lambda.empty()) throw DomainError("the empty shape has no cells");
  Grid hooks, regions;
  std::vector<std::vector<std::string>> region_names;
  for (int i = 1; i <= lambda.length(); ++i) {
    hooks.emplace_back();
    region_names.emplace_back();
    for (int j = 1; j <= lambda.row_length(i); ++j) {
      hooks.back().push_back(hook_length(lambda, {i, j}));
      region_names.back().push_back(to_string(region(lambda, {i, j})));
    }
  }
  auto c = corners(lambda);
  auto revlex = lambda.cells(), content = lambda.cells();
  std::sort(revlex.begin(), revlex.end(), [](auto& a, auto& b) { return revlex_compare(a, b) < 0; });
  std::sort(content.begin(), content.end(), [](auto& a, auto& b) { return content_compare(a, b) < 0; });
  if (as_json(o)) {
    s.doc = {{"shape", lambda.parts()},   {"size", lambda.size()},
             {"conjugate", lambda.conjugate().parts()},
             {"hooks", hooks},            {"regions", region_names},
             {"inner_corners", cells_json(c.inner)}, {"outer_corners", cells_json(c.outer)},
             {"revlex_order", cells_json(revlex)},   {"content_order", cells_json(content)}};
    return;
  }
  s.text << "shape " << to_string(lambda) << ", size " << lambda.size() << ", conjugate "
         << to_string(lambda.conjugate()) << "\nhook lengths:\n";
  for (const auto& row : hooks) {
    for (auto h : row) s.text << ' ' << h;
    s.text << '\n';
  }
  s.text << "regions:\n";
  for (const auto& row : region_names) {
    for (const auto& n : row) s.text << ' ' << n;
    s.text << '\n';
  }
  s.text << "inner corners: " << cells_text(c.inner) << "\nouter corners: " << cells_text(c.outer)
         << "\nrevlex order: " << cells_text(revlex) << "\ncontent order: " << cells_text(content) << '\n';
}

void cmd_rimhooks(const Options& o, Sink& s) {
  Partition lambda = need_shape(o);
  auto hooks = rim_hooks(lambda);
  if (!o.svg.empty()) {
    RppBuilder b(lambda);
    for (const auto& u : lambda.cells()) b.at(u) = hook_length(lambda, u);
    std::optional<LatticePath> path;
    if (!o.hook.empty()) path = LatticePath{rim_hook(lambda, parse_cell(o.hook)).cells, Orientation::NorthEast};
    write_file(o.svg, render_svg(b.finish_unchecked(), path ? &*path : nullptr));
  }
  if (as_json(o)) {
    json a = json::array();
    for (const auto& h : hooks)
      a.push_back({{"anchor", to_json(h.anchor)}, {"length", h.length()}, {"cells", cells_json(h.cells)}});
    s.doc = {{"shape", lambda.parts()}, {"rimhooks", a}};
    return;
  }
  for (const auto& h : hooks) s.text << "h^" << to_string(h.anchor) << " [" << h.length() << "]: " << cells_text(h.cells) << '\n';
}

void cmd_validate(const Options& o, Sink& s) {
  std::string text = read_input(o);
  if (o.kind == "tableau") {
    Tableau t = parse_tableau(text);
    if (as_json(o)) s.doc = {{"valid", true}, {"kind", "tableau"}, {"shape", t.shape().parts()}, {"weighted_size", t.weighted_size()}};
    else s.text << "valid tableau of shape " << to_string(t.shape()) << ", weighted size " << t.weighted_size() << '\n';
    return;
  }
  Rpp pi = parse_rpp(text);
  if (as_json(o)) s.doc = {{"valid", true}, {"kind", "rpp"}, {"shape", pi.shape().parts()}, {"size", pi.size()}};
  else s.text << "valid reverse plane partition of shape " << to_string(pi.shape()) << ", size " << pi.size() << '\n';
}

void cmd_trace(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  json traces = json::object();
  for (int k = pi.shape().min_content(); k <= pi.shape().max_content(); ++k) {
    traces[std::to_string(k)] = trace(pi, k);
    s.text << "tr_" << k << " = " << trace(pi, k) << '\n';
  }
  s.doc = {{"traces", traces}};
}

void cmd_candidates(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  auto c = candidates(pi);
  s.doc = {{"candidates", cells_json(c)}};
  for (const auto& u : c) s.text << to_string(u) << '\n';
}

void cmd_insert(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  if (o.hook.empty()) throw CLI::ValidationError("--hook", "required");
  RimHook h = rim_hook(pi.shape(), parse_cell(o.hook));
  auto out = try_insert(h, pi);
  if (!out.ok()) {
    const auto& f = out.failure();
    std::string msg = "h^" + to_string(h.anchor) + " does not insert: " + f.reason;
    if (f.witness) msg += "; candidate " + to_string(*f.witness) + " precedes the head of the insertion path";
    throw DomainError(msg);
  }
  s.doc = to_json(out.result());
  s.doc["path"] = to_json(out.path());
  s.text << grid_text(out.result()) << "path: " << to_string(out.path()) << '\n';
}

void cmd_factorize(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  auto res = factorize(pi, o.steps);
  s.doc = {{"tableau", to_json(res.tableau)}, {"factorization", to_json(res.factorization)}};
  s.text << "tableau:\n" << grid_text(res.tableau) << "anchors:\n" << format_factorization(res.factorization);
  if (o.steps) {
    json steps = json::array();
    s.text << "steps:\n";
    for (const auto& e : res.steps) {
      steps.push_back({{"candidate", to_json(e.candidate)},
                       {"hook", to_json(e.hook.anchor)},
                       {"path", to_json(e.path)},
                       {"remainder", to_json(e.remainder)}});
      s.text << "  candidate " << to_string(e.candidate) << " -> h^" << to_string(e.hook.anchor) << " along "
             << to_string(e.path) << '\n';
    }
    s.doc["steps"] = steps;
  }
}

void emit_filling(const Filling& f, Sink& s) {
  s.doc = to_json(f);
  s.text << grid_text(f);
}

void cmd_build(const Options& o, Sink& s) {
  std::string text = read_input(o);
  // an anchor list needs --shape; otherwise the input is a tableau grid
  if (!o.shape.empty() && text.find('(') != std::string::npos) {
    Factorization f = parse_factorization(parse_partition(o.shape), text);
    RppBuilder b(f.shape);
    for (const auto& u : f.anchors) b.at(u) += 1;
    emit_filling(build(Tableau::validate(f.shape, b.finish_unchecked().rows())), s);
    return;
  }
  if (!o.shape.empty() && text.find_first_not_of(" \t\r\n") == std::string::npos) {
    emit_filling(build(Tableau::zero(parse_partition(o.shape))), s);
    return;
  }
  emit_filling(build(parse_tableau(text)), s);
}

void cmd_xi(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  emit_filling(o.corner.empty() ? xi(pi) : xi_through(pi, parse_cell(o.corner)), s);
}

void cmd_zeta(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  if (o.corner.empty()) throw CLI::ValidationError("--corner", "required");
  emit_filling(zeta(pi, parse_cell(o.corner)), s);
}

void cmd_hg(const Options& o, Sink& s) { emit_filling(hg(parse_rpp(read_input(o))), s); }
void cmd_hg_inv(const Options& o, Sink& s) { emit_filling(hg_inv(parse_tableau(read_input(o))), s); }

void cmd_rsk(const Options& o, Sink& s) {
  auto pair = rsk(parse_tableau(read_input(o)));
  s.doc = to_json(pair);
  s.text << "P:\n" << grid_text(pair.p) << "Q:\n" << grid_text(pair.q);
}

void cmd_rsk_inv(const Options& o, Sink& s) {
  std::string text = read_input(o);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("rsk-inv expects {\"P\":...,\"Q\":...}: ") + e.what());
  }
  if (!j.is_object() || !j.contains("P") || !j.contains("Q")) throw DomainError("rsk-inv expects keys \"P\" and \"Q\"");
  auto grid = [](const json& g) { return rpp_from_json(g.is_array() ? json{{"rows", g}} : g); };
  SsytPair pair{grid(j["P"]), grid(j["Q"])};
  emit_filling(o.shape.empty() ? rsk_inv(pair) : rsk_inv(pair, parse_partition(o.shape)), s);
}

void cmd_diag(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  Partition mu = diag_partition(pi, o.k);
  s.doc = {{"k", o.k}, {"partition", mu.parts()}};
  s.text << to_string(mu) << '\n';
}

void cmd_gk(const Options& o, Sink& s) {
  Tableau t = parse_tableau(read_input(o));
  ChainKind kind;
  if (o.kind == "weak") kind = ChainKind::WeakSouthEast;
  else if (o.kind == "strict") kind = ChainKind::StrictNorthEast;
  else throw CLI::ValidationError("--kind", "must be weak or strict");
  Entry best = gk_chain_max(t, o.k, o.r, kind);
  s.doc = {{"k", o.k}, {"r", o.r}, {"kind", o.kind}, {"max", best}};
  s.text << best << '\n';
}

void cmd_render(const Options& o, Sink& s) {
  Rpp pi = parse_rpp(read_input(o));
  std::optional<LatticePath> path;
  if (!o.hook.empty()) path = insertion_path(rim_hook(pi.shape(), parse_cell(o.hook)), pi);
  if (!o.candidate.empty()) path = extraction_path(parse_cell(o.candidate), pi);
  if (!o.svg.empty()) write_file(o.svg, render_svg(pi, path ? &*path : nullptr));
  std::string ascii = render_ascii(pi, path ? &*path : nullptr);
  s.doc = {{"rpp", to_json(pi)}, {"ascii", ascii}};
  if (path) s.doc["path"] = to_json(*path);
  s.text << ascii;
}

void cmd_enumerate(const Options& o, Sink& s) {
  Partition lambda = need_shape(o);
  // NDJSON regardless of --format
  if (o.what == "rpps") {
    RppStream st(lambda, o.bound, o.ceiling);
    while (auto pi = st.next()) s.text << to_json(*pi).dump() << '\n';
  } else {
    TableauStream st(lambda, o.bound, o.ceiling);
    while (auto t = st.next()) s.text << to_json(*t).dump() << '\n';
  }
}

int cmd_verify(const Options& o, Sink& s) {
  VerifyConfig cfg = o.verify;
  if (!o.shapes.empty()) {
    cfg.shapes.clear();
    for (const auto& sh : o.shapes) {
      Partition p = parse_partition(sh);
      if (p.empty()) throw DomainError("verification shapes must be nonempty");
      cfg.shapes.push_back(p);
    }
  }
  std::vector<std::string> names = o.what == "all" ? suite_names() : std::vector<std::string>{o.what};
  bool all_ok = true;
  json reports = json::array();
  for (const auto& n : names) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r = run_suite(n, cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_ok = all_ok && r.passed;
    reports.push_back({{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures},
                       {"summary", r.summary}, {"seconds", secs}});
    s.text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << std::fixed
           << std::setprecision(2) << secs << "s)";
    if (!r.summary.empty()) s.text << ": " << r.summary;
    s.text << '\n';
    for (const auto& f : r.failures) s.text << "  " << f << '\n';
  }
  s.doc = {{"passed", all_ok}, {"seed", o.seed}, {"suites", reports}};
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rim-hook insertion, Hillman-Grassl and RSK on reverse plane partitions"};
  app.require_subcommand(1);
  Options o;

  auto io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input file (default stdin)");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };
  auto shape = [&](CLI::App* sub) { sub->add_option("--shape", o.shape, "partition, e.g. 4,3,1"); };

  using Cmd = std::function<void(const Options&, Sink&)>;
  std::map<CLI::App*, Cmd> cmds;
  auto add = [&](const std::string& name, const std::string& help, Cmd fn) {
    auto* sub = io(app.add_subcommand(name, help));
    cmds[sub] = std::move(fn);
    return sub;
  };

  shape(add("info", "hook lengths, corners, regions and both cell orders", cmd_info));
  auto* rh = add("rimhooks", "rim-hooks in increasing order", cmd_rimhooks);
  shape(rh);
  rh->add_option("--svg", o.svg, "write an SVG of the hook lengths");
  rh->add_option("--hook", o.hook, "highlight h^(i,j) in the SVG");
  add("validate", "check a reverse plane partition or tableau", cmd_validate)
      ->add_option("--kind", o.kind, "rpp or tableau")
      ->check(CLI::IsMember({"rpp", "tableau"}));
  add("trace", "diagonal sums", cmd_trace);
  add("candidates", "candidate cells in content order", cmd_candidates);
  add("insert", "insert a rim-hook", cmd_insert)->add_option("--hook", o.hook, "anchor (i,j)")->required();
  add("factorize", "lexicographic factorisation into rim-hooks", cmd_factorize)
      ->add_flag("--steps", o.steps, "include each extraction step");
  shape(add("build", "reverse plane partition of a tableau or anchor list", cmd_build));
  add("xi", "corner-peeling map xi", cmd_xi)->add_option("--corner", o.corner, "first corner to peel");
  add("zeta", "one toggle step at an outer corner", cmd_zeta)->add_option("--corner", o.corner, "(i,j)")->required();
  add("hg", "Hillman-Grassl", cmd_hg);
  add("hg-inv", "inverse Hillman-Grassl", cmd_hg_inv);
  add("rsk", "RSK of a tableau read as a matrix", cmd_rsk);
  shape(add("rsk-inv", "inverse RSK; input {\"P\":...,\"Q\":...}", cmd_rsk_inv));
  add("diag", "partition formed by the k-th diagonal", cmd_diag)->add_option("--k", o.k, "content")->required();
  auto* gk = add("gk", "maximal total multiplicity of r chains in R_k", cmd_gk);
  gk->add_option("--k", o.k, "content")->required();
  gk->add_option("--r", o.r, "number of chains")->required()->check(CLI::PositiveNumber);
  gk->add_option("--kind", o.kind, "weak or strict")->required()->check(CLI::IsMember({"weak", "strict"}));
  auto* render = add("render", "ASCII grid with diagonals, optional SVG", cmd_render);
  render->add_option("--svg", o.svg, "write an SVG");
  render->add_option("--hook", o.hook, "highlight the insertion path of h^(i,j)");
  render->add_option("--candidate", o.candidate, "highlight the extraction path from a candidate");

  auto* en = add("enumerate", "stream reverse plane partitions or tableaux as NDJSON", cmd_enumerate);
  shape(en);
  en->add_option("what", o.what, "rpps or tableaux")->required()->check(CLI::IsMember({"rpps", "tableaux"}));
  en->add_option("--bound", o.bound, "size (rpps) or weighted size (tableaux) bound")->check(CLI::NonNegativeNumber);
  en->add_option("--ceiling", o.ceiling, "refuse enumerations larger than this");

  int verify_status = 0;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* ver = add("verify", "run a property suite", [&](const Options& opt, Sink& s) { verify_status = cmd_verify(opt, s); });
  ver->add_option("suite", o.what, "suite name")->required()->check(CLI::IsMember(suites));
  ver->add_option("--shape", o.shapes, "shape(s) for the series, bijection and HG suites")->delimiter(';');
  ver->add_option("--degree", o.verify.series_degree, "truncation degree of the size series");
  ver->add_option("--trace-degree", o.verify.trace_degree, "trace series total degree");
  ver->add_option("--bound", o.verify.bijection_bound, "size bound for bijection suites");
  ver->add_option("--lemma-cells", o.verify.lemma_cells, "largest shape size for lemma suites");
  ver->add_option("--lemma-bound", o.verify.lemma_bound, "size bound for lemma suites");
  ver->add_option("--gk-count", o.verify.gk_count, "entry-sum bound for chain suites");
  ver->add_option("--syt-n", o.verify.syt_max_n, "largest square for the SYT suite");
  ver->add_option("--perm-n", o.verify.perm_max_n, "largest n for permutation suites");
  ver->add_option("--jobs", o.verify.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--seed", o.seed, "recorded in the report; suites are exhaustive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Sink sink;
  try {
    cmds.at(chosen)(o, sink);
  } catch (const CLI::ParseError& e) {
    std::cerr << chosen->get_name() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    bool domain = dynamic_cast<const DomainError*>(&e) || dynamic_cast<const EnumBudgetExceeded*>(&e) ||
                  dynamic_cast<const BudgetExceeded*>(&e);
    if (as_json(o)) {
      std::cout << json{{"error", domain ? "domain" : "internal"}, {"command", chosen->get_name()}, {"message", e.what()}}.dump()
                << '\n';
    } else {
      std::cerr << chosen->get_name() << ": " << e.what() << '\n';
    }
    return domain ? 1 : 3;
  }

  std::string output = (as_json(o) && chosen->get_name() != "enumerate") ? sink.doc.dump(2) + "\n" : sink.text.str();
  if (o.out.empty()) std::cout << output;
  else write_file(o.out, output);
  return verify_status;
}
