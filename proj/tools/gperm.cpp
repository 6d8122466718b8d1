// Command-line front end: compute, verify, census, flows.
//
// Exit codes: 0 success / identity holds, 1 unreadable input, 2 precondition
// or usage error, 3 internal error or a failed identity, 4 provably none,
// 5 search bound exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gperm/census.hpp"
#include "gperm/error.hpp"
#include "gperm/flows.hpp"
#include "gperm/graphs.hpp"
#include "gperm/identities.hpp"
#include "gperm/invariant.hpp"

namespace {

using namespace gperm;

enum Exit { kOk = 0, kIo = 1, kPrecondition = 2, kInternal = 3, kAbsent = 4, kInconclusive = 5 };

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Multigraph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  const GraphFormat f = format == "auto" ? detect_format(text) : parse_format(format);
  return parse_graph(text, f);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("bad integer list '" + text + "'");
    }
  }
  return out;
}

std::string raw_text(const IdentityValue& v) {
  return v.raw ? to_string(*v.raw) : std::string("?");
}

void print_report(const IdentityReport& r, bool json) {
  if (json) {
    std::cout << report_to_json(r) << "\n";
    return;
  }
  std::cout << r.identity << ": " << (r.holds ? "PASS" : "FAIL") << "\n";
  for (const auto* side : {&r.left, &r.right}) {
    const char* name = side == &r.left ? "left " : "right";
    for (const auto& v : *side) {
      std::cout << "  " << name << "  " << v.label << ": perm " << raw_text(v) << ", mod "
                << v.modulus << " = " << v.raw_residue << ", gp " << v.canonical << "\n";
    }
  }
  for (const auto& n : r.notes) std::cout << "  note   " << n << "\n";
}

struct Options {
  std::string path;
  std::string format = "auto";
  bool json = false;
};

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.path, "graph file, or - for stdin")->required();
  cmd->add_option("--format", o.format, "edgelist, graph6 or auto")
      ->check(CLI::IsMember({"auto", "edgelist", "el", "graph6", "g6"}));
}

int run_compute(const Options& o, int special) {
  const Multigraph g = load_graph(o.path, o.format);
  const int k = detect_k(g);
  if (special < 0 || special >= g.vertex_count()) {
    throw PreconditionError("special vertex out of range");
  }
  const GraphPermanent gp = graph_permanent(g, Orientation::natural(g), special);
  if (o.json) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["k"] = k;
    j["modulus"] = gp.modulus;
    j["gp"] = gp.canonical_residue;
    j["raw_residue"] = gp.raw_residue;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k=" << gp.k << " modulus=" << gp.modulus << " gp=" << gp.canonical_residue
              << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string identity;
  std::string rotation;
  std::string cut;
  std::string side;
  std::string edges;
  std::string pairs = "all";
  int hollow = -1;
  int square = -1;
};

int run_verify(const Options& o, const VerifyArgs& a) {
  const Multigraph g = load_graph(o.path, o.format);
  IdentityReport r;
  const std::string& id = a.identity;
  if (id == "special-vertex") {
    r = check_special_vertex(g);
  } else if (id == "decompletion") {
    r = check_decompletion(g);
  } else if (id == "tag-oracle") {
    r = check_tag_oracle(g);
  } else if (id == "orientation-identity") {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (a.pairs != "all") {
      std::stringstream ss(a.pairs);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw PreconditionError("pairs look like s:t,s:t");
        const auto st = parse_int_list(item.substr(0, colon) + "," + item.substr(colon + 1));
        pairs.emplace_back(st[0], st[1]);
      }
    }
    r = check_orientation_identity(g, pairs);
  } else if (id == "dual") {
    if (a.rotation.empty()) throw PreconditionError("dual needs --rotation");
    r = check_dual(g, parse_rotation(read_input(a.rotation), g));
  } else if (id == "twist") {
    const auto c = parse_int_list(a.cut);
    if (c.size() != 4) throw PreconditionError("twist needs --cut v1,v2,v3,v4");
    r = check_twist(g, TwistPairing{c[0], c[1], c[2], c[3]}, parse_int_list(a.side));
  } else if (id == "two-cut") {
    const auto c = parse_int_list(a.cut);
    if (c.size() != 2) throw PreconditionError("two-cut needs --cut v1,v2");
    const auto left = a.side.empty() ? std::vector<int>{} : parse_int_list(a.side);
    r = check_two_vertex_cut(g, c[0], c[1], left);
  } else if (id == "three-cut") {
    const auto c = parse_int_list(a.cut);
    if (c.size() != 3) throw PreconditionError("three-cut needs --cut a,b,c");
    r = check_three_vertex_cut(g, c);
  } else if (id == "four-edge-cut") {
    const auto e = parse_int_list(a.edges);
    std::optional<Vertex> h, q;
    if (a.hollow >= 0) h = a.hollow;
    if (a.square >= 0) q = a.square;
    r = check_four_edge_cut(g, e, h, q);
  } else {
    throw PreconditionError("unknown identity '" + id + "'");
  }
  print_report(r, o.json);
  return r.holds ? kOk : kInternal;
}

struct CensusArgs {
  int order = 0;
  std::string input;
  std::string fixture;
  std::string filter = "irreducible";
  int jobs = 0;
};

int run_census(const CensusArgs& a) {
  const std::string fixture = a.fixture.empty() ? default_fixture_path() : a.fixture;
  ExpectedTable table;
  try {
    table = load_expected_table(fixture);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw IoError(e.what());
  }
  const CensusFilter filter = parse_census_filter(a.filter);
  CensusReport report;
  if (!a.input.empty()) {
    report = census_report(parse_graph6_lines(read_input(a.input)), &table, a.jobs, filter);
  } else {
    report = census_order(a.order, &table, a.jobs, filter);
  }
  std::cout << census_tsv(report);
  for (const auto& s : report.summaries) std::cout << summary_line(s) << "\n";
  return report.pass ? kOk : kInternal;
}

int run_orient(const Options& o, int k) {
  const Multigraph g = load_graph(o.path, o.format);
  const auto found = find_modulo_orientation(g, k);
  if (!found) {
    std::cout << "no modulo-" << k << " orientation\n";
    return kAbsent;
  }
  nlohmann::json j;
  j["k"] = k;
  std::vector<int> dirs;
  std::vector<std::vector<int>> arcs;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    dirs.push_back(found->forward(e) ? 1 : 0);
    arcs.push_back({found->tail(g, e), found->head(g, e)});
  }
  j["orientation"] = dirs;
  j["arcs"] = arcs;
  std::cout << j.dump(o.json ? 2 : -1) << "\n";
  return kOk;
}

int run_certify(const Options& o, int p) {
  const Multigraph g = load_graph(o.path, o.format);
  const CertificateSearch search = alon_tarsi_certificate(g, p);
  if (!search.certificate) {
    std::cout << "no certificate: all " << search.connected_subsets
              << " connected spanning subgraphs with " << (p - 1) * (g.vertex_count() - 1)
              << " edges have permanent 0 mod " << p << "\n";
    return kAbsent;
  }
  std::cout << certificate_to_json(*search.certificate, o.json ? 2 : -1) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gperm: graph permanents and the identities they satisfy"};
  app.require_subcommand(1);

  Options opts;
  int special = 0;
  auto* compute = app.add_subcommand("compute", "graph permanent of one graph");
  add_input(compute, opts);
  compute->add_flag("--json", opts.json, "JSON output");
  compute->add_option("--special", special, "special vertex (default 0)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check one identity on a graph");
  verify->add_option("identity", va.identity, "identity to check")
      ->required()
      ->check(CLI::IsMember({"special-vertex", "decompletion", "dual", "twist", "two-cut",
                             "three-cut", "four-edge-cut", "orientation-identity",
                             "tag-oracle"}));
  add_input(verify, opts);
  verify->add_flag("--json", opts.json, "JSON report");
  verify->add_option("--rotation", va.rotation, "rotation system file (dual)");
  verify->add_option("--cut", va.cut, "cut vertices, comma separated");
  verify->add_option("--side", va.side, "side vertices, comma separated (twist, two-cut)");
  verify->add_option("--edges", va.edges, "cut edge indices (four-edge-cut)");
  verify->add_option("--hollow", va.hollow, "deleted vertex on the left (four-edge-cut)");
  verify->add_option("--square", va.square, "special vertex on the right (four-edge-cut)");
  verify->add_option("--pairs", va.pairs, "all, or s:t,s:t,... (orientation-identity)");

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "graph permanents of small 4-regular graphs");
  auto* order = census->add_option("--order", ca.order, "vertex count, 5 to 10");
  auto* input = census->add_option("--input", ca.input, "graph6 file, one graph per line");
  order->excludes(input);
  census->add_option("--fixture", ca.fixture, "expected table (default $GPERM_FIXTURES)");
  census->add_option("--jobs", ca.jobs, "worker threads (default: all cores)")
      ->check(CLI::NonNegativeNumber);
  census->add_option("--filter", ca.filter, "irreducible (default) or primitive")
      ->check(CLI::IsMember({"irreducible", "primitive"}));

  auto* flows = app.add_subcommand("flows", "modulo-k orientations and their certificates");
  flows->require_subcommand(1);
  int k = 3;
  auto* orient = flows->add_subcommand("orient", "search for a modulo-k orientation");
  add_input(orient, opts);
  orient->add_option("--k", k, "modulus")->check(CLI::PositiveNumber);
  orient->add_flag("--json", opts.json, "pretty JSON");
  int prime = 3;
  auto* certify = flows->add_subcommand("certify", "search for a permanent certificate");
  add_input(certify, opts);
  certify->add_option("--prime", prime, "odd prime p");
  certify->add_flag("--json", opts.json, "pretty JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    if (*compute) return run_compute(opts, special);
    if (*verify) return run_verify(opts, va);
    if (*census) {
      if (!*order && !*input) throw PreconditionError("census needs --order or --input");
      return run_census(ca);
    }
    if (*orient) return run_orient(opts, k);
    if (*certify) return run_certify(opts, prime);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const OverflowError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
