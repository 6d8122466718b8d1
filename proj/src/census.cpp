#include "gperm/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gperm/error.hpp"
#include "gperm/invariant.hpp"

#ifndef GPERM_DEFAULT_FIXTURES
#define GPERM_DEFAULT_FIXTURES "fixtures"
#endif

namespace gperm {
namespace {

struct Partial {
  int n = 0;
  std::vector<std::uint32_t> adj;

  int degree(int v) const { return std::popcount(adj[v]); }

  Multigraph graph() const {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        if ((adj[v] >> w) & 1U) edges.push_back({v, w});
      }
    }
    return Multigraph(n, std::move(edges));
  }
};

Partial relabel(const Partial& p, const std::vector<int>& perm) {
  Partial out{p.n, std::vector<std::uint32_t>(static_cast<std::size_t>(p.n), 0)};
  for (int v = 0; v < p.n; ++v) {
    for (int w = 0; w < p.n; ++w) {
      if ((p.adj[v] >> w) & 1U) out.adj[perm[v]] |= std::uint32_t{1} << perm[w];
    }
  }
  return out;
}

/// Every unfinished vertex can still find enough partners.
bool completable(const Partial& p, int d) {
  std::uint32_t open = 0;
  int deficit = 0;
  for (int v = 0; v < p.n; ++v) {
    if (p.degree(v) < d) open |= std::uint32_t{1} << v;
  }
  for (int v = 0; v < p.n; ++v) {
    const int need = d - p.degree(v);
    if (need == 0) continue;
    const std::uint32_t partners = open & ~p.adj[v] & ~(std::uint32_t{1} << v);
    if (std::popcount(partners) < need) return false;
    deficit += need;
  }
  return deficit % 2 == 0;
}

int residue_of(const Multigraph& g) {
  return graph_permanent(g).canonical_residue;
}

CensusEntry evaluate(const Multigraph& g) {
  CensusEntry e;
  e.graph = g;
  e.order = g.vertex_count();
  e.primitive = is_primitive(g);
  e.three_vertex_cut = has_three_vertex_cut(g);
  std::optional<int> first;
  for (const Decompletion& d : decompletions(g)) {
    if (!d.connected) continue;
    const int r = residue_of(d.graph);
    if (d.removed == 0) e.residue = r;
    if (!first) first = r;
    if (r != *first) e.decompletions_agree = false;
  }
  return e;
}

std::string residue_map(const std::map<int, int>& m) {
  std::string out;
  for (const auto& [r, c] : m) {
    out += (out.empty() ? "" : ", ") + std::to_string(r) + ":" + std::to_string(c);
  }
  return "{" + out + "}";
}

}  // namespace

std::vector<Multigraph> generate_regular(int n, int degree, std::uint64_t seed) {
  if (degree < 1) throw PreconditionError("degree must be positive");
  if (n <= degree || n > kMaxGenerateOrder) {
    throw PreconditionError("order " + std::to_string(n) + " unsupported for degree " +
                            std::to_string(degree) + " (need degree < n <= " +
                            std::to_string(kMaxGenerateOrder) + ")");
  }
  if ((n * degree) % 2 != 0) return {};

  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::map<std::string, Partial> level;
  level.emplace("", Partial{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)});
  std::map<std::string, Multigraph> done;
  while (!level.empty()) {
    std::map<std::string, Partial> next;
    for (auto& [key, item] : level) {
      Partial p = item;
      if (seed != 0) {
        std::shuffle(perm.begin(), perm.end(), rng);
        p = relabel(p, perm);
      }
      int v = -1;
      for (int u = 0; u < n; ++u) {
        if (p.degree(u) < degree && (v < 0 || p.degree(u) > p.degree(v))) v = u;
      }
      if (v < 0) {
        done.emplace(key, p.graph());
        continue;
      }
      std::vector<int> candidates;
      for (int w = 0; w < n; ++w) {
        if (w != v && p.degree(w) < degree && !((p.adj[v] >> w) & 1U)) candidates.push_back(w);
      }
      const int need = degree - p.degree(v);
      if (static_cast<int>(candidates.size()) < need) continue;
      std::vector<bool> choose(candidates.size(), false);
      std::fill(choose.begin(), choose.begin() + need, true);
      do {
        Partial q = p;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (!choose[i]) continue;
          q.adj[v] |= std::uint32_t{1} << candidates[i];
          q.adj[candidates[i]] |= std::uint32_t{1} << v;
        }
        if (!completable(q, degree)) continue;
        std::string form = canonical_form(q.graph());
        next.try_emplace(std::move(form), std::move(q));
      } while (std::prev_permutation(choose.begin(), choose.end()));
    }
    level = std::move(next);
  }

  std::vector<Multigraph> out;
  for (const auto& [form, g] : done) {
    if (is_connected(g)) out.push_back(graph_from_canonical(form));
  }
  return out;
}

Multigraph graph_from_canonical(std::string_view form) {
  const auto colon = form.find(':');
  if (colon == std::string_view::npos) throw ParseError("canonical form lacks ':'");
  int n = 0;
  for (char c : form.substr(0, colon)) {
    if (c < '0' || c > '9') throw ParseError("bad vertex count in canonical form");
    n = n * 10 + (c - '0');
  }
  const std::string_view bits = form.substr(colon + 1);
  if (static_cast<long>(bits.size()) != static_cast<long>(n) * (n - 1) / 2) {
    throw ParseError("canonical form has the wrong length");
  }
  std::vector<Edge> edges;
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[pos] == '1') {
        edges.push_back({i, j});
      } else if (bits[pos] != '0') {
        throw ParseError("canonical form bits must be 0 or 1");
      }
      ++pos;
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return Multigraph(n, std::move(edges));
}

bool has_three_vertex_cut(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 32) throw LimitError("three-vertex cut search is limited to 32 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const std::uint32_t alive =
            all & ~((std::uint32_t{1} << a) | (std::uint32_t{1} << b) | (std::uint32_t{1} << c));
        if (alive == 0) continue;
        std::uint32_t seen = alive & (~alive + 1);
        std::uint32_t frontier = seen;
        while (frontier != 0) {
          std::uint32_t grow = 0;
          for (std::uint32_t f = frontier; f != 0; f &= f - 1) grow |= adj[std::countr_zero(f)];
          frontier = grow & alive & ~seen;
          seen |= frontier;
        }
        if (seen != alive) return true;
      }
    }
  }
  return false;
}

CensusFilter parse_census_filter(std::string_view name) {
  if (name == "primitive") return CensusFilter::Primitive;
  if (name == "irreducible") return CensusFilter::Irreducible;
  throw ParseError("unknown census filter '" + std::string(name) +
                   "' (expected primitive or irreducible)");
}

bool is_primitive(const Multigraph& gamma) {
  if (regular_degree(gamma) != 4) throw PreconditionError("primitivity needs a 4-regular graph");
  if (!is_connected(gamma)) throw PreconditionError("graph is not connected");
  const int n = gamma.vertex_count();
  if (n > 30) throw LimitError("primitivity check is limited to 30 vertices");
  // Sides containing vertex 0; the complement covers the rest.
  for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (n - 1)); ++rest) {
    const std::uint32_t side = (rest << 1) | 1U;
    const int size = std::popcount(side);
    if (size < 2 || size > n - 2) continue;
    int crossing = 0;
    for (const Edge& e : gamma.edges()) {
      crossing += ((side >> e.u) & 1U) != ((side >> e.v) & 1U);
    }
    if (crossing < 6) return false;
  }
  return true;
}

ExpectedTable parse_expected_table(std::string_view json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ParseError("fixture must be an object keyed by vertex count");
    ExpectedTable table;
    for (const auto& [key, row] : j.items()) {
      ExpectedRow r;
      r.primitive_count = row.at("expected_primitive_count").get<int>();
      for (int x : row.at("residue_multiset").get<std::vector<int>>()) ++r.residues[x];
      table[std::stoi(key)] = r;
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("fixture keys must be vertex counts");
  }
}

ExpectedTable load_expected_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_expected_table(ss.str());
}

std::string default_fixture_path() {
  const char* dir = std::getenv("GPERM_FIXTURES");
  return std::string(dir && *dir ? dir : GPERM_DEFAULT_FIXTURES) + "/appendix_a.json";
}

CensusReport census_report(const std::vector<Multigraph>& graphs, const ExpectedTable* expected,
                           int jobs, CensusFilter filter) {
  CensusReport report;
  report.entries.resize(graphs.size());
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(graphs.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < graphs.size(); i = next++) {
            report.entries[i] = evaluate(graphs[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<int, CensusSummary> by_order;
  for (auto& e : report.entries) {
    CensusSummary& s = by_order[e.order];
    s.order = e.order;
    s.filter = filter;
    e.class_id = s.graphs++;
    s.primitive += e.primitive;
    s.irreducible += e.irreducible();
    if (!e.counted(filter)) continue;
    ++s.counted;
    if (e.residue) ++s.residues[*e.residue];
    s.decompletions_agree = s.decompletions_agree && e.decompletions_agree;
  }
  for (auto& [order, s] : by_order) {
    if (expected) {
      const auto it = expected->find(order);
      if (it != expected->end()) {
        s.pass = s.counted == it->second.primitive_count && s.residues == it->second.residues &&
                 s.decompletions_agree;
        report.pass = report.pass && *s.pass;
      }
    }
    report.summaries.push_back(s);
  }
  return report;
}

CensusReport census_order(int n, const ExpectedTable* expected, int jobs, CensusFilter filter) {
  if (n < kMinCensusOrder || n > kMaxCensusOrder) {
    throw PreconditionError("unsupported order " + std::to_string(n) + "; the census covers " +
                            std::to_string(kMinCensusOrder) + " to " +
                            std::to_string(kMaxCensusOrder) + " vertices");
  }
  return census_report(generate_regular(n, 4), expected, jobs, filter);
}

std::string census_tsv(const CensusReport& report) {
  std::string out = "n\tclass_id\tprimitive\tresidue\tirreducible\n";
  for (const auto& e : report.entries) {
    out += std::to_string(e.order) + "\t" + std::to_string(e.class_id) + "\t" +
           (e.primitive ? "1" : "0") + "\t" + (e.residue ? std::to_string(*e.residue) : "-") + "\t" +
           (e.irreducible() ? "1" : "0") + "\n";
  }
  return out;
}

std::string summary_line(const CensusSummary& s) {
  std::string out = "order " + std::to_string(s.order) + ": " + std::to_string(s.graphs) +
                    " graphs, " + std::to_string(s.primitive) + " primitive, " +
                    std::to_string(s.irreducible) + " irreducible; counted " +
                    std::to_string(s.counted) + ", residues " + residue_map(s.residues);
  if (!s.decompletions_agree) out += " (decompletions disagree)";
  if (s.pass) out += *s.pass ? " PASS" : " FAIL";
  return out;
}

}  // namespace gperm
