#include "gperm/flows.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <json.hpp>

#include "gperm/error.hpp"
#include "gperm/invariant.hpp"
#include "gperm/permanent.hpp"

namespace gperm {
namespace {

using nlohmann::json;

int residue(std::int64_t x, int k) {
  const std::int64_t r = x % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

/// Some value d - r, d - r + 2, ..., d + r is a multiple of k.
bool can_reach_multiple(int d, int r, int k) {
  for (int t = 0; t <= r; ++t) {
    if (residue(d - r + 2 * t, k) == 0) return true;
  }
  return false;
}

/// Union-find over vertices; true when the chosen edges connect everything.
bool spans_connected(const Multigraph& g, std::span<const EdgeIndex> edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merges = 0;
  for (EdgeIndex e : edges) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return merges == g.vertex_count() - 1;
}

}  // namespace

FlowAssignment FlowAssignment::from_integers(int modulus, std::span<const std::int64_t> values) {
  if (modulus < 1) throw PreconditionError("flow modulus must be positive");
  FlowAssignment phi;
  phi.modulus = modulus;
  for (std::int64_t v : values) phi.values.push_back(residue(v, modulus));
  return phi;
}

std::vector<int> boundary(const Multigraph& g, const Orientation& o, const FlowAssignment& phi) {
  o.check_for(g);
  if (static_cast<int>(phi.values.size()) != g.edge_count()) {
    throw PreconditionError("flow has " + std::to_string(phi.values.size()) + " values for " +
                            std::to_string(g.edge_count()) + " edges");
  }
  const int k = phi.modulus;
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const int value = residue(phi.values[e], k);
    const Vertex t = o.tail(g, e);
    const Vertex h = o.head(g, e);
    out[t] = (out[t] + value) % k;
    out[h] = residue(out[h] - value, k);
  }
  return out;
}

bool is_flow(const Multigraph& g, const Orientation& o, const FlowAssignment& phi) {
  const auto b = boundary(g, o, phi);
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

bool is_modulo_orientation(const Multigraph& g, const Orientation& o, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  o.check_for(g);
  std::vector<int> diff(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    ++diff[o.tail(g, e)];
    --diff[o.head(g, e)];
  }
  return std::all_of(diff.begin(), diff.end(), [k](int d) { return residue(d, k) == 0; });
}

std::optional<Orientation> find_modulo_orientation(const Multigraph& g, int k) {
  if (k < 1) throw PreconditionError("k must be positive");
  const int m = g.edge_count();
  if (m > kMaxOrientationSearchEdges) {
    throw LimitError("orientation search is limited to " +
                     std::to_string(kMaxOrientationSearchEdges) + " edges");
  }
  std::vector<int> diff(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> left = g.degrees();
  std::vector<bool> forward(static_cast<std::size_t>(m), true);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!can_reach_multiple(0, left[v], k)) return std::nullopt;
  }

  auto search = [&](auto&& self, EdgeIndex e) -> bool {
    if (e == m) return true;
    const Edge& ed = g.edge(e);
    --left[ed.u];
    --left[ed.v];
    for (const bool fwd : {true, false}) {
      const Vertex from = fwd ? ed.u : ed.v;
      const Vertex to = fwd ? ed.v : ed.u;
      ++diff[from];
      --diff[to];
      if (can_reach_multiple(diff[from], left[from], k) &&
          can_reach_multiple(diff[to], left[to], k)) {
        forward[e] = fwd;
        if (self(self, e + 1)) return true;
      }
      --diff[from];
      ++diff[to];
    }
    ++left[ed.u];
    ++left[ed.v];
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Orientation(std::move(forward));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

CertificateSearch alon_tarsi_certificate(const Multigraph& g, int p, std::int64_t max_subsets) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p == 2) {
    throw PreconditionError("certificates need an odd prime; modulo 2 the values -1 and 1 coincide");
  }
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("certificates need at least two vertices");
  const int m = g.edge_count();
  const int need = (p - 1) * (n - 1);
  if (need > m) {
    throw PreconditionError("no spanning subgraph with (p-1)(|V|-1) = " + std::to_string(need) +
                            " edges; the graph has " + std::to_string(m));
  }

  CertificateSearch out;
  if (!is_connected(g)) return out;
  std::vector<EdgeIndex> pick(static_cast<std::size_t>(need));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (out.subsets_examined == max_subsets) {
      throw LimitError("certificate search stopped after " + std::to_string(max_subsets) +
                       " edge subsets");
    }
    ++out.subsets_examined;
    if (spans_connected(g, pick)) {
      ++out.connected_subsets;
      std::vector<Edge> edges;
      for (EdgeIndex e : pick) edges.push_back(g.edge(e));
      const Multigraph h(n, std::move(edges));
      const KdsiMatrix kdsi = build_kdsi(h, Orientation::natural(h), 0, p - 1);
      const auto r = permanent_mod(kdsi.matrix, p);
      if (r != 0) {
        OrientationCertificate cert;
        cert.p = p;
        cert.subgraph_edges = pick;
        cert.permanent_residue = static_cast<int>(r);
        if (m <= kMaxOrientationSearchEdges) {
          cert.orientation = find_modulo_orientation(g, p);
          if (!cert.orientation) {
            throw Error("certificate found but no modulo-" + std::to_string(p) +
                        " orientation exists");
          }
        }
        out.certificate = std::move(cert);
        return out;
      }
    }
    // Next combination in lexicographic order.
    int i = need - 1;
    while (i >= 0 && pick[i] == m - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::string certificate_to_json(const OrientationCertificate& cert, int indent) {
  json j;
  j["p"] = cert.p;
  j["subgraph_edges"] = cert.subgraph_edges;
  j["permanent_residue"] = cert.permanent_residue;
  if (cert.orientation) {
    std::vector<int> dirs;
    for (bool f : cert.orientation->directions()) dirs.push_back(f ? 1 : 0);
    j["orientation"] = dirs;
  } else {
    j["orientation"] = nullptr;
  }
  return j.dump(indent);
}

OrientationCertificate certificate_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    OrientationCertificate cert;
    cert.p = j.at("p").get<int>();
    cert.subgraph_edges = j.at("subgraph_edges").get<std::vector<EdgeIndex>>();
    cert.permanent_residue = j.at("permanent_residue").get<int>();
    if (j.contains("orientation") && !j.at("orientation").is_null()) {
      std::vector<bool> dirs;
      for (int d : j.at("orientation").get<std::vector<int>>()) {
        if (d != 0 && d != 1) throw ParseError("orientation entries must be 0 or 1");
        dirs.push_back(d == 1);
      }
      cert.orientation = Orientation(std::move(dirs));
    }
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

FundamentalCutMatrix fundamental_cut_matrix(const Multigraph& g, std::span<const EdgeIndex> tree,
                                            const Orientation& o) {
  o.check_for(g);
  if (!is_spanning_tree(g, tree)) throw PreconditionError("edges do not form a spanning tree");
  const int n = g.vertex_count();
  FundamentalCutMatrix out;
  out.tree.assign(tree.begin(), tree.end());
  std::vector<bool> in_tree(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeIndex e : tree) in_tree[e] = true;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e]) out.non_tree.push_back(e);
  }
  out.matrix = IntMatrix(static_cast<int>(out.tree.size()), static_cast<int>(out.non_tree.size()));

  for (std::size_t i = 0; i < out.tree.size(); ++i) {
    const EdgeIndex f = out.tree[i];
    // The side of T - f holding the tail of f.
    std::vector<Edge> forest;
    for (EdgeIndex e : out.tree) {
      if (e != f) forest.push_back(g.edge(e));
    }
    const auto comp = components(Multigraph(n, std::move(forest)), {});
    const int side = comp[o.tail(g, f)];
    for (std::size_t j = 0; j < out.non_tree.size(); ++j) {
      const EdgeIndex e = out.non_tree[j];
      const bool tail_in = comp[o.tail(g, e)] == side;
      const bool head_in = comp[o.head(g, e)] == side;
      if (tail_in == head_in) continue;
      out.matrix(static_cast<int>(i), static_cast<int>(j)) = tail_in ? -1 : 1;
    }
  }
  return out;
}

std::vector<std::vector<EdgeIndex>> all_spanning_trees(const Multigraph& g, std::int64_t limit) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::vector<EdgeIndex>> out;
  if (n == 0) return out;
  std::vector<EdgeIndex> pick;
  std::vector<int> parent(static_cast<std::size_t>(n));

  // Adding `extra` to `pick` keeps it a forest.
  auto acyclic_with = [&](EdgeIndex extra) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (EdgeIndex e : pick) parent[find(g.edge(e).u)] = find(g.edge(e).v);
    return find(g.edge(extra).u) != find(g.edge(extra).v);
  };
  auto recurse = [&](auto&& self, EdgeIndex from) -> void {
    if (static_cast<int>(pick.size()) == n - 1) {
      if (static_cast<std::int64_t>(out.size()) == limit) {
        throw LimitError("more than " + std::to_string(limit) + " spanning trees");
      }
      out.push_back(pick);
      return;
    }
    for (EdgeIndex e = from; e < m; ++e) {
      if (m - e < n - 1 - static_cast<int>(pick.size())) break;
      if (!acyclic_with(e)) continue;
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace gperm
