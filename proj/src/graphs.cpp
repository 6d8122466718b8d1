#include "gperm/graphs.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <string>

#include "gperm/error.hpp"

namespace gperm {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges,
                       std::vector<std::string> labels)
    : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw PreconditionError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw PreconditionError("edge " + std::to_string(i) + " is a loop at vertex " +
                              std::to_string(e.u));
    }
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
    throw PreconditionError("label count does not match vertex count");
  }
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

std::vector<std::vector<EdgeIndex>> Multigraph::incidence() const {
  std::vector<std::vector<EdgeIndex>> inc(static_cast<std::size_t>(vertex_count_));
  for (EdgeIndex i = 0; i < edge_count(); ++i) {
    inc[static_cast<std::size_t>(edges_[i].u)].push_back(i);
    inc[static_cast<std::size_t>(edges_[i].v)].push_back(i);
  }
  return inc;
}

int Multigraph::multiplicity(Vertex a, Vertex b) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
  }));
}

bool Multigraph::is_simple() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

Orientation Orientation::natural(const Multigraph& g) {
  return Orientation(std::vector<bool>(static_cast<std::size_t>(g.edge_count()), true));
}

Vertex Orientation::tail(const Multigraph& g, EdgeIndex e) const {
  const Edge& ed = g.edge(e);
  return forward(e) ? ed.u : ed.v;
}

Vertex Orientation::head(const Multigraph& g, EdgeIndex e) const {
  const Edge& ed = g.edge(e);
  return forward(e) ? ed.v : ed.u;
}

Orientation Orientation::flipped(EdgeIndex e) const {
  Orientation out = *this;
  out.forward_.at(static_cast<std::size_t>(e)) = !out.forward_.at(static_cast<std::size_t>(e));
  return out;
}

int Orientation::disagreements(const Orientation& other) const {
  if (other.size() != size()) throw PreconditionError("orientation length mismatch");
  int d = 0;
  for (int i = 0; i < size(); ++i) d += forward_[i] != other.forward_[i];
  return d;
}

void Orientation::check_for(const Multigraph& g) const {
  if (size() != g.edge_count()) {
    throw PreconditionError("orientation has " + std::to_string(size()) +
                            " entries but graph has " + std::to_string(g.edge_count()) +
                            " edges");
  }
}

void RotationSystem::validate(const Multigraph& g) const {
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw PreconditionError("rotation system must list every vertex");
  }
  const auto inc = g.incidence();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto listed = order[static_cast<std::size_t>(v)];
    auto expected = inc[static_cast<std::size_t>(v)];
    std::sort(listed.begin(), listed.end());
    if (listed != expected) {
      throw PreconditionError("rotation at vertex " + std::to_string(v) +
                              " does not list each incident edge exactly once");
    }
  }
}

// ---------------------------------------------------------------- structure

std::vector<int> components(const Multigraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  const auto inc = g.incidence();
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1 || (!removed.empty() && removed[s])) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (EdgeIndex e : inc[x]) {
        const Vertex y = g.edge(e).other(x);
        if (comp[y] != -1 || (!removed.empty() && removed[y])) continue;
        comp[y] = next;
        q.push(y);
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  const auto comp = components(g, {});
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<int> regular_degree(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const auto d = g.degrees();
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end()) {
    return std::nullopt;
  }
  return d.front();
}

Multigraph delete_vertex(const Multigraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x != v) keep.push_back(x);
  }
  return induced_subgraph(g, keep);
}

Orientation restrict_orientation(const Multigraph& g, const Orientation& o, Vertex v) {
  o.check_for(g);
  std::vector<bool> forward;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u != v && g.edge(e).v != v) forward.push_back(o.forward(e));
  }
  return Orientation(std::move(forward));
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Vertex v : keep) labels.push_back(g.labels()[v]);
  }
  return Multigraph(static_cast<int>(keep.size()), std::move(edges), std::move(labels));
}

Multigraph add_edges(const Multigraph& g, std::span<const Edge> extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Multigraph(g.vertex_count(), std::move(edges), g.labels());
}

Multigraph remove_edges(const Multigraph& g, std::span<const EdgeIndex> drop) {
  std::vector<bool> gone(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeIndex e : drop) gone.at(static_cast<std::size_t>(e)) = true;
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!gone[e]) edges.push_back(g.edge(e));
  }
  return Multigraph(g.vertex_count(), std::move(edges), g.labels());
}

std::vector<EdgeIndex> spanning_tree(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const auto inc = g.incidence();
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<EdgeIndex> tree;
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (EdgeIndex e : inc[x]) {
      const Vertex y = g.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = true;
      tree.push_back(e);
      q.push(y);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool is_spanning_tree(const Multigraph& g, std::span<const EdgeIndex> tree) {
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeIndex e : tree) {
    if (e < 0 || e >= g.edge_count()) return false;
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// ---------------------------------------------------------------- operations

Orientation eulerian_reference(const Multigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " +
                              std::to_string(g.degree(v)));
    }
  }
  if (!is_connected(g)) throw PreconditionError("graph is not connected");

  // Hierholzer; each edge is oriented in the direction it is first walked.
  const auto inc = g.incidence();
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<bool> forward(static_cast<std::size_t>(g.edge_count()), true);
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    auto& c = cursor[x];
    while (c < inc[x].size() && used[inc[x][c]]) ++c;
    if (c == inc[x].size()) {
      stack.pop_back();
      continue;
    }
    const EdgeIndex e = inc[x][c];
    used[e] = true;
    forward[e] = g.edge(e).u == x;
    stack.push_back(g.edge(e).other(x));
  }
  return Orientation(std::move(forward));
}

IntMatrix incidence_matrix(const Multigraph& g, const Orientation& o) {
  o.check_for(g);
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    m(o.tail(g, e), e) = 1;
    m(o.head(g, e), e) = -1;
  }
  return m;
}

std::vector<Decompletion> decompletions(const Multigraph& g) {
  const auto d = regular_degree(g);
  if (!d || *d < 2 || *d % 2 != 0) {
    throw PreconditionError("decompletion needs a regular graph of positive even degree");
  }
  std::vector<Decompletion> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Multigraph h = delete_vertex(g, v);
    const bool connected = is_connected(h);
    out.push_back({v, std::move(h), connected});
  }
  return out;
}

Multigraph apply_schnetz_twist(const Multigraph& g, const TwistPairing& cut,
                               std::span<const Vertex> side) {
  const int n = g.vertex_count();
  const std::array<Vertex, 4> cv{cut.v1, cut.v2, cut.v3, cut.v4};
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  for (Vertex v : cv) {
    if (v < 0 || v >= n) throw PreconditionError("twist vertex out of range");
    if (is_cut[v]) throw PreconditionError("twist vertices must be distinct");
    is_cut[v] = true;
  }
  const auto d = regular_degree(g);
  if (!d || *d % 2 != 0) throw PreconditionError("twist needs a 2k-regular graph");

  std::vector<bool> in_side(static_cast<std::size_t>(n), false);
  for (Vertex v : side) {
    if (v < 0 || v >= n) throw PreconditionError("side vertex out of range");
    if (is_cut[v]) throw PreconditionError("side must not contain cut vertices");
    in_side[v] = true;
  }
  const int side_size = static_cast<int>(std::count(in_side.begin(), in_side.end(), true));
  if (side_size == 0 || side_size + 4 >= n) {
    throw PreconditionError("the four vertices do not separate the chosen side from the rest");
  }
  for (const Edge& e : g.edges()) {
    const bool a = in_side[e.u];
    const bool b = in_side[e.v];
    if (a != b && !is_cut[e.u] && !is_cut[e.v]) {
      throw PreconditionError("the four vertices do not separate the chosen side from the rest");
    }
  }

  auto side_edges_to = [&](Vertex c) {
    int count = 0;
    for (const Edge& e : g.edges()) {
      count += (e.u == c && in_side[e.v]) || (e.v == c && in_side[e.u]);
    }
    return count;
  };
  if (side_edges_to(cut.v1) != side_edges_to(cut.v2) ||
      side_edges_to(cut.v3) != side_edges_to(cut.v4)) {
    throw PreconditionError(
        "paired cut vertices have different edge counts into the chosen side; "
        "the twist would not be regular");
  }

  auto swap_end = [&](Vertex x) {
    if (x == cut.v1) return cut.v2;
    if (x == cut.v2) return cut.v1;
    if (x == cut.v3) return cut.v4;
    if (x == cut.v4) return cut.v3;
    return x;
  };
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (in_side[e.u] && is_cut[e.v]) e.v = swap_end(e.v);
    if (in_side[e.v] && is_cut[e.u]) e.u = swap_end(e.u);
  }
  return Multigraph(n, std::move(edges), g.labels());
}

}  // namespace gperm
