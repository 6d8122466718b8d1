#include "gperm/identities.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gperm/error.hpp"

namespace gperm {
namespace {

using nlohmann::json;

std::string vertex_list(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return "{" + out + "}";
}

std::string graph_witness(const std::string& name, const Multigraph& g) {
  return name + ":\n" + to_edgelist(g);
}

IdentityValue residue_value(std::string label, BigInt raw, int modulus) {
  IdentityValue v;
  v.label = std::move(label);
  v.raw = raw;
  v.modulus = modulus;
  v.raw_residue = static_cast<int>(mod_floor(raw, modulus));
  v.canonical = canonical_residue(v.raw_residue, modulus);
  return v;
}

IdentityValue graph_permanent_value(std::string label, const Multigraph& g) {
  return kdsi_value(std::move(label), g, Orientation::natural(g), 0);
}

/// The canonical residue of the product of two values, as a value itself.
IdentityValue product_value(const IdentityValue& a, const IdentityValue& b) {
  IdentityValue v;
  v.label = "product";
  v.modulus = a.modulus;
  if (a.raw && b.raw) {
    BigInt p;
    if (!__builtin_mul_overflow(*a.raw, *b.raw, &p)) v.raw = p;
  }
  v.raw_residue = a.raw_residue * b.raw_residue % a.modulus;
  v.canonical = canonical_residue(v.raw_residue, a.modulus);
  return v;
}

bool all_canonical_equal(const std::vector<IdentityValue>& values) {
  return std::all_of(values.begin(), values.end(), [&](const IdentityValue& v) {
    return v.canonical == values.front().canonical;
  });
}

json value_to_json(const IdentityValue& v) {
  json j;
  j["label"] = v.label;
  if (v.raw) {
    if (*v.raw >= std::numeric_limits<std::int64_t>::min() &&
        *v.raw <= std::numeric_limits<std::int64_t>::max()) {
      j["raw"] = static_cast<std::int64_t>(*v.raw);
    } else {
      j["raw"] = to_string(*v.raw);
    }
  } else {
    j["raw"] = nullptr;
  }
  j["modulus"] = v.modulus;
  j["raw_residue"] = v.raw_residue;
  j["canonical"] = v.canonical;
  return j;
}

IdentityValue value_from_json(const json& j) {
  IdentityValue v;
  v.label = j.at("label").get<std::string>();
  const json& raw = j.at("raw");
  if (raw.is_number_integer()) {
    v.raw = raw.get<std::int64_t>();
  } else if (raw.is_string()) {
    v.raw = parse_bigint(raw.get<std::string>());
  }
  v.modulus = j.at("modulus").get<int>();
  v.raw_residue = j.at("raw_residue").get<int>();
  v.canonical = j.at("canonical").get<int>();
  return v;
}

std::vector<bool> vertex_mask(int n, std::span<const Vertex> vs) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (Vertex v : vs) {
    if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (mask[v]) throw PreconditionError("vertex " + std::to_string(v) + " listed twice");
    mask[v] = true;
  }
  return mask;
}

void require_balanced(const Multigraph& g, const std::string& what) {
  if (g.vertex_count() < 2 || g.edge_count() != 2 * (g.vertex_count() - 1)) {
    throw PreconditionError(what + " does not satisfy |E| = 2(|V| - 1): " +
                            std::to_string(g.vertex_count()) + " vertices, " +
                            std::to_string(g.edge_count()) + " edges");
  }
}

/// One minor of a two-vertex cut: v1, v2, then `side`, with the side's
/// edges, `direct` copies of v1-v2 and the extra v1-v2 edge.
Multigraph two_cut_minor(const Multigraph& g, Vertex v1, Vertex v2, std::span<const Vertex> side,
                         int direct, std::vector<Vertex>& vertices) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.vertex_count()), -1);
  vertices = {v1, v2};
  index[v1] = 0;
  index[v2] = 1;
  for (Vertex v : side) {
    index[v] = static_cast<int>(vertices.size());
    vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool cut_u = e.u == v1 || e.u == v2;
    const bool cut_v = e.v == v1 || e.v == v2;
    if (cut_u && cut_v) continue;
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  for (int i = 0; i < direct; ++i) edges.push_back({0, 1});
  edges.push_back({0, 1});
  return Multigraph(static_cast<int>(vertices.size()), std::move(edges));
}

IdentityReport two_cut_report(std::string identity, const Multigraph& g, const CutSplit& split) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.left.push_back(graph_permanent_value("G", g));
  const IdentityValue g1 = graph_permanent_value("G1", split.first);
  const IdentityValue g2 = graph_permanent_value("G2", split.second);
  r.right = {g1, g2, product_value(g1, g2)};
  r.holds = r.left[0].canonical == r.right[2].canonical;
  r.witnesses = {graph_witness("G", g), graph_witness("G1", split.first),
                 graph_witness("G2", split.second)};
  r.notes.push_back("left side " + vertex_list(split.left) + ", right side " +
                    vertex_list(split.right));
  return r;
}

}  // namespace

std::string report_to_json(const IdentityReport& report, int indent) {
  json j;
  j["identity"] = report.identity;
  j["holds"] = report.holds;
  j["left"] = json::array();
  for (const auto& v : report.left) j["left"].push_back(value_to_json(v));
  j["right"] = json::array();
  for (const auto& v : report.right) j["right"].push_back(value_to_json(v));
  j["notes"] = report.notes;
  j["witnesses"] = report.witnesses;
  return j.dump(indent);
}

IdentityReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    r.holds = j.at("holds").get<bool>();
    for (const auto& v : j.at("left")) r.left.push_back(value_from_json(v));
    for (const auto& v : j.at("right")) r.right.push_back(value_from_json(v));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("identity report: ") + e.what());
  }
}

IdentityValue kdsi_value(std::string label, const Multigraph& g, const Orientation& o,
                         Vertex special) {
  const int k = detect_k(g);
  if (!is_connected(g)) throw PreconditionError(label + " is not connected");
  const KdsiMatrix m = build_kdsi(g, o, special, k);
  if (m.matrix.rows() <= kMaxExactSide) {
    return residue_value(std::move(label), permanent_exact(m.matrix), k + 1);
  }
  IdentityValue v;
  v.label = std::move(label);
  v.modulus = k + 1;
  v.raw_residue = static_cast<int>(permanent_mod(m.matrix, k + 1));
  v.canonical = canonical_residue(v.raw_residue, k + 1);
  return v;
}

std::vector<std::vector<Vertex>> components_without(const Multigraph& g,
                                                    std::span<const Vertex> removed) {
  const auto comp = components(g, vertex_mask(g.vertex_count(), removed));
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] < 0) continue;
    if (comp[v] >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(comp[v]) + 1);
    out[comp[v]].push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- invariance

IdentityReport check_special_vertex(const Multigraph& g) {
  IdentityReport r;
  r.identity = "special-vertex";
  const int k = detect_k(g);
  const Orientation o = Orientation::natural(g);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    IdentityValue v = kdsi_value("special " + std::to_string(s), g, o, s);
    (s == 0 ? r.left : r.right).push_back(std::move(v));
  }
  const IdentityValue& base = r.left.front();
  bool raw_ok = true;
  for (const auto& v : r.right) {
    const bool same = v.raw_residue == base.raw_residue;
    const bool negated = v.raw_residue == (v.modulus - base.raw_residue) % v.modulus;
    raw_ok = raw_ok && (k % 2 == 0 ? same : (same || negated));
  }
  std::vector<IdentityValue> all = r.left;
  all.insert(all.end(), r.right.begin(), r.right.end());
  r.holds = all_canonical_equal(all) && raw_ok;
  r.notes.push_back(k % 2 == 0 ? "even k: raw residues must agree"
                               : "odd k: raw residues must agree up to sign");
  if (!r.holds) r.witnesses.push_back(graph_witness("G", g));
  return r;
}

IdentityReport check_decompletion(const Multigraph& gamma) {
  IdentityReport r;
  r.identity = "decompletion";
  for (const Decompletion& d : decompletions(gamma)) {
    const std::string label = "gamma - " + std::to_string(d.removed);
    if (!d.connected) {
      r.notes.push_back(label + " is disconnected; skipped");
      continue;
    }
    IdentityValue v = graph_permanent_value(label, d.graph);
    (r.left.empty() ? r.left : r.right).push_back(std::move(v));
  }
  if (r.left.empty()) throw PreconditionError("every decompletion is disconnected");
  std::vector<IdentityValue> all = r.left;
  all.insert(all.end(), r.right.begin(), r.right.end());
  r.holds = all_canonical_equal(all);
  if (!r.holds) r.witnesses.push_back(graph_witness("gamma", gamma));
  return r;
}

IdentityReport check_tag_oracle(const Multigraph& g) {
  IdentityReport r;
  r.identity = "tag-oracle";
  const int k = detect_k(g);
  const Orientation o = Orientation::natural(g);
  r.holds = true;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const std::string tag = "special " + std::to_string(s);
    r.left.push_back(residue_value("tags, " + tag, tagging_permanent(g, o, s, k), k + 1));
    r.right.push_back(kdsi_value("permanent, " + tag, g, o, s));
    r.holds = r.holds && r.right.back().raw && *r.right.back().raw == *r.left.back().raw;
  }
  if (!r.holds) r.witnesses.push_back(graph_witness("G", g));
  return r;
}

IdentityReport check_orientation_identity(const Multigraph& gamma,
                                          std::span<const std::pair<Vertex, Vertex>> pairs,
                                          std::vector<OrientationPairResult>* details) {
  const auto d = regular_degree(gamma);
  if (!d || *d < 2 || *d % 2 != 0) throw PreconditionError("needs a 2k-regular graph");
  if (!is_connected(gamma)) throw PreconditionError("graph is not connected");
  const int k = *d / 2;
  const int n = gamma.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> todo(pairs.begin(), pairs.end());
  if (todo.empty()) {
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        if (s != t) todo.emplace_back(s, t);
      }
    }
  }
  const Orientation ref = eulerian_reference(gamma);
  const BigInt factor = orientation_identity_factor(gamma);
  const BigInt literal_sign = k % 2 == 0 ? 1 : -1;

  IdentityReport r;
  r.identity = "orientation-identity";
  r.holds = true;
  bool literal = true;
  std::set<std::int64_t> residues;
  for (const auto& [s, t] : todo) {
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) {
      throw PreconditionError("bad vertex pair " + std::to_string(s) + "," + std::to_string(t));
    }
    OrientationPairResult pr;
    pr.s = s;
    pr.t = t;
    pr.census = signed_orientation_count(gamma, ref, s, t);
    const Multigraph g = delete_vertex(gamma, t);
    const KdsiMatrix m = build_kdsi(g, restrict_orientation(gamma, ref, t), s < t ? s : s - 1, k);
    pr.permanent = permanent_exact(m.matrix);
    const BigInt diff = pr.census.signed_difference();
    pr.factor_matches = pr.permanent == factor * diff;
    pr.literal_matches = pr.permanent == literal_sign * diff;
    r.holds = r.holds && pr.factor_matches;
    literal = literal && pr.literal_matches;
    residues.insert(mod_floor(diff, k + 1));

    const std::string tag = std::to_string(s) + "->" + std::to_string(t);
    r.left.push_back(residue_value("Perm " + tag, pr.permanent, k + 1));
    r.right.push_back(residue_value("E-O " + tag, diff, k + 1));
    if (details) details->push_back(pr);
  }
  const bool congruent = residues.size() <= 1;
  r.holds = r.holds && congruent;
  r.notes.push_back("multiplier (k!)^(|V|-2) (-1)^(k(|V|+1)) = " + to_string(factor));
  r.notes.push_back(std::string("E-O congruent mod k+1 across pairs: ") +
                    (congruent ? "yes" : "no"));
  r.notes.push_back(std::string("Perm = (-1)^k (E-O) on every pair: ") + (literal ? "yes" : "no"));
  if (!r.holds) r.witnesses.push_back(graph_witness("gamma", gamma));
  return r;
}

// ---------------------------------------------------------------- duality, twist

IdentityReport check_dual(const Multigraph& g, const RotationSystem& rot) {
  require_balanced(g, "G");
  const PlanarDual pd = planar_dual(g, rot);
  IdentityReport r;
  r.identity = "dual";
  r.left.push_back(graph_permanent_value("G", g));
  r.right.push_back(kdsi_value("G*", pd.dual, pd.orientation, 0));
  r.holds = r.left[0].canonical == r.right[0].canonical;
  r.witnesses = {graph_witness("G", g), graph_witness("G*", pd.dual)};
  return r;
}

IdentityReport check_twist(const Multigraph& gamma, const TwistPairing& cut,
                           std::span<const Vertex> side) {
  const Multigraph twisted = apply_schnetz_twist(gamma, cut, side);
  auto first_connected = [](const Multigraph& g, const std::string& name) {
    for (const Decompletion& d : decompletions(g)) {
      if (d.connected) {
        return graph_permanent_value(name + " - " + std::to_string(d.removed), d.graph);
      }
    }
    throw PreconditionError(name + " has no connected decompletion");
  };
  IdentityReport r;
  r.identity = "twist";
  r.left.push_back(first_connected(gamma, "gamma"));
  r.right.push_back(first_connected(twisted, "twisted"));
  r.holds = r.left[0].canonical == r.right[0].canonical;
  r.witnesses = {graph_witness("gamma", gamma), graph_witness("twisted", twisted)};
  return r;
}

// ---------------------------------------------------------------- cuts

CutSplit split_two_vertex_cut(const Multigraph& g, Vertex v1, Vertex v2,
                              std::span<const Vertex> left) {
  const int n = g.vertex_count();
  if (v1 == v2) throw PreconditionError("cut vertices must be distinct");
  const std::vector<Vertex> cut{v1, v2};
  const auto comps = components_without(g, cut);
  if (comps.size() < 2) {
    throw PreconditionError("vertices " + vertex_list(cut) + " do not separate the graph");
  }
  require_balanced(g, "G");

  CutSplit out;
  std::vector<bool> in_left(static_cast<std::size_t>(n), false);
  if (left.empty()) {
    out.left = comps.front();
  } else {
    const auto mask = vertex_mask(n, left);
    for (const auto& c : comps) {
      const auto hits = std::count_if(c.begin(), c.end(), [&](Vertex v) { return mask[v]; });
      if (hits != 0 && hits != static_cast<long>(c.size())) {
        throw PreconditionError("left side splits a component of G - " + vertex_list(cut));
      }
    }
    if (mask[v1] || mask[v2]) throw PreconditionError("left side contains a cut vertex");
    out.left.assign(left.begin(), left.end());
    std::sort(out.left.begin(), out.left.end());
  }
  for (Vertex v : out.left) in_left[v] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (v != v1 && v != v2 && !in_left[v]) out.right.push_back(v);
  }
  if (out.right.empty()) throw PreconditionError("right side is empty");

  int direct = 0;
  int left_edges = 0;
  int right_edges = 0;
  for (const Edge& e : g.edges()) {
    const bool cu = e.u == v1 || e.u == v2;
    const bool cv = e.v == v1 || e.v == v2;
    if (cu && cv) {
      ++direct;
    } else if ((!cu && in_left[e.u]) || (!cv && in_left[e.v])) {
      ++left_edges;
    } else {
      ++right_edges;
    }
  }
  // Each minor needs 2(|side| + 1) edges including the new v1-v2 edge.
  const int need_left = 2 * (static_cast<int>(out.left.size()) + 1) - 1 - left_edges;
  const int need_right = 2 * (static_cast<int>(out.right.size()) + 1) - 1 - right_edges;
  if (need_left < 0 || need_right < 0 || need_left + need_right != direct) {
    throw PreconditionError("the minors cannot both satisfy |E| = 2(|V| - 1)");
  }
  out.first = two_cut_minor(g, v1, v2, out.left, need_left, out.first_vertices);
  out.second = two_cut_minor(g, v1, v2, out.right, need_right, out.second_vertices);
  return out;
}

IdentityReport check_two_vertex_cut(const Multigraph& g, Vertex v1, Vertex v2,
                                    std::span<const Vertex> left) {
  return two_cut_report("two-cut", g, split_two_vertex_cut(g, v1, v2, left));
}

ThreeCutSplit split_three_vertex_cut(const Multigraph& gamma, std::span<const Vertex> cut) {
  if (regular_degree(gamma) != 4) throw PreconditionError("needs a 4-regular graph");
  if (cut.size() != 3) throw PreconditionError("a three-vertex cut needs exactly 3 vertices");
  const auto comps = components_without(gamma, cut);
  if (comps.size() < 2) {
    throw PreconditionError("vertices " + vertex_list(cut) + " do not separate the graph");
  }
  std::string last_error;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex c = cut[i];
    auto shift = [c](Vertex v) { return v < c ? v : v - 1; };
    std::vector<Vertex> pair;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != i) pair.push_back(shift(cut[j]));
    }
    std::vector<Vertex> left;
    for (Vertex v : comps.front()) left.push_back(shift(v));
    ThreeCutSplit out;
    out.decompleted = c;
    out.decompletion = delete_vertex(gamma, c);
    try {
      out.split = split_two_vertex_cut(out.decompletion, pair[0], pair[1], left);
      return out;
    } catch (const PreconditionError& e) {
      last_error = e.what();
    }
  }
  throw PreconditionError("no decompletion vertex yields a balanced two-vertex cut (" +
                          last_error + ")");
}

IdentityReport check_three_vertex_cut(const Multigraph& gamma, std::span<const Vertex> cut) {
  const ThreeCutSplit s = split_three_vertex_cut(gamma, cut);
  IdentityReport r = two_cut_report("three-cut", s.decompletion, s.split);
  r.notes.push_back("decompleted at vertex " + std::to_string(s.decompleted));
  return r;
}

FourEdgeSplit split_four_edge_cut(const Multigraph& gamma, std::span<const EdgeIndex> cut,
                                  const Orientation& o) {
  o.check_for(gamma);
  if (regular_degree(gamma) != 4) throw PreconditionError("needs a 4-regular graph");
  if (cut.size() != 4) throw PreconditionError("a four-edge cut needs exactly 4 edges");
  std::vector<bool> is_cut(static_cast<std::size_t>(gamma.edge_count()), false);
  for (EdgeIndex e : cut) {
    if (e < 0 || e >= gamma.edge_count()) throw PreconditionError("cut edge out of range");
    if (is_cut[e]) throw PreconditionError("cut edge listed twice");
    is_cut[e] = true;
  }
  const Multigraph rest = remove_edges(gamma, cut);
  const auto comp = components(rest, {});
  if (*std::max_element(comp.begin(), comp.end()) != 1) {
    throw PreconditionError("removing the four edges does not leave exactly two sides");
  }
  FourEdgeSplit out;
  const int n = gamma.vertex_count();
  out.to_first.assign(static_cast<std::size_t>(n), -1);
  out.to_second.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> touches_cut(static_cast<std::size_t>(n), false);
  for (EdgeIndex e : cut) {
    const Edge& ed = gamma.edge(e);
    if (comp[ed.u] == comp[ed.v]) throw PreconditionError("a cut edge lies within one side");
    touches_cut[ed.u] = touches_cut[ed.v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& side = comp[v] == 0 ? out.left : out.right;
    auto& index = comp[v] == 0 ? out.to_first : out.to_second;
    index[v] = static_cast<int>(side.size());
    side.push_back(v);
    if (!touches_cut[v]) (comp[v] == 0 ? out.left_interior : out.right_interior).push_back(v);
  }
  out.x = static_cast<int>(out.left.size());
  out.y = static_cast<int>(out.right.size());

  std::vector<Edge> e1, e2;
  std::vector<bool> d1, d2;
  for (EdgeIndex e = 0; e < gamma.edge_count(); ++e) {
    const Edge& ed = gamma.edge(e);
    const Vertex tail = o.tail(gamma, e);
    if (is_cut[e]) {
      const Vertex a = comp[ed.u] == 0 ? ed.u : ed.v;
      const Vertex b = ed.other(a);
      e1.push_back({out.to_first[a], out.x});
      d1.push_back(tail == a);
      e2.push_back({out.to_second[b], out.y});
      d2.push_back(tail == b);
    } else if (comp[ed.u] == 0) {
      e1.push_back({out.to_first[ed.u], out.to_first[ed.v]});
      d1.push_back(o.forward(e));
    } else {
      e2.push_back({out.to_second[ed.u], out.to_second[ed.v]});
      d2.push_back(o.forward(e));
    }
  }
  out.gamma1 = Multigraph(out.x + 1, std::move(e1));
  out.gamma2 = Multigraph(out.y + 1, std::move(e2));
  out.orientation1 = Orientation(std::move(d1));
  out.orientation2 = Orientation(std::move(d2));
  return out;
}

IdentityReport check_four_edge_cut(const Multigraph& gamma, std::span<const EdgeIndex> cut,
                                   std::optional<Vertex> hollow, std::optional<Vertex> square,
                                   const Orientation* orientation) {
  const Orientation o = orientation ? *orientation : Orientation::natural(gamma);
  const FourEdgeSplit s = split_four_edge_cut(gamma, cut, o);
  if (s.left_interior.empty() || s.right_interior.empty()) {
    throw PreconditionError("each side needs a vertex not incident with the cut");
  }
  const Vertex h = hollow.value_or(s.left_interior.front());
  const Vertex q = square.value_or(s.right_interior.front());
  auto contains = [](const std::vector<Vertex>& vs, Vertex v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  if (!contains(s.left_interior, h)) {
    throw PreconditionError("hollow vertex must be a left-side vertex away from the cut");
  }
  if (!contains(s.right_interior, q)) {
    throw PreconditionError("square vertex must be a right-side vertex away from the cut");
  }

  const Vertex h1 = s.to_first[h];
  const Vertex q2 = s.to_second[q];
  IdentityReport r;
  r.identity = "four-edge-cut";
  r.left.push_back(kdsi_value("gamma - " + std::to_string(h) + ", special " + std::to_string(q),
                              delete_vertex(gamma, h), restrict_orientation(gamma, o, h),
                              q < h ? q : q - 1));
  const IdentityValue p1 = kdsi_value("gamma1 - hollow, special x", delete_vertex(s.gamma1, h1),
                                      restrict_orientation(s.gamma1, s.orientation1, h1),
                                      s.x - 1);
  const IdentityValue p2 = kdsi_value("gamma2 - y, special square", delete_vertex(s.gamma2, s.y),
                                      restrict_orientation(s.gamma2, s.orientation2, s.y), q2);
  r.right = {p1, p2, product_value(p1, p2)};
  const IdentityValue& lhs = r.left[0];
  const IdentityValue& prod = r.right[2];
  if (!lhs.raw || !prod.raw) throw LimitError("four-edge-cut check needs exact permanents");
  r.holds = *lhs.raw == *prod.raw;
  r.notes.push_back("hollow " + std::to_string(h) + " (left), square " + std::to_string(q) +
                    " (right)");
  r.notes.push_back(std::string("canonical residues agree: ") +
                    (lhs.canonical == prod.canonical ? "yes" : "no"));
  r.witnesses = {graph_witness("gamma", gamma), graph_witness("gamma1", s.gamma1),
                 graph_witness("gamma2", s.gamma2)};
  return r;
}

}  // namespace gperm
