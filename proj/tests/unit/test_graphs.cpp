#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "gperm/error.hpp"
#include "gperm/graphs.hpp"

using namespace gperm;
using namespace gperm::test;

TEST_CASE("edgelist parsing") {
  const Multigraph g = parse_graph("# comment\n3 3\n0 1\n1 2\n2 0\n", GraphFormat::Edgelist);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(2) == Edge{2, 0});
  CHECK(parse_graph(to_edgelist(g), GraphFormat::Edgelist) == g);

  CHECK_THROWS_AS(parse_graph("2 1\n0 0\n", GraphFormat::Edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n", GraphFormat::Edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("2 1\n0 5\n", GraphFormat::Edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::Edgelist), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n", GraphFormat::Edgelist), ParseError);
}

TEST_CASE("parallel edges survive the edgelist") {
  const Multigraph g = parallel_edges(3);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK_FALSE(g.is_simple());
  CHECK(parse_graph(to_edgelist(g), GraphFormat::Edgelist) == g);
  CHECK_THROWS_AS(to_graph6(g), PreconditionError);
}

TEST_CASE("graph6") {
  // K4 is "C~" in graph6.
  const Multigraph k4 = parse_graph("C~", GraphFormat::Graph6);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(detect_format("C~\n") == GraphFormat::Graph6);
  CHECK(detect_format("# x\n4 6\n") == GraphFormat::Edgelist);
  CHECK_THROWS_AS(parse_graph("C", GraphFormat::Graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("C\x7f", GraphFormat::Graph6), ParseError);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 70;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) edges.push_back({i, j});
    const Multigraph g(n, edges);
    const Multigraph back = parse_graph(to_graph6(g), GraphFormat::Graph6);
    CHECK(back.vertex_count() == n);
    CHECK(back.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) CHECK(back.multiplicity(e.u, e.v) == 1);
  }
  const auto many = parse_graph6_lines("C~\nBw\n\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1].edge_count() == 3);
}

TEST_CASE("structural edits") {
  const Multigraph k5 = complete_graph(5);
  const Multigraph k4 = delete_vertex(k5, 2);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(regular_degree(k4) == 3);

  const Orientation o = Orientation::natural(k5).flipped(1);
  const Orientation r = restrict_orientation(k5, o, 4);
  CHECK(r.size() == 6);
  CHECK_FALSE(r.forward(1));

  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(Multigraph(3, {{0, 1}})));
  const auto tree = spanning_tree(k5);
  CHECK(tree.size() == 4);
  CHECK(is_spanning_tree(k5, tree));

  std::vector<bool> removed(5, false);
  removed[0] = true;
  const auto comp = components(path_graph(5), removed);
  CHECK(comp[0] == -1);
  CHECK(comp[1] == comp[4]);
}

TEST_CASE("Eulerian reference balances every vertex") {
  for (const Multigraph& g : {complete_graph(5), octahedron(), cycle_graph(7), complete_graph(7)}) {
    const Orientation o = eulerian_reference(g);
    std::vector<int> diff(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      ++diff[o.tail(g, e)];
      --diff[o.head(g, e)];
    }
    for (int d : diff) CHECK(d == 0);
  }
  CHECK_THROWS_AS(eulerian_reference(path_graph(3)), PreconditionError);
}

TEST_CASE("decompletions of K5") {
  const auto ds = decompletions(complete_graph(5));
  REQUIRE(ds.size() == 5);
  for (const auto& d : ds) {
    CHECK(d.connected);
    CHECK(d.graph.edge_count() == 6);
  }
  CHECK_THROWS_AS(decompletions(path_graph(3)), PreconditionError);
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::mt19937_64 rng(22);
  std::vector<Multigraph> graphs;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 3;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 == 0) edges.push_back({i, j});
    graphs.emplace_back(n, edges);
  }
  for (const auto& g : graphs) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK((canonical_form(graphs[i]) == canonical_form(graphs[j])) ==
            isomorphic_brute(graphs[i], graphs[j]));
}

TEST_CASE("rotation systems and planar duals") {
  const Multigraph k4 = read_graph_file(GPERM_TEST_DATA "/k4.txt");
  const RotationSystem rot = parse_rotation(read_text(GPERM_TEST_DATA "/k4.rot"), k4);
  CHECK(trace_faces(k4, rot).size() == 4);
  const PlanarDual d = planar_dual(k4, rot);
  CHECK(d.dual.vertex_count() == 4);
  CHECK(canonical_form(d.dual) == canonical_form(k4));
  CHECK(parse_rotation(format_rotation(rot), k4).order == rot.order);

  // A non-planar rotation of K4: V - E + F = 4 - 6 + 2.
  RotationSystem bad = rot;
  std::swap(bad.order[0][0], bad.order[0][1]);
  CHECK_THROWS_AS(planar_dual(k4, bad), PreconditionError);
  CHECK_THROWS_AS(parse_rotation("0: 0 1\n", k4), Error);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [g, r] = random_plane_graph(4 + trial % 5, rng);
    const PlanarDual once = planar_dual(g, r);
    CHECK(once.dual.edge_count() == g.edge_count());
    CHECK(once.faces.size() == static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 2));
    const PlanarDual twice = planar_dual(once.dual, once.rotation);
    CHECK(twice.dual.vertex_count() == g.vertex_count());
    auto a = g.degrees();
    auto b = twice.dual.degrees();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("Schnetz twist") {
  const Multigraph g = read_graph_file(GPERM_TEST_DATA "/twist10.txt");
  const TwistPairing cut{0, 1, 2, 3};
  const std::vector<Vertex> side{4, 7, 8};
  const Multigraph t = apply_schnetz_twist(g, cut, side);
  CHECK(regular_degree(t) == 4);
  CHECK(t.is_simple());
  CHECK(apply_schnetz_twist(t, cut, side) == g);
  CHECK(canonical_form(t) != canonical_form(g));

  // Octahedron: vertex 4 is adjacent to 5, outside the cut. K5: nothing is
  // left on the other side.
  const std::vector<Vertex> one{4};
  CHECK_THROWS_AS(apply_schnetz_twist(octahedron(), TwistPairing{0, 1, 2, 3}, one),
                  PreconditionError);
  CHECK_THROWS_AS(apply_schnetz_twist(complete_graph(5), TwistPairing{0, 1, 2, 3}, one),
                  PreconditionError);
  // {4} is not separated from the rest by the cut.
  const std::vector<Vertex> bad{4};
  CHECK_THROWS_AS(apply_schnetz_twist(g, cut, bad), PreconditionError);
}
