#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/graphs.hpp"

namespace gperm {

inline constexpr int kMinCensusOrder = 5;
inline constexpr int kMaxCensusOrder = 10;
/// Largest order generate_regular accepts for any degree.
inline constexpr int kMaxGenerateOrder = 12;

/// All connected simple d-regular graphs on n vertices, one per isomorphism
/// class, sorted by canonical form and relabelled into canonical order.
///
/// Partial graphs are grown one vertex at a time: the fullest unfinished
/// vertex receives all its missing neighbours at once, chosen among the
/// unfinished vertices it is not yet adjacent to. Isomorphic partial graphs
/// are merged after every step. A nonzero seed relabels every partial graph
/// at random before it is expanded; the classes found do not depend on it.
std::vector<Multigraph> generate_regular(int n, int degree = 4, std::uint64_t seed = 0);

/// Rebuilds the graph a canonical_form string describes.
Multigraph graph_from_canonical(std::string_view form);

/// Every edge cut with at least two vertices on each side has at least six
/// edges. Requires a connected 4-regular graph.
bool is_primitive(const Multigraph& gamma);

/// Some three vertices disconnect the graph when removed.
bool has_three_vertex_cut(const Multigraph& g);

/// Which graphs a census counts. Irreducible graphs are primitive graphs
/// without a three-vertex cut; graphs with such a cut factor into smaller
/// ones and are left out of the usual census tables.
enum class CensusFilter { Primitive, Irreducible };

CensusFilter parse_census_filter(std::string_view name);

struct CensusEntry {
  Multigraph graph;
  int order = 0;
  int class_id = 0;
  bool primitive = false;
  bool three_vertex_cut = false;
  /// Canonical residue of the decompletion at vertex 0, when it is connected.
  std::optional<int> residue;
  /// All connected decompletions gave the same residue.
  bool decompletions_agree = true;

  bool irreducible() const { return primitive && !three_vertex_cut; }
  bool counted(CensusFilter f) const {
    return f == CensusFilter::Primitive ? primitive : irreducible();
  }
};

struct ExpectedRow {
  int primitive_count = 0;
  /// residue -> multiplicity
  std::map<int, int> residues;
};

/// Expected values keyed by vertex count.
using ExpectedTable = std::map<int, ExpectedRow>;

ExpectedTable parse_expected_table(std::string_view json_text);
ExpectedTable load_expected_table(const std::string& path);
/// $GPERM_FIXTURES/appendix_a.json, or the fixture shipped with the sources.
std::string default_fixture_path();

struct CensusSummary {
  int order = 0;
  int graphs = 0;
  int primitive = 0;
  int irreducible = 0;
  CensusFilter filter = CensusFilter::Irreducible;
  int counted = 0;
  /// Residues of the counted graphs.
  std::map<int, int> residues;
  bool decompletions_agree = true;
  /// Unset when the table has no row for this order.
  std::optional<bool> pass;
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  std::vector<CensusSummary> summaries;
  bool pass = true;
};

/// Evaluates every graph (in parallel over `jobs` workers, 0 meaning all
/// cores) and compares the counted graphs and their residue multiset per
/// order.
CensusReport census_report(const std::vector<Multigraph>& graphs, const ExpectedTable* expected,
                           int jobs = 0, CensusFilter filter = CensusFilter::Irreducible);
/// generate_regular(n, 4) followed by census_report.
CensusReport census_order(int n, const ExpectedTable* expected, int jobs = 0,
                          CensusFilter filter = CensusFilter::Irreducible);

/// "n\tclass_id\tprimitive\tresidue\tirreducible" rows under a header line.
std::string census_tsv(const CensusReport& report);
/// e.g. "order 8: 6 graphs, 5 primitive, 4 irreducible; counted 4, residues {0:2, 1:2} PASS"
std::string summary_line(const CensusSummary& s);

}  // namespace gperm
