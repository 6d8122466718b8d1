// Canonical labelling by partition refinement and individualisation.
//
// The certificate is the lexicographically largest upper-triangle adjacency
// string over all leaves of the search tree. Refinement and cell choice only
// look at the partition structure, never at vertex labels, so isomorphic
// graphs explore isomorphic trees.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gperm/error.hpp"
#include "gperm/graphs.hpp"

namespace gperm {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::string run() {
    // Initial cells by degree, ascending.
    Partition p;
    std::vector<std::pair<int, int>> by_degree;
    for (int v = 0; v < n_; ++v) by_degree.emplace_back(std::popcount(adj_[v]), v);
    std::sort(by_degree.begin(), by_degree.end());
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
      if (i == 0 || by_degree[i].first != by_degree[i - 1].first) p.emplace_back();
      p.back().push_back(by_degree[i].second);
    }
    search(refine(std::move(p)));
    return std::to_string(n_) + ":" + best_;
  }

 private:
  int count_into(int v, std::uint64_t mask) const { return std::popcount(adj_[v] & mask); }

  Partition refine(Partition p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < p.size() && !changed; ++w) {
        std::uint64_t mask = 0;
        for (int v : p[w]) mask |= std::uint64_t{1} << v;
        for (std::size_t x = 0; x < p.size(); ++x) {
          if (p[x].size() < 2) continue;
          std::vector<std::pair<int, int>> keyed;
          for (int v : p[x]) keyed.emplace_back(count_into(v, mask), v);
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          Partition pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
    return p;
  }

  std::string leaf(const Partition& p) const {
    std::vector<int> order;
    for (const Cell& c : p) order.push_back(c.front());
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        bits.push_back((adj_[order[i]] >> order[j]) & 1U ? '1' : '0');
      }
    }
    return bits;
  }

  bool twins(int a, int b) const {
    const std::uint64_t strip = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    return (adj_[a] & ~strip) == (adj_[b] & ~strip);
  }

  void search(const Partition& p) {
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;
    }
    if (target == p.size()) {
      std::string cert = leaf(p);
      if (cert > best_) best_ = std::move(cert);
      return;
    }
    std::vector<int> tried;
    for (int v : p[target]) {
      // Swapping twins fixes the current partition, so their branches agree.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Partition next = p;
      Cell rest;
      for (int u : p[target]) {
        if (u != v) rest.push_back(u);
      }
      next[target] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      search(refine(std::move(next)));
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Multigraph& g) {
  if (!g.is_simple()) throw PreconditionError("canonical_form supports simple graphs only");
  if (g.vertex_count() > 64) throw LimitError("canonical_form supports at most 64 vertices");
  return Canonizer(g).run();
}

}  // namespace gperm
