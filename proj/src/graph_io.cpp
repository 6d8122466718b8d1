#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "gperm/error.hpp"
#include "gperm/graphs.hpp"

namespace gperm {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view token, std::string_view what) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(token) + "'");
  }
  return value;
}

/// Non-empty lines with '#' comments stripped.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

Multigraph parse_edgelist(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty edgelist");
  const auto header = split_ws(lines[0]);
  if (header.size() != 2) throw ParseError("edgelist header must be 'n m'");
  const long long n = parse_int(header[0], "vertex count");
  const long long m = parse_int(header[1], "edge count");
  if (n <= 0) throw ParseError("empty graph");
  if (m < 0) throw ParseError("negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = split_ws(lines[i]);
    if (tok.size() != 2) {
      throw ParseError("edge line " + std::to_string(i) + " must hold two vertex indices");
    }
    const long long u = parse_int(tok[0], "edge endpoint");
    const long long v = parse_int(tok[1], "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge line " + std::to_string(i) + " has an endpoint out of range");
    }
    if (u == v) throw ParseError("edge line " + std::to_string(i) + " is a loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph parse_graph6(std::string_view text) {
  auto s = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("graph6 character out of range");
  }
  auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(s[i] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != 126) {
    if (s.size() < 4) throw ParseError("truncated graph6 header");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (s.size() < 8) throw ParseError("truncated graph6 header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n == 0) throw ParseError("empty graph");
  if (n > 1'000'000) throw ParseError("graph6 graph too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) +
                     " bytes, expected " + std::to_string(bytes));
  }
  auto bit = [&](std::uint64_t k) {
    return (byte(pos + k / 6) >> (5 - k % 6)) & 1U;
  };
  for (std::uint64_t k = bits; k < bytes * 6; ++k) {
    if (bit(k)) throw ParseError("graph6 padding bits must be zero");
  }
  const int nv = static_cast<int>(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::uint64_t k = 0;
  for (int j = 1; j < nv; ++j) {
    for (int i = 0; i < j; ++i) adj[i][j] = bit(k++) != 0;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (adj[i][j]) edges.push_back({i, j});
    }
  }
  return Multigraph(nv, std::move(edges));
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edgelist" || name == "el") return GraphFormat::Edgelist;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

Multigraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

GraphFormat detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    return line.find_first_of(" \t") == std::string_view::npos ? GraphFormat::Graph6
                                                               : GraphFormat::Edgelist;
  }
  throw ParseError("empty input");
}

std::vector<Multigraph> parse_graph6_lines(std::string_view text) {
  std::vector<Multigraph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (!line.empty()) out.push_back(parse_graph6(line));
  }
  return out;
}

std::string format_graph(const Multigraph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) : to_edgelist(g);
}

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw PreconditionError("graph6 cannot encode parallel edges");
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  if (n == 0) throw PreconditionError("empty graph");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  unsigned acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_edgelist(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

RotationSystem parse_rotation(std::string_view text, const Multigraph& g) {
  RotationSystem rot;
  rot.order.resize(static_cast<std::size_t>(g.vertex_count()));
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (const auto line : content_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("rotation line needs 'v: e1 e2 ...'");
    const long long v = parse_int(trim(line.substr(0, colon)), "rotation vertex");
    if (v < 0 || v >= g.vertex_count()) throw ParseError("rotation vertex out of range");
    if (seen[v]) throw ParseError("rotation lists vertex " + std::to_string(v) + " twice");
    seen[v] = true;
    for (const auto tok : split_ws(line.substr(colon + 1))) {
      rot.order[v].push_back(static_cast<EdgeIndex>(parse_int(tok, "rotation edge")));
    }
  }
  try {
    rot.validate(g);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return rot;
}

std::string format_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << v << ':';
    for (EdgeIndex e : rot.order[v]) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace gperm
