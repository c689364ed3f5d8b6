#include "hypersketch/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "hypersketch/errors.hpp"

namespace hypersketch {

namespace {

void validate_edge(const Hyperedge& e, int n) {
  if (e.endpoints.empty()) throw std::invalid_argument("hyperedge has no endpoints");
  if (!(e.weight > 0.0) || !std::isfinite(e.weight))
    throw std::invalid_argument("hyperedge weight must be positive and finite");
  for (int v : e.endpoints) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("endpoint " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n) + ")");
  }
}

void normalize_endpoints(std::vector<int>& endpoints) {
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
}

}  // namespace

Hyperedge make_edge(std::vector<int> endpoints, double weight, int n) {
  normalize_endpoints(endpoints);
  Hyperedge e{std::move(endpoints), weight};
  validate_edge(e, n);
  return e;
}

Hypergraph::Hypergraph(int vertex_count, std::vector<Hyperedge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& e : edges_) {
    normalize_endpoints(e.endpoints);
    validate_edge(e, n_);
  }
}

int Hypergraph::max_cardinality() const {
  int r = 0;
  for (const auto& e : edges_) r = std::max(r, e.cardinality());
  return r;
}

double Hypergraph::total_weight() const {
  double total = 0.0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

Cut Cut::from_true_side(int n, const std::vector<int>& s) {
  std::vector<bool> side(static_cast<std::size_t>(n), false);
  for (int v : s) {
    if (v < 0 || v >= n) throw std::invalid_argument("cut vertex out of range");
    side[static_cast<std::size_t>(v)] = true;
  }
  return Cut(std::move(side));
}

Cut Cut::complement() const {
  std::vector<bool> flipped(side_.size());
  for (std::size_t i = 0; i < side_.size(); ++i) flipped[i] = !side_[i];
  return Cut(std::move(flipped));
}

Cut Cut::canonical() const {
  if (!side_.empty() && side_[0]) return complement();
  return *this;
}

bool Cut::is_nontrivial() const {
  bool has_true = false, has_false = false;
  for (bool b : side_) (b ? has_true : has_false) = true;
  return has_true && has_false;
}

std::string Cut::to_bitstring() const {
  const Cut c = canonical();
  std::string s;
  s.reserve(c.side_.size());
  for (bool b : c.side_) s.push_back(b ? '1' : '0');
  return s;
}

bool Cut::operator==(const Cut& o) const {
  return canonical().side_ == o.canonical().side_;
}

bool Cut::operator<(const Cut& o) const {
  const auto a = canonical();
  const auto b = o.canonical();
  if (a.side_.size() != b.side_.size()) return a.side_.size() < b.side_.size();
  return a.side_ < b.side_;
}

double cut_weight(const Hypergraph& h, const Cut& c) {
  if (c.size() != static_cast<std::size_t>(h.vertex_count()))
    throw std::invalid_argument("cut length does not match vertex count");
  double total = 0.0;
  for (const auto& e : h.edges()) {
    bool has_true = false, has_false = false;
    for (int v : e.endpoints) {
      (c.in_s(v) ? has_true : has_false) = true;
      if (has_true && has_false) {
        total += e.weight;
        break;
      }
    }
  }
  return total;
}

std::vector<WeightedCut> enumerate_cuts_below(const Hypergraph& h, double bound) {
  const int n = h.vertex_count();
  if (n > 26)
    throw ResourceLimitError("enumerate_cuts_below guarded at n <= 26, got n = " +
                             std::to_string(n));
  std::vector<WeightedCut> out;
  if (n < 2) return out;

  // Vertex 0 stays on the false side; bit v-1 of the mask is vertex v.
  std::vector<std::uint32_t> edge_bits(h.edge_count(), 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (int v : h.edge(i).endpoints) edge_bits[i] |= (1u << v);
  }
  const std::uint32_t full = (1u << n) - 1u;
  const std::uint32_t masks = (1u << (n - 1));
  for (std::uint32_t m = 1; m < masks; ++m) {
    const std::uint32_t s = m << 1;
    double w = 0.0;
    for (std::size_t i = 0; i < edge_bits.size(); ++i) {
      const std::uint32_t bits = edge_bits[i];
      if ((bits & s) != 0 && (bits & ~s & full) != 0) w += h.edge(i).weight;
    }
    if (w <= bound) {
      std::vector<bool> side(static_cast<std::size_t>(n), false);
      for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = (s >> v) & 1u;
      out.push_back({Cut(std::move(side)), w});
    }
  }
  std::sort(out.begin(), out.end(), [](const WeightedCut& a, const WeightedCut& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.cut.side() < b.cut.side();
  });
  return out;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> to_sub(static_cast<std::size_t>(h.vertex_count()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const int v = verts[i];
    if (v < 0 || v >= h.vertex_count())
      throw std::invalid_argument("induced_subhypergraph: vertex " + std::to_string(v) +
                                  " out of range");
    to_sub[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }

  InducedSubhypergraph result;
  result.vertex_of = verts;
  std::vector<Hyperedge> sub_edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    bool inside = true;
    for (int v : e.endpoints) {
      if (to_sub[static_cast<std::size_t>(v)] < 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    Hyperedge mapped;
    mapped.weight = e.weight;
    mapped.endpoints.reserve(e.endpoints.size());
    for (int v : e.endpoints) mapped.endpoints.push_back(to_sub[static_cast<std::size_t>(v)]);
    sub_edges.push_back(std::move(mapped));
    result.edge_of.push_back(static_cast<int>(i));
  }
  result.sub = Hypergraph(static_cast<int>(verts.size()), std::move(sub_edges));
  return result;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

ComponentLabels connected_components(const Hypergraph& h) {
  const int n = h.vertex_count();
  Dsu dsu(n);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 1; i < e.endpoints.size(); ++i) dsu.unite(e.endpoints[0], e.endpoints[i]);
  }
  ComponentLabels result;
  result.label.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int root = dsu.find(v);
    if (result.label[static_cast<std::size_t>(root)] < 0)
      result.label[static_cast<std::size_t>(root)] = result.count++;
    result.label[static_cast<std::size_t>(v)] = result.label[static_cast<std::size_t>(root)];
  }
  return result;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

struct LineTokens {
  int line_no = 0;
  std::vector<std::string_view> tokens;
};

std::vector<LineTokens> tokenize_lines(std::string_view text) {
  std::vector<LineTokens> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    LineTokens lt{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) lt.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!lt.tokens.empty()) lines.push_back(std::move(lt));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

long parse_long(std::string_view tok, int line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

double parse_weight(std::string_view tok, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected weight, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto& header = lines[0];
  if (header.tokens.size() != 2)
    throw ParseError(header.line_no, "header must be 'n m'");
  const long n = parse_long(header.tokens[0], header.line_no, "vertex count");
  const long m = parse_long(header.tokens[1], header.line_no, "edge count");
  if (n < 0 || m < 0) throw ParseError(header.line_no, "negative count in header");

  std::vector<Hyperedge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::size_t next = 1;
  for (long i = 0; i < m; ++i, ++next) {
    if (next >= lines.size())
      throw ParseError(lines.back().line_no, "expected " + std::to_string(m) +
                                                 " edge lines, got " + std::to_string(i));
    const auto& lt = lines[next];
    if (lt.tokens.size() < 2) throw ParseError(lt.line_no, "edge line needs 'w k v1 ... vk'");
    const double w = parse_weight(lt.tokens[0], lt.line_no);
    if (!(w > 0.0) || !std::isfinite(w))
      throw ParseError(lt.line_no, "weight must be positive and finite");
    const long k = parse_long(lt.tokens[1], lt.line_no, "cardinality");
    if (k < 1) throw ParseError(lt.line_no, "cardinality must be at least 1");
    if (static_cast<long>(lt.tokens.size()) != 2 + k)
      throw ParseError(lt.line_no, "expected " + std::to_string(k) + " endpoints, got " +
                                       std::to_string(lt.tokens.size() - 2));
    Hyperedge e;
    e.weight = w;
    for (long j = 0; j < k; ++j) {
      const long v = parse_long(lt.tokens[2 + j], lt.line_no, "endpoint");
      if (v < 0 || v >= n)
        throw ParseError(lt.line_no, "endpoint " + std::to_string(v) + " out of range [0," +
                                         std::to_string(n) + ")");
      e.endpoints.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  if (next < lines.size())
    throw ParseError(lines[next].line_no, "unexpected trailing content");
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const auto& e : h.edges()) {
    out += format_double(e.weight);
    out += " " + std::to_string(e.cardinality());
    for (int v : e.endpoints) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace hypersketch
