#include "tropmat/nd_type.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropmat {

namespace {

// Union-find over K_A nodes: positions 0..n-1, coordinates n..n+d-1.
struct Components {
  std::vector<int> parent;
  int merges = 0;

  explicit Components(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    ++merges;
    return true;
  }
};

Components components_of(const NdType& a, bool* acyclic) {
  Components c(a.n() + a.d());
  bool tree_like = true;
  for (int i = 0; i < a.n(); ++i) {
    for (int j : labels(a[i])) {
      if (!c.unite(i, a.n() + j - 1)) tree_like = false;
    }
  }
  if (acyclic != nullptr) *acyclic = tree_like;
  return c;
}

}  // namespace

NdType::NdType(int d, std::vector<Mask> entries) : d_(d), entries_(std::move(entries)) {
  if (d < 1 || d > kMaxLabels) {
    throw std::invalid_argument("d must lie in 1..16, got " + std::to_string(d));
  }
  if (entries_.empty()) throw std::invalid_argument("a type needs at least one position");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " is empty");
    }
    if (!is_subset(entries_[i], full_mask(d))) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " has a label above d=" +
                                  std::to_string(d));
    }
  }
}

NdType NdType::parse(const std::string& text, int d) {
  std::string body;
  for (char c : text) {
    if (c != ' ') body.push_back(c);
  }
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("type must look like (12,3): " + text);
  }
  body = body.substr(1, body.size() - 2);
  std::vector<Mask> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = pos;
    int depth = 0;
    while (end < body.size() && (body[end] != ',' || depth > 0)) {
      if (body[end] == '{') ++depth;
      if (body[end] == '}') --depth;
      ++end;
    }
    entries.push_back(parse_mask(body.substr(pos, end - pos)));
    pos = end + 1;
  }
  return NdType(d, std::move(entries));
}

Mask NdType::support() const {
  Mask m = 0;
  for (Mask e : entries_) m |= e;
  return m;
}

bool NdType::is_total() const {
  for (Mask e : entries_) {
    if (popcount(e) != 1) return false;
  }
  return true;
}

bool NdType::entrywise_subset_of(const NdType& other) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!is_subset(entries_[i], other.entries_[i])) return false;
  }
  return true;
}

std::string NdType::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += mask_to_string(entries_[i]);
  }
  s.push_back(')');
  return s;
}

std::strong_ordering operator<=>(const NdType& a, const NdType& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::size_t NdTypeHash::operator()(const NdType& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.d()) * 0x9E3779B97F4A7C15ull;
  for (Mask e : t.entries()) {
    h ^= e + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

TypeGraph type_graph(const NdType& a) {
  TypeGraph g{a.n(), a.d(), {}};
  for (int i = 0; i < a.n(); ++i) {
    for (int j : labels(a[i])) g.edges.emplace_back(i + 1, j);
  }
  return g;
}

int component_count(const NdType& a) {
  Components c = components_of(a, nullptr);
  return a.n() + a.d() - c.merges;
}

int dimension(const NdType& a) { return component_count(a) - 1; }

int cell_dimension(const NdType& a) { return a.d() - component_count(a); }

bool type_graph_acyclic(const NdType& a) {
  bool acyclic = true;
  components_of(a, &acyclic);
  return acyclic;
}

int edge_count(const NdType& a) {
  int total = 0;
  for (Mask e : a.entries()) total += popcount(e);
  return total;
}

std::string type_graph_dot(const NdType& a) {
  std::ostringstream out;
  out << "graph K {\n  label=\"" << a.str() << "\";\n";
  for (int i = 1; i <= a.n(); ++i) out << "  N" << i << " [shape=box];\n";
  for (int j = 1; j <= a.d(); ++j) out << "  D" << j << " [shape=circle];\n";
  for (const auto& [i, j] : type_graph(a).edges) out << "  N" << i << " -- D" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tropmat
