#include "itl/pattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace itl {

MultiHypergraph clique(int n) {
  MultiHypergraph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge({u, v});
  return g;
}

MultiHypergraph complete_bipartite(int a, int b) {
  MultiHypergraph g;
  g.n = a + b;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge({u, a + v});
  return g;
}

MultiHypergraph path_graph(int edge_count) {
  MultiHypergraph g;
  g.n = edge_count + 1;
  for (int i = 0; i < edge_count; ++i) g.add_edge({i, i + 1});
  return g;
}

MultiHypergraph cycle_graph(int len) {
  if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
  MultiHypergraph g;
  g.n = len;
  for (int i = 0; i < len; ++i) g.add_edge({i, (i + 1) % len});
  return g;
}

MultiHypergraph star(int leaves) {
  MultiHypergraph g;
  g.n = leaves + 1;
  for (int i = 1; i <= leaves; ++i) g.add_edge({0, i});
  return g;
}

MultiHypergraph matching(int edge_count) {
  MultiHypergraph g;
  g.n = 2 * edge_count;
  for (int i = 0; i < edge_count; ++i) g.add_edge({2 * i, 2 * i + 1});
  return g;
}

Pattern Pattern::finite(std::vector<MultiHypergraph> members) {
  if (members.empty()) throw std::invalid_argument("finite family must be nonempty");
  for (auto& m : members)
    if (m.edges.empty()) throw std::invalid_argument("family member must have an edge");
  Pattern p;
  p.kind = Kind::Finite;
  p.members_ = std::move(members);
  return p;
}

Pattern Pattern::named(Kind kind, int param) {
  Pattern p;
  p.kind = kind;
  p.param = param;
  switch (kind) {
    case Kind::Clique:
      if (param < 2) throw std::invalid_argument("clique pattern needs t >= 2");
      break;
    case Kind::Path:
      if (param < 1) throw std::invalid_argument("path pattern needs >= 1 edge");
      break;
    case Kind::Dumbbell:
      if (param < 2) throw std::invalid_argument("dumbbell pattern needs r >= 2");
      break;
    default:
      break;
  }
  return p;
}

Pattern Pattern::one_uniform(std::vector<int> degs) {
  if (degs.empty()) throw std::invalid_argument("degree sequence must be nonempty");
  for (int d : degs)
    if (d < 1) throw std::invalid_argument("degrees must be positive");
  if (!std::is_sorted(degs.rbegin(), degs.rend()))
    throw std::invalid_argument("degree sequence must be nonincreasing");
  Pattern p;
  p.kind = Kind::OneUniform;
  p.degs = std::move(degs);
  return p;
}

std::optional<Pattern> Pattern::parse(const std::string& s) {
  try {
    if (s == "cycles") return named(Kind::AllCycles);
    if (s == "even-cycles") return named(Kind::EvenCycles);
    if (s == "odd-cycles") return named(Kind::OddCycles);
    if (s == "P1uP2") return named(Kind::StarUnionEdge);
    if (s == "P3K3") return named(Kind::P3K3);
    if (s.size() > 1 && s[0] == 'K' && s.find(',') == std::string::npos)
      return named(Kind::Clique, std::stoi(s.substr(1)));
    if (s.size() > 1 && s[0] == 'P') return named(Kind::Path, std::stoi(s.substr(1)));
    if (s.rfind("dumbbell", 0) == 0) return named(Kind::Dumbbell, std::stoi(s.substr(8)));
    if (s.rfind("oneuniform:", 0) == 0) {
      std::vector<int> degs;
      std::string rest = s.substr(11);
      size_t pos = 0;
      while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        degs.push_back(std::stoi(rest.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return one_uniform(std::move(degs));
    }
  } catch (...) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string Pattern::name() const {
  switch (kind) {
    case Kind::Finite: {
      std::string out = "family(" + std::to_string(members_.size()) + ")";
      return out;
    }
    case Kind::AllCycles: return "cycles";
    case Kind::EvenCycles: return "even-cycles";
    case Kind::OddCycles: return "odd-cycles";
    case Kind::Clique: return "K" + std::to_string(param);
    case Kind::Path: return "P" + std::to_string(param);
    case Kind::StarUnionEdge: return "P1uP2";
    case Kind::P3K3: return "P3K3";
    case Kind::Dumbbell: return "dumbbell" + std::to_string(param);
    case Kind::OneUniform: {
      std::string out = "oneuniform:";
      for (size_t i = 0; i < degs.size(); ++i)
        out += (i ? "," : "") + std::to_string(degs[i]);
      return out;
    }
  }
  return "?";
}

bool Pattern::is_finite_family() const {
  switch (kind) {
    case Kind::AllCycles:
    case Kind::EvenCycles:
    case Kind::OddCycles:
      return false;
    default:
      return true;
  }
}

std::vector<MultiHypergraph> Pattern::members() const {
  switch (kind) {
    case Kind::Finite:
      return members_;
    case Kind::Clique:
      return {clique(param)};
    case Kind::Path:
      return {path_graph(param)};
    case Kind::StarUnionEdge: {
      MultiHypergraph g;
      g.n = 5;
      g.add_edge({0, 1});
      g.add_edge({2, 3});
      g.add_edge({3, 4});
      return {g};
    }
    case Kind::P3K3:
      return {path_graph(3), clique(3)};
    case Kind::Dumbbell: {
      MultiHypergraph g;
      g.n = param;
      Edge core;
      for (int v = 0; v < param; ++v) core.push_back(v);
      g.add_edge(core);
      for (int v = 0; v < param; ++v) g.add_edge({v});
      return {g};
    }
    case Kind::OneUniform: {
      MultiHypergraph g;
      g.n = (int)degs.size();
      for (size_t i = 0; i < degs.size(); ++i) g.add_edge({(int)i}, degs[i]);
      return {g};
    }
    default:
      throw std::logic_error("members() called on an infinite family");
  }
}

namespace {

// Underlying simple loopless 2-uniform adjacency of the 2-edge part.
std::vector<std::vector<int>> simple_adj(const MultiHypergraph& f) {
  std::vector<std::vector<int>> adj(f.n);
  for (auto& [k, m] : f.edges)
    if (k.size() == 2 && k[0] != k[1]) {
      adj[k[0]].push_back(k[1]);
      adj[k[1]].push_back(k[0]);
    }
  return adj;
}

bool has_any_cycle(const MultiHypergraph& f) {
  // A cycle of length >= 3 exists iff the underlying simple graph has an edge
  // beyond a spanning forest; parallel classes collapse first, so a parallel
  // pair alone never counts.
  std::vector<int> parent(f.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto& [k, m] : f.edges) {
    if (k.size() != 2 || k[0] == k[1]) continue;
    int a = find(k[0]), b = find(k[1]);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

bool is_bipartite(const MultiHypergraph& f) {
  auto adj = simple_adj(f);
  std::vector<int> side(f.n, -1);
  for (int s = 0; s < f.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Blocks (2-connected components) of the underlying simple graph; a block
// contains an even cycle iff it is neither a single edge nor an odd cycle.
bool has_even_cycle(const MultiHypergraph& f) {
  auto adj = simple_adj(f);
  int n = f.n;
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  int counter = 0;
  std::vector<std::pair<int, int>> stack;
  bool found = false;

  auto process_block = [&](std::vector<std::pair<int, int>> block_edges) {
    if (found || block_edges.size() <= 1) return;
    VertexSet vs;
    for (auto& [a, b] : block_edges) {
      vs.add(a);
      vs.add(b);
    }
    int v = vs.count();
    int e = (int)block_edges.size();
    // 2-connected with e >= v+1 always contains an even cycle; e == v is a
    // single cycle, even iff v is even.
    if (e >= v + 1 || v % 2 == 0) found = true;
  };

  std::function<void(int)> dfs = [&](int root) {
    std::vector<std::tuple<int, size_t>> call{{root, 0}};
    num[root] = low[root] = counter++;
    while (!call.empty()) {
      auto& [v, idx] = call.back();
      if (idx < adj[v].size()) {
        int u = adj[v][idx++];
        if (num[u] < 0) {
          stack.push_back({v, u});
          num[u] = low[u] = counter++;
          parent[u] = v;
          call.push_back({u, 0});
        } else if (u != parent[v] && num[u] < num[v]) {
          stack.push_back({v, u});
          low[v] = std::min(low[v], num[u]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) {
          int p = std::get<0>(call.back());
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            std::vector<std::pair<int, int>> block;
            while (!stack.empty()) {
              auto pr = stack.back();
              stack.pop_back();
              block.push_back(pr);
              if (pr == std::make_pair(p, v)) break;
            }
            process_block(std::move(block));
          }
        }
      }
    }
  };
  for (int v = 0; v < n && !found; ++v)
    if (num[v] < 0) dfs(v);
  return found;
}

bool contains_dumbbell(const MultiHypergraph& f, int r) {
  for (auto& [k, m] : f.edges) {
    if ((int)k.size() != r) continue;
    bool distinct = true;
    for (size_t i = 1; i < k.size(); ++i)
      if (k[i] == k[i - 1]) distinct = false;
    if (!distinct) continue;
    bool all_loops = true;
    for (int v : k)
      if (f.loop1_count(v) < 1) all_loops = false;
    if (all_loops) return true;
  }
  return false;
}

bool contains_one_uniform(const MultiHypergraph& f, const std::vector<int>& degs) {
  std::vector<int> x;
  for (auto& [k, m] : f.edges)
    if (k.size() == 1) x.push_back(m);
  if (x.size() < degs.size()) return false;
  std::sort(x.rbegin(), x.rend());
  for (size_t i = 0; i < degs.size(); ++i)
    if (x[i] < degs[i]) return false;
  return true;
}

}  // namespace

bool family_contains(const Pattern& p, const MultiHypergraph& f) {
  switch (p.kind) {
    case Pattern::Kind::AllCycles:
      return has_any_cycle(f);
    case Pattern::Kind::EvenCycles:
      return has_even_cycle(f);
    case Pattern::Kind::OddCycles:
      return !is_bipartite(f);
    case Pattern::Kind::Dumbbell:
      return contains_dumbbell(f, p.param);
    case Pattern::Kind::OneUniform:
      return contains_one_uniform(f, p.degs);
    case Pattern::Kind::Clique:
    case Pattern::Kind::Path:
    case Pattern::Kind::StarUnionEdge:
    case Pattern::Kind::P3K3:
    case Pattern::Kind::Finite: {
      for (auto& h : p.members())
        if (contains(f, h)) return true;
      return false;
    }
  }
  return false;
}

std::optional<FreeShape> free_characterization(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::StarUnionEdge:
      return FreeShape::MatchingStarOrK4;
    case Pattern::Kind::Path:
      if (p.param == 3) return FreeShape::TrianglesAndStars;
      return std::nullopt;
    case Pattern::Kind::P3K3:
      return FreeShape::StarsOnly;
    case Pattern::Kind::AllCycles:
      return FreeShape::Forest;
    case Pattern::Kind::OneUniform:
      return FreeShape::OneUniformFormula;
    default:
      return std::nullopt;
  }
}

}  // namespace itl
