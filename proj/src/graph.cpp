#include "itl/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace itl {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (has(v)) out.push_back(v);
  return out;
}

long long MultiHypergraph::e() const {
  long long total = 0;
  for (auto& [k, m] : edges) total += m;
  return total;
}

long long MultiHypergraph::e_size(int i) const {
  long long total = 0;
  for (auto& [k, m] : edges)
    if ((int)k.size() == i) total += m;
  return total;
}

int MultiHypergraph::multiplicity(const Edge& key) const {
  auto it = edges.find(key);
  return it == edges.end() ? 0 : it->second;
}

int MultiHypergraph::multiplicity(int u, int v) const {
  Edge key{u, v};
  if (key[0] > key[1]) std::swap(key[0], key[1]);
  return multiplicity(key);
}

void MultiHypergraph::add_edge(Edge key, int mult) {
  if (mult <= 0) throw std::invalid_argument("edge multiplicity must be positive");
  if (key.empty()) throw std::invalid_argument("empty edge");
  std::sort(key.begin(), key.end());
  for (int v : key)
    if (v < 0 || v >= n) throw std::out_of_range("edge vertex out of range");
  edges[std::move(key)] += mult;
}

void MultiHypergraph::remove_unit(const Edge& key) {
  auto it = edges.find(key);
  if (it == edges.end()) throw std::invalid_argument("edge not present");
  if (--it->second == 0) edges.erase(it);
}

bool MultiHypergraph::is_simple() const {
  for (auto& [k, m] : edges) {
    if (m != 1) return false;
    for (size_t i = 1; i < k.size(); ++i)
      if (k[i] == k[i - 1]) return false;
  }
  return true;
}

bool MultiHypergraph::two_uniform() const {
  for (auto& [k, m] : edges)
    if (k.size() != 2) return false;
  return true;
}

bool MultiHypergraph::loopless_two_uniform() const {
  for (auto& [k, m] : edges)
    if (k.size() != 2 || k[0] == k[1]) return false;
  return true;
}

bool MultiHypergraph::one_uniform() const {
  for (auto& [k, m] : edges)
    if (k.size() != 1) return false;
  return true;
}

int MultiHypergraph::max_edge_size() const {
  int mx = 0;
  for (auto& [k, m] : edges) mx = std::max<int>(mx, k.size());
  return mx;
}

VertexSet MultiHypergraph::covered_vertices() const {
  VertexSet s;
  for (auto& [k, m] : edges)
    for (int v : k) s.add(v);
  return s;
}

bool MultiHypergraph::has_isolated_vertex() const {
  return covered_vertices().count() < n;
}

std::vector<int> MultiHypergraph::degrees2() const {
  std::vector<int> deg(n, 0);
  for (auto& [k, m] : edges)
    if (k.size() == 2) {
      deg[k[0]] += m;
      deg[k[1]] += m;
    }
  return deg;
}

int MultiHypergraph::loop1_count(int v) const { return multiplicity(Edge{v}); }

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};
}  // namespace

std::vector<std::vector<int>> MultiHypergraph::components() const {
  UnionFind uf(n);
  for (auto& [k, m] : edges)
    for (size_t i = 1; i < k.size(); ++i) uf.unite(k[0], k[i]);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : by_root) out.push_back(vs);
  return out;
}

MultiHypergraph MultiHypergraph::relabeled(const std::vector<int>& perm) const {
  MultiHypergraph out;
  out.n = n;
  for (auto& [k, m] : edges) {
    Edge key;
    key.reserve(k.size());
    for (int v : k) key.push_back(perm[v]);
    std::sort(key.begin(), key.end());
    out.edges[std::move(key)] += m;
  }
  return out;
}

MultiHypergraph MultiHypergraph::induced_compact(const std::vector<int>& keep) const {
  std::vector<int> newlabel(n, -1);
  for (size_t i = 0; i < keep.size(); ++i) newlabel[keep[i]] = (int)i;
  MultiHypergraph out;
  out.n = (int)keep.size();
  for (auto& [k, m] : edges) {
    Edge key;
    bool ok = true;
    for (int v : k) {
      if (newlabel[v] < 0) {
        ok = false;
        break;
      }
      key.push_back(newlabel[v]);
    }
    if (!ok) continue;
    std::sort(key.begin(), key.end());
    out.edges[std::move(key)] += m;
  }
  return out;
}

MultiHypergraph MultiHypergraph::without_isolated() const {
  VertexSet cov = covered_vertices();
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (cov.has(v)) keep.push_back(v);
  return induced_compact(keep);
}

MultiHypergraph contract(const MultiHypergraph& g, VertexSet i) {
  if (i.empty()) throw std::invalid_argument("contracting the empty set");
  for (int v : i.to_vector())
    if (v >= g.n) throw std::out_of_range("contraction vertex out of range");
  // Kept vertices take labels 0..n-|I|-1 in order; the merged vertex z is last.
  std::vector<int> newlabel(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (!i.has(v)) newlabel[v] = next++;
  int z = next;
  for (int v = 0; v < g.n; ++v)
    if (i.has(v)) newlabel[v] = z;
  MultiHypergraph out;
  out.n = z + 1;
  for (auto& [k, m] : g.edges) {
    Edge key;
    for (int v : k) key.push_back(newlabel[v]);
    std::sort(key.begin(), key.end());
    out.edges[std::move(key)] += m;
  }
  return out;
}

MultiHypergraph simplify(const MultiHypergraph& g, SimplifyKind kind, int t) {
  for (auto& [k, m] : g.edges)
    if (k.size() > 2) throw std::invalid_argument("simplify expects a 2-uniform graph");
  MultiHypergraph out;
  out.n = g.n;
  switch (kind) {
    case SimplifyKind::UnderlyingSimple: {
      for (auto& [k, m] : g.edges)
        if (k.size() == 2 && k[0] != k[1]) out.edges[k] = 1;
      return out;
    }
    case SimplifyKind::ComponentClosure: {
      UnionFind uf(g.n);
      for (auto& [k, m] : g.edges)
        for (size_t j = 1; j < k.size(); ++j) uf.unite(k[0], k[j]);
      for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
          if (uf.find(u) == uf.find(v)) out.edges[Edge{u, v}] = 1;
      return out;
    }
    case SimplifyKind::DistanceClosure: {
      if (t < 1) throw std::invalid_argument("distance closure needs t >= 1");
      // BFS from each vertex over the underlying simple graph.
      std::vector<std::vector<int>> adj(g.n);
      for (auto& [k, m] : g.edges)
        if (k.size() == 2 && k[0] != k[1]) {
          adj[k[0]].push_back(k[1]);
          adj[k[1]].push_back(k[0]);
        }
      for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
          int u = q.front();
          q.pop();
          if (dist[u] >= t) continue;
          for (int v : adj[u])
            if (dist[v] < 0) {
              dist[v] = dist[u] + 1;
              q.push(v);
            }
        }
        for (int v = s + 1; v < g.n; ++v)
          if (dist[v] >= 1 && dist[v] <= t) out.edges[Edge{s, v}] = 1;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Backtracking search for an injective vertex map sending every H-edge class
// onto a G-edge class with sufficient multiplicity.
struct ContainmentSearch {
  const MultiHypergraph& g;
  const MultiHypergraph& h;
  std::vector<std::pair<Edge, int>> hedges;
  std::vector<int> order;    // H vertices in assignment order
  std::vector<int> map_to;   // H vertex -> G vertex or -1
  std::vector<char> used;    // G vertex used

  ContainmentSearch(const MultiHypergraph& g_, const MultiHypergraph& h_) : g(g_), h(h_) {
    for (auto& [k, m] : h.edges) hedges.emplace_back(k, m);
    map_to.assign(h.n, -1);
    used.assign(g.n, 0);
    // Order H vertices to keep partial edges closing early: repeatedly pick
    // the unplaced vertex sharing the most edges with placed ones.
    std::vector<char> placed(h.n, 0);
    for (int step = 0; step < h.n; ++step) {
      int best = -1, best_score = -1;
      for (int v = 0; v < h.n; ++v) {
        if (placed[v]) continue;
        int score = 0;
        for (auto& [k, m] : hedges) {
          bool touches = false, others_placed = true;
          for (int u : k) {
            if (u == v) touches = true;
            else if (!placed[u]) others_placed = false;
          }
          if (touches) score += others_placed ? 4 : 1;
        }
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  bool edge_ok(const Edge& key, int mult) const {
    Edge image;
    image.reserve(key.size());
    for (int v : key) image.push_back(map_to[v]);
    std::sort(image.begin(), image.end());
    return g.multiplicity(image) >= mult;
  }

  bool extend(int pos) {
    if (pos == h.n) return true;
    int v = order[pos];
    for (int gv = 0; gv < g.n; ++gv) {
      if (used[gv]) continue;
      map_to[v] = gv;
      used[gv] = 1;
      bool ok = true;
      for (auto& [k, m] : hedges) {
        bool complete = true, touches = false;
        for (int u : k) {
          if (u == v) touches = true;
          if (map_to[u] < 0) {
            complete = false;
            break;
          }
        }
        if (touches && complete && !edge_ok(k, m)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(pos + 1)) return true;
      used[gv] = 0;
      map_to[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool contains(const MultiHypergraph& g, const MultiHypergraph& h) {
  if (h.edges.empty()) return true;
  if (h.n > g.n) return false;
  ContainmentSearch search(g, h);
  return search.extend(0);
}

std::optional<VertexSet> is_sunflower(const MultiHypergraph& h) {
  std::vector<Edge> keys;
  bool parallel = false;
  for (auto& [k, m] : h.edges) {
    keys.push_back(k);
    if (m > 1) parallel = true;
  }
  if (keys.empty()) return std::nullopt;
  auto vset = [](const Edge& e) {
    VertexSet s;
    for (int v : e) s.add(v);
    return s;
  };
  if (keys.size() == 1) return vset(keys[0]);  // single class: core is the edge
  if (parallel) return std::nullopt;  // parallel edges force core = edge, so no
                                      // second distinct edge can agree
  // All pairwise multiset intersections must coincide.
  auto isect = [](const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  Edge core = isect(keys[0], keys[1]);
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t j = i + 1; j < keys.size(); ++j)
      if (isect(keys[i], keys[j]) != core) return std::nullopt;
  return vset(core);
}

// ---------------------------------------------------------------------------
// Canonicalization. Components are canonicalized independently and assembled
// in sorted code order; within a component, iterated color refinement fixes a
// class ordering and a prefix-pruned backtracking search minimizes the
// adjacency code over class-respecting labelings.
// ---------------------------------------------------------------------------

namespace {

using Code = std::vector<uint32_t>;

std::vector<int> refine_classes(const MultiHypergraph& g) {
  // Returns color[v]; colors are 0..c-1 ordered by their invariant keys, so
  // the ordering is isomorphism-invariant.
  int n = g.n;
  std::vector<std::vector<long long>> key(n);
  for (int v = 0; v < n; ++v) key[v] = {0};
  std::vector<int> color(n, 0);
  for (int round = 0; round < n + 1; ++round) {
    std::vector<std::vector<long long>> next(n);
    for (int v = 0; v < n; ++v) next[v] = {color[v]};
    for (auto& [k, m] : g.edges) {
      for (size_t i = 0; i < k.size(); ++i) {
        // Signature of this incidence from k[i]'s point of view.
        std::vector<long long> sig{(long long)k.size(), m};
        std::vector<long long> rest;
        for (size_t j = 0; j < k.size(); ++j)
          if (j != i) rest.push_back(color[k[j]]);
        std::sort(rest.begin(), rest.end());
        sig.insert(sig.end(), rest.begin(), rest.end());
        // Fold the signature into the vertex key; encode as a flat run.
        auto& dst = next[k[i]];
        dst.push_back(-1);  // separator
        dst.insert(dst.end(), sig.begin(), sig.end());
      }
    }
    for (int v = 0; v < n; ++v) {
      // Sort incidence runs for order independence: rebuild runs, sort, flatten.
      auto& flat = next[v];
      std::vector<std::vector<long long>> runs;
      std::vector<long long> head{flat[0]};
      size_t i = 1;
      while (i < flat.size()) {
        std::vector<long long> run;
        ++i;  // skip separator
        while (i < flat.size() && flat[i] != -1) run.push_back(flat[i++]);
        runs.push_back(std::move(run));
      }
      std::sort(runs.begin(), runs.end());
      for (auto& r : runs) {
        head.push_back(-1);
        head.insert(head.end(), r.begin(), r.end());
      }
      flat = std::move(head);
    }
    std::map<std::vector<long long>, int> index;
    for (int v = 0; v < n; ++v) index[next[v]] = 0;
    int c = 0;
    for (auto& [k2, idx] : index) idx = c++;
    std::vector<int> newcolor(n);
    for (int v = 0; v < n; ++v) newcolor[v] = index[next[v]];
    if (newcolor == color) break;
    color = newcolor;
  }
  return color;
}

// Fast path: all edges have size <= 2. The code of a labeling p (position ->
// vertex) lists, per position i: loop1 mult, {v,v} mult, then multiplicities
// to positions j < i. Canonical code is the minimum over class-respecting
// labelings.
struct SmallEdgeCanon {
  const MultiHypergraph& g;
  int n;
  std::vector<int> color;
  std::vector<std::vector<int>> slots;  // vertices per color, in color order
  Code best;
  std::vector<int> best_perm;  // position -> vertex
  std::vector<int> perm;
  std::vector<char> used;
  Code cur;
  bool have_best = false;

  explicit SmallEdgeCanon(const MultiHypergraph& g_) : g(g_), n(g_.n) {
    color = refine_classes(g);
    int c = *std::max_element(color.begin(), color.end()) + 1;
    slots.assign(c, {});
    for (int v = 0; v < n; ++v) slots[color[v]].push_back(v);
    used.assign(n, 0);
    perm.assign(n, -1);
  }

  void column(int v, const std::vector<int>& placed, Code& out) const {
    out.push_back((uint32_t)g.multiplicity(Edge{v}));
    out.push_back((uint32_t)g.multiplicity(v, v));
    for (int u : placed) out.push_back((uint32_t)g.multiplicity(v, u));
  }

  // tight: cur equals the best code prefix so far.
  void search(int pos, int cls, int within, bool tight) {
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    if ((int)slots[cls].size() == within) {
      search(pos, cls + 1, 0, tight);
      return;
    }
    std::vector<int> placed(perm.begin(), perm.begin() + pos);
    size_t mark = cur.size();
    for (int v : slots[cls]) {
      if (used[v]) continue;
      cur.resize(mark);
      column(v, placed, cur);
      bool next_tight = tight;
      if (have_best && tight) {
        // Compare the new column against the best code at the same offset.
        int cmp = 0;
        for (size_t i = mark; i < cur.size(); ++i) {
          if (cur[i] != best[i]) {
            cmp = cur[i] < best[i] ? -1 : 1;
            break;
          }
        }
        if (cmp > 0) continue;  // prefix already larger, prune
        if (cmp < 0) next_tight = false;
      }
      used[v] = 1;
      perm[pos] = v;
      search(pos + 1, cls, within + 1, next_tight);
      perm[pos] = -1;
      used[v] = 0;
    }
    cur.resize(mark);
  }

  void run() { search(0, 0, 0, true); }
};

Code hyper_code(const MultiHypergraph& g, const std::vector<int>& inv) {
  // inv[vertex] = position. Serializes the relabeled sorted edge list.
  std::vector<std::pair<Edge, int>> rel;
  for (auto& [k, m] : g.edges) {
    Edge key;
    for (int v : k) key.push_back(inv[v]);
    std::sort(key.begin(), key.end());
    rel.emplace_back(std::move(key), m);
  }
  std::sort(rel.begin(), rel.end());
  Code out;
  for (auto& [k, m] : rel) {
    out.push_back((uint32_t)k.size());
    for (int v : k) out.push_back((uint32_t)v);
    out.push_back((uint32_t)m);
  }
  return out;
}

struct HyperCanon {
  const MultiHypergraph& g;
  int n;
  std::vector<std::vector<int>> slots;
  Code best;
  std::vector<int> best_perm;
  std::vector<int> perm;  // position -> vertex
  std::vector<char> used;
  bool have_best = false;

  explicit HyperCanon(const MultiHypergraph& g_) : g(g_), n(g_.n) {
    auto color = refine_classes(g);
    int c = *std::max_element(color.begin(), color.end()) + 1;
    slots.assign(c, {});
    for (int v = 0; v < n; ++v) slots[color[v]].push_back(v);
    used.assign(n, 0);
    perm.assign(n, -1);
  }

  void search(int pos, int cls, int within) {
    if (pos == n) {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      Code code = hyper_code(g, inv);
      if (!have_best || code < best) {
        best = std::move(code);
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    if ((int)slots[cls].size() == within) {
      search(pos, cls + 1, 0);
      return;
    }
    for (int v : slots[cls]) {
      if (used[v]) continue;
      used[v] = 1;
      perm[pos] = v;
      search(pos + 1, cls, within + 1);
      perm[pos] = -1;
      used[v] = 0;
    }
  }

  void run() { search(0, 0, 0); }
};

// Canonical code and labeling of a (connected) graph.
std::pair<Code, std::vector<int>> component_canon(const MultiHypergraph& g) {
  if (g.max_edge_size() <= 2) {
    SmallEdgeCanon c(g);
    c.run();
    if (!c.have_best) return {Code{}, {}};  // n == 0
    return {c.best, c.best_perm};
  }
  HyperCanon c(g);
  c.run();
  if (!c.have_best) return {Code{}, {}};
  return {c.best, c.best_perm};
}

std::pair<Code, std::vector<int>> full_canon(const MultiHypergraph& g) {
  auto comps = g.components();
  struct Part {
    Code code;
    std::vector<int> verts;      // original labels, ordered by position
  };
  std::vector<Part> parts;
  for (auto& comp : comps) {
    MultiHypergraph sub = g.induced_compact(comp);
    auto [code, perm] = component_canon(sub);
    Part p;
    p.code = std::move(code);
    p.verts.resize(comp.size());
    if (comp.size() == 1) {
      p.verts[0] = comp[0];
    } else {
      for (size_t pos = 0; pos < comp.size(); ++pos) p.verts[pos] = comp[perm[pos]];
    }
    // Prefix each component code with its vertex count so concatenation is
    // unambiguous.
    Code tagged;
    tagged.push_back((uint32_t)comp.size());
    tagged.insert(tagged.end(), p.code.begin(), p.code.end());
    p.code = std::move(tagged);
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.code < b.code; });
  Code out;
  out.push_back((uint32_t)g.n);
  std::vector<int> labeling(g.n, -1);  // old -> new
  int next = 0;
  for (auto& p : parts) {
    out.push_back(0xffffffffu);
    out.insert(out.end(), p.code.begin(), p.code.end());
    for (int old : p.verts) labeling[old] = next++;
  }
  return {out, labeling};
}

std::string code_to_hex(const Code& code) {
  std::string out;
  out.reserve(code.size() * 9);
  char buf[16];
  for (uint32_t v : code) {
    std::snprintf(buf, sizeof buf, "%x.", v);
    out += buf;
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const MultiHypergraph& g) {
  return CanonicalForm{code_to_hex(full_canon(g).first)};
}

std::vector<int> canonical_labeling(const MultiHypergraph& g) {
  return full_canon(g).second;
}

MultiHypergraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MultiHypergraph g;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("graph parse error at line " + std::to_string(lineno) + ": " + msg);
    };
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "n") fail("expected header `n <count>`");
      try {
        g.n = std::stoi(toks[1]);
      } catch (...) {
        fail("bad vertex count");
      }
      if (g.n < 0 || g.n > 64) fail("vertex count must be in [0,64]");
      have_header = true;
      continue;
    }
    Edge key;
    int mult = 1;
    for (auto& tok : toks) {
      if (tok[0] == 'x') {
        try {
          mult = std::stoi(tok.substr(1));
        } catch (...) {
          fail("bad multiplicity");
        }
        if (mult < 1) fail("multiplicity must be positive");
      } else {
        int v;
        try {
          v = std::stoi(tok);
        } catch (...) {
          fail("bad vertex index");
        }
        if (v < 0 || v >= g.n) fail("vertex index out of range");
        key.push_back(v);
      }
    }
    if (key.empty()) fail("edge with no vertices");
    g.add_edge(std::move(key), mult);
  }
  if (!have_header) throw std::runtime_error("graph parse error: missing `n <count>` header");
  return g;
}

std::string format_graph(const MultiHypergraph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto& [k, m] : g.edges) {
    for (size_t i = 0; i < k.size(); ++i) out << (i ? " " : "") << k[i];
    if (m != 1) out << " x" << m;
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<uint64_t> simple_adjacency(const MultiHypergraph& g) {
  std::vector<uint64_t> adj(g.n, 0);
  for (auto& [k, m] : g.edges)
    if (k.size() == 2 && k[0] != k[1]) {
      adj[k[0]] |= uint64_t{1} << k[1];
      adj[k[1]] |= uint64_t{1} << k[0];
    }
  return adj;
}

}  // namespace

int independence_number(const MultiHypergraph& g) {
  auto adj = simple_adjacency(g);
  int best = 0;
  // Branch on the lowest remaining vertex: either exclude it or include it and
  // drop its neighborhood.
  std::function<void(uint64_t, int)> go = [&](uint64_t rest, int size) {
    if (rest == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + __builtin_popcountll(rest) <= best) return;
    int v = __builtin_ctzll(rest);
    go(rest & ~(uint64_t{1} << v) & ~adj[v], size + 1);
    go(rest & ~(uint64_t{1} << v), size);
  };
  go((g.n >= 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1), 0);
  return best;
}

int matching_number(const MultiHypergraph& g) {
  auto adj = simple_adjacency(g);
  std::unordered_map<uint64_t, int> memo;
  std::function<int(uint64_t)> go = [&](uint64_t avail) -> int {
    // Find a vertex with an available neighbor.
    uint64_t rest = avail;
    int v = -1;
    while (rest) {
      int u = __builtin_ctzll(rest);
      if (adj[u] & avail) {
        v = u;
        break;
      }
      rest &= rest - 1;
    }
    if (v < 0) return 0;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    // Either v is unmatched, or matched to one of its neighbors.
    int best = go(avail & ~(uint64_t{1} << v));
    uint64_t nb = adj[v] & avail;
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      best = std::max(best, 1 + go(avail & ~(uint64_t{1} << v) & ~(uint64_t{1} << u)));
    }
    memo[avail] = best;
    return best;
  };
  return go(g.n >= 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1);
}

}  // namespace itl
