#include "itl/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace itl {

namespace {

using Clock = std::chrono::steady_clock;

long long binom2(long long n) { return n * (n - 1) / 2; }

// ---------------------------------------------------------------------------
// Generic branch-and-bound over parallel classes.
// ---------------------------------------------------------------------------

struct Bnb {
  const Pattern& pattern;
  std::vector<std::pair<Edge, int>> classes;  // branch order
  std::vector<long long> suffix;              // total multiplicity from index i on
  MultiHypergraph kept;
  std::vector<int> keep_now, best_keep;
  long long best, nodes = 0;
  bool have_witness = false, done = false, aborted = false;
  long long stop_at, max_nodes;
  Clock::time_point deadline;
  bool has_deadline;

  Bnb(const MultiHypergraph& g, const Pattern& p, const ExOptions& opt)
      : pattern(p),
        stop_at(opt.stop_at),
        max_nodes(opt.budget.max_nodes),
        has_deadline(opt.budget.max_seconds >= 0) {
    if (has_deadline)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opt.budget.max_seconds));
    for (auto& [k, m] : g.edges) classes.emplace_back(k, m);
    // Descending multiplicity, ties by edge key; deterministic.
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    suffix.assign(classes.size() + 1, 0);
    for (int i = (int)classes.size() - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + classes[i].second;
    kept.n = g.n;
    keep_now.assign(classes.size(), 0);
    best = opt.need_witness ? -1 : opt.seed_lower;
  }

  void dfs(size_t idx, long long kept_edges) {
    if (done || aborted) return;
    if (++nodes % 1024 == 0) {
      if (max_nodes >= 0 && nodes > max_nodes) aborted = true;
      if (has_deadline && Clock::now() > deadline) aborted = true;
      if (aborted) return;
    }
    if (idx == classes.size()) {
      if (kept_edges > best) {
        best = kept_edges;
        best_keep = keep_now;
        have_witness = true;
        if (stop_at >= 0 && best >= stop_at) done = true;
      }
      return;
    }
    auto& [key, mult] = classes[idx];
    for (int keep = mult; keep >= 0; --keep) {
      if (kept_edges + keep + suffix[idx + 1] <= best) break;
      if (keep > 0) {
        kept.edges[key] = keep;
        if (family_contains(pattern, kept)) continue;
      } else {
        kept.edges.erase(key);
      }
      keep_now[idx] = keep;
      dfs(idx + 1, kept_edges + keep);
      if (done || aborted) break;
    }
    kept.edges.erase(key);
    keep_now[idx] = 0;
  }

  ExtremalResult run() {
    dfs(0, 0);
    ExtremalResult r;
    r.value = std::max<long long>(best, 0);
    r.method = "generic";
    r.nodes_explored = nodes;
    r.complete = !aborted;
    if (have_witness)
      for (size_t i = 0; i < classes.size(); ++i)
        if (best_keep[i] > 0) r.witness.emplace_back(classes[i].first, best_keep[i]);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Matching with edge reconstruction (memoized branch on a connected vertex).
// ---------------------------------------------------------------------------

struct Matcher {
  std::vector<uint64_t> adj;
  std::unordered_map<uint64_t, int> memo;

  explicit Matcher(const MultiHypergraph& g) : adj(g.n, 0) {
    for (auto& [k, m] : g.edges)
      if (k.size() == 2 && k[0] != k[1]) {
        adj[k[0]] |= uint64_t{1} << k[1];
        adj[k[1]] |= uint64_t{1} << k[0];
      }
  }

  int size(uint64_t avail) {
    int v = -1;
    for (uint64_t rest = avail; rest; rest &= rest - 1) {
      int u = __builtin_ctzll(rest);
      if (adj[u] & avail) {
        v = u;
        break;
      }
    }
    if (v < 0) return 0;
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    int best = size(avail & ~(uint64_t{1} << v));
    for (uint64_t nb = adj[v] & avail; nb; nb &= nb - 1) {
      int u = __builtin_ctzll(nb);
      best = std::max(best, 1 + size(avail & ~(uint64_t{1} << v) & ~(uint64_t{1} << u)));
    }
    memo[avail] = best;
    return best;
  }

  std::vector<Edge> edges(int n) {
    uint64_t avail = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<Edge> out;
    while (true) {
      int total = size(avail);
      if (total == 0) break;
      bool advanced = false;
      for (int v = 0; v < n && !advanced; ++v) {
        if (!(avail & (uint64_t{1} << v))) continue;
        for (uint64_t nb = adj[v] & avail; nb; nb &= nb - 1) {
          int u = __builtin_ctzll(nb);
          uint64_t next = avail & ~(uint64_t{1} << v) & ~(uint64_t{1} << u);
          if (1 + size(next) == total) {
            out.push_back(v < u ? Edge{v, u} : Edge{u, v});
            avail = next;
            advanced = true;
            break;
          }
        }
      }
      if (!advanced) break;  // unreachable: some edge always extends optimally
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Packing DP for P_3-free (triangles + stars) and {P_3,K_3}-free (stars).
// ---------------------------------------------------------------------------

ExtremalResult packing_dp(const MultiHypergraph& g, bool allow_triangles) {
  int n = g.n;
  std::vector<uint32_t> adj(n, 0);
  for (auto& [k, m] : g.edges) {
    adj[k[0]] |= uint32_t{1} << k[1];
    adj[k[1]] |= uint32_t{1} << k[0];
  }
  auto cluster_value = [&](uint32_t t) -> int {
    int cnt = __builtin_popcount(t);
    if (cnt < 2) return -1;
    int best = -1;
    if (allow_triangles && cnt == 3) {
      int vs[3], i = 0;
      for (uint32_t r = t; r; r &= r - 1) vs[i++] = __builtin_ctz(r);
      if ((adj[vs[0]] & (uint32_t{1} << vs[1])) && (adj[vs[0]] & (uint32_t{1} << vs[2])) &&
          (adj[vs[1]] & (uint32_t{1} << vs[2])))
        best = 3;
    }
    for (uint32_t r = t; r; r &= r - 1) {
      int c = __builtin_ctz(r);
      if ((t & ~(uint32_t{1} << c) & ~adj[c]) == 0) best = std::max(best, cnt - 1);
    }
    return best;
  };
  uint32_t full = n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  std::vector<int> f(full + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    int v = __builtin_ctz(s);
    uint32_t vb = uint32_t{1} << v;
    int best = f[s & ~vb];
    for (uint32_t sub = s & ~vb;; sub = (sub - 1) & (s & ~vb)) {
      if (sub) {
        int cv = cluster_value(sub | vb);
        if (cv > 0) best = std::max(best, cv + f[s & ~(sub | vb)]);
      }
      if (sub == 0) break;
    }
    f[s] = best;
  }
  ExtremalResult r;
  r.value = f[full];
  r.method = "p3-packing";
  // Reconstruct clusters.
  uint32_t s = full;
  while (s) {
    int v = __builtin_ctz(s);
    uint32_t vb = uint32_t{1} << v;
    if (f[s] == f[s & ~vb]) {
      s &= ~vb;
      continue;
    }
    bool found = false;
    for (uint32_t sub = s & ~vb; sub && !found; sub = (sub - 1) & (s & ~vb)) {
      uint32_t t = sub | vb;
      int cv = cluster_value(sub | vb);
      if (cv > 0 && f[s] == cv + f[s & ~t]) {
        int cnt = __builtin_popcount(t);
        if (allow_triangles && cnt == 3 && cv == 3) {
          int vs[3], i = 0;
          for (uint32_t rr = t; rr; rr &= rr - 1) vs[i++] = __builtin_ctz(rr);
          r.witness.push_back({Edge{vs[0], vs[1]}, 1});
          r.witness.push_back({Edge{vs[0], vs[2]}, 1});
          r.witness.push_back({Edge{vs[1], vs[2]}, 1});
        } else {
          int center = -1;
          for (uint32_t rr = t; rr; rr &= rr - 1) {
            int c = __builtin_ctz(rr);
            if ((t & ~(uint32_t{1} << c) & ~adj[c]) == 0) {
              center = c;
              break;
            }
          }
          for (uint32_t rr = t & ~(uint32_t{1} << center); rr; rr &= rr - 1) {
            int leaf = __builtin_ctz(rr);
            r.witness.push_back(
                {center < leaf ? Edge{center, leaf} : Edge{leaf, center}, 1});
          }
        }
        s &= ~t;
        found = true;
      }
    }
    if (!found) s &= ~vb;  // unreachable by construction
  }
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

// Detects the uniform dumbbell host: every pair with multiplicity t, every
// vertex with s loops, nothing else.
std::optional<std::pair<int, int>> uniform_loop_host(const MultiHypergraph& g) {
  if (g.n < 2) return std::nullopt;
  int t = g.multiplicity(0, 1);
  int s = g.loop1_count(0);
  if (t < 1 || s < 1) return std::nullopt;
  long long expected = 0;
  for (int u = 0; u < g.n; ++u) {
    if (g.loop1_count(u) != s) return std::nullopt;
    ++expected;
    for (int v = u + 1; v < g.n; ++v) {
      if (g.multiplicity(u, v) != t) return std::nullopt;
      ++expected;
    }
  }
  if ((long long)g.edges.size() != expected) return std::nullopt;
  return std::make_pair(t, s);
}

}  // namespace

ExtremalResult ex_cycles(const MultiHypergraph& g) {
  if (!g.loopless_two_uniform())
    throw std::invalid_argument("cycle fast path needs a loopless 2-uniform graph");
  std::vector<std::pair<Edge, int>> classes(g.edges.begin(), g.edges.end());
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  ExtremalResult r;
  r.method = "cycles-forest";
  for (auto& [k, m] : classes) {
    int a = find(k[0]), b = find(k[1]);
    if (a == b) continue;
    parent[a] = b;
    r.witness.emplace_back(k, m);
    r.value += m;
  }
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

ExtremalResult ex_p1p2(const MultiHypergraph& g) {
  if (!g.is_simple() || !g.loopless_two_uniform())
    throw std::invalid_argument("P1uP2 fast path needs a simple 2-uniform graph");
  auto deg = g.degrees2();
  int delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  Matcher matcher(g);
  int m = matcher.size(g.n >= 64 ? ~uint64_t{0} : (uint64_t{1} << g.n) - 1);
  if (std::max(delta, m) < 6) {
    auto r = ex_exact(g, Pattern::named(Pattern::Kind::StarUnionEdge),
                      ExOptions{.force_generic = true});
    return r;
  }
  ExtremalResult r;
  r.method = "p1p2-formula";
  r.value = std::max(delta, m);
  if (delta >= m) {
    int center = (int)(std::max_element(deg.begin(), deg.end()) - deg.begin());
    for (auto& [k, mult] : g.edges)
      if (k[0] == center || k[1] == center) r.witness.emplace_back(k, 1);
  } else {
    for (auto& e : matcher.edges(g.n)) r.witness.emplace_back(e, 1);
  }
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

ExtremalResult ex_oneuniform(std::vector<int> x, std::vector<int> d) {
  if (!std::is_sorted(x.rbegin(), x.rend()) || !std::is_sorted(d.rbegin(), d.rend()))
    throw std::invalid_argument("sequences must be nonincreasing");
  if (d.empty()) throw std::invalid_argument("empty pattern sequence");
  int n = (int)x.size(), t = (int)d.size();
  ExtremalResult r;
  r.method = "oneuniform-formula";
  long long best = -1;
  int best_tp = 1;
  for (int tp = 1; tp <= t; ++tp) {
    long long total = 0;
    for (int i = 0; i < n; ++i)
      total += (i < tp - 1) ? x[i] : std::min(x[i], d[tp - 1] - 1);
    if (total > best) {
      best = total;
      best_tp = tp;
    }
  }
  r.value = std::max<long long>(best, 0);
  for (int i = 0; i < n; ++i) {
    int kept = (i < best_tp - 1) ? x[i] : std::min(x[i], d[best_tp - 1] - 1);
    if (kept > 0) r.witness.push_back({Edge{i}, kept});
  }
  return r;
}

ExtremalResult ex_exact(const MultiHypergraph& g, const Pattern& p, const ExOptions& opt) {
  if (g.n > 64) throw std::invalid_argument("vertex count above engine cap (64)");
  if (!opt.force_generic) {
    if (p.kind == Pattern::Kind::AllCycles && g.loopless_two_uniform()) return ex_cycles(g);
    if (p.kind == Pattern::Kind::StarUnionEdge && g.is_simple() &&
        g.loopless_two_uniform() && g.n <= 40)
      return ex_p1p2(g);
    if ((p.kind == Pattern::Kind::P3K3 ||
         (p.kind == Pattern::Kind::Path && p.param == 3)) &&
        g.is_simple() && g.loopless_two_uniform() && g.n <= 13)
      return packing_dp(g, p.kind == Pattern::Kind::Path);
    if (p.kind == Pattern::Kind::OneUniform && g.one_uniform()) {
      std::vector<std::pair<int, int>> by_mult;  // (mult, vertex)
      for (auto& [k, m] : g.edges) by_mult.push_back({m, k[0]});
      std::sort(by_mult.rbegin(), by_mult.rend());
      std::vector<int> x;
      for (auto& [m, v] : by_mult) x.push_back(m);
      auto r = ex_oneuniform(x, p.degs);
      // Rewrite witness loops onto the actual vertices.
      for (size_t i = 0; i < r.witness.size(); ++i)
        r.witness[i].first = Edge{by_mult[r.witness[i].first[0]].second};
      std::sort(r.witness.begin(), r.witness.end());
      return r;
    }
    if (p.kind == Pattern::Kind::Dumbbell && p.param == 2) {
      if (auto ts = uniform_loop_host(g)) {
        auto [t, s] = *ts;
        long long n = g.n, best = -1, best_l = 0;
        for (long long l = 0; l <= n; ++l) {
          long long val = l * s + (long long)t * (binom2(n) - binom2(l));
          if (val > best) {
            best = val;
            best_l = l;
          }
        }
        ExtremalResult r;
        r.method = "dumbbell-closed-form";
        r.value = best;
        for (int v = 0; v < best_l; ++v) r.witness.push_back({Edge{v}, s});
        for (int u = 0; u < g.n; ++u)
          for (int v = u + 1; v < g.n; ++v)
            if (u >= best_l || v >= best_l) r.witness.push_back({Edge{u, v}, t});
        std::sort(r.witness.begin(), r.witness.end());
        return r;
      }
    }
  }
  Bnb bnb(g, p, opt);
  auto r = bnb.run();
  if (opt.need_witness && r.complete && r.value > 0 && r.witness.empty()) {
    // Seeded searches may finish without materializing a witness; redo clean.
    ExOptions clean = opt;
    clean.seed_lower = 0;
    clean.need_witness = true;
    Bnb again(g, p, clean);
    return again.run();
  }
  return r;
}

long long turan_graph_size(int n, int t) {
  if (n < 1 || t < 3) throw std::invalid_argument("turan graph needs n >= 1, t >= 3");
  // e(K_n) minus the edges inside the t-1 near-equal parts.
  long long total = binom2(n);
  int parts = t - 1, q = n / parts, rem = n % parts;
  total -= (long long)rem * binom2(q + 1) + (long long)(parts - rem) * binom2(q);
  return total;
}

MultiHypergraph turan_graph(int n, int t) {
  if (n < 1 || t < 3) throw std::invalid_argument("turan graph needs n >= 1, t >= 3");
  int parts = t - 1;
  std::vector<int> part_of(n);
  for (int v = 0; v < n; ++v) part_of[v] = v % parts;
  MultiHypergraph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge({u, v});
  return g;
}

long long averaging_bound(const MultiHypergraph& g, const std::vector<long long>& ex_table) {
  if (g.edges.empty()) return 0;
  if (g.n < 2) return 0;
  if ((int)ex_table.size() <= g.n) throw std::invalid_argument("missing ex(K_n) table entry");
  Rational pi(BigInt(ex_table[g.n]), BigInt(binom2(g.n)));
  Rational bound = pi * Rational(BigInt(g.e()), BigInt(1));
  return to_ll(ceil_rat(bound));
}

// ---------------------------------------------------------------------------
// Exact LP: minimum fractional edge cover, by basic-solution enumeration.
// ---------------------------------------------------------------------------

namespace {

// Solves A x = b exactly; returns nullopt if singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  int m = (int)a.size();
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int row = col; row < m; ++row)
      if (a[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rational inv = Rational(1) / a[col][col];
    for (int j = col; j < m; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col];
      for (int j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

}  // namespace

Rational fractional_cover_number(const MultiHypergraph& h_in) {
  MultiHypergraph h = h_in.without_isolated();
  if (h.edges.empty()) throw std::invalid_argument("fractional cover of an empty graph");
  std::vector<Edge> keys;
  for (auto& [k, m] : h.edges) keys.push_back(k);
  int m = (int)keys.size(), n = h.n;
  // Incidence: row per vertex, column per edge class.
  std::vector<std::vector<Rational>> inc(n, std::vector<Rational>(m, Rational(0)));
  for (int j = 0; j < m; ++j) {
    VertexSet seen;
    for (int v : keys[j])
      if (!seen.has(v)) {
        inc[v][j] = Rational(1);
        seen.add(v);
      }
  }
  // Enumerate choices of m tight constraints among n cover rows and m
  // nonnegativity rows.
  int total = n + m;
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  std::optional<Rational> best;
  while (true) {
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      int c = pick[i];
      if (c < n) {
        a[i] = inc[c];
        b[i] = Rational(1);
      } else {
        a[i][c - n] = Rational(1);
        b[i] = Rational(0);
      }
    }
    if (auto phi = solve_linear(std::move(a), std::move(b))) {
      bool feasible = true;
      for (int j = 0; j < m && feasible; ++j)
        if ((*phi)[j] < 0) feasible = false;
      for (int v = 0; v < n && feasible; ++v) {
        Rational cover(0);
        for (int j = 0; j < m; ++j)
          if (inc[v][j] != 0) cover += (*phi)[j];
        if (cover < 1) feasible = false;
      }
      if (feasible) {
        Rational obj(0);
        for (int j = 0; j < m; ++j) obj += (*phi)[j];
        if (!best || obj < *best) best = obj;
      }
    }
    // Next combination.
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) throw std::logic_error("fractional cover LP had no basic feasible solution");
  return *best;
}

std::optional<Rational> genupper_exponent(const MultiHypergraph& h) {
  Rational rho = fractional_cover_number(h);
  Rational s(BigInt(h.e()), BigInt(1));
  if (rho >= s) return std::nullopt;
  return (s - Rational(1)) / (s - rho);
}

}  // namespace itl
