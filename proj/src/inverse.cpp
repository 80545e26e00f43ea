#include "itl/inverse.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace itl {

namespace {
using Clock = std::chrono::steady_clock;

BigInt factorial(int r) {
  BigInt f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}
}  // namespace

BigInt FinitenessVerdict::cap(int k) const {
  if (infinite) throw std::logic_error("cap undefined for the infinite regime");
  if (r > 0) {
    BigInt base = k - 1, pw = 1;
    for (int i = 0; i < r + 1; ++i) pw *= base;
    return factorial(r) * pw;
  }
  return BigInt(u_size) * (k - 1);
}

FinitenessVerdict finiteness_check(const Pattern& p) {
  FinitenessVerdict v;
  if (!p.is_finite_family()) {
    // Cycle families: 2-uniform members, none of which is a sunflower.
    v.r = 2;
    return v;
  }
  auto members = p.members();
  std::set<int> size_union;
  bool all_uniform = true, all_nonuniform = true;
  int rmax = 0;
  for (auto& h : members) {
    std::set<int> sizes;
    for (auto& [k, m] : h.edges) sizes.insert((int)k.size());
    size_union.insert(sizes.begin(), sizes.end());
    if (sizes.size() == 1) {
      all_nonuniform = false;
      rmax = std::max(rmax, *sizes.begin());
    } else {
      all_uniform = false;
    }
  }
  // A uniform sunflower member makes the value infinite from its edge count
  // on: arbitrarily large sunflowers with the same core have every
  // e(member)-edge subgraph isomorphic to the member.
  for (auto& h : members) {
    std::set<int> sizes;
    for (auto& [k, m] : h.edges) sizes.insert((int)k.size());
    if (sizes.size() != 1) continue;
    if (auto core = is_sunflower(h)) {
      int m = (int)h.e();
      if (!v.infinite || m < v.k_threshold) {
        v.infinite = true;
        v.k_threshold = m;
        v.core_size = core->count();
      }
    }
  }
  if (v.infinite) return v;
  if (all_uniform) {
    v.r = rmax;
  } else if (all_nonuniform) {
    v.r = 0;
    v.u_size = (int)size_union.size();
  } else {
    // Mixed: the non-uniform members alone already bound the host size.
    v.r = 0;
    v.u_size = (int)size_union.size();
  }
  return v;
}

HostReport verify_host(const Pattern& p, int k, const MultiHypergraph& g) {
  HostReport rep;
  rep.edge_count = g.e();
  rep.ex = ex_exact(g, p);
  rep.pass = rep.ex.complete && rep.ex.value < k;
  return rep;
}

namespace {

bool is_connected(const MultiHypergraph& g) {
  return g.n > 0 && g.components().size() == 1;
}

// Ordered image of an edge class under a labeling, used to pick the
// canonically last class.
std::vector<int> class_image(const Edge& key, const std::vector<int>& labeling) {
  std::vector<int> img{(int)key.size()};
  std::vector<int> body;
  for (int v : key) body.push_back(labeling[v]);
  std::sort(body.begin(), body.end());
  img.insert(img.end(), body.begin(), body.end());
  return img;
}

struct HostEnumerator {
  const Pattern& pattern;
  const SearchSpace& space;
  int k;
  int mult_cap;
  long long max_nodes;
  Clock::time_point deadline;
  bool has_deadline;

  long long best = 0;
  std::map<std::string, MultiHypergraph> best_hosts;
  long long nodes = 0;
  bool aborted = false;
  std::function<void(const MultiHypergraph&)> visitor;  // optional

  HostEnumerator(const Pattern& p, const SearchSpace& sp, int k_, const Budget& b)
      : pattern(p), space(sp), k(k_) {
    mult_cap = sp.simple_only ? 1 : sp.mult_max;
    max_nodes = b.max_nodes;
    has_deadline = b.max_seconds >= 0;
    if (has_deadline)
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(b.max_seconds));
  }

  bool tick() {
    if (++nodes % 64 == 0) {
      if (max_nodes >= 0 && nodes > max_nodes) aborted = true;
      if (has_deadline && Clock::now() > deadline) aborted = true;
    }
    return !aborted;
  }

  void record(const MultiHypergraph& g) {
    if (visitor) {
      visitor(g);
      return;  // pure enumeration: no maximizer tracking needed
    }
    long long eg = g.e();
    if (eg > best) {
      best = eg;
      best_hosts.clear();
    }
    if (eg == best) best_hosts.emplace(canonical_form(g).bytes, g);
  }

  long long ex_below_k(const MultiHypergraph& g, long long seed) {
    if (k < 0) return 0;  // pruning disabled
    ExOptions opt;
    opt.stop_at = k;
    opt.seed_lower = seed;
    opt.need_witness = false;
    auto r = ex_exact(g, pattern, opt);
    return r.value;
  }

  // --- general augmentation over 2-edges and 1-uniform loops ---------------

  bool removable(const MultiHypergraph& g, const Edge& key) const {
    if (space.compression != SearchSpace::Compression::ComponentClosure) return true;
    MultiHypergraph h = g;
    h.remove_unit(key);
    h = h.without_isolated();
    return h.n == 0 || is_connected(h);
  }

  MultiHypergraph parent_of(const MultiHypergraph& g) const {
    auto labeling = canonical_labeling(g);
    const Edge* pick = nullptr;
    std::vector<int> pick_img;
    for (auto& [key, m] : g.edges) {
      if (!removable(g, key)) continue;
      auto img = class_image(key, labeling);
      if (!pick || img > pick_img) {
        pick = &key;
        pick_img = std::move(img);
      }
    }
    if (!pick) throw std::logic_error("no removable edge unit");
    MultiHypergraph h = g;
    h.remove_unit(*pick);
    return h.without_isolated();
  }

  std::vector<MultiHypergraph> moves(const MultiHypergraph& g) const {
    std::vector<MultiHypergraph> out;
    auto push = [&](MultiHypergraph h) { out.push_back(std::move(h)); };
    int n = g.n;
    for (auto& [key, m] : g.edges)
      if (m < mult_cap) {
        MultiHypergraph h = g;
        h.add_edge(key);
        push(std::move(h));
      }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.multiplicity(u, v) == 0) {
          MultiHypergraph h = g;
          h.add_edge({u, v});
          push(std::move(h));
        }
    if (space.allow_loops1)
      for (int v = 0; v < n; ++v)
        if (g.loop1_count(v) == 0) {
          MultiHypergraph h = g;
          h.add_edge({v});
          push(std::move(h));
        }
    if (n < space.n_max) {
      for (int v = 0; v < n; ++v) {
        MultiHypergraph h = g;
        h.n = n + 1;
        h.add_edge({v, n});
        push(std::move(h));
      }
      if (space.allow_loops1) {
        MultiHypergraph h = g;
        h.n = n + 1;
        h.add_edge({n});
        push(std::move(h));
      }
      if (n + 2 <= space.n_max) {
        MultiHypergraph h = g;
        h.n = n + 2;
        h.add_edge({n, n + 1});
        push(std::move(h));
      }
    }
    return out;
  }

  void grow(const MultiHypergraph& g, long long exval) {
    if (!tick()) return;
    record(g);
    std::string cf_g = canonical_form(g).bytes;
    std::set<std::string> seen;
    for (auto& child : moves(g)) {
      if (aborted) return;
      if (child.e() > space.m_max) continue;
      if (space.compression == SearchSpace::Compression::ComponentClosure &&
          !is_connected(child))
        continue;
      std::string cf_child = canonical_form(child).bytes;
      if (!seen.insert(cf_child).second) continue;
      if (canonical_form(parent_of(child)).bytes != cf_g) continue;
      long long child_ex = ex_below_k(child, exval);
      if (k >= 0 && child_ex >= k) continue;
      grow(child, child_ex);
    }
  }

  void run_general() {
    std::vector<MultiHypergraph> roots;
    {
      MultiHypergraph e2;
      e2.n = 2;
      e2.add_edge({0, 1});
      roots.push_back(std::move(e2));
      if (space.allow_loops1) {
        MultiHypergraph l1;
        l1.n = 1;
        l1.add_edge({0});
        roots.push_back(std::move(l1));
      }
    }
    for (auto& root : roots) {
      if (aborted) break;
      if (root.n > space.n_max || root.e() > space.m_max) continue;
      long long exv = ex_below_k(root, 0);
      if (k >= 0 && exv >= k) continue;
      grow(root, exv);
    }
  }

  // --- complete-base mode: underlying simple graph forced to be a clique ---

  MultiHypergraph parent_of_complete(const MultiHypergraph& g) const {
    auto labeling = canonical_labeling(g);
    const Edge* pick = nullptr;
    std::vector<int> pick_img;
    for (auto& [key, m] : g.edges) {
      if (m < 2) continue;  // keep the simple clique base intact
      auto img = class_image(key, labeling);
      if (!pick || img > pick_img) {
        pick = &key;
        pick_img = std::move(img);
      }
    }
    if (!pick) throw std::logic_error("no removable multiplicity unit");
    MultiHypergraph h = g;
    h.remove_unit(*pick);
    return h;
  }

  void grow_complete(const MultiHypergraph& g, long long exval) {
    if (!tick()) return;
    record(g);
    std::string cf_g = canonical_form(g).bytes;
    std::set<std::string> seen;
    for (auto& [key, m] : g.edges) {
      if (aborted) return;
      if (m >= mult_cap || g.e() + 1 > space.m_max) continue;
      MultiHypergraph child = g;
      child.add_edge(key);
      std::string cf_child = canonical_form(child).bytes;
      if (!seen.insert(cf_child).second) continue;
      if (canonical_form(parent_of_complete(child)).bytes != cf_g) continue;
      long long child_ex = ex_below_k(child, exval);
      if (k >= 0 && child_ex >= k) continue;
      grow_complete(child, child_ex);
    }
  }

  void run_complete_base() {
    for (int n = 2; n <= space.n_max; ++n) {
      if (aborted) break;
      MultiHypergraph base = clique(n);
      if (base.e() > space.m_max) break;
      long long exv = ex_below_k(base, 0);
      if (k >= 0 && exv >= k) break;  // ex(K_n) is monotone in n
      grow_complete(base, exv);
    }
  }
};

}  // namespace

InverseResult inverse_search(const Pattern& p, int k, const SearchSpace& space,
                             const Budget& budget) {
  auto t0 = Clock::now();
  InverseResult res;
  res.k = k;
  auto verdict = finiteness_check(p);
  if (verdict.infinite && k >= verdict.k_threshold) {
    res.status = "infinite";
    res.sunflower_core = verdict.core_size;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
  }
  HostEnumerator e(p, space, k, budget);
  if (space.compression == SearchSpace::Compression::UnderlyingSimple)
    e.run_complete_base();
  else
    e.run_general();
  res.status = e.aborted ? "budget-exhausted" : "exact-within-caps";
  res.best_value = e.best;
  for (auto& [form, g] : e.best_hosts) {
    res.host_forms.push_back(form);
    res.hosts.push_back(g);
  }
  res.nodes = e.nodes;
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

void enumerate_hosts(const Pattern& p, int k, const SearchSpace& space,
                     const std::function<void(const MultiHypergraph&)>& visitor,
                     const Budget& budget) {
  HostEnumerator e(p, space, k, budget);
  e.visitor = visitor;
  if (space.compression == SearchSpace::Compression::UnderlyingSimple)
    e.run_complete_base();
  else
    e.run_general();
}

}  // namespace itl
