#include "itl/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace itl {

namespace {
long long binom2(long long n) { return n * (n - 1) / 2; }

// Convergent of 1/phi = (sqrt(5)-1)/2 accurate to well under 1e-12:
// consecutive Fibonacci numbers F(30)/F(31).
const Rational kInvPhi{BigInt(832040), BigInt(1346269)};
}  // namespace

MultiHypergraph pendant_graph(int k, const std::vector<int>& parts) {
  int sum = 0;
  for (int r : parts) {
    if (r < 1) throw std::invalid_argument("pendant parts must be positive");
    sum += r;
  }
  if (sum != k) throw std::invalid_argument("pendant parts must sum to the core size");
  MultiHypergraph g;
  g.n = k + (int)parts.size();
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge({u, v});
  int at = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int pendant = k + (int)i;
    for (int j = 0; j < parts[i]; ++j) g.add_edge({at + j, pendant});
    at += parts[i];
  }
  return g;
}

MultiHypergraph gk_graph(int k) {
  if (k < 3) throw std::invalid_argument("gk_graph needs k >= 3");
  MultiHypergraph g = clique(k + 1);
  if (k % 2 == 1) {
    // k+1 even: remove a perfect matching of (k+1)/2 edges.
    for (int i = 0; i + 1 <= k; i += 2) g.remove_unit({i, i + 1});
  } else {
    // k+1 odd: remove (k-2)/2 disjoint edges plus a 2-edge path on the
    // remaining three vertices.
    for (int i = 0; i + 1 <= k - 3; i += 2) g.remove_unit({i, i + 1});
    g.remove_unit({k - 2, k - 1});
    g.remove_unit({k - 1, k});
  }
  return g;
}

MultiHypergraph two_cliques(int k) {
  MultiHypergraph g;
  g.n = 2 * k;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      g.add_edge({u, v});
      g.add_edge({k + u, k + v});
    }
  return g;
}

MultiHypergraph p1p2_host(int k) {
  if (k < 7) throw std::invalid_argument("p1p2_host needs k >= 7");
  if (k % 2 == 1) return two_cliques(k);
  int n = 2 * k - 1;
  MultiHypergraph g;
  g.n = n;
  for (int v = 0; v < n; ++v)
    for (int d = 1; d <= (k - 2) / 2; ++d) {
      int u = (v + d) % n;
      if (v < u)
        g.add_edge({v, u});
      else
        g.add_edge({u, v});
    }
  // Difference k/2 induces a single Hamilton cycle; take alternate edges
  // along it as the matching, leaving the final vertex unmatched.
  int step = k / 2;
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (int)(((long long)i * step) % n);
  for (int j = 0; j + 1 < n; j += 2) {
    int a = cyc[j], b = cyc[j + 1];
    if (a > b) std::swap(a, b);
    g.add_edge({a, b});
  }
  return g;
}

std::pair<long long, long long> dumbbell_multihost_params(int k, int n) {
  if (n < 2) throw std::invalid_argument("dumbbell host needs n >= 2");
  const Rational& f = kInvPhi;
  Rational denom = f + Rational(2) * f * f;
  Rational t_exact = Rational(BigInt(k), BigInt(binom2(n))) / denom;
  Rational s_exact =
      Rational(BigInt(k), BigInt(n)) * (Rational(2) * f - Rational(BigInt(1), BigInt(n))) / denom;
  long long t = to_ll(floor_rat(t_exact));
  long long s = to_ll(floor_rat(s_exact));
  if (t <= 0 || s <= 0)
    throw std::invalid_argument("dumbbell host parameters degenerate (t or s is zero)");
  return {t, s};
}

MultiHypergraph dumbbell_multihost(int k, int n) {
  auto [t, s] = dumbbell_multihost_params(k, n);
  if (n > 64) throw std::invalid_argument("vertex count above engine cap (64)");
  MultiHypergraph g;
  g.n = n;
  for (int u = 0; u < n; ++u) {
    g.add_edge({u}, (int)s);
    for (int v = u + 1; v < n; ++v) g.add_edge({u, v}, (int)t);
  }
  return g;
}

long long dumbbell_multihost_ex(int k, int n) {
  auto [t, s] = dumbbell_multihost_params(k, n);
  long long best = 0;
  for (long long l = 0; l <= n; ++l)
    best = std::max(best, l * s + t * (binom2(n) - binom2(l)));
  return best;
}

MultiHypergraph dumbbell_simplehost(int k) {
  if (k < 2) throw std::invalid_argument("dumbbell_simplehost needs k >= 2");
  int copies = (k - 1) / 2;
  MultiHypergraph g;
  g.n = 2 * copies + (k % 2 == 0 ? 2 : 0);
  for (int i = 0; i < copies; ++i) {
    g.add_edge({2 * i, 2 * i + 1});
    g.add_edge({2 * i});
    g.add_edge({2 * i + 1});
  }
  if (k % 2 == 0) g.add_edge({2 * copies, 2 * copies + 1});
  return g;
}

MultiHypergraph nested_cliques(const std::vector<int>& rs) {
  if (rs.empty()) throw std::invalid_argument("nested_cliques needs at least one size");
  if (!std::is_sorted(rs.rbegin(), rs.rend()))
    throw std::invalid_argument("clique sizes must be nonincreasing");
  if (rs.back() < 2) throw std::invalid_argument("clique sizes must be >= 2");
  MultiHypergraph g;
  g.n = rs[0];
  for (int r : rs)
    for (int u = 0; u < r; ++u)
      for (int v = u + 1; v < r; ++v) g.add_edge({u, v});
  return g;
}

}  // namespace itl
