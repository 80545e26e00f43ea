#include "itl/oneuniform.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace itl {

namespace {

void validate_pattern(const std::vector<int>& d) {
  if (d.size() < 2 || d[0] < 2)
    throw std::invalid_argument("pattern must have t >= 2 and d_1 >= 2 (else it is a sunflower)");
  if (!std::is_sorted(d.rbegin(), d.rend()))
    throw std::invalid_argument("degree sequence must be nonincreasing");
  for (int v : d)
    if (v < 1) throw std::invalid_argument("degrees must be positive");
}

}  // namespace

CHResult c_constant(const std::vector<int>& d) {
  validate_pattern(d);
  int t = (int)d.size();
  // Constraint t' (1-based): a x + b j <= 1 with a = t'-1, b = d_{t'}-1.
  std::vector<std::pair<Rational, Rational>> cons;
  for (int tp = 1; tp <= t; ++tp) cons.push_back({Rational(tp - 1), Rational(d[tp - 1] - 1)});
  auto feasible = [&](const Rational& x, const Rational& j) {
    if (x < 0 || j < 0) return false;
    for (auto& [a, b] : cons)
      if (a * x + b * j > 1) return false;
    return true;
  };
  std::vector<std::pair<Rational, Rational>> candidates;
  for (auto& [a, b] : cons)
    if (a > 0 && b > 0)
      candidates.push_back({Rational(1) / (Rational(2) * a), Rational(1) / (Rational(2) * b)});
  for (int i = 0; i < t; ++i)
    for (int j2 = i + 1; j2 < t; ++j2) {
      auto [a1, b1] = cons[i];
      auto [a2, b2] = cons[j2];
      Rational det = a1 * b2 - a2 * b1;
      if (det == 0) continue;
      Rational x = (b2 - b1) / det;
      Rational j = (a1 - a2) / det;
      candidates.push_back({x, j});
    }
  CHResult best;
  best.c = Rational(-1);
  for (auto& [x, j] : candidates) {
    if (!feasible(x, j)) continue;
    Rational prod = x * j;
    if (prod > best.c ||
        (prod == best.c && std::pair(x, j) < std::pair(best.x, best.j))) {
      best.c = prod;
      best.x = x;
      best.j = j;
    }
  }
  if (best.c < 0) throw std::logic_error("no feasible candidate point");
  best.active.clear();
  for (int tp = 1; tp <= t; ++tp) {
    auto& [a, b] = cons[tp - 1];
    if (a * best.x + b * best.j == 1) best.active.push_back(tp);
  }
  return best;
}

long long estar_bruteforce(const std::vector<int>& d, int k) {
  validate_pattern(d);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > 12) throw std::invalid_argument("brute force guarded to k <= 12");
  int t = (int)d.size();
  int len = k - 1;
  // DFS over x_1 >= ... >= x_{k-1} >= 0 with x_1 <= k-1; a prefix is pruned
  // as soon as some t' has sum_{i<t'} x_i + sum_{i>=t'} min(x_i, d_{t'}-1)
  // above k-1 (that is ex >= k for every completion), or when even filling
  // the rest at the current value cannot beat the incumbent.
  long long best = 0;
  std::vector<int> xs;
  std::function<void(int, int, long long)> go2 = [&](int pos, int prev, long long sum) {
    best = std::max(best, sum);
    if (pos == len) return;
    long long remaining = len - pos;
    if (sum + remaining * (long long)prev <= best) return;
    for (int x = prev; x >= 1; --x) {
      xs.push_back(x);
      bool ok = true;
      for (int tp = 1; tp <= t && ok; ++tp) {
        long long lhs = 0;
        for (int i = 0; i < (int)xs.size(); ++i)
          lhs += (i + 1 < tp) ? xs[i] : std::min<long long>(xs[i], d[tp - 1] - 1);
        if (lhs > k - 1) ok = false;
      }
      if (ok) go2(pos + 1, x, sum + x);
      xs.pop_back();
    }
  };
  go2(0, k - 1, 0);
  return best;
}

MultiHypergraph one_uniform_host(const std::vector<int>& x) {
  MultiHypergraph g;
  g.n = (int)x.size();
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) g.add_edge({(int)i}, x[i]);
  return g;
}

MultiHypergraph multistar(const std::vector<int>& d) {
  MultiHypergraph g;
  g.n = (int)d.size() + 1;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) g.add_edge({0, (int)i + 1}, d[i]);
  return g;
}

ChainReport reduction_chain_check(const std::vector<int>& d, int k) {
  validate_pattern(d);
  if (k < 2) throw std::invalid_argument("chain evaluation needs k >= 2");
  int t = (int)d.size();
  ChainReport rep;
  rep.k = k;
  long long cap = k - 1;

  auto f1_constraint = [&](long long x, long long j) {
    for (int tp = 1; tp <= t; ++tp) {
      long long terms = std::max<long long>(0, j - tp + 1);
      if ((long long)(tp - 1) * x + terms * (d[tp - 1] - 1) > cap) return false;
    }
    return true;
  };
  long long f1 = 0;
  for (long long j = 0; j <= cap; ++j)
    for (long long x = d[0]; x <= cap; ++x)
      if (f1_constraint(x, j)) f1 = std::max(f1, x * j);
  rep.f1 = f1;

  std::optional<long long> f2;
  for (long long j = t; j * (d[0] - 1) <= cap; ++j)
    for (long long x = d[0]; x <= cap; ++x) {
      bool ok = true;
      for (int tp = 1; tp <= t && ok; ++tp)
        if ((long long)(tp - 1) * x + (j - tp + 1) * (d[tp - 1] - 1) > cap) ok = false;
      if (ok) f2 = std::max(f2.value_or(0), x * j);
    }
  rep.f2 = f2;

  long long f3 = 0;
  for (long long j = 0; j * (d[0] - 1) <= cap; ++j)
    for (long long x = 0; x <= cap; ++x) {
      bool ok = true;
      for (int tp = 1; tp <= t && ok; ++tp)
        if ((long long)(tp - 1) * x + (d[tp - 1] - 1) * j > cap) ok = false;
      if (ok) f3 = std::max(f3, x * j);
    }
  rep.f3 = f3;

  CHResult ch = c_constant(d);
  rep.f4 = ch.c * Rational(cap) * Rational(cap);

  if (k <= 12) rep.estar = estar_bruteforce(d, k);

  // Guaranteed directions; violations indicate an implementation bug.
  if (rep.f2 && *rep.f2 > rep.f1) throw std::logic_error("f2 > f1");
  if (Rational(rep.f3) > rep.f4) throw std::logic_error("f3 > f4");
  if (rep.estar && rep.f1 > *rep.estar) throw std::logic_error("f1 > E*");
  return rep;
}

}  // namespace itl
