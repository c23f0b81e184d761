#pragma once

// Test-side reference constructions that share no code with the library's
// collector or subgroup machinery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mnc/autgroup.hpp"

namespace oracle {

/// B(3,r;0,gamma,delta) as gamma_1 x| <s>, with gamma_1 written additively as the
/// Z[t]-module generated by s1, where t is x -> [s, x], so s_i = t^(i-1) s1 and
/// conjugation by s is 1 + t.  The relations become
///   t^2 + 3t + 3 = gamma t^(r-2),   t^k (t^2 + 3t + 3) = 0 (k >= 1),   t^(r-1) = 0
/// and vectors are reduced modulo that lattice by a Hermite normal form.
class AbelianCollector {
 public:
  using Vec = std::vector<long long>;  // coefficient of t^k at index k
  struct Elt {
    int a = 0;
    Vec x;
    friend bool operator==(const Elt&, const Elt&) = default;
    friend auto operator<=>(const Elt&, const Elt&) = default;
  };

  AbelianCollector(int r, int gamma, int delta) : n_(r - 1), delta_(delta) {
    std::vector<Vec> gens;
    Vec base(n_, 0);
    base[0] += 3;
    if (n_ > 1) base[1] += 3;
    if (n_ > 2) base[2] += 1;
    base[r - 2] -= gamma;
    gens.push_back(base);
    for (int k = 1; k < n_; ++k) {
      Vec v(n_, 0);
      for (int j = 0; j < 3; ++j) {
        const long long c = j == 2 ? 1 : 3;
        if (k + j < n_) v[k + j] += c;
      }
      gens.push_back(v);
    }
    hermite(gens);
  }

  /// Index of the lattice, i.e. |gamma_1|.
  long long module_order() const {
    long long o = 1;
    for (const auto& h : basis_) o *= h[pivot(h)];
    return o;
  }

  Vec reduce(Vec v) const {
    for (const auto& h : basis_) {
      const int p = pivot(h);
      const long long q = floor_div(v[p], h[p]);
      for (int j = 0; j < n_; ++j) v[j] -= q * h[j];
    }
    return v;
  }

  /// s^a * s1^d1 * ... * s_{r-1}^d_{r-1}.
  Elt element(int a, const std::vector<int>& digits) const {
    Vec v(n_, 0);
    for (int i = 0; i < n_; ++i) v[i] = digits.at(i);
    return {a, reduce(v)};
  }

  Elt mul(const Elt& p, const Elt& q) const {
    // (s^a x)(s^b y) = s^(a+b) (s^-b x s^b) y, and s^-1 x s = (1+t)^2 x.
    Vec x = p.x;
    for (int k = 0; k < q.a; ++k) x = phi_inverse(x);
    for (int i = 0; i < n_; ++i) x[i] += q.x[i];
    int a = p.a + q.a;
    if (a >= 3) {
      a -= 3;
      x[n_ - 1] += delta_;
    }
    return {a, reduce(x)};
  }

 private:
  static long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  int pivot(const Vec& h) const {
    for (int j = 0; j < n_; ++j)
      if (h[j] != 0) return j;
    return n_;
  }
  Vec phi_inverse(const Vec& x) const {
    // (1 + t)^2 = 1 + 2t + t^2
    Vec y(n_, 0);
    for (int i = 0; i < n_; ++i) {
      y[i] += x[i];
      if (i + 1 < n_) y[i + 1] += 2 * x[i];
      if (i + 2 < n_) y[i + 2] += x[i];
    }
    return y;
  }
  void hermite(std::vector<Vec> rows) {
    for (int col = 0; col < n_; ++col) {
      // Euclid on column `col` among rows whose earlier columns vanish.
      while (true) {
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (pivot(rows[i]) == col) live.push_back(i);
        if (live.size() <= 1) {
          if (live.size() == 1) {
            Vec h = rows[live[0]];
            if (h[col] < 0)
              for (auto& e : h) e = -e;
            basis_.push_back(h);
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(live[0]));
          }
          break;
        }
        std::size_t best = live[0];
        for (auto i : live)
          if (std::llabs(rows[i][col]) < std::llabs(rows[best][col])) best = i;
        for (auto i : live) {
          if (i == best) continue;
          const long long q = rows[i][col] / rows[best][col];
          for (int j = 0; j < n_; ++j) rows[i][j] -= q * rows[best][j];
        }
      }
    }
  }

  int n_;
  int delta_;
  std::vector<Vec> basis_;
};

/// Multiplication table of the permutation group generated by `gens` (on
/// 0..degree-1), by naive closure.  Index 0 is the identity.
inline std::shared_ptr<const mnc::FiniteGroupTable> permutation_table(
    const std::vector<std::vector<std::uint32_t>>& gens) {
  using P = std::vector<std::uint32_t>;
  const auto degree = gens.at(0).size();
  P id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<P, std::uint32_t> index{{id, 0}};
  std::vector<P> elems{id};
  auto compose = [](const P& f, const P& g) {  // f after g
    P h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto h = compose(g, elems[i]);
      if (index.emplace(h, static_cast<std::uint32_t>(elems.size())).second) elems.push_back(h);
    }
  const auto n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::uint32_t> table(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) table[std::size_t{i} * n + j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return std::make_shared<mnc::FiniteGroupTable>(n, std::move(table), std::move(labels), false);
}

/// C3 wr C3 on 9 points.
inline std::shared_ptr<const mnc::FiniteGroupTable> c3_wreath_c3() {
  return permutation_table({{1, 2, 0, 3, 4, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 8, 0, 1, 2}});
}

/// Unitriangular 3x3 matrices over F_3, i.e. 3^{1+2}_+.
inline std::shared_ptr<const mnc::FiniteGroupTable> heisenberg() {
  // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]]
  auto code = [](int a, int b, int c) { return static_cast<std::uint32_t>(a * 9 + b * 3 + c); };
  std::vector<std::uint32_t> table(27 * 27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
              table[code(a, b, c) * 27 + code(x, y, z)] = code((a + x) % 3, (b + y) % 3, (c + z + a * y) % 3);
  std::vector<std::string> labels;
  for (int i = 0; i < 27; ++i) labels.push_back("h" + std::to_string(i));
  return std::make_shared<mnc::FiniteGroupTable>(27, std::move(table), std::move(labels), true);
}

/// Brute-force subgroup list of a small group: closures of all subsets of size <= 3.
inline std::set<std::vector<std::uint32_t>> brute_subgroups(const mnc::GroupOps& g) {
  const auto n = g.size();
  auto closure = [&](std::vector<std::uint32_t> gens) {
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> members{0};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto x : gens) {
        const auto y = g.mul(members[i], x);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  };
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x; y < n; ++y)
      for (std::uint32_t z = y; z < n; ++z) out.insert(closure({x, y, z}));
  return out;
}

}  // namespace oracle
