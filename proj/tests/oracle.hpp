#pragma once

// Test-side reference implementations. Nothing here calls into the library's
// evaluator, parser or search; types are hand-written lambdas over raw tables.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Unit is 0, zero (if any) is n-1; t is row-major, a is alpha.
struct Raw {
  int n = 0;
  bool zero = true;
  std::vector<int> t;
  std::vector<int> a;

  int mul(int x, int y) const { return t[x * n + y]; }
  int al(int x) const { return a[x]; }
  auto key() const {
    // zero first, then e1, e2, ...
    auto rank = [&](int v) { return zero ? (v == n - 1 ? 0 : v + 1) : v; };
    std::vector<int> k{n};
    for (int v : t) k.push_back(rank(v));
    for (int v : a) k.push_back(rank(v));
    return k;
  }
  friend bool operator==(const Raw&, const Raw&) = default;
};

using Law = std::function<bool(const Raw&, int, int, int)>;

inline const std::map<std::string, Law>& assoc_laws() {
  static const std::map<std::string, Law> laws = {
      {"I1", [](const Raw& m, int x, int y, int z) { return m.mul(m.al(x), m.mul(y, z)) == m.mul(m.mul(x, y), m.al(z)); }},
      {"I2", [](const Raw& m, int x, int y, int z) { return m.mul(x, m.mul(m.al(y), z)) == m.mul(m.mul(x, m.al(y)), z); }},
      {"I3", [](const Raw& m, int x, int y, int z) { return m.mul(x, m.mul(y, m.al(z))) == m.mul(m.mul(m.al(x), y), z); }},
      {"II", [](const Raw& m, int x, int y, int z) { return m.mul(x, m.al(m.mul(y, z))) == m.mul(m.al(m.mul(x, y)), z); }},
      {"II1", [](const Raw& m, int x, int y, int z) {
         return m.mul(x, m.mul(m.al(y), m.al(z))) == m.mul(m.mul(m.al(x), m.al(y)), z);
       }},
      {"II2", [](const Raw& m, int x, int y, int z) {
         return m.mul(m.al(x), m.mul(y, m.al(z))) == m.mul(m.mul(m.al(x), y), m.al(z));
       }},
      {"II3", [](const Raw& m, int x, int y, int z) {
         return m.mul(m.al(x), m.mul(m.al(y), z)) == m.mul(m.mul(x, m.al(y)), m.al(z));
       }},
      {"III", [](const Raw& m, int x, int y, int z) { return m.al(m.mul(x, m.mul(y, z))) == m.al(m.mul(m.mul(x, y), z)); }},
      {"III'", [](const Raw& m, int x, int y, int z) {
         return m.mul(m.al(x), m.al(m.mul(y, z))) == m.mul(m.al(m.mul(x, y)), m.al(z));
       }},
      {"III''", [](const Raw& m, int x, int y, int z) {
         return m.mul(m.al(x), m.mul(m.al(y), m.al(z))) == m.mul(m.mul(m.al(x), m.al(y)), m.al(z));
       }},
  };
  return laws;
}

inline bool law_holds(const Raw& m, const std::string& name) {
  const auto& law = assoc_laws().at(name);
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      for (int z = 0; z < m.n; ++z)
        if (!law(m, x, y, z)) return false;
  return true;
}

inline std::set<std::string> profile(const Raw& m) {
  std::set<std::string> out;
  for (const auto& [name, law] : assoc_laws())
    if (law_holds(m, name)) out.insert(name);
  return out;
}

/// Every unital magma with k nonzero elements (unit 0), with the zero at index k
/// when `with_zero`.
inline std::vector<Raw> all_magmas(int k, bool with_zero = true) {
  const int n = k + (with_zero ? 1 : 0), free = k - 1;
  const int cells = free * free, vars = cells + k;
  std::vector<Raw> out;
  std::vector<int> v(vars, 0);
  while (true) {
    Raw m{n, with_zero, std::vector<int>(n * n), std::vector<int>(n)};
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int r;
        if (x == 0) r = y;
        else if (y == 0) r = x;
        else if (with_zero && (x == k || y == k)) r = k;
        else r = v[(x - 1) * free + (y - 1)];
        m.t[x * n + y] = r;
      }
    }
    for (int x = 0; x < k; ++x) m.a[x] = v[cells + x];
    if (with_zero) m.a[k] = k;
    out.push_back(std::move(m));
    int i = vars - 1;
    while (i >= 0 && v[i] == n - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

inline Raw relabel(const Raw& m, const std::vector<int>& p) {
  Raw r = m;
  for (int x = 0; x < m.n; ++x) {
    for (int y = 0; y < m.n; ++y) r.t[p[x] * m.n + p[y]] = p[m.mul(x, y)];
    r.a[p[x]] = p[m.al(x)];
  }
  return r;
}

inline Raw canonical(const Raw& m) {
  std::vector<int> p(m.n);
  std::iota(p.begin(), p.end(), 0);
  Raw best = m;
  const int last = m.zero ? m.n - 1 : m.n;
  do {
    Raw r = relabel(m, p);
    if (r.key() < best.key()) best = r;
  } while (std::next_permutation(p.begin() + 1, p.begin() + last));
  return best;
}

// --- linear algebra over Z/p --------------------------------------------------

using Vec = std::vector<long long>;

struct Alg {
  long long p;
  int d;
  std::vector<long long> c;  // (i*d+j)*d+k
  std::vector<std::vector<long long>> alpha;  // row i = alpha(e_i)

  long long md(long long v) const { return ((v % p) + p) % p; }
  Vec br(const Vec& u, const Vec& v) const {
    Vec r(d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (u[i] && v[j])
          for (int k = 0; k < d; ++k) r[k] = md(r[k] + u[i] * v[j] % p * c[(i * d + j) * d + k]);
    return r;
  }
  Vec al(const Vec& u) const {
    Vec r(d, 0);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) r[k] = md(r[k] + u[i] * alpha[i][k]);
    return r;
  }
  Vec add(Vec a, const Vec& b) const {
    for (int i = 0; i < d; ++i) a[i] = md(a[i] + b[i]);
    return a;
  }
  Vec e(int i) const {
    Vec v(d, 0);
    v[i] = 1;
    return v;
  }
  /// Cyclic sum over (x,y,z), (y,z,x), (z,x,y).
  template <class F>
  Vec cyc(F f, const Vec& x, const Vec& y, const Vec& z) const {
    return add(add(f(x, y, z), f(y, z, x)), f(z, x, y));
  }
};

inline bool zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace oracle
