// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force reference implementations used only by the tests. They work
// on std::set<int> and plain loops straight from the definitions and share
// no code with the library's bitmask paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Family = std::vector<Set>;

inline int mod(long v, int n) { return static_cast<int>(((v % n) + n) % n); }

inline Set sumset(int n, const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    for (int y : b) out.insert(mod(x + y, n));
  }
  return out;
}

inline Set difference(int n, const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    for (int y : b) out.insert(mod(x - y, n));
  }
  return out;
}

inline int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

inline bool generates(int g, int n) { return n == 1 || gcd(g, n) == 1; }

// Every (a, d) pair: S is {a, a+d, ..., a+(k-1)d} with k distinct terms.
inline Set ap_differences(int n, const Set& s) {
  Set out;
  const int k = static_cast<int>(s.size());
  for (int d = 0; d < n; ++d) {
    for (int a = 0; a < n; ++a) {
      Set walk;
      for (int i = 0; i < k; ++i) walk.insert(mod(a + static_cast<long>(i) * d, n));
      if (static_cast<int>(walk.size()) == k && walk == s) out.insert(d);
    }
  }
  return out;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline int rank(const Family& bases, const Set& a) {
  int best = 0;
  for (const auto& b : bases) best = std::max(best, static_cast<int>(intersect(b, a).size()));
  return best;
}

inline Set closure(int m, const Family& bases, const Set& a) {
  Set out;
  const int r = rank(bases, a);
  for (int x = 0; x < m; ++x) {
    Set ax = a;
    ax.insert(x);
    if (rank(bases, ax) == r) out.insert(x);
  }
  return out;
}

inline std::vector<Set> all_subsets(int m) {
  std::vector<Set> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Set s;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

inline bool independent(const Family& bases, const Set& s) {
  return std::any_of(bases.begin(), bases.end(), [&](const Set& b) { return subset(s, b); });
}

inline Family circuits(int m, const Family& bases) {
  Family out;
  for (const auto& c : all_subsets(m)) {
    if (independent(bases, c)) continue;
    bool minimal = true;
    for (int x : c) {
      Set smaller = c;
      smaller.erase(x);
      if (!independent(bases, smaller)) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Maximal subsets of rank r(M) - 1.
inline Family hyperplanes(int m, const Family& bases) {
  const int r = rank(bases, all_subsets(m).back());
  Family candidates;
  for (const auto& s : all_subsets(m)) {
    if (rank(bases, s) == r - 1) candidates.push_back(s);
  }
  Family out;
  for (const auto& h : candidates) {
    bool maximal = true;
    for (const auto& other : candidates) {
      if (other != h && subset(h, other)) maximal = false;
    }
    if (maximal) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bases of M/A expressed as subsets of the original ground set.
inline Family contract(const Family& bases, const Set& a) {
  const int ra = rank(bases, a);
  std::set<Set> out;
  for (const auto& j : bases) {
    if (static_cast<int>(intersect(j, a).size()) != ra) continue;
    Set rest;
    for (int x : j) {
      if (!a.count(x)) rest.insert(x);
    }
    out.insert(rest);
  }
  return Family(out.begin(), out.end());
}

inline Set base_weights(int n, const Family& bases, const std::vector<int>& w) {
  Set out;
  for (const auto& b : bases) {
    long sum = 0;
    for (int x : b) sum += w[static_cast<std::size_t>(x)];
    out.insert(mod(sum, n));
  }
  return out;
}

// Independence over GF(p) by trying every nonzero coefficient vector.
inline bool independent_gf_p(int p, const std::vector<std::vector<long>>& cols) {
  if (cols.empty()) return true;
  const std::size_t k = cols.size();
  const std::size_t rows = cols.front().size();
  std::vector<int> coef(k, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++coef[i] == p) coef[i++] = 0;
    if (i == k) return true;
    bool zero = true;
    for (std::size_t r = 0; r < rows && zero; ++r) {
      long s = 0;
      for (std::size_t j = 0; j < k; ++j) s += coef[j] * cols[j][r];
      zero = mod(s, p) == 0;
    }
    if (zero) return false;
  }
}

inline Family matrix_bases(int p, const std::vector<std::vector<long>>& cols) {
  const int m = static_cast<int>(cols.size());
  int best = 0;
  Family indep;
  for (const auto& s : all_subsets(m)) {
    std::vector<std::vector<long>> chosen;
    for (int x : s) chosen.push_back(cols[static_cast<std::size_t>(x)]);
    if (independent_gf_p(p, chosen)) {
      indep.push_back(s);
      best = std::max(best, static_cast<int>(s.size()));
    }
  }
  Family out;
  for (const auto& s : indep) {
    if (static_cast<int>(s.size()) == best) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First n-subset of indices (in subset enumeration order) with zero sum.
inline bool egz_exists(int n, const std::vector<int>& terms) {
  const int len = static_cast<int>(terms.size());
  for (int mask = 0; mask < (1 << len); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    long s = 0;
    for (int i = 0; i < len; ++i) {
      if (mask & (1 << i)) s += terms[static_cast<std::size_t>(i)];
    }
    if (mod(s, n) == 0) return true;
  }
  return false;
}

}  // namespace oracle
