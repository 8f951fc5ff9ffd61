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

#include "support/oracles.h"

#include <algorithm>
#include <set>

namespace csfm::reference {

std::vector<int> Members(Mask s) {
  std::vector<int> out;
  for (int e = 0; e < 64; ++e) {
    if ((s >> e) & 1) out.push_back(e);
  }
  return out;
}

bool Before(Mask a, Mask b) {
  const std::vector<int> x = Members(a);
  const std::vector<int> y = Members(b);
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::optional<Best> Maximize(int n, const ValueFn& f, const MemberFn& member) {
  std::optional<Best> best;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!member(s)) continue;
    const Rational v = f(s);
    if (!best || v > best->value || (v == best->value && Before(s, best->set))) {
      best = Best{s, v};
    }
  }
  return best;
}

std::vector<Mask> Feasible(int n, const MemberFn& member) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (member(s)) out.push_back(s);
  }
  return out;
}

std::optional<std::pair<Mask, Mask>> SubmodularViolation(int n,
                                                         const ValueFn& f) {
  const Mask limit = Mask{1} << n;
  std::vector<Rational> table;
  for (Mask s = 0; s < limit; ++s) table.push_back(f(s));
  for (Mask s = 0; s < limit; ++s) {
    for (Mask t = 0; t < limit; ++t) {
      if (table[s | t] + table[s & t] > table[s] + table[t]) {
        return std::make_pair(s, t);
      }
    }
  }
  return std::nullopt;
}

bool Monotone(int n, const ValueFn& f) {
  const Mask limit = Mask{1} << n;
  std::vector<Rational> table;
  for (Mask s = 0; s < limit; ++s) table.push_back(f(s));
  for (Mask s = 0; s < limit; ++s) {
    for (Mask t = 0; t < limit; ++t) {
      if ((s & t) == s && table[s] > table[t]) return false;
    }
  }
  return true;
}

Rational LovaszByIntegration(int n, const ValueFn& f,
                             const std::vector<Rational>& x) {
  std::set<Rational> points{Rational(0), Rational(1)};
  for (int e = 0; e < n; ++e) points.insert(x[e]);
  Rational total = 0;
  Rational previous = 0;
  for (const Rational& b : points) {
    if (b == 0) continue;
    // For Z in (previous, b] the level set is {e : x_e >= b}.
    Mask level = 0;
    for (int e = 0; e < n; ++e) {
      if (x[e] >= b) level |= Mask{1} << e;
    }
    total += (b - previous) * f(level);
    previous = b;
  }
  return total;
}

bool ConeEquation(int n, Mask s, Mask t, const Rational& alpha,
                  const std::vector<std::pair<Mask, Rational>>& terms) {
  for (int e = 0; e < n; ++e) {
    const int in_s = (s >> e) & 1;
    const int in_t = (t >> e) & 1;
    Rational lhs = 0;
    for (const auto& [a, lambda] : terms) {
      lhs += lambda * (static_cast<int>((a >> e) & 1) - in_s);
    }
    const Rational rhs = in_t + (alpha - 1) * (in_s * in_t) - alpha * in_s;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<Mask> SwapByScan(int n, const MemberFn& member, Mask s, int k,
                             int p) {
  std::vector<Mask> out;
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    if (!member(t)) continue;
    const int added = __builtin_popcountll(t & ~s);
    const int removed = __builtin_popcountll(s & ~t);
    if (added <= p && removed <= (k - 1) * p + 1) out.push_back(t);
  }
  return out;
}

int BlockInstance::Touched(Mask f) const {
  int count = 0;
  for (int i = 0; i < m; ++i) {
    const Mask block = ((Mask{1} << m) - 1) << (i * m);
    if (f & block) ++count;
  }
  return count;
}

bool BlockInstance::Feasible(Mask f) const {
  return Touched(f) <= beta || (f & ~secret) == 0;
}

bool BlockInstance::Special(Mask f) const {
  return Touched(f) > beta && (f & ~secret) == 0;
}

Mask LinOptByEnumeration(const BlockInstance& instance,
                         const std::vector<std::int64_t>& w) {
  const int n = instance.m * instance.m;
  const Mask limit = Mask{1} << n;
  std::vector<std::int64_t> sum(limit, 0);
  for (Mask s = 1; s < limit; ++s) {
    sum[s] = sum[s & (s - 1)] + w[__builtin_ctzll(s)];
  }
  std::optional<Mask> best_standard;
  std::optional<Mask> best_special;
  auto better = [&](Mask a, std::optional<Mask> b) {
    return !b || sum[a] > sum[*b] || (sum[a] == sum[*b] && Before(a, *b));
  };
  for (Mask s = 0; s < limit; ++s) {
    if (!instance.Feasible(s)) continue;
    if (instance.Special(s)) {
      if (better(s, best_special)) best_special = s;
    } else if (better(s, best_standard)) {
      best_standard = s;
    }
  }
  if (best_special && sum[*best_special] > sum[*best_standard]) {
    return *best_special;
  }
  return *best_standard;
}

}  // namespace csfm::reference
