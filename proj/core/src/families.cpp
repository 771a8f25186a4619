// Copyright 2026 The nsgroup Authors
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

#include "nsgroup/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "nsgroup/errors.hpp"

namespace nsgroup {
namespace {

using Perm = std::vector<unsigned>;

std::size_t factorial(unsigned n) {
  std::size_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// Lexicographic rank of a permutation word.
std::size_t lex_rank(const Perm& p) {
  const std::size_t n = p.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

bool is_even(const Perm& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (unsigned start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += '(';
    for (unsigned x = start; !done[x]; x = p[x]) {
      done[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

void check_cap(std::size_t order, const std::string& name,
               const Limits& limits) {
  if (order > limits.group_order) {
    std::ostringstream os;
    os << name << " has order " << order << ", above the group cap "
       << limits.group_order;
    throw OrderCapExceeded(os.str());
  }
}

FiniteGroup permutation_group(unsigned n, bool even_only,
                              const std::string& label, const Limits& limits) {
  std::vector<Perm> perms;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // Map lexicographic rank in S_n to position in `perms`.
  std::vector<Element> index_of(factorial(n), 0);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index_of[lex_rank(perms[i])] = static_cast<Element>(i);
  }
  const std::size_t order = perms.size();
  std::vector<Element> table(order * order);
  Perm composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (unsigned x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[a * order + b] = index_of[lex_rank(composed)];
    }
  }
  std::vector<std::string> names;
  names.reserve(order);
  for (const Perm& q : perms) names.push_back(cycle_notation(q));
  return FiniteGroup::from_table(order, std::move(table), label,
                                 std::move(names), TableOrigin::kDerived,
                                 limits);
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCyclic:
      return "C" + std::to_string(spec.n);
    case Family::kSymmetric:
      return "S" + std::to_string(spec.n);
    case Family::kAlternating:
      return "A" + std::to_string(spec.n);
    case Family::kDihedral:
      return "D" + std::to_string(spec.n);
    case Family::kQuaternion8:
      return "Q8";
    case Family::kKlein4:
      return "V4";
  }
  return "?";
}

FiniteGroup make_family(const FamilySpec& spec, const Limits& limits) {
  const std::string name = family_name(spec);
  const unsigned n = spec.n;
  switch (spec.family) {
    case Family::kCyclic: {
      if (n == 0) throw PreconditionViolated("cyclic group needs n >= 1");
      check_cap(n, name, limits);
      std::vector<Element> table(static_cast<std::size_t>(n) * n);
      for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
      }
      return FiniteGroup::from_table(n, std::move(table), name, {},
                                     TableOrigin::kDerived, limits);
    }
    case Family::kSymmetric:
    case Family::kAlternating: {
      if (n == 0 || n > kMaxPermutationDegree) {
        throw PreconditionViolated(name + ": permutation degree must be in 1.." +
                                   std::to_string(kMaxPermutationDegree));
      }
      const bool even_only = spec.family == Family::kAlternating;
      std::size_t order = factorial(n);
      if (even_only && n >= 2) order /= 2;
      check_cap(order, name, limits);
      return permutation_group(n, even_only, name, limits);
    }
    case Family::kDihedral: {
      if (n == 0) throw PreconditionViolated("dihedral group needs n >= 1");
      const std::size_t order = 2 * static_cast<std::size_t>(n);
      check_cap(order, name, limits);
      std::vector<Element> table(order * order);
      // Rotation r^k is k, reflection s r^k is n + k; r s = s r^-1.
      for (unsigned x = 0; x < order; ++x) {
        for (unsigned y = 0; y < order; ++y) {
          const bool xs = x >= n;
          const bool ys = y >= n;
          const unsigned a = x % n;
          const unsigned b = y % n;
          unsigned z = 0;
          if (!xs && !ys) z = (a + b) % n;
          if (!xs && ys) z = n + (b + n - a) % n;
          if (xs && !ys) z = n + (a + b) % n;
          if (xs && ys) z = (b + n - a) % n;
          table[x * order + y] = z;
        }
      }
      std::vector<std::string> names;
      for (unsigned k = 0; k < order; ++k) {
        const unsigned e = k % n;
        std::string rot = e == 0 ? "" : (e == 1 ? "r" : "r" + std::to_string(e));
        if (k < n) {
          names.push_back(rot.empty() ? "e" : rot);
        } else {
          names.push_back("s" + rot);
        }
      }
      return FiniteGroup::from_table(order, std::move(table), name,
                                     std::move(names), TableOrigin::kDerived,
                                     limits);
    }
    case Family::kQuaternion8: {
      check_cap(8, name, limits);
      // Unit u in {1,i,j,k} with sign s is index 2u + s.
      // kUnit[u][v] = (sign, unit) of u*v.
      static constexpr std::array<std::array<std::array<unsigned, 2>, 4>, 4>
          kUnit = {{
              {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
              {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
              {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
              {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
          }};
      std::vector<Element> table(64);
      for (unsigned x = 0; x < 8; ++x) {
        for (unsigned y = 0; y < 8; ++y) {
          const auto& uv = kUnit[x / 2][y / 2];
          const unsigned sign = (x % 2) ^ (y % 2) ^ uv[0];
          table[x * 8 + y] = 2 * uv[1] + sign;
        }
      }
      return FiniteGroup::from_table(
          8, std::move(table), name,
          {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, TableOrigin::kDerived,
          limits);
    }
    case Family::kKlein4: {
      check_cap(4, name, limits);
      std::vector<Element> table(16);
      for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) table[x * 4 + y] = x ^ y;
      }
      return FiniteGroup::from_table(4, std::move(table), name,
                                     {"e", "a", "b", "ab"},
                                     TableOrigin::kDerived, limits);
    }
  }
  throw PreconditionViolated("unknown family");
}

FiniteGroup cyclic(unsigned n, const Limits& limits) {
  return make_family({Family::kCyclic, n}, limits);
}
FiniteGroup symmetric(unsigned n, const Limits& limits) {
  return make_family({Family::kSymmetric, n}, limits);
}
FiniteGroup alternating(unsigned n, const Limits& limits) {
  return make_family({Family::kAlternating, n}, limits);
}
FiniteGroup dihedral(unsigned n, const Limits& limits) {
  return make_family({Family::kDihedral, n}, limits);
}
FiniteGroup quaternion8() { return make_family({Family::kQuaternion8, 8}); }
FiniteGroup klein4() { return make_family({Family::kKlein4, 4}); }

}  // namespace nsgroup
