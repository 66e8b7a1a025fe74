// Copyright 2026 The espwalk Authors
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

// Exhaustive classification of connection sets for small n.
//
// Class subsets are bitmasks over the nonzero vectors of F_2^(2n) ordered by
// integer value: bit i of the mask selects the vector with value i + 1.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "espwalk/confirm.hpp"
#include "espwalk/criteria.hpp"

namespace espwalk {

enum class SearchClass { PstAndProperFr = 0, PstOnly = 1, CospectralNoPst = 2, NotCospectral = 3 };

inline constexpr std::array<const char*, 4> kSearchClassNames = {"pst_and_proper_fr", "pst_only",
                                                                 "strongly_cospectral_no_pst", "not_strongly_cospectral"};

inline ConnectionSet connection_from_mask(int n, std::uint64_t mask, bool include_z) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  std::vector<GF2Vector> cs;
  for (std::uint64_t i = 0; (std::uint64_t{1} << i) <= mask; ++i)
    if ((mask >> i) & 1U) cs.push_back(GF2Vector(m, i + 1));
  return {n, std::move(cs), include_z};
}

inline std::uint64_t mask_of(const ConnectionSet& c) {
  std::uint64_t mask = 0;
  for (const auto& x : c.classes) mask |= std::uint64_t{1} << (x.value() - 1);
  return mask;
}

inline SearchClass classify(const ConnectionSet& c) {
  const auto pst = pst_decision(c);
  if (pst.admits) return fr_classify(c).kind == FrCase::ProperFr ? SearchClass::PstAndProperFr : SearchClass::PstOnly;
  return pst.strongly_cospectral ? SearchClass::CospectralNoPst : SearchClass::NotCospectral;
}

/// Every (C, include_z) with C spanning F_2^(2n) and S != G \ {1}, in
/// (mask, include_z) order.
inline std::vector<ConnectionSet> enumerate_valid(int n) {
  if (n < 1 || n > 2) throw DomainError("exhaustive enumeration supports n in {1, 2}");
  const std::uint64_t vectors = (std::uint64_t{1} << (2 * n)) - 1;
  std::vector<ConnectionSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vectors); ++mask)
    for (bool z : {false, true}) {
      auto c = connection_from_mask(n, mask, z);
      if (validate(c, true).valid) out.push_back(std::move(c));
    }
  return out;
}

/// `count` distinct strict-valid connection sets drawn with a seeded engine.
inline std::vector<ConnectionSet> random_valid_sets(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1 || n > 4) throw DomainError("random_valid_sets supports n in 1..4");
  if (n == 1) count = std::min(count, enumerate_valid(1).size());
  std::mt19937_64 rng(seed);
  const std::uint64_t vectors = (std::uint64_t{1} << (2 * n)) - 1;
  std::vector<ConnectionSet> out;
  std::set<std::pair<std::vector<GF2Vector>, bool>> seen;
  while (out.size() < count) {
    std::vector<GF2Vector> cs;
    for (std::uint64_t v = 1; v <= vectors; ++v)
      if (rng() & 1U) cs.push_back(GF2Vector(static_cast<std::size_t>(2 * n), v));
    const bool z = (rng() & 1U) != 0;
    ConnectionSet c(n, std::move(cs), z);
    if (!validate(c, true).valid) continue;
    if (!seen.insert({c.classes, z}).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

struct SampleCheck {
  ConnectionSet connection;
  bool agree = false;
  std::vector<std::string> disagreements;
};

struct SearchSummary {
  int n = 0;
  std::size_t total_valid = 0;
  std::array<std::size_t, 4> counts{};
  std::array<std::optional<ConnectionSet>, 4> exemplars;
  std::uint64_t seed = 0;
  std::vector<SampleCheck> verified;

  bool all_verified() const {
    return std::all_of(verified.begin(), verified.end(), [](const SampleCheck& s) { return s.agree; });
  }
};

inline SearchSummary search(int n, std::size_t verify_sample, std::uint64_t seed, IsoType iso = IsoType::Plus) {
  SearchSummary s;
  s.n = n;
  s.seed = seed;
  const auto all = enumerate_valid(n);
  s.total_valid = all.size();
  for (const auto& c : all) {
    const auto k = static_cast<std::size_t>(classify(c));
    if (s.counts[k]++ == 0) s.exemplars[k] = c;
  }
  if (verify_sample > 0) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const std::size_t take = std::min(verify_sample, idx.size());
    // Partial Fisher-Yates on raw engine output.
    for (std::size_t i = 0; i < take; ++i) std::swap(idx[i], idx[i + rng() % (idx.size() - i)]);
    std::sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take));
    const ExtraspecialGroup G(n, iso);
    for (std::size_t i = 0; i < take; ++i) {
      const auto& c = all[idx[i]];
      const auto conf = confirm(c, G);
      SampleCheck chk{c, conf.agree(), {}};
      for (const auto* d : conf.disagreements()) chk.disagreements.push_back(d->name + ": " + d->detail);
      s.verified.push_back(std::move(chk));
    }
  }
  return s;
}

}  // namespace espwalk
