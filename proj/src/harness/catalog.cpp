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

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "matroidsum/cyclic_sets.hpp"
#include "matroidsum/harness.hpp"

namespace matroidsum::harness {
namespace {

using Visitor = std::function<void(const InstanceView&)>;

struct NamedMatroid {
  std::string spec;
  Matroid matroid;
};

bool has_family(const CampaignConfig& c, std::string_view name) {
  return std::find(c.families.begin(), c.families.end(), name) != c.families.end();
}

bool pollard_ok(unsigned modulus, std::span<const unsigned> weights) {
  std::vector<unsigned> values(weights.begin(), weights.end());
  return pollard_condition(GroupSet::from_values(CyclicGroup(modulus), values));
}

// Every matrix over GF(p) with 1..max_rows rows and 1..max_cols columns,
// keeping the first matrix seen for each distinct labelled matroid of
// positive rank.
std::vector<NamedMatroid> linear_matroids(unsigned p, unsigned max_rows, unsigned max_cols) {
  std::vector<NamedMatroid> out;
  std::set<std::pair<unsigned, std::vector<Mask>>> seen;
  for (unsigned cols = 1; cols <= max_cols; ++cols) {
    for (unsigned rows = 1; rows <= max_rows; ++rows) {
      const unsigned cells = rows * cols;
      std::uint64_t total = 1;
      for (unsigned i = 0; i < cells; ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<long>> columns(cols, std::vector<long>(rows));
        std::uint64_t rest = code;
        for (unsigned j = 0; j < cols; ++j) {
          for (unsigned i = 0; i < rows; ++i) {
            columns[j][i] = static_cast<long>(rest % p);
            rest /= p;
          }
        }
        auto m = Matroid::from_matrix_gf_p(p, columns);
        if (m.rank() == 0) continue;
        std::vector<Mask> key(m.base_masks().begin(), m.base_masks().end());
        if (!seen.emplace(cols, std::move(key)).second) continue;
        out.push_back({matrix_spec(p, columns), std::move(m)});
      }
    }
  }
  return out;
}

std::vector<NamedMatroid> random_linear_matroids(const CampaignConfig& config) {
  SampleRng rng(*config.seed, "random_gf3");
  std::vector<NamedMatroid> out;
  std::set<std::string> seen;
  for (unsigned k = 0; k < config.random_gf3_count; ++k) {
    std::vector<std::vector<long>> columns(config.random_gf3_cols, std::vector<long>(config.random_gf3_rows));
    for (auto& c : columns) {
      for (auto& v : c) v = static_cast<long>(rng.below(3));
    }
    auto spec = matrix_spec(3, columns);
    auto m = Matroid::from_matrix_gf_p(3, columns);
    if (m.rank() == 0 || !seen.insert(spec).second) continue;
    out.push_back({std::move(spec), std::move(m)});
  }
  return out;
}

// a is a coloop, b, c, d are parallel.
constexpr std::string_view kParallelClass = "bases:4:{0,1}{0,2}{0,3}";

std::vector<std::string> hand_listed_specs() {
  return {
      std::string(kParallelClass),
      // U_2 on three elements plus a loop.
      "bases:4:{0,1}{0,2}{1,2}",
      // Fano plane.
      "gf:2:(1,0,0)(0,1,0)(0,0,1)(1,1,0)(1,0,1)(0,1,1)(1,1,1)",
  };
}

std::vector<NamedMatroid> matroid_family(const CampaignConfig& config) {
  std::vector<NamedMatroid> out;
  if (has_family(config, "uniform")) {
    for (unsigned m = 1; m <= config.uniform_max_ground; ++m) {
      for (unsigned r = 1; r <= m; ++r) out.push_back({uniform_spec(m, r), Matroid::uniform(m, r)});
    }
  }
  if (has_family(config, "direct_sum")) {
    for (unsigned m1 = 1; m1 < config.direct_sum_max_ground; ++m1) {
      for (unsigned m2 = 1; m1 + m2 <= config.direct_sum_max_ground; ++m2) {
        for (unsigned r1 = 0; r1 <= m1; ++r1) {
          for (unsigned r2 = 0; r2 <= m2; ++r2) {
            if (r1 + r2 == 0) continue;
            out.push_back({sum_spec(m1, r1, m2, r2),
                           Matroid::direct_sum(Matroid::uniform(m1, r1), Matroid::uniform(m2, r2))});
          }
        }
      }
    }
  }
  if (has_family(config, "gf2")) {
    for (auto& nm : linear_matroids(2, config.gf2_max_rows, config.gf2_max_cols)) out.push_back(std::move(nm));
  }
  if (has_family(config, "gf3")) {
    for (auto& nm : linear_matroids(3, config.gf3_max_rows, config.gf3_max_cols)) out.push_back(std::move(nm));
  }
  if (has_family(config, "random_gf3")) {
    for (auto& nm : random_linear_matroids(config)) out.push_back(std::move(nm));
  }
  if (has_family(config, "parallel_class")) {
    out.push_back({std::string(kParallelClass), parse_matroid_spec(kParallelClass)});
  }
  if (has_family(config, "hand_listed")) {
    for (auto& spec : hand_listed_specs()) {
      auto m = parse_matroid_spec(spec);
      out.push_back({std::move(spec), std::move(m)});
    }
  }
  return out;
}

// Weight maps of one matroid into Z_n: all of them, or `samples` drawn
// with the unit's own engine.
WorkUnit weight_unit(std::shared_ptr<const NamedMatroid> nm, unsigned modulus, const CampaignConfig& config) {
  std::string key = canonical_text(nm->spec, modulus, {});
  const unsigned samples = config.weight_samples;
  const bool filter = config.pollard_filter;
  const std::uint64_t seed = config.seed.value_or(0);
  auto enumerate = [nm, modulus, samples, filter, seed, key](const Visitor& visit) {
    const unsigned m = nm->matroid.ground_size();
    std::vector<unsigned> w(m, 0);
    auto emit = [&] {
      if (filter && m > 0 && !pollard_ok(modulus, w)) return;
      visit(InstanceView{nm->spec, nm->matroid, modulus, w});
    };
    if (samples > 0) {
      SampleRng rng(seed, key);
      for (unsigned s = 0; s < samples; ++s) {
        for (auto& x : w) x = static_cast<unsigned>(rng.below(modulus));
        emit();
      }
      return;
    }
    for (;;) {
      emit();
      std::size_t i = 0;
      while (i < m && ++w[i] == modulus) w[i++] = 0;
      if (i == m) break;
    }
  };
  return {std::move(key), std::move(enumerate)};
}

WorkUnit pairs_unit(unsigned modulus) {
  std::string key = "pairs|Z" + std::to_string(modulus);
  auto enumerate = [modulus](const Visitor& visit) {
    const CyclicGroup group(modulus);
    std::map<std::pair<unsigned, unsigned>, NamedMatroid> cache;
    const std::uint64_t limit = group.full_mask();
    for (std::uint64_t a = 1; a <= limit; ++a) {
      for (std::uint64_t b = 1; b <= limit; ++b) {
        const auto set_a = GroupSet::from_mask(group, a);
        const auto set_b = GroupSet::from_mask(group, b);
        const std::pair<unsigned, unsigned> sizes{set_a.size(), set_b.size()};
        auto it = cache.find(sizes);
        if (it == cache.end()) {
          it = cache
                   .emplace(sizes, NamedMatroid{sum_spec(sizes.first, 1, sizes.second, 1),
                                                Matroid::direct_sum(Matroid::uniform(sizes.first, 1),
                                                                    Matroid::uniform(sizes.second, 1))})
                   .first;
        }
        auto w = set_a.members();
        const auto tail = set_b.members();
        w.insert(w.end(), tail.begin(), tail.end());
        visit(InstanceView{it->second.spec, it->second.matroid, modulus, w});
      }
    }
  };
  return {std::move(key), std::move(enumerate)};
}

WorkUnit egz_unit(unsigned modulus, unsigned samples, std::uint64_t seed) {
  std::string key = "egz|Z" + std::to_string(modulus);
  auto enumerate = [modulus, samples, seed, key](const Visitor& visit) {
    const unsigned length = 2 * modulus - 1;
    const NamedMatroid nm{uniform_spec(length, modulus), Matroid::uniform(length, modulus)};
    std::vector<unsigned> w(length, 0);
    if (samples > 0) {
      SampleRng rng(seed, key);
      for (unsigned s = 0; s < samples; ++s) {
        for (auto& x : w) x = static_cast<unsigned>(rng.below(modulus));
        visit(InstanceView{nm.spec, nm.matroid, modulus, w});
      }
      return;
    }
    for (;;) {
      visit(InstanceView{nm.spec, nm.matroid, modulus, w});
      std::size_t i = 0;
      while (i < length && ++w[i] == modulus) w[i++] = 0;
      if (i == length) break;
    }
  };
  return {std::move(key), std::move(enumerate)};
}

}  // namespace

std::vector<std::string> negative_control_specs() {
  return {
      "bases:5:{1,2}{3,4}",  // B3: nothing repairs {1,2} - 1 towards {3,4}
      "bases:3:{0}{0,1}",    // B2
      "bases:3:",            // B1
      "bases:4:{0,1}{2}",    // unequal sizes, caught by B3
  };
}

std::vector<WorkUnit> catalog_units(const CampaignConfig& config) {
  config.validate();
  std::vector<WorkUnit> units;
  for (auto& nm : matroid_family(config)) {
    auto shared = std::make_shared<const NamedMatroid>(std::move(nm));
    for (auto n : config.moduli) units.push_back(weight_unit(shared, n, config));
  }
  if (has_family(config, "pairs")) {
    for (auto n : config.pairs_moduli) units.push_back(pairs_unit(n));
  }
  if (has_family(config, "egz")) {
    for (auto n : config.egz_moduli) units.push_back(egz_unit(n, config.egz_samples, config.seed.value_or(0)));
  }
  return units;
}

std::vector<InstanceDescriptor> build_catalog(const CampaignConfig& config) {
  std::vector<InstanceDescriptor> out;
  for (const auto& unit : catalog_units(config)) {
    unit.enumerate([&](const InstanceView& v) {
      out.push_back(make_descriptor(v.matroid_spec, v.modulus, std::vector<unsigned>(v.weights.begin(), v.weights.end())));
    });
  }
  return out;
}

}  // namespace matroidsum::harness
