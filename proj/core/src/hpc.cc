// Copyright 2026 The Degenlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degenlab/hpc.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace degenlab {
namespace {

void require_sampler_m(int m) {
  if (m < 4 || m % 4 != 0) {
    throw std::invalid_argument("m must be a positive multiple of 4, got " +
                                std::to_string(m));
  }
}

std::vector<int> iota_vector(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> complement(int m, const ElementSet& s) {
  const std::vector<int> all = iota_vector(m);
  std::vector<int> out;
  std::set_difference(all.begin(), all.end(), s.begin(), s.end(),
                      std::back_inserter(out));
  return out;
}

using Family = std::vector<std::vector<ElementSet>>;

Family empty_family(int r, int m) {
  return Family(r, std::vector<ElementSet>(m));
}

std::string pair_name(char fam, int layer, int coord) {
  const bool over_y = fam == 'A';
  return std::string(over_y ? "A/B" : "C/D") + " layer " + std::to_string(layer + 1) +
         " at " + (over_y ? "x_" : "y_") + std::to_string(coord + 1);
}

void check_set(const ElementSet& s, int m, const std::string& where) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= m) throw std::invalid_argument(where + ": element out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument(where + ": set not sorted");
  }
}

}  // namespace

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

int intersection_element(const SetIntInstance& si) {
  ElementSet common = intersect(si.x, si.y);
  if (common.size() != 1) {
    throw std::invalid_argument("Set-Intersection promise violated: |X & Y| = " +
                                std::to_string(common.size()));
  }
  return common[0];
}

ElementSet sample_setint_side(int m, Coins& coins) {
  require_sampler_m(m);
  return sample_subset(coins, iota_vector(m), m / 4);
}

ElementSet sample_setint_partner(int m, const ElementSet& given, Coins& coins) {
  require_sampler_m(m);
  if (static_cast<int>(given.size()) != m / 4) {
    throw std::invalid_argument("conditioning set must have size m/4");
  }
  const int e = given[coins.below(given.size())];
  ElementSet rest = sample_subset(coins, complement(m, given), m / 4 - 1);
  rest.insert(std::lower_bound(rest.begin(), rest.end(), e), e);
  return rest;
}

SetIntInstance sample_setint(int m, Coins& coins) {
  require_sampler_m(m);
  const int q = m / 4 - 1;
  ElementSet x_prime = sample_subset(coins, iota_vector(m), q);
  ElementSet y_prime = sample_subset(coins, complement(m, x_prime), q);
  ElementSet both;
  std::set_union(x_prime.begin(), x_prime.end(), y_prime.begin(), y_prime.end(),
                 std::back_inserter(both));
  ElementSet outside = complement(m, both);
  const int e = outside[coins.below(outside.size())];
  SetIntInstance si{m, std::move(x_prime), std::move(y_prime)};
  si.x.insert(std::lower_bound(si.x.begin(), si.x.end(), e), e);
  si.y.insert(std::lower_bound(si.y.begin(), si.y.end(), e), e);
  return si;
}

SetIntInstance sample_setint(int m, Rng& rng) {
  RngCoins coins(rng);
  return sample_setint(m, coins);
}

void validate(const MHPCInstance& inst) {
  const int m = inst.m;
  const int r = inst.r;
  if (m < 1 || r < 1) throw std::invalid_argument("instance needs m >= 1 and r >= 1");
  for (const Family* f : {&inst.a, &inst.b, &inst.c, &inst.d}) {
    if (static_cast<int>(f->size()) != r) throw std::invalid_argument("family has wrong layer count");
    for (const auto& layer : *f) {
      if (static_cast<int>(layer.size()) != m) {
        throw std::invalid_argument("family layer has wrong coordinate count");
      }
    }
  }
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < m; ++i) {
      const std::string ab = pair_name('A', j, i);
      const std::string cd = pair_name('C', j, i);
      check_set(inst.a[j][i], m, ab);
      check_set(inst.b[j][i], m, ab);
      check_set(inst.c[j][i], m, cd);
      check_set(inst.d[j][i], m, cd);
      if (intersect(inst.a[j][i], inst.b[j][i]).size() != 1) {
        throw std::invalid_argument(ab + ": intersection is not a single element");
      }
      if (intersect(inst.c[j][i], inst.d[j][i]).size() != 1) {
        throw std::invalid_argument(cd + ": intersection is not a single element");
      }
    }
  }
}

MHPCInstance sample_bmhpc(int m, int r, Coins& coins) {
  require_sampler_m(m);
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  MHPCInstance inst{m, r, empty_family(r, m), empty_family(r, m),
                    empty_family(r, m), empty_family(r, m)};
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < m; ++i) {
      SetIntInstance ab = sample_setint(m, coins);
      inst.a[j][i] = std::move(ab.x);
      inst.b[j][i] = std::move(ab.y);
    }
    for (int i = 0; i < m; ++i) {
      SetIntInstance cd = sample_setint(m, coins);
      inst.c[j][i] = std::move(cd.x);
      inst.d[j][i] = std::move(cd.y);
    }
  }
  return inst;
}

MHPCInstance sample_bmhpc(int m, int r, Rng& rng) {
  RngCoins coins(rng);
  return sample_bmhpc(m, r, coins);
}

MHPCInstance sample_bhpc(int m, int r, Coins& coins) {
  MHPCInstance one = sample_bmhpc(m, 1, coins);
  MHPCInstance inst = one;
  inst.r = r;
  inst.a.assign(r, one.a[0]);
  inst.b.assign(r, one.b[0]);
  inst.c.assign(r, one.c[0]);
  inst.d.assign(r, one.d[0]);
  return inst;
}

MHPCInstance sample_bhpc(int m, int r, Rng& rng) {
  RngCoins coins(rng);
  return sample_bhpc(m, r, coins);
}

PointerPath chase(const MHPCInstance& inst) {
  PointerPath path;
  path.z.push_back(0);
  for (int j = 1; j <= inst.r; ++j) {
    const int at = path.z.back();
    const bool ab_layer = j % 2 == 1;
    const auto& lhs = ab_layer ? inst.a : inst.c;
    const auto& rhs = ab_layer ? inst.b : inst.d;
    if (at < 0 || at >= inst.m || static_cast<int>(lhs.size()) < j) {
      throw std::invalid_argument("malformed instance during chase");
    }
    ElementSet common = intersect(lhs[j - 1][at], rhs[j - 1][at]);
    if (common.size() != 1) {
      throw std::invalid_argument(pair_name(ab_layer ? 'A' : 'C', j - 1, at) +
                                  ": intersection is not a single element");
    }
    path.z.push_back(common[0]);
  }
  path.bit = element_bit(path.z.back());
  return path;
}

MHPCInstance figure_one_instance() {
  const int m = 3;
  const int r = 3;
  MHPCInstance inst{m, r, empty_family(r, m), empty_family(r, m),
                    empty_family(r, m), empty_family(r, m)};
  inst.a[0] = {{0, 1}, {0, 1}, {1}};
  inst.b[0] = {{1, 2}, {0}, {1, 2}};
  inst.c[1] = {{0}, {0, 1}, {2}};
  inst.d[1] = {{0, 1}, {1, 2}, {1, 2}};
  inst.a[2] = {{1}, {1, 2}, {0}};
  inst.b[2] = {{0, 1}, {2}, {0, 2}};
  for (int i = 0; i < m; ++i) {
    inst.c[0][i] = inst.d[0][i] = {0};
    inst.a[1][i] = inst.b[1][i] = {0};
    inst.c[2][i] = inst.d[2][i] = {0};
  }
  return inst;
}

MHPCInstance pad_to_multiple_of_four(const MHPCInstance& inst) {
  validate(inst);
  const int old_m = inst.m;
  const int m = (old_m + 3) / 4 * 4;
  if (m == old_m) return inst;
  MHPCInstance out = inst;
  out.m = m;
  for (int j = 0; j < inst.r; ++j) {
    for (auto* fam : {&out.a[j], &out.b[j], &out.c[j], &out.d[j]}) {
      fam->resize(m, ElementSet{old_m});
    }
  }
  return out;
}

nlohmann::json to_json(const MHPCInstance& inst) {
  auto flat = [&](const Family& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& layer : f) {
      for (const auto& s : layer) arr.push_back(s);
    }
    return arr;
  };
  return {{"m", inst.m}, {"r", inst.r}, {"A", flat(inst.a)},
          {"B", flat(inst.b)}, {"C", flat(inst.c)}, {"D", flat(inst.d)}};
}

MHPCInstance instance_from_json(const nlohmann::json& j) {
  MHPCInstance inst;
  inst.m = j.at("m").get<int>();
  inst.r = j.at("r").get<int>();
  if (inst.m < 1 || inst.r < 1) throw std::invalid_argument("instance needs m, r >= 1");
  auto unflat = [&](const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(inst.m) * inst.r) {
      throw std::invalid_argument(std::string("family ") + key + " must hold r*m sets");
    }
    Family f = empty_family(inst.r, inst.m);
    for (int l = 0; l < inst.r; ++l) {
      for (int i = 0; i < inst.m; ++i) {
        f[l][i] = arr.at(static_cast<std::size_t>(l) * inst.m + i).get<ElementSet>();
      }
    }
    return f;
  };
  inst.a = unflat("A");
  inst.b = unflat("B");
  inst.c = unflat("C");
  inst.d = unflat("D");
  validate(inst);
  return inst;
}

Embedding embed_setint(const SetIntInstance& si, int layer, int r,
                       Coins& public_coins, Coins& alice_coins, Coins& bob_coins) {
  const int m = si.m;
  require_sampler_m(m);
  if (static_cast<int>(si.x.size()) != m / 4 || static_cast<int>(si.y.size()) != m / 4) {
    throw std::invalid_argument("embedding needs |X| = |Y| = m/4");
  }
  check_set(si.x, m, "X");
  check_set(si.y, m, "Y");
  intersection_element(si);
  if (r < 1 || layer < 1 || layer > r) throw std::invalid_argument("layer out of range");
  const int jj = layer - 1;

  Embedding out;
  MHPCInstance& inst = out.instance;
  inst = MHPCInstance{m, r, empty_family(r, m), empty_family(r, m),
                      empty_family(r, m), empty_family(r, m)};

  // Target layer: public I, public A before I and B after I, then the
  // conditional completions from private coins.
  const int pos = static_cast<int>(public_coins.below(m));
  out.position = pos;
  inst.a[jj][pos] = si.x;
  inst.b[jj][pos] = si.y;
  for (int i = 0; i < pos; ++i) inst.a[jj][i] = sample_setint_side(m, public_coins);
  for (int i = pos + 1; i < m; ++i) inst.b[jj][i] = sample_setint_side(m, public_coins);

  // Other layers and all of C, D from public coins.
  for (int l = 0; l < r; ++l) {
    if (l < jj) {
      for (int i = 0; i < m; ++i) inst.a[l][i] = sample_setint_side(m, public_coins);
    } else if (l > jj) {
      for (int i = 0; i < m; ++i) inst.b[l][i] = sample_setint_side(m, public_coins);
    }
    for (int i = 0; i < m; ++i) {
      SetIntInstance cd = sample_setint(m, public_coins);
      inst.c[l][i] = std::move(cd.x);
      inst.d[l][i] = std::move(cd.y);
    }
  }

  for (int i = pos + 1; i < m; ++i) {
    inst.a[jj][i] = sample_setint_partner(m, inst.b[jj][i], alice_coins);
  }
  for (int l = jj + 1; l < r; ++l) {
    for (int i = 0; i < m; ++i) inst.a[l][i] = sample_setint_partner(m, inst.b[l][i], alice_coins);
  }
  for (int i = 0; i < pos; ++i) {
    inst.b[jj][i] = sample_setint_partner(m, inst.a[jj][i], bob_coins);
  }
  for (int l = 0; l < jj; ++l) {
    for (int i = 0; i < m; ++i) inst.b[l][i] = sample_setint_partner(m, inst.a[l][i], bob_coins);
  }
  return out;
}

}  // namespace degenlab
