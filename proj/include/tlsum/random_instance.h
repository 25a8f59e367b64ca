// Copyright 2026 The tlsum Authors.
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

// Small random instances for property checks: a symmetric similarity matrix
// over dated sentences, a semantic partition, date references and oracle
// gains.

#ifndef TLSUM_RANDOM_INSTANCE_H_
#define TLSUM_RANDOM_INSTANCE_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tlsum/common.h"
#include "tlsum/constraints.h"
#include "tlsum/objectives.h"
#include "tlsum/optimizer.h"
#include "tlsum/similarity.h"
#include "tlsum/vectorspace.h"

namespace tlsum {

struct RandomInstance {
  int n = 0;
  std::vector<Date> dates;
  std::shared_ptr<DenseSimilarity> similarity;
  Partition partition;
  std::vector<std::vector<Date>> references;
  std::vector<double> gains;
};

// Dates fall within `day_span` days, so a 10-day cutoff is active for
// spans above 11.
inline RandomInstance MakeRandomInstance(int n, std::uint64_t seed, int day_span = 30) {
  if (n < 1) throw Error("random instance needs at least one sentence");
  Rng rng(seed);
  RandomInstance inst;
  inst.n = n;
  const Date origin = Date::FromDayNumber(15000);
  // A handful of distinct days so that date groups have several members.
  const int num_days = 1 + static_cast<int>(UniformIndex(rng, std::max(1, n / 2)));
  std::vector<Date> days;
  for (int i = 0; i < num_days; ++i) days.push_back(origin + static_cast<int>(UniformIndex(rng, day_span)));
  for (int i = 0; i < n; ++i) inst.dates.push_back(days[UniformIndex(rng, days.size())]);

  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double x = Bernoulli(rng, 0.3) ? 0.0 : UniformDouble(rng);
      m[i][j] = m[j][i] = x;
    }
  }
  inst.similarity = std::make_shared<DenseSimilarity>(std::move(m), inst.dates);

  const int clusters = 1 + static_cast<int>(UniformIndex(rng, std::max(1, n / 3)));
  inst.partition.num_clusters = clusters;
  for (int i = 0; i < n; ++i) inst.partition.cluster_of.push_back(static_cast<int>(UniformIndex(rng, clusters)));

  for (int i = 0; i < n; ++i) {
    std::vector<Date> refs = {inst.dates[i]};
    const int extra = static_cast<int>(UniformIndex(rng, 3));
    for (int e = 0; e < extra; ++e) refs.push_back(days[UniformIndex(rng, days.size())]);
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    inst.references.push_back(std::move(refs));
    inst.gains.push_back(Bernoulli(rng, 0.4) ? 0.0 : UniformDouble(rng));
  }
  return inst;
}

// Every shipped component on `inst`: coverage under the three modifiers,
// diversity, temporal diversity, date references and the oracle.
inline std::vector<std::shared_ptr<const SetFunction>> ShippedComponents(const RandomInstance& inst,
                                                                        int cutoff_days = 10) {
  const auto rewards = inst.similarity->RowSums(TemporalModifier::None());
  return {
      MakeCoverage(*inst.similarity, TemporalModifier::None()),
      MakeCoverage(*inst.similarity, TemporalModifier::Cutoff(cutoff_days)),
      MakeCoverage(*inst.similarity, TemporalModifier::Reweight()),
      MakeDiversity(inst.partition, rewards),
      MakeTemporalDiversity(inst.dates, rewards),
      std::make_shared<DateRefFunction>(inst.dates, inst.references),
      MakeOracle(inst.gains),
  };
}

// A normalized mixture of components, chosen by `rng`, that is never empty.
inline std::shared_ptr<const SetFunction> RandomObjective(const RandomInstance& inst, Rng& rng) {
  static const TemporalModifier kModifiers[] = {TemporalModifier::None(), TemporalModifier::Cutoff(10),
                                                TemporalModifier::Reweight()};
  const TemporalModifier mod = kModifiers[UniformIndex(rng, 3)];
  const auto coverage = MakeCoverage(*inst.similarity, mod);
  std::vector<std::shared_ptr<const SetFunction>> parts = {coverage};
  if (Bernoulli(rng, 0.5)) {
    parts.push_back(MakeDiversity(inst.partition, coverage->weights()));
  } else {
    parts.push_back(MakeTemporalDiversity(inst.dates, coverage->weights()));
  }
  if (Bernoulli(rng, 0.5)) parts.push_back(std::make_shared<DateRefFunction>(inst.dates, inst.references));
  return std::make_shared<ComposedObjective>(ComposedObjective::Compose(std::move(parts)));
}

// Seeded TLS instances with at most `max_n` sentences and ell <= 3.
inline std::vector<ProblemInstance> TlsGuaranteeBatch(int k, int count, std::uint64_t seed,
                                                      int max_n = 12) {
  std::vector<ProblemInstance> batch;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t instance_seed = seed * 1000003ULL + static_cast<std::uint64_t>(k) * 7919ULL + i;
    Rng rng(instance_seed);
    const int n = 4 + static_cast<int>(UniformIndex(rng, max_n - 3));
    const int ell = 1 + static_cast<int>(UniformIndex(rng, 3));
    auto inst = MakeRandomInstance(n, instance_seed ^ 0x9e3779b97f4a7c15ULL);
    ProblemInstance p;
    p.seed = instance_seed;
    p.objective = RandomObjective(inst, rng);
    p.constraint = std::make_shared<TlsConstraint>(ell, k, inst.dates);
    batch.push_back(std::move(p));
  }
  return batch;
}

}  // namespace tlsum

#endif  // TLSUM_RANDOM_INSTANCE_H_
