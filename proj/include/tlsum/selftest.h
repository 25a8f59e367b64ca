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

// The property battery behind `tlsum selftest`.

#ifndef TLSUM_SELFTEST_H_
#define TLSUM_SELFTEST_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tlsum/constraints.h"
#include "tlsum/objectives.h"
#include "tlsum/optimizer.h"
#include "tlsum/random_instance.h"

namespace tlsum {

struct SelfTestOptions {
  std::uint64_t seed = 0;
  int instances = 20;
  int ground_size = 12;
  int trials = 10000;
  int guarantee_instances = 200;
  // Adds a supermodular component; the battery must then fail.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SelfTestReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

inline std::shared_ptr<const SetFunction> SupermodularFixture(int n) {
  return std::make_shared<CallableSetFunction>("size-squared", n, [](std::span<const SentenceId> s) {
    const double size = static_cast<double>(Canonicalize(s).size());
    return size * size;
  });
}

inline SelfTestReport RunSelfTest(const SelfTestOptions& opt = {}) {
  SelfTestReport report;
  const auto add = [&report](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  // Submodularity, monotonicity and marginal consistency per component.
  {
    std::vector<std::string> names;
    std::vector<SubmodularityReport> worst;
    double worst_marginal = 0.0;
    for (int i = 0; i < opt.instances; ++i) {
      const auto inst = MakeRandomInstance(opt.ground_size, opt.seed * 7919ULL + i);
      auto components = ShippedComponents(inst);
      if (opt.inject_fault) components.push_back(SupermodularFixture(inst.n));
      if (names.empty()) {
        for (const auto& c : components) names.push_back(c->name());
        worst.resize(components.size());
      }
      for (std::size_t c = 0; c < components.size(); ++c) {
        const auto r = CheckMonotoneSubmodular(*components[c], opt.trials, opt.seed + 31ULL * i + c);
        worst[c].trials += r.trials;
        worst[c].max_submodularity_violation =
            std::max(worst[c].max_submodularity_violation, r.max_submodularity_violation);
        worst[c].max_monotonicity_violation =
            std::max(worst[c].max_monotonicity_violation, r.max_monotonicity_violation);
        worst_marginal = std::max(worst_marginal,
                                  MaxMarginalInconsistency(*components[c], 1000 / opt.instances + 1,
                                                           opt.seed + 17ULL * i + c));
      }
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      std::ostringstream detail;
      detail << worst[c].trials << " triples, max violation submodular="
             << worst[c].max_submodularity_violation
             << " monotone=" << worst[c].max_monotonicity_violation;
      add("monotone-submodular " + names[c], worst[c].passed(), detail.str());
    }
    std::ostringstream detail;
    detail << "max |marginal - difference| = " << worst_marginal;
    add("marginal consistency", worst_marginal <= kPropertyTolerance, detail.str());
  }

  // Downward closure for each constraint type.
  {
    bool ok = true;
    int systems = 0;
    for (int i = 0; i < opt.instances && ok; ++i) {
      const auto inst = MakeRandomInstance(opt.ground_size, opt.seed * 104729ULL + i);
      std::vector<int> words;
      Rng rng(opt.seed + i);
      for (int s = 0; s < inst.n; ++s) words.push_back(1 + static_cast<int>(UniformIndex(rng, 20)));
      const auto tls = std::make_shared<TlsConstraint>(2, 2, inst.dates);
      const auto card = std::make_shared<CardinalityConstraint>(3);
      const std::vector<std::shared_ptr<const IndependenceSystem>> all = {
          card, std::make_shared<KnapsackConstraint>(30, words), tls,
          std::make_shared<AllOfConstraint>(std::vector<std::shared_ptr<const IndependenceSystem>>{card, tls})};
      for (const auto& sys : all) {
        ok = ok && VerifyDownwardClosure(*sys, inst.n, opt.trials / opt.instances + 1, opt.seed + i);
        ++systems;
      }
    }
    add("downward closure", ok, std::to_string(systems) + " systems");
  }

  // Base ratio: tls(ell, k) <= k, cardinality == 1.
  {
    bool ok = true;
    double worst_tls = 0.0;
    for (int i = 0; i < 10 && ok; ++i) {
      const auto inst = MakeRandomInstance(10, opt.seed * 15485863ULL + i);
      for (int k = 1; k <= 3; ++k) {
        const auto r = EstimateBaseRatio(TlsConstraint(2, k, inst.dates), inst.n);
        worst_tls = std::max(worst_tls, r.max_ratio / k);
        ok = ok && r.max_ratio <= k + kPropertyTolerance;
      }
      ok = ok && EstimateBaseRatio(CardinalityConstraint(3), inst.n).max_ratio == 1.0;
    }
    std::ostringstream detail;
    detail << "max tls ratio / k = " << worst_tls;
    add("base ratio", ok, detail.str());
  }

  // Greedy against the exhaustive optimum.
  for (int k = 1; k <= 3; ++k) {
    auto batch = TlsGuaranteeBatch(k, opt.guarantee_instances, opt.seed);
    if (opt.inject_fault) {
      // A supermodular objective breaks the guarantee.
      for (auto& p : batch) {
        const int n = p.objective->ground_size();
        p.objective = std::make_shared<CallableSetFunction>(
            "fault", n, [](std::span<const SentenceId> s) {
              const auto ids = Canonicalize(s);
              if (ids.size() == 1 && ids[0] == 0) return 1.0;
              return ids.size() >= 2 && !std::binary_search(ids.begin(), ids.end(), 0) ? 10.0 : 0.0;
            });
      }
    }
    const auto r = GuaranteeRatio(batch, k);
    std::ostringstream detail;
    detail << r.instances << " instances, min ratio " << r.min_ratio << " (bound " << r.bound << ")";
    add("greedy guarantee k=" + std::to_string(k), r.passed(), detail.str());
  }

  // Lazy and plain greedy agree.
  {
    int mismatches = 0;
    const auto batch = TlsGuaranteeBatch(2, 100, opt.seed + 1);
    for (const auto& p : batch) {
      if (Greedy(*p.objective, *p.constraint).selected !=
          LazyGreedy(*p.objective, *p.constraint).selected) {
        ++mismatches;
      }
    }
    add("lazy equals greedy", mismatches == 0,
        std::to_string(batch.size()) + " instances, " + std::to_string(mismatches) + " mismatches");
  }
  return report;
}

}  // namespace tlsum

#endif  // TLSUM_SELFTEST_H_
