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

// Named system presets and the per-reference summarization run.
//
// Preset grammar: BASE("+"MODIFIER)*
//   asmds            coverage + diversity, at most m sentences
//   tls-constraints  coverage + diversity, at most ell dates and k per date
//   modifiers        cutoff | reweight (alias reweighting) | dateref | tempdiv
// plus the baselines `chieu` and `oracle`.

#ifndef TLSUM_PIPELINE_H_
#define TLSUM_PIPELINE_H_

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tlsum/baselines.h"
#include "tlsum/constraints.h"
#include "tlsum/corpus.h"
#include "tlsum/objectives.h"
#include "tlsum/optimizer.h"
#include "tlsum/similarity.h"
#include "tlsum/tokenizer.h"
#include "tlsum/vectorspace.h"

namespace tlsum {

inline constexpr int kDefaultCutoffDays = 10;

struct Preset {
  enum class Kind { kSubmodular, kChieu, kOracle };

  Kind kind = Kind::kSubmodular;
  bool tls_constraints = false;
  TemporalModifier::Kind modifier = TemporalModifier::Kind::kNone;
  bool dateref = false;
  bool tempdiv = false;
  std::string name;  // canonical spelling
};

inline Preset ParsePreset(const std::string& text) {
  Preset p;
  if (text == "chieu") {
    p.kind = Preset::Kind::kChieu;
    p.name = text;
    return p;
  }
  if (text == "oracle") {
    p.kind = Preset::Kind::kOracle;
    p.tls_constraints = true;
    p.name = text;
    return p;
  }
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, '+');) parts.push_back(part);
  if (parts.empty()) throw Error("empty preset name");
  if (parts[0] == "asmds") {
    p.tls_constraints = false;
  } else if (parts[0] == "tls-constraints") {
    p.tls_constraints = true;
  } else {
    throw Error("unknown preset base \"" + parts[0] + "\" in \"" + text + "\"");
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& m = parts[i];
    if (m == "cutoff" || m == "reweight" || m == "reweighting") {
      if (p.modifier != TemporalModifier::Kind::kNone) {
        throw Error("preset \"" + text + "\" combines two similarity modifiers");
      }
      p.modifier = m == "cutoff" ? TemporalModifier::Kind::kCutoff : TemporalModifier::Kind::kReweight;
    } else if (m == "dateref") {
      p.dateref = true;
    } else if (m == "tempdiv") {
      p.tempdiv = true;
    } else {
      throw Error("unknown preset modifier \"" + m + "\" in \"" + text + "\"");
    }
  }
  p.name = parts[0];
  if (p.tempdiv) p.name += "+tempdiv";
  if (p.dateref) p.name += "+dateref";
  if (p.modifier == TemporalModifier::Kind::kCutoff) p.name += "+cutoff";
  if (p.modifier == TemporalModifier::Kind::kReweight) p.name += "+reweight";
  return p;
}

// Presets run by default, in report order.
inline const std::vector<std::string>& ShippedPresets() {
  static const std::vector<std::string> kPresets = {
      "asmds",
      "asmds+cutoff",
      "asmds+reweight",
      "asmds+dateref",
      "asmds+tempdiv",
      "asmds+tempdiv+dateref",
      "tls-constraints",
      "tls-constraints+cutoff",
      "tls-constraints+reweight",
      "tls-constraints+dateref",
      "tls-constraints+dateref+reweight",
      "chieu",
  };
  return kPresets;
}

struct PipelineOptions {
  std::uint64_t seed = 0;
  int cutoff_days = kDefaultCutoffDays;
  DateRefMode dateref_mode = DateRefMode::kAllReferences;
  // Diversity rewards from the temporally modified similarity.
  bool modified_reward = true;
  VectorizerOptions vectorizer;
  // Replaces the preset's constraint; omitted fields come from the reference.
  std::optional<ConstraintSpec> constraint;
  bool lazy = true;
  int num_threads = 1;
  std::vector<TraceEvent>* trace = nullptr;
};

inline TemporalModifier ModifierFor(const Preset& preset, const PipelineOptions& options) {
  switch (preset.modifier) {
    case TemporalModifier::Kind::kCutoff:
      return TemporalModifier::Cutoff(options.cutoff_days);
    case TemporalModifier::Kind::kReweight:
      return TemporalModifier::Reweight();
    case TemporalModifier::Kind::kNone:
      break;
  }
  return TemporalModifier::None();
}

inline std::vector<int> WordCounts(const Corpus& corpus) {
  std::vector<int> counts;
  counts.reserve(corpus.size());
  for (const auto& s : corpus.sentences) counts.push_back(static_cast<int>(Tokenize(s.text).size()));
  return counts;
}

// Everything needed to run greedy for one reference timeline.
struct Problem {
  Corpus corpus;  // restricted to the reference span
  TimelineSpec spec;
  std::vector<SparseVector> vectors;
  std::shared_ptr<const VectorSimilarity> similarity;
  std::shared_ptr<const SetFunction> objective;
  std::shared_ptr<const IndependenceSystem> constraint;
};

inline std::shared_ptr<const IndependenceSystem> PresetConstraint(const Preset& preset,
                                                                  const Corpus& corpus,
                                                                  const TimelineSpec& spec,
                                                                  const PipelineOptions& options) {
  ConstraintContext ctx;
  ctx.dates = SentenceDates(corpus);
  ctx.word_counts = WordCounts(corpus);
  ctx.m = spec.m;
  ctx.ell = spec.ell;
  ctx.k = spec.k;
  if (options.constraint) {
    int words = 0;
    for (int w : ctx.word_counts) words = std::max(words, w);
    ctx.words = words * spec.m;
    return BuildConstraint(*options.constraint, ctx);
  }
  if (preset.tls_constraints) return std::make_shared<TlsConstraint>(spec.ell, spec.k, ctx.dates);
  return std::make_shared<CardinalityConstraint>(spec.m);
}

// `corpus` is tagged and keyword-filtered; it is restricted to the reference
// span here. Not valid for the chieu preset.
inline Problem BuildProblem(const Preset& preset, const Corpus& corpus, const Timeline& reference,
                            const PipelineOptions& options = {}) {
  if (preset.kind == Preset::Kind::kChieu) throw Error("chieu has no greedy objective");
  Problem p;
  p.spec = DeriveTimelineSpec(reference);
  p.corpus = RestrictToRange(corpus, p.spec.start, p.spec.end);
  p.constraint = PresetConstraint(preset, p.corpus, p.spec, options);
  if (preset.kind == Preset::Kind::kOracle) {
    p.objective = MakeOracle(OracleGains(p.corpus, reference));
    return p;
  }
  if (p.corpus.size() == 0) {
    p.objective = std::make_shared<ModularFunction>("empty", std::vector<double>{});
    return p;
  }
  const auto vectorizer = Vectorizer::Fit(p.corpus, options.vectorizer);
  p.vectors = vectorizer.VectorizeAll(p.corpus);
  const auto dates = SentenceDates(p.corpus);
  p.similarity = std::make_shared<VectorSimilarity>(p.vectors, dates);
  const TemporalModifier modifier = ModifierFor(preset, options);

  std::vector<std::shared_ptr<const SetFunction>> components;
  const auto coverage = MakeCoverage(*p.similarity, modifier);
  components.push_back(coverage);
  std::vector<double> rewards =
      options.modified_reward ? coverage->weights() : p.similarity->RowSums(TemporalModifier::None());
  if (preset.tempdiv) {
    components.push_back(MakeTemporalDiversity(dates, std::move(rewards)));
  } else {
    const int clusters = DiversityClusterCount(p.corpus.size());
    components.push_back(MakeDiversity(KMeans(p.vectors, clusters, options.seed), std::move(rewards)));
  }
  if (preset.dateref) components.push_back(MakeDateRef(p.corpus, options.dateref_mode));
  p.objective = std::make_shared<ComposedObjective>(ComposedObjective::Compose(std::move(components)));
  return p;
}

struct RunResult {
  Timeline timeline;
  SelectionState state;
  TimelineSpec spec;
  std::vector<SentenceId> selected_original;  // ids in the unrestricted corpus
};

inline RunResult Summarize(const Preset& preset, const Corpus& corpus, const Timeline& reference,
                           const PipelineOptions& options = {}) {
  RunResult result;
  if (preset.kind == Preset::Kind::kChieu) {
    // Chieu takes only the time span from the reference.
    result.spec = DeriveTimelineSpec(reference);
    const Corpus restricted = RestrictToRange(corpus, result.spec.start, result.spec.end);
    if (restricted.size() == 0) return result;
    const auto vectors = Vectorizer::Fit(restricted, options.vectorizer).VectorizeAll(restricted);
    const VectorSimilarity sim(vectors, SentenceDates(restricted));
    result.state.selected = ChieuSelect(ChieuRank(sim), SentenceDates(restricted));
    result.timeline = TimelineFromSelection(restricted, result.state.selected);
    for (const SentenceId id : result.state.selected) {
      result.selected_original.push_back(restricted.sentences[id].original_id);
    }
    return result;
  }
  const Problem problem = BuildProblem(preset, corpus, reference, options);
  result.spec = problem.spec;
  GreedyOptions greedy;
  greedy.num_threads = options.num_threads;
  greedy.trace = options.trace;
  result.state = options.lazy ? LazyGreedy(*problem.objective, *problem.constraint, greedy)
                              : Greedy(*problem.objective, *problem.constraint, greedy);
  result.timeline = TimelineFromSelection(problem.corpus, result.state.selected);
  for (const SentenceId id : result.state.selected) {
    result.selected_original.push_back(problem.corpus.sentences[id].original_id);
  }
  return result;
}

inline RunResult Summarize(const std::string& preset, const Corpus& corpus,
                           const Timeline& reference, const PipelineOptions& options = {}) {
  return Summarize(ParsePreset(preset), corpus, reference, options);
}

}  // namespace tlsum

#endif  // TLSUM_PIPELINE_H_
