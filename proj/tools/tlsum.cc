// tlsum: ingest corpora, summarize with presets, evaluate, analyze, selftest.
//
// Exit codes: 0 success, 1 usage or input error, 2 property failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlsum/tlsum.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tlsum {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitProperty = 2;

std::string Fmt(double x, int precision = 6) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, x);
  return buf;
}

void WriteFileAtomically(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void RequireFile(const fs::path& path, const std::string& what) {
  if (!fs::exists(path)) throw Error(what + " not found: " + path.string());
}

// Every *.json below `dir` keyed by relative path without extension, sorted.
std::map<std::string, fs::path> TimelineFiles(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::map<std::string, fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    fs::path rel = fs::relative(entry.path(), dir);
    rel.replace_extension();
    files[rel.generic_string()] = entry.path();
  }
  return files;
}

// A reference argument is a timeline file or a directory of them.
std::map<std::string, fs::path> ExpandReferences(const std::vector<std::string>& refs) {
  std::map<std::string, fs::path> out;
  for (const auto& r : refs) {
    RequireFile(r, "reference timeline");
    if (fs::is_directory(r)) {
      for (auto& [key, path] : TimelineFiles(r)) out[key] = path;
    } else {
      out[fs::path(r).stem().string()] = r;
    }
  }
  if (out.empty()) throw Error("no reference timelines given");
  return out;
}

json SentenceToJson(const Sentence& s) {
  std::vector<std::string> refs;
  for (const Date d : s.referenced_dates) refs.push_back(d.ToIso());
  return {{"id", s.id},
          {"original_id", s.original_id},
          {"doc_id", s.doc_id},
          {"date", s.date.ToIso()},
          {"date_source", DateSourceName(s.date_source)},
          {"referenced_dates", refs},
          {"text", s.text}};
}

Corpus LoadPreparedCorpus(const std::string& corpus_path, const std::string& keywords_path) {
  RequireFile(corpus_path, "corpus");
  Corpus corpus = TagSentenceDates(LoadCorpus(corpus_path));
  if (!keywords_path.empty()) {
    RequireFile(keywords_path, "keyword file");
    corpus = FilterByKeywords(corpus, LoadKeywords(keywords_path));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  std::string corpus;
  std::string keywords;
  std::string out;
};

int CmdIngest(const IngestArgs& a) {
  const Corpus corpus = LoadPreparedCorpus(a.corpus, a.keywords);
  std::string lines;
  std::size_t from_expression = 0;
  for (const auto& s : corpus.sentences) {
    lines += SentenceToJson(s).dump() + "\n";
    if (s.date_source == DateSource::kExpression) ++from_expression;
  }
  if (a.out.empty()) {
    std::cout << lines;
  } else {
    WriteFileAtomically(a.out, lines);
    std::cout << "sentences " << corpus.size() << ", dated by expression " << from_expression
              << ", written to " << a.out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// summarize

struct SummarizeArgs {
  std::string config;
  std::string corpus;
  std::string keywords;
  std::vector<std::string> references;
  std::vector<std::string> presets;
  std::string constraint;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> threads;
  std::optional<int> cutoff_days;
  bool trace = false;
};

std::string ConfigPath(const json& j, const char* key, const fs::path& base) {
  if (!j.contains(key)) return {};
  if (!j[key].is_string()) throw Error(std::string("config field \"") + key + "\" must be a string");
  const fs::path p = j[key].get<std::string>();
  return (p.is_absolute() ? p : base / p).lexically_normal().string();
}

std::vector<std::string> StringOrList(const json& j, const char* key, const fs::path* base) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const auto one = [&](const json& v) {
    if (!v.is_string()) throw Error(std::string("config field \"") + key + "\" must hold strings");
    fs::path p = v.get<std::string>();
    if (base && !p.is_absolute()) p = (*base / p).lexically_normal();
    out.push_back(base ? p.string() : v.get<std::string>());
  };
  if (j[key].is_array()) {
    for (const auto& v : j[key]) one(v);
  } else {
    one(j[key]);
  }
  return out;
}

int CmdSummarize(SummarizeArgs a) {
  PipelineOptions options;
  std::string output_dir = "out";
  bool trace = a.trace;
  if (!a.config.empty()) {
    RequireFile(a.config, "config");
    std::ifstream in(a.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw Error(a.config + ": " + e.what());
    }
    const fs::path base = fs::path(a.config).parent_path();
    if (a.corpus.empty()) a.corpus = ConfigPath(j, "corpus", base);
    if (a.keywords.empty()) a.keywords = ConfigPath(j, "keywords", base);
    if (a.references.empty()) a.references = StringOrList(j, "references", &base);
    if (a.presets.empty()) {
      a.presets = StringOrList(j, "presets", nullptr);
      for (auto& p : StringOrList(j, "preset", nullptr)) a.presets.push_back(p);
    }
    if (j.contains("output_dir")) output_dir = ConfigPath(j, "output_dir", base);
    if (j.contains("seed")) options.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("cutoff_days")) options.cutoff_days = j["cutoff_days"].get<int>();
    if (j.contains("threads")) options.num_threads = j["threads"].get<int>();
    if (j.contains("trace")) trace = trace || j["trace"].get<bool>();
    if (j.contains("modified_reward")) options.modified_reward = j["modified_reward"].get<bool>();
    if (j.contains("constraint")) options.constraint = ParseConstraintSpec(j["constraint"]);
    if (j.contains("dateref")) {
      const auto mode = j["dateref"].get<std::string>();
      if (mode == "all") {
        options.dateref_mode = DateRefMode::kAllReferences;
      } else if (mode == "assigned") {
        options.dateref_mode = DateRefMode::kAssignedDate;
      } else {
        throw Error("config \"dateref\" must be \"all\" or \"assigned\"");
      }
    }
    if (j.contains("term_weighting")) {
      const auto w = j["term_weighting"].get<std::string>();
      if (w == "raw") {
        options.vectorizer.term_weighting = TermWeighting::kRawCount;
      } else if (w == "boolean") {
        options.vectorizer.term_weighting = TermWeighting::kBoolean;
      } else {
        throw Error("config \"term_weighting\" must be \"raw\" or \"boolean\"");
      }
    }
    if (j.contains("stopwords")) options.vectorizer.remove_stopwords = j["stopwords"].get<bool>();
  }
  if (const char* env = std::getenv("TLSUM_OUTPUT_DIR"); env && *env) output_dir = env;
  if (!a.out.empty()) output_dir = a.out;
  if (a.seed) options.seed = *a.seed;
  if (a.threads) options.num_threads = *a.threads;
  if (a.cutoff_days) options.cutoff_days = *a.cutoff_days;
  if (!a.constraint.empty()) {
    try {
      options.constraint = ParseConstraintSpec(json::parse(a.constraint));
    } catch (const json::parse_error& e) {
      throw Error(std::string("--constraint: ") + e.what());
    }
  }
  if (a.corpus.empty()) throw Error("no corpus given (--corpus or config \"corpus\")");
  if (a.presets.empty()) throw Error("no preset given (--preset or config \"preset\")");

  std::vector<Preset> presets;
  for (const auto& name : a.presets) presets.push_back(ParsePreset(name));
  const auto references = ExpandReferences(a.references);
  const Corpus corpus = LoadPreparedCorpus(a.corpus, a.keywords);

  for (const auto& preset : presets) {
    for (const auto& [key, path] : references) {
      const Timeline reference = LoadTimeline(path);
      std::vector<TraceEvent> events;
      PipelineOptions run_options = options;
      if (trace) run_options.trace = &events;
      const RunResult run = Summarize(preset, corpus, reference, run_options);
      const fs::path target = fs::path(output_dir) / preset.name / (key + ".json");
      WriteFileAtomically(target, SerializeTimeline(run.timeline));
      if (trace && preset.kind != Preset::Kind::kChieu) {
        std::ostringstream t;
        WriteTraceJsonl(t, events);
        WriteFileAtomically(fs::path(output_dir) / preset.name / (key + ".trace.jsonl"), t.str());
      }
      std::cout << preset.name << "\t" << key << "\tdates " << run.timeline.entries.size()
                << "\tsentences " << run.timeline.num_sentences() << "\tobjective "
                << Fmt(run.state.objective_value) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::vector<std::string> preds;
  std::string ref;
  std::string corpus;
  std::string out;
  std::string significance;
  int iters = 9999;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& MetricColumns() {
  static const std::vector<std::string> kColumns = {
      "concat_r1", "concat_r2", "agreement_r1", "agreement_r2", "align_m1_r1", "align_m1_r2",
      "date_f1",   "compression_rate", "spread", "max_daily_len"};
  return kColumns;
}

std::vector<double> ReportValues(const EvalReport& r) {
  return {r.concat[0].f1,   r.concat[1].f1, r.agreement[0].f1,  r.agreement[1].f1,
          r.align_m1[0].f1, r.align_m1[1].f1, r.date_f1, r.compression_rate,
          r.spread,         static_cast<double>(r.max_daily_len)};
}

// Columns compared for significance.
constexpr int kSignificanceColumns[] = {0, 2, 4, 6};

int CmdEvaluate(const EvaluateArgs& a) {
  std::vector<std::pair<std::string, fs::path>> systems;
  for (const auto& p : a.preds) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--pred expects NAME=DIR, got " + p);
    const std::string name = p.substr(0, eq);
    if (name.find(',') != std::string::npos) throw Error("system names may not contain commas: " + name);
    systems.emplace_back(name, p.substr(eq + 1));
  }
  const auto refs = TimelineFiles(a.ref);
  if (refs.empty()) throw Error("no reference timelines in " + a.ref);
  std::size_t corpus_sentences = 0;
  if (!a.corpus.empty()) {
    RequireFile(a.corpus, "corpus");
    corpus_sentences = LoadCorpus(a.corpus).size();
  }

  std::vector<std::string> unmatched;
  std::vector<std::map<std::string, fs::path>> pred_files;
  for (const auto& [name, dir] : systems) {
    auto files = TimelineFiles(dir);
    for (const auto& [key, path] : refs) {
      if (!files.count(key)) unmatched.push_back(name + ": missing prediction for " + key);
    }
    for (const auto& [key, path] : files) {
      if (!refs.count(key)) unmatched.push_back(name + ": no reference for " + key);
    }
    pred_files.push_back(std::move(files));
  }
  if (!unmatched.empty()) {
    std::string msg = "unmatched timeline files:";
    for (const auto& u : unmatched) msg += "\n  " + u;
    throw Error(msg);
  }

  std::map<std::string, Timeline> ref_timelines;
  for (const auto& [key, path] : refs) ref_timelines[key] = LoadTimeline(path);

  std::ostringstream csv;
  csv << "system,timeline";
  for (const auto& c : MetricColumns()) csv << "," << c;
  csv << "\n";
  // per system: per timeline metric rows
  std::vector<std::vector<std::vector<double>>> values(systems.size());
  for (std::size_t s = 0; s < systems.size(); ++s) {
    for (const auto& [key, ref] : ref_timelines) {
      const Timeline pred = LoadTimeline(pred_files[s].at(key));
      const auto row = ReportValues(Evaluate(pred, ref, corpus_sentences));
      csv << systems[s].first << "," << key;
      for (double v : row) csv << "," << Fmt(v);
      csv << "\n";
      values[s].push_back(row);
    }
  }
  std::vector<std::vector<double>> means(systems.size());
  for (std::size_t s = 0; s < systems.size(); ++s) {
    means[s].assign(MetricColumns().size(), 0.0);
    for (const auto& row : values[s]) {
      for (std::size_t c = 0; c < row.size(); ++c) means[s][c] += row[c] / values[s].size();
    }
    csv << systems[s].first << ",MEAN";
    for (double v : means[s]) csv << "," << Fmt(v);
    csv << "\n";
  }
  if (!a.out.empty()) WriteFileAtomically(a.out, csv.str());

  // Console table of macro averages.
  std::printf("%-36s %9s %9s %9s %9s %9s %9s %9s\n", "system", "concat1", "concat2", "agree1",
              "agree2", "align1", "align2", "dateF1");
  for (std::size_t s = 0; s < systems.size(); ++s) {
    std::printf("%-36s", systems[s].first.c_str());
    for (int c = 0; c < 7; ++c) std::printf(" %9s", Fmt(means[s][c], 4).c_str());
    std::printf("\n");
  }

  if (systems.size() > 1) {
    std::ostringstream sig;
    sig << "system_a,system_b";
    for (int c : kSignificanceColumns) sig << ",p_" << MetricColumns()[c];
    sig << "\n";
    std::printf("\npaired approximate randomization, %d iterations\n", a.iters);
    for (std::size_t x = 0; x < systems.size(); ++x) {
      for (std::size_t y = x + 1; y < systems.size(); ++y) {
        sig << systems[x].first << "," << systems[y].first;
        std::printf("%s vs %s:", systems[x].first.c_str(), systems[y].first.c_str());
        for (int c : kSignificanceColumns) {
          std::vector<double> va, vb;
          for (const auto& row : values[x]) va.push_back(row[c]);
          for (const auto& row : values[y]) vb.push_back(row[c]);
          const double p = ApproxRandomization(va, vb, a.iters, a.seed);
          sig << "," << Fmt(p);
          std::printf(" %s p=%s%s", MetricColumns()[c].c_str(), Fmt(p, 4).c_str(),
                      p <= 0.05 ? "*" : "");
        }
        sig << "\n";
        std::printf("\n");
      }
    }
    if (!a.significance.empty()) WriteFileAtomically(a.significance, sig.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string eval;
  std::string out;
};

struct EvalRow {
  std::string system;
  double align_r1 = 0.0;
  double compression = 0.0;
  double spread = 0.0;
  double max_len = 0.0;
};

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

int CmdAnalyze(const AnalyzeArgs& a) {
  RequireFile(a.eval, "evaluation CSV");
  std::ifstream in(a.eval);
  std::string header;
  std::getline(in, header);
  const auto columns = SplitCsv(header);
  const auto index = [&columns](const std::string& name) {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw Error("evaluation CSV lacks column " + name);
    return static_cast<std::size_t>(it - columns.begin());
  };
  const std::size_t c_align = index("align_m1_r1"), c_comp = index("compression_rate"),
                    c_spread = index("spread"), c_len = index("max_daily_len"), c_tl = index("timeline");
  std::vector<EvalRow> rows;
  std::vector<std::string> system_order;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto cells = SplitCsv(line);
    if (cells.size() != columns.size()) throw Error("malformed evaluation CSV row: " + line);
    if (cells[c_tl] == "MEAN") continue;
    EvalRow r;
    r.system = cells[0];
    r.align_r1 = std::stod(cells[c_align]);
    r.compression = cells[c_comp] == "nan" ? std::nan("") : std::stod(cells[c_comp]);
    r.spread = std::stod(cells[c_spread]);
    r.max_len = std::stod(cells[c_len]);
    if (std::find(system_order.begin(), system_order.end(), r.system) == system_order.end()) {
      system_order.push_back(r.system);
    }
    rows.push_back(r);
  }

  std::ostringstream out;
  const auto bucket_table = [&](const char* title, int buckets, auto bucket_of, auto label_of) {
    out << title << "\n" << "system";
    for (int b = 0; b < buckets; ++b) out << "\t" << label_of(b);
    out << "\n";
    for (const auto& sys : system_order) {
      out << sys;
      for (int b = 0; b < buckets; ++b) {
        double sum = 0.0;
        int count = 0;
        for (const auto& r : rows) {
          const int rb = bucket_of(r);
          if (r.system == sys && rb == b) {
            sum += r.align_r1;
            ++count;
          }
        }
        out << "\t" << (count ? Fmt(sum / count, 4) + " (" + std::to_string(count) + ")" : "-");
      }
      out << "\n";
    }
    out << "\n";
  };
  bucket_table(
      "align+ m:1 ROUGE-1 F1 by compression rate", 4,
      [](const EvalRow& r) { return std::isnan(r.compression) ? -1 : CompressionBucket(r.compression); },
      [](int b) { return CompressionBucketLabel(b); });
  bucket_table(
      "align+ m:1 ROUGE-1 F1 by spread", 3, [](const EvalRow& r) { return SpreadBucket(r.spread); },
      [](int b) { return SpreadBucketLabel(b); });

  out << "max daily length\nsystem\tmean\tmedian\tstd\n";
  for (const auto& sys : system_order) {
    std::vector<double> lens;
    for (const auto& r : rows) {
      if (r.system == sys) lens.push_back(r.max_len);
    }
    std::sort(lens.begin(), lens.end());
    double mean = 0.0;
    for (double x : lens) mean += x / lens.size();
    double var = 0.0;
    for (double x : lens) var += (x - mean) * (x - mean) / lens.size();
    const std::size_t h = lens.size() / 2;
    const double median = lens.size() % 2 ? lens[h] : (lens[h - 1] + lens[h]) / 2.0;
    out << sys << "\t" << Fmt(mean, 2) << "\t" << Fmt(median, 2) << "\t" << Fmt(std::sqrt(var), 2) << "\n";
  }
  std::cout << out.str();
  if (!a.out.empty()) WriteFileAtomically(a.out, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// selftest

int CmdSelfTest(const SelfTestOptions& opt) {
  const auto report = RunSelfTest(opt);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  std::cout << (report.passed() ? "selftest passed" : "selftest FAILED") << "\n";
  return report.passed() ? 0 : kExitProperty;
}

// ---------------------------------------------------------------------------
// synth

struct SynthArgs {
  std::uint64_t seed = 0;
  std::string out;
  int count = 1;
};

int CmdSynth(const SynthArgs& a) {
  if (a.count < 1) throw Error("--count must be positive");
  std::string corpus;
  for (int i = 0; i < a.count; ++i) {
    // Instances get disjoint date ranges and vocabularies.
    SyntheticOptions opt;
    opt.start = opt.start + 120 * i;
    if (a.count > 1) opt.word_prefix = "t" + std::to_string(i);
    const auto inst = MakeSyntheticInstance(a.seed + i, opt);
    const std::string suffix = a.count == 1 ? "" : "-" + std::to_string(i);
    for (const auto& doc : inst.documents) {
      Document d = doc;
      d.id += suffix;
      corpus += DocumentToJson(d).dump() + "\n";
    }
    WriteFileAtomically(fs::path(a.out) / "timelines" / ("synthetic" + suffix + ".json"),
                        SerializeTimeline(inst.reference));
  }
  WriteFileAtomically(fs::path(a.out) / "corpus.jsonl", corpus);
  WriteFileAtomically(fs::path(a.out) / "keywords.txt", "story\nofficials\n");
  std::cout << "wrote " << a.count << " synthetic instance(s) to " << a.out << "\n";
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"Timeline summarization with submodular objectives"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Load, date-tag and keyword-filter a corpus");
  ingest_cmd->add_option("--corpus", ingest.corpus, "Corpus JSONL")->required();
  ingest_cmd->add_option("--keywords", ingest.keywords, "Keyword file, one per line");
  ingest_cmd->add_option("--out", ingest.out, "Tagged sentences JSONL (stdout if omitted)");

  SummarizeArgs sum;
  auto* sum_cmd = app.add_subcommand("summarize", "Run presets against reference timelines");
  sum_cmd->add_option("--config", sum.config, "JSON run config");
  sum_cmd->add_option("--corpus", sum.corpus, "Corpus JSONL");
  sum_cmd->add_option("--keywords", sum.keywords, "Keyword file");
  sum_cmd->add_option("--ref", sum.references, "Reference timeline file or directory (repeatable)");
  sum_cmd->add_option("--preset", sum.presets, "System preset (repeatable)");
  sum_cmd->add_option("--constraint", sum.constraint, "Constraint spec JSON overriding the preset");
  sum_cmd->add_option("--seed", sum.seed, "Seed (default 0)");
  sum_cmd->add_option("--out", sum.out, "Output directory (default out, or $TLSUM_OUTPUT_DIR)");
  sum_cmd->add_option("--threads", sum.threads, "Threads for gain evaluation");
  sum_cmd->add_option("--cutoff-days", sum.cutoff_days, "Cutoff for the +cutoff modifier");
  sum_cmd->add_flag("--trace", sum.trace, "Write greedy traces as JSONL");

  EvaluateArgs ev;
  auto* ev_cmd = app.add_subcommand("evaluate", "Score predicted timelines against references");
  ev_cmd->add_option("--pred", ev.preds, "NAME=DIR of predicted timelines (repeatable)")->required();
  ev_cmd->add_option("--ref", ev.ref, "Directory of reference timelines")->required();
  ev_cmd->add_option("--corpus", ev.corpus, "Unfiltered corpus JSONL for compression rates");
  ev_cmd->add_option("--out", ev.out, "Per-timeline CSV");
  ev_cmd->add_option("--significance", ev.significance, "Pairwise p-value CSV");
  ev_cmd->add_option("--iters", ev.iters, "Randomization iterations")->check(CLI::PositiveNumber);
  ev_cmd->add_option("--seed", ev.seed, "Randomization seed");

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Bucketed tables from an evaluation CSV");
  an_cmd->add_option("--eval", an.eval, "CSV written by evaluate --out")->required();
  an_cmd->add_option("--out", an.out, "Write the tables to this file as well");

  SelfTestOptions st;
  auto* st_cmd = app.add_subcommand("selftest", "Check objective and constraint properties");
  st_cmd->add_option("--seed", st.seed, "Seed");
  st_cmd->add_option("--instances", st.instances, "Random instances per check")->check(CLI::PositiveNumber);
  st_cmd->add_option("--trials", st.trials, "Sampled triples per component")->check(CLI::PositiveNumber);
  st_cmd->add_option("--guarantee-instances", st.guarantee_instances, "Instances per k")
      ->check(CLI::PositiveNumber);
  st_cmd->add_flag("--inject-fault", st.inject_fault)->group("");

  SynthArgs syn;
  auto* syn_cmd = app.add_subcommand("synth", "Write a synthetic corpus with reference timelines");
  syn_cmd->add_option("--seed", syn.seed, "Seed");
  syn_cmd->add_option("--count", syn.count, "Number of instances");
  syn_cmd->add_option("--out", syn.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (*ingest_cmd) return CmdIngest(ingest);
    if (*sum_cmd) return CmdSummarize(sum);
    if (*ev_cmd) return CmdEvaluate(ev);
    if (*an_cmd) return CmdAnalyze(an);
    if (*st_cmd) return CmdSelfTest(st);
    if (*syn_cmd) return CmdSynth(syn);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace tlsum

int main(int argc, char** argv) { return tlsum::Run(argc, argv); }
