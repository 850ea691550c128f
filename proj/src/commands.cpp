#include "deplen/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deplen/distfit.hpp"
#include "deplen/error.hpp"
#include "deplen/null_models.hpp"
#include "deplen/random.hpp"
#include "deplen/stats.hpp"

namespace deplen::cli {

namespace {

using nlohmann::ordered_json;
using output::Cell;
using output::Table;

constexpr const char* kPooledNote =
    "pooled values mix sentences of different lengths; read them together with the per-length file";

ordered_json echo(const RunConfig& cfg) {
  ordered_json j;
  j["input"] = cfg.input_path;
  j["n_min"] = cfg.n_min;
  j["punct"] = io::to_string(cfg.punct);
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["format"] = output::to_string(cfg.format);
  j["min_sentences"] = cfg.min_sentences;
  j["min_dependencies"] = cfg.min_dependencies;
  return j;
}

ordered_json to_json(const io::IngestReport& r) {
  ordered_json j;
  j["sentences_read"] = r.sentences_read;
  j["sentences_kept"] = r.sentences_kept;
  j["rejected_non_tree"] = r.rejected_non_tree;
  j["rejected_below_n_min"] = r.rejected_below_n_min;
  return j;
}

struct Loaded {
  io::Corpus corpus;
  std::vector<DepTree> kept;  // n >= n_min
  stats::LengthConditionedTable table;
  std::vector<stats::SentenceSummary> sentences;
};

Loaded load(const RunConfig& cfg) {
  validate(cfg);
  Loaded l{io::ingest_file(cfg.input_path, {cfg.n_min, cfg.punct}), {}, stats::LengthConditionedTable(cfg.n_min), {}};
  for (const DepTree& t : l.corpus.trees) {
    if (t.size() >= cfg.n_min) l.kept.push_back(t);
  }
  if (l.kept.empty()) {
    throw NoDataError("'" + cfg.input_path + "' has no tree-shaped sentence with at least " +
                      std::to_string(cfg.n_min) + " words");
  }
  l.table = stats::accumulate(l.kept, cfg.n_min);
  l.sentences = stats::summarize_all(l.kept, cfg.n_min);
  return l;
}

std::string write_run_config(const std::string& dir, const ordered_json& config) {
  return output::write_json(dir, "run_config.json", config);
}

mixture::LengthDistribution empirical_lengths(const stats::LengthConditionedTable& table) {
  std::map<int, double> weights;
  for (const auto& [n, c] : table.sentence_counts()) weights[n] = static_cast<double>(c);
  return mixture::LengthDistribution::empirical(weights, table.n_min());
}

std::vector<std::string> write_stats(const Loaded& l, const RunConfig& cfg) {
  std::vector<std::string> files;
  const auto summary = stats::summarize_corpus(l.kept, cfg.n_min);

  Table raw{{"n", "sentences", "mean_mean_d", "mean_D", "mean_k2", "null_expected_d", "noncrossing_max",
             "mean_d_lower_bound"},
            {}};
  Table reported{raw.columns, {}};
  for (const auto& [n, row] : summary.per_n) {
    std::vector<Cell> cells{static_cast<std::int64_t>(n),
                            row.sentences,
                            row.mean_mean_length,
                            row.mean_total_length,
                            row.mean_k2,
                            (n + 1) / 3.0,
                            n / 2.0,
                            min_mean_d_bound(n, row.mean_k2)};
    if (row.sentences >= cfg.min_sentences) reported.rows.push_back(cells);
    raw.rows.push_back(std::move(cells));
  }
  files.push_back(output::write_table(cfg.output_dir, "per_length", reported, cfg.format));
  files.push_back(output::write_table(cfg.output_dir, "per_length_raw", raw, cfg.format));

  const auto lengths = empirical_lengths(l.table);
  ordered_json j;
  j["config"] = echo(cfg);
  j["ingest"] = to_json(l.corpus.report);
  j["sentences"] = summary.sentences;
  j["dependencies"] = summary.dependencies;
  j["mdd"] = summary.mdd;
  j["adl"] = summary.adl;
  j["mean_sentence_length"] = mixture::expectation_n(lengths);
  j["null_mdd_dependency_weighted"] = mixture::null_expected_d_dependency_weighted(lengths);
  j["null_mean_d_sentence_weighted"] = mixture::null_expected_d_sentence_weighted(lengths);
  j["per_length_file"] = std::string("per_length.") + output::to_string(cfg.format);
  j["note"] = kPooledNote;
  files.push_back(output::write_json(cfg.output_dir, "summary.json", j));
  return files;
}

std::vector<std::string> write_null(const Loaded& l, const RunConfig& cfg) {
  const auto curve = nullmodel::mc_null_curve(l.kept, {cfg.seed, cfg.samples, cfg.workers});
  const auto empirical = stats::per_length_curve(l.sentences);
  Table t{{"n", "sentences", "mc_draws", "empirical_mean_d", "mc_mean_d", "mc_se", "null_expected_d"}, {}};
  for (const auto& [n, point] : curve) {
    const auto& row = empirical.at(n);
    t.rows.push_back({static_cast<std::int64_t>(n), row.sentences, point.draws, row.mean_mean_length,
                      point.mean_mean_length, point.standard_error,
                      to_double(nullmodel::exact_null(n).expected_d)});
  }
  return {output::write_table(cfg.output_dir, "null_curve", t, cfg.format)};
}

ordered_json fit_json(const fit::FitResult& r) {
  ordered_json j;
  j["family"] = fit::to_string(r.family);
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["free_parameters"] = r.free_parameters;
  j["log_likelihood"] = r.log_likelihood;
  j["aic"] = r.aic;
  j["sample_size"] = r.sample_size;
  j["truncation"] = {r.d_min, r.d_max};
  j["boundary"] = fit::to_string(r.boundary);
  j["notes"] = r.notes;
  return j;
}

std::vector<fit::FitResult> fit_all(std::span<const std::int64_t> counts) {
  std::vector<fit::FitResult> results{fit::fit_geometric(counts), fit::fit_zeta(counts)};
  const int d_max = static_cast<int>(counts.size());
  if (d_max >= 3) {
    try {
      results.push_back(fit::fit_two_regime(counts, 2, d_max - 1));
    } catch (const NoDataError&) {
      // every breakpoint leaves one segment empty; the model is not identifiable here
    }
  }
  return results;
}

std::vector<std::int64_t> scope_counts(const stats::LengthConditionedTable& table, const FitScope& scope,
                                       std::int64_t min_dependencies, std::string& label) {
  std::vector<std::int64_t> counts;
  if (scope.mixed) {
    label = "mixed";
    counts = table.pooled_counts();
  } else {
    label = "per_n=" + std::to_string(scope.n);
    const auto it = table.counts().find(scope.n);
    if (it != table.counts().end()) counts = it->second;
  }
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total < min_dependencies) {
    throw NoDataError("scope " + label + ": " + std::to_string(total) + " dependencies, need at least " +
                      std::to_string(min_dependencies));
  }
  return counts;
}

std::vector<std::string> write_fit(const Loaded& l, const RunConfig& cfg, const FitScope& scope) {
  std::string label;
  const auto counts = scope_counts(l.table, scope, cfg.min_dependencies, label);
  const auto results = fit_all(counts);

  ordered_json j;
  j["config"] = echo(cfg);
  j["scope"] = scope.mixed ? "mixed" : "per_n";
  if (!scope.mixed) j["n"] = scope.n;
  if (scope.mixed) {
    j["weighting"] = "dependency: every dependency of every sentence with n in [" + std::to_string(cfg.n_min) +
                     ", " + std::to_string(l.table.max_length()) + "] pooled, so length n carries weight (n - 1) p(n)";
  } else {
    j["weighting"] = "none: dependencies of sentences with exactly n words";
  }
  j["histogram"] = counts;
  j["fits"] = ordered_json::array();
  for (const auto& r : results) j["fits"].push_back(fit_json(r));
  j["ranking"] = ordered_json::array();
  for (const auto& r : fit::compare(results)) {
    j["ranking"].push_back({{"family", fit::to_string(r.family)}, {"aic", r.aic}, {"delta_aic", r.delta_aic}});
  }
  j["two_regime_note"] =
      results.size() > 2
          ? "breakpoint model: one formalization of a two-regime decay, not a published parametric form; "
            "free parameters q1, q2, b (the weight w is the empirical share of d <= b)"
          : "not fitted: needs d_max >= 3 and a breakpoint leaving both segments non-empty";
  if (scope.mixed) j["per_length_file"] = std::string("fits_per_n.") + output::to_string(cfg.format);
  std::vector<std::string> files{output::write_json(cfg.output_dir, "fits.json", j)};

  if (scope.mixed) {
    // Per-length companion of the pooled fit.
    Table t{{"n", "dependencies", "aic_geometric", "aic_zeta", "aic_two_regime", "best"}, {}};
    for (const auto& [n, row] : l.table.counts()) {
      std::int64_t total = 0;
      for (auto c : row) total += c;
      if (total < cfg.min_dependencies) continue;
      const auto per_n = fit_all(row);
      const auto ranking = fit::compare(per_n);
      t.rows.push_back({static_cast<std::int64_t>(n), total, per_n[0].aic, per_n[1].aic,
                        per_n.size() > 2 ? Cell(per_n[2].aic) : Cell(std::string()),
                        fit::to_string(ranking.front().family)});
    }
    files.push_back(output::write_table(cfg.output_dir, "fits_per_n", t, cfg.format));
  }
  return files;
}

Table mixture_table(const mixture::MixtureSpec& spec) {
  const auto by_sentence = mixture::mix(spec, mixture::Weighting::sentence);
  const auto by_dependency = mixture::mix(spec, mixture::Weighting::dependency);
  Table t{{"d", "p", "p_dependency_weighted"}, {}};
  for (int d = 1; d <= by_sentence.d_max(); ++d) {
    t.rows.push_back({static_cast<std::int64_t>(d), by_sentence.at(d), by_dependency.at(d)});
  }
  return t;
}

ordered_json moments_json(const mixture::MixtureSpec& spec) {
  const auto& lengths = spec.lengths;
  ordered_json j;
  j["E_n"] = mixture::expectation_n(lengths);
  j["E_n2"] = mixture::expectation_n2(lengths);
  if (lengths.n_min() == 2) {
    j["null_expected_d"] = mixture::null_expected_d(lengths);
    j["null_expected_D"] = mixture::null_expected_D(lengths);
  } else {
    j["null_expected_d"] = nullptr;
    j["null_expected_D"] = nullptr;
    j["null_closed_form_note"] = "closed forms (E[n]+1)/3 and (E[n^2]-1)/3 assume n_min = 2; see the summed values";
  }
  j["null_expected_d_sentence_weighted"] = mixture::null_expected_d_sentence_weighted(lengths);
  j["null_expected_d_dependency_weighted"] = mixture::null_expected_d_dependency_weighted(lengths);
  j["mixture_mean_sentence_weighted"] = mixture::mixture_mean(spec, mixture::Weighting::sentence);
  j["mixture_mean_dependency_weighted"] = mixture::mixture_mean(spec, mixture::Weighting::dependency);
  return j;
}

std::vector<std::string> write_empirical_mix(const Loaded& l, const RunConfig& cfg) {
  mixture::EmpiricalConditional conditionals;
  for (const auto& [n, c] : l.table.sentence_counts()) {
    conditionals.by_n[n] = stats::conditional_distribution(l.table, n);
  }
  const mixture::MixtureSpec spec{empirical_lengths(l.table), conditionals};
  std::vector<std::string> files{output::write_table(cfg.output_dir, "mixed_pd", mixture_table(spec), cfg.format)};
  ordered_json j;
  j["config"] = echo(cfg);
  j["length_distribution"] = "empirical sentence frequencies";
  j["conditional_family"] = "empirical p(d | n)";
  j.update(moments_json(spec));
  j["mdd"] = stats::mdd(l.table);
  j["adl"] = stats::adl(l.sentences);
  j["per_length_file"] = std::string("per_length.") + output::to_string(cfg.format);
  files.push_back(output::write_json(cfg.output_dir, "moments.json", j));
  return files;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate(const RunConfig& cfg) {
  std::vector<std::string> bad;
  if (cfg.n_min < 2) bad.push_back("n_min must be >= 2");
  if (cfg.samples < 1) bad.push_back("samples must be >= 1");
  if (cfg.workers < 1) bad.push_back("workers must be >= 1");
  if (cfg.min_sentences < 1) bad.push_back("min_sentences must be >= 1");
  if (cfg.min_dependencies < 1) bad.push_back("min_dependencies must be >= 1");
  if (cfg.input_path.empty()) bad.push_back("input is required");
  if (!bad.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw ValidationError(msg);
  }
}

FitScope parse_scope(const std::string& text) {
  if (text == "mixed") return {};
  constexpr std::string_view prefix = "per-n=";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && n >= 2) return {false, n};
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("scope must be 'mixed' or 'per-n=N' with N >= 2, got '" + text + "'");
}

MixConfig parse_mix_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::vector<std::string> problems;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(line_no) + " (expected key = value)");
      continue;
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  static const std::set<std::string> known{"kind",
                                           "n_min",
                                           "n_max",
                                           "n",
                                           "weights",
                                           "conditional_family",
                                           "geometric_linkage",
                                           "geometric_q",
                                           "geometric_rate_first",
                                           "geometric_rate_last",
                                           "fig2_n_max"};
  for (const auto& [k, v] : kv) {
    if (!known.contains(k)) problems.push_back(k + " (unknown key)");
  }

  auto get_int = [&](const std::string& key, int fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      std::size_t used = 0;
      const int v = std::stoi(it->second, &used);
      if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    problems.push_back(key + " (not an integer: '" + it->second + "')");
    return fallback;
  };
  auto get_real = [&](const std::string& key, double fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    problems.push_back(key + " (not a number: '" + it->second + "')");
    return fallback;
  };
  auto get_text = [&](const std::string& key, const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };

  ordered_json echo;
  const std::string kind = get_text("kind", "");
  const int n_min = get_int("n_min", 2);
  int n_max = get_int("n_max", 0);
  echo["kind"] = kind;
  echo["n_min"] = n_min;

  std::optional<mixture::LengthDistribution> lengths;
  auto build = [&](auto&& make, const std::string& keys) {
    try {
      lengths = make();
    } catch (const ValidationError& e) {
      problems.push_back(keys + " (" + e.what() + ")");
    }
  };
  if (kind == "uniform" || kind == "truncated_zeta") {
    if (!kv.contains("n_max")) problems.push_back("n_max (required for kind = " + kind + ")");
    echo["n_max"] = n_max;
    build([&] {
      return kind == "uniform" ? mixture::LengthDistribution::uniform(n_min, n_max)
                               : mixture::LengthDistribution::truncated_zeta(n_min, n_max);
    }, "n_min/n_max");
  } else if (kind == "point_mass") {
    const int n = get_int("n", 0);
    if (!kv.contains("n")) problems.push_back("n (required for kind = point_mass)");
    echo["n"] = n;
    build([&] { return mixture::LengthDistribution::point_mass(n, n_min); }, "n");
  } else if (kind == "empirical") {
    std::map<int, double> weights;
    std::stringstream ss(get_text("weights", ""));
    std::string item;
    bool ok = kv.contains("weights");
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
        weights[std::stoi(trim(item.substr(0, colon)))] = std::stod(trim(item.substr(colon + 1)));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) problems.push_back("weights (expected 'n:w, n:w, ...')");
    ordered_json w = ordered_json::object();
    for (const auto& [n, v] : weights) w[std::to_string(n)] = v;
    echo["weights"] = w;
    if (ok) build([&] { return mixture::LengthDistribution::empirical(weights, n_min); }, "weights");
  } else {
    problems.push_back("kind (expected uniform | truncated_zeta | point_mass | empirical, got '" + kind + "')");
  }

  const std::string family = get_text("conditional_family", "null");
  echo["conditional_family"] = family;
  mixture::ConditionalFamily conditional = mixture::NullConditional{};
  if (family == "geometric") {
    mixture::GeometricConditional g;
    const std::string linkage = get_text("geometric_linkage", "null_mean");
    if (linkage == "null_mean") {
      g.linkage = mixture::GeometricLinkage::null_mean;
    } else if (linkage == "fixed") {
      g.linkage = mixture::GeometricLinkage::fixed;
    } else if (linkage == "log_rate") {
      g.linkage = mixture::GeometricLinkage::log_rate;
    } else {
      problems.push_back("geometric_linkage (expected null_mean | fixed | log_rate, got '" + linkage + "')");
    }
    g.q = get_real("geometric_q", g.q);
    g.rate_first = get_real("geometric_rate_first", g.rate_first);
    g.rate_last = get_real("geometric_rate_last", g.rate_last);
    if (!(g.q > 0.0 && g.q < 1.0)) problems.push_back("geometric_q (must lie in (0, 1))");
    if (!(g.rate_first > 0.0)) problems.push_back("geometric_rate_first (must be positive)");
    if (!(g.rate_last > 0.0)) problems.push_back("geometric_rate_last (must be positive)");
    echo["geometric_linkage"] = mixture::to_string(g.linkage);
    echo["geometric_q"] = g.q;
    echo["geometric_rate_first"] = g.rate_first;
    echo["geometric_rate_last"] = g.rate_last;
    conditional = g;
  } else if (family != "null") {
    problems.push_back("conditional_family (expected null | geometric, got '" + family + "')");
  }

  const int fig2_last = get_int("fig2_n_max", 100);
  if (fig2_last < 2) problems.push_back("fig2_n_max (must be >= 2)");
  echo["fig2_n_max"] = fig2_last;

  if (!problems.empty() || !lengths) {
    std::string msg = "invalid mixture config; offending keys:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  return MixConfig{{*lengths, conditional}, 2, fig2_last, echo};
}

std::vector<std::string> cmd_stats(const RunConfig& cfg) {
  const Loaded l = load(cfg);
  auto files = write_stats(l, cfg);
  files.push_back(write_run_config(cfg.output_dir, echo(cfg)));
  return files;
}

std::vector<std::string> cmd_null(const RunConfig& cfg) {
  const Loaded l = load(cfg);
  auto files = write_null(l, cfg);
  files.push_back(write_run_config(cfg.output_dir, echo(cfg)));
  return files;
}

std::vector<std::string> cmd_fit(const RunConfig& cfg, const FitScope& scope) {
  const Loaded l = load(cfg);
  auto files = write_fit(l, cfg, scope);
  files.push_back(write_run_config(cfg.output_dir, echo(cfg)));
  return files;
}

std::vector<std::string> cmd_report(const RunConfig& cfg) {
  const Loaded l = load(cfg);
  std::vector<std::string> files;
  for (auto&& part : {write_stats(l, cfg), write_null(l, cfg), write_empirical_mix(l, cfg),
                      write_fit(l, cfg, FitScope{})}) {
    files.insert(files.end(), part.begin(), part.end());
  }
  files.push_back(write_run_config(cfg.output_dir, echo(cfg)));
  return files;
}

std::vector<std::string> cmd_mix(const std::string& config_path, const std::string& output_dir,
                                 output::Format format) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open mixture config '" + config_path + "'");
  const MixConfig mc = parse_mix_config(in);

  std::vector<std::string> files;
  files.push_back(output::write_table(output_dir, "mixed_pd", mixture_table(mc.spec), format));

  ordered_json moments;
  moments["config"] = mc.echo;
  moments.update(moments_json(mc.spec));
  moments["fig2_file"] = std::string("fig2.") + output::to_string(format);
  files.push_back(output::write_json(output_dir, "moments.json", moments));

  Table fig2{{"n_max", "E_uniform_n", "E_zeta_n"}, {}};
  for (const auto& row : mixture::fig2_table(mc.fig2_first, mc.fig2_last)) {
    fig2.rows.push_back({static_cast<std::int64_t>(row.n_max), row.uniform, row.zeta});
  }
  files.push_back(output::write_table(output_dir, "fig2", fig2, format));
  files.push_back(write_run_config(output_dir, mc.echo));
  return files;
}

std::string cmd_synth(const SynthConfig& cfg) {
  if (cfg.sentences < 1) throw ValidationError("sentences must be >= 1");
  if (cfg.output_path.empty()) throw ValidationError("output path is required");
  const auto lengths = cfg.lengths == mixture::LengthKind::truncated_zeta
                           ? mixture::LengthDistribution::truncated_zeta(cfg.n_min, cfg.n_max)
                           : mixture::LengthDistribution::uniform(cfg.n_min, cfg.n_max);
  std::vector<double> probs;
  for (int n = lengths.n_min(); n <= lengths.n_max(); ++n) probs.push_back(lengths.p(n));
  const DiscreteSampler pick_length(lengths.n_min(), probs);

  std::ostringstream out;
  for (std::int64_t i = 0; i < cfg.sentences; ++i) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
    const int n = pick_length(rng);
    const DepTree tree = nullmodel::random_arrangement(nullmodel::random_tree(n, rng), rng);
    const int root = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n))) + 1;
    io::write_conllu(out, tree, root, "synth-" + std::to_string(i + 1));
  }
  const std::filesystem::path path(cfg.output_path);
  const std::string dir = path.has_parent_path() ? path.parent_path().string() : std::string(".");
  return output::write_file(dir, path.filename().string(), out.str());
}

int exit_code(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->category()) {
      case ErrorCategory::usage: return 2;
      case ErrorCategory::data: return 3;
      case ErrorCategory::io: return 4;
    }
  }
  return 1;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Dependency-length statistics by sentence length, with random-arrangement baselines"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string punct = "keep";
  std::string format = "csv";
  std::string scope = "mixed";

  auto add_run_options = [&](CLI::App* sub, bool with_null) {
    sub->add_option("--input,-i", cfg.input_path, "CoNLL-U treebank")->required();
    sub->add_option("--n-min", cfg.n_min, "minimum sentence length (words)")->capture_default_str();
    sub->add_option("--punct", punct, "keep or drop tokens with UPOS PUNCT")
        ->check(CLI::IsMember({"keep", "drop"}))
        ->capture_default_str();
    sub->add_option("--out,-o", cfg.output_dir, "output directory")->capture_default_str();
    sub->add_option("--format", format, "csv or json tables")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--min-sentences", cfg.min_sentences, "sentences required for a per_length row")
        ->capture_default_str();
    sub->add_option("--min-deps", cfg.min_dependencies, "dependencies required for a fit")->capture_default_str();
    if (with_null) {
      sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
      sub->add_option("--samples", cfg.samples, "random arrangements per sentence")->capture_default_str();
      sub->add_option("--workers", cfg.workers, "threads for sampling; output does not depend on it")
          ->capture_default_str();
    }
  };

  auto* stats_cmd = app.add_subcommand("stats", "MDD, ADL and the per-length curve");
  add_run_options(stats_cmd, false);
  auto* null_cmd = app.add_subcommand("null", "per-length means against random arrangements");
  add_run_options(null_cmd, true);
  auto* fit_cmd = app.add_subcommand("fit", "geometric, zeta and two-regime fits");
  add_run_options(fit_cmd, false);
  fit_cmd->add_option("--scope", scope, "mixed or per-n=N")->capture_default_str();
  auto* report_cmd = app.add_subcommand("report", "stats + null + empirical mixture + fits");
  add_run_options(report_cmd, true);

  std::string mix_config;
  std::string mix_out = ".";
  auto* mix_cmd = app.add_subcommand("mix", "mixtures over a sentence-length distribution");
  mix_cmd->add_option("--config,-c", mix_config, "key = value mixture description")->required();
  mix_cmd->add_option("--out,-o", mix_out, "output directory")->capture_default_str();
  mix_cmd->add_option("--format", format, "csv or json tables")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  SynthConfig synth;
  std::string synth_lengths = "uniform";
  auto* synth_cmd = app.add_subcommand("synth", "random-tree, random-arrangement CoNLL-U corpus");
  synth_cmd->add_option("--sentences", synth.sentences)->capture_default_str();
  synth_cmd->add_option("--lengths", synth_lengths, "uniform or zeta")
      ->check(CLI::IsMember({"uniform", "zeta"}))
      ->capture_default_str();
  synth_cmd->add_option("--n-min", synth.n_min)->capture_default_str();
  synth_cmd->add_option("--n-max", synth.n_max)->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--output,-o", synth.output_path, "CoNLL-U file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.punct = punct == "drop" ? io::PunctMode::drop : io::PunctMode::keep;
  cfg.format = format == "json" ? output::Format::json : output::Format::csv;

  try {
    std::vector<std::string> files;
    if (*stats_cmd) files = cmd_stats(cfg);
    if (*null_cmd) files = cmd_null(cfg);
    if (*fit_cmd) files = cmd_fit(cfg, parse_scope(scope));
    if (*report_cmd) files = cmd_report(cfg);
    if (*mix_cmd) files = cmd_mix(mix_config, mix_out, cfg.format);
    if (*synth_cmd) {
      synth.lengths = synth_lengths == "zeta" ? mixture::LengthKind::truncated_zeta : mixture::LengthKind::uniform;
      files.push_back(cmd_synth(synth));
    }
    for (const auto& f : files) std::cout << f << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "deplen: " << e.what() << '\n';
    return exit_code(e);
  }
}

}  // namespace deplen::cli
