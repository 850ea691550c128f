#pragma once

// Corpus-level dependency-length statistics conditioned on sentence length.
//
// f(n, d) counts dependencies of length d in sentences of n words. Sentences
// shorter than n_min are excluded from every estimator and tallied apart.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "deplen/pmf.hpp"
#include "deplen/tree.hpp"

namespace deplen::stats {

// Per-sentence quantities needed by every estimator below.
struct SentenceSummary {
  int n = 0;
  std::int64_t total_length = 0;  // D
  std::int64_t sum_squared_degrees = 0;

  double mean_length() const { return static_cast<double>(total_length) / (n - 1); }
  double k2() const { return static_cast<double>(sum_squared_degrees) / n; }
};

SentenceSummary summarize(const DepTree& tree);

// Summaries of the trees with n >= n_min, in input order.
std::vector<SentenceSummary> summarize_all(std::span<const DepTree> trees, int n_min);

class LengthConditionedTable {
 public:
  // Throws ValidationError for n_min < 2.
  explicit LengthConditionedTable(int n_min = 3);

  // Counts the tree's word-word dependencies, or tallies it as skipped when
  // shorter than n_min.
  void add(const DepTree& tree);

  // One sentence of n words given only its n - 1 dependency lengths
  // (synthetic corpora). Throws DomainError unless there are n - 1 lengths
  // in 1..n-1.
  void add_sentence(int n, std::span<const int> dep_lengths);

  // Pointwise count addition. Throws ValidationError on differing n_min.
  LengthConditionedTable& merge(const LengthConditionedTable& other);

  int n_min() const { return n_min_; }
  std::int64_t total_deps() const { return total_deps_; }
  std::int64_t skipped_sentences() const { return skipped_; }
  std::int64_t sentences() const;

  // f(n, d); zero outside 1 <= d < n.
  std::int64_t count(int n, int d) const;

  // n -> counts with index d - 1, length n - 1.
  const std::map<int, std::vector<std::int64_t>>& counts() const { return f_; }
  const std::map<int, std::int64_t>& sentence_counts() const { return sentence_counts_; }

  // Largest sentence length present, 0 when empty.
  int max_length() const { return f_.empty() ? 0 : f_.rbegin()->first; }

  // sum_n f(n, d), index d - 1; length max_length() - 1.
  std::vector<std::int64_t> pooled_counts() const;

  friend bool operator==(const LengthConditionedTable&, const LengthConditionedTable&) = default;

 private:
  std::vector<std::int64_t>& row(int n);

  int n_min_;
  std::map<int, std::vector<std::int64_t>> f_;
  std::map<int, std::int64_t> sentence_counts_;
  std::int64_t total_deps_ = 0;
  std::int64_t skipped_ = 0;
};

LengthConditionedTable accumulate(std::span<const DepTree> trees, int n_min);

// Mean dependency distance: mean of d over all counted dependencies.
// Throws NoDataError on an empty table.
double mdd(const LengthConditionedTable& table);

// Average dependency length: mean of D over sentences. Throws NoDataError
// when empty.
double adl(std::span<const SentenceSummary> sentences);

// p(d | n) for d = 1..n-1. Throws NoDataError when no sentence has length n.
LengthPmf conditional_distribution(const LengthConditionedTable& table, int n);

// Pooled p(d) over all lengths, each dependency weighted equally. This is
// the mixture of the conditionals with weights proportional to (n - 1)
// times the sentence frequency of n. Throws NoDataError when empty.
LengthPmf mixed_distribution(const LengthConditionedTable& table);

struct PerLengthRow {
  int n = 0;
  std::int64_t sentences = 0;
  double mean_mean_length = 0.0;  // empirical E[<d> | n]
  double mean_total_length = 0.0;  // empirical E[D | n]
  double mean_k2 = 0.0;
};

std::map<int, PerLengthRow> per_length_curve(std::span<const SentenceSummary> sentences);

struct CorpusSummary {
  double mdd = 0.0;
  double adl = 0.0;
  std::int64_t sentences = 0;
  std::int64_t dependencies = 0;
  std::int64_t skipped_below_n_min = 0;
  std::map<int, PerLengthRow> per_n;
};

// Throws NoDataError when no tree reaches n_min.
CorpusSummary summarize_corpus(std::span<const DepTree> trees, int n_min);

}  // namespace deplen::stats
