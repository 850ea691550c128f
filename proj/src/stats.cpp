#include "deplen/stats.hpp"

#include <algorithm>

#include "deplen/error.hpp"

namespace deplen::stats {

SentenceSummary summarize(const DepTree& tree) {
  SentenceSummary s;
  s.n = tree.size();
  s.total_length = total_length(tree);
  for (int k : tree.degrees()) s.sum_squared_degrees += static_cast<std::int64_t>(k) * k;
  return s;
}

std::vector<SentenceSummary> summarize_all(std::span<const DepTree> trees, int n_min) {
  std::vector<SentenceSummary> out;
  out.reserve(trees.size());
  for (const DepTree& t : trees) {
    if (t.size() >= n_min) out.push_back(summarize(t));
  }
  return out;
}

LengthConditionedTable::LengthConditionedTable(int n_min) : n_min_(n_min) {
  if (n_min < 2) throw ValidationError("n_min must be at least 2, got " + std::to_string(n_min));
}

std::vector<std::int64_t>& LengthConditionedTable::row(int n) {
  auto& r = f_[n];
  if (r.empty()) r.assign(static_cast<std::size_t>(n - 1), 0);
  return r;
}

void LengthConditionedTable::add(const DepTree& tree) {
  const int n = tree.size();
  if (n < n_min_) {
    ++skipped_;
    return;
  }
  auto& r = row(n);
  for (const Edge& e : tree.edges()) ++r[static_cast<std::size_t>(e.length() - 1)];
  ++sentence_counts_[n];
  total_deps_ += n - 1;
}

void LengthConditionedTable::add_sentence(int n, std::span<const int> dep_lengths) {
  if (n < 2 || dep_lengths.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("a sentence of " + std::to_string(n) + " words has " + std::to_string(n - 1) +
                      " dependencies, got " + std::to_string(dep_lengths.size()));
  }
  for (int d : dep_lengths) {
    if (d < 1 || d >= n) {
      throw DomainError("dependency length " + std::to_string(d) + " impossible in a sentence of " +
                        std::to_string(n) + " words");
    }
  }
  if (n < n_min_) {
    ++skipped_;
    return;
  }
  auto& r = row(n);
  for (int d : dep_lengths) ++r[static_cast<std::size_t>(d - 1)];
  ++sentence_counts_[n];
  total_deps_ += n - 1;
}

LengthConditionedTable& LengthConditionedTable::merge(const LengthConditionedTable& other) {
  if (other.n_min_ != n_min_) {
    throw ValidationError("cannot merge tables with n_min " + std::to_string(n_min_) + " and " +
                          std::to_string(other.n_min_));
  }
  for (const auto& [n, counts] : other.f_) {
    auto& r = row(n);
    for (std::size_t i = 0; i < counts.size(); ++i) r[i] += counts[i];
  }
  for (const auto& [n, c] : other.sentence_counts_) sentence_counts_[n] += c;
  total_deps_ += other.total_deps_;
  skipped_ += other.skipped_;
  return *this;
}

std::int64_t LengthConditionedTable::sentences() const {
  std::int64_t s = 0;
  for (const auto& [n, c] : sentence_counts_) s += c;
  return s;
}

std::int64_t LengthConditionedTable::count(int n, int d) const {
  const auto it = f_.find(n);
  if (it == f_.end() || d < 1 || d >= n) return 0;
  return it->second[static_cast<std::size_t>(d - 1)];
}

std::vector<std::int64_t> LengthConditionedTable::pooled_counts() const {
  std::vector<std::int64_t> pooled(static_cast<std::size_t>(std::max(0, max_length() - 1)), 0);
  for (const auto& [n, counts] : f_) {
    for (std::size_t i = 0; i < counts.size(); ++i) pooled[i] += counts[i];
  }
  return pooled;
}

LengthConditionedTable accumulate(std::span<const DepTree> trees, int n_min) {
  LengthConditionedTable table(n_min);
  for (const DepTree& t : trees) table.add(t);
  return table;
}

double mdd(const LengthConditionedTable& table) {
  if (table.total_deps() == 0) throw NoDataError("MDD: no dependencies in sentences with n >= n_min");
  double weighted = 0.0;
  for (const auto& [n, counts] : table.counts()) {
    for (std::size_t i = 0; i < counts.size(); ++i) weighted += static_cast<double>(counts[i]) * static_cast<double>(i + 1);
  }
  return weighted / static_cast<double>(table.total_deps());
}

double adl(std::span<const SentenceSummary> sentences) {
  if (sentences.empty()) throw NoDataError("ADL: no sentences");
  double sum = 0.0;
  for (const auto& s : sentences) sum += static_cast<double>(s.total_length);
  return sum / static_cast<double>(sentences.size());
}

LengthPmf conditional_distribution(const LengthConditionedTable& table, int n) {
  const auto it = table.counts().find(n);
  if (it == table.counts().end()) throw NoDataError("no sentences of length " + std::to_string(n));
  LengthPmf pmf;
  std::int64_t total = 0;
  for (auto c : it->second) total += c;
  pmf.mass.reserve(it->second.size());
  for (auto c : it->second) pmf.mass.push_back(static_cast<double>(c) / static_cast<double>(total));
  return pmf;
}

LengthPmf mixed_distribution(const LengthConditionedTable& table) {
  if (table.total_deps() == 0) throw NoDataError("mixed distribution: no dependencies");
  LengthPmf pmf;
  const auto pooled = table.pooled_counts();
  pmf.mass.reserve(pooled.size());
  for (auto c : pooled) pmf.mass.push_back(static_cast<double>(c) / static_cast<double>(table.total_deps()));
  return pmf;
}

std::map<int, PerLengthRow> per_length_curve(std::span<const SentenceSummary> sentences) {
  std::map<int, PerLengthRow> rows;
  for (const auto& s : sentences) {
    auto& r = rows[s.n];
    r.n = s.n;
    ++r.sentences;
    r.mean_mean_length += s.mean_length();
    r.mean_total_length += static_cast<double>(s.total_length);
    r.mean_k2 += s.k2();
  }
  for (auto& [n, r] : rows) {
    const auto count = static_cast<double>(r.sentences);
    r.mean_mean_length /= count;
    r.mean_total_length /= count;
    r.mean_k2 /= count;
  }
  return rows;
}

CorpusSummary summarize_corpus(std::span<const DepTree> trees, int n_min) {
  const auto table = accumulate(trees, n_min);
  const auto sentences = summarize_all(trees, n_min);
  if (sentences.empty()) throw NoDataError("no sentences with n >= " + std::to_string(n_min));
  CorpusSummary out;
  out.mdd = mdd(table);
  out.adl = adl(sentences);
  out.sentences = static_cast<std::int64_t>(sentences.size());
  out.dependencies = table.total_deps();
  out.skipped_below_n_min = table.skipped_sentences();
  out.per_n = per_length_curve(sentences);
  return out;
}

}  // namespace deplen::stats
