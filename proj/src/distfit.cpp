#include "deplen/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "deplen/error.hpp"

namespace deplen::fit {

namespace {

template <typename F>
double golden_section_max(F&& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kTolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::int64_t total(std::span<const std::int64_t> counts) {
  std::int64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

// Truncated geometric on the segment d = lo..hi (1-based), written in the
// offset k = d - lo so that the normalizer sum_k q^k stays >= 1.
struct GeometricSegment {
  std::span<const std::int64_t> counts;  // counts[k] = observations at d = lo + k
  std::int64_t size = 0;
  double offset_sum = 0.0;  // sum_k k c_k

  explicit GeometricSegment(std::span<const std::int64_t> c) : counts(c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      size += c[k];
      offset_sum += static_cast<double>(k) * static_cast<double>(c[k]);
    }
  }

  double log_normalizer(double q) const {
    double z = 0.0;
    double w = 1.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      z += w;
      w *= q;
    }
    return std::log(z);
  }

  double log_likelihood(double q) const {
    const double lead = offset_sum == 0.0 ? 0.0 : offset_sum * std::log(q);
    return lead - static_cast<double>(size) * log_normalizer(q);
  }

  // E_q[k]; the score is size * (sample mean - expected_offset) / q.
  double expected_offset(double q) const {
    double z = 0.0;
    double m = 0.0;
    double w = 1.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      z += w;
      m += static_cast<double>(k) * w;
      w *= q;
    }
    return m / z;
  }
};

struct SegmentFit {
  double q = 0.0;
  double log_likelihood = 0.0;
  Boundary boundary = Boundary::none;
};

SegmentFit fit_segment(const GeometricSegment& seg) {
  const double mean = seg.offset_sum / static_cast<double>(seg.size);
  SegmentFit out;
  // The log-likelihood is concave in q, so the sign of the score at an end of
  // the interval decides whether the maximum sits there.
  if (mean <= seg.expected_offset(kDecayLower)) {
    out.q = kDecayLower;
    out.boundary = Boundary::lower;
  } else if (mean >= seg.expected_offset(kDecayUpper)) {
    out.q = kDecayUpper;
    out.boundary = Boundary::upper;
  } else {
    out.q = golden_section_max([&](double q) { return seg.log_likelihood(q); }, kDecayLower, kDecayUpper);
  }
  out.log_likelihood = seg.log_likelihood(out.q);
  return out;
}

struct ZetaSample {
  std::span<const std::int64_t> counts;
  std::int64_t size = 0;
  double log_sum = 0.0;  // sum_d c_d ln d

  explicit ZetaSample(std::span<const std::int64_t> c) : counts(c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      size += c[i];
      log_sum += static_cast<double>(c[i]) * std::log(static_cast<double>(i + 1));
    }
  }

  double log_likelihood(double gamma) const {
    double z = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) z += std::pow(static_cast<double>(i + 1), -gamma);
    return -gamma * log_sum - static_cast<double>(size) * std::log(z);
  }

  // E_gamma[ln d]; the score is size * (expected_log - sample mean of ln d).
  double expected_log(double gamma) const {
    double z = 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double w = std::pow(static_cast<double>(i + 1), -gamma);
      z += w;
      m += w * std::log(static_cast<double>(i + 1));
    }
    return m / z;
  }
};

FitResult make_result(Family family, std::span<const std::int64_t> counts, double log_likelihood, int k) {
  FitResult r;
  r.family = family;
  r.d_min = 1;
  r.d_max = static_cast<int>(counts.size());
  r.sample_size = total(counts);
  r.log_likelihood = log_likelihood;
  r.free_parameters = k;
  r.aic = 2.0 * k - 2.0 * log_likelihood;
  return r;
}

void require_data(std::span<const std::int64_t> counts, const char* what) {
  if (counts.empty() || total(counts) == 0) throw NoDataError(std::string(what) + ": empty sample");
}

std::string boundary_note(const std::string& param, Boundary b) {
  return param + " at " + to_string(b) + " end of search interval";
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::geometric: return "geometric";
    case Family::zeta: return "zeta";
    case Family::two_regime_geometric: return "two_regime_geometric";
  }
  return "unknown";
}

std::string to_string(Boundary boundary) {
  switch (boundary) {
    case Boundary::none: return "none";
    case Boundary::lower: return "lower";
    case Boundary::upper: return "upper";
  }
  return "unknown";
}

std::vector<std::int64_t> histogram(std::span<const int> sample, int d_max) {
  if (d_max < 1) throw DomainError("d_max must be at least 1");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d_max), 0);
  for (int d : sample) {
    if (d < 1 || d > d_max) {
      throw DomainError("observation " + std::to_string(d) + " outside 1.." + std::to_string(d_max));
    }
    ++counts[static_cast<std::size_t>(d - 1)];
  }
  return counts;
}

double geometric_log_likelihood(std::span<const std::int64_t> counts, double q) {
  return GeometricSegment(counts).log_likelihood(q);
}

double zeta_log_likelihood(std::span<const std::int64_t> counts, double gamma) {
  return ZetaSample(counts).log_likelihood(gamma);
}

FitResult fit_geometric(std::span<const std::int64_t> counts) {
  require_data(counts, "fit_geometric");
  const SegmentFit seg = fit_segment(GeometricSegment(counts));
  FitResult r = make_result(Family::geometric, counts, seg.log_likelihood, 1);
  r.params["q"] = seg.q;
  r.boundary = seg.boundary;
  if (seg.boundary != Boundary::none) r.notes.push_back(boundary_note("q", seg.boundary));
  return r;
}

FitResult fit_zeta(std::span<const std::int64_t> counts) {
  require_data(counts, "fit_zeta");
  const ZetaSample z(counts);
  const double mean_log = z.log_sum / static_cast<double>(z.size);
  double gamma = 0.0;
  Boundary boundary = Boundary::none;
  if (mean_log >= z.expected_log(kExponentLower)) {
    gamma = kExponentLower;
    boundary = Boundary::lower;
  } else if (mean_log <= z.expected_log(kExponentUpper)) {
    gamma = kExponentUpper;
    boundary = Boundary::upper;
  } else {
    gamma = golden_section_max([&](double g) { return z.log_likelihood(g); }, kExponentLower, kExponentUpper);
  }
  FitResult r = make_result(Family::zeta, counts, z.log_likelihood(gamma), 1);
  r.params["gamma"] = gamma;
  r.boundary = boundary;
  if (boundary != Boundary::none) r.notes.push_back(boundary_note("gamma", boundary));
  return r;
}

FitResult fit_two_regime(std::span<const std::int64_t> counts, int b_first, int b_last) {
  require_data(counts, "fit_two_regime");
  const int d_max = static_cast<int>(counts.size());
  if (b_first < 2 || b_last > d_max - 1 || b_first > b_last) {
    throw DomainError("breakpoint range [" + std::to_string(b_first) + ", " + std::to_string(b_last) +
                      "] must lie within 2.." + std::to_string(d_max - 1));
  }
  const auto n = static_cast<double>(total(counts));

  bool found = false;
  int best_b = 0;
  double best_ll = -std::numeric_limits<double>::infinity();
  SegmentFit best_first;
  SegmentFit best_second;
  for (int b = b_first; b <= b_last; ++b) {
    const auto split = static_cast<std::size_t>(b);
    const GeometricSegment first(counts.subspan(0, split));
    const GeometricSegment second(counts.subspan(split));
    if (first.size == 0 || second.size == 0) continue;
    const SegmentFit f1 = fit_segment(first);
    const SegmentFit f2 = fit_segment(second);
    const auto n1 = static_cast<double>(first.size);
    const auto n2 = static_cast<double>(second.size);
    const double ll = n1 * std::log(n1 / n) + n2 * std::log(n2 / n) + f1.log_likelihood + f2.log_likelihood;
    if (!found || ll > best_ll) {
      found = true;
      best_b = b;
      best_ll = ll;
      best_first = f1;
      best_second = f2;
    }
  }
  if (!found) throw NoDataError("fit_two_regime: every breakpoint in range leaves a segment empty");

  std::int64_t n1 = 0;
  for (int d = 1; d <= best_b; ++d) n1 += counts[static_cast<std::size_t>(d - 1)];

  FitResult r = make_result(Family::two_regime_geometric, counts, best_ll, 3);
  r.params["q1"] = best_first.q;
  r.params["q2"] = best_second.q;
  r.params["b"] = best_b;
  r.params["w"] = static_cast<double>(n1) / n;
  r.notes.push_back("segment weight w fixed by the empirical split at b; free parameters: q1, q2, b");
  if (best_first.boundary != Boundary::none) {
    r.boundary = best_first.boundary;
    r.notes.push_back(boundary_note("q1", best_first.boundary));
  }
  if (best_second.boundary != Boundary::none) {
    if (r.boundary == Boundary::none) r.boundary = best_second.boundary;
    r.notes.push_back(boundary_note("q2", best_second.boundary));
  }
  return r;
}

LengthPmf geometric_pmf(double q, int d_max) {
  LengthPmf pmf;
  pmf.mass.resize(static_cast<std::size_t>(d_max));
  double w = 1.0;
  double z = 0.0;
  for (auto& m : pmf.mass) {
    m = w;
    z += w;
    w *= q;
  }
  for (auto& m : pmf.mass) m /= z;
  return pmf;
}

LengthPmf zeta_pmf(double gamma, int d_max) {
  LengthPmf pmf;
  pmf.mass.resize(static_cast<std::size_t>(d_max));
  double z = 0.0;
  for (std::size_t i = 0; i < pmf.mass.size(); ++i) {
    pmf.mass[i] = std::pow(static_cast<double>(i + 1), -gamma);
    z += pmf.mass[i];
  }
  for (auto& m : pmf.mass) m /= z;
  return pmf;
}

LengthPmf two_regime_pmf(double q1, double q2, int breakpoint, double first_weight, int d_max) {
  if (breakpoint < 1 || breakpoint >= d_max) {
    throw DomainError("breakpoint " + std::to_string(breakpoint) + " outside 1.." + std::to_string(d_max - 1));
  }
  const LengthPmf head = geometric_pmf(q1, breakpoint);
  const LengthPmf tail = geometric_pmf(q2, d_max - breakpoint);
  LengthPmf pmf;
  pmf.mass.reserve(static_cast<std::size_t>(d_max));
  for (double m : head.mass) pmf.mass.push_back(first_weight * m);
  for (double m : tail.mass) pmf.mass.push_back((1.0 - first_weight) * m);
  return pmf;
}

LengthPmf fitted_pmf(const FitResult& result) {
  switch (result.family) {
    case Family::geometric: return geometric_pmf(result.param("q"), result.d_max);
    case Family::zeta: return zeta_pmf(result.param("gamma"), result.d_max);
    case Family::two_regime_geometric:
      return two_regime_pmf(result.param("q1"), result.param("q2"), static_cast<int>(result.param("b")),
                            result.param("w"), result.d_max);
  }
  return {};
}

std::vector<RankedFit> compare(std::span<const FitResult> results) {
  if (results.size() < 2) throw ComparisonError("compare needs at least two fits");
  for (const FitResult& r : results) {
    if (r.sample_size != results[0].sample_size || r.d_min != results[0].d_min || r.d_max != results[0].d_max) {
      throw ComparisonError("fits describe different samples (size or truncation differ)");
    }
  }
  std::vector<RankedFit> ranked;
  for (const FitResult& r : results) ranked.push_back({r.family, r.aic, 0.0});
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedFit& a, const RankedFit& b) { return a.aic < b.aic; });
  for (auto& r : ranked) r.delta_aic = r.aic - ranked.front().aic;
  return ranked;
}

}  // namespace deplen::fit
