// Copyright 2026 The amrkit Authors.
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

#include "amrkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <tuple>

#include "amrkit/text.hpp"

namespace amrkit {

double quantile_sorted(const std::vector<double> &sorted, double p) {
  if (sorted.empty()) throw Error("empty-samples", "no samples");
  p = std::clamp(p, 0.0, 1.0);
  double h = (static_cast<double>(sorted.size()) - 1) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxStats box_stats(std::vector<double> samples) {
  if (samples.empty()) throw Error("empty-samples", "no samples");
  std::sort(samples.begin(), samples.end());
  BoxStats b;
  b.n = samples.size();
  b.min = samples.front();
  b.max = samples.back();
  b.q1 = quantile_sorted(samples, 0.25);
  b.median = quantile_sorted(samples, 0.5);
  b.q3 = quantile_sorted(samples, 0.75);
  const double lo_fence = b.q1 - 1.5 * b.iqr();
  const double hi_fence = b.q3 + 1.5 * b.iqr();
  b.whisker_low = *std::lower_bound(samples.begin(), samples.end(), lo_fence);
  b.whisker_high = *(std::upper_bound(samples.begin(), samples.end(), hi_fence) - 1);
  // With interpolated quartiles the nearest sample can sit inside the box.
  b.whisker_low = std::min(b.whisker_low, b.q1);
  b.whisker_high = std::max(b.whisker_high, b.q3);
  b.mean = mean_stddev(samples).mean;
  return b;
}

MeanSd mean_stddev(const std::vector<double> &values) {
  MeanSd r;
  if (values.empty()) return r;
  double sum = 0;
  for (double v : values) sum += v;
  r.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - r.mean) * (v - r.mean);
    r.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return r;
}

std::pair<std::size_t, std::size_t> bucket_of(std::size_t tokens, std::size_t width) {
  if (width == 0) width = 1;
  std::size_t lo = tokens / width * width;
  return {lo, lo + width - 1};
}

void summarize(BenchReport &report, const std::vector<std::string> &sentences) {
  report.sentences = sentences.size();
  report.length_histogram.clear();
  std::vector<double> lengths;
  for (const auto &s : sentences) {
    std::size_t n = whitespace_token_count(s);
    ++report.length_histogram[n];
    lengths.push_back(static_cast<double>(n));
  }
  report.length = mean_stddev(lengths);

  std::map<std::size_t, std::vector<double>> grouped;
  std::vector<double> all;
  for (const auto &s : report.samples) {
    grouped[bucket_of(s.tokens, report.bucket_width).first].push_back(s.latency_ms);
    all.push_back(s.latency_ms);
  }
  report.overall = mean_stddev(all);
  report.buckets.clear();
  for (auto &[lo, values] : grouped) {
    BenchBucket b;
    std::tie(b.lo, b.hi) = bucket_of(lo, report.bucket_width);
    b.stats = box_stats(std::move(values));
    report.buckets.push_back(std::move(b));
  }
}

BenchReport measure_latency(const std::vector<std::string> &sentences, Provider &provider,
                            int repetitions, std::size_t bucket_width) {
  if (sentences.empty()) throw Error("empty-sentences", "no benchmark sentences");
  if (repetitions < 1) throw Error("invalid-argument", "repetitions must be >= 1");
  if (bucket_width == 0) throw Error("invalid-argument", "bucket width must be >= 1");

  BenchReport report;
  report.provider = provider.id();
  report.repetitions = repetitions;
  report.bucket_width = bucket_width;
  for (int rep = 0; rep < repetitions; ++rep) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const std::string &s = sentences[i];
      if (trim(s).empty()) {
        report.failures.push_back({i, rep, "empty-sentence", "sentence is empty"});
        continue;
      }
      try {
        auto start = std::chrono::steady_clock::now();
        auto output = provider.generate(s);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        make_suggestion(provider.id(), s, std::move(output), ms);
        report.samples.push_back({i, whitespace_token_count(s), rep, ms});
      } catch (const Error &e) {
        report.failures.push_back({i, rep, e.code(), e.what()});
      }
    }
  }
  summarize(report, sentences);
  return report;
}

namespace {

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void write_bench_table(std::ostream &out, const BenchReport &report) {
  const std::vector<std::string> head = {"tokens", "n",     "whisker_lo", "q1",
                                         "median", "q3",    "whisker_hi", "iqr"};
  std::vector<std::vector<std::string>> rows;
  for (const auto &b : report.buckets) {
    const auto &s = b.stats;
    rows.push_back({std::to_string(b.lo) + "-" + std::to_string(b.hi), std::to_string(s.n),
                    fixed(s.whisker_low), fixed(s.q1), fixed(s.median), fixed(s.q3),
                    fixed(s.whisker_high), fixed(s.iqr())});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto &r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto emit = [&](const std::vector<std::string> &r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << "  ";
      if (c == 0) {
        out << r[c] << std::string(width[c] - r[c].size(), ' ');
      } else {
        out << std::string(width[c] - r[c].size(), ' ') << r[c];
      }
    }
    out << '\n';
  };
  out << "provider " << report.provider << ", " << report.sentences << " sentences x "
      << report.repetitions << ", latency in ms\n";
  emit(head);
  for (const auto &r : rows) emit(r);
  out << "overall mean " << fixed(report.overall.mean) << " ms, sd "
      << fixed(report.overall.stddev) << " ms; " << report.samples.size() << " samples, "
      << report.failures.size() << " failures\n";
  out << "sentence length mean " << fixed(report.length.mean) << " tokens, sd "
      << fixed(report.length.stddev) << "\n";
}

void write_bench_samples(std::ostream &out, const BenchReport &report) {
  out << "sentence\ttokens\trepetition\tlatency_ms\n";
  for (const auto &s : report.samples) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", s.latency_ms);
    out << s.sentence << '\t' << s.tokens << '\t' << s.repetition << '\t' << buf << '\n';
  }
}

std::vector<BenchSample> read_bench_samples(std::istream &in) {
  std::vector<BenchSample> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    BenchSample s;
    if (!(row >> s.sentence >> s.tokens >> s.repetition >> s.latency_ms)) {
      throw Error("bad-samples", "malformed samples line: " + line);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace amrkit
