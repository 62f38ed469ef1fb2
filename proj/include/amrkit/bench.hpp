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

#ifndef AMRKIT_BENCH_HPP_
#define AMRKIT_BENCH_HPP_

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "amrkit/copilot.hpp"

namespace amrkit {

// Linear-interpolation quantile of sorted samples (Hyndman-Fan type 7).
double quantile_sorted(const std::vector<double> &sorted, double p);

struct BoxStats {
  std::size_t n = 0;
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
  // Most extreme samples within 1.5 IQR of the box, never inside the box.
  double whisker_low = 0;
  double whisker_high = 0;
  double mean = 0;

  double iqr() const { return q3 - q1; }
};

// Throws Error("empty-samples") when `samples` is empty.
BoxStats box_stats(std::vector<double> samples);

struct MeanSd {
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 for a single value
};

MeanSd mean_stddev(const std::vector<double> &values);

struct BenchSample {
  std::size_t sentence = 0;  // index into the input list
  std::size_t tokens = 0;
  int repetition = 0;
  double latency_ms = 0;
};

struct BenchFailure {
  std::size_t sentence = 0;
  int repetition = 0;
  std::string code;
  std::string message;
};

struct BenchBucket {
  std::size_t lo = 0;  // token-count range, inclusive
  std::size_t hi = 0;
  BoxStats stats;
};

// Reference figures carried in the report for comparison, not targets.
struct BenchReference {
  double mean_tokens = 21.72;
  double stddev_tokens = 14.76;
  double gpu_mean_s = 1.62;
  double gpu_stddev_s = 0.86;
  double cpu_mean_s = 4.47;
  double cpu_stddev_s = 3.32;
  std::size_t sentences = 1000;
  std::string tokenizer = "bart";
};

struct BenchReport {
  std::string provider;
  int repetitions = 1;
  std::size_t bucket_width = 10;
  std::size_t sentences = 0;
  std::vector<BenchBucket> buckets;  // ascending, non-empty buckets only
  MeanSd overall;                    // latency, ms
  std::map<std::size_t, std::size_t> length_histogram;  // tokens -> sentences
  MeanSd length;                                        // tokens
  std::vector<BenchSample> samples;
  std::vector<BenchFailure> failures;
  BenchReference reference;
};

// Sequential, uncached provider calls; `repetitions` passes over the list.
// Provider errors become failures. Throws Error("empty-sentences") and
// Error("invalid-argument").
BenchReport measure_latency(const std::vector<std::string> &sentences, Provider &provider,
                            int repetitions = 1, std::size_t bucket_width = 10);

// Recomputes buckets, overall and length statistics from the samples; used by
// measure_latency and for offline checks of a samples file.
void summarize(BenchReport &report, const std::vector<std::string> &sentences);

// Bucket [lo, hi] of a token count.
std::pair<std::size_t, std::size_t> bucket_of(std::size_t tokens, std::size_t width);

void write_bench_table(std::ostream &out, const BenchReport &report);
// sentence, tokens, repetition, latency_ms; tab separated with a header line.
void write_bench_samples(std::ostream &out, const BenchReport &report);
std::vector<BenchSample> read_bench_samples(std::istream &in);

}  // namespace amrkit

#endif  // AMRKIT_BENCH_HPP_
