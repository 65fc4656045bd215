// Copyright 2026 The glad Authors
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

#include "glad/safety_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "glad/errors.hpp"

namespace glad {

SafetyLevel mu_from_prob(double prob_neg) {
  if (!(prob_neg >= 0.0 && prob_neg <= 1.0)) {
    throw OutOfRange("prob_neg must be in [0, 1], got " +
                     std::to_string(prob_neg));
  }
  return SafetyLevel{prob_neg - 1.0};
}

void MuDistribution::set_histogram(std::vector<double> bin_lo,
                                   std::vector<double> bin_hi,
                                   std::vector<double> weight) {
  if (bin_lo.size() != bin_hi.size() || bin_lo.size() != weight.size() ||
      bin_lo.empty()) {
    throw ParseError("mu histogram: mismatched or empty bin columns");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < bin_lo.size(); ++i) {
    if (bin_lo[i] < lo_ - 1e-12 || bin_hi[i] > hi_ + 1e-12 ||
        bin_hi[i] < bin_lo[i]) {
      throw ParseError("mu histogram: bin outside distribution support");
    }
    if (weight[i] < 0.0) {
      throw ParseError("mu histogram: negative weight");
    }
    total += weight[i];
  }
  if (total <= 0.0) {
    throw ParseError("mu histogram: zero total weight");
  }
  bin_lo_ = std::move(bin_lo);
  bin_hi_ = std::move(bin_hi);
  cumulative_.clear();
  double acc = 0.0;
  for (const double w : weight) {
    acc += w / total;
    cumulative_.push_back(acc);
  }
  cumulative_.back() = 1.0;
}

double MuDistribution::sample(Rng& rng) const {
  if (cumulative_.empty()) {
    // Uniform over (lo, hi]: hi is reached at u == 0, lo is excluded, so the
    // boundary between the two half-intervals stays on the positive side.
    const double u = rng.uniform();
    return hi_ - (hi_ - lo_) * u;
  }
  const double u = rng.uniform();
  std::size_t bin = 0;
  while (bin + 1 < cumulative_.size() && u >= cumulative_[bin]) {
    ++bin;
  }
  const double v = rng.uniform();
  return bin_hi_[bin] - (bin_hi_[bin] - bin_lo_[bin]) * v;
}

double derive_fpr(double precision, double recall, double base_rate) {
  if (!(precision > 0.0 && precision <= 1.0) ||
      !(recall > 0.0 && recall <= 1.0) ||
      !(base_rate > 0.0 && base_rate <= 1.0)) {
    throw OutOfRange("derive_fpr: inputs must lie in (0, 1]");
  }
  if (base_rate == 1.0) {
    throw DegenerateBaseRate("derive_fpr: base rate of 1 leaves no negatives");
  }
  const double fpr =
      ((1.0 - precision) / precision) * recall * base_rate / (1.0 - base_rate);
  return std::clamp(fpr, 0.0, 1.0);
}

SafetyLevel sample_estimate(const SensorModel& model, const GroundTruth& truth,
                            Rng& rng) {
  const bool flagged = truth.unsafe
                           ? rng.bernoulli(model.recall)
                           : rng.bernoulli(model.false_positive_rate());
  const double mu = flagged ? model.mu_dist_positive.sample(rng)
                            : model.mu_dist_negative.sample(rng);
  return SafetyLevel{std::clamp(mu, -1.0, 0.0)};
}

void load_mu_histogram(SensorModel& model, const std::string& csv_text) {
  std::vector<double> pos_lo, pos_hi, pos_w;
  std::vector<double> neg_lo, neg_hi, neg_w;
  std::istringstream in(csv_text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell, lo_s, hi_s, w_s;
    if (!std::getline(row, cell, ',') || !std::getline(row, lo_s, ',') ||
        !std::getline(row, hi_s, ',') || !std::getline(row, w_s, ',')) {
      throw ParseError("mu histogram: malformed row: " + line);
    }
    if (first && cell == "cell") {
      first = false;
      continue;  // header
    }
    first = false;
    double lo = 0.0, hi = 0.0, w = 0.0;
    try {
      lo = std::stod(lo_s);
      hi = std::stod(hi_s);
      w = std::stod(w_s);
    } catch (const std::exception&) {
      throw ParseError("mu histogram: non-numeric value in row: " + line);
    }
    if (cell == "TP" || cell == "FP") {
      pos_lo.push_back(lo);
      pos_hi.push_back(hi);
      pos_w.push_back(w);
    } else if (cell == "FN" || cell == "TN") {
      neg_lo.push_back(lo);
      neg_hi.push_back(hi);
      neg_w.push_back(w);
    } else {
      throw ParseError("mu histogram: unknown cell kind: " + cell);
    }
  }
  if (!pos_lo.empty()) {
    model.mu_dist_positive.set_histogram(pos_lo, pos_hi, pos_w);
  }
  if (!neg_lo.empty()) {
    model.mu_dist_negative.set_histogram(neg_lo, neg_hi, neg_w);
  }
}

}  // namespace glad
