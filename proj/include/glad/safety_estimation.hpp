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

#ifndef GLAD_SAFETY_ESTIMATION_HPP
#define GLAD_SAFETY_ESTIMATION_HPP

#include <string>
#include <vector>

#include "glad/rng.hpp"

namespace glad {

/// Safety level of one imminent driving behavior, in [-1, 0]. Values in
/// [-1, -0.5] correspond to a predicted-unsafe (positive) classification,
/// values in (-0.5, 0] to predicted-safe (negative).
struct SafetyLevel {
  double mu = 0.0;

  bool predicted_unsafe() const { return mu <= -0.5; }
};

/// mu = prob_neg - 1, where prob_neg is the classifier probability of the
/// "safe" label. Throws OutOfRange unless 0 <= prob_neg <= 1.
SafetyLevel mu_from_prob(double prob_neg);

struct GroundTruth {
  bool unsafe = false;
};

/// Distribution of mu within one half-interval of [-1, 0]. Defaults to
/// uniform over [lo, hi]; an optional weighted-bin histogram (loaded from
/// the mu-histogram CSV) replaces it.
class MuDistribution {
 public:
  MuDistribution(double lo, double hi) : lo_(lo), hi_(hi) {}

  void set_histogram(std::vector<double> bin_lo, std::vector<double> bin_hi,
                     std::vector<double> weight);

  double sample(Rng& rng) const;

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
  std::vector<double> bin_lo_;
  std::vector<double> bin_hi_;
  std::vector<double> cumulative_;  // normalized cumulative weights
};

/// Derived false-positive rate that closes the confusion matrix from
/// reported precision/recall and the positive base rate pi:
///   fpr = ((1 - precision) / precision) * recall * pi / (1 - pi)
/// clamped to [0, 1]. Throws DegenerateBaseRate when pi == 1.
double derive_fpr(double precision, double recall, double base_rate);

/// Confusion-matrix description of the abstract safety estimator. Defaults
/// reproduce an F1 of ~0.845 on a 46.5% positive base rate.
struct SensorModel {
  double recall = 0.85;
  double precision = 0.84;
  double base_rate = 0.465;
  MuDistribution mu_dist_positive{-1.0, -0.5};
  MuDistribution mu_dist_negative{-0.5, 0.0};

  double false_positive_rate() const {
    return derive_fpr(precision, recall, base_rate);
  }
};

/// Draws one estimate conditioned on ground truth: an unsafe truth is
/// flagged (mu sampled from the positive distribution) with probability
/// recall, a safe truth with the derived false-positive rate.
SafetyLevel sample_estimate(const SensorModel& model, const GroundTruth& truth,
                            Rng& rng);

/// Loads `cell(TP|FN|TN|FP), bin_low, bin_high, weight` rows and installs
/// the histograms on the model (TP/FP rows feed the positive distribution,
/// FN/TN rows the negative one). Throws ParseError on malformed input.
void load_mu_histogram(SensorModel& model, const std::string& csv_text);

struct EstimationContext {
  GroundTruth truth;
};

/// Estimator interface: anything that grades the imminent behavior. A
/// learned model can be plugged in behind this surface later.
class SafetyEstimator {
 public:
  virtual ~SafetyEstimator() = default;
  virtual SafetyLevel estimate(const EstimationContext& ctx, Rng& rng) = 0;
};

/// The stochastic confusion-matrix estimator used in experiments.
class ConfusionMatrixEstimator : public SafetyEstimator {
 public:
  explicit ConfusionMatrixEstimator(SensorModel model)
      : model_(std::move(model)) {}

  SafetyLevel estimate(const EstimationContext& ctx, Rng& rng) override {
    return sample_estimate(model_, ctx.truth, rng);
  }

  const SensorModel& model() const { return model_; }

 private:
  SensorModel model_;
};

/// Deterministic table-driven estimator for tests: fixed mu per truth value.
class TableEstimator : public SafetyEstimator {
 public:
  TableEstimator(double mu_when_unsafe, double mu_when_safe)
      : mu_unsafe_(mu_when_unsafe), mu_safe_(mu_when_safe) {}

  /// A perfect estimator: certain detection, zero-penalty safe estimates.
  static TableEstimator perfect() { return TableEstimator(-1.0, 0.0); }

  SafetyLevel estimate(const EstimationContext& ctx, Rng&) override {
    return SafetyLevel{ctx.truth.unsafe ? mu_unsafe_ : mu_safe_};
  }

 private:
  double mu_unsafe_;
  double mu_safe_;
};

}  // namespace glad

#endif  // GLAD_SAFETY_ESTIMATION_HPP
