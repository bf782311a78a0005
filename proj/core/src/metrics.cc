// Copyright 2026 The etype Authors.
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

#include "etype/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "etype/errors.h"

namespace etype::metrics {

namespace {

// Dense contingency table: rows index reference clusters, columns predicted.
struct Contingency {
  std::vector<std::vector<long>> counts;
  std::vector<long> ref_sizes;
  std::vector<long> pred_sizes;
  long n = 0;
};

std::vector<int> Densify(const std::vector<int>& labels, int* num_labels) {
  std::map<int, int> ids;
  for (int l : labels) {
    if (l < 0) throw DomainError("cluster labels must be non-negative");
    ids.emplace(l, 0);
  }
  int next = 0;
  for (auto& [label, id] : ids) id = next++;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(ids[l]);
  *num_labels = next;
  return out;
}

Contingency Build(const ClusteringResult& r) {
  if (r.predicted.size() != r.reference.size()) {
    throw DomainError("predicted and reference labels differ in length");
  }
  int k_ref = 0, k_pred = 0;
  const std::vector<int> ref = Densify(r.reference, &k_ref);
  const std::vector<int> pred = Densify(r.predicted, &k_pred);
  Contingency c;
  c.counts.assign(k_ref, std::vector<long>(k_pred, 0));
  c.ref_sizes.assign(k_ref, 0);
  c.pred_sizes.assign(k_pred, 0);
  c.n = static_cast<long>(ref.size());
  for (size_t i = 0; i < ref.size(); ++i) {
    ++c.counts[ref[i]][pred[i]];
    ++c.ref_sizes[ref[i]];
    ++c.pred_sizes[pred[i]];
  }
  return c;
}

double Comb2(long x) { return 0.5 * static_cast<double>(x) * (x - 1); }

double Entropy(const std::vector<long>& sizes, long n) {
  double h = 0.0;
  for (long s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double AdjustedRandIndex(const ClusteringResult& r) {
  const Contingency c = Build(r);
  if (c.n < 2) throw DomainError("ARI needs at least 2 elements");
  double index = 0.0;
  for (const auto& row : c.counts) {
    for (long v : row) index += Comb2(v);
  }
  double sum_ref = 0.0, sum_pred = 0.0;
  for (long s : c.ref_sizes) sum_ref += Comb2(s);
  for (long s : c.pred_sizes) sum_pred += Comb2(s);
  const double expected = sum_ref * sum_pred / Comb2(c.n);
  const double max_index = 0.5 * (sum_ref + sum_pred);
  const double denom = max_index - expected;
  if (denom == 0.0) return 1.0;
  return (index - expected) / denom;
}

double NormalizedMutualInformation(const ClusteringResult& r) {
  const Contingency c = Build(r);
  if (c.n < 1) throw DomainError("NMI needs at least 1 element");
  const double h_ref = Entropy(c.ref_sizes, c.n);
  const double h_pred = Entropy(c.pred_sizes, c.n);
  if (c.ref_sizes.size() == 1 && c.pred_sizes.size() == 1) return 1.0;
  if (h_ref + h_pred == 0.0) return 1.0;
  const double n = static_cast<double>(c.n);
  double mi = 0.0;
  for (size_t i = 0; i < c.counts.size(); ++i) {
    for (size_t j = 0; j < c.counts[i].size(); ++j) {
      const long v = c.counts[i][j];
      if (v == 0) continue;
      mi += (v / n) * std::log(v * n / (static_cast<double>(c.ref_sizes[i]) *
                                        c.pred_sizes[j]));
    }
  }
  return std::clamp(2.0 * mi / (h_ref + h_pred), 0.0, 1.0);
}

BCubed BCubedScores(const ClusteringResult& r) {
  const Contingency c = Build(r);
  if (c.n < 1) throw DomainError("BCubed needs at least 1 element");
  // Every element of cell (i, j) shares the same overlap |C ∩ C*| = n_ij.
  double precision = 0.0, recall = 0.0;
  for (size_t i = 0; i < c.counts.size(); ++i) {
    for (size_t j = 0; j < c.counts[i].size(); ++j) {
      const double v = static_cast<double>(c.counts[i][j]);
      if (v == 0.0) continue;
      precision += v * v / c.pred_sizes[j];
      recall += v * v / c.ref_sizes[i];
    }
  }
  BCubed out;
  out.precision = precision / c.n;
  out.recall = recall / c.n;
  out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

double ClusteringAccuracy(const ClusteringResult& r) {
  const Contingency c = Build(r);
  if (c.n < 1) throw DomainError("ACC needs at least 1 element");
  const int k = static_cast<int>(c.ref_sizes.size());
  if (static_cast<int>(c.pred_sizes.size()) != k) {
    throw DomainError("ACC requires equal cluster counts (reference " +
                      std::to_string(k) + ", predicted " +
                      std::to_string(c.pred_sizes.size()) + ")");
  }
  // Maximize matched counts = minimize their negation. Rows are predicted
  // clusters, columns reference clusters.
  std::vector<double> cost(static_cast<size_t>(k) * k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      cost[static_cast<size_t>(p) * k + q] =
          -static_cast<double>(c.counts[q][p]);
    }
  }
  const std::vector<int> match = SolveAssignment(cost, k);
  long hits = 0;
  for (int p = 0; p < k; ++p) hits += c.counts[match[p]][p];
  return static_cast<double>(hits) / c.n;
}

std::vector<int> SolveAssignment(std::span<const double> cost, int n) {
  // Hungarian method with potentials, O(n^3). Arrays are 1-based; index 0 is
  // a sentinel column.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur =
            cost[static_cast<size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace etype::metrics
