#include "cdva/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "cdva/errors.hpp"

namespace cdva {

namespace {

void validate(const std::vector<Interval>& set, const char* what) {
  for (const auto& iv : set) {
    if (!(iv.start_s <= iv.end_s) || std::isnan(iv.start_s) || std::isnan(iv.end_s))
      throw MalformedInterval(std::string(what) + ": interval with start > end");
  }
}

std::vector<Interval> merged(std::vector<Interval> set) {
  std::sort(set.begin(), set.end(),
            [](const Interval& a, const Interval& b) { return a.start_s < b.start_s; });
  std::vector<Interval> out;
  for (const auto& iv : set) {
    if (!out.empty() && iv.start_s <= out.back().end_s)
      out.back().end_s = std::max(out.back().end_s, iv.end_s);
    else
      out.push_back(iv);
  }
  return out;
}

double total_length(const std::vector<Interval>& set) {
  double sum = 0.0;
  for (const auto& iv : set) sum += iv.end_s - iv.start_s;
  return sum;
}

double intersection_length(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double lo = std::max(a[i].start_s, b[j].start_s);
    double hi = std::min(a[i].end_s, b[j].end_s);
    if (hi > lo) sum += hi - lo;
    if (a[i].end_s < b[j].end_s)
      ++i;
    else
      ++j;
  }
  return sum;
}

}  // namespace

JaccardResult jaccard(const std::vector<Interval>& predicted,
                      const std::vector<Interval>& truth) {
  validate(predicted, "predicted");
  validate(truth, "truth");
  auto a = merged(predicted);
  auto b = merged(truth);
  double inter = intersection_length(a, b);
  double uni = total_length(a) + total_length(b) - inter;
  if (uni <= 0.0) return {0.0, true};
  return {inter / uni, false};
}

RocCurve roc_curve(const std::vector<double>& matching_scores,
                   const std::vector<double>& nonmatching_scores) {
  if (matching_scores.empty() || nonmatching_scores.empty())
    throw EmptyScores("roc_curve: empty score list");
  std::vector<double> thresholds;
  thresholds.reserve(matching_scores.size() + nonmatching_scores.size());
  thresholds.insert(thresholds.end(), matching_scores.begin(), matching_scores.end());
  thresholds.insert(thresholds.end(), nonmatching_scores.begin(), nonmatching_scores.end());
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<double> pos = matching_scores;
  std::vector<double> neg = nonmatching_scores;
  std::sort(pos.begin(), pos.end(), std::greater<>());
  std::sort(neg.begin(), neg.end(), std::greater<>());

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::size_t pi = 0, ni = 0;
  for (double t : thresholds) {
    while (pi < pos.size() && pos[pi] >= t) ++pi;
    while (ni < neg.size() && neg[ni] >= t) ++ni;
    curve.points.push_back({static_cast<double>(ni) / neg.size(),
                            static_cast<double>(pi) / pos.size()});
  }
  if (curve.points.back().fpr != 1.0 || curve.points.back().tpr != 1.0)
    curve.points.push_back({1.0, 1.0});
  return curve;
}

double RocCurve::tpr_at_fpr(double fpr) const {
  if (points.empty()) return 0.0;
  // Anchor on the last point at or left of the query so a vertical run at
  // exactly this FPR contributes its full TPR.
  std::size_t i = 0;
  while (i + 1 < points.size() && points[i + 1].fpr <= fpr) ++i;
  const auto& a = points[i];
  if (i + 1 == points.size() || a.fpr >= fpr) return a.tpr;
  const auto& b = points[i + 1];
  double w = (fpr - a.fpr) / (b.fpr - a.fpr);
  return a.tpr + w * (b.tpr - a.tpr);
}

double mean_average_precision(const std::vector<Ranking>& rankings) {
  if (rankings.empty()) throw NoRelevants("mean_average_precision: no queries");
  double sum = 0.0;
  for (const auto& q : rankings) {
    if (q.relevant.empty()) throw NoRelevants("query with no relevant items");
    double ap = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < q.ranked_ids.size(); ++i) {
      if (q.relevant.count(q.ranked_ids[i])) {
        ++hits;
        ap += static_cast<double>(hits) / static_cast<double>(i + 1);
      }
    }
    sum += ap / static_cast<double>(q.relevant.size());
  }
  return sum / static_cast<double>(rankings.size());
}

double precision_at_r(const std::vector<Ranking>& rankings, std::size_t r, bool normalized) {
  if (rankings.empty()) throw NoRelevants("precision_at_r: no queries");
  double sum = 0.0;
  for (const auto& q : rankings) {
    if (q.relevant.empty()) throw NoRelevants("query with no relevant items");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < q.ranked_ids.size() && i < r; ++i) {
      if (q.relevant.count(q.ranked_ids[i])) ++hits;
    }
    double denom = normalized ? static_cast<double>(std::min(r, q.relevant.size()))
                              : static_cast<double>(r);
    sum += denom > 0 ? hits / denom : 0.0;
  }
  return sum / static_cast<double>(rankings.size());
}

double measure_bitrate_kbps(std::size_t stream_bytes, double duration_s) {
  if (duration_s <= 0.0) throw Error(ErrorFamily::Data, "measure_bitrate: duration must be > 0");
  return static_cast<double>(stream_bytes) / duration_s / 1000.0;
}

}  // namespace cdva
