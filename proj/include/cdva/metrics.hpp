#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace cdva {

struct Interval {
  double start_s = 0.0;
  double end_s = 0.0;
};

struct JaccardResult {
  double value = 0.0;
  bool degenerate = false;  // both interval sets empty
};

// Interval-set Jaccard: |intersection| / |union| over total covered length.
// Throws MalformedInterval when any interval has start > end.
JaccardResult jaccard(const std::vector<Interval>& predicted,
                      const std::vector<Interval>& truth);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // monotone from (0,0) to (1,1)
  // TPR at the given FPR, linearly interpolated between curve points.
  double tpr_at_fpr(double fpr) const;
};

// Threshold sweep over the union of both score lists; a pair counts as
// detected when score >= threshold. Throws EmptyScores if either list is
// empty.
RocCurve roc_curve(const std::vector<double>& matching_scores,
                   const std::vector<double>& nonmatching_scores);

// One retrieval ranking: ordered candidate ids plus the query's relevant set.
struct Ranking {
  std::vector<std::string> ranked_ids;
  std::unordered_set<std::string> relevant;
};

// Mean over queries of average precision. Throws NoRelevants when a query
// has an empty relevant set.
double mean_average_precision(const std::vector<Ranking>& rankings);

// Mean over queries of |relevant in top R| / min(R, |relevant|) when
// `normalized`, else / R.
double precision_at_r(const std::vector<Ranking>& rankings, std::size_t r,
                      bool normalized = true);

// Total stream bytes per second of content, in kilobytes/second.
double measure_bitrate_kbps(std::size_t stream_bytes, double duration_s);

}  // namespace cdva
