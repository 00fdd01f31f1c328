#include "cdva/temporal.hpp"

#include <algorithm>
#include <cmath>

#include "cdva/errors.hpp"

namespace cdva {

std::vector<std::uint32_t> sample_keyframes(const std::vector<ColorHistogram>& histograms,
                                            const SamplingConfig& config) {
  if (histograms.empty()) throw Error(ErrorFamily::Data, "sample_keyframes: no histograms");
  std::vector<std::uint32_t> kept{0};
  std::size_t last = 0;
  for (std::size_t i = 1; i < histograms.size(); ++i) {
    if (histogram_distance(histograms[i], histograms[last]) > config.keyframe_threshold) {
      kept.push_back(static_cast<std::uint32_t>(i));
      last = i;
    }
  }
  return kept;
}

std::vector<Shot> detect_shots(const std::vector<std::uint32_t>& keyframes,
                               const std::vector<ColorHistogram>& histograms,
                               double shot_threshold, double fps, std::size_t frame_count) {
  if (keyframes.empty()) throw Error(ErrorFamily::Data, "detect_shots: no keyframes");
  std::vector<std::vector<std::uint32_t>> groups;
  std::size_t first = keyframes[0];
  groups.push_back({0});
  for (std::size_t k = 1; k < keyframes.size(); ++k) {
    if (histogram_distance(histograms[keyframes[k]], histograms[first]) >= shot_threshold) {
      groups.push_back({static_cast<std::uint32_t>(k)});
      first = keyframes[k];
    } else {
      groups.back().push_back(static_cast<std::uint32_t>(k));
    }
  }
  const double video_end = frame_count / fps;
  std::vector<Shot> shots(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    shots[g].members = groups[g];
    if (g == 0) {
      shots[g].start_s = 0.0;
    } else {
      // Midpoint between the last keyframe of the previous group and the
      // first of this one.
      double prev_ts = keyframes[groups[g - 1].back()] / fps;
      double curr_ts = keyframes[groups[g].front()] / fps;
      shots[g].start_s = 0.5 * (prev_ts + curr_ts);
      shots[g - 1].end_s = shots[g].start_s;
    }
  }
  shots.back().end_s = video_end;
  return shots;
}

std::vector<std::uint32_t> medoid_refine(
    const std::vector<std::uint32_t>& members,
    const std::function<double(std::size_t, std::size_t)>& similarity, double threshold) {
  if (members.empty()) return {};
  if (members.size() == 1) return members;
  std::size_t medoid = 0;
  double best_total = -1.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j) total += similarity(i, j);
    }
    if (total > best_total) {  // strict: ties keep the lowest index
      best_total = total;
      medoid = i;
    }
  }
  std::vector<std::uint32_t> kept{members[medoid]};
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != medoid && similarity(i, medoid) < threshold) kept.push_back(members[i]);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

std::vector<std::uint32_t> assign_p_frames(const std::vector<std::uint32_t>& i_frames,
                                           std::size_t frame_count, std::uint32_t stride) {
  std::vector<std::uint32_t> p;
  if (stride == 0) return p;
  for (std::size_t k = 0; k + 1 < i_frames.size(); ++k) {
    for (std::uint32_t f = i_frames[k] + stride; f < i_frames[k + 1]; f += stride) p.push_back(f);
  }
  (void)frame_count;
  return p;
}

TemporalStructure build_temporal_structure(const std::vector<std::uint32_t>& i_frames,
                                           const std::vector<ColorHistogram>& histograms,
                                           const SamplingConfig& config, double fps,
                                           std::size_t frame_count) {
  TemporalStructure ts;
  ts.video_end_s = frame_count / fps;
  auto shots = detect_shots(i_frames, histograms, config.shot_threshold, fps, frame_count);
  auto p_frames = assign_p_frames(i_frames, frame_count, config.p_frame_stride);

  std::vector<std::pair<std::uint32_t, FrameKind>> merged;
  for (auto f : i_frames) merged.emplace_back(f, FrameKind::I);
  for (auto f : p_frames) merged.emplace_back(f, FrameKind::P);
  std::sort(merged.begin(), merged.end());

  ts.keyframes.reserve(merged.size());
  ts.shots.resize(shots.size());
  for (std::size_t s = 0; s < shots.size(); ++s) {
    ts.shots[s].start_s = shots[s].start_s;
    ts.shots[s].end_s = shots[s].end_s;
  }
  for (const auto& [frame, kind] : merged) {
    KeyframeRef ref;
    ref.frame_index = frame;
    ref.timestamp_s = frame / fps;
    ref.kind = kind;
    // The last shot whose start is <= timestamp. Shot starts are midpoints,
    // so an I-frame always lands inside its own shot.
    std::size_t shot = 0;
    for (std::size_t s = 0; s < ts.shots.size(); ++s) {
      if (ts.shots[s].start_s <= ref.timestamp_s + 1e-9) shot = s;
    }
    ref.shot_id = static_cast<std::uint16_t>(shot);
    ts.shots[shot].members.push_back(static_cast<std::uint32_t>(ts.keyframes.size()));
    ts.keyframes.push_back(ref);
  }
  return ts;
}

}  // namespace cdva
