#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cdva/frame.hpp"

namespace cdva {

enum class FrameKind : std::uint8_t { I = 0, P = 1 };

struct SamplingConfig {
  double keyframe_threshold = 0.3;   // histogram distance to last kept keyframe
  double shot_threshold = 0.5;       // distance to first keyframe of the shot
  bool medoid_refine = false;
  double medoid_scfv_threshold = 0.75;
  std::uint32_t p_frame_stride = 5;  // 0 disables P-frames
};

struct KeyframeRef {
  std::uint32_t frame_index = 0;
  double timestamp_s = 0.0;
  FrameKind kind = FrameKind::I;
  std::uint16_t shot_id = 0;
};

struct Shot {
  double start_s = 0.0;
  double end_s = 0.0;
  std::vector<std::uint32_t> members;  // indices into TemporalStructure::keyframes
};

// Keyframes (I and P) in frame order plus the shot partition. Shots tile
// [0, video_end] without gaps or overlaps.
struct TemporalStructure {
  std::vector<KeyframeRef> keyframes;
  std::vector<Shot> shots;
  double video_end_s = 0.0;
};

// Frame 0 is always kept; frame i is kept iff its histogram distance to the
// last kept frame exceeds the threshold.
std::vector<std::uint32_t> sample_keyframes(const std::vector<ColorHistogram>& histograms,
                                            const SamplingConfig& config);

// Greedy shot grouping over I-frames: a new shot starts when the distance to
// the current shot's first keyframe reaches the threshold. Boundaries sit at
// timestamp midpoints between the adjacent keyframes.
std::vector<Shot> detect_shots(const std::vector<std::uint32_t>& keyframes,
                               const std::vector<ColorHistogram>& histograms,
                               double shot_threshold, double fps, std::size_t frame_count);

// Keeps the medoid of the segment (the member maximizing total similarity to
// the others, lowest index on ties) plus every member whose similarity to the
// medoid falls below the threshold. `similarity` is indexed by positions in
// `members`.
std::vector<std::uint32_t> medoid_refine(
    const std::vector<std::uint32_t>& members,
    const std::function<double(std::size_t, std::size_t)>& similarity, double threshold);

// Every stride-th frame strictly between consecutive I-frames. Stride 0
// yields no P-frames.
std::vector<std::uint32_t> assign_p_frames(const std::vector<std::uint32_t>& i_frames,
                                           std::size_t frame_count, std::uint32_t stride);

// Full structure: shots from I-frames, then P-frames merged in and assigned
// to the shot containing their timestamp.
TemporalStructure build_temporal_structure(const std::vector<std::uint32_t>& i_frames,
                                           const std::vector<ColorHistogram>& histograms,
                                           const SamplingConfig& config, double fps,
                                           std::size_t frame_count);

}  // namespace cdva
