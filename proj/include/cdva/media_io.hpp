#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdva/frame.hpp"

namespace cdva {

// One corpus entry. Serialized as JSON lines, one object per video:
//   {"video_id": "v01", "source": "frames/v01.cfrm", "fps": 10,
//    "colorspace": "RGB", "role": "reference"}
// `source` is either a raw planar .cfrm file or a printf-style pattern of
// binary PPM frames ("frames/%04d.ppm", indices from 0). `role` is optional
// and used only by the evaluation harness.
struct VideoManifest {
  std::string video_id;
  std::string source;
  double fps = 0.0;
  Colorspace colorspace = Colorspace::RGB;
  std::string role;  // "", "query", "reference", "distractor"
};

std::vector<VideoManifest> load_manifests(const std::string& path);
void save_manifests(const std::string& path, const std::vector<VideoManifest>& entries);

// Loads all frames in index order; timestamps are index / fps.
// Throws MissingFrame when the source yields no frames, DimensionMismatch
// when the frame size changes mid-video.
std::vector<Frame> load_frames(const VideoManifest& manifest);

std::size_t count_frames(const VideoManifest& manifest);

// Raw planar container: "CDVAFRM" + '\0' magic, then width, height,
// colorspace, frame count as LE u32, then per frame three planes of
// width*height bytes each.
void write_raw_planar(const std::string& path, const std::vector<Frame>& frames);
std::vector<Frame> read_raw_planar(const std::string& path, double fps);

// Binary PPM (P6). Used for image-sequence sources.
void write_ppm(const std::string& path, const Frame& frame);
Frame read_ppm(const std::string& path);

}  // namespace cdva
