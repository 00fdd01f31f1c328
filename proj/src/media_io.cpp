#include "cdva/media_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cdva/binio.hpp"
#include "cdva/errors.hpp"

namespace cdva {

namespace {

constexpr char kRawMagic[9] = "CDVAFRM\0";

std::string format_pattern(const std::string& pattern, std::uint32_t index) {
  char buf[1024];
  std::snprintf(buf, sizeof(buf), pattern.c_str(), index);
  return std::string(buf);
}

bool is_pattern(const std::string& source) { return source.find('%') != std::string::npos; }

void check_frame(const Frame& f) {
  if (f.width < 64 || f.height < 64)
    throw DimensionMismatch("frame smaller than 64x64: " + std::to_string(f.width) + "x" +
                            std::to_string(f.height));
}

}  // namespace

std::vector<VideoManifest> load_manifests(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorFamily::Io, "cannot open manifest " + path);
  std::vector<VideoManifest> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw InvalidConfig(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    VideoManifest m;
    for (auto& [key, value] : j.items()) {
      if (key == "video_id") m.video_id = value.get<std::string>();
      else if (key == "source") m.source = value.get<std::string>();
      else if (key == "fps") m.fps = value.get<double>();
      else if (key == "colorspace") m.colorspace = colorspace_from_string(value.get<std::string>());
      else if (key == "role") m.role = value.get<std::string>();
      else
        throw InvalidConfig(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (m.video_id.empty())
      throw InvalidConfig(path + ":" + std::to_string(lineno) + ": missing video_id");
    if (m.fps <= 0.0)
      throw InvalidConfig(path + ":" + std::to_string(lineno) + ": fps must be > 0");
    out.push_back(std::move(m));
  }
  return out;
}

void save_manifests(const std::string& path, const std::vector<VideoManifest>& entries) {
  std::ostringstream os;
  for (const auto& m : entries) {
    nlohmann::json j;
    j["video_id"] = m.video_id;
    j["source"] = m.source;
    j["fps"] = m.fps;
    j["colorspace"] = to_string(m.colorspace);
    if (!m.role.empty()) j["role"] = m.role;
    os << j.dump() << "\n";
  }
  write_text_atomic(path, os.str());
}

std::vector<Frame> load_frames(const VideoManifest& manifest) {
  std::vector<Frame> frames;
  if (is_pattern(manifest.source)) {
    for (std::uint32_t i = 0;; ++i) {
      std::string path = format_pattern(manifest.source, i);
      if (!std::filesystem::exists(path)) {
        if (i == 0) throw MissingFrame("no frame at " + path);
        break;
      }
      Frame f = read_ppm(path);
      f.index = i;
      f.timestamp_s = i / manifest.fps;
      f.colorspace = manifest.colorspace;
      frames.push_back(std::move(f));
    }
  } else {
    frames = read_raw_planar(manifest.source, manifest.fps);
    if (frames.empty()) throw MissingFrame("empty raw planar source " + manifest.source);
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    check_frame(frames[i]);
    if (frames[i].width != frames[0].width || frames[i].height != frames[0].height)
      throw DimensionMismatch(manifest.video_id + ": frame " + std::to_string(i) +
                              " changes size mid-video");
  }
  return frames;
}

std::size_t count_frames(const VideoManifest& manifest) {
  if (is_pattern(manifest.source)) {
    std::size_t n = 0;
    while (std::filesystem::exists(format_pattern(manifest.source, static_cast<std::uint32_t>(n))))
      ++n;
    return n;
  }
  auto bytes = read_file(manifest.source);
  ByteReader r(bytes);
  r.expect_magic(kRawMagic, "raw planar");
  r.u32();
  r.u32();
  r.u32();
  return r.u32();
}

void write_raw_planar(const std::string& path, const std::vector<Frame>& frames) {
  if (frames.empty()) throw Error(ErrorFamily::Io, "refusing to write empty raw planar file");
  ByteWriter w;
  w.magic(kRawMagic);
  w.u32(frames[0].width);
  w.u32(frames[0].height);
  w.u32(static_cast<std::uint32_t>(frames[0].colorspace));
  w.u32(static_cast<std::uint32_t>(frames.size()));
  for (const auto& f : frames) {
    for (int p = 0; p < 3; ++p) w.bytes(f.planes[p].data(), f.planes[p].size());
  }
  write_file_atomic(path, w.data());
}

std::vector<Frame> read_raw_planar(const std::string& path, double fps) {
  auto bytes = read_file(path);
  ByteReader r(bytes);
  r.expect_magic(kRawMagic, "raw planar " + path);
  std::uint32_t width = r.u32();
  std::uint32_t height = r.u32();
  std::uint32_t cs = r.u32();
  std::uint32_t count = r.u32();
  if (cs > 1) throw CorruptTensor(path + ": bad colorspace field");
  const std::size_t plane = static_cast<std::size_t>(width) * height;
  std::vector<Frame> frames;
  frames.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    Frame f;
    f.index = i;
    f.timestamp_s = i / fps;
    f.width = width;
    f.height = height;
    f.colorspace = static_cast<Colorspace>(cs);
    for (int p = 0; p < 3; ++p) {
      f.planes[p].resize(plane);
      r.bytes(f.planes[p].data(), plane);
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

void write_ppm(const std::string& path, const Frame& frame) {
  std::ostringstream header;
  header << "P6\n" << frame.width << " " << frame.height << "\n255\n";
  std::string h = header.str();
  std::vector<std::uint8_t> buf(h.begin(), h.end());
  buf.reserve(buf.size() + 3 * frame.planes[0].size());
  const std::size_t n = frame.planes[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    buf.push_back(frame.planes[0][i]);
    buf.push_back(frame.planes[1][i]);
    buf.push_back(frame.planes[2][i]);
  }
  write_file_atomic(path, buf);
}

Frame read_ppm(const std::string& path) {
  auto bytes = read_file(path);
  std::size_t pos = 0;
  auto token = [&]() -> std::string {
    while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
    }
    std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(bytes[pos])) ++pos;
    return std::string(bytes.begin() + start, bytes.begin() + pos);
  };
  if (token() != "P6") throw CorruptTensor(path + ": not a binary PPM");
  Frame f;
  f.width = static_cast<std::uint32_t>(std::stoul(token()));
  f.height = static_cast<std::uint32_t>(std::stoul(token()));
  if (token() != "255") throw CorruptTensor(path + ": only 8-bit PPM supported");
  ++pos;  // single whitespace after maxval
  const std::size_t n = static_cast<std::size_t>(f.width) * f.height;
  if (bytes.size() - pos < 3 * n) throw CorruptTensor(path + ": truncated PPM payload");
  for (int p = 0; p < 3; ++p) f.planes[p].resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.planes[0][i] = bytes[pos + 3 * i];
    f.planes[1][i] = bytes[pos + 3 * i + 1];
    f.planes[2][i] = bytes[pos + 3 * i + 2];
  }
  return f;
}

}  // namespace cdva
