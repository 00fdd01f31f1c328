#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "cdva/binio.hpp"
#include "cdva/errors.hpp"
#include "cdva/media_io.hpp"
#include "cdva/prng.hpp"

using namespace cdva;

namespace {

Frame make_frame(std::uint32_t w, std::uint32_t h, std::uint8_t fill) {
  Frame f;
  f.width = w;
  f.height = h;
  for (auto& p : f.planes) p.assign(static_cast<std::size_t>(w) * h, fill);
  return f;
}

Frame random_frame(std::uint32_t w, std::uint32_t h, Prng& rng) {
  Frame f = make_frame(w, h, 0);
  for (auto& p : f.planes)
    for (auto& v : p) v = static_cast<std::uint8_t>(rng.next_below(256));
  return f;
}

std::filesystem::path temp_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "cdva_tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("color histogram of constant frames") {
  auto f0 = make_frame(64, 64, 0);
  auto h0 = color_histogram(f0);
  for (int c = 0; c < 3; ++c) {
    CHECK(h0.bins[c * kHistogramBins] == doctest::Approx(1.0));
  }
  auto f255 = make_frame(64, 64, 255);
  auto h255 = color_histogram(f255);
  for (int c = 0; c < 3; ++c) {
    CHECK(h255.bins[c * kHistogramBins + 63] == doctest::Approx(1.0));
  }
}

TEST_CASE("color histogram hand count on four samples") {
  // 2x2 content replicated to a legal 64x64 frame: each value fills a quarter.
  Frame f = make_frame(64, 64, 0);
  const std::uint8_t vals[4] = {0, 4, 8, 252};
  for (std::uint32_t y = 0; y < 64; ++y)
    for (std::uint32_t x = 0; x < 64; ++x)
      f.at(0, x, y) = vals[(y / 32) * 2 + (x / 32)];
  auto h = color_histogram(f);
  CHECK(h.bins[0] == doctest::Approx(0.25));
  CHECK(h.bins[1] == doctest::Approx(0.25));
  CHECK(h.bins[2] == doctest::Approx(0.25));
  CHECK(h.bins[63] == doctest::Approx(0.25));
}

TEST_CASE("histogram L1 normalization per channel") {
  Prng rng(7);
  auto f = random_frame(80, 64, rng);
  auto h = color_histogram(f);
  for (int c = 0; c < 3; ++c) {
    double sum = 0;
    for (int b = 0; b < kHistogramBins; ++b) sum += h.bins[c * kHistogramBins + b];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("histogram distance identity, disjoint, half overlap") {
  auto f = make_frame(64, 64, 10);
  auto h = color_histogram(f);
  CHECK(histogram_distance(h, h) == doctest::Approx(0.0));

  auto g = color_histogram(make_frame(64, 64, 200));
  CHECK(histogram_distance(h, g) == doctest::Approx(1.0));

  ColorHistogram a{}, b{};
  for (int c = 0; c < 3; ++c) {
    a.bins[c * kHistogramBins] = 1.0f;
    b.bins[c * kHistogramBins] = 0.5f;
    b.bins[c * kHistogramBins + 1] = 0.5f;
  }
  CHECK(histogram_distance(a, b) == doctest::Approx(0.5));
}

TEST_CASE("histogram distance symmetric and bounded on random histograms") {
  Prng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = color_histogram(random_frame(64, 64, rng));
    auto b = color_histogram(random_frame(64, 64, rng));
    double d1 = histogram_distance(a, b);
    double d2 = histogram_distance(b, a);
    CHECK(d1 == doctest::Approx(d2));
    CHECK(d1 >= 0.0);
    CHECK(d1 <= 1.0);
  }
}

TEST_CASE("color histogram invariant to pixel permutation") {
  Prng rng(33);
  auto f = random_frame(64, 64, rng);
  Frame g = f;
  // Reverse raster order: a permutation of the samples.
  for (int p = 0; p < 3; ++p) std::reverse(g.planes[p].begin(), g.planes[p].end());
  auto ha = color_histogram(f);
  auto hb = color_histogram(g);
  for (std::size_t i = 0; i < ha.bins.size(); ++i) CHECK(ha.bins[i] == hb.bins[i]);
}

TEST_CASE("raw planar round trip is bit exact") {
  auto dir = temp_dir("rawplanar");
  Prng rng(5);
  std::vector<Frame> frames;
  for (int i = 0; i < 3; ++i) {
    auto f = random_frame(64, 96, rng);
    f.index = i;
    frames.push_back(f);
  }
  auto path = (dir / "clip.cfrm").string();
  write_raw_planar(path, frames);
  auto back = read_raw_planar(path, 30.0);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(back[i].width == 64);
    CHECK(back[i].height == 96);
    for (int p = 0; p < 3; ++p) CHECK(back[i].planes[p] == frames[i].planes[p]);
  }
}

TEST_CASE("load_frames timestamps and error paths") {
  auto dir = temp_dir("loadframes");
  Prng rng(9);
  std::vector<Frame> frames;
  for (int i = 0; i < 90; ++i) frames.push_back(random_frame(64, 64, rng));
  auto path = (dir / "clip.cfrm").string();
  write_raw_planar(path, frames);

  VideoManifest m;
  m.video_id = "clip";
  m.source = path;
  m.fps = 30.0;
  auto loaded = load_frames(m);
  REQUIRE(loaded.size() == 90);
  CHECK(loaded[0].timestamp_s == doctest::Approx(0.0));
  CHECK(loaded[89].timestamp_s == doctest::Approx(89.0 / 30.0));
  for (std::size_t i = 1; i < loaded.size(); ++i)
    CHECK(loaded[i].timestamp_s - loaded[i - 1].timestamp_s == doctest::Approx(1.0 / 30.0));

  VideoManifest missing;
  missing.video_id = "missing";
  missing.source = (dir / "none" / "%04d.ppm").string();
  missing.fps = 30.0;
  CHECK_THROWS_AS(load_frames(missing), MissingFrame);
}

TEST_CASE("ppm sequence loads and size change mid-video is rejected") {
  auto dir = temp_dir("ppmseq");
  Prng rng(11);
  write_ppm((dir / "0000.ppm").string(), random_frame(128, 72, rng));
  write_ppm((dir / "0001.ppm").string(), random_frame(128, 72, rng));
  write_ppm((dir / "0002.ppm").string(), random_frame(64, 64, rng));

  VideoManifest m;
  m.video_id = "seq";
  m.source = (dir / "%04d.ppm").string();
  m.fps = 25.0;
  CHECK_THROWS_AS(load_frames(m), DimensionMismatch);

  write_ppm((dir / "0002.ppm").string(), random_frame(128, 72, rng));
  auto frames = load_frames(m);
  CHECK(frames.size() == 3);
}

TEST_CASE("ppm round trip") {
  auto dir = temp_dir("ppm");
  Prng rng(13);
  auto f = random_frame(64, 64, rng);
  auto path = (dir / "f.ppm").string();
  write_ppm(path, f);
  auto g = read_ppm(path);
  for (int p = 0; p < 3; ++p) CHECK(f.planes[p] == g.planes[p]);
}

TEST_CASE("manifest JSONL round trip and unknown key rejection") {
  auto dir = temp_dir("manifest");
  std::vector<VideoManifest> entries(2);
  entries[0] = {"a", "a.cfrm", 30.0, Colorspace::RGB, "query"};
  entries[1] = {"b", "b/%03d.ppm", 12.5, Colorspace::YCbCr, ""};
  auto path = (dir / "corpus.jsonl").string();
  save_manifests(path, entries);
  auto back = load_manifests(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].video_id == "a");
  CHECK(back[0].role == "query");
  CHECK(back[1].fps == doctest::Approx(12.5));
  CHECK(back[1].colorspace == Colorspace::YCbCr);

  write_text_atomic(path, "{\"video_id\":\"x\",\"source\":\"s\",\"fps\":1,\"bogus\":3}\n");
  CHECK_THROWS_AS(load_manifests(path), InvalidConfig);
}

TEST_CASE("frame rotation is lossless and invertible") {
  Prng rng(17);
  auto f = random_frame(64, 96, rng);
  auto r1 = f.rotated90(1);
  CHECK(r1.width == 96);
  CHECK(r1.height == 64);
  auto back = r1.rotated90(3);
  for (int p = 0; p < 3; ++p) CHECK(back.planes[p] == f.planes[p]);
  auto r4 = f.rotated90(1).rotated90(1).rotated90(1).rotated90(1);
  for (int p = 0; p < 3; ++p) CHECK(r4.planes[p] == f.planes[p]);
}
