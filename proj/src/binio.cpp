#include "cdva/binio.hpp"

#include <cstdio>
#include <filesystem>

namespace cdva {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw Error(ErrorFamily::Io, "cannot open " + path);
  std::fseek(f, 0, SEEK_END);
  long size = std::ftell(f);
  std::fseek(f, 0, SEEK_SET);
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(size < 0 ? 0 : size));
  if (!buf.empty() && std::fread(buf.data(), 1, buf.size(), f) != buf.size()) {
    std::fclose(f);
    throw Error(ErrorFamily::Io, "short read on " + path);
  }
  std::fclose(f);
  return buf;
}

// All output files go through a temp + rename so partial writes never land.
void write_file_atomic(const std::string& path, const void* data, std::size_t size) {
  std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw Error(ErrorFamily::Io, "cannot create " + tmp);
  if (size > 0 && std::fwrite(data, 1, size, f) != size) {
    std::fclose(f);
    std::remove(tmp.c_str());
    throw Error(ErrorFamily::Io, "short write on " + tmp);
  }
  std::fclose(f);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error(ErrorFamily::Io, "rename failed for " + path + ": " + ec.message());
  }
}

void write_text_atomic(const std::string& path, const std::string& text) {
  write_file_atomic(path, text.data(), text.size());
}

}  // namespace cdva
