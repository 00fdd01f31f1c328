#pragma once

#include <stdexcept>
#include <string>

namespace cdva {

// Error families. Each family maps to a distinct CLI exit code (see tools/).
enum class ErrorFamily {
  Usage = 2,
  Io = 3,          // missing files, frame gaps, dimension mismatches
  Format = 4,      // corrupt or truncated containers, bad magic
  Config = 5,      // invalid configuration values
  Budget = 6,      // operating-point budget cannot be met
  Model = 7,       // model mismatch between descriptors / missing models
  Data = 8,        // degenerate or insufficient data for training
};

class Error : public std::runtime_error {
 public:
  Error(ErrorFamily family, std::string message)
      : std::runtime_error(std::move(message)), family_(family) {}
  ErrorFamily family() const { return family_; }

 private:
  ErrorFamily family_;
};

struct MissingFrame : Error {
  explicit MissingFrame(const std::string& m) : Error(ErrorFamily::Io, m) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error(ErrorFamily::Io, m) {}
};
struct CorruptStream : Error {
  CorruptStream(const std::string& m, double last_good_timestamp_s)
      : Error(ErrorFamily::Format, m), last_good_timestamp_s(last_good_timestamp_s) {}
  // Timestamp of the last fully decoded unit, -1 when none decoded.
  double last_good_timestamp_s = -1.0;
};
struct CorruptTensor : Error {
  explicit CorruptTensor(const std::string& m) : Error(ErrorFamily::Format, m) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& m) : Error(ErrorFamily::Format, m) {}
};
struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& m) : Error(ErrorFamily::Config, m) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(ErrorFamily::Budget, m) {}
};
struct BudgetTooSmall : Error {
  explicit BudgetTooSmall(const std::string& m) : Error(ErrorFamily::Budget, m) {}
};
struct ModelMismatch : Error {
  explicit ModelMismatch(const std::string& m) : Error(ErrorFamily::Model, m) {}
};
struct FormMismatch : Error {
  explicit FormMismatch(const std::string& m) : Error(ErrorFamily::Model, m) {}
};
struct InsufficientData : Error {
  explicit InsufficientData(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct DegenerateData : Error {
  explicit DegenerateData(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct NotPrunable : Error {
  explicit NotPrunable(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct DuplicateVideoId : Error {
  explicit DuplicateVideoId(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct ImageTooSmall : Error {
  explicit ImageTooSmall(const std::string& m) : Error(ErrorFamily::Io, m) {}
};
struct OutOfBounds : Error {
  explicit OutOfBounds(const std::string& m) : Error(ErrorFamily::Io, m) {}
};
struct EmptyRoi : Error {
  explicit EmptyRoi(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct EmptyScores : Error {
  explicit EmptyScores(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct NoRelevants : Error {
  explicit NoRelevants(const std::string& m) : Error(ErrorFamily::Data, m) {}
};
struct MalformedInterval : Error {
  explicit MalformedInterval(const std::string& m) : Error(ErrorFamily::Data, m) {}
};

}  // namespace cdva
