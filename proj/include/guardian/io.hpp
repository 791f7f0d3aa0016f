#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "guardian/matrix.hpp"
#include "guardian/representations.hpp"
#include "guardian/sweep.hpp"

namespace guardian::io {

/// Unreadable file or malformed content.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix JSON: {"rows": n, "cols": m, "data": [[row0...], [row1...], ...]}.
nlohmann::ordered_json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::ordered_json& j);

/// One row per line, comma separated, no header.
Matrix matrix_from_csv(std::istream& in);

/// Reads a matrix from a file (or stdin for "-"); CSV is chosen by a ".csv" suffix.
Matrix read_matrix(const std::string& path);

// Family JSON: {"n": n, "base": <matrix>, "dir1": <matrix>, "dir2": <matrix|null>}.
nlohmann::ordered_json to_json(const ParamFamily& family);
ParamFamily family_from_json(const nlohmann::ordered_json& j);
ParamFamily read_family(const std::string& path);

/// {"kind", "g_sign", "g_logmag", "det_a_sign", "f_sign", "verdict", "oracle"}; g_logmag is null when g is zero.
nlohmann::ordered_json to_json(const GuardianReport& report);

nlohmann::ordered_json to_json(const Crossing& c);
nlohmann::ordered_json to_json(const SweepResult& result);

nlohmann::ordered_json read_json_file(const std::string& path);

/// Compact serialization with round-trip exact doubles.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace guardian::io
