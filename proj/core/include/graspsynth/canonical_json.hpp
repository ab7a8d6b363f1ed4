#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "graspsynth/types.hpp"

namespace graspsynth {

/// Minimal JSON writer with a pinned float format (%.9g) and caller-defined
/// key order, so identical data always serializes to identical bytes.
/// Reading is done with a full JSON parser elsewhere; this class only
/// writes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& value(const Vec3& v);

  std::string str() const { return out_.str(); }

  /// Canonical number rendering used across every exported file.
  static std::string format_double(double v);

 private:
  void separator();

  std::ostringstream out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

}  // namespace graspsynth
