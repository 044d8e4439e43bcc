#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bubblelab {

/// Small JSON document builder used for every emitted report. Object keys
/// keep insertion order and doubles are printed with a fixed 17-significant-
/// digit format, so identical inputs always serialize to identical bytes.
/// (The shortest-round-trip printing of general-purpose JSON libraries does
/// not give a fixed digit count, hence this writer.)
class JsonValue {
 public:
  JsonValue() = default;

  static JsonValue object();
  static JsonValue array();
  static JsonValue str(std::string s);
  static JsonValue num(double v);
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue null();

  JsonValue& set(const std::string& key, JsonValue v);  // object only
  JsonValue& push(JsonValue v);                         // array only

  bool is_object() const { return kind_ == Kind::Object; }
  bool is_array() const { return kind_ == Kind::Array; }

  /// Serialize; indent < 0 gives a single line.
  std::string dump(int indent = -1) const;

  static std::string format_double(double v);

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };
  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double dbl_ = 0.0;
  std::string str_;
  std::vector<JsonValue> arr_;
  std::vector<std::pair<std::string, JsonValue>> obj_;

  void write(std::string& out, int indent, int depth) const;
};

}  // namespace bubblelab
