#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qenergy/error.hpp"

namespace qenergy::json_util {

using Json = nlohmann::ordered_json;

/// Parses a whole document; syntax errors carry the byte offset.
inline Json parse_document(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": syntax error at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

/// Read-only view of a JSON value that remembers where it came from, so
/// schema errors name the offending field.
class Node {
 public:
  Node(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError((path_.empty() ? std::string("document") : path_) + ": " + message);
  }

  Node at(std::string_view key) const {
    expect_object();
    const auto it = value_->find(key);
    if (it == value_->end()) throw ParseError("missing required field '" + child_path(key) + "'");
    return Node(*it, child_path(key));
  }

  std::optional<Node> find(std::string_view key) const {
    expect_object();
    const auto it = value_->find(key);
    if (it == value_->end() || it->is_null()) return std::nullopt;
    return Node(*it, child_path(key));
  }

  bool has(std::string_view key) const { return find(key).has_value(); }

  /// Rejects keys outside `allowed`.
  void only_keys(std::initializer_list<std::string_view> allowed) const {
    expect_object();
    for (const auto& [key, _] : value_->items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || key == a;
      if (!ok) throw ParseError("unknown field '" + child_path(key) + "'");
    }
  }

  void expect_object() const {
    if (!value_->is_object()) fail("expected an object");
  }

  std::size_t size() const { return value_->size(); }

  Node element(std::size_t i) const {
    return Node((*value_)[i], path_ + "[" + std::to_string(i) + "]");
  }

  void expect_array() const {
    if (!value_->is_array()) fail("expected an array");
  }

  template <typename F>
  void for_each_element(F&& f) const {
    expect_array();
    for (std::size_t i = 0; i < value_->size(); ++i) f(element(i));
  }

  template <typename F>
  void for_each_member(F&& f) const {
    expect_object();
    for (const auto& [key, v] : value_->items()) f(key, Node(v, child_path(key)));
  }

  std::uint64_t as_uint() const {
    if (!value_->is_number_integer()) fail("expected a non-negative integer");
    if (value_->is_number_unsigned()) return value_->get<std::uint64_t>();
    const auto v = value_->get<std::int64_t>();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::uint64_t>(v);
  }

  std::uint32_t as_uint32() const {
    const auto v = as_uint();
    if (v > std::numeric_limits<std::uint32_t>::max()) fail("integer too large");
    return static_cast<std::uint32_t>(v);
  }

  double as_number() const {
    if (!value_->is_number()) fail("expected a number");
    return value_->get<double>();
  }

  std::string as_string() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }

  bool as_bool() const {
    if (!value_->is_boolean()) fail("expected a boolean");
    return value_->get<bool>();
  }

 private:
  std::string child_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const Json* value_;
  std::string path_;
};

}  // namespace qenergy::json_util
