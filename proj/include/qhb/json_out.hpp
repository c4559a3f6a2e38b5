#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Tiny JSON emitter with insertion-ordered objects and numbers printed with
// 17 significant digits; output is byte-stable across runs.

namespace qhb {

class JsonValue {
public:
  JsonValue() : value_(nullptr) {}
  JsonValue(std::nullptr_t) : value_(nullptr) {}
  JsonValue(bool b) : value_(b) {}
  JsonValue(int v) : value_(static_cast<long long>(v)) {}
  JsonValue(long long v) : value_(v) {}
  JsonValue(unsigned long long v) : value_(static_cast<long long>(v)) {}
  JsonValue(double v) : value_(v) {}
  JsonValue(const char* s) : value_(std::string(s)) {}
  JsonValue(std::string s) : value_(std::move(s)) {}

  static JsonValue array() {
    JsonValue v;
    v.value_ = Array{};
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.value_ = Object{};
    return v;
  }

  JsonValue& push_back(JsonValue v) {
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
  }

  JsonValue& set(const std::string& key, JsonValue v) {
    std::get<Object>(value_).emplace_back(key, std::move(v));
    return *this;
  }

  std::string dump(int indent = -1) const {
    std::string out;
    write(out, indent, 0);
    if (indent >= 0) out.push_back('\n');
    return out;
  }

private:
  struct Array;
  struct Object;
  using Storage =
      std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object>;

  struct Array : std::vector<JsonValue> {};
  struct Object : std::vector<std::pair<std::string, JsonValue>> {};

  static std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  static void escape(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out.push_back(c);
          }
      }
    }
    out.push_back('"');
  }

  void write(std::string& out, int indent, int level) const {
    const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent) *
                                                          (static_cast<std::size_t>(level) + 1),
                                                      ' ')
                                        : std::string();
    const std::string close_pad =
        indent >= 0 ? std::string(static_cast<std::size_t>(indent) *
                                      static_cast<std::size_t>(level),
                                  ' ')
                    : std::string();
    const char* nl = indent >= 0 ? "\n" : "";
    if (std::holds_alternative<std::nullptr_t>(value_)) {
      out += "null";
    } else if (std::holds_alternative<bool>(value_)) {
      out += std::get<bool>(value_) ? "true" : "false";
    } else if (std::holds_alternative<long long>(value_)) {
      out += std::to_string(std::get<long long>(value_));
    } else if (std::holds_alternative<double>(value_)) {
      out += format_double(std::get<double>(value_));
    } else if (std::holds_alternative<std::string>(value_)) {
      escape(out, std::get<std::string>(value_));
    } else if (std::holds_alternative<Array>(value_)) {
      const auto& arr = std::get<Array>(value_);
      if (arr.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      for (std::size_t i = 0; i < arr.size(); ++i) {
        out += nl;
        out += pad;
        arr[i].write(out, indent, level + 1);
        if (i + 1 < arr.size()) out += ",";
        if (indent < 0 && i + 1 < arr.size()) out += " ";
      }
      out += nl;
      out += close_pad;
      out += "]";
    } else {
      const auto& obj = std::get<Object>(value_);
      if (obj.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      for (std::size_t i = 0; i < obj.size(); ++i) {
        out += nl;
        out += pad;
        escape(out, obj[i].first);
        out += ": ";
        obj[i].second.write(out, indent, level + 1);
        if (i + 1 < obj.size()) out += ",";
        if (indent < 0 && i + 1 < obj.size()) out += " ";
      }
      out += nl;
      out += close_pad;
      out += "}";
    }
  }

  Storage value_;
};

}  // namespace qhb
