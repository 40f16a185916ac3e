#include "qiso/verify/config_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qiso::verify {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

bool bare_key(std::string_view k) {
  if (k.empty()) return false;
  for (char ch : k)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) return false;
  return true;
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && in_str) {
      ++i;
    } else if (s[i] == '"') {
      in_str = !in_str;
    } else if (s[i] == '#' && !in_str) {
      return s.substr(0, i);
    }
  }
  return s;
}

class ValueParser {
 public:
  ValueParser(std::string_view s, int line) : s_(s), line_(line) {}

  json parse_all() {
    json v = parse_value();
    skip_ws();
    if (pos_ != s_.size()) fail(line_, "trailing characters after value");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  json parse_value() {
    skip_ws();
    if (pos_ >= s_.size()) fail(line_, "missing value");
    const char ch = s_[pos_];
    if (ch == '"') return parse_string();
    if (ch == '[') return parse_array();
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    return parse_number();
  }

  json parse_string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char ch = s_[pos_++];
      if (ch == '\\') {
        if (pos_ >= s_.size()) break;
        const char esc = s_[pos_++];
        switch (esc) {
          case 'n': ch = '\n'; break;
          case 't': ch = '\t'; break;
          case '"': ch = '"'; break;
          case '\\': ch = '\\'; break;
          default: fail(line_, std::string("unsupported escape \\") + esc);
        }
      }
      out.push_back(ch);
    }
    if (pos_ >= s_.size()) fail(line_, "unterminated string");
    ++pos_;
    return out;
  }

  json parse_array() {
    ++pos_;
    json out = json::array();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(parse_value());
      skip_ws();
      if (pos_ >= s_.size()) fail(line_, "unterminated array (arrays must fit on one line)");
      if (s_[pos_] == ',') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return out;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      fail(line_, "expected ',' or ']' in array");
    }
  }

  json parse_number() {
    std::size_t end = pos_;
    while (end < s_.size() && s_[end] != ',' && s_[end] != ']' && !std::isspace(static_cast<unsigned char>(s_[end])))
      ++end;
    std::string tok;
    for (char ch : s_.substr(pos_, end - pos_))
      if (ch != '_') tok.push_back(ch);
    if (tok.empty()) fail(line_, "missing value");
    std::size_t start = (tok[0] == '+') ? 1 : 0;
    const char* first = tok.data() + start;
    const char* last = tok.data() + tok.size();
    const bool integral = tok.find_first_of(".eE") == std::string::npos && tok != "inf" && tok != "nan";
    if (integral) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec == std::errc() && p == last) {
        pos_ = end;
        return v;
      }
    } else {
      double v = 0.0;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec == std::errc() && p == last) {
        pos_ = end;
        return v;
      }
    }
    fail(line_, "cannot parse value '" + tok + "'");
  }

  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

json parse_toml(std::string_view text) {
  json root = json::object();
  json* table = &root;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3) fail(line, "malformed table header");
      const auto name = std::string(trim(s.substr(1, s.size() - 2)));
      if (!bare_key(name)) fail(line, "unsupported table name '" + name + "'");
      if (root.contains(name)) fail(line, "duplicate table '" + name + "'");
      root[name] = json::object();
      table = &root[name];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) fail(line, "expected key = value");
    const auto key = std::string(trim(s.substr(0, eq)));
    if (!bare_key(key)) fail(line, "unsupported key '" + key + "'");
    if (table->contains(key)) fail(line, "duplicate key '" + key + "'");
    (*table)[key] = ValueParser(s.substr(eq + 1), line).parse_all();
  }
  return root;
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") {
    try {
      return json::parse(buf.str());
    } catch (const json::parse_error& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  }
  return parse_toml(buf.str());
}

}  // namespace qiso::verify
