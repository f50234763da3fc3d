#include "rimforge/report.hpp"

#include <sstream>

namespace rimforge {

void Report::put(std::string key, std::string value) {
  items_.emplace_back(std::move(key), Value(std::move(value)));
}
void Report::put(std::string key, const char* value) {
  items_.emplace_back(std::move(key), Value(std::string(value)));
}
void Report::put(std::string key, Int value) {
  items_.emplace_back(std::move(key), Value(std::move(value)));
}
void Report::put(std::string key, long value) {
  items_.emplace_back(std::move(key), Value(Int(value)));
}
void Report::put(std::string key, bool value) {
  items_.emplace_back(std::move(key), Value(value));
}
void Report::put(std::string key, std::vector<std::string> value) {
  items_.emplace_back(std::move(key), Value(std::move(value)));
}

namespace {

std::string status_name(Report::Status s) {
  switch (s) {
    case Report::Status::ok: return "OK";
    case Report::Status::indeterminate: return "INDETERMINATE";
    case Report::Status::err: return "ERROR";
  }
  return "?";
}

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  return os.str();
}

struct TextVisitor {
  std::ostringstream& os;
  void operator()(const std::string& s) { os << s; }
  void operator()(const Int& v) { os << v.str(); }
  void operator()(bool b) { os << (b ? "true" : "false"); }
  void operator()(const std::vector<std::string>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "; " : "") << v[i];
  }
};

struct JsonVisitor {
  std::ostringstream& os;
  void operator()(const std::string& s) { os << '"' << json_escape(s) << '"'; }
  void operator()(const Int& v) { os << v.str(); }
  void operator()(bool b) { os << (b ? "true" : "false"); }
  void operator()(const std::vector<std::string>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << '"' << json_escape(v[i]) << '"';
    }
    os << ']';
  }
};

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [k, v] : items_) {
    os << k << ": ";
    std::visit(TextVisitor{os}, v);
    os << "\n";
  }
  os << "status: " << status_name(status) << "\n";
  return os.str();
}

std::string Report::render_json() const {
  std::ostringstream os;
  os << "{\"command\":\"" << json_escape(command) << "\"";
  for (const auto& [k, v] : items_) {
    os << ",\"" << json_escape(k) << "\":";
    std::visit(JsonVisitor{os}, v);
  }
  os << ",\"status\":\"" << status_name(status) << "\"}";
  return os.str();
}

int Report::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::indeterminate: return 2;
    case Status::err: return 1;
  }
  return 1;
}

}  // namespace rimforge
