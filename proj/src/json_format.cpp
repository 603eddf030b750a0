#include "json_format.hpp"

#include <algorithm>

namespace snakeword::detail {

namespace {

bool is_flat(const nlohmann::ordered_json& j) {
  return std::none_of(j.begin(), j.end(), [](const auto& v) { return v.is_structured(); });
}

void write(const nlohmann::ordered_json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_array()) {
    if (j.empty() || is_flat(j)) {
      out += "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) out += ", ";
        out += j[k].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += inner;
      write(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += inner + nlohmann::ordered_json(it.key()).dump() + ": ";
      write(it.value(), indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j) {
  std::string out;
  write(j, 0, out);
  out += "\n";
  return out;
}

}  // namespace snakeword::detail
