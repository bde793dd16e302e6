#include "afm/cli/golden.hpp"

#include "afm/errors.hpp"

#include <string>

namespace afm::cli {

namespace detail {
extern const char* const golden_text;
}

const nlohmann::json& golden() {
  static const nlohmann::json data = [] {
    auto j = nlohmann::json::parse(detail::golden_text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("version")) {
      throw DomainError("embedded golden data is malformed");
    }
    return j;
  }();
  return data;
}

int golden_version() { return golden().at("version").get<int>(); }

double printed_value(const nlohmann::json& entry) {
  if (entry.is_number()) {
    return entry.get<double>();
  }
  return std::stod(entry.get<std::string>());
}

double last_digit_unit(std::string_view printed) {
  const auto dot = printed.find('.');
  if (dot == std::string_view::npos) {
    return 1.0;
  }
  double unit = 1.0;
  for (std::size_t i = dot + 1; i < printed.size(); ++i) {
    unit /= 10.0;
  }
  return unit;
}

} // namespace afm::cli
