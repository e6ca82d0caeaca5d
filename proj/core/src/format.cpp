#include "speedshare/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <system_error>

namespace speedshare {

std::string format_number(double value, int significant_digits) {
  significant_digits = std::clamp(significant_digits, 1, 17);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                                 significant_digits);
  return std::string(buf, res.ptr);
}

double round_significant(double value, int significant_digits) {
  if (!std::isfinite(value)) return value;
  const std::string text = format_number(value, significant_digits);
  double out = value;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

}  // namespace speedshare
