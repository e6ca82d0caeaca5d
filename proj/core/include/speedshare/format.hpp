#ifndef SPEEDSHARE_FORMAT_HPP
#define SPEEDSHARE_FORMAT_HPP

#include <string>

namespace speedshare {

inline constexpr int kDefaultPrecision = 9;

/// printf-style %.<digits>g; "." decimal separator regardless of locale.
std::string format_number(double value, int significant_digits = kDefaultPrecision);

/// The double closest to `value` printed with `significant_digits` digits.
double round_significant(double value, int significant_digits = kDefaultPrecision);

}  // namespace speedshare

#endif  // SPEEDSHARE_FORMAT_HPP
