#pragma once

#include <cmath>
#include <optional>
#include <string_view>

namespace logdecomp {

enum class LogBase { two, e, ten };

inline double log_in(LogBase base, double x) {
  switch (base) {
    case LogBase::two:
      return std::log2(x);
    case LogBase::ten:
      return std::log10(x);
    case LogBase::e:
      break;
  }
  return std::log(x);
}

/// Converts a value measured in nats into `base` units.
inline double from_nats(LogBase base, double nats) {
  switch (base) {
    case LogBase::two:
      return nats / std::log(2.0);
    case LogBase::ten:
      return nats / std::log(10.0);
    case LogBase::e:
      break;
  }
  return nats;
}

inline std::string_view to_string(LogBase base) {
  switch (base) {
    case LogBase::two:
      return "2";
    case LogBase::ten:
      return "10";
    case LogBase::e:
      break;
  }
  return "e";
}

inline std::string_view unit_name(LogBase base) {
  switch (base) {
    case LogBase::two:
      return "bits";
    case LogBase::ten:
      return "hartleys";
    case LogBase::e:
      break;
  }
  return "nats";
}

inline std::optional<LogBase> parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  if (text == "10") return LogBase::ten;
  return std::nullopt;
}

}  // namespace logdecomp
