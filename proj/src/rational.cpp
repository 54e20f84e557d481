#include "syncwalk/rational.hpp"

#include <algorithm>
#include <cctype>

#include "syncwalk/error.hpp"

namespace syncwalk {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (!all_digits(digits)) {
    throw Error(ErrorCode::ParseError,
                "not a rational number: \"" + std::string(whole) + "\"");
  }
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) {
    throw Error(ErrorCode::ParseError, "empty rational literal");
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = parse_integer(s.substr(0, slash), text);
    den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::ParseError,
                  "zero denominator in \"" + std::string(text) + "\"");
    }
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw Error(ErrorCode::ParseError,
                  "not a rational number: \"" + std::string(text) + "\"");
    }
    num = whole.empty() ? mpz_class(0) : parse_integer(whole, text);
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::ParseError,
                    "not a rational number: \"" + std::string(text) + "\"");
      }
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    num = parse_integer(s, text);
  }

  Rational q(num, den);
  q.canonicalize();
  if (negative) {
    q = -q;
  }
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace syncwalk
