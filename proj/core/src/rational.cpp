// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/rational.hpp"

#include <cctype>

#include "parsolv/errors.hpp"

namespace parsolv {

std::string rational_to_string(const Rational& r) {
  return r.get_str();  // canonical "p" or "p/q"
}

namespace {

bool parse_integer_part(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool all_zero_digits(std::string_view s) {
  for (char c : s)
    if (c != '0') return false;
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  size_t slash = text.find('/');
  bool ok;
  if (slash == std::string_view::npos) {
    ok = parse_integer_part(text, true);
  } else {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    ok = parse_integer_part(num, true) && parse_integer_part(den, false) && !all_zero_digits(den);
  }
  if (!ok) throw InputError("bad rational literal: '" + std::string(text) + "'");
  Rational r{std::string(text)};
  r.canonicalize();
  return r;
}

}  // namespace parsolv
