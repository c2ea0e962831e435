#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qlab/errors.hpp"

namespace qlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Decimal-free fraction string: "p" or "p/q", q > 0, reduced.
inline std::string rat_to_string(const Rat& x) {
  std::string s = rat_num(x).str();
  if (rat_den(x) != 1) s += "/" + rat_den(x).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { fail(errc::parse_error, "not a fraction string: '" + s + "'"); };
  if (s.empty()) bad();
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') pos = 1;
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      for (std::size_t k = pos; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) bad();
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (den.empty() || num.empty()) bad();
    for (std::size_t k = pos; k < num.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(num[k]))) bad();
    for (char c : den)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    Int d(den);
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
    return Rat(Int(num), d);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

}  // namespace qlab
