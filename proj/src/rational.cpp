#include "circnet/error.hpp"
#include "circnet/scalar.hpp"

#include <cctype>
#include <cstdio>

namespace circnet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  std::string_view body = t;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(t) + "'");
  const boost::multiprecision::mpz_int p(std::string{num});
  const boost::multiprecision::mpz_int q(std::string{den});
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(t) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string ScalarTraits<double>::format(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidNetwork: return "InvalidNetwork";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SingularInterior: return "SingularInterior";
    case ErrorKind::BadResponse: return "BadResponse";
    case ErrorKind::BadResistance: return "BadResistance";
    case ErrorKind::BadCardinality: return "BadCardinality";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::ScanExhausted: return "ScanExhausted";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::BoundaryVertex: return "BoundaryVertex";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::ZeroMinor: return "ZeroMinor";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::InvalidNetwork:
    case ErrorKind::InvalidEmbedding:
    case ErrorKind::NotConnected:
    case ErrorKind::Disconnected: return 3;
    case ErrorKind::NotMinimal: return 4;
    case ErrorKind::Inconsistent: return 5;
    case ErrorKind::VerificationFailed: return 6;
    case ErrorKind::Underdetermined: return 7;
    case ErrorKind::ZeroMinor: return 8;
    case ErrorKind::BadResponse:
    case ErrorKind::BadResistance: return 10;
    case ErrorKind::BadCardinality:
    case ErrorKind::RankDeficient:
    case ErrorKind::ZeroColumn:
    case ErrorKind::ScanExhausted: return 11;
    case ErrorKind::TooLarge: return 12;
    case ErrorKind::NotOdd:
    case ErrorKind::NotStandard: return 13;
    default: return 9;
  }
}

}  // namespace circnet
