#include "gwmast/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "gwmast/error.hpp"

namespace gwmast {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotProbability: return "NotProbability";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::DegreeOneMass: return "DegreeOneMass";
    case ErrorCode::NoExtinctionMass: return "NoExtinctionMass";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConstantTermNonzero: return "ConstantTermNonzero";
    case ErrorCode::EvenArgument: return "EvenArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ShapeEnumerationTooLarge: return "ShapeEnumerationTooLarge";
    case ErrorCode::PeriodicSupport: return "PeriodicSupport";
    case ErrorCode::AttemptsExhausted: return "AttemptsExhausted";
    case ErrorCode::ImpossibleLeafCount: return "ImpossibleLeafCount";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NeedOutsideLeaf: return "NeedOutsideLeaf";
    case ErrorCode::SubsetSpaceTooLarge: return "SubsetSpaceTooLarge";
    case ErrorCode::NonBinaryInput: return "NonBinaryInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num)) throw ParseError(0, "bad numerator in '" + std::string(text) + "'");
    if (!all_digits(den)) throw ParseError(slash + 1, "bad denominator in '" + std::string(text) + "'");
    BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError(slash + 1, "zero denominator");
    q = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (!(whole.empty() || all_digits(whole)) || !(frac.empty() || all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError(0, "bad decimal '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    q = Rational(digits, scale);
  } else {
    if (!all_digits(s)) throw ParseError(0, "bad rational '" + std::string(text) + "'");
    q = Rational(BigInt(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_fraction_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double to_decimal12(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return std::strtod(buf, nullptr);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace gwmast
