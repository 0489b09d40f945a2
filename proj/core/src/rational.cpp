#include "steintile/rational.hpp"

#include <cctype>
#include <limits>

#include "steintile/error.hpp"

namespace steintile {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ValidationError("malformed rational literal \"" + original + "\" (expected p or p/q)");
  }
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den == 0) throw ValidationError("malformed rational literal \"" + original + "\" (zero denominator)");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

Integer floor_of(const Rational& q) {
  const Integer num = numerator_of(q);
  const Integer den = denominator_of(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError("integer " + z.str() + " does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw ValidationError("expected an integer, got " + to_string(q));
  return to_int64(numerator_of(q));
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

}  // namespace steintile
