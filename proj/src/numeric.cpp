#include "grpcalc/numeric.hpp"

#include <cctype>

#include "grpcalc/errors.hpp"

namespace grpcalc {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw InputError("not a rational number: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  BigInt scaled_num = abs(q.get_num()) * scale * 2 + q.get_den();
  BigInt scaled = scaled_num / (q.get_den() * 2);
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (q < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

Order Order::finite(std::uint64_t n) {
  if (n == 0) throw InputError("element order must be positive");
  return Order(n);
}

Rational Order::reciprocal() const {
  if (!is_finite()) return Rational(0);
  return Rational(1, static_cast<unsigned long>(value_));
}

std::string Order::str() const { return is_finite() ? std::to_string(value_) : "inf"; }

Order Order::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinite();
  if (text.empty() || text.size() > 18) throw InputError("invalid element order '" + text + "'");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("invalid element order '" + text + "'");
  return finite(std::stoull(text));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace grpcalc
