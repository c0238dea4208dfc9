#include "gca/scalar.hpp"

#include <cctype>
#include <ostream>

#include "gca/errors.hpp"

namespace gca {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw MathError("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace gca
