/*
 * Copyright 2026 The instanton-quiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "iq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace iq {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(token))
      throw std::invalid_argument("not a rational token: '" + std::string(token) + "'");
    return Rational(parse_integer(token));
  }
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  // The denominator carries no sign of its own.
  if (!is_integer_token(num) || den.empty() || den[0] == '-' || den[0] == '+' ||
      !is_integer_token(den))
    throw std::invalid_argument("not a rational token: '" + std::string(token) + "'");
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace iq
