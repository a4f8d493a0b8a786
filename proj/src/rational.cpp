#include "dutchdraw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dutchdraw {

namespace {

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("rational: bad fraction '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpz_class num;
    if (num.set_str(text, 10) != 0)
      throw std::invalid_argument("rational: bad integer '" + text + "'");
    return Rational(num);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("rational: bad decimal '" + text + "'");
  mpz_class num;
  if (num.set_str(digits, 10) != 0)
    throw std::invalid_argument("rational: bad decimal '" + text + "'");
  return Rational(num, pow10(text.size() - dot - 1));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("decimal: sig_digits < 1");
  if (is_zero()) return "0";
  mpz_class a = abs(numerator());
  const mpz_class& b = denominator();

  // exponent e of the leading digit: largest e with 10^e <= a/b;
  // digit-count estimate, then fixed up by direct comparison
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto cmp_pow = [&](long exp) {
    // sign of a/b - 10^exp
    if (exp >= 0) return cmp(a, b * pow10(exp));
    return cmp(a * pow10(-exp), b);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;

  // scale to sig_digits digits and round half away from zero
  long shift = sig_digits - 1 - e;
  mpz_class num = a, den = b;
  if (shift >= 0) num *= pow10(shift); else den *= pow10(-shift);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > sig_digits) {  // 999.. rounded up
    digits.pop_back();
    ++e;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = sign() < 0 ? "-" : "";
  if (e >= 0 && e < sig_digits + 3) {
    if (static_cast<long>(digits.size()) <= e + 1) {
      out += digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out += digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else if (e < 0 && e >= -5) {
    out += "0." + std::string(-e - 1, '0') + digits;
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return out;
}

}  // namespace dutchdraw
