#include "shiftmax/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace shiftmax {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw Error("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

namespace {

std::optional<long> exact_log2_int(const mpz_class& z) {
  if (z <= 0) return std::nullopt;
  if (mpz_popcount(z.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

double log2_mpz(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace

std::optional<long> exact_log2(const Rational& r) {
  if (r <= 0) return std::nullopt;
  auto num = exact_log2_int(r.get_num());
  auto den = exact_log2_int(r.get_den());
  if (!num || !den) return std::nullopt;
  return *num - *den;
}

double log2_approx(const Rational& r) {
  if (r == 0) return -std::numeric_limits<double>::infinity();
  if (r < 0) throw Error("log2 of a negative value");
  return log2_mpz(r.get_num()) - log2_mpz(r.get_den());
}

std::string log2_string(const Rational& r) {
  if (r == 0) return "-inf";
  if (auto e = exact_log2(r)) return std::to_string(*e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", log2_approx(r));
  return buf;
}

Rational pow2_ceil(const Rational& r) {
  if (r <= 0) throw Error("pow2_ceil of a nonpositive value");
  long guess = static_cast<long>(std::ceil(log2_approx(r)));
  // The float estimate can be off by one near exact powers; fix up exactly.
  while (pow2(guess) < r) ++guess;
  while (pow2(guess - 1) >= r) --guess;
  return pow2(guess);
}

}  // namespace shiftmax
