#include "shiftmax/sequence.hpp"

#include <algorithm>

namespace shiftmax {

namespace {

constexpr long kMaxMaterializedBits = 1L << 24;

long doubly_exponent(long e0, unsigned n) {
  if (n > 40) throw Error("doubly-exponential index too large");
  return e0 + (1L << (n + 2)) - 4;
}

Rational checked_pow2(long e) {
  if (e > kMaxMaterializedBits || e < -kMaxMaterializedBits)
    throw Error("magnitude 2^" + std::to_string(e) + " too extreme to materialize");
  return pow2(e);
}

}  // namespace

SequenceSpec SequenceSpec::doubly_exponential(long e0) {
  SequenceSpec s;
  s.kind_ = Kind::DoublyExponential;
  s.e0_ = e0;
  return s;
}

SequenceSpec SequenceSpec::geometric(const Rational& theta) {
  if (theta <= 0 || theta >= 1) throw Error("geometric ratio must lie in (0, 1)");
  SequenceSpec s;
  s.kind_ = Kind::Geometric;
  s.theta_ = theta;
  return s;
}

SequenceSpec SequenceSpec::explicit_log2(std::vector<long> log2_values) {
  if (log2_values.size() < 2) throw Error("explicit log2 table needs at least two entries");
  for (std::size_t i = 1; i < log2_values.size(); ++i)
    if (log2_values[i] >= log2_values[i - 1]) throw Error("log2 table is not strictly decreasing");
  SequenceSpec s;
  s.kind_ = Kind::ExplicitLog2Table;
  s.table_ = std::move(log2_values);
  return s;
}

std::optional<long> SequenceSpec::log2_term(unsigned n) const {
  switch (kind_) {
    case Kind::DoublyExponential:
      return -doubly_exponent(e0_, n);
    case Kind::ExplicitLog2Table: {
      if (n < table_.size()) return table_[n];
      long last = table_.back();
      long step = last - table_[table_.size() - 2];
      return last + static_cast<long>(n - (table_.size() - 1)) * step;
    }
    case Kind::Geometric: {
      auto t = exact_log2(theta_);
      if (!t) return std::nullopt;
      return *t * static_cast<long>(n);
    }
  }
  return std::nullopt;
}

Rational SequenceSpec::term(unsigned n) const {
  if (auto e = log2_term(n)) return checked_pow2(*e);
  Rational r(1);
  mpz_pow_ui(r.get_num_mpz_t(), theta_.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), theta_.get_den_mpz_t(), n);
  return r;
}

std::optional<long> SequenceSpec::log2_ratio(unsigned n) const {
  switch (kind_) {
    case Kind::DoublyExponential:
      if (n > 40) throw Error("doubly-exponential index too large");
      return -(1L << (n + 2));
    case Kind::ExplicitLog2Table:
      return *log2_term(n + 1) - *log2_term(n);
    case Kind::Geometric:
      return exact_log2(theta_);
  }
  return std::nullopt;
}

Rational SequenceSpec::ratio(unsigned n) const {
  if (auto e = log2_ratio(n)) return checked_pow2(*e);
  return theta_;
}

Rational SequenceSpec::ratio_sup_from(unsigned k) const {
  switch (kind_) {
    case Kind::DoublyExponential:
      // Steps 2^{-2^{j+2}} shrink with j, so the first one dominates. Deep
      // indices are clamped to a weaker (larger) bound that stays cheap.
      return pow2(-(1L << std::min(k + 2, 20U)));
    case Kind::Geometric:
      return theta_;
    case Kind::ExplicitLog2Table: {
      long worst = table_.back() - table_[table_.size() - 2];
      for (std::size_t j = k; j + 1 < table_.size(); ++j) worst = std::max(worst, table_[j + 1] - table_[j]);
      return pow2(worst);
    }
  }
  return Rational(1);
}

std::string SequenceSpec::describe() const {
  switch (kind_) {
    case Kind::DoublyExponential:
      return "doubly-exponential(e0=" + std::to_string(e0_) + ")";
    case Kind::Geometric:
      return "geometric(theta=" + to_string(theta_) + ")";
    case Kind::ExplicitLog2Table: {
      std::string s = "explicit-log2-table(";
      for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + std::to_string(table_[i]);
      return s + ")";
    }
  }
  return "?";
}

}  // namespace shiftmax
