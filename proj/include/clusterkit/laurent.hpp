// Exact multivariate Laurent polynomials over arbitrary-precision integers.
//
// Terms live in a map ordered lexicographically by exponent vector; no stored
// coefficient is zero. The ordering doubles as the canonical total order used
// for seed deduplication, and the text rendering follows it.
#pragma once

#include "clusterkit/bigint.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusterkit {

class LaurentPolynomial {
 public:
  using Exponents = std::vector<std::int64_t>;
  using TermMap = std::map<Exponents, BigInt>;

  LaurentPolynomial() = default;  // zero in zero variables

  static LaurentPolynomial zero(int nvars) { return LaurentPolynomial(checked(nvars)); }

  static LaurentPolynomial constant(int nvars, BigInt value) {
    LaurentPolynomial p(checked(nvars));
    if (value != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(value));
    return p;
  }

  static LaurentPolynomial one(int nvars) { return constant(nvars, 1); }

  static LaurentPolynomial variable(int nvars, int index) {
    if (index < 0 || index >= checked(nvars))
      throw std::out_of_range("LaurentPolynomial::variable: index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, std::move(e), 1);
  }

  static LaurentPolynomial monomial(int nvars, Exponents exps, BigInt coeff) {
    LaurentPolynomial p(checked(nvars));
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("LaurentPolynomial::monomial: exponent size mismatch");
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_same_ring(b);
    LaurentPolynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  /// Nonnegative integer power by repeated multiplication.
  LaurentPolynomial pow(std::int64_t exponent) const {
    if (exponent < 0)
      throw std::invalid_argument("LaurentPolynomial::pow: negative exponent");
    LaurentPolynomial out = one(nvars_);
    for (std::int64_t i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical total order: by variable count, then lexicographically over the
  /// ordered term list comparing (exponent vector, coefficient) pairs.
  static int compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
      if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
  }

  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return compare(a, b) < 0;
  }

  /// Terms in map order, e.g. "x1^-1 + x1^-1*x2" or "1 - 2*x1^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        if (c < 0) out << '-';
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      const BigInt mag = abs(c);
      std::string factors;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!factors.empty()) factors += '*';
        factors += 'x' + std::to_string(i + 1);
        if (e[i] != 1) factors += '^' + std::to_string(e[i]);
      }
      if (factors.empty()) {
        out << mag.str();
      } else {
        if (mag != 1) out << mag.str() << '*';
        out << factors;
      }
    }
    return out.str();
  }

 private:
  explicit LaurentPolynomial(int nvars) : nvars_(nvars) {}

  static int checked(int nvars) {
    if (nvars < 0) throw std::invalid_argument("LaurentPolynomial: negative variable count");
    return nvars;
  }

  void check_same_ring(const LaurentPolynomial& rhs) const {
    if (nvars_ != rhs.nvars_)
      throw std::invalid_argument("LaurentPolynomial: variable count mismatch");
  }

  void add_term(const Exponents& e, BigInt c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int nvars_ = 0;
  TermMap terms_;

  friend std::optional<LaurentPolynomial> div_exact(const LaurentPolynomial&,
                                                    const LaurentPolynomial&);
};

/// True iff every stored coefficient is positive (the zero polynomial passes).
inline bool is_nonnegative(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (c < 0) return false;
  return true;
}

/// Exact division in the Laurent ring: returns r with p = q*r when r exists,
/// nullopt otherwise. Both operands are shifted into the polynomial subring
/// (componentwise-minimal exponents cleared) and divided by long division on
/// lexicographic leading terms; the quotient absorbs the shift difference.
inline std::optional<LaurentPolynomial> div_exact(const LaurentPolynomial& p,
                                                  const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("div_exact: division by zero");
  if (p.nvars() != q.nvars())
    throw std::invalid_argument("div_exact: variable count mismatch");
  const int n = p.nvars();
  if (p.is_zero()) return LaurentPolynomial::zero(n);

  const auto min_exponents = [n](const LaurentPolynomial& v) {
    LaurentPolynomial::Exponents lo = v.terms().begin()->first;
    for (const auto& [e, c] : v.terms())
      for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], e[i]);
    return lo;
  };
  const auto alpha = min_exponents(p);
  const auto beta = min_exponents(q);

  LaurentPolynomial::TermMap rem;
  for (const auto& [e, c] : p.terms()) {
    auto shifted = e;
    for (int i = 0; i < n; ++i) shifted[i] -= alpha[i];
    rem.emplace(std::move(shifted), c);
  }
  LaurentPolynomial::TermMap div;
  for (const auto& [e, c] : q.terms()) {
    auto shifted = e;
    for (int i = 0; i < n; ++i) shifted[i] -= beta[i];
    div.emplace(std::move(shifted), c);
  }

  const auto& dlead = *div.rbegin();
  LaurentPolynomial quotient = LaurentPolynomial::zero(n);
  LaurentPolynomial::Exponents shift(n);
  for (int i = 0; i < n; ++i) shift[i] = alpha[i] - beta[i];

  while (!rem.empty()) {
    const auto lead = std::prev(rem.end());
    LaurentPolynomial::Exponents step(n);
    for (int i = 0; i < n; ++i) {
      step[i] = lead->first[i] - dlead.first[i];
      if (step[i] < 0) return std::nullopt;  // leading monomial not divisible
    }
    if (lead->second % dlead.second != 0) return std::nullopt;
    const BigInt coeff = lead->second / dlead.second;

    auto qe = step;
    for (int i = 0; i < n; ++i) qe[i] += shift[i];
    quotient.add_term(qe, coeff);

    for (const auto& [e, c] : div) {
      LaurentPolynomial::Exponents target(n);
      for (int i = 0; i < n; ++i) target[i] = e[i] + step[i];
      auto it = rem.try_emplace(std::move(target), BigInt(0)).first;
      it->second -= coeff * c;
      if (it->second == 0) rem.erase(it);
    }
  }
  return quotient;
}

/// Ring substitution x_i -> images[i]. Negative powers are handled by
/// clearing denominators: the shifted-polynomial substitution is divided
/// exactly by the substituted monomial denominator, and nullopt signals that
/// the value leaves the Laurent ring. Zero images are rejected.
inline std::optional<LaurentPolynomial> substitute(const LaurentPolynomial& p,
                                                   std::span<const LaurentPolynomial> images) {
  const int n = p.nvars();
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("substitute: image count mismatch");
  int target = 0;
  for (const auto& img : images) {
    if (img.is_zero()) throw std::invalid_argument("substitute: zero image");
    target = img.nvars();
  }
  for (const auto& img : images)
    if (img.nvars() != target)
      throw std::invalid_argument("substitute: images live in different rings");
  if (p.is_zero()) return LaurentPolynomial::zero(target);

  // Most negative exponent per variable; shifting by it makes p polynomial.
  std::vector<std::int64_t> lift(n, 0);
  std::vector<std::int64_t> top(n, 0);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < n; ++i) lift[i] = std::max(lift[i], -e[i]);
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < n; ++i) top[i] = std::max(top[i], e[i] + lift[i]);

  std::vector<std::vector<LaurentPolynomial>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(LaurentPolynomial::one(target));
    for (std::int64_t e = 1; e <= top[i]; ++e)
      powers[i].push_back(powers[i].back() * images[i]);
  }

  LaurentPolynomial numerator = LaurentPolynomial::zero(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(target, c);
    for (int i = 0; i < n; ++i) {
      const std::int64_t power = e[i] + lift[i];
      if (power > 0) term = term * powers[i][static_cast<std::size_t>(power)];
    }
    numerator += term;
  }

  LaurentPolynomial denominator = LaurentPolynomial::one(target);
  for (int i = 0; i < n; ++i)
    if (lift[i] > 0) denominator = denominator * images[i].pow(lift[i]);
  return div_exact(numerator, denominator);
}

/// Parses the rendering produced by LaurentPolynomial::str(): '+'/'-'
/// separated terms, each a '*'-joined product of an optional integer and
/// factors "xN" or "xN^E". Throws std::invalid_argument on malformed input.
inline LaurentPolynomial parse_laurent(std::string_view text, int nvars) {
  LaurentPolynomial result = LaurentPolynomial::zero(nvars);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("laurent parse error at position " + std::to_string(pos) +
                                ": " + what);
  };
  const auto parse_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';

  while (true) {
    skip_ws();
    BigInt coeff = 1;
    LaurentPolynomial::Exponents exps(nvars, 0);
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= BigInt(parse_uint());
        any_factor = true;
      } else if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        const int index = std::stoi(parse_uint());
        if (index < 1 || index > nvars) fail("variable index out of range");
        std::int64_t exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          bool eneg = false;
          if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            eneg = text[pos++] == '-';
          exponent = std::stoll(parse_uint());
          if (eneg) exponent = -exponent;
        }
        exps[index - 1] += exponent;
        any_factor = true;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) fail("empty term");
    if (negative) coeff = -coeff;
    result += LaurentPolynomial::monomial(nvars, std::move(exps), std::move(coeff));

    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos++] == '-';
    } else {
      fail("expected '+' or '-'");
    }
  }
  return result;
}

}  // namespace clusterkit
