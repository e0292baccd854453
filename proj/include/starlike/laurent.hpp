#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace starlike {

using Coeff = std::int64_t;

// Laurent polynomial in A with integer coefficients; zero terms are never stored.
class Laurent {
 public:
  using Terms = std::map<int, Coeff>;

  Laurent() = default;
  explicit Laurent(Coeff constant) { add_term(0, constant); }

  static Laurent monomial(int exponent, Coeff coeff = 1) {
    Laurent p;
    p.add_term(exponent, coeff);
    return p;
  }

  // -A^2 - A^-2, the value of a d-circle.
  static Laurent circle_value() {
    Laurent p;
    p.add_term(2, -1);
    p.add_term(-2, -1);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int exponent, Coeff coeff);

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);
  Laurent operator-() const;

  Laurent pow(unsigned n) const;

  // p(A) -> p(A^factor)
  Laurent scale_exponents(int factor) const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    return r *= b;
  }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

// Two-variable Laurent polynomial. The first exponent is always the A-exponent; the second
// is the X-exponent for chi values or the H-exponent after expand_x.
class BiLaurent {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Coeff>;

  BiLaurent() = default;

  static BiLaurent monomial(int a_exp, int second_exp, Coeff coeff = 1) {
    BiLaurent p;
    p.add_term(a_exp, second_exp, coeff);
    return p;
  }
  static BiLaurent from_a(const Laurent& p, int second_exp = 0);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int a_exp, int second_exp) const {
    auto it = terms_.find({a_exp, second_exp});
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(int a_exp, int second_exp, Coeff coeff);

  BiLaurent& operator+=(const BiLaurent& rhs);
  BiLaurent& operator-=(const BiLaurent& rhs);
  BiLaurent& operator*=(const BiLaurent& rhs);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    return r *= b;
  }
  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

  std::string to_string(char second_var = 'X') const;

 private:
  Terms terms_;
};

// X -> -H^2 - H^-2; the result is a polynomial in (A, H).
BiLaurent expand_x(const BiLaurent& in_a_x);

// X -> -A^2 - A^-2.
Laurent substitute_x_by_circle(const BiLaurent& in_a_x);

}  // namespace starlike
