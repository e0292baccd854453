#include "starlike/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace starlike {

void Laurent::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  Laurent out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent result(1);
  Laurent base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

Laurent Laurent::scale_exponents(int factor) const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.add_term(e * factor, c);
  return out;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || e == 0) os << mag;
    if (e != 0) os << "A" << (e == 1 ? "" : "^" + std::to_string(e));
  }
  return os.str();
}

BiLaurent BiLaurent::from_a(const Laurent& p, int second_exp) {
  BiLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, second_exp, c);
  return out;
}

void BiLaurent::add_term(int a_exp, int second_exp, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({a_exp, second_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& rhs) {
  BiLaurent out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : rhs.terms_)
      out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  *this = std::move(out);
  return *this;
}

std::string BiLaurent::to_string(char second_var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [key, c] = *it;
    auto [a, x] = key;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || (a == 0 && x == 0)) os << mag;
    if (a != 0) os << "A" << (a == 1 ? "" : "^" + std::to_string(a));
    if (x != 0) os << second_var << (x == 1 ? "" : "^" + std::to_string(x));
  }
  return os.str();
}

BiLaurent expand_x(const BiLaurent& in_a_x) {
  // (-H^2 - H^-2)^n, cached by n
  std::map<int, BiLaurent> powers;
  const BiLaurent x_value = BiLaurent::monomial(0, 2, -1) + BiLaurent::monomial(0, -2, -1);
  auto power = [&](int n) -> const BiLaurent& {
    auto it = powers.find(n);
    if (it != powers.end()) return it->second;
    BiLaurent r = BiLaurent::monomial(0, 0);
    for (int i = 0; i < n; ++i) r *= x_value;
    return powers.emplace(n, std::move(r)).first->second;
  };
  BiLaurent out;
  for (const auto& [key, c] : in_a_x.terms()) {
    if (key.second < 0) throw std::invalid_argument("expand_x: negative X exponent");
    for (const auto& [k2, c2] : power(key.second).terms())
      out.add_term(key.first + k2.first, k2.second, c * c2);
  }
  return out;
}

Laurent substitute_x_by_circle(const BiLaurent& in_a_x) {
  std::map<int, Laurent> powers;
  Laurent out;
  for (const auto& [key, c] : in_a_x.terms()) {
    if (key.second < 0) throw std::invalid_argument("substitute_x_by_circle: negative X exponent");
    auto it = powers.find(key.second);
    if (it == powers.end())
      it = powers.emplace(key.second, Laurent::circle_value().pow(static_cast<unsigned>(key.second)))
               .first;
    out += Laurent::monomial(key.first, c) * it->second;
  }
  return out;
}

}  // namespace starlike
