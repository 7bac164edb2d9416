#pragma once

// Text form of Laurent polynomials:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'i' | 'q' ['^' qexp] | var ['^' int]
//   qexp   := int | '(' ['-'] digits ['/' digits] ')'
//   int    := ['-'] digits | '(' ['-'] digits ')'
//
// Rendering is canonical: terms by descending total degree, then descending
// exponent vector, then ascending q power, real part before imaginary part.
// parse(format(p)) == p and format(parse(s)) == s for every rendered s.

#include <cctype>
#include <string>
#include <vector>

#include "bfmlift/polynomial.hpp"

namespace bfmlift {

namespace detail {

inline bool display_before(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

inline std::string format_q(const Rational& lambda) {
  if (lambda == 1) return "q";
  if (lambda.get_den() == 1) return "q^" + to_string(lambda);
  return "q^(" + to_string(lambda) + ")";
}

inline void append_term(std::string& out, const Rational& r, bool imaginary, const Rational& lambda,
                        const Exponent& e, const Ring& ring) {
  std::vector<std::string> factors;
  Rational mag = abs(r);
  bool has_other = imaginary || sgn(lambda) != 0 || std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
  if (mag != 1 || !has_other) factors.push_back(to_string(mag));
  if (imaginary) factors.emplace_back("i");
  if (sgn(lambda) != 0) factors.push_back(format_q(lambda));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    factors.push_back(e[i] == 1 ? ring.names[i] : ring.names[i] + "^" + std::to_string(e[i]));
  }
  bool negative = sgn(r) < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += "*";
    out += factors[k];
  }
}

}  // namespace detail

inline std::string format(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const LaurentPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return detail::display_before(a->first, b->first); });
  std::string out;
  for (const auto* t : order)
    for (const auto& [lambda, a] : t->second.terms()) {
      if (sgn(a.re) != 0) detail::append_term(out, a.re, false, lambda, t->first, p.ring());
      if (sgn(a.im) != 0) detail::append_term(out, a.im, true, lambda, t->first, p.ring());
    }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  LaurentPoly parse() {
    LaurentPoly result(ring_);
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      LaurentPoly t = term();
      if (sign < 0) t = -t;
      result += t;
    }
    return result;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return s_.substr(start, pos_ - start);
  }

  Rational rational_literal(bool allow_fraction) {
    std::string text = digits();
    if (allow_fraction && pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      text += "/" + digits();
    }
    return parse_rational(text);
  }

  Rational exponent(bool allow_fraction) {
    skip();
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip();
    }
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    Rational r = rational_literal(allow_fraction && paren);
    if (paren) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return sign < 0 ? Rational(-r) : r;
  }

  LaurentPoly term() {
    NovCoeff coeff(1);
    Exponent e(ring_->size(), 0);
    while (true) {
      skip();
      if (pos_ >= s_.size()) throw ParseError("expected a factor", pos_);
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= NovCoeff(rational_literal(true));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        skip();
        bool has_exp = pos_ < s_.size() && s_[pos_] == '^';
        if (has_exp) ++pos_;
        if (name == "i") {
          if (has_exp) throw ParseError("exponent on 'i' is not supported", pos_);
          coeff *= NovCoeff(GaussRational::i_unit());
        } else if (name == "q") {
          Rational lambda = has_exp ? exponent(true) : Rational(1);
          coeff *= NovCoeff::q_power(lambda);
        } else {
          auto idx = ring_->find(name);
          if (!idx) throw ParseError("unknown variable '" + name + "'", start);
          Rational k = has_exp ? exponent(false) : Rational(1);
          if (k < 0 && !ring_->laurent[*idx])
            throw ParseError("negative exponent on polynomial variable '" + name + "'", start);
          e[*idx] += static_cast<int>(k.get_num().get_si());
        }
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return LaurentPoly::monomial(ring_, e, coeff);
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_polynomial(const std::string& text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace bfmlift
