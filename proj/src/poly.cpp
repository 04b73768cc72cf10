#include "charloci/poly.hpp"

#include <algorithm>
#include <cctype>

#include "charloci/errors.hpp"

namespace charloci {

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(ring);
  if (!charloci::is_zero(c)) p.terms_.push_back({Exponents(ring->num_vars(), 0), c});
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  Exponents e(ring->num_vars(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), std::move(e));
}

Poly Poly::monomial(RingPtr ring, Exponents exp, const Rational& c) {
  Poly p(std::move(ring));
  if (!charloci::is_zero(c)) p.terms_.push_back({std::move(exp), c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  const PolyRing& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && charloci::is_zero(out.back().coef)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && charloci::is_zero(out.back().coef)) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && charloci::total_degree(terms_[0].exp) == 0);
}

bool Poly::is_unit() const { return terms_.size() == 1 && charloci::total_degree(terms_[0].exp) == 0; }

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, charloci::total_degree(t.exp));
  return d;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && charloci::total_degree(terms_.back().exp) == 0) return terms_.back().coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merges two sorted term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].exp, sign > 0 ? b[j].coef : Rational(-b[j].coef)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (!charloci::is_zero(s)) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].exp, sign > 0 ? b[j].coef : Rational(-b[j].coef)});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.is_zero()) return *this;
  require_same_ring(ring_, other.ring_, "polynomial addition");
  terms_ = merge_terms(*ring_, terms_, other.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (!ring_) ring_ = other.ring_;
  if (other.is_zero()) return *this;
  require_same_ring(ring_, other.ring_, "polynomial subtraction");
  terms_ = merge_terms(*ring_, terms_, other.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (charloci::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return Poly(ring);
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  if (a.size() == 1) return b.times_monomial(a.terms_[0].exp, a.terms_[0].coef);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].exp, b.terms_[0].coef);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) terms.push_back({product(s.exp, t.exp), s.coef * t.coef});
  }
  return Poly::from_terms(ring, std::move(terms));
}

Poly Poly::times_monomial(const Exponents& exp, const Rational& c) const {
  Poly r(ring_);
  if (charloci::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({product(t.exp, exp), t.coef * c});
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || is_one(leading_coef())) return *this;
  Rational inv = 1 / leading_coef();
  return *this * inv;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!same_ring(ring_, other.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != other.terms_[i].exp || terms_[i].coef != other.terms_[i].coef) return false;
  }
  return true;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != ring_->num_vars()) {
    throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong length");
  }
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] != 0) v *= charloci::pow(point[i], t.exp[i]);
    }
    sum += v;
  }
  return sum;
}

Poly Poly::in_ring(RingPtr ring) const {
  if (ring->num_vars() != ring_->num_vars()) throw Error(ErrorCode::RingMismatch, "in_ring: variable count");
  return from_terms(std::move(ring), terms_);
}

Poly Poly::embed(RingPtr target, int offset) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->num_vars(), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i) e.at(offset + i) = t.exp[i];
    terms.push_back({std::move(e), t.coef});
  }
  return from_terms(std::move(target), std::move(terms));
}

Poly pow(const Poly& p, int e) {
  Poly r = Poly::constant(p.ring(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

LaurentImage substitute_laurent(const Poly& p, const RingPtr& target, const std::vector<Rational>& coefs,
                                const std::vector<std::vector<int>>& images) {
  const int n_src = p.ring()->num_vars();
  const int n_tgt = target->num_vars();
  std::vector<std::pair<std::vector<int>, Rational>> raw;
  for (const auto& t : p.terms()) {
    std::vector<int> e(n_tgt, 0);
    Rational c = t.coef;
    for (int i = 0; i < n_src; ++i) {
      if (t.exp[i] == 0) continue;
      c *= charloci::pow(coefs[i], t.exp[i]);
      for (int j = 0; j < n_tgt; ++j) e[j] += images[i][j] * t.exp[i];
    }
    raw.emplace_back(std::move(e), c);
  }
  Exponents shift(n_tgt, 0);
  for (const auto& [e, c] : raw) {
    for (int j = 0; j < n_tgt; ++j) shift[j] = std::max(shift[j], -e[j]);
  }
  std::vector<Term> terms;
  for (auto& [e, c] : raw) {
    for (int j = 0; j < n_tgt; ++j) e[j] += shift[j];
    terms.push_back({std::move(e), c});
  }
  return {Poly::from_terms(target, std::move(terms)), shift};
}

namespace {

std::string monomial_string(const PolyRing& ring, const Exponents& e) {
  std::string s;
  for (int i = 0; i < ring.num_vars(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var_names()[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly result(ring_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly t = parse_term();
      if (sign < 0) result -= t; else result += t;
      first = false;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in '" + std::string(text_) + "'", 1, static_cast<int>(pos_) + 1);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly parse_term() {
    Rational coef = 1;
    Exponents exp(ring_->num_vars(), 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num(read_digits(), 10);
        Integer den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          den = Integer(read_digits(), 10);
          if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        coef *= q;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        int idx = ring_->var_index(name);
        if (idx < 0) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        int power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          power = std::stoi(read_digits());
        }
        exp[idx] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Poly::monomial(ring_, std::move(exp), coef);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const PolyRing& ring = *p.ring();
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coef) < 0;
    Rational mag = abs(t.coef);
    std::string mono = monomial_string(ring, t.exp);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (is_one(mag)) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      s = negative ? "-" + body : body;
    } else {
      s += negative ? "-" : "+";
      s += body;
    }
    first = false;
  }
  return s;
}

Poly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace charloci
