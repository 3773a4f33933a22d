#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "fanocert/error.hpp"
#include "fanocert/exact/field.hpp"

namespace fanocert::exact {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order by declared variable order.
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(b, a); }
};

using Variables = std::shared_ptr<const std::vector<std::string>>;

inline Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

template <Field K>
class Polynomial {
 public:
  using Terms = std::map<Exponents, K, GrlexGreater>;

  Polynomial() : vars_(make_variables({})) {}
  explicit Polynomial(Variables vars) : vars_(std::move(vars)) {}

  static Polynomial constant(Variables vars, const K& c) {
    Polynomial p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static Polynomial variable(Variables vars, std::size_t index) {
    Polynomial p(std::move(vars));
    if (index >= p.nvars()) throw Error("variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, K(1));
    return p;
  }
  static Polynomial variable(Variables vars, std::string_view name) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end()) throw Error("unknown variable '" + std::string(name) + "'");
    auto idx = static_cast<std::size_t>(it - vars->begin());
    return variable(std::move(vars), idx);
  }
  static Polynomial monomial(Variables vars, Exponents e, const K& c = K(1)) {
    Polynomial p(std::move(vars));
    if (e.size() != p.nvars()) throw Error("exponent vector length mismatch");
    p.add_term(std::move(e), c);
    return p;
  }
  /// Parses sums of products with ^, *, /, parentheses and juxtaposition of
  /// declared variable names (longest match), e.g. "xyz + 2stu - xs^2".
  static Polynomial parse(Variables vars, std::string_view text);

  const Variables& variables() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(exact::total_degree(e)));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = exact::total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return exact::total_degree(t.first) == d; });
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exact::total_degree(terms_.begin()->first) == 0);
  }
  K constant_term() const {
    auto it = terms_.find(Exponents(nvars(), 0));
    return it == terms_.end() ? K(0) : it->second;
  }
  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(Exponents e, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const K& s, const Polynomial& p) {
    Polynomial r(p.vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  Polynomial pow(unsigned k) const {
    Polynomial r = constant(vars_, K(1)), base = *this;
    for (; k != 0; k >>= 1) {
      if (k & 1u) r = r * base;
      if (k > 1) base = base * base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t index) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents f = e;
      --f[index];
      r.add_term(std::move(f), K(static_cast<long long>(e[index])) * c);
    }
    return r;
  }
  Polynomial derivative(std::string_view name) const {
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) throw Error("unknown variable '" + std::string(name) + "'");
    return derivative(static_cast<std::size_t>(it - vars_->begin()));
  }

  K evaluate(const std::vector<K>& point) const {
    if (point.size() != nvars()) throw Error("evaluation point has wrong length");
    K sum(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
      sum = sum + t;
    }
    return sum;
  }

  /// Same terms viewed in a larger (or reordered) variable list.
  Polynomial rename_into(const Variables& target) const {
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
      if (it == target->end()) throw Error("variable '" + (*vars_)[i] + "' missing in target ring");
      map[i] = static_cast<std::size_t>(it - target->begin());
    }
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
      Exponents f(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] += e[i];
      r.add_term(std::move(f), c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_) throw Error("polynomials live in different rings");
  }

  Variables vars_;
  Terms terms_;
};

namespace detail {

template <Field K>
bool coefficient_negative(const K& c) {
  if constexpr (std::is_same_v<K, Rational>) return c.sign() < 0;
  return false;
}

template <Field K>
class PolyParser {
 public:
  PolyParser(Variables vars, std::string_view text) : vars_(std::move(vars)), s_(text) {}

  Polynomial<K> run() {
    skip();
    Polynomial<K> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + why +
                " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial<K> expr() {
    Polynomial<K> acc(vars_);
    bool first = true;
    for (;;) {
      int sign = 1;
      bool had_op = false;
      while (at('+') || at('-')) {
        if (s_[pos_] == '-') sign = -sign;
        ++pos_;
        had_op = true;
      }
      if (!first && !had_op) break;
      Polynomial<K> t = term();
      if (sign < 0) acc -= t; else acc += t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (at('/')) {
        ++pos_;
        Polynomial<K> d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = (K(1) / d.constant_term()) * acc;
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<K> factor() {
    Polynomial<K> b = base();
    if (at('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Polynomial<K> base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> e = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)), 10);
      K value = from_integer(n);
      return Polynomial<K>::constant(vars_, value);
    }
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      const std::string& name = (*vars_)[i];
      if (name.size() > best_len && s_.substr(pos_, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    if (best_len == 0) fail("unknown variable");
    pos_ += best_len;
    return Polynomial<K>::variable(vars_, best);
  }

  static K from_integer(const Integer& n) {
    if constexpr (std::is_same_v<K, Rational>) {
      return Rational(n);
    } else {
      Integer m = n % 1000000007;  // fits in long; the field reduces further
      return K(m.get_si());
    }
  }

  Variables vars_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field K>
Polynomial<K> Polynomial<K>::parse(Variables vars, std::string_view text) {
  return detail::PolyParser<K>(std::move(vars), text).run();
}

template <Field K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = detail::coefficient_negative(c);
    K mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = mag.to_string();
    bool needs_paren = cs.find_first_of("+") != std::string::npos;
    if (needs_paren) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (mag == K(1)) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

/// num/den with den != 0; equality by cross-multiplication.
template <Field K>
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial<K> num)
      : num_(std::move(num)), den_(Polynomial<K>::constant(num_.variables(), K(1))) {}
  RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
  }

  const Polynomial<K>& num() const { return num_; }
  const Polynomial<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  RationalFunction pow(unsigned k) const { return RationalFunction(num_.pow(k), den_.pow(k)); }

  std::string to_string() const {
    if (num_.is_zero()) return "0";
    if (den_.is_constant() && den_.constant_term() == K(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  Polynomial<K> num_;
  Polynomial<K> den_;
};

/// Replaces every variable of p by its image; all images share one target ring.
template <Field K>
RationalFunction<K> poly_substitute(const Polynomial<K>& p,
                                    const std::map<std::string, RationalFunction<K>>& images) {
  if (images.empty()) {
    if (p.nvars() == 0) return RationalFunction<K>(p);
    throw Error("unmapped variable '" + (*p.variables())[0] + "'");
  }
  const Variables& target = images.begin()->second.num().variables();
  std::vector<const RationalFunction<K>*> img(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = images.find((*p.variables())[i]);
    if (it == images.end()) throw Error("unmapped variable '" + (*p.variables())[i] + "'");
    if (*it->second.num().variables() != *target) throw Error("substitution images live in different rings");
    img[i] = &it->second;
  }
  RationalFunction<K> sum{Polynomial<K>(target)};
  // Terms with equal denominators are merged by operator+ without cross-multiplying.
  for (const auto& [e, c] : p.terms()) {
    RationalFunction<K> t(Polynomial<K>::constant(target, c));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * img[i]->pow(e[i]);
    sum = sum.is_zero() ? t : sum + t;
  }
  return sum;
}

/// Polynomial-to-polynomial substitution (images are polynomials in one ring).
template <Field K>
Polynomial<K> poly_compose(const Polynomial<K>& p, const std::vector<Polynomial<K>>& images) {
  if (images.size() != p.nvars()) throw Error("unmapped variable");
  Variables target = images.empty() ? p.variables() : images.front().variables();
  Polynomial<K> sum(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial<K> t = Polynomial<K>::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * images[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

}  // namespace fanocert::exact
