#include "heaporth/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "heaporth/error.hpp"

namespace heaporth {

Var Var::c(long index) {
  if (index < 0) throw Error(ErrorKind::kIndex, "c index must be >= 0, got " + std::to_string(index));
  return Var(Kind::kC, static_cast<std::uint32_t>(index));
}

Var Var::lam(long index) {
  if (index < 1) throw Error(ErrorKind::kIndex, "lambda index must be >= 1, got " + std::to_string(index));
  return Var(Kind::kLam, static_cast<std::uint32_t>(index));
}

Var Var::parse(std::string_view name) {
  if (name == "x") return x();
  if (name == "t") return t();
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'l')) {
    long index = 0;
    for (char ch : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorKind::kParse, "bad variable '" + std::string(name) + "'");
      index = index * 10 + (ch - '0');
    }
    return name[0] == 'c' ? c(index) : lam(index);
  }
  throw Error(ErrorKind::kParse, "bad variable '" + std::string(name) + "'");
}

std::string Var::name() const {
  switch (kind_) {
    case Kind::kX: return "x";
    case Kind::kT: return "t";
    case Kind::kC: return "c" + std::to_string(index_);
    case Kind::kLam: return "l" + std::to_string(index_);
  }
  return "?";
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::of(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin();
  for (const auto& [v, e] : o.factors_) {
    while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) r.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) r.factors_.push_back(*a++);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.first != v) r.factors_.push_back(f);
  }
  return r;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The monomial holding the earlier variable has the larger exponent there.
      return fa[i].first < fb[i].first ? 1 : -1;
    }
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second ? -1 : 1;
  }
  // Equal degree and equal prefix forces equal length.
  return 0;
}

MultiPoly::MultiPoly(BigRational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), std::move(constant));
}

MultiPoly::MultiPoly(Monomial m, BigRational coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(m), std::move(coeff));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<BigRational> MultiPoly::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return BigRational(0);
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::uint32_t MultiPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

MultiPoly MultiPoly::coefficient_of(Var v, std::uint32_t e) const {
  MultiPoly r;
  for (const auto& [m, k] : terms_) {
    if (m.exponent(v) == e) r.add_term(m.without(v), k);
  }
  return r;
}

void MultiPoly::add_term(const Monomial& m, const BigRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [_, k] : r.terms_) k = -k;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, k] : o.terms_) add_term(m, k);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, k] : o.terms_) add_term(m, -k);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ka] : a.terms_) {
    for (const auto& [mb, kb] : b.terms_) r.add_term(ma * mb, ka * kb);
  }
  return r;
}

MultiPoly MultiPoly::scaled(const BigRational& k) const {
  if (k.is_zero()) return {};
  MultiPoly r = *this;
  for (auto& [_, c] : r.terms_) c *= k;
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  return substitute([&](Var w) -> std::optional<MultiPoly> {
    if (w == v) return value;
    return std::nullopt;
  });
}

MultiPoly MultiPoly::substitute(const std::function<std::optional<MultiPoly>(Var)>& image) const {
  MultiPoly r;
  for (const auto& [m, k] : terms_) {
    MultiPoly term(k);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      if (auto img = image(v)) {
        term = term * img->pow(e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    r += term * MultiPoly(Monomial(std::move(kept)));
  }
  return r;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::kDomain, "polynomial division by zero");
  if (auto k = d.constant_value()) return scaled(BigRational(1) / *k);
  const auto& [dm, dk] = *d.terms_.rbegin();
  MultiPoly q;
  MultiPoly r = *this;
  while (!r.is_zero()) {
    const auto& [rm, rk] = *r.terms_.rbegin();
    auto qm = rm.divide(dm);
    if (!qm) {
      throw Error(ErrorKind::kDomain,
                  "(" + d.to_string() + ") does not divide (" + to_string() + ")");
    }
    MultiPoly step(*qm, rk / dk);
    q += step;
    r -= step * d;
  }
  return q;
}

namespace {

void print_monomial(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << v.name();
    if (e > 1) os << '^' << e;
  }
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, k] = *it;
    const bool negative = k.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigRational mag = negative ? -k : k;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != BigRational(1)) os << mag << '*';
      print_monomial(os, m);
    }
  }
  return os.str();
}

MultiPoly shift_vars(const MultiPoly& p) {
  return p.substitute([](Var v) -> std::optional<MultiPoly> {
    switch (v.kind()) {
      case Var::Kind::kC: return MultiPoly(Var::c(v.index() + 1));
      case Var::Kind::kLam: return MultiPoly(Var::lam(v.index() + 1));
      default: return std::nullopt;
    }
  });
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

namespace {

// expr := [+-] term ([+-] term)*; term := power (* power)*;
// power := primary [^ digits]; primary := p[/q] | variable | ( expr )
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  MultiPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    MultiPoly p = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, what + " in '" + std::string(text_) + "'");
  }

  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  MultiPoly expr() {
    MultiPoly result;
    bool negative = false;
    if (eat('-')) negative = true;
    else eat('+');
    result = negative ? -term() : term();
    while (pos_ < s_.size()) {
      if (eat('+')) result += term();
      else if (eat('-')) result -= term();
      else break;
    }
    return result;
  }

  MultiPoly term() {
    MultiPoly p = power();
    while (eat('*')) p *= power();
    return p;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (eat('^')) {
      const std::string e = digits();
      if (e.empty()) fail("bad exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly primary() {
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      MultiPoly inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string lit = digits();
      if (eat('/')) {
        const std::string den = digits();
        if (den.empty()) fail("bad rational");
        lit += "/" + den;
      }
      return MultiPoly(BigRational::parse(lit));
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return MultiPoly(Var::parse(s_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace heaporth
