#include "circforest/int_poly.hpp"

#include <sstream>

#include "circforest/errors.hpp"

namespace circforest {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(unsigned d, mpz_class c) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(d + 1, mpz_class(0));
    p.c_[d] = std::move(c);
  }
  return p;
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) throw InternalError("InternalInconsistency", "leading() of zero polynomial");
  return c_.back();
}

mpz_class IntPoly::max_abs_coeff() const {
  mpz_class m = 0;
  for (const auto& c : c_) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Complex IntPoly::eval(const Complex& z) const {
  mpfr_prec_t p = z.prec();
  Complex acc(p);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += Real(c_[i], p);
  }
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

namespace {

// Pseudo-remainder: repeatedly scale by the leading coefficient of b so
// every cancellation step stays integral.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    unsigned shift = static_cast<unsigned>(a.degree() - b.degree());
    std::vector<mpz_class> sc = a.coeffs();
    for (auto& c : sc) c *= lb;
    a = IntPoly(std::move(sc)) - IntPoly::monomial(shift, a.leading()) * b;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly IntPoly::divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InternalError("InternalInconsistency", "polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree())
    throw InternalError("InternalInconsistency", "inexact polynomial division");
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> q(a.degree() - b.degree() + 1, mpz_class(0));
  const auto& bc = b.coeffs();
  for (size_t qi = q.size(); qi-- > 0;) {
    mpz_class& top = rem[qi + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
      throw InternalError("InternalInconsistency", "inexact polynomial division");
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    q[qi] = f;
    for (size_t j = 0; j < bc.size(); ++j) rem[qi + j] -= f * bc[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw InternalError("InternalInconsistency", "inexact polynomial division");
  return IntPoly(std::move(q));
}

std::vector<std::pair<IntPoly, int>> IntPoly::squarefree_factors() const {
  if (is_zero()) throw InternalError("InternalInconsistency", "squarefree_factors of zero");
  IntPoly a = primitive_part();
  if (a.degree() < 1) return {};
  IntPoly da = a.derivative();
  IntPoly g = gcd(a, da);
  if (g.degree() == 0) return {{a, 1}};
  // Yun's iteration over the integers; all divisions are exact.
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly c = divide_exact(a, g);
  IntPoly d = divide_exact(da, g) - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    IntPoly p = gcd(c, d);
    if (p.degree() > 0) out.emplace_back(p, mult);
    c = divide_exact(c, p);
    d = divide_exact(d, p) - c.derivative();
    ++mult;
  }
  return out;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace circforest
