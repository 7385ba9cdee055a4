#include "circforest/laurent_poly.hpp"

#include <sstream>

#include "circforest/errors.hpp"

namespace circforest {

LaurentPoly LaurentPoly::from_terms(std::map<long, mpz_class> terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::constant(mpz_class c) {
  return from_terms({{0, std::move(c)}});
}

long LaurentPoly::low_exp() const {
  if (terms_.empty()) throw InternalError("InternalInconsistency", "low_exp of zero");
  return terms_.begin()->first;
}

long LaurentPoly::high_exp() const {
  if (terms_.empty()) throw InternalError("InternalInconsistency", "high_exp of zero");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::plus_constant(const mpz_class& c) const {
  auto t = terms_;
  auto [it, inserted] = t.emplace(0, c);
  if (!inserted) it->second += c;
  return from_terms(std::move(t));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::map<long, mpz_class> t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) t[e1 + e2] += c1 * c2;
  return from_terms(std::move(t));
}

std::pair<IntPoly, long> LaurentPoly::as_poly() const {
  if (terms_.empty()) return {IntPoly(), 0};
  long low = low_exp();
  std::vector<mpz_class> c(static_cast<size_t>(high_exp() - low) + 1, mpz_class(0));
  for (const auto& [e, v] : terms_) c[static_cast<size_t>(e - low)] = v;
  return {IntPoly(std::move(c)), low};
}

Complex LaurentPoly::eval_circle(const Real& theta) const {
  mpfr_prec_t p = theta.prec();
  Complex acc(p);
  for (const auto& [e, c] : terms_) {
    Real angle = theta * Real(e, p);
    Real coeff(c, p);
    acc.re += coeff * cos(angle);
    acc.im += coeff * sin(angle);
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0 || a != 1) os << a.get_str();
    if (e != 0) os << "z^" << e;
  }
  return os.str();
}

MonicForm monicize(const LaurentPoly& p) {
  if (p.is_zero()) throw InputError("NotMonicizable", "zero Laurent polynomial");
  long h = p.high_exp();
  if (h < 1 || p.low_exp() != -h)
    throw InputError("NotMonicizable", "support is not a symmetric band around 0");
  if (p.coeff(h) != -1)
    throw InputError("NotMonicizable", "-z^h * P is not monic (top coefficient of P is not -1)");
  std::vector<mpz_class> c(static_cast<size_t>(2 * h) + 1, mpz_class(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e + h)] = -v;
  return MonicForm{IntPoly(std::move(c)), h};
}

LaurentPoly associated_polynomial(const CirculantSpec& spec) {
  std::map<long, mpz_class> t;
  t[0] = mpz_class(2 * spec.k() + (spec.half_step() ? 2 : 1));
  for (unsigned long s : spec.steps()) {
    t[static_cast<long>(s)] = -1;
    t[-static_cast<long>(s)] = -1;
  }
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace circforest
