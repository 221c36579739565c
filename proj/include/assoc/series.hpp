#pragma once

// Truncated formal power series with exact coefficients (BigRat or MPoly).
// PSeries1 is univariate; MSeries is multivariate, truncated by total degree.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/exact.hpp"

namespace assoc {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool coef_is_zero(const BigRat& c) { return c == 0; }
inline bool coef_is_zero(const MPoly& c) { return c.is_zero(); }

inline BigRat coef_inverse(const BigRat& c) {
  if (c == 0) throw SeriesError("constant term is not invertible");
  return 1 / c;
}
inline MPoly coef_inverse(const MPoly& c) {
  if (!c.is_constant() || c.is_zero()) throw SeriesError("constant term is not invertible");
  return MPoly(BigRat(1 / c.constant_term()));
}

inline bool coef_is_one(const BigRat& c) { return c == 1; }
inline bool coef_is_one(const MPoly& c) { return c == MPoly(1); }

/// Coefficients of (1 + t)^(p/q) up to degree n.
inline std::vector<BigRat> binomial_series(const BigRat& exponent, unsigned n) {
  std::vector<BigRat> c(n + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    c[k] = c[k - 1] * (exponent - (k - 1)) / k;
  }
  return c;
}

template <class C>
class PSeries1 {
 public:
  PSeries1() : c_(1) {}
  explicit PSeries1(unsigned order) : c_(order + 1) {}
  PSeries1(std::vector<C> coeffs, unsigned order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

  static PSeries1 constant(const C& c, unsigned order) {
    PSeries1 s(order);
    s.c_[0] = c;
    return s;
  }
  /// The identity series t.
  static PSeries1 identity(unsigned order) {
    PSeries1 s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const C& operator[](unsigned k) const { return c_[k]; }
  C& operator[](unsigned k) { return c_[k]; }
  const std::vector<C>& coeffs() const { return c_; }

  PSeries1 truncate(unsigned n) const {
    PSeries1 r = *this;
    r.c_.resize(std::min<std::size_t>(n, order()) + 1);
    return r;
  }

  PSeries1& operator+=(const PSeries1& o) {
    align(o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  PSeries1& operator-=(const PSeries1& o) {
    align(o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  PSeries1 operator-() const {
    PSeries1 r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  PSeries1& operator*=(const BigRat& a) {
    for (auto& c : c_) c *= a;
    return *this;
  }
  friend PSeries1 operator+(PSeries1 a, const PSeries1& b) { return a += b; }
  friend PSeries1 operator-(PSeries1 a, const PSeries1& b) { return a -= b; }
  friend PSeries1 operator*(PSeries1 a, const BigRat& s) { return a *= s; }
  friend PSeries1 operator*(const PSeries1& a, const PSeries1& b) {
    unsigned n = std::min(a.order(), b.order());
    PSeries1 r(n);
    for (unsigned i = 0; i <= n; ++i) {
      if (coef_is_zero(a.c_[i])) continue;
      for (unsigned j = 0; i + j <= n; ++j) {
        if (coef_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  PSeries1 scale(const C& s) const {
    PSeries1 r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
  }

  friend bool operator==(const PSeries1& a, const PSeries1& b) {
    if (a.order() != b.order()) return false;
    for (unsigned k = 0; k <= a.order(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }
  friend bool operator!=(const PSeries1& a, const PSeries1& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!coef_is_zero(c)) return false;
    return true;
  }

  /// Series known to order N-1.
  PSeries1 derivative() const {
    if (order() == 0) return PSeries1(0);
    PSeries1 r(order() - 1);
    for (unsigned k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * BigRat(k);
    return r;
  }
  /// Antiderivative with zero constant, known to order N+1.
  PSeries1 integrate() const {
    PSeries1 r(order() + 1);
    for (unsigned k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] * BigRat(1, k + 1);
    return r;
  }

 private:
  std::vector<C> c_;
  void align(const PSeries1& o) {
    if (o.order() < order()) c_.resize(o.order() + 1);
  }
};

/// f(g) where g(0) = 0, by Horner's rule.
template <class C>
PSeries1<C> compose(const PSeries1<C>& f, const PSeries1<C>& g) {
  if (!coef_is_zero(g[0])) throw SeriesError("compose: inner series must vanish at 0");
  unsigned n = std::min(f.order(), g.order());
  PSeries1<C> r = PSeries1<C>::constant(f[n], n);
  PSeries1<C> gg = g.truncate(n);
  for (unsigned k = n; k-- > 0;) {
    r = r * gg;
    r[0] += f[k];
  }
  return r;
}

/// Applies the univariate coefficient list f to h with h(0) = 0.
template <class C>
PSeries1<C> apply_rat(const std::vector<BigRat>& f, const PSeries1<C>& h) {
  PSeries1<C> fs(h.order());
  for (unsigned k = 0; k <= h.order() && k < f.size(); ++k) fs[k] = C(f[k]);
  return compose(fs, h);
}

/// s^alpha for s with constant term 1, by the recurrence from s (s^alpha)' = alpha s' s^alpha.
template <class C>
PSeries1<C> power_unit(const PSeries1<C>& s, const BigRat& alpha) {
  if (!coef_is_one(s[0])) throw SeriesError("power_unit: constant term must be 1");
  const unsigned n = s.order();
  PSeries1<C> f(n);
  f[0] = C(1);
  for (unsigned m = 1; m <= n; ++m) {
    C acc;
    for (unsigned k = 1; k <= m; ++k) {
      if (coef_is_zero(s[k]) || coef_is_zero(f[m - k])) continue;
      BigRat w = alpha * k - (m - k);
      if (w == 0) continue;
      acc += s[k] * f[m - k] * w;
    }
    f[m] = acc * BigRat(1, m);
  }
  return f;
}

template <class C>
PSeries1<C> reciprocal(const PSeries1<C>& s) {
  C inv = coef_inverse(s[0]);
  return power_unit(s.scale(inv), BigRat(-1)).scale(inv);
}

template <class C>
PSeries1<C> sqrt_unit(const PSeries1<C>& s) {
  if (!coef_is_one(s[0])) throw SeriesError("sqrt_unit: constant term must be 1");
  return power_unit(s, BigRat(1, 2));
}

/// s^(-1/2) for s with constant term 1.
template <class C>
PSeries1<C> inv_sqrt_unit(const PSeries1<C>& s) {
  if (!coef_is_one(s[0])) throw SeriesError("inv_sqrt_unit: constant term must be 1");
  return power_unit(s, BigRat(-1, 2));
}

/// Compositional inverse: s(reversion(s)) = t.
template <class C>
PSeries1<C> reversion(const PSeries1<C>& s) {
  const unsigned n = s.order();
  if (!coef_is_zero(s[0])) throw SeriesError("reversion: series must vanish at 0");
  if (n == 0) return PSeries1<C>(0);
  C inv1 = coef_inverse(s[1]);
  PSeries1<C> r(n);
  r[1] = inv1;
  for (unsigned k = 2; k <= n; ++k) {
    PSeries1<C> sr = compose(s, r.truncate(k)).truncate(k);
    r[k] = -(sr[k] * inv1);
  }
  return r;
}

// ------------------------------------------------------------------------
// Multivariate series

template <class C>
class MSeries {
 public:
  using Map = std::map<Exponents, C>;

  MSeries() : nvars_(0), order_(0) {}
  MSeries(unsigned nvars, unsigned order) : nvars_(nvars), order_(order) {}

  static MSeries constant(unsigned nvars, unsigned order, const C& c) {
    MSeries s(nvars, order);
    s.set(Exponents(nvars, 0), c);
    return s;
  }
  static MSeries variable(unsigned nvars, unsigned order, unsigned i) {
    MSeries s(nvars, order);
    Exponents e(nvars, 0);
    e[i] = 1;
    if (order >= 1) s.set(e, C(1));
    return s;
  }

  unsigned nvars() const { return nvars_; }
  unsigned order() const { return order_; }
  const Map& terms() const { return m_; }

  C coeff(const Exponents& e) const {
    auto it = m_.find(e);
    return it == m_.end() ? C() : it->second;
  }
  C constant_term() const { return coeff(Exponents(nvars_, 0)); }

  void set(const Exponents& e, const C& c) {
    if (degree(e) > order_) return;
    if (coef_is_zero(c))
      m_.erase(e);
    else
      m_[e] = c;
  }
  void add(const Exponents& e, const C& c) {
    if (degree(e) > order_ || coef_is_zero(c)) return;
    auto [it, inserted] = m_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (coef_is_zero(it->second)) m_.erase(it);
    }
  }

  MSeries truncate(unsigned n) const {
    MSeries r(nvars_, std::min(n, order_));
    for (const auto& [e, c] : m_)
      if (degree(e) <= r.order_) r.m_.emplace(e, c);
    return r;
  }

  /// Homogeneous component of total degree d.
  MSeries homogeneous(unsigned d) const {
    MSeries r(nvars_, order_);
    for (const auto& [e, c] : m_)
      if (degree(e) == d) r.m_.emplace(e, c);
    return r;
  }

  MSeries& operator+=(const MSeries& o) {
    check_compatible(o);
    order_ = std::min(order_, o.order_);
    *this = truncate(order_);
    for (const auto& [e, c] : o.m_) add(e, c);
    return *this;
  }
  MSeries& operator-=(const MSeries& o) { return *this += -o; }
  MSeries operator-() const {
    MSeries r = *this;
    for (auto& [e, c] : r.m_) c = -c;
    return r;
  }
  friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
  friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
  friend MSeries operator*(const MSeries& a, const MSeries& b) {
    a.check_compatible(b);
    MSeries r(a.nvars_, std::min(a.order_, b.order_));
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.m_) {
      unsigned da = degree(ea);
      if (da > r.order_) continue;
      for (const auto& [eb, cb] : b.m_) {
        if (da + degree(eb) > r.order_) continue;
        for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    }
    return r;
  }
  MSeries scale(const C& s) const {
    MSeries r(nvars_, order_);
    for (const auto& [e, c] : m_) r.set(e, c * s);
    return r;
  }

  friend bool operator==(const MSeries& a, const MSeries& b) {
    if (a.nvars_ != b.nvars_ || a.order_ != b.order_ || a.m_.size() != b.m_.size()) return false;
    auto it = b.m_.begin();
    for (const auto& [e, c] : a.m_) {
      if (it->first != e || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const MSeries& a, const MSeries& b) { return !(a == b); }

  bool is_zero() const { return m_.empty(); }

  /// Swaps variables i and j.
  MSeries swap_vars(unsigned i, unsigned j) const {
    MSeries r(nvars_, order_);
    for (const auto& [e, c] : m_) {
      Exponents f = e;
      std::swap(f[i], f[j]);
      r.m_.emplace(std::move(f), c);
    }
    return r;
  }

  /// Replaces variable i by -variable i.
  MSeries negate_var(unsigned i) const {
    MSeries r(nvars_, order_);
    for (const auto& [e, c] : m_) r.m_.emplace(e, (e[i] % 2) ? C(-c) : c);
    return r;
  }

  /// Partial derivative in variable i; order drops by one.
  MSeries derivative(unsigned i) const {
    MSeries r(nvars_, order_ == 0 ? 0 : order_ - 1);
    for (const auto& [e, c] : m_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      f[i] -= 1;
      r.set(f, c * BigRat(e[i]));
    }
    return r;
  }

  static unsigned degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

 private:
  unsigned nvars_;
  unsigned order_;
  Map m_;

  void check_compatible(const MSeries& o) const {
    if (nvars_ != o.nvars_) throw SeriesError("series in different numbers of variables");
  }
};

/// F(args[0], ..., args[n-1]); every argument must vanish at the origin.
template <class C>
MSeries<C> compose(const MSeries<C>& F, const std::vector<MSeries<C>>& args) {
  if (args.size() != F.nvars()) throw SeriesError("compose: wrong number of arguments");
  if (args.empty()) return F;
  const unsigned m = args[0].nvars();
  unsigned order = F.order();
  for (const auto& a : args) {
    if (!coef_is_zero(a.constant_term())) throw SeriesError("compose: arguments must vanish at 0");
    order = std::min(order, a.order());
  }
  std::vector<std::vector<MSeries<C>>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    powers[i].push_back(MSeries<C>::constant(m, order, C(1)));
  auto power = [&](std::size_t i, unsigned k) -> const MSeries<C>& {
    auto& p = powers[i];
    while (p.size() <= k) p.push_back((p.back() * args[i]).truncate(order));
    return p[k];
  };
  MSeries<C> r(m, order);
  for (const auto& [e, c] : F.terms()) {
    if (MSeries<C>::degree(e) > order) continue;
    MSeries<C> term = MSeries<C>::constant(m, order, c);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

/// f(h) for univariate f and multivariate h with h(0) = 0.
template <class C>
MSeries<C> compose(const PSeries1<C>& f, const MSeries<C>& h) {
  if (!coef_is_zero(h.constant_term())) throw SeriesError("compose: inner series must vanish at 0");
  unsigned n = std::min(f.order(), h.order());
  MSeries<C> r = MSeries<C>::constant(h.nvars(), n, f[n]);
  MSeries<C> hh = h.truncate(n);
  for (unsigned k = n; k-- > 0;) {
    r = r * hh;
    r += MSeries<C>::constant(h.nvars(), n, f[k]);
  }
  return r;
}

template <class C>
MSeries<C> apply_rat(const std::vector<BigRat>& f, const MSeries<C>& h) {
  PSeries1<C> fs(h.order());
  for (unsigned k = 0; k <= h.order() && k < f.size(); ++k) fs[k] = C(f[k]);
  return compose(fs, h);
}

/// s^alpha for s with constant term 1. Uses the Euler operator on homogeneous
/// components: n f_n = sum_k (alpha k - (n - k)) s_k f_(n-k).
template <class C>
MSeries<C> power_unit(const MSeries<C>& s, const BigRat& alpha) {
  if (!coef_is_one(s.constant_term())) throw SeriesError("power_unit: constant term must be 1");
  const unsigned n = s.order();
  std::vector<MSeries<C>> g(n + 1), f(n + 1);
  for (unsigned d = 0; d <= n; ++d) g[d] = s.homogeneous(d);
  f[0] = MSeries<C>::constant(s.nvars(), n, C(1));
  for (unsigned m = 1; m <= n; ++m) {
    MSeries<C> acc(s.nvars(), n);
    for (unsigned k = 1; k <= m; ++k) {
      if (g[k].is_zero() || f[m - k].is_zero()) continue;
      BigRat w = alpha * k - (m - k);
      if (w == 0) continue;
      acc += (g[k] * f[m - k]).scale(C(w));
    }
    f[m] = acc.scale(C(BigRat(1, m)));
  }
  MSeries<C> r(s.nvars(), n);
  for (auto& part : f) r += part;
  return r;
}

template <class C>
MSeries<C> reciprocal(const MSeries<C>& s) {
  C inv = coef_inverse(s.constant_term());
  return power_unit(s.scale(inv), BigRat(-1)).scale(inv);
}

template <class C>
MSeries<C> sqrt_unit(const MSeries<C>& s) {
  if (!coef_is_one(s.constant_term())) throw SeriesError("sqrt_unit: constant term must be 1");
  return power_unit(s, BigRat(1, 2));
}

template <class C>
MSeries<C> inv_sqrt_unit(const MSeries<C>& s) {
  if (!coef_is_one(s.constant_term())) throw SeriesError("inv_sqrt_unit: constant term must be 1");
  return power_unit(s, BigRat(-1, 2));
}

/// Embeds a univariate series as a series in variable i of an n-variable ring.
template <class C>
MSeries<C> embed(const PSeries1<C>& f, unsigned nvars, unsigned i) {
  MSeries<C> r(nvars, f.order());
  for (unsigned k = 0; k <= f.order(); ++k) {
    Exponents e(nvars, 0);
    e[i] = k;
    r.set(e, f[k]);
  }
  return r;
}

using PSeries2 = MSeries<MPoly>;

}  // namespace assoc
