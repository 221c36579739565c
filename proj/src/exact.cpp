#include "assoc/exact.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace assoc {

BigRat make_rat(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q) { return q.get_str(); }

double to_double(const BigRat& q) { return q.get_d(); }

// ---------------------------------------------------------------- Var

namespace {

struct VarTable {
  std::mutex mu;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::unique_ptr<std::string>> names;
};

VarTable& var_table() {
  static VarTable t;
  return t;
}

}  // namespace

Var::Var(std::string_view name) {
  auto& t = var_table();
  std::lock_guard<std::mutex> lock(t.mu);
  std::string key(name);
  auto it = t.ids.find(key);
  if (it != t.ids.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<std::uint32_t>(t.names.size());
  t.names.push_back(std::make_unique<std::string>(key));
  t.ids.emplace(std::move(key), id_);
}

const std::string& Var::name() const {
  auto& t = var_table();
  std::lock_guard<std::mutex> lock(t.mu);
  return *t.names[id_];
}

bool operator<(Var a, Var b) {
  if (a.id_ == b.id_) return false;
  return a.name() < b.name();
}

// ---------------------------------------------------------------- helpers

namespace {

std::uint32_t exp_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// true if a precedes b in descending graded-lex order
bool grlex_greater(const Exponents& a, const Exponents& b) {
  auto da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  return a > b;
}

struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

struct ExpHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Var> union_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const BigRat& c) {
  if (c != 0) terms_.push_back({{}, c});
}

MPoly::MPoly(long c) : MPoly(BigRat(c)) {}

MPoly MPoly::var(std::string_view name) { return var(Var(name)); }

MPoly MPoly::var(Var v) {
  MPoly p;
  p.vars_ = {v};
  p.terms_.push_back({{1}, 1});
  return p;
}

MPoly MPoly::monomial(const std::vector<std::pair<Var, std::uint32_t>>& powers, const BigRat& coef) {
  MPoly r(coef);
  for (const auto& [v, e] : powers) r *= var(v).pow(e);
  return r;
}

MPoly MPoly::from_terms(std::vector<Var> vars, std::vector<Term> terms) {
  MPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  // merge duplicates, drop zeros
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coef == 0; }),
               merged.end());
  terms_ = std::move(merged);

  // trim unused variables
  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i]) used[i] = true;
  if (std::find(used.begin(), used.end(), false) == used.end()) return;
  std::vector<Var> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  for (auto& t : terms_) {
    Exponents e;
    e.reserve(nv.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) e.push_back(t.exp[i]);
    t.exp = std::move(e);
  }
  vars_ = std::move(nv);
}

int MPoly::var_index(Var v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<Term> MPoly::aligned_terms(const std::vector<Var>& target) const {
  if (target.size() == vars_.size()) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    while (target[j] != vars_[i]) ++j;
    pos[i] = j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) e[pos[i]] = t.exp[i];
    out.push_back({std::move(e), t.coef});
  }
  return out;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }

BigRat MPoly::constant_term() const {
  if (!terms_.empty() && exp_degree(terms_.back().exp) == 0) return terms_.back().coef;
  return 0;
}

const Term& MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

std::uint32_t MPoly::total_degree() const { return terms_.empty() ? 0 : exp_degree(terms_.front().exp); }

bool MPoly::has_var(Var v) const { return var_index(v) >= 0; }

std::uint32_t MPoly::degree(Var v) const {
  int i = var_index(v);
  if (i < 0) return 0;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[i]);
  return d;
}

MPoly MPoly::coeff(Var v, std::uint32_t k) const {
  int i = var_index(v);
  if (i < 0) return k == 0 ? *this : MPoly();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == k) {
      Term nt = t;
      nt.exp[i] = 0;
      out.push_back(std::move(nt));
    }
  }
  return from_terms(vars_, std::move(out));
}

std::vector<MPoly> MPoly::as_univariate(Var v) const {
  int i = var_index(v);
  if (i < 0) return {*this};
  std::uint32_t d = degree(v);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Term nt = t;
    nt.exp[i] = 0;
    buckets[t.exp[i]].push_back(std::move(nt));
  }
  std::vector<MPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(from_terms(vars_, std::move(b)));
  return out;
}

MPoly MPoly::derivative(Var v) const {
  int i = var_index(v);
  if (i < 0) return MPoly();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[i] == 0) continue;
    Term nt = t;
    nt.coef *= t.exp[i];
    nt.exp[i] -= 1;
    out.push_back(std::move(nt));
  }
  return from_terms(vars_, std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  if (!has_var(v)) return *this;
  auto cs = as_univariate(v);
  // Horner
  MPoly r = cs.back();
  for (std::size_t k = cs.size() - 1; k-- > 0;) {
    r = r * value;
    r += cs[k];
  }
  return r;
}

RatFunc MPoly::substitute(Var v, const RatFunc& value) const {
  if (!has_var(v)) return RatFunc(*this);
  auto cs = as_univariate(v);
  const std::size_t D = cs.size() - 1;
  // sum c_k n^k d^(D-k) / d^D
  std::vector<MPoly> npow{MPoly(1)}, dpow{MPoly(1)};
  for (std::size_t k = 1; k <= D; ++k) {
    npow.push_back(npow.back() * value.num());
    dpow.push_back(dpow.back() * value.den());
  }
  MPoly num;
  for (std::size_t k = 0; k <= D; ++k) {
    if (cs[k].is_zero()) continue;
    num += cs[k] * npow[k] * dpow[D - k];
  }
  return RatFunc(num, dpow[D]);
}

MPoly MPoly::substitute(const std::vector<std::pair<Var, MPoly>>& values) const {
  // positions of substituted variables in this polynomial
  std::vector<std::pair<int, const MPoly*>> subs;
  for (const auto& [v, val] : values) {
    int i = var_index(v);
    if (i >= 0) subs.emplace_back(i, &val);
  }
  if (subs.empty()) return *this;
  std::vector<std::vector<MPoly>> powers(subs.size());
  for (std::size_t s = 0; s < subs.size(); ++s) powers[s].push_back(MPoly(1));
  auto power = [&](std::size_t s, std::uint32_t e) -> const MPoly& {
    auto& pw = powers[s];
    while (pw.size() <= e) pw.push_back(pw.back() * *subs[s].second);
    return pw[e];
  };
  // group terms by the exponents of the substituted variables
  std::map<Exponents, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Exponents key(subs.size());
    Term rest = t;
    for (std::size_t s = 0; s < subs.size(); ++s) {
      key[s] = t.exp[subs[s].first];
      rest.exp[subs[s].first] = 0;
    }
    groups[key].push_back(std::move(rest));
  }
  MPoly result;
  for (auto& [key, ts] : groups) {
    MPoly part = from_terms(vars_, std::move(ts));
    for (std::size_t s = 0; s < subs.size(); ++s)
      if (key[s]) part = part * power(s, key[s]);
    result += part;
  }
  return result;
}

RatFunc MPoly::substitute_rational(const std::vector<std::pair<Var, RatFunc>>& values) const {
  std::vector<std::pair<int, const RatFunc*>> subs;
  for (const auto& [v, val] : values) {
    int i = var_index(v);
    if (i >= 0) subs.emplace_back(i, &val);
  }
  if (subs.empty()) return RatFunc(*this);
  std::vector<std::uint32_t> D(subs.size());
  for (std::size_t s = 0; s < subs.size(); ++s) D[s] = degree(vars_[subs[s].first]);
  std::vector<std::vector<MPoly>> npow(subs.size()), dpow(subs.size());
  for (std::size_t s = 0; s < subs.size(); ++s) {
    npow[s] = {MPoly(1)};
    dpow[s] = {MPoly(1)};
    for (std::uint32_t k = 1; k <= D[s]; ++k) {
      npow[s].push_back(npow[s].back() * subs[s].second->num());
      dpow[s].push_back(dpow[s].back() * subs[s].second->den());
    }
  }
  std::map<Exponents, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Exponents key(subs.size());
    Term rest = t;
    for (std::size_t s = 0; s < subs.size(); ++s) {
      key[s] = t.exp[subs[s].first];
      rest.exp[subs[s].first] = 0;
    }
    groups[key].push_back(std::move(rest));
  }
  MPoly num;
  for (auto& [key, ts] : groups) {
    MPoly part = from_terms(vars_, std::move(ts));
    for (std::size_t s = 0; s < subs.size(); ++s) {
      if (key[s]) part = part * npow[s][key[s]];
      if (D[s] - key[s]) part = part * dpow[s][D[s] - key[s]];
    }
    num += part;
  }
  MPoly den(1);
  for (std::size_t s = 0; s < subs.size(); ++s) den = den * dpow[s][D[s]];
  return RatFunc(num, den);
}

BigRat MPoly::evaluate(const std::map<Var, BigRat>& point) const {
  std::vector<const BigRat*> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw std::invalid_argument("evaluate: no value for variable " + vars_[i].name());
    vals[i] = &it->second;
  }
  BigRat sum = 0;
  mpq_class m;
  for (const auto& t : terms_) {
    BigRat term = t.coef;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.exp[i]) continue;
      mpz_class n, d;
      mpz_pow_ui(n.get_mpz_t(), vals[i]->get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(d.get_mpz_t(), vals[i]->get_den_mpz_t(), t.exp[i]);
      m = BigRat(n, d);
      term *= m;
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

std::complex<double> MPoly::evaluate(const std::map<Var, std::complex<double>>& point) const {
  std::vector<std::complex<double>> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw std::invalid_argument("evaluate: no value for variable " + vars_[i].name());
    vals[i] = it->second;
  }
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> term = t.coef.get_d();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::uint32_t k = 0; k < t.exp[i]; ++k) term *= vals[i];
    sum += term;
  }
  return sum;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  auto uv = union_vars(vars_, o.vars_);
  auto a = aligned_terms(uv);
  auto b = o.aligned_terms(uv);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      out.push_back(std::move(b[j++]));
    } else {
      BigRat c = a[i].coef + b[j].coef;
      if (c != 0) out.push_back({std::move(a[i].exp), c});
      ++i;
      ++j;
    }
  }
  vars_ = std::move(uv);
  terms_ = std::move(out);
  // already sorted and merged; only variable trimming may be needed
  normalize();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return MPoly();
  auto uv = union_vars(a.vars_, b.vars_);
  auto ta = a.aligned_terms(uv);
  auto tb = b.aligned_terms(uv);
  std::unordered_map<Exponents, BigRat, ExpHash> acc;
  acc.reserve(ta.size() * tb.size());
  Exponents e(uv.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      for (std::size_t k = 0; k < uv.size(); ++k) e[k] = x.exp[k] + y.exp[k];
      auto [it, inserted] = acc.try_emplace(e);
      if (inserted) {
        mpq_mul(it->second.get_mpq_t(), x.coef.get_mpq_t(), y.coef.get_mpq_t());
      } else {
        it->second += x.coef * y.coef;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back({k, std::move(c)});
  return MPoly::from_terms(std::move(uv), std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    vars_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    BigRat c = t.coef;
    if (k) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i].name();
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MPoly parse() {
    MPoly r = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(i_) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MPoly sum() {
    MPoly r;
    bool first = true;
    for (;;) {
      skip();
      BigRat sign = 1;
      bool have_sign = false;
      while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
        if (s_[i_] == '-') sign = -sign;
        ++i_;
        have_sign = true;
        skip();
      }
      if (!first && !have_sign) break;
      first = false;
      if (i_ >= s_.size()) fail("missing term");
      r += product() * sign;
    }
    return r;
  }

  MPoly product() {
    MPoly r = factor();
    for (;;) {
      if (eat('*')) {
        r = r * factor();
      } else if (eat('/')) {
        MPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        r *= 1 / d.constant_term();
      } else {
        return r;
      }
    }
  }

  std::uint32_t integer_exp() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected exponent");
    return static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, i_ - start))));
  }

  MPoly factor() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    MPoly base;
    if (c == '(') {
      ++i_;
      base = sum();
      if (!eat(')')) fail("expected ')'");
    } else if (c == '-') {
      ++i_;
      return -factor();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      BigInt num(std::string(s_.substr(start, i_ - start)));
      BigInt den = 1;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected denominator");
        den = BigInt(std::string(s_.substr(start, i_ - start)));
        if (den == 0) fail("zero denominator");
      }
      BigRat q(num, den);
      q.canonicalize();
      base = MPoly(q);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      base = MPoly::var(s_.substr(start, i_ - start));
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (eat('^')) base = base.pow(integer_exp());
    return base;
  }
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- division

std::pair<MPoly, MPoly> divide_with_remainder(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {MPoly(), MPoly()};
  auto uv = union_vars(p.vars(), q.vars());
  std::vector<Term> qt;
  {
    std::vector<std::size_t> pos(q.vars().size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < q.vars().size(); ++i) {
      while (uv[j] != q.vars()[i]) ++j;
      pos[i] = j;
    }
    for (const auto& t : q.terms()) {
      Exponents e(uv.size(), 0);
      for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exp[i];
      qt.push_back({std::move(e), t.coef});
    }
  }
  std::map<Exponents, BigRat, TermOrder> work;
  {
    std::vector<std::size_t> pos(p.vars().size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      while (uv[j] != p.vars()[i]) ++j;
      pos[i] = j;
    }
    for (const auto& t : p.terms()) {
      Exponents e(uv.size(), 0);
      for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exp[i];
      work.emplace(std::move(e), t.coef);
    }
  }
  const Exponents& lq = qt.front().exp;
  const BigRat lc_inv = 1 / qt.front().coef;
  std::vector<Term> quot, rem;
  Exponents shift(uv.size());
  Exponents e(uv.size());
  while (!work.empty()) {
    auto it = work.begin();
    if (!exp_divides(lq, it->first)) {
      rem.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    BigRat c = it->second * lc_inv;
    for (std::size_t k = 0; k < uv.size(); ++k) shift[k] = it->first[k] - lq[k];
    quot.push_back({shift, c});
    work.erase(it);
    for (std::size_t m = 1; m < qt.size(); ++m) {
      for (std::size_t k = 0; k < uv.size(); ++k) e[k] = shift[k] + qt[m].exp[k];
      auto [jt, inserted] = work.try_emplace(e);
      jt->second -= c * qt[m].coef;
      if (jt->second == 0) work.erase(jt);
    }
  }
  return {MPoly::from_terms(uv, std::move(quot)), MPoly::from_terms(uv, std::move(rem))};
}

ExactDivisionError::ExactDivisionError(MPoly remainder)
    : std::runtime_error("not exactly divisible; remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
  auto [quot, rem] = divide_with_remainder(p, q);
  if (!rem.is_zero()) throw ExactDivisionError(std::move(rem));
  return quot;
}

// ---------------------------------------------------------------- elimination

MPoly determinant(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  MPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? t * (1 / prev.constant_term()) : divide_exact(t, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
  const std::uint32_t m = p.degree(v), n = q.degree(v);
  if (m == 0 || n == 0) throw EliminationError("not a bivariate elimination");
  auto pc = p.as_univariate(v);
  auto qc = q.as_univariate(v);
  const std::size_t N = m + n;
  std::vector<std::vector<MPoly>> S(N, std::vector<MPoly>(N));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) S[r][r + k] = pc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) S[n + r][r + k] = qc[n - k];
  return determinant(std::move(S));
}

MPoly substitute(const MPoly& p, Var v, const MPoly& value) { return p.substitute(v, value); }

RatFunc substitute(const MPoly& p, Var v, const RatFunc& value) { return p.substitute(v, value); }

ElementarySymmetric3 elementary_symmetric(const MPoly& x, const MPoly& y, const MPoly& z) {
  return {x + y + z, x * y + x * z + y * z, x * y * z};
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const MPoly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_term();
    den_ = MPoly(1);
    return;
  }
  BigRat lc = den_.leading_term().coef;
  if (lc != 1) {
    BigRat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  if (num_ == den_) {
    num_ = MPoly(1);
    den_ = MPoly(1);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc RatFunc::derivative(Var v) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(v));
  return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFunc RatFunc::cancel_factor(const MPoly& f) const {
  if (f.is_constant()) return *this;
  MPoly n = num_, d = den_;
  for (;;) {
    auto [qd, rd] = divide_with_remainder(d, f);
    if (!rd.is_zero()) break;
    auto [qn, rn] = divide_with_remainder(n, f);
    if (!rn.is_zero()) break;
    n = std::move(qn);
    d = std::move(qd);
    if (n.is_zero()) break;
  }
  return RatFunc(n, d);
}

bool RatFunc::as_polynomial(MPoly* out) const {
  auto [q, r] = divide_with_remainder(num_, den_);
  if (!r.is_zero()) return false;
  if (out) *out = std::move(q);
  return true;
}

std::string RatFunc::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace assoc
