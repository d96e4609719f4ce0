#include "zonotopal/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zonotopal {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<unsigned> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  return exps_.size() <=> other.exps_.size();
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "t" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void compositions(std::size_t n, unsigned d, std::size_t pos, std::vector<unsigned>& cur,
                  std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[pos] = e;
    compositions(n, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  compositions(n, d, 0, cur, out);
  return out;
}

std::vector<Monomial> monomials_upto(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto block = monomials_of_degree(n, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

mpz_class factorial_product(const Monomial& m) {
  mpz_class f = 1;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    mpz_class g;
    mpz_fac_ui(g.get_mpz_t(), m[i]);
    f *= g;
  }
  return f;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::linear_form(std::span<const Rat> x) {
  Poly p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p.add_term(Monomial::variable(x.size(), i), x[i]);
  return p;
}

Poly Poly::affine_form(std::span<const Rat> x, const Rat& lambda) {
  Poly p = linear_form(x);
  p.add_term(Monomial::one(x.size()), -lambda);
  return p;
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

int Poly::min_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

bool Poly::is_homogeneous() const { return degree() == min_degree(); }

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(std::max(nvars_, o.nvars_));
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (sgn(c) == 0) return Poly(nvars_);
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  std::vector<std::pair<Monomial, Rat>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [m, c] : sorted) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_one = m.degree() == 0;
    if (is_one) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

Poly apply_diff(const Poly& p, const Poly& q) {
  Poly r(q.nvars());
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      if (!a.divides(b)) continue;
      // d^a t^b = b!/(b-a)! t^(b-a)
      const Monomial rest = a.quotient_of(b);
      mpz_class falling = factorial_product(b) / factorial_product(rest);
      r.add_term(rest, ca * cb * Rat(falling));
    }
  return r;
}

Rat pairing(const Poly& p, const Poly& q) {
  Rat s;
  for (const auto& [a, ca] : p.terms()) {
    auto it = q.terms().find(a);
    if (it != q.terms().end()) s += ca * it->second * Rat(factorial_product(a));
  }
  return s;
}

Rat eval(const Poly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars() && !p.is_zero()) throw InputError("evaluation point dimension mismatch");
  // Powers are cached per variable.
  std::vector<std::vector<Rat>> powers(point.size(), std::vector<Rat>{Rat(1)});
  Rat s;
  for (const auto& [m, c] : p.terms()) {
    Rat term = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[m[i]];
    }
    s += term;
  }
  return s;
}

Poly partial_derivative(const Poly& p, std::size_t var) {
  return apply_diff(Poly::monomial(Monomial::variable(p.nvars(), var)), p);
}

Poly least_term(const Poly& f) {
  if (f.is_zero()) throw InputError("least term of the zero polynomial");
  return homogeneous_component(f, static_cast<unsigned>(f.min_degree()));
}

Poly homogeneous_component(const Poly& f, unsigned degree) {
  Poly r(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == degree) r.add_term(m, c);
  return r;
}

Poly product_over(std::span<const VecQ> vectors, std::span<const Rat> lambdas, bool use_lambda,
                  std::size_t nvars) {
  Poly r = Poly::constant(nvars, 1);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    r = r * (use_lambda ? Poly::affine_form(vectors[i], lambdas[i]) : Poly::linear_form(vectors[i]));
  return r;
}

VecQ coefficients(const Poly& f, const std::map<Monomial, std::size_t>& index) {
  VecQ v(index.size());
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw ConsistencyError("polynomial support exceeds the monomial range");
    v[it->second] = c;
  }
  return v;
}

std::map<Monomial, std::size_t> index_of(std::span<const Monomial> monomials) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
  return idx;
}

Poly from_coefficients(std::span<const Rat> coeffs, std::span<const Monomial> monomials) {
  Poly p(monomials.empty() ? 0 : monomials.front().nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(monomials[i], coeffs[i]);
  return p;
}

}  // namespace zonotopal
