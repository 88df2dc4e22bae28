#include <gentle/polynomial.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>

namespace gentle {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly to_rat(const IntegerPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational s = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    trim(a);
  }
  return a;
}

IntegerPolynomial primitive(const RatPoly& p) {
  if (p.empty()) return {};
  Integer den = 1;
  for (const auto& c : p) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p) {
    Rational v = c * den;
    out.push_back(v.get_num());
    g = gcd(g, v.get_num());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& c : out) c /= g;
  return IntegerPolynomial(std::move(out));
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntegerPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::constant(const Integer& c) { return IntegerPolynomial({c}); }

IntegerPolynomial IntegerPolynomial::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::binomial(int n, const Integer& c) {
  return monomial(1, n) - constant(c);
}

Integer IntegerPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  std::vector<Integer> r = c_;
  for (auto& c : r) c = -c;
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const { return *this + (-o); }

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::pow(int e) const {
  IntegerPolynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  std::vector<Integer> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntegerPolynomial(std::move(r));
}

bool IntegerPolynomial::divide_exact(const IntegerPolynomial& d, IntegerPolynomial& q) const {
  if (d.is_zero()) return false;
  if (is_zero()) {
    q = {};
    return true;
  }
  if (degree() < d.degree()) return false;
  std::vector<Integer> rem = c_;
  std::vector<Integer> quot(c_.size() - d.c_.size() + 1, Integer(0));
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k) + d.c_.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t())) return false;
    Integer s = top / d.leading();
    quot[static_cast<std::size_t>(k)] = s;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem[static_cast<std::size_t>(k) + i] -= s * d.c_[i];
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) return false;
  q = IntegerPolynomial(std::move(quot));
  return true;
}

std::complex<long double> IntegerPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<long double>(it->get_d());
  return acc;
}

Integer IntegerPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntegerPolynomial poly_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive(x);
}

IntegerPolynomial squarefree_part(const IntegerPolynomial& p) {
  if (p.degree() <= 0) return primitive(to_rat(p));
  IntegerPolynomial g = poly_gcd(p, p.derivative());
  IntegerPolynomial pp = primitive(to_rat(p));
  IntegerPolynomial q;
  if (!pp.divide_exact(g, q)) {
    // Primitive polynomials: Gauss's lemma guarantees integral division.
    return pp;
  }
  return q;
}

IntegerPolynomial cyclotomic(int n) {
  IntegerPolynomial p = IntegerPolynomial::binomial(n, 1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntegerPolynomial q;
    p.divide_exact(cyclotomic(d), q);
    p = q;
  }
  return p;
}

namespace {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

bool is_cyclotomic_product(const IntegerPolynomial& p) {
  if (p.is_zero() || sgn(p.coeff(0)) == 0) return false;
  IntegerPolynomial rest = squarefree_part(p);
  const int d = rest.degree();
  // phi(n) >= sqrt(n/2), so every relevant order is below 2 d^2 + 2.
  for (int n = 1; rest.degree() > 0 && n <= 2 * d * d + 2; ++n) {
    if (euler_phi(n) > rest.degree()) continue;
    IntegerPolynomial q;
    if (rest.divide_exact(cyclotomic(n), q)) rest = q;
  }
  return rest.degree() == 0;
}

std::vector<std::complex<long double>> distinct_roots(const IntegerPolynomial& p) {
  using cld = std::complex<long double>;
  IntegerPolynomial s = squarefree_part(p);
  const int n = s.degree();
  std::vector<cld> roots;
  if (n <= 0) return roots;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  const double lead = s.leading().get_d();
  for (int i = 0; i < n; ++i) companion(0, i) = -s.coeff(n - 1 - i).get_d() / lead;
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  IntegerPolynomial ds = s.derivative();
  for (int i = 0; i < n; ++i) {
    std::complex<double> z0 = solver.eigenvalues()[i];
    cld z(z0.real(), z0.imag());
    for (int it = 0; it < 60; ++it) {
      cld f = s.eval(z);
      cld df = ds.eval(z);
      if (std::abs(df) == 0.0L) break;
      cld step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1.0L, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](const cld& a, const cld& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace gentle
