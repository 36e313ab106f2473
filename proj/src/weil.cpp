#include "freyrep/weil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "freyrep/errors.hpp"

namespace freyrep {
namespace {

using QPoly = std::vector<Rational>;  // lowest degree first

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly derivative(const QPoly& f) {
  QPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) {
    out.push_back(f[i] * static_cast<long>(i));
  }
  trim(out);
  return out;
}

// Quotient and remainder of f by g (g nonzero).
std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
  const int dg = degree(g);
  QPoly q(f.size() > g.size() ? f.size() - g.size() + 1 : 1, Rational(0));
  while (degree(f) >= dg) {
    const int shift = degree(f) - dg;
    const Rational factor = f.back() / g.back();
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dg; ++i) {
      f[static_cast<std::size_t>(i + shift)] -= factor * g[static_cast<std::size_t>(i)];
    }
    f.pop_back();
    trim(f);
  }
  trim(q);
  return {q, f};
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign(const Rational& q) { return sgn(q); }

// Sign of f(+-sqrt(n)), exactly: f(x) = A + B x after reducing x^2 = n.
int sign_at_root(const QPoly& f, const Integer& n, bool negative) {
  Rational a = 0, b = 0;
  Integer power = 1;  // n^(i/2)
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2 == 0) {
      if (i > 0) power *= n;
      a += f[i] * power;
    } else {
      b += f[i] * power;
    }
  }
  if (negative) b = -b;
  const int sa = sign(a), sb = sign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a * a;
  const Rational rhs = b * b * n;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

unsigned sign_changes(const std::vector<QPoly>& chain, const Integer& n,
                      bool negative) {
  unsigned changes = 0;
  int last = 0;
  for (const QPoly& f : chain) {
    const int s = sign_at_root(f, n, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double horner(const std::vector<double>& f, double x) {
  double acc = 0.0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& f) {
  std::vector<double> out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<double>(i));
  return out;
}

// Approximate real roots of f inside [lo, hi], found by bisection between
// consecutive critical points. Touching (even-multiplicity) roots may be
// missed; callers only use the result to narrow a search window.
std::vector<double> real_roots_in(const std::vector<double>& f, double lo, double hi) {
  std::vector<double> out;
  if (f.size() < 2) return out;
  if (f.size() == 2) {
    const double x = -f[0] / f[1];
    if (x >= lo && x <= hi) out.push_back(x);
    return out;
  }
  std::vector<double> cuts{lo};
  for (double c : real_roots_in(derivative(f), lo, hi)) cuts.push_back(c);
  cuts.push_back(hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    double fa = horner(f, a), fb = horner(f, b);
    if (fa == 0.0) {
      if (out.empty() || out.back() != a) out.push_back(a);
      continue;
    }
    if ((fa < 0) == (fb < 0)) continue;
    for (int it = 0; it < 200 && b - a > 0; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = horner(f, m);
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer weil_radius_sq(std::uint64_t p) { return Integer(static_cast<unsigned long>(4 * p)); }

void check_request(std::uint64_t p, unsigned d, const EnumerationOptions& opts) {
  if (!is_prime(p)) {
    throw PreconditionError("weil enumeration: p = " + std::to_string(p) +
                            " is not prime");
  }
  if (d == 0) throw PreconditionError("weil enumeration: degree must be >= 1");
  if (d > opts.degree_cap) {
    Integer box = 1;
    for (unsigned k = 1; k <= d; ++k) box *= 2 * symmetric_function_bound(p, d, k) + 1;
    throw CapExceeded("weil enumeration: degree " + std::to_string(d) +
                      " exceeds cap " + std::to_string(opts.degree_cap) +
                      "; the coefficient box alone has " + box.get_str() +
                      " points before pruning");
  }
  if (opts.mode == RootBound::AbsoluteValue) {
    Integer box = 1;
    for (unsigned k = 1; k <= d; ++k) box *= 2 * symmetric_function_bound(p, d, k) + 1;
    if (box > Integer(static_cast<unsigned long>(opts.max_box))) {
      throw CapExceeded("weil enumeration: absolute-value mode would visit " +
                        box.get_str() + " coefficient vectors (limit " +
                        std::to_string(opts.max_box) + ")");
    }
  }
}

class Enumerator {
 public:
  Enumerator(std::uint64_t p, unsigned d, const EnumerationOptions& opts,
             const std::function<void(const IntegerPolynomial&)>& visit)
      : d_(d), radius_sq_(weil_radius_sq(p)), opts_(opts), visit_(visit),
        top_(d + 1, Integer(0)) {
    top_[0] = 1;
    for (unsigned k = 1; k <= d; ++k) bounds_.push_back(symmetric_function_bound(p, d, k));
  }

  void run() { descend(1); }

 private:
  // top_[i] is the coefficient of x^(d - i); |top_[i]| = |e_i|.
  void descend(unsigned j) {
    const Integer& bound = bounds_[j - 1];
    Integer lo = -bound, hi = bound;
    if (opts_.mode == RootBound::TotallyReal) narrow_window(j, lo, hi);
    for (Integer a = lo; a <= hi; ++a) {
      top_[j] = a;
      if (opts_.mode == RootBound::TotallyReal && !derivative_admissible(j)) continue;
      if (j == d_) {
        std::vector<Integer> ascending(top_.rbegin(), top_.rend());
        visit_(IntegerPolynomial(std::move(ascending)));
      } else {
        descend(j + 1);
      }
    }
  }

  // Floating-point pre-filter for top_[j]. With q = R + a the (d - j)-th
  // derivative of m, an admissible a must make q alternate in sign at the
  // critical points of R and have the right signs at +-s. The resulting
  // window is widened by a safety margin; every survivor is still certified
  // exactly by derivative_admissible.
  void narrow_window(unsigned j, Integer& lo, Integer& hi) const {
    std::vector<double> r(j + 1, 0.0);
    for (unsigned i = 0; i < j; ++i) {
      r[j - i] = Integer(binomial(d_ - i, j - i) * top_[i]).get_d();
    }
    const double s = std::sqrt(radius_sq_.get_d());
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    auto require_sign = [&](double x, int wanted) {
      // wanted * (R(x) + a) >= 0
      const double v = horner(r, x);
      if (wanted > 0) {
        lower = std::max(lower, -v);
      } else {
        upper = std::min(upper, -v);
      }
    };
    require_sign(s, 1);
    require_sign(-s, j % 2 == 0 ? 1 : -1);
    const std::vector<double> crit = real_roots_in(derivative(r), -s, s);
    for (std::size_t i = 0; i < crit.size(); ++i) {
      // rightmost critical point is a local minimum of q, then alternate
      const std::size_t from_right = crit.size() - 1 - i;
      require_sign(crit[i], from_right % 2 == 0 ? -1 : 1);
    }
    constexpr double kMargin = 0.5;
    const double scale = 1e-9 * (1.0 + std::abs(lower) + std::abs(upper));
    if (std::isfinite(lower)) {
      const Integer l(std::floor(lower - kMargin - scale));
      if (l > lo) lo = l;
    }
    if (std::isfinite(upper)) {
      const Integer h(std::ceil(upper + kMargin + scale));
      if (h < hi) hi = h;
    }
  }

  // The (d - j)-th derivative of m depends only on top_[0..j]; by Rolle its
  // roots are real and in the interval whenever those of m are.
  bool derivative_admissible(unsigned j) const {
    std::vector<Integer> q(j + 1);
    for (unsigned i = 0; i <= j; ++i) q[j - i] = binomial(d_ - i, j - i) * top_[i];
    QPoly qq(q.begin(), q.end());
    // cheap necessary test: positive at +s, sign (-1)^j at -s (or zero)
    if (sign_at_root(qq, radius_sq_, false) < 0) return false;
    const int at_minus = sign_at_root(qq, radius_sq_, true);
    if (at_minus != 0 && at_minus != (j % 2 == 0 ? 1 : -1)) return false;
    return all_roots_real_in(q, radius_sq_);
  }

  unsigned d_;
  Integer radius_sq_;
  const EnumerationOptions& opts_;
  const std::function<void(const IntegerPolynomial&)>& visit_;
  std::vector<Integer> top_;
  std::vector<Integer> bounds_;
};

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2 || coeffs_.back() != 1) {
    throw PreconditionError("IntegerPolynomial: must be monic of degree >= 1");
  }
}

Integer IntegerPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const IntegerPolynomial& poly) {
  std::ostringstream os;
  bool first = true;
  const auto& c = poly.coefficients();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Integer& a = c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool all_roots_real_in(const std::vector<Integer>& coeffs, const Integer& radius_sq) {
  QPoly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (degree(f) < 1) {
    throw PreconditionError("all_roots_real_in: polynomial must have degree >= 1");
  }
  if (radius_sq < 0) throw PreconditionError("all_roots_real_in: negative radius");

  // squarefree part: same distinct roots, each simple
  QPoly g = divmod(f, poly_gcd(f, derivative(f))).first;
  const int distinct = degree(g);

  Integer root;
  const bool rational_endpoint =
      mpz_root(root.get_mpz_t(), radius_sq.get_mpz_t(), 2) != 0;
  int found = 0;
  if (rational_endpoint) {
    for (const Integer& e : {root, Integer(-root)}) {
      if (e == 0 && found > 0) break;
      const QPoly linear{Rational(-e), Rational(1)};
      auto [q, r] = divmod(g, linear);
      if (r.empty()) {
        g = std::move(q);
        ++found;
      }
    }
  } else if (sign_at_root(g, radius_sq, false) == 0) {
    // conjugate endpoints are roots together
    const QPoly quadratic{Rational(-radius_sq), Rational(0), Rational(1)};
    g = divmod(g, quadratic).first;
    found += 2;
  }
  if (degree(g) >= 1) {
    std::vector<QPoly> chain{g, derivative(g)};
    while (!chain.back().empty() && degree(chain.back()) >= 1) {
      QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
      for (Rational& c : r) c = -c;
      if (r.empty()) break;
      chain.push_back(std::move(r));
    }
    found += static_cast<int>(sign_changes(chain, radius_sq, true)) -
             static_cast<int>(sign_changes(chain, radius_sq, false));
  }
  return found == distinct;
}

Integer symmetric_function_bound(std::uint64_t p, unsigned d, unsigned k) {
  const Integer n = weil_radius_sq(p);
  const Integer c = binomial(d, k);
  Integer npow;
  if (k % 2 == 0) {
    mpz_pow_ui(npow.get_mpz_t(), n.get_mpz_t(), k / 2);
    return c * npow;
  }
  mpz_pow_ui(npow.get_mpz_t(), n.get_mpz_t(), k);
  const Integer sq = c * c * npow;
  Integer out;
  mpz_sqrt(out.get_mpz_t(), sq.get_mpz_t());
  return out;
}

void for_each_trace_poly(std::uint64_t p, unsigned d,
                         const EnumerationOptions& opts,
                         const std::function<void(const IntegerPolynomial&)>& visit) {
  check_request(p, d, opts);
  Enumerator(p, d, opts, visit).run();
}

std::vector<IntegerPolynomial> enumerate_trace_polys(std::uint64_t p, unsigned d,
                                                     const EnumerationOptions& opts) {
  std::vector<IntegerPolynomial> out;
  for_each_trace_poly(p, d, opts,
                      [&](const IntegerPolynomial& m) { out.push_back(m); });
  return out;
}

std::map<unsigned, ExclusionBound> dimension_growth_table(
    std::uint64_t p, unsigned d_max, const EnumerationOptions& opts) {
  check_request(p, d_max, opts);
  const Integer shift(static_cast<unsigned long>(p + 1));
  std::map<unsigned, ExclusionBound> table;
  std::optional<ExclusionBound> best;
  for (unsigned k = 1; k <= d_max; ++k) {
    for_each_trace_poly(p, k, opts, [&](const IntegerPolynomial& m) {
      const Integer product = m(shift) * m(Integer(-shift));
      if (product == 0) {
        // a root at +-(p+1) lies outside the Weil disc, so m is reducible and
        // its other factors are swept at lower degree
        if (opts.mode == RootBound::AbsoluteValue) return;
        throw Error("excluded_prime_bound: " + to_string(m) +
                    " vanishes at +-(p+1)");
      }
      if (abs(product) < 2) return;
      const Integer prime = largest_prime_factor(product);
      if (!best || prime > best->bound) {
        best = ExclusionBound{p, k, prime, m, product};
      }
    });
    if (!best) throw Error("excluded_prime_bound: no candidate has a prime divisor");
    ExclusionBound row = *best;
    row.degree = k;
    table.emplace(k, std::move(row));
  }
  return table;
}

ExclusionBound excluded_prime_bound(std::uint64_t p, unsigned d,
                                    const EnumerationOptions& opts) {
  return dimension_growth_table(p, d, opts).at(d);
}

}  // namespace freyrep
