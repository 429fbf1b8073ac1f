// Bounded conjugacy search for B_3. Shares nothing with the Z/2 * Z/3
// normal form: equality of braids is decided by the reduced Burau matrix,
// which is faithful on three strands.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>

#include "braidcalc/b3.hpp"
#include "braidcalc/closure.hpp"
#include "braidcalc/errors.hpp"

namespace braidcalc::b3 {

namespace {

using boost::multiprecision::cpp_rational;

cpp_rational evaluate(const LaurentPoly& p, const cpp_rational& t) {
  cpp_rational value = 0;
  cpp_rational power = 1;
  const int low = p.low_degree();
  if (low >= 0) {
    for (int k = 0; k < low; ++k) power *= t;
  } else {
    for (int k = 0; k < -low; ++k) power /= t;
  }
  for (std::int64_t c : p.coefficients()) {
    value += cpp_rational(c) * power;
    power *= t;
  }
  return value;
}

// Integer matrices mod m, images of s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]].
struct Mod2x2 {
  std::array<int, 4> a;
  friend bool operator==(const Mod2x2&, const Mod2x2&) = default;
};

Mod2x2 mul(const Mod2x2& x, const Mod2x2& y, int m) {
  auto r = [m](long v) { return static_cast<int>(((v % m) + m) % m); };
  return {{r(long(x.a[0]) * y.a[0] + long(x.a[1]) * y.a[2]), r(long(x.a[0]) * y.a[1] + long(x.a[1]) * y.a[3]),
           r(long(x.a[2]) * y.a[0] + long(x.a[3]) * y.a[2]), r(long(x.a[2]) * y.a[1] + long(x.a[3]) * y.a[3])}};
}

Mod2x2 modular_image(const BraidWord& w, int m) {
  const Mod2x2 s1{{1, 1, 0, 1}};
  const Mod2x2 s1_inv{{1, m - 1, 0, 1}};
  const Mod2x2 s2{{1, 0, m - 1, 1}};
  const Mod2x2 s2_inv{{1, 0, 1, 1}};
  Mod2x2 acc{{1, 0, 0, 1}};
  for (const auto& l : w.letters()) {
    const bool pos = l.sign() == Sign::Positive;
    acc = mul(acc, l.index() == 1 ? (pos ? s1 : s1_inv) : (pos ? s2 : s2_inv), m);
  }
  return acc;
}

bool conjugate_mod(const Mod2x2& x, const Mod2x2& y, int m) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          if (((a * d - b * c) % m + m) % m != 1) continue;
          const Mod2x2 g{{a, b, c, d}};
          if (mul(g, x, m) == mul(y, g, m)) return true;
        }
  return false;
}

// Conjugacy in SL(2, Z) under s1 -> [[1,1],[0,1]], s2 -> [[1,0],[-1,1]].
// The kernel from B_3 is <Delta^4>, of exponent sum 12, so together with
// the exponent sum this decides conjugacy in B_3. A = [[a,b],[c,d]] with
// trace t gives the form c x^2 + (d-a) xy - b y^2 of discriminant t^2 - 4;
// for fixed t, A ~ A' exactly when the forms are properly equivalent.
using boost::multiprecision::cpp_int;

struct IntMatrix {
  cpp_int a, b, c, d;
};

IntMatrix integral_image(const BraidWord& w) {
  IntMatrix m{1, 0, 0, 1};
  for (const auto& l : w.letters()) {
    const int s = to_int(l.sign());
    const IntMatrix g = l.index() == 1 ? IntMatrix{1, s, 0, 1} : IntMatrix{1, 0, -s, 1};
    m = {m.a * g.a + m.b * g.c, m.a * g.b + m.b * g.d, m.c * g.a + m.d * g.c, m.c * g.b + m.d * g.d};
  }
  return m;
}

struct Form {
  cpp_int a, b, c;
  friend bool operator==(const Form&, const Form&) = default;
};

cpp_int floor_div(const cpp_int& n, const cpp_int& d) {
  cpp_int q = n / d;
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

// b moved to the representative of b mod 2|a| in [lo, lo + 2|a|), c refit.
Form shift_b(const Form& f, const cpp_int& lo, const cpp_int& disc) {
  const cpp_int two_a = 2 * abs(f.a);
  const cpp_int b = f.b - two_a * floor_div(f.b - lo, two_a);
  return {f.a, b, (b * b - disc) / (4 * f.a)};
}

// Unique Gauss-reduced form in the class of a definite form; the sign of
// the form is part of the class.
Form reduce_definite(Form f) {
  const cpp_int disc = f.b * f.b - 4 * f.a * f.c;
  for (;;) {
    f = shift_b(f, -abs(f.a) + 1, disc);  // b in (-|a|, |a|]
    if (abs(f.a) > abs(f.c)) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

struct Indefinite {
  cpp_int disc;
  cpp_int root;  // floor(sqrt(disc)); disc is never a square here

  Form normalize(const Form& f) const {
    if (f.a * f.a > disc) return shift_b(f, -abs(f.a) + 1, disc);
    return shift_b(f, root + 1 - 2 * abs(f.a), disc);
  }
  Form rho(const Form& f) const { return normalize({f.c, -f.b, f.a}); }
  bool reduced(const Form& f) const {
    const cpp_int two_a = 2 * abs(f.a);
    return f.b <= root && f.b + two_a >= root + 1 && two_a - f.b <= root;
  }
  Form reduce(Form f) const {
    while (!reduced(f)) f = rho(f);
    return f;
  }
  bool equivalent(const Form& f, const Form& g) const {
    const Form start = reduce(f);
    const Form target = reduce(g);
    Form cur = start;
    do {
      if (cur == target) return true;
      cur = rho(cur);
    } while (cur != start);
    return false;
  }
};

bool conjugate_in_sl2z(const IntMatrix& x, const IntMatrix& y) {
  const cpp_int t = x.a + x.d;
  if (t != y.a + y.d) return false;
  const Form fx{x.c, x.d - x.a, -x.b};
  const Form fy{y.c, y.d - y.a, -y.b};
  const cpp_int disc = t * t - 4;
  if (disc < 0) return reduce_definite(fx) == reduce_definite(fy);
  if (disc == 0) {
    // +-(unipotent): the form is m (px + qy)^2, classified by m.
    auto content = [](const Form& f) -> cpp_int {
      const cpp_int g = gcd(abs(f.a), abs(f.c));
      return f.a != 0 ? (f.a > 0 ? g : -g) : (f.c > 0 ? g : -g);
    };
    return content(fx) == content(fy);
  }
  const Indefinite ind{disc, sqrt(disc)};
  return ind.equivalent(fx, fy);
}

constexpr std::array<int, 4> kModuli = {5, 7, 8, 9};

std::array<cpp_rational, 5> sample_points() {
  return {cpp_rational(2), cpp_rational(3), cpp_rational(-2), cpp_rational(1, 2), cpp_rational(5, 3)};
}

std::optional<std::string> invariant_witness(const BraidWord& lhs, const BraidWord& rhs, Battery batteries) {
  if (has(batteries, Battery::ExponentSum)) {
    const int e1 = exponent_sum(lhs);
    const int e2 = exponent_sum(rhs);
    if (e1 != e2) return "exponent sum " + std::to_string(e1) + " != " + std::to_string(e2);
  }
  if (has(batteries, Battery::BurauCharPoly)) {
    // The determinant is (t^2)^e, so the trace carries the rest of the
    // characteristic polynomial.
    const LaurentPoly tr1 = reduced_burau(lhs).trace();
    const LaurentPoly tr2 = reduced_burau(rhs).trace();
    for (const auto& t : sample_points()) {
      if (evaluate(tr1, t) != evaluate(tr2, t)) {
        return "Burau characteristic polynomial differs at t=" + t.str();
      }
    }
  }
  if (has(batteries, Battery::ModularImage)) {
    for (int m : kModuli) {
      if (!conjugate_mod(modular_image(lhs, m), modular_image(rhs, m), m)) {
        return "images not conjugate in SL(2,Z/" + std::to_string(m) + ")";
      }
    }
  }
  if (has(batteries, Battery::IntegralImage)) {
    if (!conjugate_in_sl2z(integral_image(lhs), integral_image(rhs))) return "images not conjugate in SL(2,Z)";
  }
  return std::nullopt;
}

struct Search {
  const LaurentMatrix& lhs;
  const LaurentMatrix& rhs;
  int bound;
  std::vector<Letter> path;
  std::optional<std::vector<Letter>> found;

  // Depth-first over freely reduced words in a fixed letter order; the
  // first hit at the smallest length wins because lengths are tried in
  // increasing order by the caller.
  void run(const LaurentMatrix& g, int remaining) {
    if (found) return;
    if (remaining == 0) {
      if (g * lhs == rhs * g) found = path;
      return;
    }
    for (int idx : {1, 2}) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        const Letter l(idx, s);
        if (!path.empty() && path.back().cancels(l)) continue;
        path.push_back(l);
        run(g * reduced_burau(l, 3), remaining - 1);
        path.pop_back();
        if (found) return;
      }
    }
  }
};

}  // namespace

OracleResult brute_force_conjugacy_oracle(const BraidWord& lhs, const BraidWord& rhs, int conjugator_bound,
                                          Battery batteries) {
  if (lhs.strands() != 3) throw WrongStrandCount(3, lhs.strands());
  if (rhs.strands() != 3) throw WrongStrandCount(3, rhs.strands());
  if (auto witness = invariant_witness(lhs, rhs, batteries)) return NotConjugate{*witness};

  const LaurentMatrix m1 = reduced_burau(lhs);
  const LaurentMatrix m2 = reduced_burau(rhs);
  for (int len = 0; len <= conjugator_bound; ++len) {
    Search search{m1, m2, len, {}, std::nullopt};
    search.run(LaurentMatrix::identity(2), len);
    if (search.found) return Conjugate{BraidWord(3, *search.found)};
  }
  return Unresolved{};
}

}  // namespace braidcalc::b3
