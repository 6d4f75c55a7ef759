#include "gtpoly/string_d.hpp"

#include <stdexcept>

namespace gtpoly {

StringPointD::StringPointD(int n, std::vector<Rat> c) : rank(n), coords(std::move(c)) {
  if (n < 2) throw std::invalid_argument("string points need rank >= 2");
  if (static_cast<int>(coords.size()) != length(n))
    throw std::invalid_argument("string point has wrong length for its rank");
}

StringPointD StringPointD::zero(int n) {
  return StringPointD(n, std::vector<Rat>(length(n), Rat(0)));
}

int StringPointD::index(int i, int j) const {
  const int n = rank;
  if (i < 1 || i > n - 1 || j < i || j > 2 * n - 1 - i) return -1;
  int off = 0;
  for (int r = n - 1; r > i; --r) off += 2 * (n - r);
  return off + (j - i);
}

Rat StringPointD::a(int i, int j) const {
  int k = index(i, j);
  return k < 0 ? Rat(0) : coords[k];
}

Rat StringPointD::bar(int i, int j) const { return a(i, 2 * rank - 1 - j); }

bool string_membership(const std::vector<Rat>& lw, const StringPointD& pt) {
  const int n = pt.rank;
  if (static_cast<int>(lw.size()) != n)
    throw std::invalid_argument("lambda has wrong length for the string polytope");
  auto A = [&](int i, int j) { return pt.a(i, j); };
  auto B = [&](int i, int j) { return pt.bar(i, j); };

  // chain conditions per row
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i; j <= n - 3; ++j)
      if (A(i, j) < A(i, j + 1)) return false;
    if (A(i, n - 2) < A(i, n - 1) || A(i, n - 2) < B(i, n - 1)) return false;
    if (A(i, n - 1) < B(i, n - 2) || B(i, n - 1) < B(i, n - 2)) return false;
    for (int j = n - 2; j >= i + 1; --j)
      if (B(i, j) < B(i, j - 1)) return false;
    if (sgn(B(i, i)) < 0) return false;
  }
  if (sgn(A(n - 1, n - 1)) < 0 || sgn(B(n - 1, n - 1)) < 0) return false;

  // upper bounds with their telescoping sums
  auto S = [&](int k, int j) -> Rat {
    return A(k, j - 1) - 2 * A(k, j) + A(k, j + 1) + B(k, j + 1) - 2 * B(k, j) + B(k, j - 1);
  };
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 2; ++j) {
      Rat tail(0);
      for (int k = 1; k < i; ++k) tail += S(k, j);
      if (A(i, j) > lw[j - 1] + A(i, j + 1) + B(i, j + 1) - 2 * B(i, j) + B(i, j - 1) + tail)
        return false;
      if (B(i, j) > lw[j - 1] + B(i, j - 1) + tail) return false;
    }
    Rat tail3(0), tail4(0);
    for (int k = 1; k < i; ++k) {
      tail3 += A(k, n - 2) - 2 * A(k, n - 1) + B(k, n - 2);
      tail4 += A(k, n - 2) - 2 * B(k, n - 1) + B(k, n - 2);
    }
    if (A(i, n - 1) > lw[n - 2] + B(i, n - 2) + tail3) return false;
    if (B(i, n - 1) > lw[n - 1] + B(i, n - 2) + tail4) return false;
  }
  return true;
}

TweakedPattern phi_tilde(const Weight& lambda, const StringPointD& pt) {
  if (lambda.type.family != Family::D)
    throw std::invalid_argument("expected a type D weight");
  const int n = lambda.type.rank;
  if (pt.rank != n) throw std::invalid_argument("string point rank does not match the weight");
  TweakedPattern t = TweakedPattern::zero(n);
  auto Y = [&](int i, int j) -> Rat {
    return i == 1 ? lambda.eps[j - 1] : t.yv(i, j);
  };
  for (int i = 2; i <= n; ++i) {
    for (int j = i; j <= n - 1; ++j)
      t.yv(i, j) =
          Y(i - 1, j) + pt.a(i - 1, j - 1) - pt.a(i - 1, j) - pt.bar(i - 1, j) + pt.bar(i - 1, j - 1);
    t.yv(i, n) = Y(i - 1, n) + pt.a(i - 1, n - 1) - pt.bar(i - 1, n - 1);
  }
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j)
      t.zv(i, j) = Y(i, j) + pt.bar(i, j - 1) - pt.bar(i, j);
  for (int i = 1; i <= n - 2; ++i) {
    t.up(i) = Y(i, n) + pt.a(i, n - 1) - pt.bar(i, n - 2);
    t.dn(i) = Y(i, n) + pt.a(i, n - 2) - pt.bar(i, n - 1);
  }
  t.up(n - 1) = Y(n - 1, n) + pt.a(n - 1, n - 1);
  return t;
}

StringPointD phi_tilde_inverse(const Weight& lambda, const TweakedPattern& t) {
  if (lambda.type.family != Family::D)
    throw std::invalid_argument("expected a type D weight");
  const int n = lambda.type.rank;
  if (t.rank != n) throw std::invalid_argument("pattern rank does not match the weight");
  auto Y = [&](int i, int j) -> const Rat& {
    return i == 1 ? lambda.eps[j - 1] : t.yv(i, j);
  };
  for (int i = 1; i <= n - 2; ++i)
    if (Y(i, n - 1) - Y(i + 1, n - 1) != t.up(i) - t.dn(i))
      throw std::invalid_argument("pattern violates the subspace equations");

  StringPointD out = StringPointD::zero(n);
  auto set = [&](int i, int j, const Rat& v) {
    int k = out.index(i, j);
    if (k < 0) throw std::logic_error("inverse wrote outside the string coordinate range");
    out.coords[k] = v;
  };
  for (int i = 1; i <= n - 1; ++i) {
    // bars along the row, from the ordinary z cells
    Rat prev_bar(0);  // bar(i, i-1) reads as zero
    for (int j = i; j <= n - 2; ++j) {
      Rat b = Y(i, j) + prev_bar - t.zv(i, j);
      set(i, 2 * n - 1 - j, b);
      prev_bar = b;
    }
    const Rat bar_n2 = prev_bar;  // bar(i, n-2)
    Rat a_n1 = (i <= n - 2) ? Rat(t.up(i) - Y(i, n) + bar_n2) : Rat(t.up(n - 1) - Y(n - 1, n));
    set(i, n - 1, a_n1);
    Rat bar_n1 = Y(i, n) + a_n1 - Y(i + 1, n);
    set(i, n, bar_n1);
    if (i <= n - 2) {
      Rat a_prev = t.dn(i) - Y(i, n) + bar_n1;
      if (n - 2 >= i) set(i, n - 2, a_prev);
      for (int j = n - 3; j >= i; --j) {
        Rat b_j1 = out.bar(i, j + 1);
        Rat b_j = out.bar(i, j);
        Rat a_j = Y(i + 1, j + 1) - Y(i, j + 1) + a_prev + b_j1 - b_j;
        set(i, j, a_j);
        a_prev = a_j;
      }
    }
  }
  return out;
}

bool is_lattice_string_point(const Weight&, const StringPointD& a) {
  for (const Rat& v : a.coords)
    if (!is_integer(v)) return false;
  return true;
}

}  // namespace gtpoly
