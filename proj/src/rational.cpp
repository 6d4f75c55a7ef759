#include "gtpoly/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace gtpoly {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    return rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_half_integer(const Rat& q) {
  Rat r = q + q;  // 2q odd integer
  return r.get_den() == 1 && mpz_odd_p(r.get_num().get_mpz_t());
}

bool in_coset(const Rat& q, const Rat& offset, const Rat& step) {
  if (sgn(step) <= 0) throw std::invalid_argument("coset step must be positive");
  Rat t = (q - offset) / step;
  return t.get_den() == 1;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(v.size());
  Int content = 0;
  for (const Rat& q : v) {
    Int x = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    out.push_back(x);
  }
  if (content > 1)
    for (Int& x : out) x /= content;
  return out;
}

bool RatVecLess::operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string vec_str(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace gtpoly
