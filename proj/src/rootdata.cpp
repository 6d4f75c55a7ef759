#include "gtpoly/rootdata.hpp"

#include <stdexcept>

namespace gtpoly {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family: ") + c);
}

char family_char(Family f) { return static_cast<char>(f); }

LieType::LieType(Family f, int n) : family(f), rank(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (f == Family::D && n < 2) throw std::invalid_argument("type D needs rank >= 2");
}

int LieType::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
  }
  return 0;
}

Weight::Weight(LieType t, std::vector<Rat> e) : type(t), eps(std::move(e)) {
  if (static_cast<int>(eps.size()) != type.rank)
    throw std::invalid_argument("weight has wrong number of eps coefficients");
}

std::vector<std::vector<Rat>> positive_roots(LieType type) {
  const int n = type.rank;
  std::vector<std::vector<Rat>> roots;
  auto unit = [&](int dim, int i, int s) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = s;
    return v;
  };
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j) {
          std::vector<Rat> v(n + 1, Rat(0));
          v[i] = 1;
          v[j] = -1;
          roots.push_back(v);
        }
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<Rat> v(n, Rat(0));
          v[i] = 1;
          v[j] = -1;
          roots.push_back(v);
          v[j] = 1;
          roots.push_back(v);
        }
      if (type.family == Family::B)
        for (int i = 0; i < n; ++i) roots.push_back(unit(n, i, 1));
      if (type.family == Family::C)
        for (int i = 0; i < n; ++i) roots.push_back(unit(n, i, 2));
      break;
  }
  return roots;
}

namespace {

// <mu, alpha^vee> for a positive root given in eps coordinates. Long roots of
// B (eps_i +- eps_j) and all roots of A, C, D pair by the obvious dot-like
// rule; the short roots eps_i of B have coroot 2 eps_i.
Rat root_pairing(Family f, const std::vector<Rat>& mu_full, const std::vector<Rat>& alpha) {
  Rat dot(0);
  int nz = 0;
  for (size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] != 0) ++nz;
    dot += mu_full[k] * alpha[k];
  }
  if (f == Family::B && nz == 1) return 2 * dot;  // alpha = eps_i
  if (f == Family::C && nz == 1) return dot / 2;  // alpha = 2 eps_i, coroot eps_i
  return dot;
}

std::vector<Rat> full_coords(const Weight& w) {
  std::vector<Rat> v = w.eps;
  if (w.type.family == Family::A) v.push_back(Rat(0));
  return v;
}

}  // namespace

Rat pairing(const Weight& lambda, int i) {
  const int n = lambda.type.rank;
  if (i < 1 || i > n) throw std::invalid_argument("simple root index out of range");
  const auto& l = lambda.eps;
  switch (lambda.type.family) {
    case Family::A:
      return i < n ? Rat(l[i - 1] - l[i]) : Rat(l[n - 1]);
    case Family::B:
      return i < n ? Rat(l[i - 1] - l[i]) : Rat(2 * l[n - 1]);
    case Family::C:
      return i < n ? Rat(l[i - 1] - l[i]) : Rat(l[n - 1]);
    case Family::D:
      if (n == 1) throw std::invalid_argument("type D pairing needs rank >= 2");
      return i < n ? Rat(l[i - 1] - l[i]) : Rat(l[n - 2] + l[n - 1]);
  }
  throw std::logic_error("unreachable");
}

std::vector<Rat> all_pairings(const Weight& lambda) {
  std::vector<Rat> out;
  out.reserve(lambda.type.rank);
  for (int i = 1; i <= lambda.type.rank; ++i) out.push_back(pairing(lambda, i));
  return out;
}

Weight omega_to_epsilon(LieType type, const std::vector<Rat>& omega) {
  const int n = type.rank;
  if (static_cast<int>(omega.size()) != n)
    throw std::invalid_argument("omega coefficient list has wrong length");
  std::vector<Rat> eps(n, Rat(0));
  switch (type.family) {
    case Family::A:
    case Family::C:
      // omega_i = eps_1 + ... + eps_i
      for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) eps[j] += omega[i];
      break;
    case Family::B:
      for (int j = 0; j < n; ++j) {
        for (int i = j; i < n - 1; ++i) eps[j] += omega[i];
        eps[j] += omega[n - 1] / 2;
      }
      break;
    case Family::D: {
      if (n < 2) throw std::invalid_argument("type D needs rank >= 2");
      Rat half_sum = (omega[n - 2] + omega[n - 1]) / 2;
      for (int j = 0; j < n - 1; ++j) {
        for (int i = j; i < n - 2; ++i) eps[j] += omega[i];
        eps[j] += half_sum;
      }
      eps[n - 1] = (omega[n - 1] - omega[n - 2]) / 2;
      break;
    }
  }
  return Weight(type, eps);
}

std::vector<Rat> epsilon_to_omega(const Weight& lambda) { return all_pairings(lambda); }

bool is_dominant(const Weight& lambda) {
  for (const Rat& p : all_pairings(lambda))
    if (sgn(p) < 0) return false;
  return true;
}

bool is_dominant_integral(const Weight& lambda) {
  for (const Rat& p : all_pairings(lambda))
    if (sgn(p) < 0 || !is_integer(p)) return false;
  return true;
}

Weight rho(LieType type) {
  return omega_to_epsilon(type, std::vector<Rat>(type.rank, Rat(1)));
}

bool integrates_to_group(const Weight& lambda) {
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("integrates_to_group needs a dominant integral weight");
  const int n = lambda.type.rank;
  switch (lambda.type.family) {
    case Family::A:
    case Family::C:
      return true;
    case Family::B:
      return is_integer(pairing(lambda, n) / 2);
    case Family::D:
      return is_integer((pairing(lambda, n - 1) + pairing(lambda, n)) / 2);
  }
  return false;
}

bool predicted_lattice(const Weight& lambda) {
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("predicted_lattice needs a dominant integral weight");
  if (lambda.type.family == Family::D && lambda.type.rank < 4) return true;
  return integrates_to_group(lambda);
}

Int weyl_dim(const Weight& lambda) {
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("weyl_dim needs a dominant integral weight");
  const Weight r = rho(lambda.type);
  std::vector<Rat> lr = full_coords(lambda);
  const std::vector<Rat> rr = full_coords(r);
  for (size_t k = 0; k < lr.size(); ++k) lr[k] += rr[k];
  Rat prod(1);
  for (const auto& alpha : positive_roots(lambda.type))
    prod *= root_pairing(lambda.type.family, lr, alpha) /
            root_pairing(lambda.type.family, rr, alpha);
  if (!is_integer(prod)) throw std::logic_error("weyl dimension came out non-integral");
  return prod.get_num();
}

namespace {

// Simple-root support of a positive root, from the classical expansions.
// eps_i - eps_j uses alpha_i..alpha_{j-1}; the remaining roots of B, C reach
// alpha_n; in type D (alpha_n = eps_{n-1} + eps_n) the root eps_i + eps_n uses
// alpha_i..alpha_{n-2} and alpha_n, while eps_i + eps_j with j < n uses
// alpha_i..alpha_n.
std::set<int> root_support(Family f, int n, const std::vector<Rat>& alpha) {
  int i = -1, j = -1;
  for (int k = 0; k < static_cast<int>(alpha.size()); ++k)
    if (alpha[k] != 0) (i < 0 ? i : j) = k;
  std::set<int> s;
  auto range = [&](int lo, int hi) {
    for (int k = lo; k <= hi; ++k) s.insert(k);
  };
  ++i;  // 1-based
  if (j < 0) {            // eps_i or 2 eps_i (types B, C)
    range(i, n);
    return s;
  }
  ++j;
  if (alpha[j - 1] < 0) {  // eps_i - eps_j
    range(i, j - 1);
    return s;
  }
  switch (f) {             // eps_i + eps_j
    case Family::A: throw std::logic_error("unexpected root in type A");
    case Family::B:
    case Family::C: range(i, n); break;
    case Family::D:
      if (j == n) {
        range(i, n - 2);
        s.insert(n);
      } else {
        range(i, n);
      }
      break;
  }
  return s;
}

}  // namespace

Weight anticanonical_weight(LieType type, const std::set<int>& levi_simple_roots) {
  const int n = type.rank;
  for (int i : levi_simple_roots)
    if (i < 1 || i > n) throw std::invalid_argument("simple root index out of range");
  const int dim = type.family == Family::A ? n + 1 : n;
  std::vector<Rat> sum(dim, Rat(0));
  for (const auto& alpha : positive_roots(type)) {
    std::set<int> sup = root_support(type.family, n, alpha);
    bool in_levi = true;
    for (int i : sup)
      if (!levi_simple_roots.count(i)) { in_levi = false; break; }
    if (in_levi) continue;
    for (int k = 0; k < dim; ++k) sum[k] += alpha[k];
  }
  if (type.family == Family::A) {
    Rat last = sum[n];
    std::vector<Rat> eps(n);
    for (int k = 0; k < n; ++k) eps[k] = sum[k] - last;
    return Weight(type, eps);
  }
  return Weight(type, sum);
}

bool coefficient_group_member(const std::vector<Rat>& gens, const Rat& q) {
  // Reduce to integers: with d the common denominator, q in sum Z*gens iff
  // d*q is a multiple of gcd(d*gens).
  Int d = q.get_den();
  for (const Rat& g : gens) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), g.get_den().get_mpz_t());
  Int g(0);
  for (const Rat& gen : gens) {
    Int x = gen.get_num() * (d / gen.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  Int b = q.get_num() * (d / q.get_den());
  if (g == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t()) != 0;
}

bool coefficient_group_member(const Weight& lambda, const Rat& q) {
  return coefficient_group_member(lambda.eps, q);
}

}  // namespace gtpoly
