#include "virtstring/u_poly.hpp"

#include <cstdlib>

namespace vstr {

IntPoly u(const VirtualString& s) {
  IntPoly p;
  for (int n : n_indices(s))
    if (n != 0) p.add_term(std::abs(n), n > 0 ? 1 : -1);
  return p;
}

long long u_k(const VirtualString& s, int k) {
  if (k < 1) throw PreconditionError("u_k needs k >= 1");
  return u(s).coeff(k);
}

IntPoly higher_u(const VirtualString& s, const std::vector<int>& rs) {
  VirtualString cur = s;
  for (int r : rs) cur = covering(cur, r);
  return u(cur);
}

std::pair<IntPoly, IntPoly> u_open(const OpenString& mu) {
  IntPoly up, um;
  auto n = n_indices(mu);
  for (int e = 0; e < mu.rank(); ++e) {
    if (n[e] == 0) continue;
    const bool pos = is_positive_arrow(mu, e);
    // u+_k counts arr+ with n=k minus arr- with n=-k
    if (n[e] > 0) (pos ? up : um).add_term(n[e], 1);
    else (pos ? um : up).add_term(-n[e], -1);
  }
  return {up, um};
}

VirtualString realize_u(const IntPoly& p) {
  if (p.value_at_zero() != 0) throw PreconditionError("u(0) = " + std::to_string(p.value_at_zero()) + ", must be 0");
  if (p.derivative_at_one() != 0) throw PreconditionError("u'(1) = " + std::to_string(p.derivative_at_one()) + ", must be 0");
  VirtualString out;
  for (int m = p.degree(); m >= 2; --m) {
    long long a = p.coeff(m);
    VirtualString piece = a > 0 ? family_pq(1, m) : family_pq(m, 1);
    for (long long i = 0; i < std::llabs(a); ++i) out = product(out, piece);
  }
  return out;
}

}  // namespace vstr
