#ifndef MAJDOM_CERTIFICATES_HPP
#define MAJDOM_CERTIFICATES_HPP

#include <sstream>
#include <stdexcept>
#include <string>

#include "majdom/exact.hpp"

namespace majdom {

enum class Method { tree, complete, regular };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::tree: return "tree";
    case Method::complete: return "complete";
    case Method::regular: return "regular";
  }
  throw std::logic_error("unreachable");
}

// Interval [lb, ub] guaranteed to contain gamma of the instance, derived
// from the gamma of a nearby special case and the edit counts separating
// the two. Counts a method does not use stay zero.
struct SimilarityCertificate {
  Method method;
  int base_gamma = 0;
  int k = 0;  // total edit count
  int l = 0;
  int s = 0;
  int m = 0;
  int lb = 0;
  int ub = 0;
  bool degraded = false;  // base value feasible but not oracle-exact

  int width() const { return ub - lb; }

  bool contains(int gamma) const { return lb <= gamma && gamma <= ub; }

  // Single-line record: method base_gamma k l s m lb ub width degraded.
  std::string to_record() const {
    std::ostringstream out;
    out << method_name(method) << ' ' << base_gamma << ' ' << k << ' ' << l
        << ' ' << s << ' ' << m << ' ' << lb << ' ' << ub << ' ' << width()
        << ' ' << (degraded ? 1 : 0);
    return out.str();
  }
};

// Spanning-tree certificate: the instance differs from the tree by k added
// edges, s of them between +1 endpoints of the tree optimum, l = k - s
// between the remaining pairs. Encloses gamma in [base - 4k, base + 2l].
inline SimilarityCertificate certificate_tree(const GammaResult& base, int k,
                                              int s, int l) {
  if (k < 0 || s < 0 || l < 0 || s + l != k)
    throw std::invalid_argument("tree certificate requires s + l == k, all >= 0");
  if (!base.optimal)
    throw std::invalid_argument("tree certificate requires an optimal base");
  SimilarityCertificate c;
  c.method = Method::tree;
  c.base_gamma = base.gamma;
  c.k = k;
  c.l = l;
  c.s = s;
  c.lb = base.gamma - 4 * k;
  c.ub = base.gamma + 2 * l;
  return c;
}

// Complete-graph certificate: the instance misses k = l + s + m edges of
// K_n; l of them join +1/+1 pairs, s join -1/-1 pairs, m are mixed, all
// classified by the K_n opinion function. Encloses gamma in
// [base - 2k, base + 4l + 2m].
inline SimilarityCertificate certificate_complete(int base_gamma, int l, int s,
                                                  int m) {
  if (l < 0 || s < 0 || m < 0)
    throw std::invalid_argument("edit counts must be nonnegative");
  SimilarityCertificate c;
  c.method = Method::complete;
  c.base_gamma = base_gamma;
  c.k = l + s + m;
  c.l = l;
  c.s = s;
  c.m = m;
  c.lb = base_gamma - 2 * c.k;
  c.ub = base_gamma + 4 * l + 2 * m;
  return c;
}

// Regular-graph certificate: walking from the instance to the regular
// target removes l edges (present only in the instance) and adds m edges
// (present only in the target). Encloses gamma in
// [base - 4l - 2m, base + 2l + 4m]. A base value that is feasible but not
// oracle-exact only certifies the upper side; the lower bound then falls
// back to the trivial -n and the certificate is marked degraded.
inline SimilarityCertificate certificate_regular(int base_gamma, int l, int m,
                                                 bool base_exact, int n) {
  if (l < 0 || m < 0)
    throw std::invalid_argument("edit counts must be nonnegative");
  if (n < 1) throw std::invalid_argument("n must be positive");
  SimilarityCertificate c;
  c.method = Method::regular;
  c.base_gamma = base_gamma;
  c.k = l + m;
  c.l = l;
  c.m = m;
  c.lb = base_exact ? base_gamma - 4 * l - 2 * m : -n;
  c.ub = base_gamma + 2 * l + 4 * m;
  c.degraded = !base_exact;
  return c;
}

}  // namespace majdom

#endif  // MAJDOM_CERTIFICATES_HPP
