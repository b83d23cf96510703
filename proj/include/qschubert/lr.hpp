#pragma once

#include <cstdint>
#include <map>

#include "qschubert/partition.hpp"

namespace qschubert {

/// Classical product sigma_lambda . sigma_mu in H*(Gr(l, C^n)).
struct ClassicalExpansion {
  GrassmannianContext context;
  std::map<Partition, std::uint64_t> terms;  // no zero coefficients

  [[nodiscard]] bool empty() const { return terms.empty(); }
  bool operator==(const ClassicalExpansion&) const = default;
};

/// c_{lam,mu}^{rho}: number of skew semistandard tableaux of shape rho/lam and
/// content mu whose reverse reading word is a lattice word.  Memoized per thread.
[[nodiscard]] std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& rho);

/// Same count without touching the memo table.
[[nodiscard]] std::uint64_t lr_coefficient_uncached(const Partition& lam, const Partition& mu,
                                                    const Partition& rho);

[[nodiscard]] ClassicalExpansion classical_product(const Partition& lam, const Partition& mu,
                                                   const GrassmannianContext& ctx);

/// sigma_lam . sigma_mu != 0, decided by lam ∩ rotate(mu) = ∅.
[[nodiscard]] bool product_nonzero(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx);

/// Intersection of every gamma in the box with c_{alpha,beta}^{gamma} != 0,
/// or the full box when there is none.
[[nodiscard]] Partition kappa(const Partition& alpha, const Partition& beta, const GrassmannianContext& ctx);

/// kappa for the rectangles m x M and n x N via the union-of-rectangles formula.
[[nodiscard]] Partition kappa_rectangles_closed_form(int m, int M, int n, int N, const GrassmannianContext& ctx);

/// sigma_lam . sigma_mu . sigma_nu != 0, by searching for a witness rho in the box.
[[nodiscard]] bool triple_product_nonzero_bruteforce(const Partition& lam, const Partition& mu,
                                                     const Partition& nu, const GrassmannianContext& ctx);

}  // namespace qschubert
