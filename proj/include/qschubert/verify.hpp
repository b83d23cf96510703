#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qschubert/partition.hpp"
#include "qschubert/report.hpp"
#include "qschubert/sweep.hpp"

namespace qschubert {

/// Three rectangles a x A, b x B, c x C in the box.  A zero dimension means
/// the empty rectangle.
struct RectangleTriple {
  int a = 0, A = 0, b = 0, B = 0, c = 0, C = 0;
};

/// The five disjunctions (i)-(v) of the rectangle criterion, after
/// normalizing zero-dimension rectangles to 0 x 0.
[[nodiscard]] bool rectangle_inequalities_hold(const RectangleTriple& t, const GrassmannianContext& ctx);

// One suite per statement.  Each visits every case of the context in a fixed
// canonical order (or a seeded subset, see SweepOptions).
[[nodiscard]] VerificationReport check_thm_min_degree_no_cancellation(const GrassmannianContext& ctx,
                                                                      const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_thm_dmin_equals_square(const GrassmannianContext& ctx,
                                                              const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_corollary_rectangle_containment(const GrassmannianContext& ctx,
                                                                       const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_triple_rectangle_criterion(const GrassmannianContext& ctx,
                                                                  const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_kappa_lemmas(const GrassmannianContext& ctx, const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_dmax_bound(const GrassmannianContext& ctx, const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_conjecture_degree_interval(const GrassmannianContext& ctx,
                                                                  const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_conjecture_degree_descent(const GrassmannianContext& ctx,
                                                                 const SweepOptions& options = {});
/// The same statement with alpha required to contain nu in the invariant's own
/// indexing.  Fails for every box with l, k >= 2; not part of "all".
[[nodiscard]] VerificationReport check_conjecture_degree_descent_literal(const GrassmannianContext& ctx,
                                                                         const SweepOptions& options = {});
[[nodiscard]] VerificationReport check_quantum_giambelli(const GrassmannianContext& ctx,
                                                         const SweepOptions& options = {});

/// q = 0 specialization, commutativity, positivity and grading on every pair,
/// plus associativity on every triple when l + k <= exhaustive_max_n and on
/// `random_triples` seeded triples otherwise.
[[nodiscard]] VerificationReport check_ring_axioms(const GrassmannianContext& ctx, const SweepOptions& options = {},
                                                   int exhaustive_max_n = 5, int random_triples = 1000);

/// Removal-order independence of (core, r_n, epsilon) plus the abacus
/// cross-checks, for every partition of size <= max_size and n in [n_lo, n_hi].
[[nodiscard]] VerificationReport check_core_orders(int max_size, int n_lo, int n_hi, int orders = 50,
                                                   const SweepOptions& options = {});

/// Suites run by "all".  run_suite_sweep also accepts "all" and "conj-descent-literal".
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite_name(std::string_view name);

struct SweepBounds {
  int max_n = 7;          // l + k
  int max_side = 0;       // 0: the suite's default cap
  int core_max_size = 14;
};

/// All (l, k) with l, k >= 1, l + k <= max_n, and both sides <= max_side (when nonzero).
[[nodiscard]] std::vector<GrassmannianContext> contexts_up_to(int max_n, int max_side = 0);

/// Runs one named suite (or "all") over every context within bounds.
[[nodiscard]] std::vector<VerificationReport> run_suite_sweep(std::string_view name, const SweepBounds& bounds,
                                                              const SweepOptions& options);

}  // namespace qschubert
