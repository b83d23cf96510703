#include "qschubert/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qschubert/lr.hpp"
#include "qschubert/quantum.hpp"
#include "qschubert/rimhook.hpp"

namespace qschubert {

namespace {

struct PairCase {
  Partition lam;
  Partition mu;
};

std::string context_id(const GrassmannianContext& ctx) {
  return "l=" + std::to_string(ctx.l) + ";k=" + std::to_string(ctx.k);
}

std::vector<PairCase> all_pairs(const GrassmannianContext& ctx) {
  const auto shapes = partitions_in_box(ctx);
  std::vector<PairCase> out;
  out.reserve(shapes.size() * shapes.size());
  for (const auto& lam : shapes) {
    for (const auto& mu : shapes) {
      out.push_back({lam, mu});
    }
  }
  return out;
}

auto pair_id(const GrassmannianContext& ctx) {
  return [ctx](const PairCase& c) {
    return context_id(ctx) + ";lambda=" + to_string(c.lam) + ";mu=" + to_string(c.mu);
  };
}

VerificationReport new_report(std::string suite, const GrassmannianContext& ctx, long long expected) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.l = ctx.l;
  report.k = ctx.k;
  report.expected_cases = expected;
  return report;
}

long long pair_count(const GrassmannianContext& ctx) {
  const long long c = box_partition_count(ctx);
  return c * c;
}

std::string degree_list(const std::vector<int>& degrees) {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(degrees[i]);
  }
  return out + "}";
}

// Distinct rectangles in the box: the empty one first, then a x A for a, A >= 1.
std::vector<std::pair<int, int>> box_rectangles(const GrassmannianContext& ctx) {
  std::vector<std::pair<int, int>> out{{0, 0}};
  for (int a = 1; a <= ctx.l; ++a) {
    for (int A = 1; A <= ctx.k; ++A) {
      out.emplace_back(a, A);
    }
  }
  return out;
}

std::string rect_text(int a, int A) { return std::to_string(a) + "x" + std::to_string(A); }

}  // namespace

bool rectangle_inequalities_hold(const RectangleTriple& raw, const GrassmannianContext& ctx) {
  RectangleTriple t = raw;
  auto normalize = [](int& rows, int& cols) {
    if (rows == 0 || cols == 0) {
      rows = 0;
      cols = 0;
    }
  };
  normalize(t.a, t.A);
  normalize(t.b, t.B);
  normalize(t.c, t.C);
  const int l = ctx.l;
  const int k = ctx.k;
  return (t.a + t.b <= l || t.A + t.B <= k) && (t.a + t.c <= l || t.A + t.C <= k) &&
         (t.b + t.c <= l || t.B + t.C <= k) && (t.a + t.b + t.c <= l || t.A + t.B + t.C <= 2 * k) &&
         (t.a + t.b + t.c <= 2 * l || t.A + t.B + t.C <= k);
}

VerificationReport check_thm_min_degree_no_cancellation(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("thm-no-cancel", ctx, pair_count(ctx));
  run_cases(
      report, all_pairs(ctx), pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const auto contributions = rim_hook_contributions(c.lam, c.mu, ctx);
        // Only rho whose n-core fits the box appear in the rim-hook sum.
        std::optional<int> least;
        std::optional<int> least_any;
        for (const auto& entry : contributions) {
          least_any = least_any ? std::min(*least_any, entry.degree) : entry.degree;
          if (entry.core_in_box) {
            least = least ? std::min(*least, entry.degree) : entry.degree;
          }
        }
        if (!least) {
          out.note = "no contributing rho for lambda=" + to_string(c.lam) + ", mu=" + to_string(c.mu);
          return out;
        }
        const auto degrees = occurring_degrees(group_by_core(contributions, ctx));
        if (degrees.empty()) {
          out.failure = "product vanishes although min r_n = " + std::to_string(*least);
        } else if (degrees.front() != *least) {
          out.failure = "d_min=" + std::to_string(degrees.front()) + " but min r_n=" + std::to_string(*least);
        }
        if (least_any != least) {
          out.counters.emplace_back("smaller_rn_with_core_outside_box", 1);
        }
        out.counters.emplace_back("contributing_rho", static_cast<long long>(contributions.size()));
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_thm_dmin_equals_square(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("thm-dmin", ctx, pair_count(ctx));
  run_cases(
      report, all_pairs(ctx), pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const auto degrees = occurring_degrees(quantum_product_basis(c.lam, c.mu, ctx));
        const int square = largest_square_in_overlap(c.lam, c.mu, ctx);
        if (degrees.empty()) {
          out.note = "zero quantum product for lambda=" + to_string(c.lam) + ", mu=" + to_string(c.mu);
          out.counters.emplace_back("zero_products", 1);
        } else if (degrees.front() != square) {
          out.failure = "d_min=" + std::to_string(degrees.front()) + " but largest square=" + std::to_string(square);
        }
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_corollary_rectangle_containment(const GrassmannianContext& ctx,
                                                         const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("cor-rect", ctx, pair_count(ctx));
  run_cases(
      report, all_pairs(ctx), pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const int square = largest_square_in_overlap(c.lam, c.mu, ctx);
        long long checked = 0;
        for (const auto& entry : rim_hook_contributions(c.lam, c.mu, ctx)) {
          ++checked;
          if (square > 0 && entry.rho.part(ctx.l + square) < square) {
            out.failure = "rho=" + to_string(entry.rho) + " misses the " + rect_text(ctx.l + square, square) +
                          " rectangle";
            break;
          }
        }
        out.counters.emplace_back("rho_checked", checked);
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_triple_rectangle_criterion(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  const auto rects = box_rectangles(ctx);
  const long long r = static_cast<long long>(rects.size());
  auto report = new_report("thm-triples", ctx, r * r * r);

  // Condition (I) needs every nonzero triple product in the box.  Tabulate
  // sigma_lam . sigma_mu . sigma_nu != 0, then close the table upward under
  // adding boxes so reachable[lam][mu][nu] answers "some triple containing
  // (lam, mu, nu) is nonzero".
  const auto shapes = partitions_in_box(ctx);
  const std::size_t count = shapes.size();
  std::unordered_map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    index.emplace(shapes[i], i);
  }
  std::vector<std::vector<std::size_t>> covers(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> parts = shapes[i].parts();
    parts.resize(static_cast<std::size_t>(ctx.l), 0);
    for (std::size_t row = 0; row < parts.size(); ++row) {
      if (parts[row] < ctx.k && (row == 0 || parts[row] < parts[row - 1])) {
        auto grown = parts;
        ++grown[row];
        covers[i].push_back(index.at(Partition(grown)));
      }
    }
  }
  std::vector<char> compatible(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      compatible[i * count + j] = product_nonzero(shapes[i], shapes[j], ctx) ? 1 : 0;
    }
  }
  std::vector<std::vector<std::size_t>> products(count * count);
  parallel_for(count * count, options.workers, [&](std::size_t p) {
    for (const auto& [rho, coeff] : classical_product(shapes[p / count], shapes[p % count], ctx).terms) {
      products[p].push_back(index.at(rho));
    }
  });
  std::vector<std::size_t> by_size(count);
  std::iota(by_size.begin(), by_size.end(), std::size_t{0});
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return shapes[a].size() > shapes[b].size(); });
  std::vector<char> reachable(count * count * count, 0);
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> char& {
    return reachable[(a * count + b) * count + c];
  };
  for (std::size_t a : by_size) {
    for (std::size_t b : by_size) {
      for (std::size_t c : by_size) {
        char value = 0;
        for (std::size_t rho : products[a * count + b]) {
          if (compatible[rho * count + c] != 0) {
            value = 1;
            break;
          }
        }
        for (std::size_t up : covers[a]) {
          value = value != 0 ? value : at(up, b, c);
        }
        for (std::size_t up : covers[b]) {
          value = value != 0 ? value : at(a, up, c);
        }
        for (std::size_t up : covers[c]) {
          value = value != 0 ? value : at(a, b, up);
        }
        at(a, b, c) = value;
      }
    }
  }

  std::vector<RectangleTriple> triples;
  for (const auto& [a, A] : rects) {
    for (const auto& [b, B] : rects) {
      for (const auto& [c, C] : rects) {
        triples.push_back({a, A, b, B, c, C});
      }
    }
  }
  auto id_of = [&](const RectangleTriple& t) {
    return context_id(ctx) + ";rects=" + rect_text(t.a, t.A) + "," + rect_text(t.b, t.B) + "," + rect_text(t.c, t.C);
  };
  run_cases(
      report, triples, id_of,
      [&](const RectangleTriple& t) {
        CaseOutcome out;
        const Partition r1 = rectangle(t.a, t.A);
        const Partition r2 = rectangle(t.b, t.B);
        const Partition r3 = rectangle(t.c, t.C);
        const bool exists = at(index.at(r1), index.at(r2), index.at(r3)) != 0;
        const bool direct = triple_product_nonzero_bruteforce(r1, r2, r3, ctx);
        const bool inequalities = rectangle_inequalities_hold(t, ctx);
        if (exists != direct || direct != inequalities) {
          out.failure = std::string("(I)=") + (exists ? "true" : "false") + " (II)=" + (direct ? "true" : "false") +
                        " (III)=" + (inequalities ? "true" : "false");
        }
        out.counters.emplace_back("nonzero_triples", direct ? 1 : 0);
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_kappa_lemmas(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  const auto shapes = partitions_in_box(ctx);
  const auto rects = box_rectangles(ctx);
  const std::size_t count = shapes.size();
  const long long pairs = static_cast<long long>(count * count);
  auto report = new_report("kappa-lemmas", ctx, 2 * pairs + static_cast<long long>(rects.size() * rects.size()));

  std::vector<Partition> kappas(count * count);
  parallel_for(count * count, options.workers,
               [&](std::size_t p) { kappas[p] = kappa(shapes[p / count], shapes[p % count], ctx); });
  std::vector<std::vector<std::size_t>> below(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (shapes[i].contains(shapes[j])) {
        below[i].push_back(j);
      }
    }
  }

  enum class Kind { Rotation, Monotone, ClosedForm };
  struct KappaCase {
    Kind kind;
    std::size_t first;
    std::size_t second;
  };
  std::vector<KappaCase> cases;
  for (Kind kind : {Kind::Rotation, Kind::Monotone}) {
    for (std::size_t p = 0; p < count * count; ++p) {
      cases.push_back({kind, p / count, p % count});
    }
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = 0; j < rects.size(); ++j) {
      cases.push_back({Kind::ClosedForm, i, j});
    }
  }
  auto id_of = [&](const KappaCase& c) {
    if (c.kind == Kind::ClosedForm) {
      return context_id(ctx) + ";check=closed-form;rects=" + rect_text(rects[c.first].first, rects[c.first].second) + "," +
             rect_text(rects[c.second].first, rects[c.second].second);
    }
    return context_id(ctx) + (c.kind == Kind::Rotation ? ";check=rotation" : ";check=monotone") +
           ";alpha=" + to_string(shapes[c.first]) + ";beta=" + to_string(shapes[c.second]);
  };
  run_cases(
      report, cases, id_of,
      [&](const KappaCase& c) {
        CaseOutcome out;
        switch (c.kind) {
          case Kind::Rotation: {
            const Partition& meet = kappas[c.first * count + c.second];
            // The empty rectangle is excluded: with the full-box convention for
            // vanishing products the criterion cannot hold for it.
            for (const auto& [m, M] : rects) {
              if (m == 0) {
                continue;
              }
              const Partition r = rectangle(m, M);
              const bool nonzero = triple_product_nonzero_bruteforce(shapes[c.first], shapes[c.second], r, ctx);
              const bool disjoint = overlap_with_rotation(meet, r, ctx).empty();
              if (nonzero != disjoint) {
                out.failure = "rect " + rect_text(m, M) + ": triple product " + (nonzero ? "nonzero" : "zero") +
                              " but kappa=" + to_string(meet) + (disjoint ? " misses" : " meets") + " rotate(rect)";
                break;
              }
            }
            break;
          }
          case Kind::Monotone: {
            const Partition& top = kappas[c.first * count + c.second];
            long long nested = 0;
            for (std::size_t a : below[c.first]) {
              for (std::size_t b : below[c.second]) {
                if (!top.contains(kappas[a * count + b])) {
                  out.failure = "kappa(" + to_string(shapes[a]) + "," + to_string(shapes[b]) + ")=" +
                                to_string(kappas[a * count + b]) + " not inside " + to_string(top);
                  return out;
                }
                ++nested;
              }
            }
            out.counters.emplace_back("nested_pairs", nested);
            break;
          }
          case Kind::ClosedForm: {
            const auto [m, M] = rects[c.first];
            const auto [n, N] = rects[c.second];
            const Partition formula = kappa_rectangles_closed_form(m, M, n, N, ctx);
            const Partition brute = kappa(rectangle(m, M), rectangle(n, N), ctx);
            if (formula != brute) {
              out.failure = "closed form " + to_string(formula) + " != brute force " + to_string(brute);
            }
            break;
          }
        }
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_dmax_bound(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("dmax-bound", ctx, pair_count(ctx));
  auto cases = all_pairs(ctx);
  run_cases(
      report, cases, pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const auto degrees = occurring_degrees(quantum_product_basis(c.lam, c.mu, ctx));
        if (degrees.empty()) {
          out.counters.emplace_back("zero_products", 1);
          return out;
        }
        const int bound = std::min(durfee(c.lam), durfee(c.mu));
        const int size_bound = (c.lam.size() + c.mu.size()) / ctx.n();
        if (degrees.back() > bound) {
          out.failure = "d_max=" + std::to_string(degrees.back()) + " exceeds min diag=" + std::to_string(bound);
        }
        if (bound < size_bound) {
          out.counters.emplace_back("sharper_than_size_bound", 1);
        }
        if (degrees.back() == bound) {
          out.counters.emplace_back("bound_attained", 1);
        }
        return out;
      },
      options);
  // Name one witness of the improvement, in canonical order.
  for (const auto& c : cases) {
    const int bound = std::min(durfee(c.lam), durfee(c.mu));
    const int size_bound = (c.lam.size() + c.mu.size()) / ctx.n();
    if (bound < size_bound && !quantum_product_basis(c.lam, c.mu, ctx).empty()) {
      report.notes.push_back("diagonal bound sharper than (|lambda|+|mu|)/n at lambda=" + to_string(c.lam) +
                             ", mu=" + to_string(c.mu) + ": " + std::to_string(bound) + " < " +
                             std::to_string(size_bound));
      break;
    }
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_conjecture_degree_interval(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("conj-interval", ctx, pair_count(ctx));
  run_cases(
      report, all_pairs(ctx), pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const auto degrees = occurring_degrees(quantum_product_basis(c.lam, c.mu, ctx));
        if (degrees.empty()) {
          out.counters.emplace_back("zero_products", 1);
          return out;
        }
        if (degrees.back() - degrees.front() + 1 != static_cast<int>(degrees.size())) {
          out.failure = "degrees " + degree_list(degrees) + " are not an interval";
        }
        if (degrees.size() > 1) {
          out.counters.emplace_back("multi_degree_products", 1);
        }
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

namespace {

// literal: alpha must contain nu in the GW indexing, as the statement reads.
// Otherwise the degree d-1 shape alpha^vee must contain nu^vee.
VerificationReport degree_descent(const GrassmannianContext& ctx, const SweepOptions& options, bool literal) {
  Stopwatch timer;
  auto report = new_report(literal ? "conj-descent-literal" : "conj-descent", ctx, pair_count(ctx));
  const auto shapes = partitions_in_box(ctx);
  run_cases(
      report, all_pairs(ctx), pair_id(ctx),
      [&](const PairCase& c) {
        CaseOutcome out;
        const QuantumExpansion product = quantum_product_basis(c.lam, c.mu, ctx);
        const auto degrees = occurring_degrees(product);
        long long checked = 0;
        for (const auto& [term, coeff] : product.terms()) {
          const int d = term.degree;
          if (d < 1) {
            continue;
          }
          // <lam, mu, nu>_d sits at q^d sigma_{nu^vee}.
          const Partition nu = complement(term.shape, ctx);
          if (gw_invariant(product, nu, d) == 0) {
            continue;
          }
          ++checked;
          // A nonzero <lam, mu, alpha>_{d-1} forces |alpha| = |nu| - n, so in
          // the literal reading alpha can never contain nu.
          bool descends = false;
          for (const auto& alpha : shapes) {
            const bool nested = literal ? alpha.contains(nu) : nu.contains(alpha);
            if (nested && gw_invariant(product, alpha, d - 1) != 0) {
              descends = true;
              break;
            }
          }
          const bool nothing_below = degrees.front() >= d;
          if (!descends && !nothing_below && out.failure.empty()) {
            out.failure = "<lambda,mu," + to_string(nu) + ">_" + std::to_string(d) + " != 0 with no alpha " +
                          (literal ? "containing" : "inside") + " nu at degree " + std::to_string(d - 1) +
                          ", yet lower degrees occur";
          }
        }
        out.counters.emplace_back("nonzero_invariants_checked", checked);
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace

VerificationReport check_conjecture_degree_descent(const GrassmannianContext& ctx, const SweepOptions& options) {
  return degree_descent(ctx, options, false);
}

VerificationReport check_conjecture_degree_descent_literal(const GrassmannianContext& ctx,
                                                           const SweepOptions& options) {
  return degree_descent(ctx, options, true);
}

VerificationReport check_quantum_giambelli(const GrassmannianContext& ctx, const SweepOptions& options) {
  Stopwatch timer;
  auto report = new_report("giambelli", ctx, box_partition_count(ctx));
  ProductCache cache(ctx);
  run_cases(
      report, partitions_in_box(ctx), [&](const Partition& p) { return context_id(ctx) + ";lambda=" + to_string(p); },
      [&](const Partition& lam) {
        CaseOutcome out;
        if (!quantum_giambelli_check(lam, cache)) {
          out.failure = "hook determinant differs from sigma_lambda";
        }
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport check_ring_axioms(const GrassmannianContext& ctx, const SweepOptions& options, int exhaustive_max_n,
                                     int random_triples) {
  Stopwatch timer;
  const auto shapes = partitions_in_box(ctx);
  ProductCache cache(ctx);

  struct AxiomCase {
    Partition lam;
    Partition mu;
    std::optional<Partition> nu;  // set for associativity triples
  };
  std::vector<AxiomCase> cases;
  for (const auto& lam : shapes) {
    for (const auto& mu : shapes) {
      cases.push_back({lam, mu, std::nullopt});
    }
  }
  if (ctx.n() <= exhaustive_max_n) {
    for (const auto& lam : shapes) {
      for (const auto& mu : shapes) {
        for (const auto& nu : shapes) {
          cases.push_back({lam, mu, nu});
        }
      }
    }
  } else {
    std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(ctx.l) << 32 | static_cast<std::uint64_t>(ctx.k)));
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (int t = 0; t < random_triples; ++t) {
      const auto& lam = shapes[pick(rng)];
      const auto& mu = shapes[pick(rng)];
      const auto& nu = shapes[pick(rng)];
      cases.push_back({lam, mu, nu});
    }
  }
  auto report = new_report("ring-axioms", ctx, static_cast<long long>(cases.size()));
  auto id_of = [&](const AxiomCase& c) {
    std::string id = context_id(ctx) + ";lambda=" + to_string(c.lam) + ";mu=" + to_string(c.mu);
    return c.nu ? id + ";nu=" + to_string(*c.nu) : id;
  };
  run_cases(
      report, cases, id_of,
      [&](const AxiomCase& c) {
        CaseOutcome out;
        if (c.nu) {
          const auto a = QuantumExpansion::basis(ctx, c.lam);
          const auto b = QuantumExpansion::basis(ctx, c.mu);
          const auto d = QuantumExpansion::basis(ctx, *c.nu);
          const auto left = ring_multiply(ring_multiply(a, b, cache), d, cache);
          const auto right = ring_multiply(a, ring_multiply(b, d, cache), cache);
          if (left != right) {
            out.failure = "associativity fails";
          }
          out.counters.emplace_back("associativity_triples", 1);
          return out;
        }
        const QuantumExpansion& product = cache.product(c.lam, c.mu);
        const QuantumExpansion& swapped = cache.product(c.mu, c.lam);
        if (product != swapped) {
          out.failure = "commutativity fails";
          return out;
        }
        const auto classical = classical_product(c.lam, c.mu, ctx);
        QuantumExpansion expected(ctx);
        for (const auto& [shape, coeff] : classical.terms) {
          expected.accumulate({0, shape}, Coefficient(coeff));
        }
        if (product.classical_part() != expected) {
          out.failure = "q=0 specialization differs from the classical product";
          return out;
        }
        for (const auto& [term, coeff] : product.terms()) {
          if (coeff < 0) {
            out.failure = "negative coefficient at q^" + std::to_string(term.degree) + " sigma_" + to_string(term.shape);
            return out;
          }
          if (term.shape.size() + term.degree * ctx.n() != c.lam.size() + c.mu.size()) {
            out.failure = "grading violated at q^" + std::to_string(term.degree) + " sigma_" + to_string(term.shape);
            return out;
          }
        }
        out.counters.emplace_back("pairs", 1);
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

namespace {

// Residues of the beta-numbers p_i + beads - i, i = 1..beads.
std::vector<int> beta_residues(const Partition& p, int beads, int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= beads; ++i) {
    ++counts[static_cast<std::size_t>((p.part(i) + beads - i) % n)];
  }
  return counts;
}

long long partition_count_up_to(int max_size) {
  // p(m) by the standard coin-change recurrence.
  std::vector<long long> ways(static_cast<std::size_t>(max_size + 1), 0);
  ways[0] = 1;
  for (int part = 1; part <= max_size; ++part) {
    for (int m = part; m <= max_size; ++m) {
      ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
    }
  }
  long long total = 0;
  for (long long w : ways) {
    total += w;
  }
  return total;
}

}  // namespace

VerificationReport check_core_orders(int max_size, int n_lo, int n_hi, int orders, const SweepOptions& options) {
  Stopwatch timer;
  if (n_lo < 2 || n_hi < n_lo) {
    throw std::invalid_argument("core-orders needs 2 <= n_lo <= n_hi");
  }
  VerificationReport report;
  report.suite = "core-orders";
  report.expected_cases = partition_count_up_to(max_size) * (n_hi - n_lo + 1);
  report.stats["max_size"] = max_size;
  report.stats["n_lo"] = n_lo;
  report.stats["n_hi"] = n_hi;
  report.stats["orders_per_case"] = orders;

  struct CoreCase {
    Partition p;
    int n;
    std::size_t ordinal;
  };
  std::vector<CoreCase> cases;
  const auto shapes = partitions_up_to(max_size, max_size, max_size);
  for (int n = n_lo; n <= n_hi; ++n) {
    for (const auto& p : shapes) {
      cases.push_back({p, n, cases.size()});
    }
  }
  run_cases(
      report, cases, [](const CoreCase& c) { return "n=" + std::to_string(c.n) + ";rho=" + to_string(c.p); },
      [&](const CoreCase& c) {
        CaseOutcome out;
        const RimHookTrace canonical = n_core(c.p, c.n);
        std::vector<int> signs;
        for (int l = 1; l < c.n; ++l) {
          signs.push_back(epsilon(canonical, GrassmannianContext(l, c.n - l)));
        }
        if (n_core_abacus(c.p, c.n) != canonical.core) {
          out.failure = "abacus core " + to_string(n_core_abacus(c.p, c.n)) + " != " + to_string(canonical.core);
          return out;
        }
        if (beta_residues(c.p, c.p.length(), c.n) != beta_residues(canonical.core, c.p.length(), c.n)) {
          out.failure = "beta-number residues differ between rho and its core";
          return out;
        }
        if (c.p.size() - canonical.core.size() != c.n * canonical.removals()) {
          out.failure = "size drop is not n * r_n";
          return out;
        }
        if (!legal_rim_hooks(canonical.core, c.n).empty()) {
          out.failure = "core still has a legal hook";
          return out;
        }
        std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ULL + c.ordinal);
        for (int trial = 0; trial < orders; ++trial) {
          const RimHookTrace shuffled = n_core_random_order(c.p, c.n, rng);
          if (shuffled.core != canonical.core || shuffled.removals() != canonical.removals()) {
            out.failure = "random order reached core " + to_string(shuffled.core) + " after " +
                          std::to_string(shuffled.removals()) + " removals";
            return out;
          }
          for (int l = 1; l < c.n; ++l) {
            if (epsilon(shuffled, GrassmannianContext(l, c.n - l)) != signs[static_cast<std::size_t>(l - 1)]) {
              out.failure = "epsilon depends on removal order for l=" + std::to_string(l);
              return out;
            }
          }
        }
        return out;
      },
      options);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "thm-no-cancel", "thm-dmin",     "cor-rect",  "thm-triples", "kappa-lemmas", "dmax-bound",
      "conj-interval", "conj-descent", "giambelli", "core-orders", "ring-axioms"};
  return names;
}

bool is_suite_name(std::string_view name) {
  if (name == "all") {
    return true;
  }
  const auto& names = suite_names();
  return name == "conj-descent-literal" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<GrassmannianContext> contexts_up_to(int max_n, int max_side) {
  std::vector<GrassmannianContext> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int l = 1; l < n; ++l) {
      const int k = n - l;
      if (max_side > 0 && (l > max_side || k > max_side)) {
        continue;
      }
      out.emplace_back(l, k);
    }
  }
  return out;
}

std::vector<VerificationReport> run_suite_sweep(std::string_view name, const SweepBounds& bounds,
                                                const SweepOptions& options) {
  if (!is_suite_name(name)) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  std::vector<VerificationReport> reports;
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      auto part = run_suite_sweep(suite, bounds, options);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    return reports;
  }
  if (name == "core-orders") {
    reports.push_back(check_core_orders(bounds.core_max_size, 2, std::max(2, bounds.max_n), 50, options));
    return reports;
  }
  using SuiteFn = VerificationReport (*)(const GrassmannianContext&, const SweepOptions&);
  static const std::map<std::string, SuiteFn, std::less<>> table{
      {"thm-no-cancel", &check_thm_min_degree_no_cancellation},
      {"thm-dmin", &check_thm_dmin_equals_square},
      {"cor-rect", &check_corollary_rectangle_containment},
      {"thm-triples", &check_triple_rectangle_criterion},
      {"kappa-lemmas", &check_kappa_lemmas},
      {"dmax-bound", &check_dmax_bound},
      {"conj-interval", &check_conjecture_degree_interval},
      {"conj-descent", &check_conjecture_degree_descent},
      {"conj-descent-literal", &check_conjecture_degree_descent_literal},
      {"giambelli", &check_quantum_giambelli},
  };
  int side = bounds.max_side;
  if (side == 0 && (name == "thm-triples" || name == "kappa-lemmas")) {
    side = 4;
  }
  for (const auto& ctx : contexts_up_to(bounds.max_n, side)) {
    if (name == "ring-axioms") {
      reports.push_back(check_ring_axioms(ctx, options));
    } else {
      reports.push_back(table.find(name)->second(ctx, options));
    }
  }
  return reports;
}

}  // namespace qschubert
