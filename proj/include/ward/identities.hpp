#pragma once

// Numerical verification of the recurrences, generating functions and
// row-sum relations satisfied by the Ward-related triangles.
//
// Every check reads triangle entries through an EntrySource so the same
// check can be pointed at a deliberately corrupted triangle. Both sides of
// each relation are evaluated in exact rational arithmetic exactly as the
// relation is written; a rational right-hand side that fails to equal the
// integer left-hand side is a failure.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ward/exact_arith.hpp"
#include "ward/partition_transform.hpp"
#include "ward/power_series.hpp"
#include "ward/triangles.hpp"

namespace ward {

struct Counterexample {
  long n = 0;
  std::optional<long> k;  // absent for row-level relations
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  std::string range;
  bool passed = true;
  bool conjecture = false;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // tuples outside the relation's side conditions
  std::optional<Counterexample> counterexample;

  std::string status() const {
    if (passed) return "PASS";
    return conjecture ? "DISAGREE" : "FAIL";
  }

  std::string to_line() const {
    std::ostringstream os;
    os << status() << ' ' << name << " [" << range << "] evaluated=" << evaluated
       << " skipped=" << skipped;
    if (conjecture) os << " (conjecture)";
    if (counterexample) {
      os << " first counterexample n=" << counterexample->n;
      if (counterexample->k) os << " k=" << *counterexample->k;
      os << " lhs=" << counterexample->lhs << " rhs=" << counterexample->rhs;
    }
    return os.str();
  }

  std::string to_key_values() const {
    std::ostringstream os;
    os << "name=" << name << " range=\"" << range << "\" status=" << (passed ? "pass" : "fail")
       << " conjecture=" << (conjecture ? "true" : "false") << " evaluated=" << evaluated
       << " skipped=" << skipped;
    if (counterexample) {
      os << " n=" << counterexample->n;
      if (counterexample->k) os << " k=" << *counterexample->k;
      os << " lhs=" << counterexample->lhs << " rhs=" << counterexample->rhs;
    }
    return os.str();
  }
};

/// Triangle entry lookup T(kind, n, k); must return 0 outside 0 <= k <= n.
using EntrySource = std::function<Integer(TriangleKind, long, long)>;

// Entries from each kind's recurrence construction.
inline EntrySource reference_source() {
  return [](TriangleKind kind, long n, long k) -> Integer {
    if (n < 0 || k < 0 || k > n) return 0;
    return value(kind, n, k, Strategy::Recurrence);
  };
}

// `base` with `delta` added to the single entry (kind, n, k).
inline EntrySource faulty_source(EntrySource base, TriangleKind kind, long n, long k,
                                 Integer delta = 1) {
  return [base = std::move(base), kind, n, k, delta](TriangleKind q, long qn, long qk) {
    Integer v = base(q, qn, qk);
    if (q == kind && qn == n && qk == k) v += delta;
    return v;
  };
}

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(std::string name, std::string range, bool conjecture = false) {
    report_.name = std::move(name);
    report_.range = std::move(range);
    report_.conjecture = conjecture;
  }

  void compare(long n, std::optional<long> k, const Rational& lhs, const Rational& rhs) {
    ++report_.evaluated;
    if (lhs == rhs) return;
    if (report_.passed) {
      report_.passed = false;
      report_.counterexample = Counterexample{n, k, lhs.to_string(), rhs.to_string()};
    }
  }

  void skip() { ++report_.skipped; }

  CheckReport finish() && { return std::move(report_); }

 private:
  CheckReport report_;
};

inline std::string range_nk(long lo_n, long max_n) {
  return std::to_string(lo_n) + "<=n<=" + std::to_string(max_n) + ", 1<=k<=n";
}

inline Rational frac(long num, long den) { return Rational(Integer(num), Integer(den)); }

using Relation = std::function<std::optional<Rational>(long n, long k)>;

// lhs is the source entry T(kind, n, k); rhs returns nullopt when (n, k)
// violates the relation's side conditions.
inline CheckReport check_entrywise(std::string name, long lo_n, long max_n, TriangleKind kind,
                                   const EntrySource& src, const Relation& rhs) {
  ReportBuilder rb(std::move(name), range_nk(lo_n, max_n));
  for (long n = lo_n; n <= max_n; ++n) {
    for (long k = 1; k <= n; ++k) {
      auto r = rhs(n, k);
      if (!r) {
        rb.skip();
        continue;
      }
      rb.compare(n, k, Rational(src(kind, n, k)), *r);
    }
  }
  return std::move(rb).finish();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Triangular recurrences

// T(n,k) = (n+k-1) (T(n-1,k) + T(n-1,k-1))
inline CheckReport check_ward1_recurrence(long max_n, const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::Ward1;
  return detail::check_entrywise("ward1-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(
        Rational(Integer(n + k - 1) * (src(K, n - 1, k) + src(K, n - 1, k - 1))));
  });
}

// T(n,k) = k T(n-1,k) + (n+k-1) T(n-1,k-1)
inline CheckReport check_ward2_recurrence(long max_n, const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::Ward2;
  return detail::check_entrywise("ward2-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(
        Rational(Integer(k) * src(K, n - 1, k) + Integer(n + k - 1) * src(K, n - 1, k - 1)));
  });
}

// T(n,k) = (n+k)(n-1)/n (T(n-1,k) + (n+k-1)/(k-1) T(n-1,k-1)),  k >= 2
inline CheckReport check_wardlah_rational_recurrence(long max_n,
                                                     const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::WardLah;
  return detail::check_entrywise(
      "wardlah-rational-recurrence", 1, max_n, K, src, [&](long n, long k) -> std::optional<Rational> {
        if (k - 1 < 1) return std::nullopt;
        return detail::frac((n + k) * (n - 1), n) *
               (Rational(src(K, n - 1, k)) + detail::frac(n + k - 1, k - 1) * Rational(src(K, n - 1, k - 1)));
      });
}

// T(n,k) = 2(n+k-1) T(n-1,k-1) + (n+2k-1) T(n-1,k)
inline CheckReport check_wardlah_integer_recurrence(long max_n,
                                                    const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::WardLah;
  return detail::check_entrywise("wardlah-integer-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(Rational(Integer(2 * (n + k - 1)) * src(K, n - 1, k - 1) +
                                            Integer(n + 2 * k - 1) * src(K, n - 1, k)));
  });
}

// T(n,k) = (n+k) (T(n-1,k) + (n+k-1)/k T(n-1,k-1)), the m = 1 horizontal case
inline CheckReport check_wardlah_m1_recurrence(long max_n,
                                               const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::WardLah;
  return detail::check_entrywise("wardlah-m1-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(
        Rational(Integer(n + k)) *
        (Rational(src(K, n - 1, k)) + detail::frac(n + k - 1, k) * Rational(src(K, n - 1, k - 1))));
  });
}

// T*(n,k) = 2n(2n-1)/(n+k) ((n+k-1) T*(n-1,k) + k T*(n-1,k-1))
inline CheckReport check_varied_ward1_recurrence(long max_n,
                                                 const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::VariedWard1;
  return detail::check_entrywise("varied-ward1-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(
        detail::frac(2 * n * (2 * n - 1), n + k) *
        Rational(Integer(n + k - 1) * src(K, n - 1, k) + Integer(k) * src(K, n - 1, k - 1)));
  });
}

// T*(n,k) = 2nk(2n-1)/(n+k) (T*(n-1,k) + T*(n-1,k-1))
inline CheckReport check_varied_ward2_recurrence(long max_n,
                                                 const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::VariedWard2;
  return detail::check_entrywise("varied-ward2-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(detail::frac(2 * n * k * (2 * n - 1), n + k) *
                                   Rational(src(K, n - 1, k) + src(K, n - 1, k - 1)));
  });
}

// T*(n,k) = 2n(2n-1) (T*(n-1,k) + T*(n-1,k-1))
inline CheckReport check_varied_wardlah_recurrence(long max_n,
                                                   const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::VariedWardLah;
  return detail::check_entrywise("varied-wardlah-recurrence", 1, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(
        Rational(Integer(2 * n * (2 * n - 1)) * (src(K, n - 1, k) + src(K, n - 1, k - 1))));
  });
}

// T°(n,k) = 2n(2n-1)/(n+k) ((n+k-1)/(n-k) T°(n-1,k) + T°(n-1,k-1)),  n-k >= 1
inline CheckReport check_binomial_ward1_recurrence(long max_n,
                                                   const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::BinomialWard1;
  return detail::check_entrywise(
      "binomial-ward1-recurrence", 1, max_n, K, src, [&](long n, long k) -> std::optional<Rational> {
        if (n - k < 1) return std::nullopt;
        return detail::frac(2 * n * (2 * n - 1), n + k) *
               (detail::frac(n + k - 1, n - k) * Rational(src(K, n - 1, k)) +
                Rational(src(K, n - 1, k - 1)));
      });
}

// T°(n,k) = 2n(2n-1)/(n+k) (k/(n-k) T°(n-1,k) + T°(n-1,k-1)),  n-k >= 1
inline CheckReport check_binomial_ward2_recurrence(long max_n,
                                                   const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::BinomialWard2;
  return detail::check_entrywise(
      "binomial-ward2-recurrence", 1, max_n, K, src, [&](long n, long k) -> std::optional<Rational> {
        if (n - k < 1) return std::nullopt;
        return detail::frac(2 * n * (2 * n - 1), n + k) *
               (detail::frac(k, n - k) * Rational(src(K, n - 1, k)) + Rational(src(K, n - 1, k - 1)));
      });
}

// T°(n,k) = 2n(2n-1) (T°(n-1,k)/(n-k) + T°(n-1,k-1)/k),  n-k >= 1
inline CheckReport check_binomial_wardlah_recurrence(long max_n,
                                                     const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::BinomialWardLah;
  return detail::check_entrywise(
      "binomial-wardlah-recurrence", 1, max_n, K, src, [&](long n, long k) -> std::optional<Rational> {
        if (n - k < 1) return std::nullopt;
        return Rational(Integer(2 * n * (2 * n - 1))) *
               (detail::frac(1, n - k) * Rational(src(K, n - 1, k)) +
                detail::frac(1, k) * Rational(src(K, n - 1, k - 1)));
      });
}

// ---------------------------------------------------------------------------
// Horizontal recurrences: T(n,k) from row n-m. Terms whose column k-j
// leaves 1..n-m reference a boundary zero and contribute nothing.

namespace detail {

template <typename Term>
CheckReport check_horizontal(std::string name, long max_n, long max_m, TriangleKind kind,
                             const EntrySource& src, bool require_offdiagonal, Term term) {
  ReportBuilder rb(std::move(name), "1<=k<=n<=" + std::to_string(max_n) + ", 1<=m<=min(" +
                                        std::to_string(max_m) + ",n-1)");
  for (long n = 2; n <= max_n; ++n) {
    for (long k = 1; k <= n; ++k) {
      for (long m = 1; m <= std::min(max_m, n - 1); ++m) {
        if (require_offdiagonal && n - k < 1) {
          rb.skip();
          continue;
        }
        Rational sum;
        for (long j = 0; j <= m; ++j) {
          const long col = k - j;
          if (col < 1 || col > n - m) continue;
          sum += term(n, k, m, j) * Rational(binomial(m, j) * src(kind, n - m, col));
        }
        rb.compare(n, k, Rational(src(kind, n, k)), sum);
      }
    }
  }
  return std::move(rb).finish();
}

}  // namespace detail

// T(n,k) = (n+k)!/k! sum_j (k-j)!/(n-m+k-j)! C(m,j) T(n-m,k-j)
inline CheckReport check_horizontal_wardlah(long max_n, long max_m,
                                            const EntrySource& src = reference_source()) {
  return detail::check_horizontal(
      "wardlah-horizontal", max_n, max_m, TriangleKind::WardLah, src, false,
      [](long n, long k, long m, long j) {
        return Rational(factorial(n + k), factorial(k)) *
               Rational(factorial(k - j), factorial(n - m + k - j));
      });
}

// T*(n,k) = (2n)! sum_j 1/(2(n-m))! C(m,j) T*(n-m,k-j)
inline CheckReport check_horizontal_varied_wardlah(long max_n, long max_m,
                                                   const EntrySource& src = reference_source()) {
  return detail::check_horizontal(
      "varied-wardlah-horizontal", max_n, max_m, TriangleKind::VariedWardLah, src, false,
      [](long n, long, long m, long) {
        return Rational(factorial(2 * n), factorial(2 * (n - m)));
      });
}

// T°(n,k) = (2n)!/(k!(n-k)!) sum_j (k-j)!(n-m-k+j)!/(2(n-m))! C(m,j) T°(n-m,k-j),  n-k >= 1
inline CheckReport check_horizontal_binomial_wardlah(long max_n, long max_m,
                                                     const EntrySource& src = reference_source()) {
  return detail::check_horizontal(
      "binomial-wardlah-horizontal", max_n, max_m, TriangleKind::BinomialWardLah, src, true,
      [](long n, long k, long m, long j) {
        return Rational(factorial(2 * n), factorial(k) * factorial(n - k)) *
               Rational(factorial(k - j) * factorial(n - m - k + j), factorial(2 * (n - m)));
      });
}

// ---------------------------------------------------------------------------
// Higher-order recurrences

// T(n,k) = 2(2n-1) T(n-1,k-1) - n(n-2) T(n-2,k) - (-2n+1) T(n-1,k),  n >= 2
inline CheckReport check_order3_wardlah(long max_n, const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::WardLah;
  return detail::check_entrywise("wardlah-order3", 2, max_n, K, src, [&](long n, long k) {
    return std::optional<Rational>(Rational(Integer(2 * (2 * n - 1)) * src(K, n - 1, k - 1) -
                                            Integer(n * (n - 2)) * src(K, n - 2, k) -
                                            Integer(-2 * n + 1) * src(K, n - 1, k)));
  });
}

// T°(n,k) = -4(n-2)(2n-1)^2/n (T°(n-2,k-2) - 2T°(n-2,k-1) + T°(n-2,k))
//         + 4(2n-1)/(n(2n-3)) ((2(n-1)^2-1) T°(n-1,k-1) + 2(n-1)^2 T°(n-1,k)),
// n, k >= 2.
inline CheckReport check_order5_binomial_wardlah(long max_n,
                                                 const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::BinomialWardLah;
  return detail::check_entrywise(
      "binomial-wardlah-order5", 2, max_n, K, src, [&](long n, long k) -> std::optional<Rational> {
        if (k < 2 || 2 * n - 3 < 0) return std::nullopt;
        const long sq = (n - 1) * (n - 1);
        Rational second_diff(src(K, n - 2, k - 2) - Integer(2) * src(K, n - 2, k - 1) +
                             src(K, n - 2, k));
        Rational first(Integer(2 * sq - 1) * src(K, n - 1, k - 1) + Integer(2 * sq) * src(K, n - 1, k));
        return detail::frac(-4 * (n - 2) * (2 * n - 1) * (2 * n - 1), n) * second_diff +
               detail::frac(4 * (2 * n - 1), n * (2 * n - 3)) * first;
      });
}

// ---------------------------------------------------------------------------
// Generating functions

// x^{2k} / (k! (1-x)^k) = sum_{n>=k} WardLah(n-k, k) x^n / n!
inline CheckReport check_egf_wardlah(long k, long order,
                                     const EntrySource& src = reference_source()) {
  if (k < 1 || order < 2 * k) throw std::invalid_argument("check_egf_wardlah: need 1 <= k, 2k <= N");
  const auto N = static_cast<std::size_t>(order);
  const PowerSeries one_minus_x(N, {Rational(1), Rational(-1)});
  const PowerSeries series = (PowerSeries::monomial(N, 2 * k) * one_minus_x.pow(k).inverse())
                                 .divided(Rational(factorial(k)));
  detail::ReportBuilder rb("wardlah-egf", "k=" + std::to_string(k) + ", 0<=n<=" + std::to_string(order));
  for (long n = 0; n <= order; ++n) {
    Rational expected;
    if (n >= k) expected = Rational(src(TriangleKind::WardLah, n - k, k), factorial(n));
    rb.compare(n, k, series[n], expected);
  }
  return std::move(rb).finish();
}

// (x/(1-x))^k = sum_{n>=k} VariedWardLah(n, k) x^n / (2n)!
inline CheckReport check_gf_variedwardlah(long k, long order,
                                          const EntrySource& src = reference_source()) {
  if (k < 1 || order < k) throw std::invalid_argument("check_gf_variedwardlah: need 1 <= k <= N");
  const auto N = static_cast<std::size_t>(order);
  const PowerSeries one_minus_x(N, {Rational(1), Rational(-1)});
  const PowerSeries series = (PowerSeries::monomial(N, 1) * one_minus_x.inverse()).pow(k);
  detail::ReportBuilder rb("varied-wardlah-ogf", "k=" + std::to_string(k) + ", 0<=n<=" + std::to_string(order));
  for (long n = 0; n <= order; ++n) {
    Rational expected(src(TriangleKind::VariedWardLah, n, k), factorial(2 * n));
    rb.compare(n, k, series[n], expected);
  }
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// Identities with classical numbers

// (n-k+1)^{rising n-k} L(n,k) = C(n,k) sum_{j=0}^{k} C(k,j) T*(n-k, j)
inline CheckReport check_lah_variedwardlah(long max_n, const EntrySource& src = reference_source()) {
  detail::ReportBuilder rb("lah-varied-wardlah", detail::range_nk(1, max_n));
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 1; k <= n; ++k) {
      Integer lhs = rising_factorial(Integer(n - k + 1), n - k) * lah(n, k);
      Integer sum;
      for (long j = 0; j <= k; ++j) sum += binomial(k, j) * src(TriangleKind::VariedWardLah, n - k, j);
      rb.compare(n, k, Rational(lhs), Rational(binomial(n, k) * sum));
    }
  }
  return std::move(rb).finish();
}

// sum_k T°(n,k) = L(2n, n)
inline CheckReport check_central_lah_rowsums(long max_n, const EntrySource& src = reference_source()) {
  detail::ReportBuilder rb("central-lah-rowsums", "0<=n<=" + std::to_string(max_n));
  for (long n = 0; n <= max_n; ++n) {
    Integer sum;
    for (long k = 0; k <= n; ++k) sum += src(TriangleKind::BinomialWardLah, n, k);
    rb.compare(n, std::nullopt, Rational(sum), Rational(central(Classical::Lah, n)));
  }
  return std::move(rb).finish();
}

// Conjectured: row sums of BinomialWard1 / BinomialWard2 are the central
// unsigned Stirling cycle / set numbers. Reported as evidence.
inline CheckReport check_conjecture_rowsums_stirling(TriangleKind kind, long max_n,
                                                     const EntrySource& src = reference_source()) {
  Classical which;
  if (kind == TriangleKind::BinomialWard1) {
    which = Classical::Stirling1;
  } else if (kind == TriangleKind::BinomialWard2) {
    which = Classical::Stirling2;
  } else {
    throw std::invalid_argument("check_conjecture_rowsums_stirling: kind must be BinomialWard1 or BinomialWard2");
  }
  detail::ReportBuilder rb(which == Classical::Stirling1 ? "conjecture-stirling1-rowsums"
                                                         : "conjecture-stirling2-rowsums",
                           "0<=n<=" + std::to_string(max_n), /*conjecture=*/true);
  for (long n = 0; n <= max_n; ++n) {
    Integer sum;
    for (long k = 0; k <= n; ++k) sum += src(kind, n, k);
    rb.compare(n, std::nullopt, Rational(sum), Rational(central(which, n)));
  }
  return std::move(rb).finish();
}

// ---------------------------------------------------------------------------
// Cross-route relations

// WardLah(n,k) = sum_{m=0}^{k} (-1)^{m+k} C(n+k, n+m) C(n+m-1, m-1) (n+m)!/m!
inline CheckReport check_alternating_sum_wardlah(long max_n,
                                                 const EntrySource& src = reference_source()) {
  const auto K = TriangleKind::WardLah;
  return detail::check_entrywise("wardlah-alternating-sum", 1, max_n, K, src, [](long n, long k) {
    Rational sum;
    for (long m = 0; m <= k; ++m) {
      sum += Rational(sign_power(m + k) * binomial(n + k, n + m) * binomial(n + m - 1, m - 1)) *
             Rational(factorial(n + m), factorial(m));
    }
    return std::optional<Rational>(sum);
  });
}

// X*(n,k) (n+k)^{n falling} = (2n)! X(n,k) and X°(n,k) (n+k)! (n-k)! = (2n)! X(n,k).
inline CheckReport check_scaling_relations(long max_n, const EntrySource& src = reference_source()) {
  detail::ReportBuilder rb("scaling-relations", "0<=k<=n<=" + std::to_string(max_n) + ", all families");
  for (auto kind : kAllKinds) {
    if (scale_of(kind) == Scale::Plain) continue;
    const auto base = base_kind(kind);
    for (long n = 0; n <= max_n; ++n) {
      for (long k = 0; k <= n; ++k) {
        const Integer x = src(base, n, k);
        const Integer scaled = src(kind, n, k);
        Integer lhs = scale_of(kind) == Scale::Varied
                          ? scaled * falling_factorial(Integer(n + k), n)
                          : scaled * factorial(n + k) * factorial(n - k);
        rb.compare(n, k, Rational(lhs), Rational(factorial(2 * n) * x));
      }
    }
  }
  return std::move(rb).finish();
}

// Closed forms for columns 1, n-1 and the diagonal.
inline CheckReport check_special_values(long max_n, const EntrySource& src = reference_source()) {
  detail::ReportBuilder rb("special-values", "n<=" + std::to_string(max_n));
  auto f = [](long x) { return factorial(x); };
  for (long n = 1; n <= max_n; ++n) {
    rb.compare(n, 1, Rational(src(TriangleKind::WardLah, n, 1)), Rational(f(n + 1)));
    rb.compare(n, n, Rational(src(TriangleKind::WardLah, n, n)), Rational(f(2 * n), f(n)));
    rb.compare(n, 1, Rational(src(TriangleKind::VariedWardLah, n, 1)), Rational(f(2 * n)));
    rb.compare(n, n, Rational(src(TriangleKind::VariedWardLah, n, n)), Rational(f(2 * n)));
    rb.compare(n, n, Rational(src(TriangleKind::BinomialWardLah, n, n)), Rational(f(2 * n), f(n)));
    if (n >= 2) {
      rb.compare(n, 1, Rational(src(TriangleKind::BinomialWardLah, n, 1)), Rational(f(2 * n), f(n - 1)));
      rb.compare(n, n - 1, Rational(src(TriangleKind::WardLah, n, n - 1)),
                 Rational(f(2 * n - 1), f(n - 2)));
      rb.compare(n, n - 1, Rational(src(TriangleKind::VariedWardLah, n, n - 1)),
                 Rational(Integer(n - 1) * f(2 * n)));
      rb.compare(n, n - 1, Rational(src(TriangleKind::BinomialWardLah, n, n - 1)),
                 Rational(f(2 * n), f(n - 2)));
    } else {
      rb.skip();
    }
  }
  return std::move(rb).finish();
}

// (-1)^k (n+k)^{n falling} P(n,k; a) against the Ward1 / Ward2 entries.
inline CheckReport check_partition_transform_calibration(long max_n,
                                                         const EntrySource& src = reference_source()) {
  detail::ReportBuilder rb("partition-transform-calibration", detail::range_nk(1, max_n) + ", Ward1 and Ward2");
  const auto first = ArgumentSequence::ward_first_kind();
  const auto second = ArgumentSequence::ward_second_kind();
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 1; k <= n; ++k) {
      const Rational pre(sign_power(k) * falling_factorial(Integer(n + k), n));
      rb.compare(n, k, Rational(src(TriangleKind::Ward1, n, k)), pre * partition_transform(n, k, first));
      rb.compare(n, k, Rational(src(TriangleKind::Ward2, n, k)), pre * partition_transform(n, k, second));
    }
  }
  return std::move(rb).finish();
}

// Entrywise agreement of two triangles over their common rows.
inline CheckReport compare_triangles(const Triangle& a, const Triangle& b) {
  const long rows = std::min(a.max_row(), b.max_row());
  detail::ReportBuilder rb(std::string(to_string(a.kind)) + " " + std::string(to_string(a.strategy)) +
                               " vs " + std::string(to_string(b.strategy)),
                           "0<=k<=n<=" + std::to_string(rows));
  for (long n = 0; n <= rows; ++n) {
    for (long k = 0; k <= n; ++k) rb.compare(n, k, Rational(a.at(n, k)), Rational(b.at(n, k)));
  }
  return std::move(rb).finish();
}

// Every supported strategy pair of `kind`; pairs involving the partition
// transform are compared up to `max_n_partition`, the rest up to `max_n`.
inline std::vector<CheckReport> check_strategy_equivalence(TriangleKind kind, long max_n,
                                                           long max_n_partition) {
  std::vector<Triangle> built;
  for (auto s : supported_strategies(kind)) {
    const long rows = s == Strategy::PartitionTransform ? max_n_partition : max_n;
    built.push_back(triangle(kind, rows, s));
  }
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < built.size(); ++i) {
    for (std::size_t j = i + 1; j < built.size(); ++j) out.push_back(compare_triangles(built[i], built[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

struct IdentitySuiteLimits {
  long max_n = 30;
  long series_max_k = 8;
  long series_order = 24;
};

// Every proven relation (conjectures excluded).
inline std::vector<CheckReport> run_identity_suite(const IdentitySuiteLimits& lim,
                                                   const EntrySource& src = reference_source()) {
  const long n = lim.max_n;
  std::vector<CheckReport> out;
  out.push_back(check_ward1_recurrence(n, src));
  out.push_back(check_ward2_recurrence(n, src));
  out.push_back(check_wardlah_rational_recurrence(n, src));
  out.push_back(check_wardlah_integer_recurrence(n, src));
  out.push_back(check_wardlah_m1_recurrence(n, src));
  out.push_back(check_varied_ward1_recurrence(n, src));
  out.push_back(check_varied_ward2_recurrence(n, src));
  out.push_back(check_varied_wardlah_recurrence(n, src));
  out.push_back(check_binomial_ward1_recurrence(n, src));
  out.push_back(check_binomial_ward2_recurrence(n, src));
  out.push_back(check_binomial_wardlah_recurrence(n, src));
  out.push_back(check_horizontal_wardlah(n, n - 1, src));
  out.push_back(check_horizontal_varied_wardlah(n, n - 1, src));
  out.push_back(check_horizontal_binomial_wardlah(n, n - 1, src));
  out.push_back(check_order3_wardlah(n, src));
  out.push_back(check_order5_binomial_wardlah(n, src));
  for (long k = 1; k <= lim.series_max_k; ++k) {
    out.push_back(check_egf_wardlah(k, std::max(lim.series_order, 2 * k), src));
    out.push_back(check_gf_variedwardlah(k, std::max(lim.series_order, k), src));
  }
  out.push_back(check_lah_variedwardlah(n, src));
  out.push_back(check_central_lah_rowsums(n, src));
  out.push_back(check_alternating_sum_wardlah(n, src));
  out.push_back(check_scaling_relations(n, src));
  out.push_back(check_special_values(n, src));
  return out;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace ward
