#pragma once

// The nine Ward-related triangles, each computable by several independent
// routes, and the classical Stirling / Lah reference triangles.
//
// Families and their rescalings (X is Ward1, Ward2 or WardLah):
//   plain     X(n, k)
//   varied    X*(n, k) = (2n)! / (n+k)^{n falling} * X(n, k)
//   binomial  X°(n, k) = C(2n, n+k) * X(n, k)
//
// Every triangle has T(0,0) = 1, T(n,0) = 0 for n >= 1 and T(n,k) = 0 for k > n.

#include <array>
#include <cctype>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ward/exact_arith.hpp"
#include "ward/partition_transform.hpp"

namespace ward {

enum class TriangleKind {
  Ward1,
  Ward2,
  WardLah,
  VariedWard1,
  VariedWard2,
  VariedWardLah,
  BinomialWard1,
  BinomialWard2,
  BinomialWardLah,
};

enum class Strategy {
  Recurrence,
  Explicit,
  PartitionTransform,
  Scaling,
  AlternatingSum,
};

inline constexpr std::array<TriangleKind, 9> kAllKinds = {
    TriangleKind::Ward1,         TriangleKind::Ward2,         TriangleKind::WardLah,
    TriangleKind::VariedWard1,   TriangleKind::VariedWard2,   TriangleKind::VariedWardLah,
    TriangleKind::BinomialWard1, TriangleKind::BinomialWard2, TriangleKind::BinomialWardLah,
};

inline constexpr std::array<Strategy, 5> kAllStrategies = {
    Strategy::Recurrence, Strategy::Explicit, Strategy::PartitionTransform,
    Strategy::Scaling,    Strategy::AlternatingSum,
};

inline std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Ward1: return "Ward1";
    case TriangleKind::Ward2: return "Ward2";
    case TriangleKind::WardLah: return "WardLah";
    case TriangleKind::VariedWard1: return "VariedWard1";
    case TriangleKind::VariedWard2: return "VariedWard2";
    case TriangleKind::VariedWardLah: return "VariedWardLah";
    case TriangleKind::BinomialWard1: return "BinomialWard1";
    case TriangleKind::BinomialWard2: return "BinomialWard2";
    case TriangleKind::BinomialWardLah: return "BinomialWardLah";
  }
  return "?";
}

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Recurrence: return "recurrence";
    case Strategy::Explicit: return "explicit";
    case Strategy::PartitionTransform: return "partition-transform";
    case Strategy::Scaling: return "scaling";
    case Strategy::AlternatingSum: return "alternating-sum";
  }
  return "?";
}

namespace detail {

// Lower-cases and drops '-', '_' and spaces so "ward-lah", "WardLah" and
// "ward_lah" compare equal.
inline std::string fold_name(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace detail

inline std::optional<TriangleKind> parse_kind(std::string_view name) {
  const std::string folded = detail::fold_name(name);
  for (auto kind : kAllKinds) {
    if (detail::fold_name(to_string(kind)) == folded) return kind;
  }
  return std::nullopt;
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
  const std::string folded = detail::fold_name(name);
  for (auto s : kAllStrategies) {
    if (detail::fold_name(to_string(s)) == folded) return s;
  }
  if (folded == "pt" || folded == "partition") return Strategy::PartitionTransform;
  if (folded == "altsum") return Strategy::AlternatingSum;
  return std::nullopt;
}

enum class Family { Ward1, Ward2, WardLah };
enum class Scale { Plain, Varied, Binomial };

inline constexpr Family family_of(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Ward1:
    case TriangleKind::VariedWard1:
    case TriangleKind::BinomialWard1: return Family::Ward1;
    case TriangleKind::Ward2:
    case TriangleKind::VariedWard2:
    case TriangleKind::BinomialWard2: return Family::Ward2;
    default: return Family::WardLah;
  }
}

inline constexpr Scale scale_of(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Ward1:
    case TriangleKind::Ward2:
    case TriangleKind::WardLah: return Scale::Plain;
    case TriangleKind::VariedWard1:
    case TriangleKind::VariedWard2:
    case TriangleKind::VariedWardLah: return Scale::Varied;
    default: return Scale::Binomial;
  }
}

// The unscaled triangle a varied or binomial kind is derived from.
inline constexpr TriangleKind base_kind(TriangleKind kind) {
  switch (family_of(kind)) {
    case Family::Ward1: return TriangleKind::Ward1;
    case Family::Ward2: return TriangleKind::Ward2;
    default: return TriangleKind::WardLah;
  }
}

inline std::span<const Strategy> supported_strategies(TriangleKind kind) {
  static constexpr std::array<Strategy, 2> plain_ward = {Strategy::Recurrence,
                                                         Strategy::PartitionTransform};
  static constexpr std::array<Strategy, 4> ward_lah = {
      Strategy::Recurrence, Strategy::Explicit, Strategy::PartitionTransform,
      Strategy::AlternatingSum};
  static constexpr std::array<Strategy, 3> scaled_ward = {
      Strategy::Recurrence, Strategy::PartitionTransform, Strategy::Scaling};
  static constexpr std::array<Strategy, 4> scaled_lah = {
      Strategy::Recurrence, Strategy::Explicit, Strategy::PartitionTransform, Strategy::Scaling};

  switch (kind) {
    case TriangleKind::Ward1:
    case TriangleKind::Ward2: return plain_ward;
    case TriangleKind::WardLah: return ward_lah;
    case TriangleKind::VariedWard1:
    case TriangleKind::VariedWard2:
    case TriangleKind::BinomialWard1:
    case TriangleKind::BinomialWard2: return scaled_ward;
    case TriangleKind::VariedWardLah:
    case TriangleKind::BinomialWardLah: return scaled_lah;
  }
  return {};
}

inline bool supports(TriangleKind kind, Strategy strategy) {
  for (auto s : supported_strategies(kind)) {
    if (s == strategy) return true;
  }
  return false;
}

class UnsupportedStrategy : public std::invalid_argument {
 public:
  UnsupportedStrategy(TriangleKind kind, Strategy strategy)
      : std::invalid_argument("strategy '" + std::string(to_string(strategy)) +
                              "' is not available for " + std::string(to_string(kind))) {}
};

inline void require_supported(TriangleKind kind, Strategy strategy) {
  if (!supports(kind, strategy)) throw UnsupportedStrategy(kind, strategy);
}

using Row = std::vector<Integer>;

/// Rows 0..N of one triangle, row n holding T(n, 0..n).
struct Triangle {
  TriangleKind kind{};
  Strategy strategy{};
  std::vector<Row> rows;

  // Highest row index held (rows.size() - 1).
  long max_row() const { return static_cast<long>(rows.size()) - 1; }

  // Zero outside 0 <= k <= n; throws for rows that were not built.
  Integer at(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > max_row()) {
      throw std::out_of_range("Triangle::at: row " + std::to_string(n) + " not built");
    }
    return rows[n][k];
  }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.size();
    return c;
  }
};

// ---------------------------------------------------------------------------
// Closed-form routes. All assume 1 <= k <= n.

namespace detail {

inline Integer ward_lah_explicit(long n, long k) {
  return exact_divide(factorial(n + k), factorial(k)) * binomial(n - 1, k - 1);
}

inline Integer varied_ward_lah_explicit(long n, long k) {
  return factorial(2 * n) * binomial(n - 1, k - 1);
}

inline Integer binomial_ward_lah_explicit(long n, long k) {
  return exact_divide(factorial(2 * n), factorial(k) * factorial(n - k)) *
         binomial(n - 1, k - 1);
}

inline Integer explicit_value(TriangleKind kind, long n, long k) {
  switch (kind) {
    case TriangleKind::WardLah: return ward_lah_explicit(n, k);
    case TriangleKind::VariedWardLah: return varied_ward_lah_explicit(n, k);
    case TriangleKind::BinomialWardLah: return binomial_ward_lah_explicit(n, k);
    default: throw UnsupportedStrategy(kind, Strategy::Explicit);
  }
}

// sum_{m=0}^{k} (-1)^{m+k} C(n+k, n+m) C(n+m-1, m-1) (n+m)!/m!
inline Integer ward_lah_alternating_sum(long n, long k) {
  Integer total;
  for (long m = 0; m <= k; ++m) {
    Integer term = sign_power(m + k) * binomial(n + k, n + m) * binomial(n + m - 1, m - 1) *
                   exact_divide(factorial(n + m), factorial(m));
    total += term;
  }
  return total;
}

inline const ArgumentSequence& argument_sequence(Family family) {
  static const ArgumentSequence first = ArgumentSequence::ward_first_kind();
  static const ArgumentSequence second = ArgumentSequence::ward_second_kind();
  static const ArgumentSequence one = ArgumentSequence::constant_one();
  switch (family) {
    case Family::Ward1: return first;
    case Family::Ward2: return second;
    default: return one;
  }
}

// (-1)^k * prefactor * P(n, k; a) with the prefactor set by the scale:
// (n+k)^{n falling}, (2n)!, or (2n)!/(k!(n-k)!).
inline Integer partition_transform_value(TriangleKind kind, long n, long k) {
  Rational p = partition_transform(n, k, argument_sequence(family_of(kind)));
  Rational prefactor;
  switch (scale_of(kind)) {
    case Scale::Plain: prefactor = falling_factorial(n + k, n); break;
    case Scale::Varied: prefactor = factorial(2 * n); break;
    case Scale::Binomial:
      prefactor = Rational(factorial(2 * n), factorial(k) * factorial(n - k));
      break;
  }
  return (Rational(sign_power(k)) * prefactor * p).to_integer();
}

// Rescales an entry of the base family into `kind`.
inline Integer scale_value(TriangleKind kind, long n, long k, const Integer& base) {
  switch (scale_of(kind)) {
    case Scale::Plain: return base;
    case Scale::Varied: return exact_divide(factorial(2 * n) * base, falling_factorial(n + k, n));
    case Scale::Binomial: return binomial(2 * n, n + k) * base;
  }
  return base;
}

// One recurrence step: T(n, k) from row n-1. Binomial kinds are only valid
// for k < n; their diagonal is supplied by the caller.
inline Integer recurrence_step(TriangleKind kind, long n, long k, const Row& prev) {
  auto p = [&](long j) -> Integer {
    return (j < 0 || j >= static_cast<long>(prev.size())) ? Integer(0) : prev[j];
  };
  const Integer up = p(k);        // T(n-1, k)
  const Integer diag = p(k - 1);  // T(n-1, k-1)
  const Integer two_n_two_n_minus_1(2 * n * (2 * n - 1));
  switch (kind) {
    case TriangleKind::Ward1:
      return Integer(n + k - 1) * (up + diag);
    case TriangleKind::Ward2:
      return Integer(k) * up + Integer(n + k - 1) * diag;
    case TriangleKind::WardLah:
      return Integer(2 * (n + k - 1)) * diag + Integer(n + 2 * k - 1) * up;
    case TriangleKind::VariedWard1:
      return exact_divide(two_n_two_n_minus_1 * (Integer(n + k - 1) * up + Integer(k) * diag),
                          Integer(n + k));
    case TriangleKind::VariedWard2:
      return exact_divide(two_n_two_n_minus_1 * Integer(k) * (up + diag), Integer(n + k));
    case TriangleKind::VariedWardLah:
      return two_n_two_n_minus_1 * (up + diag);
    case TriangleKind::BinomialWard1:
      return exact_divide(two_n_two_n_minus_1 * (Integer(n + k - 1) * up + Integer(n - k) * diag),
                          Integer((n + k) * (n - k)));
    case TriangleKind::BinomialWard2:
      return exact_divide(two_n_two_n_minus_1 * (Integer(k) * up + Integer(n - k) * diag),
                          Integer((n + k) * (n - k)));
    case TriangleKind::BinomialWardLah:
      return exact_divide(two_n_two_n_minus_1 * (Integer(k) * up + Integer(n - k) * diag),
                          Integer(k * (n - k)));
  }
  return 0;
}

}  // namespace detail

/// Builds one (kind, strategy) triangle row by row and keeps every
/// completed row. Not synchronized; see TriangleCache for shared use.
class TriangleBuilder {
 public:
  TriangleBuilder(TriangleKind kind, Strategy strategy) : kind_(kind), strategy_(strategy) {
    require_supported(kind, strategy);
    const bool needs_base = strategy == Strategy::Scaling ||
                            (strategy == Strategy::Recurrence && scale_of(kind) == Scale::Binomial);
    if (needs_base) {
      base_ = std::make_unique<TriangleBuilder>(base_kind(kind), Strategy::Recurrence);
    }
  }

  TriangleKind kind() const { return kind_; }
  Strategy strategy() const { return strategy_; }
  long rows_built() const { return static_cast<long>(rows_.size()); }

  const Row& row(long n) {
    if (n < 0) throw std::invalid_argument("TriangleBuilder::row: negative row");
    while (rows_built() <= n) rows_.push_back(compute_row(rows_built()));
    return rows_[n];
  }

  Integer value(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return row(n)[k];
  }

  Triangle build(long rows) {
    if (rows < 0) throw std::invalid_argument("TriangleBuilder::build: negative row count");
    row(rows);
    Triangle t{kind_, strategy_, {}};
    t.rows.assign(rows_.begin(), rows_.begin() + rows + 1);
    return t;
  }

 private:
  Row compute_row(long n) {
    Row r(n + 1);
    if (n == 0) {
      r[0] = 1;
      return r;
    }
    for (long k = 1; k <= n; ++k) r[k] = entry(n, k);
    return r;
  }

  Integer entry(long n, long k) {
    switch (strategy_) {
      case Strategy::Recurrence:
        if (scale_of(kind_) == Scale::Binomial && k == n) {
          // C(2n, 2n) = 1, so the diagonal equals the base diagonal.
          return detail::scale_value(kind_, n, k, base_->value(n, k));
        }
        return detail::recurrence_step(kind_, n, k, rows_[n - 1]);
      case Strategy::Explicit:
        return detail::explicit_value(kind_, n, k);
      case Strategy::PartitionTransform:
        return detail::partition_transform_value(kind_, n, k);
      case Strategy::Scaling:
        return detail::scale_value(kind_, n, k, base_->value(n, k));
      case Strategy::AlternatingSum:
        return detail::ward_lah_alternating_sum(n, k);
    }
    return 0;
  }

  TriangleKind kind_;
  Strategy strategy_;
  std::deque<Row> rows_;
  std::unique_ptr<TriangleBuilder> base_;
};

/// Thread-safe memo of builders keyed by (kind, strategy). Completed rows
/// are never modified, so readers only contend while a triangle grows.
class TriangleCache {
 public:
  Integer value(TriangleKind kind, long n, long k, Strategy strategy) {
    require_supported(kind, strategy);
    if (n < 0 || k < 0 || k > n) return 0;
    Slot& slot = slot_for(kind, strategy);
    {
      std::shared_lock lock(slot.mutex);
      if (slot.builder.rows_built() > n) return slot.builder.row(n)[k];
    }
    std::unique_lock lock(slot.mutex);
    return slot.builder.value(n, k);
  }

  Triangle triangle(TriangleKind kind, long rows, Strategy strategy) {
    require_supported(kind, strategy);
    Slot& slot = slot_for(kind, strategy);
    std::unique_lock lock(slot.mutex);
    return slot.builder.build(rows);
  }

  static TriangleCache& global() {
    static TriangleCache cache;
    return cache;
  }

 private:
  struct Slot {
    Slot(TriangleKind kind, Strategy strategy) : builder(kind, strategy) {}
    std::shared_mutex mutex;
    TriangleBuilder builder;
  };

  Slot& slot_for(TriangleKind kind, Strategy strategy) {
    std::lock_guard lock(map_mutex_);
    auto key = std::make_pair(kind, strategy);
    auto it = slots_.find(key);
    if (it == slots_.end()) {
      it = slots_.emplace(key, std::make_unique<Slot>(kind, strategy)).first;
    }
    return *it->second;
  }

  std::mutex map_mutex_;
  std::map<std::pair<TriangleKind, Strategy>, std::unique_ptr<Slot>> slots_;
};

/// Exact entry T(n, k) of `kind` computed by `strategy`.
inline Integer value(TriangleKind kind, long n, long k, Strategy strategy) {
  require_supported(kind, strategy);
  if (n < 0 || k < 0) throw std::invalid_argument("value: negative index");
  if (k > n || (k == 0 && n > 0)) return 0;
  if (n == 0) return 1;
  switch (strategy) {
    case Strategy::Explicit: return detail::explicit_value(kind, n, k);
    case Strategy::PartitionTransform: return detail::partition_transform_value(kind, n, k);
    case Strategy::AlternatingSum: return detail::ward_lah_alternating_sum(n, k);
    default: return TriangleCache::global().value(kind, n, k, strategy);
  }
}

inline Triangle triangle(TriangleKind kind, long rows, Strategy strategy) {
  require_supported(kind, strategy);
  if (rows < 0) throw std::invalid_argument("triangle: negative row count");
  return TriangleBuilder(kind, strategy).build(rows);
}

// ---------------------------------------------------------------------------
// Classical reference triangles

enum class Classical { Stirling1, Stirling2, Lah };

namespace detail {

inline Integer classical_step(Classical which, long n, long k, const Row& prev) {
  auto p = [&](long j) -> Integer {
    return (j < 0 || j >= static_cast<long>(prev.size())) ? Integer(0) : prev[j];
  };
  switch (which) {
    case Classical::Stirling1: return p(k - 1) + Integer(n - 1) * p(k);
    case Classical::Stirling2: return p(k - 1) + Integer(k) * p(k);
    case Classical::Lah: return p(k - 1) + Integer(n + k - 1) * p(k);
  }
  return 0;
}

inline Integer classical_value(Classical which, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex mutex;
  static std::array<std::vector<Row>, 3> tables;
  std::lock_guard lock(mutex);
  auto& rows = tables[static_cast<std::size_t>(which)];
  if (rows.empty()) rows.push_back(Row{Integer(1)});
  while (static_cast<long>(rows.size()) <= n) {
    const long m = static_cast<long>(rows.size());
    Row r(m + 1);
    for (long j = 1; j <= m; ++j) r[j] = classical_step(which, m, j, rows.back());
    rows.push_back(std::move(r));
  }
  return rows[n][k];
}

}  // namespace detail

// Unsigned Stirling numbers of the first kind (cycle numbers).
inline Integer stirling1_unsigned(long n, long k) {
  return detail::classical_value(Classical::Stirling1, n, k);
}

// Stirling numbers of the second kind (set partitions).
inline Integer stirling2(long n, long k) {
  return detail::classical_value(Classical::Stirling2, n, k);
}

// Unsigned Lah numbers from L(n,k) = L(n-1,k-1) + (n+k-1) L(n-1,k).
inline Integer lah(long n, long k) { return detail::classical_value(Classical::Lah, n, k); }

// n!/k! C(n-1, k-1) for n, k >= 1, with the same boundary values as lah().
inline Integer lah_explicit(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  return exact_divide(factorial(n), factorial(k)) * binomial(n - 1, k - 1);
}

inline Integer central(Classical which, long n) {
  if (n < 0) throw std::invalid_argument("central: negative argument");
  return detail::classical_value(which, 2 * n, n);
}

}  // namespace ward
