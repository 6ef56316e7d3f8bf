#pragma once

// Integer partitions with a prescribed largest part, and the partition
// transformation P(n, k; a) of an argument sequence a_1, a_2, ...
//
//   P(n, k; a) = sum over partitions q of n with q_0 = k of
//                (-1)^k * prod_{j < len(q)} C(q_j, q_{j+1}) * a_{j+1}^{q_j}
//
// with q_{len(q)} = 0.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ward/exact_arith.hpp"

namespace ward {

struct Partition {
  std::vector<long> parts;  // weakly decreasing, all positive

  std::size_t length() const { return parts.size(); }
  long largest() const { return parts.empty() ? 0 : parts.front(); }
  long sum() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Lazily walks the partitions of `n` whose largest part is exactly `k`,
/// in decreasing lexicographic order.
///
/// n = k = 0 yields the empty partition once; k = 0 with n > 0 and k > n
/// yield nothing.
class PartitionEnumerator {
 public:
  PartitionEnumerator(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("PartitionEnumerator: negative argument");
    if (n == 0 && k == 0) {
      current_.emplace();
      return;
    }
    if (k == 0 || k > n) return;
    Partition p;
    p.parts.push_back(k);
    fill_greedy(p.parts, n - k, k);
    current_ = std::move(p);
  }

  const std::optional<Partition>& current() const { return current_; }

  // Advances to the next partition; returns false when exhausted.
  bool advance() {
    if (!current_) return false;
    auto& parts = current_->parts;
    // The head part is fixed; find the rightmost tail part greater than 1.
    std::size_t i = parts.size();
    while (i > 1 && parts[i - 1] == 1) --i;
    if (i <= 1) {
      current_.reset();
      return false;
    }
    std::size_t pos = i - 1;
    long freed = static_cast<long>(parts.size() - pos - 1);  // trailing ones
    long cap = parts[pos] - 1;
    parts.resize(pos + 1);
    parts[pos] = cap;
    fill_greedy(parts, freed + 1, cap);
    return true;
  }

 private:
  static void fill_greedy(std::vector<long>& parts, long remaining, long cap) {
    while (remaining > 0) {
      long p = remaining < cap ? remaining : cap;
      parts.push_back(p);
      remaining -= p;
    }
  }

  std::optional<Partition> current_;
};

inline std::vector<Partition> enumerate_partitions(long n, long k) {
  std::vector<Partition> out;
  PartitionEnumerator it(n, k);
  while (it.current()) {
    out.push_back(*it.current());
    it.advance();
  }
  return out;
}

/// A rule j -> a_j for j >= 1.
class ArgumentSequence {
 public:
  using Rule = std::function<Rational(long)>;

  ArgumentSequence(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  Rational operator()(long j) const {
    if (j < 1) throw std::invalid_argument("ArgumentSequence: index must be >= 1");
    return rule_(j);
  }
  const std::string& name() const { return name_; }

  // a_j = 1
  static ArgumentSequence constant_one() {
    return {"constant-one", [](long) { return Rational(1); }};
  }
  // a_j = j / (j + 1)
  static ArgumentSequence ward_first_kind() {
    return {"ward-first-kind", [](long j) { return Rational(Integer(j), Integer(j + 1)); }};
  }
  // a_j = 1 / (j + 1)
  static ArgumentSequence ward_second_kind() {
    return {"ward-second-kind", [](long j) { return Rational(Integer(1), Integer(j + 1)); }};
  }

 private:
  std::string name_;
  Rule rule_;
};

inline Rational partition_transform(long n, long k, const ArgumentSequence& seq) {
  if (n < 0 || k < 0) throw std::invalid_argument("partition_transform: negative argument");
  if (n == 0 && k == 0) return 1;

  // a_j^e is reused heavily across partitions of the same n.
  std::vector<Rational> terms;
  std::vector<std::vector<std::optional<Rational>>> powers;
  auto power = [&](long j, long e) -> const Rational& {
    while (static_cast<long>(terms.size()) < j) {
      terms.push_back(seq(static_cast<long>(terms.size()) + 1));
      powers.emplace_back();
    }
    auto& row = powers[j - 1];
    if (static_cast<long>(row.size()) <= e) row.resize(e + 1);
    if (!row[e]) row[e] = pow(terms[j - 1], static_cast<unsigned long>(e));
    return *row[e];
  };

  Rational total;
  PartitionEnumerator it(n, k);
  for (; it.current(); it.advance()) {
    const auto& q = it.current()->parts;
    Rational term(sign_power(q.front()));
    for (std::size_t j = 0; j < q.size(); ++j) {
      long next = j + 1 < q.size() ? q[j + 1] : 0;
      term *= Rational(binomial(q[j], next));
      term *= power(static_cast<long>(j) + 1, q[j]);
    }
    total += term;
  }
  return total;
}

}  // namespace ward
