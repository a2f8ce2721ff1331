#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stoim {

using BigInt = boost::multiprecision::cpp_int;

/// Number of positions i with x_i < x_{i+1}.
int asc(std::span<const int> values);

/// 1-based index of the first entry violating the ascent-sequence
/// condition (x_1 = 0, then 0 <= x_i <= 1 + asc of the prefix), or
/// nullopt if the sequence is valid. An empty sequence reports index 0.
std::optional<std::size_t> first_invalid(std::span<const int> values);

bool is_valid_ascent_sequence(std::span<const int> values);

/// A checked ascent sequence (x_1,...,x_n), n >= 1.
class AscentSequence {
 public:
  /// Throws std::invalid_argument naming the first offending index.
  explicit AscentSequence(std::vector<int> values);

  /// Parses the comma-separated text form, e.g. "0,1,0,1,0,0,1".
  static AscentSequence parse(std::string_view text);

  const std::vector<int>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  int back() const { return values_.back(); }
  int ascents() const;

  std::string to_string() const;

  friend bool operator==(const AscentSequence&,
                         const AscentSequence&) = default;
  friend bool operator<(const AscentSequence& a, const AscentSequence& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<int> values_;
};

/// All ascent sequences of length n, in lexicographic order.
std::vector<AscentSequence> enumerate_sequences(int n);

/// |A_n| as an exact integer (the Fishburn numbers 1, 2, 5, 15, 53, ...).
BigInt count_sequences(int n);

/// Counts of valid completions by state. A prefix is summarised by its
/// last value v and its ascent count a; count(v, a, k) is the number of
/// ways to extend it by k further values.
class CompletionTable {
 public:
  explicit CompletionTable(int max_extra);

  const BigInt& count(int last, int ascents, int extra) const;
  int max_extra() const { return max_extra_; }

 private:
  int max_extra_;
  // table_[k][a][v], 0 <= a <= max_extra, 0 <= v <= a + 1.
  std::vector<std::vector<std::vector<BigInt>>> table_;
};

/// Draws ascent sequences of length n exactly uniformly. Each next value
/// is chosen with probability proportional to the exact count of
/// completions of the resulting state, so no distribution error creeps
/// in. Deterministic for a given seed (mt19937_64 is fully specified by
/// the standard, and the bits are consumed in a fixed order).
class Sampler {
 public:
  Sampler(int n, std::uint64_t seed);

  AscentSequence next();

 private:
  int n_;
  CompletionTable table_;
  std::mt19937_64 rng_;
};

/// One exactly-uniform draw from A_n.
AscentSequence sample_uniform(int n, std::uint64_t seed);

}  // namespace stoim
