#include "stoim/ascent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace stoim {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

// Uniform draw from [0, bound) using rejection on fixed-width bit blocks,
// low 64-bit word first. bound >= 1.
BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound <= 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~std::uint64_t{0}
                     : ((std::uint64_t{1} << top_bits) - 1);
  while (true) {
    BigInt value = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == words - 1) word &= top_mask;
      value |= BigInt(word) << (64 * w);
    }
    if (value < bound) return value;
  }
}

}  // namespace

int asc(std::span<const int> values) {
  if (values.empty()) fail("asc of an empty sequence");
  int count = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] < values[i + 1]) ++count;
  }
  return count;
}

std::optional<std::size_t> first_invalid(std::span<const int> values) {
  if (values.empty()) return 0;
  if (values[0] != 0) return 1;
  int ascents = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 1 + ascents) return i + 1;
    if (values[i] > values[i - 1]) ++ascents;
  }
  return std::nullopt;
}

bool is_valid_ascent_sequence(std::span<const int> values) {
  return !first_invalid(values).has_value();
}

AscentSequence::AscentSequence(std::vector<int> values) {
  if (auto bad = first_invalid(values)) {
    std::ostringstream msg;
    if (*bad == 0) {
      msg << "ascent sequence must be nonempty";
    } else if (*bad == 1) {
      msg << "entry 1 must be 0, got " << values[0];
    } else {
      msg << "entry " << *bad << " (" << values[*bad - 1]
          << ") violates the ascent bound";
    }
    fail(msg.str());
  }
  values_ = std::move(values);
}

AscentSequence AscentSequence::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  std::size_t index = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() &&
           std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() &&
           std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    ++index;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() ||
        token.empty()) {
      std::ostringstream msg;
      msg << "entry " << index << ": '" << std::string(token)
          << "' is not a valid integer";
      fail(msg.str());
    }
    values.push_back(value);
    start = end + 1;
  }
  return AscentSequence(std::move(values));
}

int AscentSequence::ascents() const { return asc(values_); }

std::string AscentSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) os << ',';
    os << values_[i];
  }
  return os.str();
}

namespace {

void enumerate_rec(int n, std::vector<int>& prefix, int ascents,
                   std::vector<AscentSequence>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int y = 0; y <= 1 + ascents; ++y) {
    prefix.push_back(y);
    enumerate_rec(n, prefix, ascents + (y > prefix[prefix.size() - 2] ? 1 : 0),
                  out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<AscentSequence> enumerate_sequences(int n) {
  if (n < 1) fail("sequence length must be at least 1");
  std::vector<AscentSequence> out;
  std::vector<int> prefix{0};
  enumerate_rec(n, prefix, 0, out);
  return out;
}

CompletionTable::CompletionTable(int max_extra) : max_extra_(max_extra) {
  if (max_extra < 0) fail("max_extra must be non-negative");
  table_.resize(max_extra + 1);
  for (int k = 0; k <= max_extra; ++k) {
    table_[k].resize(max_extra + 2);
    for (int a = 0; a <= max_extra + 1; ++a) {
      table_[k][a].assign(a + 2, 0);
    }
  }
  for (int a = 0; a <= max_extra + 1; ++a) {
    for (int v = 0; v <= a + 1; ++v) table_[0][a][v] = 1;
  }
  for (int k = 1; k <= max_extra; ++k) {
    // States with a > max_extra - k cannot appear with k values left to
    // place, so the loop bound keeps every referenced entry in range.
    for (int a = 0; a + k <= max_extra; ++a) {
      for (int v = 0; v <= a + 1; ++v) {
        BigInt total = 0;
        for (int y = 0; y <= a + 1; ++y) {
          total += table_[k - 1][a + (y > v ? 1 : 0)][y];
        }
        table_[k][a][v] = total;
      }
    }
  }
}

const BigInt& CompletionTable::count(int last, int ascents, int extra) const {
  return table_[extra][ascents][last];
}

BigInt count_sequences(int n) {
  if (n < 1) fail("sequence length must be at least 1");
  CompletionTable table(n - 1);
  return table.count(0, 0, n - 1);
}

namespace {

int checked_length(int n) {
  if (n < 1) fail("sequence length must be at least 1");
  return n;
}

}  // namespace

Sampler::Sampler(int n, std::uint64_t seed)
    : n_(checked_length(n)), table_(n - 1), rng_(seed) {}

AscentSequence Sampler::next() {
  std::vector<int> values{0};
  int last = 0;
  int ascents = 0;
  for (int placed = 1; placed < n_; ++placed) {
    const int extra = n_ - placed;  // values still to place, this one included
    BigInt r = uniform_below(table_.count(last, ascents, extra), rng_);
    int choice = -1;
    for (int y = 0; y <= ascents + 1; ++y) {
      const BigInt& weight =
          table_.count(y, ascents + (y > last ? 1 : 0), extra - 1);
      if (r < weight) {
        choice = y;
        break;
      }
      r -= weight;
    }
    ascents += (choice > last) ? 1 : 0;
    last = choice;
    values.push_back(choice);
  }
  return AscentSequence(std::move(values));
}

AscentSequence sample_uniform(int n, std::uint64_t seed) {
  return Sampler(n, seed).next();
}

}  // namespace stoim
