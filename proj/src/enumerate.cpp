#include "stoim/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stoim/bijection.hpp"

namespace stoim {

namespace {

void check_range(int n) {
  if (n < 1 || n > kMaxEnumerationArcs) {
    std::ostringstream msg;
    msg << "arc count " << n << " out of range 1.." << kMaxEnumerationArcs;
    throw std::invalid_argument(msg.str());
  }
}

// Depth-first generation. The next opener is always the smallest free
// position, so placed openers all precede it and the only new nestings a
// candidate arc can create have the candidate on the inside; those are
// rejected as soon as the endpoints collide with a neighbor.
template <typename Visitor>
void extend(std::vector<int>& partner, std::vector<Arc>& placed, int points,
            Visitor&& visit) {
  int opener = 1;
  while (opener <= points && partner[opener] != 0) ++opener;
  if (opener > points) {
    visit(placed);
    return;
  }
  for (int closer = opener + 1; closer <= points; ++closer) {
    if (partner[closer] != 0) continue;
    bool allowed = true;
    for (const Arc& outer : placed) {
      if (outer.closer > closer &&
          (opener == outer.opener + 1 || outer.closer == closer + 1)) {
        allowed = false;
        break;
      }
    }
    if (!allowed) continue;
    partner[opener] = closer;
    partner[closer] = opener;
    placed.push_back({opener, closer});
    extend(partner, placed, points, visit);
    placed.pop_back();
    partner[opener] = 0;
    partner[closer] = 0;
  }
}

// Runs the generation with the first arc pinned to (1, first_closer).
template <typename Visitor>
void extend_branch(int points, int first_closer, Visitor&& visit) {
  std::vector<int> partner(points + 1, 0);
  std::vector<Arc> placed;
  partner[1] = first_closer;
  partner[first_closer] = 1;
  placed.push_back({1, first_closer});
  extend(partner, placed, points, visit);
}

// Splits the top-level choice of the first arc's closer over a small
// worker pool; per-branch results are merged in closer order, which is
// exactly the sequential order.
template <typename BranchResult, typename RunBranch>
std::vector<BranchResult> run_branches(int points, int jobs,
                                       RunBranch&& run_branch) {
  const int branches = points - 1;
  std::vector<BranchResult> results(branches);
  if (jobs <= 1) {
    for (int b = 0; b < branches; ++b) results[b] = run_branch(b + 2);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int b = next.fetch_add(1);
      if (b >= branches) return;
      results[b] = run_branch(b + 2);
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::min(jobs, branches);
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n, int jobs) {
  check_range(n);
  const int points = 2 * n;
  auto run_branch = [points](int first_closer) {
    std::vector<Matching> found;
    extend_branch(points, first_closer, [&](const std::vector<Arc>& placed) {
      found.push_back(Matching::from_arcs(placed));
    });
    return found;
  };
  auto buckets = run_branches<std::vector<Matching>>(points, jobs, run_branch);
  std::vector<Matching> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

BigInt count_matchings(int n, int jobs) {
  check_range(n);
  const int points = 2 * n;
  auto run_branch = [points](int first_closer) {
    std::uint64_t found = 0;
    extend_branch(points, first_closer,
                  [&](const std::vector<Arc>&) { ++found; });
    return found;
  };
  auto buckets = run_branches<std::uint64_t>(points, jobs, run_branch);
  BigInt total = 0;
  for (std::uint64_t c : buckets) total += c;
  return total;
}

std::string CensusReport::to_string() const {
  std::ostringstream os;
  os << "census n=" << n << ": matchings=" << matching_count
     << " sequences=" << sequence_count
     << " bijective=" << (bijective ? "yes" : "no");
  for (const auto& [matching, reason] : failures) {
    os << "\nFAIL " << matching.involution_text() << ": " << reason;
  }
  return os.str();
}

CensusReport verify_bijection(int n) {
  check_range(n);
  CensusReport report;
  report.n = n;
  const auto matchings = enumerate_matchings(n);
  report.matching_count = matchings.size();
  report.sequence_count = count_sequences(n).convert_to<std::uint64_t>();

  std::set<std::vector<int>> images;
  for (const Matching& m : matchings) {
    try {
      const auto trace = trace_encode(m);
      std::vector<int> entries{0};
      for (auto it = trace.rbegin(); it != trace.rend(); ++it)
        entries.push_back(it->value);
      // Statistic updates along the removal chain.
      for (const TraceEntry& step : trace) {
        if (!is_stoimenow(step.after)) {
          report.failures.emplace_back(m, "removal left a forbidden nesting");
          break;
        }
        const int before_M = stat_M(step.before);
        const int after_M = stat_M(step.after);
        const int expected =
            (step.value <= stat_m(step.after)) ? before_M : before_M - 1;
        if (after_M != expected) {
          report.failures.emplace_back(m, "statistic update violated at " +
                                              step.to_string());
          break;
        }
      }
      if (auto bad = first_invalid(entries)) {
        std::ostringstream reason;
        reason << "image is not an ascent sequence (entry " << *bad << ")";
        report.failures.emplace_back(m, reason.str());
        continue;
      }
      if (!images.insert(entries).second) {
        report.failures.emplace_back(m, "image collides with another matching");
        continue;
      }
      if (decode(AscentSequence(entries)) != m) {
        report.failures.emplace_back(m, "decode does not invert encode");
        continue;
      }
    } catch (const std::exception& e) {
      report.failures.emplace_back(m, e.what());
    }
  }
  report.bijective = report.failures.empty() &&
                     report.matching_count == report.sequence_count;
  return report;
}

}  // namespace stoim
