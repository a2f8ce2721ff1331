#include "stoim/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stoim {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require_stoimenow(const Matching& m, const char* op) {
  const auto violations = find_violations(m);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << op << " requires a Stoimenow matching; found "
        << violations.front().to_string();
    fail(msg.str());
  }
}

// Mutable view of a matching during arc surgery. Points keep their
// identity while blocks move or points come and go; positions are
// renumbered once at the end. Blocks, label runs, and the X/Y/Z
// partitions are always computed on the input matching before any
// mutation.
class Workspace {
 public:
  explicit Workspace(const Matching& m) {
    order_.resize(m.point_count());
    std::iota(order_.begin(), order_.end(), 1);
    mate_.assign(m.point_count() + 3, 0);  // room for two inserted points
    for (int p = 1; p <= m.point_count(); ++p) mate_[p] = m.partner(p);
  }

  void set_mate(int a, int b) {
    mate_[a] = b;
    mate_[b] = a;
  }

  // Re-pairs the k-th listed opener with the k-th listed closer.
  void reassign(const std::vector<int>& openers,
                const std::vector<int>& closers) {
    for (std::size_t k = 0; k < openers.size(); ++k)
      set_mate(openers[k], closers[k]);
  }

  // Moves the contiguous block of ids [first_id, last_id] to sit
  // immediately right of anchor_id, preserving the block's order.
  void move_block_after(int first_id, int last_id, int anchor_id) {
    const auto first = index_of(first_id);
    const auto last = index_of(last_id);
    std::vector<int> block(order_.begin() + first,
                           order_.begin() + last + 1);
    order_.erase(order_.begin() + first, order_.begin() + last + 1);
    const auto anchor = index_of(anchor_id);
    order_.insert(order_.begin() + anchor + 1, block.begin(), block.end());
  }

  void insert_before(int new_id, int anchor_id) {
    order_.insert(order_.begin() + index_of(anchor_id), new_id);
  }

  void insert_after(int new_id, int anchor_id) {
    order_.insert(order_.begin() + index_of(anchor_id) + 1, new_id);
  }

  void append(int new_id) { order_.push_back(new_id); }

  void erase(int id) { order_.erase(order_.begin() + index_of(id)); }

  Matching to_matching() const {
    std::vector<int> position(mate_.size(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k)
      position[order_[k]] = static_cast<int>(k) + 1;
    std::vector<int> involution(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k)
      involution[k] = position[mate_[order_[k]]];
    return Matching(std::move(involution));
  }

 private:
  std::ptrdiff_t index_of(int id) const {
    const auto it = std::find(order_.begin(), order_.end(), id);
    return it - order_.begin();
  }

  std::vector<int> order_;  // point ids, left to right
  std::vector<int> mate_;   // mate_[id] = partner id
};

// Opener positions carrying the given label, in increasing order. They
// occupy consecutive positions and their closers increase along the run.
std::vector<int> opener_run(const Matching& m, const LabeledMatching& lab,
                            int label) {
  std::vector<int> run;
  for (int p = 1; p <= m.point_count(); ++p) {
    if (m.is_opener(p) && lab.label_at_opener(p) == label) run.push_back(p);
  }
  return run;
}

// For every label j < bound, splits the label-j opener run into the
// segments X (classify -> 0), Y (1) and Z (2) by closer location, and
// re-pairs the run's positions so the segments read in the requested
// order. Classification happens on the input matching.
template <typename Classify>
void reorder_runs(Workspace& w, const Matching& m, const LabeledMatching& lab,
                  int bound, Classify classify, bool y_before_z) {
  for (int j = 0; j < bound; ++j) {
    std::vector<int> openers = opener_run(m, lab, j);
    std::vector<int> x, y, z;
    for (int o : openers) {
      const int c = m.partner(o);
      switch (classify(c)) {
        case 0: x.push_back(c); break;
        case 1: y.push_back(c); break;
        default: z.push_back(c); break;
      }
    }
    std::vector<int> closers = std::move(x);
    const auto& second = y_before_z ? y : z;
    const auto& third = y_before_z ? z : y;
    closers.insert(closers.end(), second.begin(), second.end());
    closers.insert(closers.end(), third.begin(), third.end());
    w.reassign(openers, closers);
  }
}

// Plain deletion of an arc, renumbering the remaining points (Rem1/Rem2).
Matching erase_arc(const Matching& m, const Arc& arc) {
  Workspace w(m);
  w.erase(arc.opener);
  w.erase(arc.closer);
  return w.to_matching();
}

// The composite removal: move the closer block right of the reduction
// opener next to the reduction closer, rotate each lower label run from
// X,Y,Z to X,Z,Y, then delete the reduction arc.
Matching apply_rem3(const Matching& m, const LabeledMatching& lab,
                    const Arc& red, int i) {
  const int red_opener = red.opener;
  const int red_closer = red.closer;
  int next_opener = red_opener + 1;
  while (!m.is_opener(next_opener)) ++next_opener;  // maxarc's opener bounds this
  std::vector<int> block;                           // closers between the two
  for (int p = red_opener + 1; p < next_opener; ++p) block.push_back(p);

  Workspace w(m);
  reorder_runs(w, m, lab, i,
               [&](int closer) {
                 if (closer < red_opener) return 0;       // X
                 if (closer < next_opener) return 1;      // Y: inside the block
                 return 2;                                // Z
               },
               /*y_before_z=*/false);  // X,Y,Z becomes X,Z,Y
  if (!block.empty())
    w.move_block_after(block.front(), block.back(), red_closer);
  w.erase(red_opener);
  w.erase(red_closer);
  return w.to_matching();
}

}  // namespace

std::string to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::Rem1: return "Rem1";
    case RuleTag::Rem2: return "Rem2";
    case RuleTag::Rem3: return "Rem3";
    case RuleTag::Add1: return "Add1";
    case RuleTag::Add2: return "Add2";
    case RuleTag::Add3: return "Add3";
  }
  return "?";
}

std::string TraceEntry::to_string() const {
  std::ostringstream os;
  os << stoim::to_string(rule) << ' ' << value << ": "
     << before.involution_text() << " -> " << after.involution_text();
  return os.str();
}

RemovalStep remove_arc(const Matching& m) {
  if (m.arc_count() < 2) fail("remove_arc needs at least two arcs");
  require_stoimenow(m, "remove_arc");

  const LabeledMatching lab = labels(m);
  const Arc maxa = maxarc(m);
  const Arc red = redarc(m);
  const int i = lab.label_of(red);
  const int big = lab.label_of(maxa);
  const int level = static_cast<int>(
      std::count(lab.arc_labels().begin(), lab.arc_labels().end(), i));

  RuleTag rule;
  Matching sigma = [&] {
    if (level > 1) {
      rule = RuleTag::Rem1;
      return erase_arc(m, red);
    }
    if (i == big) {
      // Here the reduction arc is the maximal arc [2n-1, 2n].
      rule = RuleTag::Rem2;
      return erase_arc(m, red);
    }
    rule = RuleTag::Rem3;
    return apply_rem3(m, lab, red, i);
  }();

  if (!is_stoimenow(sigma)) {
    throw std::logic_error("remove_arc: result is not Stoimenow on " +
                           m.involution_text());
  }
  const int expected = (i <= stat_m(sigma)) ? big : big - 1;
  if (stat_M(sigma) != expected) {
    throw std::logic_error("remove_arc: statistic update violated on " +
                           m.involution_text());
  }
  return {std::move(sigma), i, rule};
}

AdditionStep add_arc(const Matching& m, int i) {
  require_stoimenow(m, "add_arc");

  const LabeledMatching lab = labels(m);
  const Arc maxa = maxarc(m);
  const Arc red = redarc(m);
  const int small = lab.label_of(red);
  const int big = lab.label_of(maxa);
  if (i < 0 || i > 1 + big) {
    std::ostringstream msg;
    msg << "add_arc: label " << i << " out of range 0.." << 1 + big;
    fail(msg.str());
  }

  const int points = m.point_count();
  const int new_opener = points + 1;
  const int new_closer = points + 2;
  Workspace w(m);
  RuleTag rule;

  if (i == 1 + big) {
    // A fresh rightmost arc.
    rule = RuleTag::Add2;
    w.append(new_opener);
    w.append(new_closer);
  } else if (i <= small) {
    // Split the label-i opener run into the arcs staying left of the
    // maximal arc's opener and the arcs reaching past it; the new opener
    // goes between the two, the new closer right after the maximal
    // arc's opener.
    rule = RuleTag::Add1;
    const std::vector<int> run = opener_run(m, lab, i);
    int first_reaching = 0;
    for (int o : run) {
      if (m.partner(o) > maxa.opener) {
        first_reaching = o;
        break;
      }
    }
    if (first_reaching != 0) {
      w.insert_before(new_opener, first_reaching);
    } else {
      w.insert_after(new_opener, run.back());
    }
    w.insert_after(new_closer, maxa.opener);
  } else {
    // The new opener goes right before the first label-i opener d; the
    // closers right of the maximal arc's opener whose arcs start left
    // of d move next to the new opener, after rotating each lower label
    // run from X,Z,Y back to X,Y,Z.
    rule = RuleTag::Add3;
    int d = 0;
    for (int p = 1; p <= points; ++p) {
      if (m.is_opener(p) && lab.label_at_opener(p) == i) {
        d = p;
        break;
      }
    }
    if (d == 0) throw std::logic_error("add_arc: label run not attained");
    std::vector<int> block;
    for (int p = maxa.opener + 1; p <= points; ++p) {
      if (!m.is_closer(p)) break;
      if (m.partner(p) >= d) break;  // openers increase along a closer run
      block.push_back(p);
    }
    w.insert_before(new_opener, d);
    w.insert_after(new_closer, block.empty() ? maxa.opener : block.back());
    reorder_runs(w, m, lab, i,
                 [&](int closer) {
                   if (closer < d) return 0;  // X
                   if (std::find(block.begin(), block.end(), closer) !=
                       block.end())
                     return 1;  // Y
                   return 2;    // Z
                 },
                 /*y_before_z=*/true);  // X,Z,Y becomes X,Y,Z
    if (!block.empty())
      w.move_block_after(block.front(), block.back(), new_opener);
  }
  w.set_mate(new_opener, new_closer);

  Matching result = w.to_matching();
  if (!is_stoimenow(result)) {
    throw std::logic_error("add_arc: result is not Stoimenow on " +
                           m.involution_text());
  }
  if (stat_m(result) != i) {
    throw std::logic_error("add_arc: reduction label mismatch on " +
                           m.involution_text());
  }
  const int expected = (i <= small) ? big : big + 1;
  if (stat_M(result) != expected) {
    throw std::logic_error("add_arc: statistic update violated on " +
                           m.involution_text());
  }
  return {std::move(result), rule};
}

AscentSequence encode(const Matching& m) {
  require_stoimenow(m, "encode");
  std::vector<int> entries;
  entries.reserve(m.arc_count());
  Matching current = m;
  while (current.arc_count() >= 2) {
    RemovalStep step = remove_arc(current);
    entries.push_back(step.extracted);
    current = std::move(step.result);
  }
  entries.push_back(0);  // the single-arc matching encodes as (0)
  std::reverse(entries.begin(), entries.end());
  return AscentSequence(std::move(entries));
}

Matching decode(const AscentSequence& x) {
  Matching current(std::vector<int>{2, 1});
  const auto& values = x.values();
  for (std::size_t k = 1; k < values.size(); ++k) {
    current = add_arc(current, values[k]).result;
  }
  return current;
}

std::vector<TraceEntry> trace_encode(const Matching& m) {
  require_stoimenow(m, "trace_encode");
  std::vector<TraceEntry> trace;
  trace.reserve(m.arc_count());
  Matching current = m;
  while (current.arc_count() >= 2) {
    RemovalStep step = remove_arc(current);
    trace.push_back(
        {step.rule, step.extracted, current, step.result});
    current = std::move(step.result);
  }
  return trace;
}

}  // namespace stoim
