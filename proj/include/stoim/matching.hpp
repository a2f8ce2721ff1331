#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace stoim {

/// One arc [opener, closer] of a matching, with opener < closer.
struct Arc {
  int opener = 0;
  int closer = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& arc);  // "o-c"

/// A perfect matching of {1,...,2n}, stored as a fixed-point-free
/// involution. Positions are 1-based throughout, matching the text forms.
class Matching {
 public:
  /// involution[p-1] is the partner of position p. Throws
  /// std::invalid_argument unless the vector is a fixed-point-free
  /// involution of {1,...,2n}.
  explicit Matching(std::vector<int> involution);

  static Matching from_arcs(std::vector<Arc> arcs);

  /// Accepts the involution form ("3 4 1 2") and the arc form ("1-3,2-4").
  static Matching parse(std::string_view text);

  int arc_count() const { return static_cast<int>(partner_.size()) / 2; }
  int point_count() const { return static_cast<int>(partner_.size()); }

  int partner(int position) const { return partner_[position - 1]; }
  bool is_opener(int position) const { return partner(position) > position; }
  bool is_closer(int position) const { return partner(position) < position; }

  /// All arcs, sorted by opener.
  std::vector<Arc> arcs() const;

  std::string involution_text() const;  // "3 4 1 2"
  std::string arc_text() const;         // "1-3,2-4"

  // Lexicographic on the involution vector; the enumeration order.
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<int> partner_;
};

enum class ViolationKind { Type1, Type2 };

/// A nesting that breaks the Stoimenow property: the inner arc's opener
/// immediately follows the outer arc's opener (Type 2), or the outer
/// arc's closer immediately follows the inner arc's closer (Type 1).
struct ViolationReport {
  ViolationKind kind = ViolationKind::Type1;
  Arc outer;
  Arc inner;

  std::string to_string() const;

  friend bool operator==(const ViolationReport&,
                         const ViolationReport&) = default;
};

/// Every Type 1 / Type 2 pair, ordered by outer opener, then inner
/// opener; a pair that is both yields its Type 2 report first.
std::vector<ViolationReport> find_violations(const Matching& m);

bool is_stoimenow(const Matching& m);

/// Arc labels: an arc is labelled with the number of maximal runs of
/// closers strictly left of its opener.
class LabeledMatching {
 public:
  LabeledMatching(Matching m, std::vector<int> arc_labels);

  const Matching& matching() const { return matching_; }

  /// Labels aligned with matching().arcs().
  const std::vector<int>& arc_labels() const { return labels_; }

  int label_of(const Arc& arc) const;     // throws if the arc is absent
  int label_at_opener(int opener) const;  // throws if not an opener
  int max_label() const;

 private:
  Matching matching_;
  std::vector<int> labels_;
};

LabeledMatching labels(const Matching& m);

/// The arc closed at position 2n.
Arc maxarc(const Matching& m);

/// The arc whose closer sits immediately right of the maximal arc's
/// opener; equals maxarc when maxarc = [2n-1, 2n]. Throws if that
/// position is an opener (which cannot happen in a Stoimenow matching).
Arc redarc(const Matching& m);

int stat_m(const Matching& m);  // label of redarc
int stat_M(const Matching& m);  // label of maxarc

/// Number of arcs carrying the given label (0 for unattained labels).
int level_set_size(const Matching& m, int label);

}  // namespace stoim
