#include "stoim/matching.hpp"

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

// Parses a non-negative integer; `what` names the token in error messages.
int parse_int(std::string_view token, const std::string& what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    fail(what + ": '" + std::string(token) + "' is not a valid integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Matching parse_involution_form(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    std::ostringstream what;
    what << "token " << values.size() + 1;
    values.push_back(parse_int(text.substr(pos, end - pos), what.str()));
    pos = end;
  }
  if (values.empty()) fail("empty matching text");
  return Matching(std::move(values));
}

Matching parse_arc_form(std::string_view text) {
  std::vector<Arc> arcs;
  auto tokens = split(text, ',');
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    auto token = trim(tokens[k]);
    std::ostringstream what;
    what << "arc " << k + 1;
    auto dash = token.find('-');
    if (dash == std::string_view::npos || dash == 0 ||
        dash + 1 >= token.size()) {
      fail(what.str() + ": '" + std::string(token) +
           "' is not of the form 'opener-closer'");
    }
    int opener = parse_int(trim(token.substr(0, dash)), what.str());
    int closer = parse_int(trim(token.substr(dash + 1)), what.str());
    if (opener >= closer) {
      std::ostringstream msg;
      msg << what.str() << ": opener " << opener
          << " is not less than closer " << closer;
      fail(msg.str());
    }
    arcs.push_back(Arc{opener, closer});
  }
  return Matching::from_arcs(std::move(arcs));
}

}  // namespace

std::string to_string(const Arc& arc) {
  std::ostringstream os;
  os << arc.opener << '-' << arc.closer;
  return os.str();
}

Matching::Matching(std::vector<int> involution) {
  const int points = static_cast<int>(involution.size());
  if (points == 0) fail("matching has no points");
  if (points % 2 != 0) {
    std::ostringstream msg;
    msg << "matching needs an even number of points, got " << points;
    fail(msg.str());
  }
  for (int p = 1; p <= points; ++p) {
    const int q = involution[p - 1];
    if (q < 1 || q > points) {
      std::ostringstream msg;
      msg << "position " << p << ": partner " << q << " out of range 1.."
          << points;
      fail(msg.str());
    }
    if (q == p) {
      std::ostringstream msg;
      msg << "position " << p << " is paired with itself";
      fail(msg.str());
    }
    // Symmetry also rules out repeated partner values.
    if (involution[q - 1] != p) {
      std::ostringstream msg;
      msg << "not an involution: position " << p << " pairs with " << q
          << " but position " << q << " pairs with " << involution[q - 1];
      fail(msg.str());
    }
  }
  partner_ = std::move(involution);
}

Matching Matching::from_arcs(std::vector<Arc> arcs) {
  if (arcs.empty()) fail("matching has no arcs");
  const int points = 2 * static_cast<int>(arcs.size());
  std::vector<int> involution(points, 0);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    std::ostringstream what;
    what << "arc " << k + 1 << " (" << to_string(a) << ")";
    if (a.opener >= a.closer) {
      fail(what.str() + ": opener must be less than closer");
    }
    for (int endpoint : {a.opener, a.closer}) {
      if (endpoint < 1 || endpoint > points) {
        std::ostringstream msg;
        msg << what.str() << ": endpoint " << endpoint
            << " out of range 1.." << points;
        fail(msg.str());
      }
      if (involution[endpoint - 1] != 0) {
        std::ostringstream msg;
        msg << what.str() << ": endpoint " << endpoint
            << " used by more than one arc";
        fail(msg.str());
      }
    }
    involution[a.opener - 1] = a.closer;
    involution[a.closer - 1] = a.opener;
  }
  // Full coverage of 1..2n is implied: all endpoints are distinct, in
  // range, and there are exactly 2n of them.
  return Matching(std::move(involution));
}

Matching Matching::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail("empty matching text");
  if (text.find('-') != std::string_view::npos) return parse_arc_form(text);
  return parse_involution_form(text);
}

std::vector<Arc> Matching::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (int p = 1; p <= point_count(); ++p) {
    if (is_opener(p)) out.push_back(Arc{p, partner(p)});
  }
  return out;  // openers are visited in increasing order
}

std::string Matching::involution_text() const {
  std::ostringstream os;
  for (int p = 1; p <= point_count(); ++p) {
    if (p > 1) os << ' ';
    os << partner(p);
  }
  return os.str();
}

std::string Matching::arc_text() const {
  std::ostringstream os;
  bool first = true;
  for (const Arc& a : arcs()) {
    if (!first) os << ',';
    os << a.opener << '-' << a.closer;
    first = false;
  }
  return os.str();
}

std::string ViolationReport::to_string() const {
  std::ostringstream os;
  if (kind == ViolationKind::Type2) {
    os << "Type2: arc " << stoim::to_string(inner) << " nested in "
       << stoim::to_string(outer) << " with adjacent openers " << outer.opener
       << "," << inner.opener;
  } else {
    os << "Type1: arc " << stoim::to_string(inner) << " nested in "
       << stoim::to_string(outer) << " with adjacent closers " << inner.closer
       << "," << outer.closer;
  }
  return os.str();
}

std::vector<ViolationReport> find_violations(const Matching& m) {
  std::vector<ViolationReport> out;
  const auto arcs = m.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& outer = arcs[i];
      const Arc& inner = arcs[j];
      if (!(outer.opener < inner.opener && inner.closer < outer.closer))
        continue;  // not a nesting
      if (inner.opener == outer.opener + 1)
        out.push_back({ViolationKind::Type2, outer, inner});
      if (outer.closer == inner.closer + 1)
        out.push_back({ViolationKind::Type1, outer, inner});
    }
  }
  return out;
}

bool is_stoimenow(const Matching& m) { return find_violations(m).empty(); }

LabeledMatching::LabeledMatching(Matching m, std::vector<int> arc_labels)
    : matching_(std::move(m)), labels_(std::move(arc_labels)) {}

int LabeledMatching::label_of(const Arc& arc) const {
  return label_at_opener(arc.opener);
}

int LabeledMatching::label_at_opener(int opener) const {
  if (opener < 1 || opener > matching_.point_count() ||
      !matching_.is_opener(opener)) {
    std::ostringstream msg;
    msg << "position " << opener << " is not an opener";
    fail(msg.str());
  }
  const auto arcs = matching_.arcs();
  const auto it = std::lower_bound(
      arcs.begin(), arcs.end(), opener,
      [](const Arc& a, int value) { return a.opener < value; });
  return labels_[static_cast<std::size_t>(it - arcs.begin())];
}

int LabeledMatching::max_label() const {
  return *std::max_element(labels_.begin(), labels_.end());
}

LabeledMatching labels(const Matching& m) {
  std::vector<int> out;
  out.reserve(m.arc_count());
  int runs = 0;
  for (int p = 1; p <= m.point_count(); ++p) {
    if (m.is_closer(p)) {
      if (p == 1 || m.is_opener(p - 1)) ++runs;  // a new run starts here
    } else {
      out.push_back(runs);  // runs strictly left of this opener
    }
  }
  // `out` is aligned with arcs() since both follow opener order.
  return LabeledMatching(m, std::move(out));
}

Arc maxarc(const Matching& m) {
  const int last = m.point_count();
  return Arc{m.partner(last), last};
}

Arc redarc(const Matching& m) {
  const int pos = 1 + m.partner(m.point_count());
  if (m.is_opener(pos)) {
    std::ostringstream msg;
    msg << "position " << pos
        << " (right of the maximal arc's opener) is an opener; "
           "the matching is not Stoimenow";
    fail(msg.str());
  }
  return Arc{m.partner(pos), pos};
}

int stat_m(const Matching& m) { return labels(m).label_of(redarc(m)); }

int stat_M(const Matching& m) { return labels(m).label_of(maxarc(m)); }

int level_set_size(const Matching& m, int label) {
  if (label < 0) return 0;
  const auto lab = labels(m);
  return static_cast<int>(
      std::count(lab.arc_labels().begin(), lab.arc_labels().end(), label));
}

}  // namespace stoim
