#include "snakeword/poset.hpp"

#include <algorithm>

namespace snakeword {

namespace {

std::strong_ordering length_lex(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

void check_cap(std::size_t d, std::size_t cap) {
  if (d > cap) {
    throw Error(ErrorCode::CapExceeded, "poset size " + std::to_string(d) +
                                            " exceeds oracle cap " + std::to_string(cap));
  }
}

std::vector<std::size_t> subset(std::uint64_t mask, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i) {
    if (mask >> i & 1U) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const Antichain& a, const Antichain& b) {
  return length_lex(a.elements, b.elements);
}

std::strong_ordering operator<=>(const OrderFilter& a, const OrderFilter& b) {
  return length_lex(a.elements, b.elements);
}

std::string format_set(std::span<const std::size_t> elements) {
  std::string s = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(elements[k]);
  }
  return s + "}";
}

PiecewisePoset::PiecewisePoset(std::vector<Slope> slopes) : slopes_(std::move(slopes)) {}

void PiecewisePoset::check_index(std::size_t i) const {
  if (i < 1 || i > size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(i) + " of a poset of size " + std::to_string(size()));
  }
}

Slope PiecewisePoset::slope(std::size_t i) const {
  if (i < 2 || i > size()) {
    throw Error(ErrorCode::IndexOutOfRange, "no Hasse edge enters element " + std::to_string(i));
  }
  return slopes_[i - 2];
}

bool PiecewisePoset::comparable(std::size_t i, std::size_t j) const {
  return less_or_equal(i, j) || less_or_equal(j, i);
}

bool PiecewisePoset::less_or_equal(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  if (i == j) return true;
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  // Walking from lo to hi, every step must go the same way.
  const Slope first = slope(lo + 1);
  for (std::size_t k = lo + 2; k <= hi; ++k) {
    if (slope(k) != first) return false;
  }
  // Rising from lo to hi means lo < hi.
  return (first == Slope::Up) == (i == lo);
}

std::vector<std::pair<std::size_t, std::size_t>> PiecewisePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 2; i <= size(); ++i) {
    if (slope(i) == Slope::Up) {
      out.emplace_back(i - 1, i);
    } else {
      out.emplace_back(i, i - 1);
    }
  }
  return out;
}

BinaryWord PiecewisePoset::word() const {
  std::vector<Bit> letters{1};
  for (Slope s : slopes_) letters.push_back(s == Slope::Up ? 1 : 0);
  return BinaryWord(std::move(letters));
}

PiecewisePoset poset_from_word(const BinaryWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "the empty word has no poset");
  std::vector<Slope> slopes;
  for (std::size_t i = 2; i <= w.size(); ++i) slopes.push_back(w.at(i) == 1 ? Slope::Up : Slope::Down);
  return PiecewisePoset(std::move(slopes));
}

ExtremaList extrema(const PiecewisePoset& p) {
  ExtremaList e{{1}};
  const std::size_t d = p.size();
  for (std::size_t i = 2; i < d; ++i) {
    if (p.slope(i) != p.slope(i + 1)) e.points.push_back(i);
  }
  if (d > 1) e.points.push_back(d);
  return e;
}

std::optional<std::size_t> next_extremum(const ExtremaList& e, std::size_t i) {
  const auto it = std::upper_bound(e.points.begin(), e.points.end(), i);
  if (it == e.points.end()) return std::nullopt;
  return *it;
}

bool is_antichain(const PiecewisePoset& p, std::span<const std::size_t> elements) {
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (elements[a] == elements[b] || p.comparable(elements[a], elements[b])) return false;
    }
  }
  for (std::size_t x : elements) {
    if (x < 1 || x > p.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x) + " not in poset");
    }
  }
  return true;
}

bool is_order_filter(const PiecewisePoset& p, std::span<const std::size_t> elements) {
  std::vector<bool> in(p.size() + 1, false);
  for (std::size_t x : elements) {
    if (x < 1 || x > p.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x) + " not in poset");
    }
    in[x] = true;
  }
  for (std::size_t t : elements) {
    for (std::size_t s = 1; s <= p.size(); ++s) {
      if (!in[s] && p.less_or_equal(t, s)) return false;
    }
  }
  return true;
}

std::set<Antichain> enumerate_antichains(const PiecewisePoset& p, std::size_t cap) {
  const std::size_t d = p.size();
  check_cap(d, cap);
  std::set<Antichain> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    auto s = subset(mask, d);
    if (is_antichain(p, s)) out.insert(Antichain{std::move(s)});
  }
  return out;
}

std::set<OrderFilter> enumerate_order_filters(const PiecewisePoset& p, std::size_t cap) {
  const std::size_t d = p.size();
  check_cap(d, cap);
  std::set<OrderFilter> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    auto s = subset(mask, d);
    if (is_order_filter(p, s)) out.insert(OrderFilter{std::move(s)});
  }
  return out;
}

OrderFilter up_closure(const PiecewisePoset& p, const Antichain& a) {
  if (!std::is_sorted(a.elements.begin(), a.elements.end()) || !is_antichain(p, a.elements)) {
    throw Error(ErrorCode::NotAnAntichain, format_set(a.elements));
  }
  OrderFilter f;
  for (std::size_t s = 1; s <= p.size(); ++s) {
    for (std::size_t t : a.elements) {
      if (p.less_or_equal(t, s)) {
        f.elements.push_back(s);
        break;
      }
    }
  }
  return f;
}

Antichain min_elements(const PiecewisePoset& p, const OrderFilter& f) {
  if (!std::is_sorted(f.elements.begin(), f.elements.end()) ||
      std::adjacent_find(f.elements.begin(), f.elements.end()) != f.elements.end() ||
      !is_order_filter(p, f.elements)) {
    throw Error(ErrorCode::NotAFilter, format_set(f.elements));
  }
  Antichain a;
  for (std::size_t t : f.elements) {
    const bool minimal = std::none_of(f.elements.begin(), f.elements.end(), [&](std::size_t s) {
      return s != t && p.less_or_equal(s, t);
    });
    if (minimal) a.elements.push_back(t);
  }
  return a;
}

Antichain antichain_of_path(std::span<const std::size_t> path) {
  if (path.empty() || path.front() != 0) {
    throw Error(ErrorCode::MalformedPath, "label paths start at 0");
  }
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k] <= path[k - 1]) throw Error(ErrorCode::MalformedPath, "labels must increase");
  }
  Antichain a;
  const auto runs = consecutive_runs(path);
  for (const IndexRun& r : runs) {
    if (r.last != 0) a.elements.push_back(r.last);
  }
  return a;
}

AntichainTrie antichain_trie(const PiecewisePoset& p) {
  const std::size_t d = p.size();
  const BinaryWord w = p.word();
  AntichainTrie t{AntichainNode{0, {}}};

  std::vector<NodeId> spine{t.root()};
  for (std::size_t i = 1; i <= d; ++i) {
    spine.push_back(t.add_child(spine.back(), Branch::Left, w.at(i), AntichainNode{i, {}}));
  }

  const ExtremaList e = extrema(p);
  for (long n = e.n(); n >= 1; --n) {
    const std::size_t hi = e.points[static_cast<std::size_t>(n)];
    const std::size_t lo = e.points[static_cast<std::size_t>(n - 1)];
    const NodeId source = spine[hi + 1];
    for (std::size_t i = lo; i < hi; ++i) {
      t.graft_copy(source, spine[i], Branch::Right, w.at(hi + 1));
    }
  }

  for (NodeId id : t.preorder()) {
    std::vector<std::size_t> labels;
    for (NodeId n : t.path_to(id)) labels.push_back(t.payload(n).label);
    t.set_payload(id, AntichainNode{t.payload(id).label, antichain_of_path(labels)});
  }
  return t;
}

}  // namespace snakeword
