#include "snakeword/word.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace snakeword {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::LeadingZero: return "LeadingZero";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotASubword: return "NotASubword";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::NotAnAntichain: return "NotAnAntichain";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::NoQualifyingRegion: return "NoQualifyingRegion";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

BinaryWord::BinaryWord(std::vector<Bit> letters) : letters_(std::move(letters)) {
  for (Bit b : letters_) {
    if (b > 1) throw Error(ErrorCode::InvalidCharacter, "letter out of {0,1}");
  }
  if (!letters_.empty() && letters_.front() != 1) {
    throw Error(ErrorCode::LeadingZero, "binary words start with 1");
  }
}

Bit BinaryWord::at(std::size_t i) const {
  if (i < 1 || i > letters_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "letter " + std::to_string(i) + " of a word of length " +
                    std::to_string(letters_.size()));
  }
  return letters_[i - 1];
}

BinaryWord BinaryWord::appended(Bit letter) const {
  std::vector<Bit> next = letters_;
  next.push_back(letter);
  return BinaryWord(std::move(next));
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Bit b : letters_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) {
  return os << (w.empty() ? std::string("ε") : w.str());
}

BinaryWord parse_word(std::string_view text) {
  std::vector<Bit> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidCharacter,
                  "character '" + std::string(1, c) + "' at position " + std::to_string(i + 1));
    }
    letters.push_back(static_cast<Bit>(c - '0'));
  }
  return BinaryWord(std::move(letters));
}

std::vector<std::size_t> BlockFactorization::ends() const {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (const Block& b : blocks) {
    pos += b.length;
    out.push_back(pos);
  }
  return out;
}

std::string BlockFactorization::str() const {
  std::string s;
  for (const Block& b : blocks) {
    if (!s.empty()) s.push_back(' ');
    s += std::to_string(b.letter) + "^" + std::to_string(b.length);
  }
  return s;
}

BlockFactorization factor_blocks(const BinaryWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "cannot factor the empty word");
  BlockFactorization f;
  for (Bit b : w.letters()) {
    if (!f.blocks.empty() && f.blocks.back().letter == b) {
      ++f.blocks.back().length;
    } else {
      f.blocks.push_back(Block{b, 1});
    }
  }
  return f;
}

bool is_subword(const BinaryWord& s, const BinaryWord& w) {
  std::size_t k = 0;
  for (Bit b : w.letters()) {
    if (k < s.size() && s.letters()[k] == b) ++k;
  }
  return k == s.size();
}

std::vector<IndexRun> consecutive_runs(std::span<const std::size_t> indices) {
  std::vector<IndexRun> runs;
  for (std::size_t i : indices) {
    if (!runs.empty() && runs.back().last + 1 == i) {
      runs.back().last = i;
    } else {
      runs.push_back(IndexRun{i, i});
    }
  }
  return runs;
}

Embedding leftmost_embedding(const BinaryWord& s, const BinaryWord& w) {
  if (s.empty()) throw Error(ErrorCode::NotASubword, "the empty word has no embedding");
  Embedding e;
  std::size_t next = 1;
  for (Bit letter : s.letters()) {
    while (next <= w.size() && w.at(next) != letter) ++next;
    if (next > w.size()) {
      throw Error(ErrorCode::NotASubword, s.str() + " is not a subword of " + w.str());
    }
    e.indices.push_back(next++);
  }
  e.runs = consecutive_runs(e.indices);
  return e;
}

std::set<BinaryWord> enumerate_subwords(const BinaryWord& w, std::size_t cap) {
  if (w.size() > cap) {
    throw Error(ErrorCode::CapExceeded, "word length " + std::to_string(w.size()) +
                                            " exceeds oracle cap " + std::to_string(cap));
  }
  std::set<BinaryWord> out;
  const std::size_t d = w.size();
  const auto letters = w.letters();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<Bit> picked;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1U) picked.push_back(letters[i]);
    }
    if (!picked.empty() && picked.front() == 0) continue;
    out.insert(BinaryWord(std::move(picked)));
  }
  return out;
}

namespace {

// End of the leftmost embedding of `u` in `w` (0 for the empty word).
std::size_t greedy_end(const BinaryWord& u, const BinaryWord& w) {
  std::size_t pos = 0;
  for (Bit letter : u.letters()) {
    ++pos;
    while (w.at(pos) != letter) ++pos;
  }
  return pos;
}

void spell_paths(SubwordTrie& t) {
  for (NodeId id : t.preorder()) {
    const auto& n = t.node(id);
    if (!n.parent) continue;
    t.set_payload(id, t.payload(*n.parent).appended(*n.edge));
  }
}

}  // namespace

SubwordTrie naive_subword_trie(const BinaryWord& w, std::size_t cap) {
  const std::set<BinaryWord> subwords = enumerate_subwords(w, cap);
  SubwordTrie t{BinaryWord{}};
  std::map<BinaryWord, NodeId> ids{{BinaryWord{}, t.root()}};
  // Length-lex order puts every parent before its children.
  for (const BinaryWord& u : subwords) {
    if (u.empty()) continue;
    const auto letters = u.letters();
    const BinaryWord parent(std::vector<Bit>(letters.begin(), letters.end() - 1));
    const Bit last = letters.back();
    const std::size_t end = greedy_end(parent, w);
    const bool continues = end < w.size() && w.at(end + 1) == last;
    ids[u] = t.add_child(ids.at(parent), continues ? Branch::Left : Branch::Right, last, u);
  }
  return t;
}

SubwordTrie lrs_subword_trie(const BinaryWord& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "the trie construction needs a nonempty word");
  const std::size_t d = w.size();
  SubwordTrie t{BinaryWord{}};

  std::vector<NodeId> spine{t.root()};
  for (std::size_t i = 1; i <= d; ++i) spine.push_back(t.add_child(spine.back(), Branch::Left, w.at(i)));

  // end[l] is the position of the last letter of block u_l, end[0] = 0.
  const BlockFactorization blocks = factor_blocks(w);
  std::vector<std::size_t> end{0};
  for (std::size_t e : blocks.ends()) end.push_back(e);
  const std::size_t m = blocks.count();

  // T_l is rooted at the spine node spelling u_1 ... u_l followed by the
  // first letter of u_{l+1}; copies go on u_1 ... u_{l-1} a^j, j < n_l. For
  // l = 1 the j = 0 node is the root itself, which would spell words with a
  // leading 0, so attachments start at depth 1 there.
  for (std::size_t l = m - 1; l >= 1; --l) {
    const NodeId source = spine[end[l] + 1];
    const Bit edge = w.at(end[l] + 1);
    const std::size_t first = (l == 1) ? 1 : end[l - 1];
    for (std::size_t depth = first; depth < end[l]; ++depth) {
      t.graft_copy(source, spine[depth], Branch::Right, edge);
    }
  }
  spell_paths(t);
  return t;
}

std::vector<BinaryWord> words_of_length(std::size_t length) {
  std::vector<BinaryWord> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  const std::uint64_t count = std::uint64_t{1} << (length - 1);
  out.reserve(count);
  for (std::uint64_t tail = 0; tail < count; ++tail) {
    std::vector<Bit> letters{1};
    for (std::size_t i = length - 1; i-- > 0;) letters.push_back(static_cast<Bit>(tail >> i & 1U));
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace snakeword
