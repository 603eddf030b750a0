#include "snakeword/bijections.hpp"

#include <algorithm>

namespace snakeword {

FImage f_detail(const PiecewisePoset& p, const BinaryWord& w, const Antichain& a) {
  if (p.size() != w.size() || p.word() != w) {
    throw Error(ErrorCode::PosetMismatch, "poset was not built from " + w.str());
  }
  if (!std::is_sorted(a.elements.begin(), a.elements.end()) || !is_antichain(p, a.elements)) {
    throw Error(ErrorCode::NotAnAntichain, format_set(a.elements));
  }
  FImage out;
  if (a.elements.empty()) return out;

  const ExtremaList e = extrema(p);
  std::vector<Bit> letters{1};
  std::size_t from = 1;
  for (std::size_t k = 0; k < a.elements.size(); ++k) {
    const std::size_t target = a.elements[k];
    for (std::size_t i = from + 1; i <= target; ++i) letters.push_back(w.at(i));
    if (k + 1 == a.elements.size()) break;

    const auto jump = next_extremum(e, target);
    const std::size_t next = a.elements[k + 1];
    if (!jump || *jump >= next) {
      throw Error(ErrorCode::Internal, "no extremum between " + std::to_string(target) + " and " +
                                           std::to_string(next));
    }
    out.jump_points.push_back(*jump);
    from = *jump;
  }
  out.subword = BinaryWord(std::move(letters));
  if (!is_subword(out.subword, w)) {
    throw Error(ErrorCode::Internal, out.subword.str() + " is not a subword of " + w.str());
  }
  return out;
}

BinaryWord f(const PiecewisePoset& p, const BinaryWord& w, const Antichain& a) {
  return f_detail(p, w, a).subword;
}

Antichain f_inverse(const BinaryWord& w, const BinaryWord& s) {
  Antichain a;
  if (s.empty()) return a;
  const Embedding emb = leftmost_embedding(s, w);
  for (const IndexRun& run : emb.runs) a.elements.push_back(run.last);
  if (!is_antichain(poset_from_word(w), a.elements)) {
    throw Error(ErrorCode::Internal, format_set(a.elements) + " is not an antichain");
  }
  return a;
}

CorrespondenceRecord full_correspondence(const BinaryWord& w, const BinaryWord& s) {
  const PiecewisePoset p = poset_from_word(w);
  CorrespondenceRecord r;
  r.word = w;
  r.subword = s;
  if (!s.empty()) r.embedding = leftmost_embedding(s, w);
  r.antichain = f_inverse(w, s);
  r.filter = up_closure(p, r.antichain);
  r.detail = pm_detail(w, s);
  r.matching = r.detail.matching;

  const std::vector<std::size_t> fil(r.detail.filter.tiles.begin(), r.detail.filter.tiles.end());
  if (fil != r.filter.elements) {
    throw Error(ErrorCode::Internal, "fil(" + s.str() + ") = " + format_set(fil) +
                                         " differs from the up-closure " +
                                         format_set(r.filter.elements));
  }
  return r;
}

}  // namespace snakeword
