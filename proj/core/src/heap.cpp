#include "heaporth/heap.hpp"

#include <algorithm>
#include <sstream>

#include "heaporth/error.hpp"

namespace heaporth {

Piece Piece::monomer(long i) {
  if (i < 0) throw Error(ErrorKind::kIndex, "monomer index must be >= 0");
  return Piece(Kind::kMonomer, static_cast<unsigned>(i));
}

Piece Piece::dimer(long i) {
  if (i < 1) throw Error(ErrorKind::kIndex, "dimer index must be >= 1");
  return Piece(Kind::kDimer, static_cast<unsigned>(i));
}

Piece Piece::parse(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'm' && token[0] != 'd') ||
      !std::all_of(token.begin() + 1, token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::kParse, "bad heap piece '" + std::string(token) + "'");
  }
  const long i = std::stol(std::string(token.substr(1)));
  return token[0] == 'm' ? monomer(i) : dimer(i);
}

std::string Piece::to_string() const { return (is_monomer() ? "m" : "d") + std::to_string(index_); }

HeapWord HeapWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  HeapWord w;
  std::string tok;
  while (in >> tok) w.pieces.push_back(Piece::parse(tok));
  return w;
}

std::string HeapWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += ' ';
    out += pieces[i].to_string();
  }
  return out;
}

std::size_t Heap::monomers() const {
  return static_cast<std::size_t>(
      std::count_if(placed_.begin(), placed_.end(), [](const PlacedPiece& p) { return p.piece.is_monomer(); }));
}

std::size_t Heap::dimers() const { return placed_.size() - monomers(); }

std::pair<unsigned, unsigned> Heap::projection() const {
  if (placed_.empty()) return {0, 0};
  unsigned lo = placed_.front().piece.lo();
  unsigned hi = placed_.front().piece.hi();
  for (const auto& p : placed_) {
    lo = std::min(lo, p.piece.lo());
    hi = std::max(hi, p.piece.hi());
  }
  return {lo, hi};
}

nlohmann::json Heap::to_json() const {
  auto pieces = nlohmann::json::array();
  for (const auto& p : placed_) {
    pieces.push_back({{"kind", p.piece.is_monomer() ? "m" : "d"}, {"i", p.piece.index()}, {"level", p.level}});
  }
  return {{"pieces", pieces}};
}

std::string Heap::ascii() const {
  if (placed_.empty()) return "(empty heap)\n";
  const unsigned width = projection().second + 1;
  const unsigned top = placed_.back().level;
  std::vector<std::string> rows(top + 1, std::string(2 * width - 1, ' '));
  for (auto& row : rows)
    for (unsigned n = 0; n < width; ++n) row[2 * n] = '|';
  for (const auto& p : placed_) {
    std::string& row = rows[p.level];
    if (p.piece.is_monomer()) {
      row[2 * p.piece.index()] = 'o';
    } else {
      row[2 * p.piece.lo()] = 'o';
      row[2 * p.piece.lo() + 1] = '=';
      row[2 * p.piece.hi()] = 'o';
    }
  }
  std::ostringstream os;
  for (unsigned l = top + 1; l-- > 0;) os << rows[l] << "   level " << l << '\n';
  return os.str();
}

Heap settle(const HeapWord& w) {
  Heap h;
  h.placed_.reserve(w.size());
  for (const Piece& p : w.pieces) {
    unsigned level = 0;
    for (const auto& q : h.placed_) {
      if (q.piece.intersects(p)) level = std::max(level, q.level + 1);
    }
    h.placed_.push_back({p, level});
  }
  std::stable_sort(h.placed_.begin(), h.placed_.end(), [](const PlacedPiece& a, const PlacedPiece& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.piece.lo() < b.piece.lo();
  });
  return h;
}

HeapWord canonical_word(const Heap& h) {
  HeapWord w;
  w.pieces.reserve(h.size());
  for (const auto& p : h.placed()) w.pieces.push_back(p.piece);
  return w;
}

bool heaps_equivalent(const HeapWord& a, const HeapWord& b) { return settle(a) == settle(b); }

std::optional<Piece> is_pyramid(const Heap& h) {
  std::optional<Piece> summit;
  std::size_t maximal = 0;
  const auto& placed = h.placed();
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const bool covered = std::any_of(placed.begin(), placed.end(), [&](const PlacedPiece& q) {
      return q.level > placed[i].level && q.piece.intersects(placed[i].piece);
    });
    if (!covered) {
      ++maximal;
      summit = placed[i].piece;
    }
  }
  if (maximal != 1) return std::nullopt;
  return summit;
}

HeapWord motzkin_to_heap(const PathWord& w) {
  if (w.start_level() != 0 || w.end_level() != 0)
    throw Error(ErrorKind::kDomain, "motzkin_to_heap needs a closed path word");
  HeapWord out;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->kind == Letter::Kind::kA) out.pieces.push_back(Piece::dimer(it->height + 1));
    if (it->kind == Letter::Kind::kC) out.pieces.push_back(Piece::monomer(it->height));
  }
  return out;
}

namespace {

class DestructionSearch {
 public:
  explicit DestructionSearch(const Heap& h) : placed_(h.placed()), below_(placed_.size()), used_(placed_.size(), false) {
    for (std::size_t q = 0; q < placed_.size(); ++q)
      for (std::size_t p = 0; p < placed_.size(); ++p)
        if (placed_[p].level < placed_[q].level && placed_[p].piece.intersects(placed_[q].piece)) below_[q].push_back(p);
  }

  // Returns the number of completions found, stopping after two.
  int run() {
    search(0, 0);
    return completions_;
  }

  const std::vector<Letter>& first() const { return first_; }

 private:
  void climb_to(unsigned from, unsigned to) {
    for (unsigned j = from + 1; j <= to; ++j) letters_.push_back({Letter::Kind::kB, j});
  }

  void search(std::size_t consumed, unsigned g) {
    if (completions_ > 1) return;
    if (consumed == placed_.size()) {
      if (g == 0) {
        if (++completions_ == 1) first_ = letters_;
      }
      return;
    }
    for (std::size_t i = 0; i < placed_.size(); ++i) {
      if (used_[i]) continue;
      if (std::any_of(below_[i].begin(), below_[i].end(), [&](std::size_t p) { return !used_[p]; })) continue;
      const Piece& piece = placed_[i].piece;
      const std::size_t mark = letters_.size();
      unsigned next = 0;
      if (piece.is_monomer()) {
        if (g > piece.index()) continue;
        climb_to(g, piece.index());
        letters_.push_back({Letter::Kind::kC, piece.index()});
        next = piece.index();
      } else {
        const unsigned i_low = piece.index() - 1;
        if (g > i_low + 1) continue;
        climb_to(g, i_low + 1);
        letters_.push_back({Letter::Kind::kA, i_low});
        next = i_low;
      }
      used_[i] = true;
      search(consumed + 1, next);
      used_[i] = false;
      letters_.resize(mark);
    }
  }

  const std::vector<PlacedPiece>& placed_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<bool> used_;
  std::vector<Letter> letters_;
  std::vector<Letter> first_;
  int completions_ = 0;
};

}  // namespace

MotzkinPath heap_to_motzkin(const Heap& h) {
  const auto summit = is_pyramid(h);
  if (!summit) throw Error(ErrorKind::kNotInImage, "heap is not a pyramid");
  if (!(*summit == Piece::monomer(0) || *summit == Piece::dimer(1)))
    throw Error(ErrorKind::kNotInImage, "pyramid summit " + summit->to_string() + " is neither m0 nor d1");
  DestructionSearch search(h);
  const int found = search.run();
  if (found != 1) {
    throw Error(ErrorKind::kBijectionViolation,
                found == 0 ? "no closed path maps onto this heap" : "several closed paths map onto this heap");
  }
  std::vector<Letter> letters(search.first().rbegin(), search.first().rend());
  return path_from_word(PathWord(std::move(letters)));
}

}  // namespace heaporth
