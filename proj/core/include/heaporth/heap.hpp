#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "heaporth/motzkin.hpp"

namespace heaporth {

// Monomer m_i covers needle {i}; dimer d_i (i >= 1) covers {i-1, i}.
class Piece {
 public:
  enum class Kind : std::uint8_t { kMonomer, kDimer };

  static Piece monomer(long i);
  static Piece dimer(long i);
  // "m<i>" or "d<i>".
  static Piece parse(std::string_view token);

  Kind kind() const { return kind_; }
  unsigned index() const { return index_; }
  bool is_monomer() const { return kind_ == Kind::kMonomer; }
  unsigned lo() const { return is_monomer() ? index_ : index_ - 1; }
  unsigned hi() const { return index_; }
  bool intersects(const Piece& o) const { return lo() <= o.hi() && o.lo() <= hi(); }

  std::string to_string() const;
  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  Piece(Kind kind, unsigned index) : kind_(kind), index_(index) {}

  Kind kind_;
  unsigned index_;
};

// Any word over the monomer/dimer alphabet.
struct HeapWord {
  std::vector<Piece> pieces;

  // Whitespace-separated tokens, e.g. "m0 d2 m3 d1".
  static HeapWord parse(std::string_view text);
  std::string to_string() const;
  std::size_t size() const { return pieces.size(); }
  friend bool operator==(const HeapWord&, const HeapWord&) = default;
};

struct PlacedPiece {
  Piece piece;
  unsigned level;
  friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

// A settled configuration, stored by level then leftmost needle.
class Heap {
 public:
  Heap() = default;

  const std::vector<PlacedPiece>& placed() const { return placed_; }
  bool empty() const { return placed_.empty(); }
  std::size_t size() const { return placed_.size(); }
  std::size_t monomers() const;
  std::size_t dimers() const;
  // Smallest and largest needle touched; {0, 0} for the empty heap.
  std::pair<unsigned, unsigned> projection() const;

  nlohmann::json to_json() const;
  // Rows top-down, one column per needle: "m" monomer, "[==]" dimer.
  std::string ascii() const;
  friend bool operator==(const Heap&, const Heap&) = default;

 private:
  friend Heap settle(const HeapWord& w);
  std::vector<PlacedPiece> placed_;
};

// Drops pieces left to right; each lands one above the highest earlier
// piece it intersects, or at level 0.
Heap settle(const HeapWord& w);

// Bottom row first, left to right within a row.
HeapWord canonical_word(const Heap& h);

bool heaps_equivalent(const HeapWord& a, const HeapWord& b);

// The summit when the heap has exactly one maximal piece.
std::optional<Piece> is_pyramid(const Heap& h);

// Right-to-left reading of a closed path word: a_i -> d_{i+1}, c_i -> m_i,
// b_i dropped.
HeapWord motzkin_to_heap(const PathWord& w);

// Inverse of motzkin_to_heap on pyramids with summit m_0 or d_1. Searches all
// destruction orders and insists on exactly one valid completion.
MotzkinPath heap_to_motzkin(const Heap& h);

}  // namespace heaporth
