#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "heaporth/coeff_spec.hpp"
#include "heaporth/multipoly.hpp"

namespace heaporth {

// Declared in lexicographic enumeration order.
enum class Step : std::uint8_t { kNE, kE, kSE };

// Lattice path with NE/E/SE steps that never drops below level 0.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  // Throws kDomain if the path dips below 0.
  MotzkinPath(unsigned start_level, std::vector<Step> steps);

  // "NE,E,SE@r"; the "@r" suffix defaults to 0 and the empty path is "" or "@r".
  static MotzkinPath parse(std::string_view text);

  unsigned start_level() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  unsigned end_level() const;
  unsigned max_height() const;
  bool is_closed() const { return start_ == 0 && end_level() == 0; }
  bool is_dyck() const;

  std::string to_string() const;
  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  unsigned start_ = 0;
  std::vector<Step> steps_;
};

// a_i (NE), b_i (SE), c_i (E), indexed by the starting height of the edge.
struct Letter {
  enum class Kind : std::uint8_t { kA, kB, kC };
  Kind kind;
  unsigned height;

  std::string to_string() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class PathWord {
 public:
  PathWord() = default;
  // Throws kDomain unless the heights chain (a_i -> i+1, b_i -> i-1, c_i -> i)
  // and every b_i has i >= 1.
  explicit PathWord(std::vector<Letter> letters);
  // Space-separated tokens "a0 b1 c0".
  static PathWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  unsigned start_level() const { return letters_.empty() ? 0 : letters_.front().height; }
  unsigned end_level() const;

  std::string to_string() const;
  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline constexpr unsigned kMaxEnumerationLength = 18;

// All n-step paths from level r to level s, lexicographic in NE < E < SE.
// Throws kEnumerationLimit for n > kMaxEnumerationLength.
std::vector<MotzkinPath> enumerate_paths(unsigned r, unsigned s, unsigned n);

// Visits the step sequences of enumerate_paths(r, s, n) in the same order
// without materializing them.
void for_each_path(unsigned r, unsigned s, unsigned n,
                   const std::function<void(const std::vector<Step>&)>& visit);

PathWord path_word(const MotzkinPath& p);
MotzkinPath path_from_word(const PathWord& w);

// Commutative weight: a_i -> lambda_{i+1}, b_i -> 1, c_i -> c_i, under spec.
MultiPoly path_weight(const PathWord& w, const CoeffSpec& spec);

// Sum of weights over n-step paths from 0 to k.
MultiPoly h_tilde(unsigned n, unsigned k, const CoeffSpec& spec);

// Sum of weights over closed n-step paths.
MultiPoly moments_by_paths(unsigned n, const CoeffSpec& spec);

}  // namespace heaporth
