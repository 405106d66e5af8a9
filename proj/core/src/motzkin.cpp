#include "heaporth/motzkin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "heaporth/error.hpp"

namespace heaporth {

namespace {

int step_delta(Step s) {
  switch (s) {
    case Step::kNE: return 1;
    case Step::kE: return 0;
    case Step::kSE: return -1;
  }
  return 0;
}

const char* step_name(Step s) {
  switch (s) {
    case Step::kNE: return "NE";
    case Step::kE: return "E";
    case Step::kSE: return "SE";
  }
  return "?";
}

unsigned parse_unsigned(std::string_view text, std::string_view context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::kParse, "expected a number in '" + std::string(context) + "'");
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

}  // namespace

MotzkinPath::MotzkinPath(unsigned start_level, std::vector<Step> steps)
    : start_(start_level), steps_(std::move(steps)) {
  long h = start_;
  for (Step s : steps_) {
    h += step_delta(s);
    if (h < 0) throw Error(ErrorKind::kDomain, "path drops below level 0");
  }
}

MotzkinPath MotzkinPath::parse(std::string_view text) {
  unsigned start = 0;
  const auto at = text.find('@');
  if (at != std::string_view::npos) {
    start = parse_unsigned(text.substr(at + 1), text);
    text = text.substr(0, at);
  }
  std::vector<Step> steps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok == "NE") {
      steps.push_back(Step::kNE);
    } else if (tok == "E") {
      steps.push_back(Step::kE);
    } else if (tok == "SE") {
      steps.push_back(Step::kSE);
    } else {
      throw Error(ErrorKind::kParse, "bad step '" + std::string(tok) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MotzkinPath(start, std::move(steps));
}

unsigned MotzkinPath::end_level() const {
  long h = start_;
  for (Step s : steps_) h += step_delta(s);
  return static_cast<unsigned>(h);
}

unsigned MotzkinPath::max_height() const {
  long h = start_;
  long best = h;
  for (Step s : steps_) best = std::max(best, h += step_delta(s));
  return static_cast<unsigned>(best);
}

bool MotzkinPath::is_dyck() const {
  return std::none_of(steps_.begin(), steps_.end(), [](Step s) { return s == Step::kE; });
}

std::string MotzkinPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ',';
    out += step_name(steps_[i]);
  }
  return start_ == 0 ? out : out + "@" + std::to_string(start_);
}

std::string Letter::to_string() const {
  const char k = kind == Kind::kA ? 'a' : (kind == Kind::kB ? 'b' : 'c');
  return k + std::to_string(height);
}

PathWord::PathWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.kind == Letter::Kind::kB && l.height < 1)
      throw Error(ErrorKind::kDomain, "b_i needs i >= 1");
    if (i + 1 < letters_.size()) {
      unsigned next = l.height;
      if (l.kind == Letter::Kind::kA) next = l.height + 1;
      if (l.kind == Letter::Kind::kB) next = l.height - 1;
      if (letters_[i + 1].height != next)
        throw Error(ErrorKind::kDomain, "letter " + letters_[i + 1].to_string() + " does not start at height " +
                                            std::to_string(next));
    }
  }
}

PathWord PathWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    Letter l{};
    switch (tok[0]) {
      case 'a': l.kind = Letter::Kind::kA; break;
      case 'b': l.kind = Letter::Kind::kB; break;
      case 'c': l.kind = Letter::Kind::kC; break;
      default: throw Error(ErrorKind::kParse, "bad letter '" + tok + "'");
    }
    l.height = parse_unsigned(std::string_view(tok).substr(1), tok);
    letters.push_back(l);
  }
  return PathWord(std::move(letters));
}

unsigned PathWord::end_level() const {
  if (letters_.empty()) return 0;
  const Letter& l = letters_.back();
  if (l.kind == Letter::Kind::kA) return l.height + 1;
  if (l.kind == Letter::Kind::kB) return l.height - 1;
  return l.height;
}

std::string PathWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    out += letters_[i].to_string();
  }
  return out;
}

void for_each_path(unsigned r, unsigned s, unsigned n,
                   const std::function<void(const std::vector<Step>&)>& visit) {
  if (n > kMaxEnumerationLength) {
    throw Error(ErrorKind::kEnumerationLimit, "explicit path enumeration is capped at length " +
                                                  std::to_string(kMaxEnumerationLength));
  }
  std::vector<Step> steps;
  steps.reserve(n);
  std::function<void(long)> rec = [&](long h) {
    const long remaining = static_cast<long>(n - steps.size());
    if (std::labs(h - static_cast<long>(s)) > remaining) return;
    if (remaining == 0) {
      visit(steps);
      return;
    }
    for (Step st : {Step::kNE, Step::kE, Step::kSE}) {
      const long next = h + step_delta(st);
      if (next < 0) continue;
      steps.push_back(st);
      rec(next);
      steps.pop_back();
    }
  };
  rec(static_cast<long>(r));
}

std::vector<MotzkinPath> enumerate_paths(unsigned r, unsigned s, unsigned n) {
  std::vector<MotzkinPath> out;
  for_each_path(r, s, n, [&](const std::vector<Step>& steps) { out.emplace_back(r, steps); });
  return out;
}

PathWord path_word(const MotzkinPath& p) {
  std::vector<Letter> letters;
  letters.reserve(p.length());
  unsigned h = p.start_level();
  for (Step s : p.steps()) {
    switch (s) {
      case Step::kNE: letters.push_back({Letter::Kind::kA, h++}); break;
      case Step::kE: letters.push_back({Letter::Kind::kC, h}); break;
      case Step::kSE: letters.push_back({Letter::Kind::kB, h--}); break;
    }
  }
  return PathWord(std::move(letters));
}

MotzkinPath path_from_word(const PathWord& w) {
  std::vector<Step> steps;
  steps.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    steps.push_back(l.kind == Letter::Kind::kA ? Step::kNE : (l.kind == Letter::Kind::kB ? Step::kSE : Step::kE));
  }
  return MotzkinPath(w.start_level(), std::move(steps));
}

MultiPoly path_weight(const PathWord& w, const CoeffSpec& spec) {
  MultiPoly p(1);
  for (const Letter& l : w.letters()) {
    if (l.kind == Letter::Kind::kA) p = p * spec.lam(l.height + 1);
    if (l.kind == Letter::Kind::kC) p = p * spec.c(l.height);
  }
  return p;
}

namespace {

// Paths are grouped by how often each weighted letter occurs, then every
// distinct group is evaluated once.
MultiPoly weighted_path_sum(unsigned r, unsigned s, unsigned n, const CoeffSpec& spec) {
  // counts[2h] = #a_h, counts[2h+1] = #c_h
  std::map<std::vector<std::uint8_t>, std::uint64_t> groups;
  std::vector<std::uint8_t> counts(2 * (std::max(r, s) + n + 1), 0);
  for_each_path(r, s, n, [&](const std::vector<Step>& steps) {
    std::fill(counts.begin(), counts.end(), 0);
    unsigned h = r;
    for (Step st : steps) {
      if (st == Step::kNE) ++counts[2 * h++];
      else if (st == Step::kE) ++counts[2 * h + 1];
      else --h;
    }
    ++groups[counts];
  });
  MultiPoly total;
  for (const auto& [sig, multiplicity] : groups) {
    MultiPoly term(BigRational(static_cast<std::int64_t>(multiplicity)));
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (sig[i] == 0) continue;
      const std::size_t height = i / 2;
      const MultiPoly base = (i % 2 == 0) ? spec.lam(height + 1) : spec.c(height);
      term = term * base.pow(sig[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace

MultiPoly h_tilde(unsigned n, unsigned k, const CoeffSpec& spec) { return weighted_path_sum(0, k, n, spec); }

MultiPoly moments_by_paths(unsigned n, const CoeffSpec& spec) { return weighted_path_sum(0, 0, n, spec); }

}  // namespace heaporth
