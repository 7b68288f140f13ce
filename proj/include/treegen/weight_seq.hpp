#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treegen {

// A weight sequence lists, in pre-order, the order of the subtree rooted at
// each vertex. The paper-facing contract is 1-indexed; all code here uses
// native 0-based indexing, so paper position k corresponds to s[k-1].
using Weight = std::uint16_t;
using WeightSeq = std::vector<Weight>;
using WeightSpan = std::span<const Weight>;

struct EncodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline WeightSeq concat(WeightSpan s, WeightSpan t) {
  WeightSeq out;
  out.reserve(s.size() + t.size());
  out.insert(out.end(), s.begin(), s.end());
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

// Lexicographic >=: true if the first differing element is larger in s, or
// the common prefix exhausts one of them and s is at least as long.
inline bool lex_ge(WeightSpan s, WeightSpan t) {
  const std::size_t m = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] != t[i]) return s[i] > t[i];
  }
  return s.size() >= t.size();
}

inline bool lex_gt(WeightSpan s, WeightSpan t) {
  const std::size_t m = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] != t[i]) return s[i] > t[i];
  }
  return s.size() > t.size();
}

// The sibling-ordering gate: a >= t lexicographically, or a is a prefix of t.
// Equivalently, a loses only if the first differing element is smaller.
inline bool succ_geq(WeightSpan a, WeightSpan t) {
  const std::size_t m = std::min(a.size(), t.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] != t[i]) return a[i] > t[i];
  }
  return true;
}

// s -> s#, the forest left after deleting the root.
inline WeightSeq strip_root(WeightSpan s) {
  if (s.size() < 2) throw std::invalid_argument("strip_root: sequence too short");
  return WeightSeq(s.begin() + 1, s.end());
}

// Compact text form: digits 1-9, then A-Z for weights 10-35.
inline std::string encode_str(WeightSpan s) {
  std::string out;
  out.reserve(s.size());
  for (Weight w : s) {
    if (w <= 9) {
      out.push_back(static_cast<char>('0' + w));
    } else if (w <= 35) {
      out.push_back(static_cast<char>('A' + (w - 10)));
    } else {
      throw EncodingError("encode_str: weight " + std::to_string(w) + " exceeds 35");
    }
  }
  return out;
}

// Fallback for weights above 35: decimal weights joined by '.'.
inline std::string encode_decimal(WeightSpan s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out.push_back('.');
    out += std::to_string(s[i]);
  }
  return out;
}

inline WeightSeq decode_str(std::string_view text) {
  WeightSeq out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= '1' && c <= '9') {
      out.push_back(static_cast<Weight>(c - '0'));
    } else if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<Weight>(10 + (c - 'A')));
    } else {
      throw ParseError(std::string("decode_str: invalid character '") + c + "'");
    }
  }
  return out;
}

namespace detail {

// A tree segment is valid iff its first element equals its length and the
// tail splits exactly into child segments of their declared lengths.
inline bool valid_tree_segment(WeightSpan seg) {
  if (seg.empty() || seg[0] != seg.size()) return false;
  std::size_t j = 1;
  while (j < seg.size()) {
    const std::size_t c = seg[j];
    if (c < 1 || j + c > seg.size()) return false;
    if (!valid_tree_segment(seg.subspan(j, c))) return false;
    j += c;
  }
  return true;
}

// Child segments relex non-increasing, recursively at every vertex.
inline bool canonical_segment(WeightSpan seg) {
  std::size_t j = 1;
  WeightSpan prev;
  while (j < seg.size()) {
    const WeightSpan child = seg.subspan(j, seg[j]);
    if (j > 1 && !lex_ge(prev, child)) return false;
    if (!canonical_segment(child)) return false;
    prev = child;
    j += child.size();
  }
  return true;
}

}  // namespace detail

inline bool validate_tree_ws(WeightSpan s) { return detail::valid_tree_segment(s); }

inline bool is_canonical(WeightSpan s) {
  if (!validate_tree_ws(s)) throw std::invalid_argument("is_canonical: not a tree weight sequence");
  return detail::canonical_segment(s);
}

}  // namespace treegen
