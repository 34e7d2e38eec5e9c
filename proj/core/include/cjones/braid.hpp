#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cjones {

/// One letter sigma_i^{sign} of a braid word.
struct BraidLetter {
  int index = 1;  // generator subscript, 1 <= index <= width-1
  int sign = 1;   // +1 or -1

  bool operator==(const BraidLetter&) const = default;
  auto operator<=>(const BraidLetter&) const = default;
};

/// A braid word on `width` strands.  Crossings are numbered 1..length()
/// from top to bottom.  Width is explicit and never re-inferred.
struct BraidWord {
  int width = 1;
  std::vector<BraidLetter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int writhe() const;

  bool operator==(const BraidWord&) const = default;
  auto operator<=>(const BraidWord&) const = default;
};

/// Parses "[e1,e2,...,en]" (brackets optional, whitespace ignored) with
/// nonzero signed integers.  If width is omitted it is 1 + max |entry|
/// (width 1 for the empty word).
BraidWord parse_braid(const std::string& text,
                      std::optional<int> width = std::nullopt);

/// Renders in the bracketed signed-integer-list notation.
std::string to_string(const BraidWord& b);

/// Bottom-to-top strand correspondence of the braid: strand at bottom
/// position p (1-based) exits the top at position perm[p-1].
std::vector<int> permutation(const BraidWord& b);

/// Number of components of the closure; 1 iff the closure is a knot.
int closure_components(const BraidWord& b);

BraidWord reflect(const BraidWord& b);
BraidWord rotate(const BraidWord& b);
BraidWord reverse(const BraidWord& b);
BraidWord cyclic_shift(const BraidWord& b, int k);
BraidWord stabilize(const BraidWord& b, int sign);
BraidWord free_reduce(const BraidWord& b);

/// True if the word contains no adjacent cancelling pair.
bool is_reduced(const BraidWord& b);

/// Inserts sigma_i sigma_i^{-sign}... i.e. the cancelling pair
/// (i,sign),(i,-sign) before position pos (0-based, pos <= length).
BraidWord insert_cancelling_pair(const BraidWord& b, int pos, int index,
                                 int sign);

/// If letters pos..pos+2 match sigma_i sigma_{i+1} sigma_i (equal signs),
/// returns the word with sigma_{i+1} sigma_i sigma_{i+1} substituted.
std::optional<BraidWord> yang_baxter(const BraidWord& b, int pos);

/// Swaps letters pos and pos+1 when their indices differ by more than one.
std::optional<BraidWord> far_commute(const BraidWord& b, int pos);

}  // namespace cjones
