#pragma once

#include <string>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/walks.hpp"

namespace cjones {

struct OrbitEntry {
  BraidWord word;
  std::vector<std::string> transform;  // applied left to right
  long long sw_count = -1;             // -1 when the census failed
  bool mirror = false;                 // odd number of reflections
  bool failed = false;
  std::string failure;
};

/// All words reachable from b by {identity, reflect} x {identity, rotate}
/// x {identity, reverse} x every cyclic shift, deduplicated by literal
/// word equality.  Census counts are evaluated in parallel; an entry whose
/// census hits a resource limit is marked failed instead of aborting.
std::vector<OrbitEntry> symmetry_orbit(const BraidWord& b,
                                       EnumOptions opt = {});

/// The orbit entry with the fewest simple walks.  Ties break toward the
/// shorter transform list, then the lexicographically smaller word.
OrbitEntry minimize_walks(const BraidWord& b, EnumOptions opt = {});

struct NormalizedLeading {
  BraidWord word;
  bool normalized = false;  // false: no representative starting with
                            // sigma_1 positive was reachable
};

/// Tries to shift b (or its reversal) past letters of index != 1 so the
/// word starts with sigma_1 positive; both moves preserve the walk count.
NormalizedLeading normalize_leading(const BraidWord& b);

}  // namespace cjones
