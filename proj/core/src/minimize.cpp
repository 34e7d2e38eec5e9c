#include "cjones/minimize.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "cjones/errors.hpp"

namespace cjones {

std::vector<OrbitEntry> symmetry_orbit(const BraidWord& b, EnumOptions opt) {
  if (b.length() < 1) throw DomainError("orbit needs a nonempty word");
  std::vector<OrbitEntry> orbit;
  std::set<BraidWord> seen;
  for (int refl = 0; refl < 2; ++refl)
    for (int rot = 0; rot < 2; ++rot)
      for (int rev = 0; rev < 2; ++rev)
        for (int k = 0; k < b.length(); ++k) {
          OrbitEntry e;
          e.word = b;
          if (refl) {
            e.word = reflect(e.word);
            e.transform.push_back("reflect");
          }
          if (rot) {
            e.word = rotate(e.word);
            e.transform.push_back("rotate");
          }
          if (rev) {
            e.word = reverse(e.word);
            e.transform.push_back("reverse");
          }
          if (k) {
            e.word = cyclic_shift(e.word, k);
            e.transform.push_back("shift " + std::to_string(k));
          }
          e.mirror = refl != 0;
          if (seen.insert(e.word).second) orbit.push_back(std::move(e));
        }

  std::vector<std::future<void>> jobs;
  for (OrbitEntry& e : orbit)
    jobs.push_back(std::async(std::launch::async, [&e, &opt] {
      try {
        e.sw_count =
            static_cast<long long>(enumerate_simple_walks(e.word, opt).count());
      } catch (const std::exception& ex) {
        e.failed = true;
        e.failure = ex.what();
      }
    }));
  for (auto& j : jobs) j.get();
  return orbit;
}

OrbitEntry minimize_walks(const BraidWord& b, EnumOptions opt) {
  std::vector<OrbitEntry> orbit = symmetry_orbit(b, opt);
  const OrbitEntry* best = nullptr;
  for (const OrbitEntry& e : orbit) {
    if (e.failed) continue;
    if (!best || e.sw_count < best->sw_count ||
        (e.sw_count == best->sw_count &&
         (e.transform.size() < best->transform.size() ||
          (e.transform.size() == best->transform.size() &&
           e.word < best->word))))
      best = &e;
  }
  if (!best) throw ResourceError("every orbit entry failed to enumerate");
  return *best;
}

NormalizedLeading normalize_leading(const BraidWord& b) {
  for (const BraidWord& w : {b, reverse(b)}) {
    for (int k = 0; k < w.length(); ++k) {
      const BraidLetter& lt = w.letters[static_cast<size_t>(k)];
      if (lt.index == 1) {
        if (lt.sign > 0) return {cyclic_shift(w, k), true};
        break;  // a leading sigma_1^{-1} cannot be shifted through
      }
    }
  }
  return {b, false};
}

}  // namespace cjones
