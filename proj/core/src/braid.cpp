#include "cjones/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cjones/errors.hpp"

namespace cjones {

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters) w += l.sign;
  return w;
}

BraidWord parse_braid(const std::string& text, std::optional<int> width) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '[') s.erase(s.begin());
  if (!s.empty() && s.back() == ']') s.pop_back();

  std::vector<BraidLetter> letters;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    int pos = 0;
    while (std::getline(ss, tok, ',')) {
      ++pos;
      size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("braid parse error at position " +
                         std::to_string(pos) + ": bad token '" + tok + "'");
      }
      if (used != tok.size())
        throw ParseError("braid parse error at position " +
                         std::to_string(pos) + ": bad token '" + tok + "'");
      if (v == 0)
        throw ParseError("braid parse error at position " +
                         std::to_string(pos) + ": zero generator");
      letters.push_back({static_cast<int>(v < 0 ? -v : v), v < 0 ? -1 : 1});
    }
  }

  int m;
  if (width) {
    m = *width;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].index >= m)
        throw ParseError("braid parse error at position " +
                         std::to_string(i + 1) + ": generator " +
                         std::to_string(letters[i].index) +
                         " needs width > " + std::to_string(letters[i].index));
    }
  } else {
    m = 1;
    for (const auto& l : letters) m = std::max(m, l.index + 1);
  }
  return BraidWord{m, std::move(letters)};
}

std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < b.letters.size(); ++i) {
    if (i) os << ",";
    os << b.letters[i].sign * b.letters[i].index;
  }
  os << "]";
  return os.str();
}

std::vector<int> permutation(const BraidWord& b) {
  // Sweep bottom to top; occ[c] is the bottom strand currently in column c+1.
  std::vector<int> occ(static_cast<size_t>(b.width));
  std::iota(occ.begin(), occ.end(), 1);
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    std::swap(occ[static_cast<size_t>(it->index - 1)],
              occ[static_cast<size_t>(it->index)]);
  }
  std::vector<int> perm(static_cast<size_t>(b.width));
  for (int c = 0; c < b.width; ++c)
    perm[static_cast<size_t>(occ[static_cast<size_t>(c)] - 1)] = c + 1;
  return perm;
}

int closure_components(const BraidWord& b) {
  auto perm = permutation(b);
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(perm[j] - 1);
    }
  }
  return cycles;
}

BraidWord reflect(const BraidWord& b) {
  BraidWord out = b;
  for (auto& l : out.letters) l.sign = -l.sign;
  return out;
}

BraidWord rotate(const BraidWord& b) {
  BraidWord out{b.width, {}};
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.push_back({b.width - it->index, it->sign});
  return out;
}

BraidWord reverse(const BraidWord& b) {
  BraidWord out{b.width, {b.letters.rbegin(), b.letters.rend()}};
  return out;
}

BraidWord cyclic_shift(const BraidWord& b, int k) {
  if (b.letters.empty()) return b;
  int n = b.length();
  int s = ((k % n) + n) % n;
  BraidWord out{b.width, {}};
  out.letters.reserve(b.letters.size());
  for (int i = 0; i < n; ++i)
    out.letters.push_back(b.letters[static_cast<size_t>((i + s) % n)]);
  return out;
}

BraidWord stabilize(const BraidWord& b, int sign) {
  BraidWord out{b.width + 1, b.letters};
  out.letters.push_back({b.width, sign >= 0 ? 1 : -1});
  return out;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<BraidLetter> stack;
  for (const auto& l : b.letters) {
    if (!stack.empty() && stack.back().index == l.index &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord{b.width, std::move(stack)};
}

bool is_reduced(const BraidWord& b) {
  for (size_t i = 0; i + 1 < b.letters.size(); ++i)
    if (b.letters[i].index == b.letters[i + 1].index &&
        b.letters[i].sign == -b.letters[i + 1].sign)
      return false;
  return true;
}

BraidWord insert_cancelling_pair(const BraidWord& b, int pos, int index,
                                 int sign) {
  BraidWord out = b;
  out.letters.insert(out.letters.begin() + pos,
                     {BraidLetter{index, sign}, BraidLetter{index, -sign}});
  return out;
}

std::optional<BraidWord> yang_baxter(const BraidWord& b, int pos) {
  if (pos < 0 || pos + 3 > b.length()) return std::nullopt;
  const auto& x = b.letters[static_cast<size_t>(pos)];
  const auto& y = b.letters[static_cast<size_t>(pos + 1)];
  const auto& z = b.letters[static_cast<size_t>(pos + 2)];
  if (x.sign != y.sign || y.sign != z.sign) return std::nullopt;
  if (x.index != z.index || y.index != x.index + 1) return std::nullopt;
  BraidWord out = b;
  out.letters[static_cast<size_t>(pos)] = y;
  out.letters[static_cast<size_t>(pos + 1)] = x;
  out.letters[static_cast<size_t>(pos + 2)] = y;
  return out;
}

std::optional<BraidWord> far_commute(const BraidWord& b, int pos) {
  if (pos < 0 || pos + 2 > b.length()) return std::nullopt;
  const auto& x = b.letters[static_cast<size_t>(pos)];
  const auto& y = b.letters[static_cast<size_t>(pos + 1)];
  if (std::abs(x.index - y.index) <= 1) return std::nullopt;
  BraidWord out = b;
  std::swap(out.letters[static_cast<size_t>(pos)],
            out.letters[static_cast<size_t>(pos + 1)]);
  return out;
}

}  // namespace cjones
