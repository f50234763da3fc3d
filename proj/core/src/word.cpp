#include "rimforge/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace rimforge {

void Word::push_reduced(int letter) {
  if (!ls_.empty() && ls_.back() == -letter) {
    ls_.pop_back();
  } else {
    ls_.push_back(letter);
  }
}

Word Word::from_letters(const std::vector<int>& signed_letters) {
  Word w;
  w.ls_.reserve(signed_letters.size());
  for (int l : signed_letters) {
    if (l == 0) throw error("word letter must be nonzero");
    w.push_reduced(l);
  }
  return w;
}

Word Word::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  Word w;
  for (auto [g, s] : pairs) {
    if (g < 0) throw error("generator index out of range");
    if (s != 1 && s != -1) throw error("letter sign must be +1 or -1");
    w.push_reduced(s * (g + 1));
  }
  return w;
}

Word Word::letter(int gen, int sign) {
  return from_pairs({{gen, sign}});
}

Word Word::power_of(int gen, long exp) {
  Word w;
  if (gen < 0) throw error("generator index out of range");
  int l = exp >= 0 ? gen + 1 : -(gen + 1);
  for (long i = 0, n = std::labs(exp); i < n; ++i) w.ls_.push_back(l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (int l : rhs.ls_) w.push_reduced(l);
  return w;
}

Word Word::pow(long k) const {
  Word base = k >= 0 ? *this : inverse();
  Word out;
  for (long i = 0, n = std::labs(k); i < n; ++i) out = out * base;
  return out;
}

Word Word::conjugated(const Word& by) const {
  return by.inverse() * *this * by;
}

Word Word::commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

int Word::max_gen() const {
  int m = -1;
  for (int l : ls_) m = std::max(m, std::abs(l) - 1);
  return m;
}

long Word::exponent_sum(int gen) const {
  long s = 0;
  for (int l : ls_) {
    if (std::abs(l) - 1 == gen) s += l > 0 ? 1 : -1;
  }
  return s;
}

long Word::total_degree() const {
  long s = 0;
  for (int l : ls_) s += l > 0 ? 1 : -1;
  return s;
}

bool Word::contains_gen(int gen) const {
  for (int l : ls_) {
    if (std::abs(l) - 1 == gen) return true;
  }
  return false;
}

int Word::occurrences(int gen) const {
  int n = 0;
  for (int l : ls_) {
    if (std::abs(l) - 1 == gen) ++n;
  }
  return n;
}

Word Word::substituted(const std::vector<Word>& images) const {
  Word out;
  for (int l : ls_) {
    int g = std::abs(l) - 1;
    if (g >= static_cast<int>(images.size()))
      throw error("missing assignment for generator occurring in word");
    const Word& im = l > 0 ? images[g] : images[g].inverse();
    for (int x : im.ls_) out.push_reduced(x);
  }
  return out;
}

Word Word::reindexed(const std::vector<int>& map) const {
  Word out;
  for (int l : ls_) {
    int g = std::abs(l) - 1;
    if (g >= static_cast<int>(map.size()) || map[g] < 0)
      throw error("generator has no image under reindexing");
    out.push_reduced(l > 0 ? map[g] + 1 : -(map[g] + 1));
  }
  return out;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.ls_.size() >= 2 && w.ls_.front() == -w.ls_.back()) {
    w.ls_.erase(w.ls_.begin());
    w.ls_.pop_back();
  }
  return w;
}

std::vector<int> Word::cyclic_canonical_key() const {
  Word r = cyclically_reduced();
  if (r.ls_.empty()) return {};
  std::vector<int> best;
  auto consider = [&best](const std::vector<int>& v) {
    std::size_t n = v.size();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> rot;
      rot.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rot.push_back(v[(s + i) % n]);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  };
  consider(r.ls_);
  consider(r.inverse().ls_);
  return best;
}

}  // namespace rimforge
