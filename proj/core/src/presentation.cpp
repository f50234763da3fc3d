#include "rimforge/presentation.hpp"

#include <set>

namespace rimforge {

std::string mark_name(Mark m) {
  switch (m) {
    case Mark::meridian: return "meridian";
    case Mark::pushoff: return "pushoff";
    case Mark::gamma: return "gamma";
    case Mark::longitude: return "longitude";
  }
  return "?";
}

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators, std::map<Mark, Word> marks)
    : names_(std::move(generator_names)), marks_(std::move(marks)) {
  relators_.reserve(relators.size());
  for (Word& r : relators) {
    Word c = r.cyclically_reduced();
    if (!c.empty()) relators_.push_back(std::move(c));
  }
  validate();
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw error("empty generator name");
    if (!seen.insert(n).second) throw error("duplicate generator name: " + n);
  }
  int g = ngens();
  for (const Word& r : relators_) {
    if (r.max_gen() >= g) throw error("relator uses generator index out of range");
  }
  for (const auto& [m, w] : marks_) {
    if (w.max_gen() >= g)
      throw error("mark '" + mark_name(m) + "' uses generator index out of range");
  }
}

const Word& Presentation::mark(Mark m) const {
  auto it = marks_.find(m);
  if (it == marks_.end()) throw error("presentation has no mark '" + mark_name(m) + "'");
  return it->second;
}

std::size_t Presentation::total_relator_length() const {
  std::size_t n = 0;
  for (const Word& r : relators_) n += r.size();
  return n;
}

Presentation Presentation::quotient_by_normal_closure(const std::vector<Word>& kills) const {
  for (const Word& w : kills) {
    if (w.max_gen() >= ngens())
      throw error("kill word uses generator index out of range");
  }
  std::vector<Word> rel = relators_;
  rel.insert(rel.end(), kills.begin(), kills.end());
  return Presentation(names_, std::move(rel), marks_);
}

std::vector<std::vector<Int>> Presentation::exponent_matrix() const {
  std::vector<std::vector<Int>> m;
  m.reserve(relators_.size());
  for (const Word& r : relators_) {
    std::vector<Int> row(ngens(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) row[r.gen_at(i)] += r.sign_at(i);
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants Presentation::abelianization() const {
  return abelian_structure().invariants();
}

AbelianStructure Presentation::abelian_structure() const {
  return AbelianStructure(exponent_matrix(), ngens());
}

}  // namespace rimforge
