#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rimforge/abelian.hpp"
#include "rimforge/word.hpp"

namespace rimforge {

/// Distinguished elements a presentation may carry. Marks follow the group
/// through quotients and simplification. The meridian/pushoff marks keep
/// their basepoint conjugacy class, so they are stored freely reduced but
/// never cyclically reduced.
enum class Mark { meridian, pushoff, gamma, longitude };

std::string mark_name(Mark m);

/// A finite presentation: named generators, cyclically reduced relators and
/// a partial map of marked elements. Immutable after construction.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               std::map<Mark, Word> marks = {});

  int ngens() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int g) const { return names_.at(g); }
  const std::vector<Word>& relators() const { return relators_; }
  const std::map<Mark, Word>& marks() const { return marks_; }
  bool has_mark(Mark m) const { return marks_.count(m) != 0; }
  const Word& mark(Mark m) const;

  std::size_t total_relator_length() const;

  /// Appends words to the relator set (quotient by their normal closure).
  /// Marks are preserved.
  Presentation quotient_by_normal_closure(const std::vector<Word>& kills) const;

  /// Exponent-sum matrix: one row per relator, one column per generator.
  std::vector<std::vector<Int>> exponent_matrix() const;
  AbelianInvariants abelianization() const;
  AbelianStructure abelian_structure() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::map<Mark, Word> marks_;
  void validate() const;
};

}  // namespace rimforge
