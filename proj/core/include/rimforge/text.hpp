#pragma once

#include <string>
#include <string_view>

#include "rimforge/presentation.hpp"

namespace rimforge {

/// Text grammar for presentations and words (whitespace insignificant):
///
///   presentation := "<" ident ("," ident)* "|" [ word ("," word)* ] ">"
///   word         := term ("*" term)*
///   term         := base ("^" integer)?
///   base         := ident | "1" | "(" word ")" | "[" word "," word "]"
///
/// "[u,v]" is the commutator u^-1 v^-1 u v, "1" the identity. Printing and
/// re-parsing any presentation yields an identical value.
Presentation parse_presentation(std::string_view text);

/// Parses a word over the generators of an existing presentation.
Word parse_word(std::string_view text, const Presentation& p);

std::string print_word(const Word& w, const std::vector<std::string>& names);
std::string print_presentation(const Presentation& p);

}  // namespace rimforge
