#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace horolab::words {

// Generators are lowercase letters, formal inverses uppercase. A word is a
// plain string of such letters; normal forms are owned by the group actions.

inline bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_inverse(char c) { return c >= 'A' && c <= 'Z'; }
inline char lower(char c) { return is_inverse(c) ? static_cast<char>(c - 'A' + 'a') : c; }
inline char invert_letter(char c) {
  return is_inverse(c) ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c - 'a' + 'A');
}

// formal inverse: reverse the string and flip every letter
std::string invert(std::string_view w);

// Word templates with one integer parameter, e.g. "(ab)^n", "b a^-1", "a^2n".
// Grammar:  word := item* ; item := atom ['^' exponent] ;
//           atom := letter | '(' word ')' ;
//           exponent := ['-'] (digits ['n'] | 'n')
// Whitespace and '*' separators are ignored. The result is a flat letter
// string, not reduced.
std::string expand_template(std::string_view expr, long long n);

// same, but the parameter n must not occur
std::string expand(std::string_view expr);

// order by length, then bytewise
bool shortlex_less(std::string_view a, std::string_view b);

}  // namespace horolab::words
