#include "horolab/words.hpp"

#include <cctype>

#include "horolab/errors.hpp"

namespace horolab::words {

std::string invert(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert_letter(*it));
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  long long n = 0;
  bool allow_n = false;

  [[noreturn]] void die(const std::string& msg) const {
    fail(errc::config_invalid,
         "word template \"" + std::string(s) + "\" at position " + std::to_string(i) + ": " + msg);
  }

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '*')) ++i;
  }

  bool done() {
    skip();
    return i >= s.size();
  }

  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  long long exponent() {
    skip();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    long long coeff = 0;
    bool have_digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = coeff * 10 + (s[i] - '0');
      have_digits = true;
      ++i;
    }
    // inside an exponent, 'n' always means the parameter
    bool uses_n = false;
    if (i < s.size() && s[i] == 'n') {
      uses_n = true;
      ++i;
    }
    if (!have_digits && !uses_n) die("expected exponent");
    if (uses_n && !allow_n) die("parameter n not allowed here");
    long long value = have_digits ? coeff : 1;
    if (uses_n) value *= n;
    return neg ? -value : value;
  }

  std::string word(int depth) {
    std::string out;
    while (!done()) {
      char c = peek();
      if (c == ')') {
        if (depth == 0) die("unbalanced ')'");
        return out;
      }
      std::string atom;
      if (c == '(') {
        ++i;
        atom = word(depth + 1);
        skip();
        if (i >= s.size() || s[i] != ')') die("expected ')'");
        ++i;
      } else if (is_letter(c)) {
        atom.push_back(c);
        ++i;
      } else {
        die(std::string("unexpected character '") + c + "'");
      }
      long long e = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = exponent();
      }
      if (e < 0) {
        atom = invert(atom);
        e = -e;
      }
      if (atom.size() * static_cast<std::size_t>(e) + out.size() > 1u << 20)
        die("expansion too large");
      for (long long k = 0; k < e; ++k) out += atom;
    }
    if (depth != 0) die("unbalanced '('");
    return out;
  }
};

}  // namespace

std::string expand_template(std::string_view expr, long long n) {
  Parser p;
  p.s = expr;
  p.n = n;
  p.allow_n = true;
  return p.word(0);
}

std::string expand(std::string_view expr) {
  Parser p;
  p.s = expr;
  p.allow_n = false;
  return p.word(0);
}

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace horolab::words
