#include <cctype>
#include <string>

#include "maxgenus/scroll_geometry.hpp"

namespace maxgenus::scroll {
namespace {

struct Coefficients {
  Integer h = 0;
  Integer r = 0;
};

Coefficients parse_linear(std::string_view text, bool resolved) {
  const std::string what = resolved ? "resolved class" : "divisor class";
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse " + what + " '" + std::string(text) + "': " + why);
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) {
    throw fail("empty");
  }
  if (text == "0") {
    return {};
  }

  Coefficients out;
  std::size_t i = 0;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
    }
    if (i >= text.size()) {
      throw fail("term without H or R");
    }
    const char symbol = text[i++];
    if (symbol != 'H' && symbol != 'R') {
      throw fail(std::string("unexpected character '") + symbol + "'");
    }
    const bool tilde = i < text.size() && text[i] == '~';
    if (tilde) ++i;
    if (tilde != resolved) {
      throw fail(resolved ? "resolved classes are written with H~ and R~" : "'~' marks a resolved class");
    }
    Integer coefficient = digits.empty() ? Integer(1) : Integer(digits);
    coefficient *= sign;
    (symbol == 'H' ? out.h : out.r) += coefficient;
    first = false;
  }
  return out;
}

std::string format_linear(const Integer& h, const Integer& r, std::string_view suffix) {
  if (h == 0 && r == 0) {
    return "0";
  }
  std::string out;
  auto term = [&](const Integer& c, char symbol) {
    if (c == 0) return;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Integer mag = abs(c);
    if (mag != 1) out += mag.get_str();
    out += symbol;
    out += suffix;
  };
  term(h, 'H');
  term(r, 'R');
  return out;
}

}  // namespace

DivisorClass parse_divisor(std::string_view text) {
  const Coefficients c = parse_linear(text, false);
  return {c.h, c.r};
}

ResolvedClass parse_resolved(std::string_view text) {
  const Coefficients c = parse_linear(text, true);
  return {c.h, c.r};
}

std::string format(const DivisorClass& cls) { return format_linear(cls.h, cls.r, ""); }

std::string format(const ResolvedClass& cls) { return format_linear(cls.h, cls.r, "~"); }

}  // namespace maxgenus::scroll
