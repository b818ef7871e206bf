#include "urysohn/rational.hpp"

#include "urysohn/errors.hpp"

#include <cctype>

namespace urysohn {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string to_string(const Rational& value) { return value.str(); }

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  if (trim(csv).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = csv.find(',', pos);
    out.push_back(parse_rational(csv.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Integer numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }

Integer denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace urysohn
