#include "icmc/numeric.hpp"

#include <cctype>

namespace icmc {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error("malformed integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error("malformed rational: '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw Error("zero denominator: '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string format_rat(const Rat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace icmc
