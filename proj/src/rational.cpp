#include "vecmeas/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace vecmeas {

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j > start;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) return false;
  return i == s.size();
}

}  // namespace

Rat rat_parse(const std::string& text) {
  // mpq accepts whitespace and bases we do not want; validate the shape first.
  if (!looks_like_rational(text))
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rat& r) { return r.get_d(); }

Rat rat_pow2_inv(int k) {
  if (k < 0) throw std::invalid_argument("rat_pow2_inv: negative exponent");
  mpz_class den = 1;
  den <<= k;
  return Rat(1, den);
}

}  // namespace vecmeas
