#include "reflect96/numeric.hpp"

#include <cctype>
#include <limits>

namespace reflect96 {

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  std::size_t pos = 0;
  if (s[0] == '-') pos = 1;
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(s, pos, s.size())) throw parse_error("bad rational: " + s);
    return Rat(s);
  }
  if (!all_digits(s, pos, slash) || !all_digits(s, slash + 1, s.size()))
    throw parse_error("bad rational: " + s);
  Rat q(s);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw arithmetic_error("not an integer: " + to_string(q));
  return q.get_num();
}

long long to_int64(const Int& n) {
  if (!n.fits_slong_p()) throw arithmetic_error("out of int64 range: " + n.get_str());
  return n.get_si();
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw arithmetic_error("zero to a negative power");
    Rat inv = Rat(base.get_den()) / Rat(base.get_num());
    return rat_pow(inv, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace reflect96
