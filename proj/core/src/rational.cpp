#include "rcx/rational.hpp"

#include <stdexcept>

namespace rcx {

Rat make_rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  static_assert(sizeof(long) == sizeof(long long), "64-bit long assumed");
  Rat r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty token");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat{mpz_class(text)};
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  }
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long long floor_ll(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return to_ll(q);
}

long long ceil_ll(const Rat& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return to_ll(q);
}

RatPoint to_rat_point(const LatticePoint& p) {
  RatPoint out;
  out.reserve(p.size());
  for (long long c : p) out.emplace_back(make_rat(c));
  return out;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of machine range");
  return static_cast<long long>(z.get_si());
}

Rat factorial_rat(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

}  // namespace rcx
