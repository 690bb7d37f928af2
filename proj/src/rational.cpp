#include "planar/rational.hpp"

#include <ostream>

namespace planar {

Rational Rational::from_string(std::string_view text) {
    mpq_class v;
    if (text.empty() || v.set_str(std::string(text), 10) != 0)
        throw Error("Rational: cannot parse '" + std::string(text) + "'");
    if (v.get_den() == 0) throw Error("Rational: zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
    // base is canonical, so r is too
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational int_pow(long base, int n) {
    if (n < 0) throw Error("int_pow: negative exponent");
    return Rational(base).pow(n);
}

} // namespace planar
