#include <strata/rational.hpp>

#include <stdexcept>

namespace strata {

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

Rational rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace strata
