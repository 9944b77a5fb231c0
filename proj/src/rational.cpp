#include "liesym/rational.hpp"

#include "liesym/errors.hpp"

namespace liesym {

Rat rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    try {
        n = mpz_class(num);
        d = mpz_class(den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed integer in rational: \"" + num + "\"/\"" + den + "\"");
    }
    if (d == 0) throw ParseError("zero denominator in rational");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string rat_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace liesym
