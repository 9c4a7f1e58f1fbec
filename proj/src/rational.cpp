#include "weightprop/rational.hpp"

#include "weightprop/errors.hpp"

namespace weightprop {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && q.get_den() == 0))
        throw InputError("invalid rational '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace weightprop
