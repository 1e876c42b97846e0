#include "monocomp/rational.hpp"

#include "monocomp/errors.hpp"

#include <sstream>

namespace monocomp {

std::string rational_to_string(const Rational& x) {
    std::ostringstream out;
    out << numerator(x) << "/" << denominator(x);
    return out.str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw ParseError("malformed rational '" + s + "': " + e.what());
    }
}

} // namespace monocomp
