#include "haarcomm/exact.hpp"
#include "haarcomm/group_kind.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace haarcomm {

std::string to_string(const ExactScalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

double to_double(const ExactScalar& q) {
    // mpq_get_d truncates; go through a high-precision float for correct rounding
    mpf_class f(q, 256);
    return f.get_d();
}

std::string to_decimal(const ExactScalar& q, int digits) {
    std::ostringstream out;
    // enough binary digits that the printed decimal digits are all correct
    const mpf_class value(q, static_cast<mp_bitcnt_t>(digits * 3.33 + 64));
    out.precision(digits);
    out << value;
    return out.str();
}

ExactScalar power(const ExactScalar& base, int exponent) {
    ExactScalar result = 1;
    ExactScalar b = exponent >= 0 ? base : ExactScalar(1) / base;
    for (int e = std::abs(exponent); e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

ExactScalar parse_rational(const std::string& text) {
    ExactScalar q;
    if (q.set_str(text, 10) != 0 || text.empty()) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

GroupKind parse_group(std::string_view text) {
    if (text == "cu" || text == "u" || text == "unitary" || text == "CU") return GroupKind::unitary;
    if (text == "co" || text == "o" || text == "orthogonal" || text == "CO") return GroupKind::orthogonal;
    throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected cu or co)");
}

}  // namespace haarcomm
