#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charsub {

// Arbitrary-precision integers and rationals. Rationals are kept
// canonical (reduced, positive denominator) by construction.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(std::int64_t num, std::int64_t den) {
    return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
    return q;
}

inline std::string int_str(const Int& v) { return v.get_str(); }

// Canonical "p/q" rendering; integers (including 0) render as "p/1".
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q", optionally signed.
inline Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

// Exact decimal rendering (round half away from zero), for report
// annotations only; verdict paths never touch decimal approximations.
inline std::string rat_decimal(const Rat& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int num = r.get_num() * scale * 2;
    Int scaled;  // round(|r| * scale) with half away from zero
    mpz_fdiv_q(scaled.get_mpz_t(), Int(abs(num) + r.get_den()).get_mpz_t(),
               Int(r.get_den() * 2).get_mpz_t());
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string f = frac.get_str();
    f.insert(f.begin(), static_cast<size_t>(digits) - f.size(), '0');
    std::string sign = (r < 0) ? "-" : "";
    return sign + whole.get_str() + "." + f;
}

}  // namespace charsub
