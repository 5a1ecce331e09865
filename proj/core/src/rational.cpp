#include "hyperexp/rational.hpp"

#include <cctype>

#include "hyperexp/error.hpp"

namespace hyperexp {

Rational make_rational(long n, long d) {
    if (d == 0) throw_domain("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw_parse("empty number");
    std::string s(text);
    // decimal literal: scale by a power of ten, then reduce
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw_parse("malformed decimal '" + s + "'");
        for (std::size_t i = 0; i < digits.size(); ++i) {
            char c = digits[i];
            if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '-' || c == '+'))))
                throw_parse("malformed decimal '" + s + "'");
        }
        mpz_class num(digits, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw_parse("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw_domain("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw_domain("0^negative");
    mpz_class num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), a);
    Rational r = (e > 0) ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

long to_long(const Rational& q) {
    if (!is_integer(q)) throw_domain("expected integer, got " + to_string(q));
    if (!q.get_num().fits_slong_p()) throw_domain("integer out of range: " + to_string(q));
    return q.get_num().get_si();
}

long denominator_long(const Rational& q) {
    if (!q.get_den().fits_slong_p()) throw_domain("denominator out of range: " + to_string(q));
    return q.get_den().get_si();
}

}  // namespace hyperexp
