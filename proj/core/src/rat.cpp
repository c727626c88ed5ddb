#include "backlimit/rat.hpp"

#include <cctype>
#include <ostream>

#include "backlimit/errors.hpp"

namespace backlimit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw ParseError("invalid rational literal '" + std::string(whole) + "'");
    }
    mpz_class z(std::string(digits), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rat::Rat(std::int64_t n) : v_(static_cast<signed long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den)));
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(mpq_class(parse_integer(text, text)));
    }
    const mpz_class p = parse_integer(text.substr(0, slash), text);
    const std::string_view qs = text.substr(slash + 1);
    if (!all_digits(qs)) throw ParseError("invalid rational literal '" + std::string(text) + "'");
    const mpz_class q(std::string(qs), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(mpq_class(p, q));
}

Rat Rat::parse(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse_fraction(text);
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw ParseError("invalid decimal literal '" + std::string(text) + "'");
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
        negative = int_part.front() == '-';
        int_part.remove_prefix(1);
    }
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part)) throw ParseError("invalid decimal literal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class digits(std::string(int_part) + std::string(frac), 10);
    mpq_class v(digits, scale);
    v.canonicalize();
    return Rat(negative ? mpq_class(-v) : v);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rat::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rat::hash() const { return fnv1a64(to_string()); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat dyadic(unsigned k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return Rat(mpq_class(mpz_class(1), d));
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace backlimit
