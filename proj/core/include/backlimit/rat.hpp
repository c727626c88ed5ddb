#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace backlimit {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so equality is structural and `to_string` is canonical.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    explicit Rat(mpq_class v);

    /// Parses "p", "p/q" or an exact decimal "a.b". Throws ParseError.
    static Rat parse(std::string_view text);
    /// Like parse, but only the "p" and "p/q" forms.
    static Rat parse_fraction(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const { return v_; }
    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

    /// Largest integer <= this.
    [[nodiscard]] mpz_class floor() const;
    /// Canonical literal: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;
    /// Lossy conversion, for rendering only.
    [[nodiscard]] double to_double() const { return v_.get_d(); }
    /// Stable 64-bit digest of the canonical literal (FNV-1a).
    [[nodiscard]] std::uint64_t hash() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

/// 2^-k as an exact rational.
Rat dyadic(unsigned k);

/// FNV-1a over raw bytes; shared by every digest in the project.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace backlimit

template <>
struct std::hash<backlimit::Rat> {
    std::size_t operator()(const backlimit::Rat& r) const noexcept { return r.hash(); }
};
