#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klein {

// Error taxonomy shared by all modules.
enum class errc {
    construction,     // malformed input (zero denominator, parse failure, bad scene)
    arithmetic,       // division by an exact zero
    domain,           // square root of a negative value
    degenerate_input, // coincident points, identical lines and similar collapses
    precondition      // stated geometric precondition not met
};

class error : public std::runtime_error {
  public:
    error(errc k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
using Rat = mpq_class;

Rat rat_from(long num, long den);
Rat rat_from(const mpz_class& num, const mpz_class& den);

namespace detail {
struct Node;
}

// A real number from the square-root closure of the rationals.  Values are
// immutable expression trees; exact comparisons go through sign().  A cheap
// interval pass settles clearly nonzero values, and the remaining cases are
// decided symbolically: every value reduces to a normal form over a basis of
// independent square roots, where being zero is a coefficient check, so
// sign() always terminates.
class CReal {
  public:
    CReal();                       // zero
    CReal(long n);                 // integer
    explicit CReal(const Rat& q);  // canonicalised rational

    static CReal from_fraction(const mpz_class& num, const mpz_class& den);

    friend CReal operator+(const CReal& a, const CReal& b);
    friend CReal operator-(const CReal& a, const CReal& b);
    friend CReal operator*(const CReal& a, const CReal& b);
    friend CReal operator/(const CReal& a, const CReal& b);
    CReal operator-() const;

    friend CReal sqrt(const CReal& a);  // requires sign(a) >= 0

    // Exact sign in {-1, 0, +1}.  Deterministic and thread safe.
    int sign() const;

    bool is_zero() const { return sign() == 0; }
    bool equals(const CReal& other) const { return (*this - other).sign() == 0; }

    // True when the value folded to a plain rational during construction.
    bool is_rational() const;
    // Only valid when is_rational(); the canonical rational value.
    const Rat& rational() const;

    // Serialisation: num | p/q | (e + e) | (e - e) | (e * e) | (e / e) | sqrt(e)
    std::string to_expr() const;
    static CReal parse(std::string_view text);

    // Decimal approximation with the requested number of significant digits.
    // Diagnostic only; never used for exact decisions.
    std::string approx(int digits) const;

    // Fixed-point decimal approximation with the given fraction digit count.
    std::string approx_fixed(int frac_digits) const;

    // Diagnostic enclosure endpoints as doubles (outward rounded).
    std::pair<double, double> enclosure_hint() const;

    const std::shared_ptr<const detail::Node>& node() const { return node_; }

  private:
    explicit CReal(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const detail::Node> node_;

    friend class detail_access;
};

inline bool operator==(const CReal& a, const CReal& b) { return a.equals(b); }
inline bool operator!=(const CReal& a, const CReal& b) { return !a.equals(b); }
inline bool operator<(const CReal& a, const CReal& b) { return (a - b).sign() < 0; }
inline bool operator>(const CReal& a, const CReal& b) { return (a - b).sign() > 0; }
inline bool operator<=(const CReal& a, const CReal& b) { return (a - b).sign() <= 0; }
inline bool operator>=(const CReal& a, const CReal& b) { return (a - b).sign() >= 0; }

// Initial refinement precision in fractional bits.  Defaults to 64, or the
// value of HYP_PRECISION_BITS when that variable is set.  Each refinement
// round doubles the working precision.
long initial_precision_bits();
void set_initial_precision_bits(long bits);

}  // namespace klein
