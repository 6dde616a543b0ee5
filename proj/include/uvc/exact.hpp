#ifndef UVC_EXACT_HPP
#define UVC_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace uvc {

using BigInt = mpz_class;
/// Canonical rational: gcd(num, den) = 1 and den > 0 after every operation.
using Rat = mpq_class;

/*
 * Univariate polynomial over Z, coefficients in ascending degree.
 * Trailing zeros are stripped, so the zero polynomial has no coefficients
 * and degree -1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);
    IntPoly(std::initializer_list<long> ascending);

    /// x - t
    static IntPoly linear_root(const BigInt& t);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }

    IntPoly derivative() const;
    /// gcd of the coefficients, non-negative; zero for the zero polynomial.
    BigInt content() const;
    /// Divides by the content; the sign of the leading coefficient is kept.
    IntPoly primitive() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    BigInt trace() const;
    /// gcd of all entries (zero for the zero matrix).
    BigInt content() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const BigInt& s, const IntMatrix& a);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

// ---------------------------------------------------------------- polynomials

/// det(xI - a).  Division-free Berkowitz up to kBerkowitzMaxOrder, above that
/// the multi-modular route; both are exact.  Throws NotSquare.
IntPoly charpoly(const IntMatrix& a);

inline constexpr std::size_t kBerkowitzMaxOrder = 48;

IntPoly charpoly_berkowitz(const IntMatrix& a);

/*
 * Hessenberg reduction modulo word-size primes and Chinese remaindering.
 * Every coefficient of det(xI - a) is bounded by (1 + rho)^n where rho is
 * the largest absolute row sum, and primes are accumulated until their
 * product exceeds twice that bound, so the lift is exact.
 */
IntPoly charpoly_modular(const IntMatrix& a);

struct RootDivision {
    IntPoly quotient;
    BigInt remainder;
};

/// p = quotient * (x - t) + remainder, by synthetic division.
RootDivision divide_out_root(const IntPoly& p, const BigInt& t);

struct IntegerRoot {
    BigInt root;
    std::size_t multiplicity = 0;

    friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

/// All integer roots with multiplicities, ascending by root.  Throws
/// InvalidArgument on the zero polynomial.
std::vector<IntegerRoot> integer_roots(const IntPoly& p);

/// a / b when b divides a in Z[x]; throws InvalidArgument otherwise.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'): same roots as p, each simple.
IntPoly squarefree_part(const IntPoly& p);

/// Sign of p(x) at a rational point: -1, 0 or 1.
int sign_at(const IntPoly& p, const Rat& x);

/// Distinct real roots of p in the open interval (lo, hi), via a Sturm chain
/// on the squarefree part.  Throws EndpointIsRoot or InvalidArgument.
std::size_t sturm_root_count(const IntPoly& p, const Rat& lo, const Rat& hi);

BigInt eval_poly_at_int(const IntPoly& p, const BigInt& t);

/// Horner evaluation p(a).  Throws NotSquare.
IntMatrix eval_poly_at_matrix(const IntPoly& p, const IntMatrix& a);

// ---------------------------------------------------------------- rank

/*
 * Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
 * The pivot is the entry of smallest nonzero magnitude in the remaining
 * block; every intermediate entry is a minor of the input, so all
 * divisions are exact.
 */
std::size_t bareiss_rank(IntMatrix m);

/// Rank over Z/pZ for a prime p < 2^62.  Never exceeds the rank over Q.
std::size_t modular_rank(const IntMatrix& m, std::uint64_t prime);

/// Leftmost maximal set of columns independent modulo p, ascending.  Such
/// columns are independent over Q as well.
std::vector<std::size_t> modular_pivot_columns(const IntMatrix& m, std::uint64_t prime);

} // namespace uvc

#endif // UVC_EXACT_HPP
