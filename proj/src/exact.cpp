#include "uvc/exact.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

#include "modular.hpp"
#include "uvc/error.hpp"

namespace uvc {

// ================================================================ IntPoly

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending)
{
    for (long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::linear_root(const BigInt& t) { return IntPoly(std::vector<BigInt>{-t, BigInt(1)}); }

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(out));
}

BigInt IntPoly::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntPoly IntPoly::primitive() const
{
    if (is_zero())
        return {};
    BigInt g = content();
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const
{
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = -coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& a)
{
    std::vector<BigInt> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = s * a.coeffs_[i];
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || k == 0)
            os << mag;
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

// ================================================================ IntMatrix

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

BigInt IntMatrix::trace() const
{
    BigInt t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

BigInt IntMatrix::content() const
{
    BigInt g = 0;
    for (const auto& x : data_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    // Zero entries of the left factor are skipped; adjacency matrices are the
    // usual left operand.
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const BigInt& s = a(i, l);
            if (s == 0)
                continue;
            if (s == 1) {
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += b(l, j);
            } else {
                for (std::size_t j = 0; j < b.cols_; ++j)
                    mpz_addmul(c(i, j).get_mpz_t(), s.get_mpz_t(), b(l, j).get_mpz_t());
            }
        }
    }
    return c;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a)
{
    IntMatrix c = a;
    for (auto& x : c.data_)
        x *= s;
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (BigInt(-1) * b); }

// ================================================================ characteristic polynomial

IntPoly charpoly(const IntMatrix& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
    return a.rows() <= kBerkowitzMaxOrder ? charpoly_berkowitz(a) : charpoly_modular(a);
}

IntPoly charpoly_berkowitz(const IntMatrix& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return IntPoly{1};

    // cur holds det(xI - A_r) for the leading r x r block, descending powers.
    std::vector<BigInt> cur{BigInt(1), BigInt(-a(0, 0))};
    std::vector<BigInt> col, next;
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A_r C, ..., -R A_r^(r-1) C
        std::vector<BigInt> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        col.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            col[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            BigInt dot = 0;
            for (std::size_t i = 0; i < r; ++i)
                mpz_addmul(dot.get_mpz_t(), a(r, i).get_mpz_t(), col[i].get_mpz_t());
            t[k + 2] = -dot;
            if (k + 1 == r)
                break;
            next.assign(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (a(i, j) != 0)
                        mpz_addmul(next[i].get_mpz_t(), a(i, j).get_mpz_t(), col[j].get_mpz_t());
            col.swap(next);
        }
        std::vector<BigInt> out(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                mpz_addmul(out[i].get_mpz_t(), t[i - j].get_mpz_t(), cur[j].get_mpz_t());
        cur.swap(out);
    }
    std::reverse(cur.begin(), cur.end());
    return IntPoly(std::move(cur));
}

namespace detail {

u64 word_prime(std::size_t index)
{
    static std::mutex guard;
    static std::vector<u64> table;
    std::lock_guard lock(guard);
    while (table.size() <= index) {
        mpz_class p = table.empty() ? (mpz_class(1) << 61) : to_mpz(table.back());
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        table.push_back(p.get_ui());
    }
    return table[index];
}

namespace {

// Characteristic polynomial mod p, ascending coefficients.
std::vector<u64> charpoly_mod_prime(const IntMatrix& a, u64 p)
{
    const std::size_t n = a.rows();
    std::vector<u64> h(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h[i * n + j] = residue(a(i, j), p);
    auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && at(piv, m - 1) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(piv, j), at(m, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(at(i, piv), at(i, m));
        }
        const u64 inv = inv_mod(at(m, m - 1), p);
        for (std::size_t i = m + 1; i < n; ++i) {
            const u64 u = mul_mod(at(i, m - 1), inv, p);
            if (u == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                at(i, j) = sub_mod(at(i, j), mul_mod(u, at(m, j), p), p);
            for (std::size_t j = 0; j < n; ++j)
                at(j, m) = add_mod(at(j, m), mul_mod(u, at(j, i), p), p);
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_i (prod of subdiagonal) h_{m-i,m} p_{m-i-1}
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> pm(m + 1, 0);
        const auto& prev = polys[m - 1];
        const u64 diag = at(m - 1, m - 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            pm[k + 1] = add_mod(pm[k + 1], prev[k], p);
            pm[k] = sub_mod(pm[k], mul_mod(diag, prev[k], p), p);
        }
        u64 t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = mul_mod(t, at(m - i, m - i - 1), p);
            if (t == 0)
                break;
            const u64 factor = mul_mod(t, at(m - i - 1, m - 1), p);
            const auto& lower = polys[m - i - 1];
            for (std::size_t k = 0; k < lower.size(); ++k)
                pm[k] = sub_mod(pm[k], mul_mod(factor, lower[k], p), p);
        }
        polys[m] = std::move(pm);
    }
    return polys[n];
}

} // namespace
} // namespace detail

IntPoly charpoly_modular(const IntMatrix& a)
{
    using namespace detail;
    if (!a.is_square())
        throw Error(ErrorCode::NotSquare, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return IntPoly{1};

    BigInt rho = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += abs(a(i, j));
        rho = std::max(rho, s);
    }
    BigInt bound;
    mpz_pow_ui(bound.get_mpz_t(), BigInt(rho + 1).get_mpz_t(), n);
    bound *= 2;

    std::vector<BigInt> value(n + 1, 0);
    BigInt modulus = 1;
    for (std::size_t idx = 0; modulus <= bound; ++idx) {
        const u64 p = word_prime(idx);
        const std::vector<u64> residues = charpoly_mod_prime(a, p);
        const BigInt pz = to_mpz(p);
        // Garner step: x' = x + modulus * ((r - x) * modulus^-1 mod p)
        const u64 minv = inv_mod(residue(modulus, p), p);
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 diff = sub_mod(residues[k], residue(value[k], p), p);
            const u64 step = mul_mod(diff, minv, p);
            if (step != 0)
                value[k] += modulus * to_mpz(step);
        }
        modulus *= pz;
    }
    const BigInt half = modulus / 2;
    for (auto& v : value)
        if (v > half)
            v -= modulus;
    return IntPoly(std::move(value));
}

// ================================================================ division and roots

RootDivision divide_out_root(const IntPoly& p, const BigInt& t)
{
    if (p.is_zero())
        return {IntPoly{}, BigInt(0)};
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    if (d == 0)
        return {IntPoly{}, c[0]};
    std::vector<BigInt> q(d);
    BigInt acc = c[d];
    for (std::size_t k = d; k-- > 0;) {
        q[k] = acc;
        acc = acc * t + c[k];
    }
    return {IntPoly(std::move(q)), acc};
}

namespace {

// Fujiwara-style upper bound on |root|, as an integer.
BigInt root_magnitude_bound(const IntPoly& p)
{
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    const BigInt lc = abs(c[d]);
    BigInt best = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        const BigInt& a = c[d - i];
        if (a == 0)
            continue;
        BigInt ratio = abs(a) / lc + 1;
        BigInt r;
        mpz_root(r.get_mpz_t(), ratio.get_mpz_t(), i);
        r += 1;
        best = std::max(best, r);
    }
    return 2 * best;
}

} // namespace

std::vector<IntegerRoot> integer_roots(const IntPoly& p)
{
    if (p.is_zero())
        throw Error(ErrorCode::InvalidArgument, "integer roots of the zero polynomial");
    std::vector<IntegerRoot> out;

    std::size_t zeros = 0;
    while (p.coeffs()[zeros] == 0)
        ++zeros;
    IntPoly rest(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), p.coeffs().end()));
    if (zeros > 0)
        out.push_back({BigInt(0), zeros});
    if (rest.degree() <= 0)
        return out;

    // Any integer root divides the constant term and respects the magnitude bound.
    const BigInt constant = abs(rest.coeff(0));
    const BigInt limit = std::min(root_magnitude_bound(rest), constant);
    for (BigInt t = 1; t <= limit && rest.degree() > 0; ++t) {
        if (!mpz_divisible_p(constant.get_mpz_t(), t.get_mpz_t()))
            continue;
        for (const BigInt& cand : {BigInt(-t), t}) {
            std::size_t mult = 0;
            while (rest.degree() > 0) {
                auto div = divide_out_root(rest, cand);
                if (div.remainder != 0)
                    break;
                rest = std::move(div.quotient);
                ++mult;
            }
            if (mult > 0)
                out.push_back({cand, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const IntegerRoot& x, const IntegerRoot& y) { return x.root < y.root; });
    return out;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
    std::vector<BigInt> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> q(r.size() - db);
    const BigInt& lc = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = r[k + db];
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
            throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact over Z");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    for (const auto& x : r)
        if (x != 0)
            throw Error(ErrorCode::InvalidArgument, "polynomial division leaves a remainder");
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero())
        throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree())
        return a;
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const int delta = a.degree() - b.degree();
    const BigInt& lc = b.leading();
    std::vector<BigInt> r = a.coeffs();
    int steps = 0;
    while (r.size() > db && !r.empty()) {
        const BigInt top = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& x : r)
            x *= lc;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        r.pop_back();
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        ++steps;
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    return scale * IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b)
{
    IntPoly x = a.primitive();
    IntPoly y = b.primitive();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero() && x.leading() < 0)
        x = -x;
    return x;
}

IntPoly squarefree_part(const IntPoly& p)
{
    if (p.degree() <= 0)
        return p;
    return exact_quotient(p, poly_gcd(p, p.derivative()));
}

int sign_at(const IntPoly& p, const Rat& x)
{
    // sign of den^deg * p(num/den), den > 0
    if (p.is_zero())
        return 0;
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    const auto& c = p.coeffs();
    BigInt acc = c.back();
    BigInt den_pow = 1;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        den_pow *= den;
        acc = acc * num + c[k] * den_pow;
    }
    return sgn(acc);
}

namespace {

std::size_t sign_changes(const std::vector<IntPoly>& chain, const Rat& x)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& s : chain) {
        int v = sign_at(s, x);
        if (v == 0)
            continue;
        if (last != 0 && v != last)
            ++changes;
        last = v;
    }
    return changes;
}

} // namespace

std::size_t sturm_root_count(const IntPoly& p, const Rat& lo, const Rat& hi)
{
    if (p.is_zero())
        throw Error(ErrorCode::InvalidArgument, "Sturm count of the zero polynomial");
    if (!(lo < hi))
        throw Error(ErrorCode::InvalidArgument, "Sturm interval needs lo < hi");
    const IntPoly s = squarefree_part(p).primitive();
    if (sign_at(s, lo) == 0 || sign_at(s, hi) == 0)
        throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
    if (s.degree() <= 0)
        return 0;

    std::vector<IntPoly> chain{s, s.derivative().primitive()};
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero())
            break;
        // prem carries lc(b)^(delta+1); undo a negative factor so r stays a
        // positive multiple of the true remainder.
        const int delta = a.degree() - b.degree();
        if (b.leading() < 0 && (delta + 1) % 2 == 1)
            r = -r;
        chain.push_back(-r.primitive());
    }
    const std::size_t at_lo = sign_changes(chain, lo);
    const std::size_t at_hi = sign_changes(chain, hi);
    return at_lo - at_hi;
}

BigInt eval_poly_at_int(const IntPoly& p, const BigInt& t)
{
    BigInt acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * t + c[k];
    return acc;
}

IntMatrix eval_poly_at_matrix(const IntPoly& p, const IntMatrix& a)
{
    if (!a.is_square())
        throw Error(ErrorCode::NotSquare, "polynomial evaluated at a non-square matrix");
    const std::size_t n = a.rows();
    IntMatrix x(n, n);
    const auto& c = p.coeffs();
    // x <- a * x + c_k I; a on the left so its zero pattern is exploited.
    for (std::size_t k = c.size(); k-- > 0;) {
        if (k + 1 < c.size())
            x = a * x;
        for (std::size_t i = 0; i < n; ++i)
            x(i, i) += c[k];
    }
    return x;
}

// ================================================================ rank

std::size_t bareiss_rank(IntMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    BigInt prev = 1;
    BigInt tmp;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const BigInt& v = m(i, j);
                if (v == 0)
                    continue;
                if (pr == rows || mpz_cmpabs(v.get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows)
            break;
        m.swap_rows(k, pr);
        m.swap_cols(k, pc);
        const BigInt pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const BigInt lead = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                BigInt& target = m(i, j);
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), target.get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(target.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> modular_pivot_columns(const IntMatrix& m, std::uint64_t prime)
{
    using namespace detail;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<u64> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = residue(m(i, j), prime);
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && pivots.size() < rows; ++c) {
        const std::size_t rank = pivots.size();
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[rank * cols + j]);
        const u64 inv = inv_mod(a[rank * cols + c], prime);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const u64 f = mul_mod(a[i * cols + c], inv, prime);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = sub_mod(a[i * cols + j], mul_mod(f, a[rank * cols + j], prime), prime);
        }
        pivots.push_back(c);
    }
    return pivots;
}

std::size_t modular_rank(const IntMatrix& m, std::uint64_t prime)
{
    return modular_pivot_columns(m, prime).size();
}

} // namespace uvc
