#pragma once

// Exact linear algebra over Z/2Z with the standard symplectic form on
// (Z/2Z)^{2g}. Coordinates are interleaved (a_1, b_1, ..., a_g, b_g) so
// that raising the genus appends two coordinates. Bits are packed into
// 64-bit words; genus up to 256 is supported.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvesys/bitset.hpp"
#include "curvesys/clique.hpp"

namespace curvesys::gf2 {

constexpr int kMaxGenus = 256;

class Vector {
public:
    Vector() = default;

    explicit Vector(int genus) : genus_(check_genus(genus)), words_((2 * genus + 63) / 64, 0) {}

    static Vector from_bits(int genus, std::initializer_list<int> bits) {
        Vector v(genus);
        if (static_cast<int>(bits.size()) != 2 * genus)
            throw std::invalid_argument("gf2::Vector: expected 2g bits");
        int i = 0;
        for (int b : bits) v.set_bit(i++, b != 0);
        return v;
    }

    // Bitstring with a_1 first: "1100" is (1,1,0,0).
    static Vector from_string(std::string_view s) {
        if (s.size() % 2 != 0 || s.empty())
            throw std::invalid_argument("gf2::Vector: bitstring length must be 2g > 0");
        Vector v(static_cast<int>(s.size() / 2));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw std::invalid_argument("gf2::Vector: bitstring must be over {0,1}");
            v.set_bit(static_cast<int>(i), s[i] == '1');
        }
        return v;
    }

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }

    bool bit(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set_bit(int i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    Vector& operator^=(const Vector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend Vector operator^(Vector a, const Vector& b) {
        a ^= b;
        return a;
    }
    // Addition in (Z/2Z)^{2g} is XOR.
    friend Vector operator+(const Vector& a, const Vector& b) { return a ^ b; }

    bool operator==(const Vector& o) const { return genus_ == o.genus_ && words_ == o.words_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    // Lexicographic on the bitstring (a_1 first), so ordering matches
    // the serialized form.
    bool operator<(const Vector& o) const {
        if (genus_ != o.genus_) return genus_ < o.genus_;
        for (int i = 0; i < dim(); ++i) {
            bool x = bit(i), y = o.bit(i);
            if (x != y) return y;
        }
        return false;
    }

    std::string to_string() const {
        std::string s(dim(), '0');
        for (int i = 0; i < dim(); ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    void require_same_dim(const Vector& o) const {
        if (genus_ != o.genus_)
            throw std::invalid_argument("gf2: dimension mismatch between vectors");
    }

private:
    static int check_genus(int g) {
        if (g < 1 || g > kMaxGenus) throw std::invalid_argument("gf2: genus must be in [1, 256]");
        return g;
    }

    int genus_ = 0;
    std::vector<std::uint64_t> words_;
};

namespace detail {

// Swapping adjacent bits turns the symplectic pairing into a plain dot
// product: (u,v) = <swap(u), v>. Bit pairs (2t, 2t+1) never straddle a
// word boundary because 64 is even.
inline std::uint64_t swap_adjacent(std::uint64_t w) {
    return ((w & 0x5555555555555555ULL) << 1) | ((w & 0xAAAAAAAAAAAAAAAAULL) >> 1);
}

inline int parity64(std::uint64_t w) { return Bitset::popcount64(w) & 1; }

}  // namespace detail

// Plain dot product mod 2.
inline int dot(const Vector& u, const Vector& v) {
    u.require_same_dim(v);
    int acc = 0;
    for (std::size_t i = 0; i < u.words().size(); ++i)
        acc ^= detail::parity64(u.words()[i] & v.words()[i]);
    return acc;
}

// Standard symplectic pairing: sum_j u_{a_j} v_{b_j} + u_{b_j} v_{a_j} mod 2.
// Symmetric and alternating ((u,u) = 0).
inline int pairing(const Vector& u, const Vector& v) {
    u.require_same_dim(v);
    int acc = 0;
    for (std::size_t i = 0; i < u.words().size(); ++i)
        acc ^= detail::parity64(u.words()[i] & detail::swap_adjacent(v.words()[i]));
    return acc;
}

// Rank of the span, by elimination with lowest-set-bit pivots.
inline int rank(const std::vector<Vector>& vs) {
    if (vs.empty()) return 0;
    std::vector<Vector> pivots;  // pivots[t] has its lowest set bit unique
    std::vector<int> pivot_bit;
    for (const Vector& v0 : vs) {
        vs.front().require_same_dim(v0);
        Vector v = v0;
        for (std::size_t t = 0; t < pivots.size(); ++t)
            if (v.bit(pivot_bit[t])) v ^= pivots[t];
        if (v.is_zero()) continue;
        int b = 0;
        while (!v.bit(b)) ++b;
        pivots.push_back(v);
        pivot_bit.push_back(b);
    }
    return static_cast<int>(pivots.size());
}

inline bool independent(const std::vector<Vector>& vs) {
    return rank(vs) == static_cast<int>(vs.size());
}

// -------------------------------------------------------------------------
// Matrices (rows of Vectors; apply() treats the argument as a column).

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::vector<Vector> rows) : rows_(std::move(rows)) {
        for (const auto& r : rows_) rows_.front().require_same_dim(r);
    }

    static Matrix identity(int genus) {
        std::vector<Vector> rows(2 * genus, Vector(genus));
        for (int i = 0; i < 2 * genus; ++i) rows[i].set_bit(i, true);
        return Matrix(std::move(rows));
    }

    static Matrix from_columns(const std::vector<Vector>& cols) {
        if (cols.empty()) throw std::invalid_argument("gf2::Matrix: no columns");
        int d = cols.front().dim();
        if (static_cast<int>(cols.size()) != d)
            throw std::invalid_argument("gf2::Matrix: expected a square column set");
        std::vector<Vector> rows(d, Vector(cols.front().genus()));
        for (int j = 0; j < d; ++j) {
            cols[j].require_same_dim(cols.front());
            for (int i = 0; i < d; ++i) rows[i].set_bit(j, cols[j].bit(i));
        }
        return Matrix(std::move(rows));
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    int genus() const { return rows_.empty() ? 0 : rows_.front().genus(); }
    bool square() const { return !rows_.empty() && rows_.front().dim() == dim(); }

    const Vector& row(int i) const { return rows_[i]; }
    bool bit(int i, int j) const { return rows_[i].bit(j); }

    Vector column(int j) const {
        Vector c(genus());
        for (int i = 0; i < dim(); ++i) c.set_bit(i, rows_[i].bit(j));
        return c;
    }

    Vector apply(const Vector& v) const {
        if (v.dim() != (rows_.empty() ? 0 : rows_.front().dim()))
            throw std::invalid_argument("gf2::Matrix: dimension mismatch in apply");
        Vector out(v.genus());
        for (int i = 0; i < dim(); ++i) out.set_bit(i, dot(rows_[i], v) != 0);
        return out;
    }

    Matrix multiply(const Matrix& o) const {
        if (!square() || !o.square() || dim() != o.dim())
            throw std::invalid_argument("gf2::Matrix: dimension mismatch in multiply");
        std::vector<Vector> rows(dim(), Vector(genus()));
        for (int i = 0; i < dim(); ++i) {
            Vector acc(genus());
            for (int t = 0; t < dim(); ++t)
                if (rows_[i].bit(t)) acc ^= o.rows_[t];
            rows[i] = acc;
        }
        return Matrix(std::move(rows));
    }

    std::optional<Matrix> inverse() const {
        if (!square()) return std::nullopt;
        const int d = dim();
        std::vector<Vector> left(rows_);
        std::vector<Vector> right(Matrix::identity(genus()).rows_);
        int r = 0;
        for (int c = 0; c < d; ++c) {
            int piv = -1;
            for (int i = r; i < d; ++i)
                if (left[i].bit(c)) {
                    piv = i;
                    break;
                }
            if (piv < 0) return std::nullopt;  // singular
            std::swap(left[piv], left[r]);
            std::swap(right[piv], right[r]);
            for (int i = 0; i < d; ++i)
                if (i != r && left[i].bit(c)) {
                    left[i] ^= left[r];
                    right[i] ^= right[r];
                }
            ++r;
        }
        return Matrix(std::move(right));
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_; }

private:
    std::vector<Vector> rows_;
};

// True iff A is invertible and preserves the pairing on the standard basis.
inline bool is_symplectic(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("gf2::is_symplectic: matrix must be square 2g x 2g");
    if (a.dim() % 2 != 0) throw std::invalid_argument("gf2::is_symplectic: dimension must be even");
    if (!a.inverse()) return false;
    const int d = a.dim();
    std::vector<Vector> cols;
    cols.reserve(d);
    for (int j = 0; j < d; ++j) cols.push_back(a.column(j));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            int expected = (j == i + 1 && i % 2 == 0) ? 1 : 0;  // (e_{2t}, e_{2t+1}) = 1
            if (pairing(cols[i], cols[j]) != expected) return false;
        }
    return true;
}

// Symplectic transvection x -> x + (x,v) v; always symplectic.
inline Matrix transvection(const Vector& v) {
    const int d = v.dim();
    std::vector<Vector> cols;
    cols.reserve(d);
    for (int i = 0; i < d; ++i) {
        Vector e(v.genus());
        e.set_bit(i, true);
        if (pairing(e, v)) e ^= v;
        cols.push_back(e);
    }
    return Matrix::from_columns(cols);
}

// -------------------------------------------------------------------------
// The canonical pairwise-pairing-one family v^g_1, ..., v^g_{2g+1}.
//
// Base: v^1 = {(1,1), (0,1), (1,0)}. Inductive step (semicolons are
// concatenation): v^g_i = (v^{g-1}_i ; 0,0) for i <= 2g-2, and the last
// three all extend v^{g-1}_{2g-1}, with suffixes (1,0), (0,1), (1,1).
inline std::vector<Vector> canonical_family(int g) {
    if (g < 1) throw std::invalid_argument("canonical_family: genus must be >= 1");
    if (g > kMaxGenus) throw std::invalid_argument("canonical_family: genus out of range");
    std::vector<Vector> fam = {Vector::from_string("11"), Vector::from_string("01"),
                               Vector::from_string("10")};
    for (int gg = 2; gg <= g; ++gg) {
        auto extend = [gg](const Vector& v, bool a, bool b) {
            Vector w(gg);
            for (int i = 0; i < v.dim(); ++i) w.set_bit(i, v.bit(i));
            w.set_bit(2 * gg - 2, a);
            w.set_bit(2 * gg - 1, b);
            return w;
        };
        std::vector<Vector> next;
        next.reserve(2 * gg + 1);
        for (int i = 0; i < 2 * gg - 2; ++i) next.push_back(extend(fam[i], false, false));
        next.push_back(extend(fam.back(), true, false));
        next.push_back(extend(fam.back(), false, true));
        next.push_back(extend(fam.back(), true, true));
        fam = std::move(next);
    }
    return fam;
}

struct OddFamilyVerdict {
    bool all_nonzero = false;
    bool all_pairwise_one = false;
    std::size_t size = 0;
    bool bound_respected = false;  // size <= 2g+1 whenever the two flags hold

    bool valid() const { return all_nonzero && all_pairwise_one && bound_respected; }
};

inline OddFamilyVerdict validate_odd_family(const std::vector<Vector>& vs) {
    OddFamilyVerdict v;
    v.size = vs.size();
    v.all_nonzero = true;
    v.all_pairwise_one = true;
    for (const auto& x : vs) {
        vs.front().require_same_dim(x);
        if (x.is_zero()) v.all_nonzero = false;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (pairing(vs[i], vs[j]) != 1) v.all_pairwise_one = false;
    if (v.all_nonzero && v.all_pairwise_one && !vs.empty()) {
        std::size_t bound = 2 * static_cast<std::size_t>(vs.front().genus()) + 1;
        v.bound_respected = v.size <= bound;
    } else {
        v.bound_respected = true;  // bound only asserted for qualifying families
    }
    return v;
}

struct MaxOddFamilyOptions {
    // The 2g+1 bound is a proved cutoff; disable it for a certified search
    // that exhausts the whole branch space.
    bool use_bound_cutoff = true;
    unsigned threads = 1;
};

struct MaxOddFamilyResult {
    std::size_t size = 0;
    std::vector<Vector> witness;
};

// Exact maximum size of a pairwise-pairing-one family of nonzero vectors
// in (Z/2Z)^{2g}: a maximum clique in the pairing graph on the 2^{2g}-1
// nonzero vectors.
inline MaxOddFamilyResult max_odd_family(int g, MaxOddFamilyOptions opts = {}) {
    if (g < 1) throw std::invalid_argument("max_odd_family: genus must be >= 1");
    if (g > 7) throw std::invalid_argument("max_odd_family: genus above 7 is not tractable here");
    const std::size_t n = (std::size_t{1} << (2 * g)) - 1;  // nonzero vectors, mask = index + 1
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t u = i + 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t w = j + 1;
            if (detail::parity64(u & detail::swap_adjacent(w))) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    CliqueOptions copts;
    if (opts.use_bound_cutoff) copts.stop_at = static_cast<std::size_t>(2 * g + 1);
    copts.threads = opts.threads;
    CliqueResult res = max_clique(adj, copts);

    MaxOddFamilyResult out;
    out.size = res.size;
    for (std::size_t idx : res.members) {
        Vector v(g);
        std::uint64_t mask = idx + 1;
        for (int b = 0; b < 2 * g; ++b)
            if ((mask >> b) & 1) v.set_bit(b, true);
        out.witness.push_back(v);
    }
    return out;
}

// -------------------------------------------------------------------------
// Symplectic Gram-Schmidt.

// Span decomposition for any symplectic pairing: splits the input into
// hyperbolic pairs plus a basis of the span's radical. Every decision is
// driven only by pairing values, so two inputs with equal Gram matrices
// decompose with identical coefficients.
template <class Vec>
struct SpanDecomposition {
    std::vector<std::pair<Vec, Vec>> pairs;
    std::vector<Vec> radical;
};

template <class Vec, class PairFn, class AddFn>
SpanDecomposition<Vec> symplectic_span_decompose(std::vector<Vec> work, PairFn pair_fn,
                                                 AddFn add_fn) {
    SpanDecomposition<Vec> out;
    while (!work.empty()) {
        Vec u = work.front();
        work.erase(work.begin());
        std::size_t partner = work.size();
        for (std::size_t j = 0; j < work.size(); ++j)
            if (pair_fn(u, work[j]) == 1) {
                partner = j;
                break;
            }
        if (partner == work.size()) {
            out.radical.push_back(u);
            continue;
        }
        Vec w = work[partner];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));
        for (Vec& x : work) {
            if (pair_fn(x, w) == 1) x = add_fn(x, u);
            if (pair_fn(x, u) == 1) x = add_fn(x, w);
        }
        out.pairs.emplace_back(std::move(u), std::move(w));
    }
    return out;
}

namespace detail {

// Solve pairing(c_t, x) = rhs_t for all t; returns the particular solution
// with free coordinates zero. The system is consistent whenever the
// constraint vectors are independent (the form is nondegenerate).
inline Vector solve_pairing_system(int genus, const std::vector<Vector>& constraints,
                                   const std::vector<int>& rhs) {
    const int d = 2 * genus;
    // Row t of the system is swap_adjacent(c_t), since (c, x) = <swap(c), x>.
    std::vector<Vector> rows;
    std::vector<int> b = rhs;
    rows.reserve(constraints.size());
    for (const Vector& c : constraints) {
        Vector r(genus);
        for (int pos = 0; pos < d; ++pos) r.set_bit(pos, c.bit(pos ^ 1));
        rows.push_back(r);
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < d && r < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].bit(c)) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(b[piv], b[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].bit(c)) {
                rows[i] ^= rows[r];
                b[i] ^= b[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (b[i]) throw std::logic_error("gf2: inconsistent pairing system (dependent constraints)");
    Vector x(genus);
    for (std::size_t t = 0; t < pivot_col.size(); ++t) x.set_bit(pivot_col[t], b[t] != 0);
    return x;
}

// Basis of { x : pairing(c, x) = 0 for all constraints }, deterministic.
// With no constraints this returns the standard basis in order.
inline std::vector<Vector> pairing_null_space(int genus, const std::vector<Vector>& constraints) {
    const int d = 2 * genus;
    std::vector<Vector> rows;
    rows.reserve(constraints.size());
    for (const Vector& c : constraints) {
        Vector r(genus);
        for (int pos = 0; pos < d; ++pos) r.set_bit(pos, c.bit(pos ^ 1));  // swap adjacent
        rows.push_back(r);
    }
    // RREF
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < d && r < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].bit(c)) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].bit(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        Vector v(genus);
        v.set_bit(c, true);
        for (std::size_t t = 0; t < pivot_col.size(); ++t)
            if (rows[t].bit(c)) v.set_bit(pivot_col[t], true);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace detail

// Completes independent vectors to a full symplectic basis of (Z/2Z)^{2g},
// returned as the columns of a symplectic matrix. The pairs formed while
// consuming the input come first, so the initial columns span a subspace
// containing span(vs). Deterministic given the input order.
inline Matrix complete_symplectic_basis(int genus, const std::vector<Vector>& vs) {
    if (genus < 1 || genus > kMaxGenus)
        throw std::invalid_argument("complete_symplectic_basis: genus out of range");
    for (const Vector& v : vs)
        if (v.genus() != genus)
            throw std::invalid_argument("complete_symplectic_basis: dimension mismatch");
    if (!independent(vs))
        throw std::invalid_argument("complete_symplectic_basis: rank error, input is dependent");

    auto pair_fn = [](const Vector& a, const Vector& b) { return pairing(a, b); };
    auto add_fn = [](const Vector& a, const Vector& b) { return a ^ b; };
    auto dec = symplectic_span_decompose(vs, pair_fn, add_fn);

    std::vector<std::pair<Vector, Vector>> pairs = dec.pairs;

    // Pair each radical vector r with a partner t solving (t, r) = 1 and
    // (t, c) = 0 against everything already fixed, so the radical basis
    // itself never has to be modified.
    std::vector<Vector> fixed;
    for (const auto& [e, f] : pairs) {
        fixed.push_back(e);
        fixed.push_back(f);
    }
    for (const Vector& r : dec.radical) fixed.push_back(r);
    std::vector<Vector> partners;
    for (std::size_t j = 0; j < dec.radical.size(); ++j) {
        std::vector<Vector> constraints = fixed;
        for (const Vector& t : partners) constraints.push_back(t);
        std::vector<int> rhs(constraints.size(), 0);
        // the radical vectors sit at positions [2*pairs, 2*pairs + radical)
        rhs[2 * pairs.size() + j] = 1;
        partners.push_back(detail::solve_pairing_system(genus, constraints, rhs));
    }
    for (std::size_t j = 0; j < dec.radical.size(); ++j)
        pairs.emplace_back(dec.radical[j], partners[j]);

    // Fill out the rest from the orthogonal complement of what is built;
    // the complement of a sum of hyperbolic planes is again nondegenerate.
    if (2 * pairs.size() < static_cast<std::size_t>(2 * genus)) {
        std::vector<Vector> built;
        for (const auto& [e, f] : pairs) {
            built.push_back(e);
            built.push_back(f);
        }
        auto rest = detail::pairing_null_space(genus, built);
        auto dec2 = symplectic_span_decompose(rest, pair_fn, add_fn);
        if (!dec2.radical.empty())
            throw std::logic_error("complete_symplectic_basis: degenerate complement");
        for (auto& pr : dec2.pairs) pairs.push_back(std::move(pr));
    }

    std::vector<Vector> cols;
    cols.reserve(2 * genus);
    for (const auto& [e, f] : pairs) {
        cols.push_back(e);
        cols.push_back(f);
    }
    return Matrix::from_columns(cols);
}

// Symplectic automorphism A with A v_i = w_i for two pairwise-pairing-one
// families of full size 2g+1. The first 2g members of such a family are
// independent and the last is their sum, so mapping the two span bases to
// a common symplectic normal form and composing is enough; agreement on
// the final vector follows by linearity.
inline Matrix find_symplectic_map(const std::vector<Vector>& vs, const std::vector<Vector>& ws) {
    if (vs.empty() || vs.size() != ws.size())
        throw std::invalid_argument("find_symplectic_map: structure error, sizes differ");
    const int g = vs.front().genus();
    if (vs.size() != static_cast<std::size_t>(2 * g + 1))
        throw std::invalid_argument("find_symplectic_map: structure error, expected 2g+1 vectors");
    auto vv = validate_odd_family(vs);
    auto wv = validate_odd_family(ws);
    if (!vv.valid() || !wv.valid() || ws.front().genus() != g)
        throw std::invalid_argument(
            "find_symplectic_map: structure error, inputs are not odd families");

    std::vector<Vector> v2g(vs.begin(), vs.end() - 1);
    std::vector<Vector> w2g(ws.begin(), ws.end() - 1);
    if (!independent(v2g) || !independent(w2g))
        throw std::invalid_argument(
            "find_symplectic_map: structure error, first 2g vectors are dependent");

    Matrix pv = complete_symplectic_basis(g, v2g);
    Matrix pw = complete_symplectic_basis(g, w2g);
    auto pv_inv = pv.inverse();
    if (!pv_inv) throw std::logic_error("find_symplectic_map: basis matrix not invertible");
    Matrix a = pw.multiply(*pv_inv);

    for (std::size_t i = 0; i < vs.size(); ++i)
        if (a.apply(vs[i]) != ws[i])
            throw std::invalid_argument("find_symplectic_map: structure error, Gram mismatch");
    return a;
}

}  // namespace curvesys::gf2
