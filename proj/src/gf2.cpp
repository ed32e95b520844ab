#include "icx/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace icx::gf2 {

namespace {
std::atomic<int> g_max_cols{1024};
}

int max_cols() { return g_max_cols.load(); }

void set_max_cols(int cols) {
    if (cols < 1) throw ShapeError("max_cols must be positive");
    g_max_cols.store(cols);
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    if (cols > max_cols()) throw ShapeError("matrix wider than configured column cap");
    wpr_ = (cols + 63) / 64;
    if (wpr_ == 0) wpr_ = 1;
    w_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
}

Gf2Matrix Gf2Matrix::identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_row_masks(const std::vector<std::uint64_t>& rows, int cols) {
    if (cols > 64) throw ShapeError("row masks only cover 64 columns");
    Gf2Matrix m(static_cast<int>(rows.size()), cols);
    const std::uint64_t valid = cols == 64 ? ~0ull : ((1ull << cols) - 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] & ~valid) throw ShapeError("row mask has bits beyond cols");
        m.row_ptr(static_cast<int>(r))[0] = rows[r];
    }
    return m;
}

Gf2Matrix Gf2Matrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> rows;
    std::string tok;
    while (in >> tok) rows.push_back(tok);
    if (rows.empty()) return Gf2Matrix(0, 0);
    const int cols = static_cast<int>(rows[0].size());
    Gf2Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw ParseError("ragged matrix literal");
        for (int c = 0; c < cols; ++c) {
            if (rows[r][c] == '1')
                m.set(static_cast<int>(r), c, true);
            else if (rows[r][c] != '0')
                throw ParseError("matrix literal must be 0/1");
        }
    }
    return m;
}

void Gf2Matrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexError("matrix index out of range");
}

bool Gf2Matrix::get(int r, int c) const {
    check(r, c);
    return (row_ptr(r)[c >> 6] >> (c & 63)) & 1;
}

void Gf2Matrix::set(int r, int c, bool v) {
    check(r, c);
    std::uint64_t& word = row_ptr(r)[c >> 6];
    const std::uint64_t bit = 1ull << (c & 63);
    if (v)
        word |= bit;
    else
        word &= ~bit;
}

std::uint64_t Gf2Matrix::row_mask(int r) const {
    if (cols_ > 64) throw ShapeError("row_mask needs cols <= 64");
    if (r < 0 || r >= rows_) throw IndexError("row out of range");
    return row_ptr(r)[0];
}

bool Gf2Matrix::row_is_zero(int r) const {
    if (r < 0 || r >= rows_) throw IndexError("row out of range");
    const std::uint64_t* p = row_ptr(r);
    for (int i = 0; i < wpr_; ++i)
        if (p[i]) return false;
    return true;
}

Gf2Matrix Gf2Matrix::row(int r) const {
    if (r < 0 || r >= rows_) throw IndexError("row out of range");
    Gf2Matrix out(1, cols_);
    out.xor_row_from(0, *this, r);
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (const std::uint64_t w : w_)
        if (w) return false;
    return true;
}

bool Gf2Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

void Gf2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
}

void Gf2Matrix::xor_row(int dst, int src) {
    const std::uint64_t* s = row_ptr(src);
    std::uint64_t* d = row_ptr(dst);
    for (int i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void Gf2Matrix::xor_row_from(int dst, const Gf2Matrix& other, int src) {
    if (other.cols_ != cols_) throw ShapeError("xor_row_from column mismatch");
    const std::uint64_t* s = other.row_ptr(src);
    std::uint64_t* d = row_ptr(dst);
    for (int i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    Gf2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        const std::uint64_t* row = row_ptr(r);
        for (int k = 0; k < cols_; ++k)
            if ((row[k >> 6] >> (k & 63)) & 1) out.xor_row_from(r, rhs, k);
    }
    return out;
}

Gf2Matrix Gf2Matrix::operator^(const Gf2Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
    Gf2Matrix out = *this;
    for (std::size_t i = 0; i < out.w_.size(); ++i) out.w_[i] ^= rhs.w_[i];
    return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && w_ == rhs.w_;
}

bool Gf2Matrix::operator<(const Gf2Matrix& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
    return w_ < rhs.w_;
}

std::string Gf2Matrix::to_string() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        if (r + 1 < rows_) out.push_back('\n');
    }
    return out;
}

namespace {

// In-place elimination; returns rank. When reduce is set the result is the
// reduced echelon form (leftmost pivot, topmost row, eliminated above too).
int eliminate(Gf2Matrix& m, bool reduce) {
    int rk = 0;
    for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
        int piv = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (m.get(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(rk, piv);
        for (int r = reduce ? 0 : rk + 1; r < m.rows(); ++r)
            if (r != rk && m.get(r, col)) m.xor_row(r, rk);
        ++rk;
    }
    return rk;
}

}  // namespace

int rank(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    return eliminate(work, false);
}

RowSpace rref(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    const int rk = eliminate(work, true);
    Gf2Matrix canon(rk, m.cols());
    for (int r = 0; r < rk; ++r) canon.xor_row_from(r, work, r);
    return RowSpace{rk, std::move(canon)};
}

bool in_row_space(const Gf2Matrix& m, const Gf2Matrix& v) {
    if (v.rows() != 1 || v.cols() != m.cols()) throw ShapeError("in_row_space expects a row vector");
    Gf2Matrix aug(m.rows() + 1, m.cols());
    for (int r = 0; r < m.rows(); ++r) aug.xor_row_from(r, m, r);
    aug.xor_row_from(m.rows(), v, 0);
    return rank(aug) == rank(m);
}

Gf2Matrix AffineSolutionSet::member(std::uint64_t idx) const {
    if (dim() > 63) throw CapExceeded("solution set too large to index with 64 bits");
    if (dim() < 64 && idx >= (1ull << dim())) throw IndexError("member index out of range");
    Gf2Matrix out = particular;
    for (int b = 0; b < dim(); ++b)
        if ((idx >> b) & 1) out = out ^ homogeneous_basis[b];
    return out;
}

AffineSolutionSet solve_constrained_left_inverses(const Gf2Matrix& a, const Gf2Matrix& zero_pattern) {
    const int n = a.cols();
    const int big = a.rows();
    if (zero_pattern.rows() != n || zero_pattern.cols() != big)
        throw ShapeError("zero_pattern must be shaped like T (a.cols x a.rows)");

    AffineSolutionSet out;
    out.particular = Gf2Matrix(n, big);

    // Row i of T is independent of the others: solve t * a = e_i over the
    // positions the pattern leaves free.
    for (int i = 0; i < n; ++i) {
        std::vector<int> free_pos;
        for (int j = 0; j < big; ++j)
            if (!zero_pattern.get(i, j)) free_pos.push_back(j);
        const int m = static_cast<int>(free_pos.size());

        // System S x = b with S[k][jj] = a[free_pos[jj]][k], b = e_i.
        Gf2Matrix sys(n, m + 1);
        for (int k = 0; k < n; ++k) {
            for (int jj = 0; jj < m; ++jj)
                if (a.get(free_pos[jj], k)) sys.set(k, jj, true);
            if (k == i) sys.set(k, m, true);
        }

        const int rk = eliminate(sys, true);
        std::vector<int> pivot_col(rk, -1);
        std::vector<int> col_pivot_row(m, -1);
        for (int r = 0; r < rk; ++r) {
            for (int c = 0; c <= m; ++c)
                if (sys.get(r, c)) {
                    pivot_col[r] = c;
                    break;
                }
            if (pivot_col[r] == m) throw NoSolution("constraints inconsistent with T*a = I");
            col_pivot_row[pivot_col[r]] = r;
        }

        // Particular solution: free variables zero.
        for (int r = 0; r < rk; ++r)
            if (sys.get(r, m)) out.particular.set(i, free_pos[pivot_col[r]], true);

        // One homogeneous basis vector per non-pivot column.
        for (int c = 0; c < m; ++c) {
            if (col_pivot_row[c] >= 0) continue;
            Gf2Matrix h(n, big);
            h.set(i, free_pos[c], true);
            for (int r = 0; r < rk; ++r)
                if (sys.get(r, c)) h.set(i, free_pos[pivot_col[r]], true);
            out.homogeneous_basis.push_back(std::move(h));
        }
    }
    return out;
}

BigInt count_bases(int c) {
    if (c < 0) throw ShapeError("negative dimension");
    BigInt prod = 1;
    const BigInt full = BigInt(1) << c;
    for (int i = 0; i < c; ++i) prod *= full - (BigInt(1) << i);
    BigInt fact = 1;
    for (int i = 2; i <= c; ++i) fact *= i;
    return prod / fact;
}

void enumerate_bases(const RowSpace& space, const BigInt& cap,
                     const std::function<void(const Gf2Matrix&)>& emit) {
    const int c = space.dim;
    if (c < 1) throw ShapeError("enumerate_bases needs dim >= 1");
    if (count_bases(c) > cap) throw CapExceeded("basis enumeration above cap");
    if (c > 62) throw CapExceeded("space dimension too large to enumerate");

    // Work in coordinates: vector <-> c-bit integer of its coefficients in
    // the canon basis. A subset of coordinate vectors is independent iff the
    // corresponding space vectors are.
    const std::uint64_t top = 1ull << c;
    std::vector<std::uint64_t> chosen;          // coordinate vectors, increasing
    std::vector<std::uint64_t> basis_echelon;   // xor-basis, one pivot bit each

    std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
        if (static_cast<int>(chosen.size()) == c) {
            Gf2Matrix basis(c, space.canon.cols());
            for (int r = 0; r < c; ++r)
                for (int j = 0; j < c; ++j)
                    if ((chosen[r] >> j) & 1) basis.xor_row_from(r, space.canon, j);
            emit(basis);
            return;
        }
        const int remaining = c - static_cast<int>(chosen.size());
        for (std::uint64_t v = start; v + static_cast<std::uint64_t>(remaining) <= top; ++v) {
            std::uint64_t red = v;
            for (const std::uint64_t b : basis_echelon) {
                const std::uint64_t low = b & ~(b - 1);
                if (red & low) red ^= b;
            }
            if (red == 0) continue;
            basis_echelon.push_back(red);
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
            basis_echelon.pop_back();
        }
    };
    rec(1);
}

}  // namespace icx::gf2
