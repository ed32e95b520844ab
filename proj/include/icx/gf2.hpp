#ifndef ICX_GF2_HPP
#define ICX_GF2_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "icx/errors.hpp"

namespace icx::gf2 {

using BigInt = boost::multiprecision::cpp_int;

// Hard limit on matrix width; enumeration problems at the scale this
// library targets stay far below it.
int max_cols();
void set_max_cols(int cols);

// Dense matrix over GF(2). Rows are packed into 64-bit words, bit c of a
// row is column c. Addition is XOR, all arithmetic mod 2. Immutable by
// convention once built (mutators exist for construction and elimination).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    static Gf2Matrix identity(int n);
    // Rows given as bitmasks, bit j = column j. Requires cols <= 64.
    static Gf2Matrix from_row_masks(const std::vector<std::uint64_t>& rows, int cols);
    // Rows written as strings of 0/1, leftmost character = column 0,
    // separated by any whitespace. "110 011" is {x1+x2, x2+x3} for n=3.
    static Gf2Matrix parse(const std::string& text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    std::uint64_t row_mask(int r) const;  // requires cols <= 64
    Gf2Matrix row(int r) const;           // 1 x cols copy
    bool row_is_zero(int r) const;
    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(int a, int b);
    void xor_row(int dst, int src);                              // row dst ^= row src
    void xor_row_from(int dst, const Gf2Matrix& other, int src); // row dst ^= other row src

    Gf2Matrix transposed() const;
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;
    Gf2Matrix operator^(const Gf2Matrix& rhs) const;  // entrywise sum (XOR)
    bool operator==(const Gf2Matrix& rhs) const;
    bool operator<(const Gf2Matrix& rhs) const;  // shape, then row words; total order

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;  // words per row
    std::vector<std::uint64_t> w_;

    const std::uint64_t* row_ptr(int r) const { return w_.data() + static_cast<std::size_t>(r) * wpr_; }
    std::uint64_t* row_ptr(int r) { return w_.data() + static_cast<std::size_t>(r) * wpr_; }
    void check(int r, int c) const;
};

// A row space in canonical form: reduced row echelon, no zero rows,
// pivot columns strictly increasing. Equal spaces have bit-identical canon.
struct RowSpace {
    int dim = 0;
    Gf2Matrix canon;

    bool operator==(const RowSpace& rhs) const { return dim == rhs.dim && canon == rhs.canon; }
    bool operator<(const RowSpace& rhs) const { return canon < rhs.canon; }
};

int rank(const Gf2Matrix& m);
RowSpace rref(const Gf2Matrix& m);

// Is v (1 x cols) in the row space of m?
bool in_row_space(const Gf2Matrix& m, const Gf2Matrix& v);

// All solutions of a constrained affine system, represented as one
// particular solution plus a basis of the homogeneous part. Every member
// is particular ^ (some subset of the basis); there are 2^dim members.
struct AffineSolutionSet {
    Gf2Matrix particular;
    std::vector<Gf2Matrix> homogeneous_basis;

    int dim() const { return static_cast<int>(homogeneous_basis.size()); }
    BigInt count() const { return BigInt(1) << dim(); }
    // Member by index, bit b of idx selects homogeneous_basis[b]. Requires dim <= 63.
    Gf2Matrix member(std::uint64_t idx) const;
};

// All T (n x a.rows) with T*a = I_n and T zero wherever zero_pattern has a 1.
// a must have full column rank n. Throws NoSolution if the constraints are
// inconsistent, ShapeError on shape mismatch.
AffineSolutionSet solve_constrained_left_inverses(const Gf2Matrix& a, const Gf2Matrix& zero_pattern);

// Number of unordered bases of a c-dimensional GF(2) space:
// (1/c!) * prod_{i=0}^{c-1} (2^c - 2^i). Exact.
BigInt count_bases(int c);

// Stream every unordered basis of the space, each exactly once, as a
// (dim x cols) matrix. Vectors are ordered by the integer value of their
// coordinates in the canon basis (little endian) and subsets come out in
// lexicographic order, so the stream is deterministic. Throws CapExceeded
// if count_bases(dim) > cap.
void enumerate_bases(const RowSpace& space, const BigInt& cap,
                     const std::function<void(const Gf2Matrix&)>& emit);

}  // namespace icx::gf2

#endif
