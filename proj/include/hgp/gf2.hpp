#pragma once

// Dense GF(2) linear algebra on bit-packed rows. All arithmetic is mod 2.
// Matrices may have zero rows or columns; indices are 0-based throughout.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hgp {

class BitMatrix;

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(int length);

    static BitVector unit(int length, int index);
    static BitVector from_indices(int length, std::span<const int> ones);

    int size() const { return length_; }
    bool get(int i) const;
    void set(int i, bool value);
    void flip(int i);

    int weight() const;
    bool is_zero() const;
    bool dot(const BitVector& other) const;  // parity of the bitwise AND

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const BitVector&) const = default;

    std::vector<int> ones() const;
    std::span<const uint64_t> words() const { return words_; }

  private:
    friend class BitMatrix;

    int length_ = 0;
    std::vector<uint64_t> words_;  // trailing bits beyond length_ stay zero
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    // Test/fixture convenience: rows of 0/1 entries.
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    BitVector row(int r) const;
    void set_row(int r, const BitVector& v);
    void xor_row(int dst, int src);  // row[dst] ^= row[src]
    void swap_rows(int a, int b);
    int row_weight(int r) const;

    BitMatrix transposed() const;
    BitVector multiply(const BitVector& v) const;      // m·v, length rows()
    BitMatrix multiply(const BitMatrix& other) const;  // GF(2) matrix product

    // (a⊗b)[(i1·rows(b)+i2)][(j1·cols(b)+j2)] = a[i1][j1]·b[i2][j2]
    static BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

    bool is_zero() const;
    bool operator==(const BitMatrix&) const = default;

  private:
    uint64_t* row_words(int r) { return data_.data() + static_cast<size_t>(r) * words_per_row_; }
    const uint64_t* row_words(int r) const {
        return data_.data() + static_cast<size_t>(r) * words_per_row_;
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

struct RrefResult {
    BitMatrix matrix;         // reduced row echelon form, row space preserved
    std::vector<int> pivots;  // strictly increasing pivot columns
};

int rank(const BitMatrix& m);
RrefResult rref(const BitMatrix& m);

// Free-variable kernel basis: one vector per non-pivot column f of rref(m),
// with a 1 at f, 0 at every other non-pivot column, and pivot entries
// back-solved. Ordered by ascending free column.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Some x with m·x = v, or nullopt when v is outside the column space of m.
// The witness sets all free variables to zero.
std::optional<BitVector> solve_in_image(const BitMatrix& m, const BitVector& v);

// Membership of v in the row space described by a precomputed RREF.
bool in_row_space(const RrefResult& reduced, const BitVector& v);

// Incremental reduced GF(2) basis, used for rank/independence bookkeeping.
class GaussianBasis {
  public:
    // Returns false (and leaves the basis unchanged) when v is dependent.
    bool insert(BitVector v);
    int size() const { return static_cast<int>(rows_.size()); }

  private:
    std::map<int, BitVector> rows_;  // leading column -> row
};

// Representatives from ker(a) that are independent modulo the row space of b.
std::vector<BitVector> quotient_kernel_basis(const BitMatrix& a, const BitMatrix& b);

// Minimum weight over the 2^|basis| - 1 nonzero combinations; nullopt for an
// empty basis. The basis must be linearly independent.
std::optional<int> min_weight_in_span(std::span<const BitVector> basis);

}  // namespace hgp
