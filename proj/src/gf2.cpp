#include "hgp/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace hgp {

namespace {

constexpr int kWordBits = 64;

int word_count(int length) { return (length + kWordBits - 1) / kWordBits; }

uint64_t tail_mask(int length) {
    const int rem = length % kWordBits;
    return rem == 0 ? ~0ull : ((1ull << rem) - 1);
}

}  // namespace

BitVector::BitVector(int length) : length_(length), words_(word_count(length), 0) {
    if (length < 0) throw std::invalid_argument("BitVector length must be non-negative");
}

BitVector BitVector::unit(int length, int index) {
    BitVector v(length);
    v.set(index, true);
    return v;
}

BitVector BitVector::from_indices(int length, std::span<const int> ones) {
    BitVector v(length);
    for (int i : ones) v.set(i, true);
    return v;
}

bool BitVector::get(int i) const {
    if (i < 0 || i >= length_) throw std::out_of_range("BitVector index");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(int i, bool value) {
    if (i < 0 || i >= length_) throw std::out_of_range("BitVector index");
    const uint64_t bit = 1ull << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= bit;
    else
        words_[i / kWordBits] &= ~bit;
}

void BitVector::flip(int i) {
    if (i < 0 || i >= length_) throw std::out_of_range("BitVector index");
    words_[i / kWordBits] ^= 1ull << (i % kWordBits);
}

int BitVector::weight() const {
    int w = 0;
    for (uint64_t word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::is_zero() const {
    for (uint64_t word : words_)
        if (word != 0) return false;
    return true;
}

bool BitVector::dot(const BitVector& other) const {
    if (length_ != other.length_) throw std::invalid_argument("BitVector::dot length mismatch");
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (length_ != other.length_) throw std::invalid_argument("BitVector::^= length mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::vector<int> BitVector::ones() const {
    std::vector<int> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        uint64_t word = words_[w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            out.push_back(static_cast<int>(w) * kWordBits + bit);
            word &= word - 1;
        }
    }
    return out;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(word_count(cols)),
      data_(static_cast<size_t>(rows) * words_per_row_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix dimensions must be non-negative");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    BitMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("BitMatrix::from_rows ragged rows");
        int j = 0;
        for (int bit : row) {
            if (bit != 0 && bit != 1) throw std::invalid_argument("BitMatrix::from_rows entries must be 0/1");
            m.set(i, j, bit != 0);
            ++j;
        }
        ++i;
    }
    return m;
}

bool BitMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("BitMatrix index");
    return (row_words(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(int r, int c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("BitMatrix index");
    const uint64_t bit = 1ull << (c % kWordBits);
    if (value)
        row_words(r)[c / kWordBits] |= bit;
    else
        row_words(r)[c / kWordBits] &= ~bit;
}

BitVector BitMatrix::row(int r) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("BitMatrix row index");
    BitVector v(cols_);
    const uint64_t* src = row_words(r);
    for (int w = 0; w < words_per_row_; ++w) v.words_[w] = src[w];
    return v;
}

void BitMatrix::set_row(int r, const BitVector& v) {
    if (r < 0 || r >= rows_) throw std::out_of_range("BitMatrix row index");
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row length mismatch");
    uint64_t* dst = row_words(r);
    for (int w = 0; w < words_per_row_; ++w) dst[w] = v.words_[w];
}

void BitMatrix::xor_row(int dst, int src) {
    uint64_t* d = row_words(dst);
    const uint64_t* s = row_words(src);
    for (int w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* pa = row_words(a);
    uint64_t* pb = row_words(b);
    for (int w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
}

int BitMatrix::row_weight(int r) const {
    const uint64_t* p = row_words(r);
    int weight = 0;
    for (int w = 0; w < words_per_row_; ++w) weight += std::popcount(p[w]);
    return weight;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_words(r);
        for (int w = 0; w < words_per_row_; ++w) {
            uint64_t word = p[w];
            while (word != 0) {
                const int c = w * kWordBits + std::countr_zero(word);
                out.set(c, r, true);
                word &= word - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::multiply length mismatch");
    BitVector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_words(r);
        uint64_t acc = 0;
        for (int w = 0; w < words_per_row_; ++w) acc ^= p[w] & v.words_[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("BitMatrix::multiply shape mismatch");
    BitMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_words(r);
        for (int w = 0; w < words_per_row_; ++w) {
            uint64_t word = p[w];
            while (word != 0) {
                const int j = w * kWordBits + std::countr_zero(word);
                uint64_t* dst = out.row_words(r);
                const uint64_t* src = other.row_words(j);
                for (int ww = 0; ww < other.words_per_row_; ++ww) dst[ww] ^= src[ww];
                word &= word - 1;
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i1 = 0; i1 < a.rows_; ++i1) {
        for (int j1 = 0; j1 < a.cols_; ++j1) {
            if (!a.get(i1, j1)) continue;
            for (int i2 = 0; i2 < b.rows_; ++i2) {
                const uint64_t* src = b.row_words(i2);
                for (int w = 0; w < b.words_per_row_; ++w) {
                    uint64_t word = src[w];
                    while (word != 0) {
                        const int j2 = w * kWordBits + std::countr_zero(word);
                        out.set(i1 * b.rows_ + i2, j1 * b.cols_ + j2, true);
                        word &= word - 1;
                    }
                }
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("BitMatrix::hconcat row mismatch");
    BitMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        uint64_t* dst = out.row_words(r);
        const uint64_t* src = a.row_words(r);
        for (int w = 0; w < a.words_per_row_; ++w) dst[w] = src[w];
        const uint64_t* sb = b.row_words(r);
        for (int w = 0; w < b.words_per_row_; ++w) {
            uint64_t word = sb[w];
            while (word != 0) {
                const int c = w * kWordBits + std::countr_zero(word);
                out.set(r, a.cols_ + c, true);
                word &= word - 1;
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("BitMatrix::vstack column mismatch");
    BitMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) out.set_row(r, a.row(r));
    for (int r = 0; r < b.rows_; ++r) out.set_row(a.rows_ + r, b.row(r));
    return out;
}

bool BitMatrix::is_zero() const {
    for (uint64_t word : data_)
        if (word != 0) return false;
    return true;
}

int rank(const BitMatrix& m) {
    BitMatrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (a.get(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        a.swap_rows(sel, r);
        for (int i = r + 1; i < a.rows(); ++i)
            if (a.get(i, c)) a.xor_row(i, r);
        ++r;
    }
    return r;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult out{m, {}};
    BitMatrix& a = out.matrix;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (a.get(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        a.swap_rows(sel, r);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c)) a.xor_row(i, r);
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const RrefResult reduced = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : reduced.pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f, true);
        for (size_t p = 0; p < reduced.pivots.size(); ++p)
            if (reduced.matrix.get(static_cast<int>(p), f)) v.set(reduced.pivots[p], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve_in_image(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("solve_in_image: v length must equal rows");
    BitMatrix a = m;
    BitVector rhs = v;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (a.get(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        a.swap_rows(sel, r);
        if (sel != r) {
            const bool tmp = rhs.get(sel);
            rhs.set(sel, rhs.get(r));
            rhs.set(r, tmp);
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i != r && a.get(i, c)) {
                a.xor_row(i, r);
                if (rhs.get(r)) rhs.flip(i);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < a.rows(); ++i)
        if (rhs.get(i)) return std::nullopt;

    BitVector x(m.cols());
    for (int i = 0; i < r; ++i)
        if (rhs.get(i)) x.set(pivots[i], true);
    return x;
}

bool in_row_space(const RrefResult& reduced, const BitVector& v) {
    if (v.size() != reduced.matrix.cols())
        throw std::invalid_argument("in_row_space: length mismatch");
    BitVector residue = v;
    for (size_t p = 0; p < reduced.pivots.size(); ++p)
        if (residue.get(reduced.pivots[p])) residue ^= reduced.matrix.row(static_cast<int>(p));
    return residue.is_zero();
}

bool GaussianBasis::insert(BitVector v) {
    for (;;) {
        int lead = -1;
        for (size_t w = 0; w < v.words().size(); ++w) {
            if (v.words()[w] != 0) {
                lead = static_cast<int>(w) * kWordBits + std::countr_zero(v.words()[w]);
                break;
            }
        }
        if (lead < 0) return false;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            rows_.emplace(lead, std::move(v));
            return true;
        }
        v ^= it->second;
    }
}

std::vector<BitVector> quotient_kernel_basis(const BitMatrix& a, const BitMatrix& b) {
    GaussianBasis state;
    for (int r = 0; r < b.rows(); ++r) state.insert(b.row(r));
    std::vector<BitVector> out;
    for (const BitVector& v : kernel_basis(a))
        if (state.insert(v)) out.push_back(v);
    return out;
}

std::optional<int> min_weight_in_span(std::span<const BitVector> basis) {
    if (basis.empty()) return std::nullopt;
    const int dim = static_cast<int>(basis.size());
    if (dim > 30) throw std::invalid_argument("min_weight_in_span: span too large to enumerate");
    BitVector v(basis[0].size());
    int best = basis[0].size() + 1;
    const uint64_t total = 1ull << dim;
    for (uint64_t i = 1; i < total; ++i) {
        v ^= basis[std::countr_zero(i)];
        const int w = v.weight();
        if (w < best) best = w;
    }
    return best;
}

}  // namespace hgp
