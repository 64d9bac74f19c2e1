// Copyright 2026 The muxqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MUXQEC_GF2_H
#define MUXQEC_GF2_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace muxqec {

/// Dense bit vector over GF(2), packed 64 bits per word.
///
/// Bits past `size()` in the final word are always zero, so word-level
/// comparisons and popcounts never need masking.
class BitVector {
   public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters. Whitespace is ignored.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t index);
    static BitVector from_support(std::size_t len, std::span<const std::size_t> support);

    std::size_t size() const { return len_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
    void clear();

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;

    /// Parity of the bitwise AND (the GF(2) inner product).
    bool dot(const BitVector& other) const;
    /// True if every set bit of *this is also set in `other`.
    bool is_subset_of(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    /// Indices of set bits in ascending order.
    std::vector<std::size_t> support() const;
    std::string to_string() const;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

   private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major bit-packed matrix over GF(2).
class BinaryMatrix {
   public:
    using Word = BitVector::Word;

    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);
    static BinaryMatrix from_row_vectors(std::span<const BitVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / BitVector::kWordBits] >> (c % BitVector::kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / BitVector::kWordBits] ^= Word{1} << (c % BitVector::kWordBits);
    }

    std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    /// row[dst] ^= row[src]
    void add_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;
    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    std::vector<std::size_t> row_support(std::size_t r) const;

    bool is_zero() const;
    BinaryMatrix transpose() const;
    /// Matrix-vector product M·v.
    BitVector operator*(const BitVector& v) const;
    /// Matrix product (*this)·other.
    BinaryMatrix operator*(const BinaryMatrix& other) const;
    /// Kronecker product with the row-major convention (A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l].
    BinaryMatrix kron(const BinaryMatrix& other) const;

    static BinaryMatrix hstack(const BinaryMatrix& left, const BinaryMatrix& right);
    static BinaryMatrix vstack(const BinaryMatrix& top, const BinaryMatrix& bottom);

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) = default;

    /// Textual form: a "rows cols" header line, then one 0/1 string per row.
    std::string to_text() const;
    static BinaryMatrix parse_text(std::istream& in);
    static BinaryMatrix parse_text(std::string_view text);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct RowEchelon {
    BinaryMatrix rref;
    std::vector<std::size_t> pivot_cols;
};

std::size_t rank(const BinaryMatrix& m);
RowEchelon row_reduce(const BinaryMatrix& m);

/// Some x with M·x = s, free variables set to zero; nullopt when inconsistent.
std::optional<BitVector> solve(const BinaryMatrix& m, const BitVector& s);

/// Basis of {x : M·x = 0}, one vector per free column of the RREF.
std::vector<BitVector> nullspace_basis(const BinaryMatrix& m);

/// Submatrix made of the given columns, in ascending column order.
BinaryMatrix restrict_columns(const BinaryMatrix& m, std::span<const std::size_t> columns);

/// Incremental row-echelon basis used for span membership tests.
class SpanBasis {
   public:
    explicit SpanBasis(std::size_t len) : len_(len) {}

    /// Reduces `v` against the basis in place; returns true if the residue is nonzero.
    bool reduce(BitVector& v) const;
    /// Adds `v` if it is independent of the current span; returns whether it was added.
    bool insert(BitVector v);
    bool contains(BitVector v) const { return !reduce(v); }
    std::size_t dimension() const { return rows_.size(); }

   private:
    std::size_t len_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace muxqec

#endif  // MUXQEC_GF2_H
