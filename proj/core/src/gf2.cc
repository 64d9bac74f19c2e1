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

#include "muxqec/gf2.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace muxqec {

namespace {

constexpr std::size_t kBits = BitVector::kWordBits;

std::size_t words_for(std::size_t bits) { return (bits + kBits - 1) / kBits; }

void require_same_size(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("BitVector size mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    std::vector<bool> parsed;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            parsed.push_back(c == '1');
        } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '|') {
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
    }
    BitVector v(parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (parsed[i]) v.set(i);
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t index) {
    if (index >= len) throw std::out_of_range("unit vector index out of range");
    BitVector v(len);
    v.set(index);
    return v;
}

BitVector BitVector::from_support(std::size_t len, std::span<const std::size_t> support) {
    BitVector v(len);
    for (std::size_t i : support) {
        if (i >= len) throw std::out_of_range("support index out of range");
        v.set(i);
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    Word bit = Word{1} << (i % kBits);
    if (value) {
        words_[i / kBits] |= bit;
    } else {
        words_[i / kBits] &= ~bit;
    }
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
}

bool BitVector::dot(const BitVector& other) const {
    require_same_size(*this, other);
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

bool BitVector::is_subset_of(const BitVector& other) const {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(w * kBits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
    return from_row_vectors(parsed, parsed.front().size());
}

BinaryMatrix BinaryMatrix::from_row_vectors(std::span<const BitVector> rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        m.set_row(r, rows[r]);
    }
    return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word bit = Word{1} << (c % kBits);
    Word& w = data_[r * stride_ + c / kBits];
    if (value) {
        w |= bit;
    } else {
        w &= ~bit;
    }
}

BitVector BinaryMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BinaryMatrix::add_row(std::size_t src, std::size_t dst) {
    const Word* s = data_.data() + src * stride_;
    Word* d = data_.data() + dst * stride_;
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BinaryMatrix::row_is_zero(std::size_t r) const {
    auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t total = 0;
    for (Word w : row_words(r)) total += std::popcount(w);
    return total;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_; ++r) total += get(r, c);
    return total;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> out;
    auto w = row_words(r);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word bits = w[i];
        while (bits) {
            out.push_back(i * kBits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c : row_support(r)) t.set(c, r);
    }
    return t;
}

BitVector BinaryMatrix::operator*(const BitVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch: " + std::to_string(cols_) + " columns vs length " +
                                    std::to_string(v.size()));
    }
    BitVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        const Word* row = data_.data() + r * stride_;
        Word acc = 0;
        for (std::size_t i = 0; i < stride_; ++i) acc ^= row[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product size mismatch");
    BinaryMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Word* dst = out.data_.data() + r * out.stride_;
        for (std::size_t k : row_support(r)) {
            const Word* src = other.data_.data() + k * other.stride_;
            for (std::size_t i = 0; i < out.stride_; ++i) dst[i] ^= src[i];
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::kron(const BinaryMatrix& other) const {
    BinaryMatrix out(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j : row_support(i)) {
            for (std::size_t k = 0; k < other.rows_; ++k) {
                for (std::size_t l : other.row_support(k)) out.set(i * other.rows_ + k, j * other.cols_ + l);
            }
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::hstack(const BinaryMatrix& left, const BinaryMatrix& right) {
    if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row count mismatch");
    BinaryMatrix out(left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c : left.row_support(r)) out.set(r, c);
        for (std::size_t c : right.row_support(r)) out.set(r, left.cols_ + c);
    }
    return out;
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& top, const BinaryMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column count mismatch");
    BinaryMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

std::string BinaryMatrix::to_text() const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix BinaryMatrix::parse_text(std::istream& in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) throw std::invalid_argument("matrix text: expected 'rows cols' header");
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!(in >> line)) {
            throw std::invalid_argument("matrix text: expected " + std::to_string(rows) + " rows, got " +
                                        std::to_string(r));
        }
        if (line.size() != cols) {
            throw std::invalid_argument("matrix text: row " + std::to_string(r) + " has " +
                                        std::to_string(line.size()) + " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1') {
                m.set(r, c);
            } else if (line[c] != '0') {
                throw std::invalid_argument("matrix text: invalid character in row " + std::to_string(r));
            }
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_text(in);
}

namespace {

// Gauss-Jordan elimination in place; returns pivot columns. When `rhs` is
// non-null its bits are permuted and combined alongside the rows.
std::vector<std::size_t> eliminate(BinaryMatrix& m, BitVector* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < m.rows() && !m.get(found, c)) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(found, pivot_row);
        if (rhs) {
            bool a = rhs->get(found);
            bool b = rhs->get(pivot_row);
            rhs->set(found, b);
            rhs->set(pivot_row, a);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && m.get(r, c)) {
                m.add_row(pivot_row, r);
                if (rhs && rhs->get(pivot_row)) rhs->flip(r);
            }
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BinaryMatrix& m) {
    BinaryMatrix copy = m;
    return eliminate(copy, nullptr).size();
}

RowEchelon row_reduce(const BinaryMatrix& m) {
    RowEchelon out{m, {}};
    out.pivot_cols = eliminate(out.rref, nullptr);
    return out;
}

std::optional<BitVector> solve(const BinaryMatrix& m, const BitVector& s) {
    if (s.size() != m.rows()) {
        throw std::invalid_argument("solve: rhs length " + std::to_string(s.size()) + " != rows " +
                                    std::to_string(m.rows()));
    }
    BinaryMatrix a = m;
    BitVector b = s;
    auto pivots = eliminate(a, &b);
    for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
        if (b.get(r)) return std::nullopt;
    }
    BitVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (b.get(r)) x.set(pivots[r]);
    }
    return x;
}

std::vector<BitVector> nullspace_basis(const BinaryMatrix& m) {
    BinaryMatrix a = m;
    auto pivots = eliminate(a, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (a.get(r, f)) v.set(pivots[r]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BinaryMatrix restrict_columns(const BinaryMatrix& m, std::span<const std::size_t> columns) {
    std::vector<std::size_t> cols(columns.begin(), columns.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (std::size_t c : cols) {
        if (c >= m.cols()) {
            throw std::out_of_range("restrict_columns: column " + std::to_string(c) + " out of range for " +
                                    std::to_string(m.cols()) + " columns");
        }
    }
    BinaryMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (m.get(r, cols[j])) out.set(r, j);
        }
    }
    return out;
}

bool SpanBasis::reduce(BitVector& v) const {
    if (v.size() != len_) throw std::invalid_argument("SpanBasis: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) v ^= rows_[i];
    }
    return v.any();
}

bool SpanBasis::insert(BitVector v) {
    if (!reduce(v)) return false;
    auto words = v.words();
    std::size_t pivot = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w]) {
            pivot = w * kBits + std::countr_zero(words[w]);
            break;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace muxqec
