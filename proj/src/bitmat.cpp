#include "sdc/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

void check_index(const BitMatrix& m, std::size_t r, std::size_t c) {
    if (r >= m.rows() || c >= m.cols()) throw std::out_of_range("BitMatrix index out of range");
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix dimensions must be positive");
    data_.assign(rows_ * stride_, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        pos = end + 1;
    }
    if (lines.empty()) throw std::invalid_argument("BitMatrix::parse: no rows");
    BitMatrix m(lines.size(), lines.front().size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        if (lines[r].size() != m.cols()) throw std::invalid_argument("BitMatrix::parse: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const char ch = lines[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix::parse: expected '0' or '1'");
            if (ch == '1') m.set(r, c, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_grid(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> cells) {
    if (cells.size() != rows * cols) throw std::invalid_argument("BitMatrix::from_grid: size mismatch");
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (cells[r * cols + c] & 1u) m.set(r, c, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    check_index(*this, r, c);
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    check_index(*this, r, c);
    auto& w = data_[r * stride_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    check_index(*this, r, c);
    data_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

std::span<const std::uint64_t> BitMatrix::row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
}

std::span<std::uint64_t> BitMatrix::row(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (auto word : row(r)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    auto s = row(src);
    auto d = row(dst);
    for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto src = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            auto word = src[w];
            while (word) {
                const auto c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                t.data_[c * t.stride_ + r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
                word &= word - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("BitMatrix::block out of range");
    BitMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            if (get(r0 + r, c0 + c)) b.set(r, c, true);
    return b;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& src) {
    if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
        throw std::out_of_range("BitMatrix::set_block out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) set(r0 + r, c0 + c, src.get(r, c));
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_identity() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < stride_; ++w) {
            const std::uint64_t expect =
                (r / kWordBits == w) ? (std::uint64_t{1} << (r % kWordBits)) : std::uint64_t{0};
            if (data_[r * stride_ + w] != expect) return false;
        }
    }
    return true;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("BitMatrix addition: dimension mismatch");
    BitMatrix s = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto d = s.row(r);
        const auto src = b.row(r);
        for (std::size_t w = 0; w < d.size(); ++w) d[w] ^= src[w];
    }
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrix product: dimension mismatch");
    BitMatrix p(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto out = p.row(r);
        const auto lhs = a.row(r);
        for (std::size_t w = 0; w < lhs.size(); ++w) {
            auto word = lhs[w];
            while (word) {
                const auto k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                const auto rhs = b.row(k);
                for (std::size_t j = 0; j < out.size(); ++j) out[j] ^= rhs[j];
                word &= word - 1;
            }
        }
    }
    return p;
}

BitMatrix gram(const BitMatrix& a) { return a * a.transpose(); }

std::size_t rank(const BitMatrix& a) {
    BitMatrix m = a;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank) {
            auto pr = m.row(pivot);
            auto rr = m.row(rank);
            std::swap_ranges(pr.begin(), pr.end(), rr.begin());
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.xor_row_into(rank, r);
        ++rank;
    }
    return rank;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    BitMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

BitMatrix circulant(std::span<const std::uint8_t> first_row) {
    if (first_row.empty()) throw std::invalid_argument("circulant: empty first row");
    const std::size_t m = first_row.size();
    BitMatrix c(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (first_row[(j + m - i) % m] & 1u) c.set(i, j, true);
    return c;
}

}  // namespace sdc
