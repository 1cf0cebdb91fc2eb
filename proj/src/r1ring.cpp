#include "sdc/r1ring.hpp"

#include <cctype>
#include <stdexcept>

namespace sdc {

std::string to_token(R1Element x) {
    if (x.b) return x.a ? "u+1" : "u";
    return x.a ? "1" : "0";
}

R1Element parse_token(std::string_view token) {
    std::string t;
    for (char ch : token)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t == "0") return R1Element::zero();
    if (t == "1") return R1Element::one();
    if (t == "u") return R1Element::u();
    if (t == "u+1" || t == "1+u") return R1Element::one_plus_u();
    throw std::invalid_argument("invalid R1 token '" + std::string(token) + "'");
}

std::string format_vector(std::span<const R1Element> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += to_token(v[i]);
    }
    out.push_back(')');
    return out;
}

R1Vector parse_vector(std::string_view text) {
    std::size_t lo = 0;
    std::size_t hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    if (lo < hi && text[lo] == '(') {
        if (text[hi - 1] != ')') throw std::invalid_argument("unbalanced parentheses in R1 vector");
        ++lo;
        --hi;
    }
    const auto body = text.substr(lo, hi - lo);
    R1Vector out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        const auto tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        try {
            out.push_back(parse_token(tok));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("invalid R1 token '" + std::string(tok) + "' at position " +
                                        std::to_string(out.size() + 1));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

int lee_weight(std::span<const R1Element> v) {
    int w = 0;
    for (auto x : v) w += lee_weight(x);
    return w;
}

Bits gray_map(std::span<const R1Element> v) {
    const auto n = v.size();
    Bits out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = v[i].b;
        out[n + i] = v[i].a ^ v[i].b;
    }
    return out;
}

Bits project(std::span<const R1Element> v) {
    Bits out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].a;
    return out;
}

R1Vector embed(std::span<const std::uint8_t> v) {
    R1Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = {static_cast<std::uint8_t>(v[i] & 1u), 0};
    return out;
}

R1Matrix::R1Matrix(std::size_t rows, std::size_t cols) : a_(rows, cols), b_(rows, cols) {}

R1Matrix::R1Matrix(BitMatrix a_plane, BitMatrix b_plane) : a_(std::move(a_plane)), b_(std::move(b_plane)) {
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
        throw std::invalid_argument("R1Matrix: plane dimensions disagree");
}

R1Matrix R1Matrix::identity(std::size_t n) { return {BitMatrix::identity(n), BitMatrix(n, n)}; }

R1Matrix R1Matrix::from_grid(std::size_t rows, std::size_t cols, std::span<const R1Element> cells) {
    if (cells.size() != rows * cols) throw std::invalid_argument("R1Matrix::from_grid: size mismatch");
    R1Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, cells[r * cols + c]);
    return m;
}

R1Element R1Matrix::get(std::size_t r, std::size_t c) const {
    return {static_cast<std::uint8_t>(a_.get(r, c)), static_cast<std::uint8_t>(b_.get(r, c))};
}

void R1Matrix::set(std::size_t r, std::size_t c, R1Element x) {
    a_.set(r, c, x.a);
    b_.set(r, c, x.b);
}

R1Vector R1Matrix::row(std::size_t r) const {
    R1Vector out(cols());
    for (std::size_t c = 0; c < cols(); ++c) out[c] = get(r, c);
    return out;
}

R1Matrix R1Matrix::transpose() const { return {a_.transpose(), b_.transpose()}; }

R1Matrix R1Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    return {a_.block(r0, c0, nrows, ncols), b_.block(r0, c0, nrows, ncols)};
}

R1Matrix operator+(const R1Matrix& x, const R1Matrix& y) {
    return {x.a_plane() + y.a_plane(), x.b_plane() + y.b_plane()};
}

R1Matrix operator*(const R1Matrix& x, const R1Matrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("R1Matrix product: dimension mismatch");
    return {x.a_plane() * y.a_plane(), x.a_plane() * y.b_plane() + x.b_plane() * y.a_plane()};
}

R1Matrix gram(const R1Matrix& x) { return x * x.transpose(); }

R1Matrix hconcat(const R1Matrix& x, const R1Matrix& y) {
    return {hconcat(x.a_plane(), y.a_plane()), hconcat(x.b_plane(), y.b_plane())};
}

BitMatrix gray_image_generator(const R1Matrix& gen) {
    const auto k = gen.rows();
    const auto n = gen.cols();
    BitMatrix out(2 * k, 2 * n);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const bool a = gen.a_plane().get(r, c);
            const bool b = gen.b_plane().get(r, c);
            // phi(g) = (b, a + b); u*g has planes (0, a) so phi(u g) = (a, a).
            if (b) out.set(r, c, true);
            if (a != b) out.set(r, n + c, true);
            if (a) {
                out.set(k + r, c, true);
                out.set(k + r, n + c, true);
            }
        }
    }
    return out;
}

BitMatrix gray_standard_form(const R1Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("gray_standard_form: matrix must be square");
    const auto n = m.rows();
    const BitMatrix sum = m.a_plane() + m.b_plane();
    BitMatrix out(2 * n, 2 * n);
    out.set_block(0, 0, sum);
    out.set_block(0, n, m.b_plane());
    out.set_block(n, 0, m.b_plane());
    out.set_block(n, n, sum);
    return out;
}

std::vector<std::size_t> gray_standard_permutation(std::size_t n) {
    std::vector<std::size_t> perm(4 * n);
    for (std::size_t p = 0; p < n; ++p) {
        perm[p] = p;                  // b, information half
        perm[n + p] = 2 * n + p;      // a+b, information half
        perm[2 * n + p] = n + p;      // b, redundancy half
        perm[3 * n + p] = 3 * n + p;  // a+b, redundancy half
    }
    return perm;
}

}  // namespace sdc
