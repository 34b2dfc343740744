#include "liecoh/smith.hpp"

#include <stdexcept>

namespace liecoh {

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const
{
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

namespace {

struct Worker {
    IntegerMatrix m;
    IntegerMatrix u, uin, v; // row ops tracked on u (and its inverse), col ops on v
    SnfTransforms track;

    explicit Worker(IntegerMatrix mm, SnfTransforms t) : m(std::move(mm)), track(t)
    {
        if (track != SnfTransforms::None) {
            u = IntegerMatrix::identity(m.rows);
            uin = IntegerMatrix::identity(m.rows);
        }
        if (track == SnfTransforms::Both) v = IntegerMatrix::identity(m.cols);
    }
    bool left() const { return track != SnfTransforms::None; }
    bool right() const { return track == SnfTransforms::Both; }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        if (left()) {
            for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
            for (std::size_t r = 0; r < uin.rows; ++r) std::swap(uin.at(r, i), uin.at(r, j));
        }
    }
    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        if (right())
            for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c)
    {
        if (c == 0) return;
        for (std::size_t k = 0; k < m.cols; ++k) m.at(i, k) += c * m.at(j, k);
        if (left()) {
            for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) += c * u.at(j, k);
            // inverse picks up the inverse column operation
            for (std::size_t k = 0; k < uin.rows; ++k) uin.at(k, j) -= c * uin.at(k, i);
        }
    }
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Int& c)
    {
        if (c == 0) return;
        for (std::size_t k = 0; k < m.rows; ++k) m.at(k, i) += c * m.at(k, j);
        if (right())
            for (std::size_t k = 0; k < v.rows; ++k) v.at(k, i) += c * v.at(k, j);
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t k = 0; k < m.cols; ++k) m.at(i, k) = -m.at(i, k);
        if (left()) {
            for (std::size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
            for (std::size_t k = 0; k < uin.rows; ++k) uin.at(k, i) = -uin.at(k, i);
        }
    }
};

} // namespace

SNFResult smith_normal_form(IntegerMatrix input, bool with_transforms)
{
    return smith_normal_form(std::move(input), with_transforms ? SnfTransforms::Both : SnfTransforms::None);
}

SNFResult smith_normal_form(IntegerMatrix input, SnfTransforms track)
{
    Worker w(std::move(input), track);
    IntegerMatrix& m = w.m;
    const std::size_t R = m.rows, C = m.cols;
    std::size_t t = 0;

    while (t < R && t < C) {
        // smallest nonzero pivot in the trailing block keeps growth down
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < R && !(found && best == 1); ++i)
            for (std::size_t j = t; j < C; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                Int ax = x < 0 ? Int(-x) : x;
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                w.add_row(i, t, -q);
                if (m.at(i, t) != 0) { // remainder smaller than pivot: promote it
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                w.add_col(j, t, -q);
                if (m.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (m.at(t, t) < 0) w.negate_row(t);

        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (std::size_t i = t + 1; i < R && !redo; ++i)
            for (std::size_t j = t + 1; j < C && !redo; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    w.add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }

    SNFResult out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(m.at(i, i));
    if (w.left()) {
        out.left = std::move(w.u);
        out.left_inv = std::move(w.uin);
    }
    if (w.right()) out.right = std::move(w.v);
    return out;
}

void verify_snf(const IntegerMatrix& original, const SNFResult& s)
{
    if (!s.left || !s.right) throw std::logic_error("verify_snf: transforms not tracked");
    IntegerMatrix prod = (*s.left) * original * (*s.right);
    for (std::size_t i = 0; i < prod.rows; ++i)
        for (std::size_t j = 0; j < prod.cols; ++j) {
            Int expect = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Int(0);
            if (prod.at(i, j) != expect) throw std::logic_error("verify_snf: product mismatch");
        }
    for (std::size_t i = 1; i < s.diagonal.size(); ++i)
        if (s.diagonal[i] % s.diagonal[i - 1] != 0) throw std::logic_error("verify_snf: divisibility chain broken");
}

std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& A, const std::vector<Int>& b)
{
    if (b.size() != A.rows) throw std::invalid_argument("solve_integer: rhs size");
    SNFResult s = smith_normal_form(A, true);
    const IntegerMatrix& U = *s.left;
    const IntegerMatrix& V = *s.right;

    std::vector<Int> ub(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.rows; ++k)
            if (U.at(i, k) != 0) ub[i] += U.at(i, k) * b[k];

    std::vector<Int> y(A.cols, 0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        if (i < s.rank) {
            if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diagonal[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(A.cols, 0);
    for (std::size_t i = 0; i < A.cols; ++i)
        for (std::size_t k = 0; k < A.cols; ++k)
            if (V.at(i, k) != 0 && y[k] != 0) x[i] += V.at(i, k) * y[k];
    return x;
}

} // namespace liecoh
