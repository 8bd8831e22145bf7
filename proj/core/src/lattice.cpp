#include "tbcalc/lattice.hpp"

#include <algorithm>
#include <utility>

#include "tbcalc/error.hpp"

namespace tbcalc {
namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Smallest nonzero |entry| in the trailing block W[t.., t..], first in
// row-major scan order on ties.
std::optional<Position> smallest_nonzero(const IntegerMatrix& w, std::size_t t) {
    std::optional<Position> best;
    for (std::size_t i = t; i < w.rows(); ++i)
        for (std::size_t j = t; j < w.cols(); ++j) {
            if (w(i, j) == 0) continue;
            if (!best || cmpabs(w(i, j), w(best->row, best->col)) < 0) best = Position{i, j};
        }
    return best;
}

// Smallest nonzero |entry| restricted to column t and row t of the block.
Position smallest_in_cross(const IntegerMatrix& w, std::size_t t) {
    Position best{t, t};
    for (std::size_t i = t; i < w.rows(); ++i)
        if (w(i, t) != 0 && (w(best.row, best.col) == 0 || cmpabs(w(i, t), w(best.row, best.col)) < 0))
            best = {i, t};
    for (std::size_t j = t + 1; j < w.cols(); ++j)
        if (w(t, j) != 0 && (w(best.row, best.col) == 0 || cmpabs(w(t, j), w(best.row, best.col)) < 0))
            best = {t, j};
    return best;
}

void check_length(const IntegerMatrix& c, const IntegerVector& b, const char* what) {
    if (b.size() != c.rows())
        throw InputError(std::string(what) + ": vector length " + std::to_string(b.size()) +
                         " does not match matrix rows " + std::to_string(c.rows()));
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix w = m;
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    IntegerMatrix v = IntegerMatrix::identity(m.cols());
    const std::size_t diag = std::min(m.rows(), m.cols());
    std::size_t rank = 0;

    for (std::size_t t = 0; t < diag; ++t) {
        auto start = smallest_nonzero(w, t);
        if (!start) break;
        w.swap_rows(t, start->row);
        u.swap_rows(t, start->row);
        w.swap_cols(t, start->col);
        v.swap_cols(t, start->col);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < w.rows(); ++i) {
                if (w(i, t) == 0) continue;
                Integer q = w(i, t) / w(t, t);
                u.add_row_multiple(i, t, -q);
                w.add_row_multiple(i, t, -q);
                if (w(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < w.cols(); ++j) {
                if (w(t, j) == 0) continue;
                Integer q = w(t, j) / w(t, t);
                v.add_col_multiple(j, t, -q);
                w.add_col_multiple(j, t, -q);
                if (w(t, j) != 0) clean = false;
            }
            if (!clean) {
                Position p = smallest_in_cross(w, t);
                w.swap_rows(t, p.row);
                u.swap_rows(t, p.row);
                w.swap_cols(t, p.col);
                v.swap_cols(t, p.col);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row so the
            // next column sweep leaves a smaller remainder.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < w.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < w.cols(); ++j)
                    if (!mpz_divisible_p(w(i, j).get_mpz_t(), w(t, t).get_mpz_t())) {
                        offending = i;
                        break;
                    }
            if (!offending) break;
            w.add_row_multiple(t, *offending, 1);
            u.add_row_multiple(t, *offending, 1);
        }
        ++rank;
    }

    for (std::size_t t = 0; t < rank; ++t)
        if (w(t, t) < 0) {
            w.negate_row(t);
            u.negate_row(t);
        }

    return {std::move(u), std::move(v), std::move(w), rank};
}

std::optional<IntegerVector> solve_integer(const IntegerMatrix& c, const IntegerVector& b) {
    check_length(c, b, "solve_integer");
    const SmithDecomposition snf = smith_normal_form(c);
    const IntegerVector transformed = snf.U * b;

    IntegerVector y(c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        if (i < snf.rank) {
            const Integer& s = snf.D(i, i);
            if (!mpz_divisible_p(transformed[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
            y[i] = transformed[i] / s;
        } else if (transformed[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

std::vector<IntegerVector> kernel_basis(const IntegerMatrix& c) {
    const SmithDecomposition snf = smith_normal_form(c);
    std::vector<IntegerVector> basis;
    for (std::size_t j = snf.rank; j < c.cols(); ++j) basis.push_back(snf.V.col(j));
    return basis;
}

std::optional<OrderCertificate> minimal_order(const IntegerMatrix& c, const IntegerVector& a) {
    check_length(c, a, "minimal_order");
    const SmithDecomposition snf = smith_normal_form(c);
    const IntegerVector transformed = snf.U * a;

    for (std::size_t i = snf.rank; i < c.rows(); ++i)
        if (transformed[i] != 0) return std::nullopt;

    Integer order = 1;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        const Integer& s = snf.D(i, i);
        Integer g = gcd(s, transformed[i]);
        order = lcm(order, Integer(s / g));
    }

    IntegerVector y(c.cols());
    for (std::size_t i = 0; i < snf.rank; ++i) y[i] = order * transformed[i] / snf.D(i, i);
    return OrderCertificate{order, snf.V * y};
}

std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
    const SmithDecomposition snf = smith_normal_form(m);
    std::vector<Integer> factors(m.rows());
    const std::size_t diag = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < diag; ++i) factors[i] = snf.D(i, i);
    return factors;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix w = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

}  // namespace tbcalc
