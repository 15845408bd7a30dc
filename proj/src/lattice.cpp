#include "weyl/lattice.hpp"

#include "weyl/error.hpp"

#include <algorithm>
#include <numeric>

namespace weyl {

bool LatticePoint::is_zero() const noexcept
{
    return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other)
{
    if (other.coords.size() != coords.size())
        throw DimensionMismatch("lattice points of different rank");
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] += other.coords[i];
    return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other)
{
    if (other.coords.size() != coords.size())
        throw DimensionMismatch("lattice points of different rank");
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] -= other.coords[i];
    return *this;
}

LatticePoint LatticePoint::operator-() const { return scaled(-1); }

LatticePoint LatticePoint::scaled(long factor) const
{
    LatticePoint r = *this;
    for (auto& c : r.coords)
        c *= factor;
    return r;
}

namespace {

bool has_full_column_rank(const std::vector<RationalVector>& columns, std::size_t n)
{
    std::size_t r = columns.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(r));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = columns[j][i];
    std::size_t row = 0;
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0)
            ++p;
        if (p == n)
            return false;
        std::swap(m[p], m[row]);
        for (std::size_t i = row + 1; i < n; ++i) {
            if (m[i][col] == 0)
                continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < r; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return true;
}

} // namespace

Lattice::Lattice(std::vector<RationalVector> generators, std::size_t dim)
    : dim_(dim), generators_(std::move(generators))
{
    for (const auto& g : generators_)
        if (g.size() != dim_)
            throw DimensionMismatch("generator has " + std::to_string(g.size()) + " entries, expected " +
                                    std::to_string(dim_));
    if (generators_.size() > dim_)
        throw DependentGenerators("more generators than the ambient dimension");
    if (!has_full_column_rank(generators_, dim_))
        throw DependentGenerators("lattice generators are linearly dependent");
}

Lattice Lattice::integers(std::size_t n)
{
    std::vector<RationalVector> gens(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        gens[i][i] = 1;
    return Lattice(std::move(gens), n);
}

Lattice Lattice::generated_by(const std::vector<RationalVector>& vectors, std::size_t dim)
{
    Integer lcm = 1;
    for (const auto& v : vectors) {
        if (v.size() != dim)
            throw DimensionMismatch("vector has wrong ambient dimension");
        for (const auto& x : v)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& v : vectors) {
        std::vector<Integer> row;
        for (const auto& x : v) {
            Rational s = x * lcm;
            row.push_back(s.get_num());
        }
        rows.push_back(std::move(row));
    }
    std::vector<RationalVector> gens;
    for (const auto& row : hermite_normal_form(std::move(rows))) {
        RationalVector g;
        for (const auto& x : row) {
            Rational q(x, lcm);
            q.canonicalize();
            g.push_back(q);
        }
        gens.push_back(std::move(g));
    }
    return Lattice(std::move(gens), dim);
}

LatticePoint Lattice::basis(std::size_t i) const
{
    LatticePoint p = zero();
    p.coords.at(i) = 1;
    return p;
}

RationalVector Lattice::ambient(const LatticePoint& p) const
{
    if (p.rank() != rank())
        throw DimensionMismatch("lattice point rank " + std::to_string(p.rank()) + " vs lattice rank " +
                                std::to_string(rank()));
    RationalVector v(dim_, Rational(0));
    for (std::size_t j = 0; j < rank(); ++j) {
        if (p.coords[j] == 0)
            continue;
        for (std::size_t i = 0; i < dim_; ++i)
            v[i] += generators_[j][i] * p.coords[j];
    }
    return v;
}

std::optional<LatticePoint> Lattice::membership(const RationalVector& v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch("vector has " + std::to_string(v.size()) + " entries, lattice lives in dimension " +
                                std::to_string(dim_));
    // Solve G x = v exactly: G has full column rank, so the rational solution is unique.
    std::size_t r = rank();
    std::vector<std::vector<Rational>> aug(dim_, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            aug[i][j] = generators_[j][i];
        aug[i][r] = v[i];
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t p = row;
        while (p < dim_ && aug[p][col] == 0)
            ++p;
        std::swap(aug[p], aug[row]);
        Rational inv = 1 / aug[row][col];
        for (auto& x : aug[row])
            x *= inv;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            Rational f = aug[i][col];
            for (std::size_t j = 0; j <= r; ++j)
                aug[i][j] -= f * aug[row][j];
        }
        ++row;
    }
    for (std::size_t i = r; i < dim_; ++i)
        if (aug[i][r] != 0)
            return std::nullopt;
    LatticePoint x{std::vector<long>(r, 0)};
    for (std::size_t j = 0; j < r; ++j) {
        const Rational& c = aug[j][r];
        if (!is_integer(c) || !c.get_num().fits_slong_p())
            return std::nullopt;
        x.coords[j] = c.get_num().get_si();
    }
    return x;
}

LatticeRef make_lattice(Lattice lattice) { return std::make_shared<const Lattice>(std::move(lattice)); }

bool same_lattice(const LatticeRef& a, const LatticeRef& b) { return a == b || (a && b && *a == *b); }

std::optional<LatticePoint> lattice_membership(const RationalVector& v, const Lattice& lattice)
{
    return lattice.membership(v);
}

bool nondegenerate(const Lattice& lattice) { return lattice.nondegenerate(); }

Rational inner(const RationalVector& beta, const Direction& d)
{
    if (beta.size() != d.coeffs.size())
        throw DimensionMismatch("inner product of vectors of different dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        s += beta[i] * d.coeffs[i];
    return s;
}

Scalar inner(const Lattice& lattice, const LatticePoint& beta, const Direction& d)
{
    return Scalar(inner(lattice.ambient(beta), d));
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows)
{
    if (rows.empty())
        return rows;
    std::size_t cols = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        // Euclid on column `col` across rows pivot_row..end until one nonzero entry remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = pivot_row; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == rows.size())
                break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[pivot_row][j];
                if (rows[i][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[pivot_row][col] == 0)
            continue;
        if (rows[pivot_row][col] < 0)
            for (auto& x : rows[pivot_row])
                x = -x;
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

} // namespace weyl
