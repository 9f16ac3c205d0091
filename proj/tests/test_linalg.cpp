#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lochom;

namespace {

ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -2, int hi = 2) {
    std::vector<std::vector<long long>> r(rows, std::vector<long long>(cols));
    for (auto& row : r)
        for (auto& x : row) x = lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return ExactMatrix::from_integers(r);
}

/// Random matrix of rank at most r (product of rows x r and r x cols).
ExactMatrix low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

TEST_CASE("matrix storage is bounds checked") {
    ExactMatrix m(2, 3);
    m.set(1, 2, Rational(5, 3));
    CHECK(m.at(1, 2) == Rational(5, 3));
    CHECK(m.at(0, 0) == 0);
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.set(0, 3, Rational(1)), std::out_of_range);
    m.set(1, 2, Rational(0));
    CHECK(m.is_zero());
    CHECK(ExactMatrix::identity(3).transpose() == ExactMatrix::identity(3));
}

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix(4, 7)) == 0);
    CHECK(rank(ExactMatrix(0, 0)) == 0);

    // first row all ones, then minus identity
    for (std::size_t d = 1; d <= 6; ++d) {
        ExactMatrix m(d + 1, d);
        for (std::size_t j = 0; j < d; ++j) {
            m.set(0, j, Rational(1));
            m.set(j + 1, j, Rational(-1));
        }
        CHECK(rank(m) == d);
    }

    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = trial % 2 ? random_matrix(rng, 6, 6) : low_rank(rng, 6, 6, 1 + rng.below(5));
        const auto dense = oracle::to_dense(m);
        const auto r = rank(m);
        CHECK(r == oracle::dense_rank(dense));
        if (trial < 20) CHECK(r == oracle::minor_rank(dense));
    }
}

TEST_CASE("rank properties") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rows = 1 + rng.below(8), inner = 1 + rng.below(8), cols = 1 + rng.below(8);
        const auto a = random_matrix(rng, rows, inner);
        const auto b = low_rank(rng, inner, cols, 1 + rng.below(4));
        CHECK(rank(a) == rank(a.transpose()));
        CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
        const auto p = rank_mod_p(a);
        CHECK(p <= rank(a));
        CHECK(p == rank(a));
        CHECK(rank(a, LinalgOptions{true}) == rank(a));
    }
}

TEST_CASE("modular rank can drop and the fast path falls back") {
    // det = p, so the matrix is singular mod p but invertible over Q.
    const auto p = static_cast<long long>(kMersennePrime31);
    const auto m = ExactMatrix::from_integers({{p, 0}, {0, 1}});
    CHECK(rank_mod_p(m) == 1);
    CHECK(rank(m) == 2);
    CHECK(rank(m, LinalgOptions{true}) == 2);
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(ExactMatrix::identity(4)).empty());

    const auto k = kernel_basis(ExactMatrix::from_integers({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);

    // boundary of the circle a-b-c-a: edges ab, ac, bc
    const auto d1 = ExactMatrix::from_integers({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    const auto z = kernel_basis(d1);
    REQUIRE(z.size() == 1);
    CHECK(is_zero(d1.apply(z[0])));

    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = low_rank(rng, 1 + rng.below(6), 1 + rng.below(7), 1 + rng.below(3));
        const auto prof = rank_profile(m);
        CHECK(prof.rank + prof.nullity == m.cols());
        CHECK(prof.kernel_basis.size() == prof.nullity);
        for (const auto& v : prof.kernel_basis) CHECK(is_zero(m.apply(v)));
        oracle::Matrix kb;
        for (const auto& v : prof.kernel_basis) kb.push_back(v);
        CHECK(oracle::dense_rank(kb) == prof.nullity);
    }
}

TEST_CASE("solve_in_image") {
    const RationalVector b{Rational(3), Rational(-1, 2), Rational(7)};
    const auto x = solve_in_image(ExactMatrix::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve_in_image(ExactMatrix(3, 2), b));
    CHECK_THROWS_AS(solve_in_image(ExactMatrix(2, 2), b), std::invalid_argument);

    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = 1 + rng.below(7), cols = 1 + rng.below(7);
        const auto m = low_rank(rng, rows, cols, 1 + rng.below(3));
        RationalVector x0(cols);
        for (auto& v : x0) v = Rational(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3)));
        const auto rhs = m.apply(x0);
        const auto sol = solve_in_image(m, rhs);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == rhs);
    }
}

TEST_CASE("column space tracks combinations") {
    ColumnSpace space;
    CHECK(space.add(to_sparse({Rational(1), Rational(2), Rational(0)})));
    CHECK(space.add(to_sparse({Rational(0), Rational(1), Rational(1)})));
    CHECK_FALSE(space.add(to_sparse({Rational(2), Rational(5), Rational(1)})));
    CHECK(space.rank() == 2);
    CHECK(space.generator_count() == 3);
    const auto c = space.express(to_sparse({Rational(1), Rational(3), Rational(1)}));
    REQUIRE(c);
    CHECK_FALSE(space.in_span(to_sparse({Rational(0), Rational(0), Rational(1)})));
}
