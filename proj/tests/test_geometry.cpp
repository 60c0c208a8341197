#include <doctest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "polynorm/geometry.hpp"

using namespace polynorm;

namespace {

Point unit(int k) {
    Point p(4, Rational(0));
    if (k > 0) p[k - 1] = Rational(1);
    return p;
}

std::vector<Point> standard_simplex() { return {unit(0), unit(1), unit(2), unit(3), unit(4)}; }

Rational random_rational(std::mt19937_64& rng, int range = 20) {
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    return Rational(num(rng), den(rng));
}

Point random_point(std::mt19937_64& rng, int dim = 4) {
    Point p;
    for (int k = 0; k < dim; ++k) p.push_back(random_rational(rng));
    return p;
}

oracle::Q to_q(const Rational& r) { return r.to_mpq(); }

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("lowest terms with positive denominator") {
        Rational r(6, -4);
        CHECK(r.numerator() == -3);
        CHECK(r.denominator() == 2);
        CHECK(r.to_string() == "-3/2");
        CHECK(Rational(4, 2).to_string() == "2");
        CHECK(Rational::parse("10/-4") == Rational(-5, 2));
        CHECK(Rational::parse("7") == Rational(7));
    }

    TEST_CASE("int64 overflow promotes to exact big rationals") {
        Rational big(std::numeric_limits<std::int64_t>::max());
        Rational sq = big * big;
        CHECK_FALSE(sq.is_small());
        mpq_class ref(mpz_class(std::numeric_limits<std::int64_t>::max()));
        CHECK(sq.to_mpq() == ref * ref);
        CHECK((sq / big) == big);
        CHECK((sq / big).is_small());
    }

    TEST_CASE("arithmetic agrees with mpq on random operands") {
        std::mt19937_64 rng(7);
        for (int it = 0; it < 2000; ++it) {
            std::uniform_int_distribution<std::int64_t> d(-(1LL << 40), 1LL << 40);
            std::int64_t a = d(rng), b = d(rng) | 1, c = d(rng), e = d(rng) | 1;
            Rational x(a, b), y(c, e);
            mpq_class qx(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
            mpq_class qy(mpz_class(std::to_string(c)), mpz_class(std::to_string(e)));
            qx.canonicalize();
            qy.canonicalize();
            CHECK((x + y).to_mpq() == qx + qy);
            CHECK((x - y).to_mpq() == qx - qy);
            CHECK((x * y).to_mpq() == qx * qy);
            if (!y.is_zero()) CHECK((x / y).to_mpq() == qx / qy);
            CHECK((x < y) == (qx < qy));
        }
    }

    TEST_CASE("floor and ceil") {
        CHECK(Rational(7, 2).floor() == 3);
        CHECK(Rational(7, 2).ceil() == 4);
        CHECK(Rational(-7, 2).floor() == -4);
        CHECK(Rational(-7, 2).ceil() == -3);
        CHECK(Rational(4).ceil() == 4);
    }
}

TEST_SUITE("geometry") {
    TEST_CASE("orientation of the standard simplex and its degenerations") {
        auto s = standard_simplex();
        CHECK(orientation(s) == 1);
        std::swap(s[1], s[2]);
        CHECK(orientation(s) == -1);
        auto d = standard_simplex();
        d[3] = d[1];
        CHECK(orientation(d) == 0);
    }

    TEST_CASE("signed volume of the standard simplex is 1/24") {
        auto s = standard_simplex();
        CHECK(signed_volume(s) == Rational(1, 24));
        s[4] = s[0];
        CHECK(signed_volume(s) == Rational(0));
    }

    TEST_CASE("dimension mismatch is rejected") {
        auto s = standard_simplex();
        s[2].pop_back();
        CHECK_THROWS_AS(orientation(s), DimensionError);
        CHECK_THROWS_AS(signed_volume(s), DimensionError);
        std::vector<Point> three(s.begin(), s.begin() + 3);
        CHECK_THROWS_AS(affine_span_dim(three), DimensionError);
    }

    TEST_CASE("determinant matches cofactor expansion") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 200; ++it) {
            Matrix m(4, std::vector<Rational>(4));
            oracle::QMat q(4, oracle::QVec(4));
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    m[r][c] = random_rational(rng, 6);
                    q[r][c] = to_q(m[r][c]);
                }
            if (it % 5 == 0) {
                m[3] = m[1];
                q[3] = q[1];
            }
            CHECK(determinant(m).to_mpq() == oracle::det(q));
        }
    }

    TEST_CASE("polygon area") {
        std::vector<Point> square{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
        CHECK(polygon_area(square) == Rational(1));
        std::vector<Point> tri{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        CHECK(polygon_area(tri) == Rational(1, 2));
        std::vector<Point> cw(square.rbegin(), square.rend());
        CHECK_THROWS(polygon_area(cw));
        std::vector<Point> two(square.begin(), square.begin() + 2);
        CHECK_THROWS(polygon_area(two));
        std::vector<Point> dent = square;
        dent.insert(dent.begin() + 1, Point{Rational(1, 2), Rational(1, 2)});
        CHECK_THROWS(polygon_area(dent));
    }

    TEST_CASE("area of the circle-int hexagon matches a hand shoelace") {
        std::vector<Point> hex;
        for (const auto& q : oracle::circle_polygon(6)) hex.push_back({Rational(q[0]), Rational(q[1])});
        oracle::Q expected = oracle::shoelace(oracle::circle_polygon(6));
        CHECK(expected > 0);
        CHECK(polygon_area(hex).to_mpq() == expected);
        // t = -5,-3,-1,1,3,5 gives this exact value.
        CHECK(polygon_area(hex) == Rational(1184, 845));
    }

    TEST_CASE("affine span dimension") {
        std::vector<Point> one{unit(1)};
        CHECK(affine_span_dim(one) == 0);
        std::vector<Point> two{unit(1), unit(2)};
        CHECK(affine_span_dim(two) == 1);
        std::vector<Point> dup{unit(1), unit(1)};
        CHECK(affine_span_dim(dup) == 0);
        CHECK(affine_span_dim(standard_simplex()) == 4);
    }

    TEST_CASE("property: orientation is alternating under every transposition") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 200; ++it) {
            std::vector<Point> p;
            for (int k = 0; k < 5; ++k) p.push_back(random_point(rng));
            int o = orientation(p);
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) {
                    auto q = p;
                    std::swap(q[a], q[b]);
                    CHECK(orientation(q) == -o);
                }
        }
    }

    TEST_CASE("property: signed volume is translation invariant") {
        std::mt19937_64 rng(5);
        for (int it = 0; it < 300; ++it) {
            std::vector<Point> p;
            for (int k = 0; k < 5; ++k) p.push_back(random_point(rng));
            Point t = random_point(rng);
            std::vector<Point> q;
            for (const auto& x : p) q.push_back(x + t);
            CHECK(signed_volume(p) == signed_volume(q));
            CHECK(orientation(p) == signed_volume(p).sign());
        }
    }

    TEST_CASE("property: full affine span iff some 5-subset is oriented") {
        std::mt19937_64 rng(9);
        for (int it = 0; it < 100; ++it) {
            // Points on a random 3-plane when it is odd, generic otherwise.
            std::vector<Point> p;
            for (int k = 0; k < 6; ++k) {
                Point x = random_point(rng);
                if (it % 2) x[3] = x[0] + x[1];
                p.push_back(x);
            }
            bool any = false;
            for (int skip = 0; skip < 6; ++skip) {
                std::vector<Point> q;
                for (int k = 0; k < 6; ++k)
                    if (k != skip) q.push_back(p[k]);
                any = any || orientation(q) != 0;
            }
            CHECK((affine_span_dim(p) == 4) == any);
        }
    }

    TEST_CASE("orientation cache is safe under concurrent use") {
        OrientationCache cache;
        std::vector<std::thread> pool;
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&cache, t] {
                for (int k = 0; k < 200; ++k) {
                    std::array<int, 3> key{k, k + 1, k + 2};
                    int v = cache.get(key, [k] { return k % 3 - 1; });
                    (void)t;
                    if (v != k % 3 - 1) throw std::logic_error("cache returned a wrong value");
                }
            });
        for (auto& th : pool) th.join();
        CHECK(cache.size() == 200);
    }
}
