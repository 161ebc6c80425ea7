#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "colleague/rng.hpp"
#include "colleague/rotations.hpp"

using namespace colleague;

namespace {

constexpr double u = 0x1p-53;

double abs2(Complex a, Complex b) { return std::sqrt(std::norm(a) + std::norm(b)); }

// dense 2x2 of the rotation, written independently of the apply() kernels
struct Q2 {
    Complex m[2][2];
    explicit Q2(const PlaneRotation& r) {
        m[0][0] = r.c;
        m[0][1] = -r.s;
        m[1][0] = std::conj(r.s);
        m[1][1] = std::conj(r.c);
    }
    std::pair<Complex, Complex> mul(Complex x1, Complex x2) const {
        return {m[0][0] * x1 + m[0][1] * x2, m[1][0] * x1 + m[1][1] * x2};
    }
    Q2 conj_entrywise() const {
        Q2 out = *this;
        for (auto& row : out.m)
            for (auto& z : row) z = std::conj(z);
        return out;
    }
};

}  // namespace

TEST_CASE("real 3-4-5 example") {
    // eliminating (x1, x2) = (3, 4): h = 5 exactly, c = 4/5, s = 3/5
    PlaneRotation r = eliminating_rotation(3.0, 4.0);
    CHECK(r.c == Complex(0.8, 0.0));
    CHECK(r.s == Complex(0.6, 0.0));
    auto [y1, y2] = apply(r, Complex(3.0), Complex(4.0));
    CHECK(std::abs(y1) <= 16 * u * 5);
    CHECK(y2.real() == doctest::Approx(5.0).epsilon(8 * u));
    CHECK(y2.imag() == 0.0);

    // the length always lands in the second slot, with nonnegative real part
    PlaneRotation r2 = eliminating_rotation(-4.0, 3.0);
    auto [z1, z2] = apply(r2, Complex(-4.0), Complex(3.0));
    CHECK(std::abs(z1) <= 16 * u * 5);
    CHECK(z2.real() == doctest::Approx(5.0).epsilon(8 * u));
}

TEST_CASE("zero input yields the identity") {
    PlaneRotation r = eliminating_rotation(0.0, 0.0);
    CHECK(r.c == Complex(1.0, 0.0));
    CHECK(r.s == Complex(0.0, 0.0));
}

TEST_CASE("computed rotations are unitary to a few ulps") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Complex x1(rng.normal(), rng.normal());
        Complex x2(rng.normal(), rng.normal());
        // exercise wildly lopsided scales; the scaled hypot must not over/underflow
        x1 *= std::exp2(80.0 * (rng.uniform() - 0.5));
        PlaneRotation r = eliminating_rotation(x1, x2);
        // |c|^2 + |s|^2 = 1 is the whole unitarity condition for this shape
        CHECK(std::abs(std::norm(r.c) + std::norm(r.s) - 1.0) <= 16 * u);
    }
}

TEST_CASE("application annihilates, preserves length, and is undone by the adjoint") {
    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        Complex x1(rng.normal(), rng.normal());
        Complex x2(rng.normal(), rng.normal());
        double nrm = abs2(x1, x2);
        PlaneRotation r = eliminating_rotation(x1, x2);

        auto [y1, y2] = apply(r, x1, x2);
        CHECK(std::abs(y1) <= 16 * u * nrm);
        CHECK(std::abs(abs2(y1, y2) - nrm) <= 16 * u * nrm);
        CHECK(y2.real() >= 0.0);
        CHECK(std::abs(y2.imag()) <= 16 * u * nrm);

        // Q^* equals the rotation (conj c, -s); applying it must restore x
        PlaneRotation adj{std::conj(r.c), -r.s};
        auto [w1, w2] = apply(adj, y1, y2);
        CHECK(std::abs(w1 - x1) <= 32 * u * nrm);
        CHECK(std::abs(w2 - x2) <= 32 * u * nrm);
    }
}

TEST_CASE("apply kernels agree with the dense 2x2 forms") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        PlaneRotation r = eliminating_rotation(Complex(rng.normal(), rng.normal()),
                                               Complex(rng.normal(), rng.normal()));
        Complex x1(rng.normal(), rng.normal()), x2(rng.normal(), rng.normal());
        Q2 q(r);

        auto [a1, a2] = apply(r, x1, x2);
        auto [b1, b2] = q.mul(x1, x2);
        CHECK(std::abs(a1 - b1) <= 8 * u * abs2(x1, x2));
        CHECK(std::abs(a2 - b2) <= 8 * u * abs2(x1, x2));

        // apply_conjugate is the entrywise-conjugated matrix: the operation
        // that right-multiplication by Q^* performs on a pair of columns
        auto [c1, c2] = apply_conjugate(r, x1, x2);
        auto [d1, d2] = q.conj_entrywise().mul(x1, x2);
        CHECK(std::abs(c1 - d1) <= 8 * u * abs2(x1, x2));
        CHECK(std::abs(c2 - d2) <= 8 * u * abs2(x1, x2));
    }
}
