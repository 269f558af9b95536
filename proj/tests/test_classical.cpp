#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmeas/classical.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/sampling.hpp"

#include <cmath>

using namespace qmeas;

namespace {

const Vec kZero{cplx(1, 0), cplx(0, 0)};
const Vec kOne{cplx(0, 0), cplx(1, 0)};
const Vec kPlus{cplx(0.7071067811865476, 0), cplx(0.7071067811865476, 0)};
const Vec kMinus{cplx(0.7071067811865476, 0), cplx(-0.7071067811865476, 0)};

ClassicalMeasure half_half(const Vec& a, const Vec& b) {
    return ClassicalMeasure({{RayPoint(a), 0.5}, {RayPoint(b), 0.5}});
}

} // namespace

TEST_CASE("haar sampling: reproducible and unbiased") {
    {
        Rng r1(42), r2(42);
        const RayPoint p1 = sample_haar_ray(3, r1);
        const RayPoint p2 = sample_haar_ray(3, r2);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(p1.vector()[i] == p2.vector()[i]);
    }

    const int n = 100000;
    Rng rng(4242);
    double bx = 0.0, by = 0.0, bz = 0.0;
    Matrix mean(2, 2);
    for (int i = 0; i < n; ++i) {
        const RayPoint p = sample_haar_ray(2, rng);
        const Matrix pr = p.projector();
        mean += pr;
        bx += 2.0 * pr(0, 1).real();
        by += -2.0 * pr(0, 1).imag();
        bz += (pr(0, 0) - pr(1, 1)).real();
    }
    const double bloch_norm =
        std::sqrt(bx * bx + by * by + bz * bz) / n;
    CHECK(bloch_norm <= 4.0 / std::sqrt(static_cast<double>(n)));
    mean *= cplx(1.0 / n, 0.0);
    mean -= Matrix::identity(2) * 0.5;
    CHECK(mean.max_abs() <= 0.01);
}

TEST_CASE("mb_reduce on point masses and mixtures") {
    Rng rng(7);
    const RayPoint p = sample_haar_ray(3, rng);
    const ClassicalMeasure point({{p, 1.0}});
    CHECK((mb_reduce(point).op() - p.projector()).max_abs() <= 1e-12);

    const State rz = mb_reduce(half_half(kZero, kOne));
    const State rx = mb_reduce(half_half(kPlus, kMinus));
    CHECK((rz.op() - Matrix::identity(2) * 0.5).max_abs() <= 1e-15);
    CHECK((rx.op() - Matrix::identity(2) * 0.5).max_abs() <= 1e-15);
    // same state from different preparations
    CHECK((rz.op() - rx.op()).max_abs() <= 1e-15);
}

TEST_CASE("mb_reduce is affine") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double lam = rng.uniform();
        const RayPoint a = sample_haar_ray(3, rng);
        const RayPoint b = sample_haar_ray(3, rng);
        const RayPoint c = sample_haar_ray(3, rng);
        const ClassicalMeasure mu1({{a, 0.3}, {b, 0.7}});
        const ClassicalMeasure mu2({{c, 1.0}});
        const ClassicalMeasure blend(
            {{a, lam * 0.3}, {b, lam * 0.7}, {c, 1.0 - lam}});
        Matrix expect = mb_reduce(mu1).op() * lam;
        expect.add_scaled(cplx(1.0 - lam, 0.0), mb_reduce(mu2).op());
        CHECK((mb_reduce(blend).op() - expect).max_abs() <= 1e-12);
    }
}

TEST_CASE("classical effect functions are genuinely fuzzy") {
    const ClassicalEffectFn f{Effect(outer(kZero, kZero))};
    CHECK(f(RayPoint(kPlus)) == doctest::Approx(0.5));
    CHECK(f(RayPoint(kZero)) == doctest::Approx(1.0));
    CHECK(f(RayPoint(kOne)) == doctest::Approx(0.0));
    CHECK(classical_effect_eval(f, RayPoint(kPlus)) == doctest::Approx(0.5));
}

TEST_CASE("coexistence symmetry f_P'(P) = f_P(P')") {
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + rng.index(3);
        const RayPoint p = sample_haar_ray(dim, rng);
        const RayPoint q = sample_haar_ray(dim, rng);
        const ClassicalEffectFn fq{Effect(q.projector())};
        const ClassicalEffectFn fp{Effect(p.projector())};
        CHECK(std::abs(fq(p) - fp(q)) <= 1e-12);
    }
}

TEST_CASE("vanishing overlap only for orthogonal rays") {
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = 2 + rng.index(3);
        const RayPoint p = sample_haar_ray(dim, rng);
        const RayPoint q = sample_haar_ray(dim, rng);
        const double overlap = ray_overlap_geometry(p, q).overlap;
        if (overlap < 1e-12)
            CHECK(std::abs(dot(p.vector(), q.vector())) <= 1e-6);
    }
}

TEST_CASE("mc consistency: point mass is exact for any sample count") {
    Rng rng(19);
    const RayPoint p = sample_haar_ray(2, rng);
    const ClassicalMeasure mu({{p, 1.0}});
    const Effect e = random_effect(2, rng);
    const auto res = mb_consistency_mc(mu, e, 10, rng);
    CHECK(res.mc_estimate == doctest::Approx(res.exact).epsilon(1e-12));
    CHECK(res.std_error == doctest::Approx(0.0));
}

TEST_CASE("two preparations of I/2 are indistinguishable exactly") {
    Rng rng(23);
    const ClassicalMeasure mu_z = half_half(kZero, kOne);
    const ClassicalMeasure mu_x = half_half(kPlus, kMinus);
    for (int trial = 0; trial < 100; ++trial) {
        const Effect e = random_effect(2, rng);
        const double ez =
            trace_product_hermitian(mb_reduce(mu_z).op(), e.op()).real();
        const double ex =
            trace_product_hermitian(mb_reduce(mu_x).op(), e.op()).real();
        CHECK(std::abs(ez - ex) <= 1e-12);
    }
}

TEST_CASE("mc estimates land within 4 standard errors at n = 1e5") {
    Rng rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ClassicalMeasure::Atom> atoms;
        double wsum = 0.0;
        const std::size_t n_atoms = 3 + rng.index(4);
        for (std::size_t i = 0; i < n_atoms; ++i) {
            atoms.push_back({sample_haar_ray(3, rng), 0.1 + rng.uniform()});
            wsum += atoms.back().weight;
        }
        for (auto& a : atoms) a.weight /= wsum;
        const ClassicalMeasure mu(atoms);
        const Effect e = random_effect(3, rng);
        const auto res = mb_consistency_mc(mu, e, 100000, rng);
        CHECK(std::abs(res.mc_estimate - res.exact) <=
              4.0 * res.std_error + 1e-12);
    }
}

TEST_CASE("ray geometry identity") {
    Rng rng(31);
    const RayPoint p = sample_haar_ray(2, rng);
    auto g = ray_overlap_geometry(p, p);
    CHECK(g.overlap == doctest::Approx(1.0));
    CHECK(g.opnorm_dist <= 1e-7);

    g = ray_overlap_geometry(RayPoint(kZero), RayPoint(kOne));
    CHECK(g.overlap == doctest::Approx(0.0));
    CHECK(g.opnorm_dist == doctest::Approx(1.0));

    // Bloch angle pi/3: overlap cos^2(pi/6) = 3/4, distance 1/2
    const double theta = 1.0471975511965977462; // pi/3
    Vec tilted{cplx(std::cos(theta / 2), 0), cplx(std::sin(theta / 2), 0)};
    g = ray_overlap_geometry(RayPoint(kZero), RayPoint(tilted));
    CHECK(g.overlap == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(g.opnorm_dist == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(g.identity_residual <= 1e-10);
}

TEST_CASE("ray geometry identity across dims 2-6") {
    Rng rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + rng.index(5);
        const RayPoint p = sample_haar_ray(dim, rng);
        const RayPoint q = sample_haar_ray(dim, rng);
        CHECK(ray_overlap_geometry(p, q).identity_residual <= 1e-10);
    }
}

TEST_CASE("measure validation") {
    Rng rng(41);
    const RayPoint p = sample_haar_ray(2, rng);
    CHECK_THROWS_AS(ClassicalMeasure({{p, 0.6}}), ValidationError);
    CHECK_THROWS_AS(ClassicalMeasure({{p, 1.5}, {p, -0.5}}), ValidationError);
    CHECK_THROWS_AS(sample_haar_ray(1, rng), ValidationError);
}
