#include "helpers.hpp"

#include "mpeda/geometry.hpp"

#include <gtest/gtest.h>

#include <limits>

namespace mpeda {
namespace {

using testing::num;
using testing::reference_ellipse;
using testing::reference_step;

template <class T>
class GeometryTest : public ::testing::Test {};

using Arithmetics = ::testing::Types<double, Rational>;
TYPED_TEST_SUITE(GeometryTest, Arithmetics);

template <Scalar T>
DecisionState<T> state_at(const EllipseSpec<T>& ellipse, const GridStep<T>& step, std::string_view x,
                          std::string_view y, std::string_view p, Region region) {
    // Recover lattice indices from the coordinates.
    T i = num<T>(x) / step.h();
    T j = (ellipse.b() - num<T>(y)) / step.h();
    auto to_index = [](const T& v) {
        if constexpr (std::same_as<T, double>) {
            return static_cast<std::int64_t>(std::llround(v));
        } else {
            return boost::multiprecision::numerator(v).template convert_to<std::int64_t>();
        }
    };
    return {GridPoint<T>::at(ellipse, step, to_index(i), to_index(j)), region, num<T>(p)};
}

template <Scalar T>
void expect_value(const T& got, std::string_view want, double tol = 1e-9) {
    EXPECT_TRUE(testing::close(got, want, tol)) << format_number(got) << " vs " << want;
}

TYPED_TEST(GeometryTest, EvalImplicitExamples) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    expect_value<T>(eval_implicit(ellipse, T(0), T(6)), "0");
    expect_value<T>(eval_implicit(ellipse, T(0), T(0)), "-2304");
    expect_value<T>(eval_implicit(ellipse, T(7), T(3)), "36");  // 36*49 + 64*9 - 2304
}

TYPED_TEST(GeometryTest, InitialP1MatchesPublishedFirstRows) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    expect_value<T>(initial_p1(ellipse, reference_step<T>("1")).p, "-332");
    expect_value<T>(initial_p1(ellipse, reference_step<T>("0.5")).p, "-179");
    expect_value<T>(initial_p1(ellipse, reference_step<T>("0.1")).p, "-37.88");

    auto s = initial_p1(ellipse, reference_step<T>("0.5"));
    EXPECT_EQ(s.region, Region::kR1);
    EXPECT_EQ(s.point.i, 0);
    EXPECT_EQ(s.point.j, 0);
    expect_value<T>(s.point.y, "6");
}

TYPED_TEST(GeometryTest, InitialP1EqualsImplicitAtFirstMidpoint) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    for (auto h : {"1", "0.5", "0.1", "0.25", "3"}) {
        auto step = reference_step<T>(h);
        T hv = step.h();
        T direct = eval_implicit(ellipse, hv, T(ellipse.b() - hv / 2));
        expect_value<T>(initial_p1(ellipse, step).p, format_number(direct), 1e-9);
    }
}

TYPED_TEST(GeometryTest, StepR1Examples) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    {
        auto step = reference_step<T>("1");
        auto next = step_r1(ellipse, step, state_at(ellipse, step, "0", "6", "-332", Region::kR1));
        expect_value<T>(next.point.x, "1");
        expect_value<T>(next.point.y, "6");
        expect_value<T>(next.p, "-224");
        EXPECT_EQ(next.point.j, 0);
    }
    {
        auto step = reference_step<T>("1");
        auto next = step_r1(ellipse, step, state_at(ellipse, step, "3", "6", "208", Region::kR1));
        expect_value<T>(next.point.x, "4");
        expect_value<T>(next.point.y, "5");
        expect_value<T>(next.p, "-108");
        EXPECT_EQ(next.point.i, 4);
        EXPECT_EQ(next.point.j, 1);
    }
    {
        auto step = reference_step<T>("0.5");
        auto next = step_r1(ellipse, step, state_at(ellipse, step, "2", "6", "37", Region::kR1));
        expect_value<T>(next.point.x, "2.5");
        expect_value<T>(next.point.y, "5.5");
        expect_value<T>(next.p, "-216");
    }
}

TYPED_TEST(GeometryTest, InitialP2Examples) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    auto seed = [&](std::string_view h, std::string_view x, std::string_view y) {
        auto step = reference_step<T>(h);
        return initial_p2(ellipse, step, state_at(ellipse, step, x, y, "0", Region::kR1).point);
    };
    expect_value<T>(seed("1", "7", "3").p, "-23");
    expect_value<T>(seed("0.5", "6.5", "3").p, "-263.75");
    expect_value<T>(seed("0.1", "6.5", "3.5").p, "-19.67", 1e-9);
    EXPECT_EQ(seed("1", "7", "3").region, Region::kR2);
}

TYPED_TEST(GeometryTest, StepR2Examples) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    auto check = [&](std::string_view h, std::string_view x, std::string_view y,
                     std::string_view p, std::string_view nx, std::string_view ny,
                     std::string_view np) {
        auto step = reference_step<T>(h);
        auto next = step_r2(ellipse, step, state_at(ellipse, step, x, y, p, Region::kR2));
        expect_value<T>(next.point.x, nx);
        expect_value<T>(next.point.y, ny);
        expect_value<T>(next.p, np, 1e-9);
        EXPECT_EQ(next.region, Region::kR2);
    };
    check("1", "7", "3", "-23", "8", "2", "361");
    check("1", "8", "2", "361", "8", "1", "297");
    check("0.1", "6.8", "3.2", "0.25", "6.8", "3.1", "-38.79");
}

TYPED_TEST(GeometryTest, SteppersRejectWrongRegion) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    auto step = reference_step<T>("1");
    auto r1 = initial_p1(ellipse, step);
    auto r2 = initial_p2(ellipse, step, r1.point);
    EXPECT_THROW((void)step_r2(ellipse, step, r1), RegionMismatch);
    EXPECT_THROW((void)step_r1(ellipse, step, r2), RegionMismatch);
}

TYPED_TEST(GeometryTest, TransitionIsStrict) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    auto pt = [&](std::string_view h, std::string_view x, std::string_view y) {
        auto step = reference_step<T>(h);
        return state_at(ellipse, step, x, y, "0", Region::kR1).point;
    };
    EXPECT_TRUE(region_transition(ellipse, pt("1", "7", "3")));     // 504 > 384
    EXPECT_FALSE(region_transition(ellipse, pt("1", "0", "6")));    // 0 > 768 fails
    // 460.8 == 460.8; in float the products differ by one ulp.
    EXPECT_FALSE(region_transition(ellipse, pt("0.1", "6.4", "3.6")));
    EXPECT_TRUE(region_transition(ellipse, pt("0.1", "6.5", "3.5")));  // 468 > 448
}

TYPED_TEST(GeometryTest, ValidationCodes) {
    using T = TypeParam;
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const ValidationError& e) {
            return e.code();
        }
        ADD_FAILURE() << "no ValidationError";
        return ValidationCode::kNonFinite;
    };
    EXPECT_EQ(code_of([] { (void)EllipseSpec<T>(T(0), T(-1)); }), ValidationCode::kNonPositiveMajorAxis);
    EXPECT_EQ(code_of([] { (void)EllipseSpec<T>(T(8), T(0)); }), ValidationCode::kNonPositiveMinorAxis);
    EXPECT_EQ(code_of([] { (void)EllipseSpec<T>(T(6), T(8)); }), ValidationCode::kAxesNotOrdered);
    EXPECT_EQ(code_of([] { (void)EllipseSpec<T>(T(6), T(6)); }), ValidationCode::kAxesNotOrdered);
    EXPECT_EQ(code_of([] { (void)GridStep<T>(T(0)); }), ValidationCode::kNonPositiveStep);
    EXPECT_EQ(code_of([] { (void)GridStep<T>(T(-1)); }), ValidationCode::kNonPositiveStep);
    EXPECT_EQ(code_of([] { check_compatible(reference_ellipse<T>(), GridStep<T>(T(7))); }),
              ValidationCode::kStepExceedsMinorAxis);
    EXPECT_EQ(code_of([] { (void)initial_p1(reference_ellipse<T>(), GridStep<T>(T(7))); }),
              ValidationCode::kStepExceedsMinorAxis);
    EXPECT_NO_THROW(check_compatible(reference_ellipse<T>(), GridStep<T>(T(6))));
    if constexpr (std::same_as<T, double>) {
        EXPECT_EQ(code_of([] { (void)EllipseSpec<double>(std::numeric_limits<double>::quiet_NaN(), 1.0); }), ValidationCode::kNonFinite);
        EXPECT_EQ(code_of([] { (void)GridStep<double>(std::numeric_limits<double>::infinity()); }), ValidationCode::kNonFinite);
    } else {
        EXPECT_EQ(code_of([] { (void)GridStep<Rational>::from_fraction(2, 4); }),
                  ValidationCode::kStepNotInLowestTerms);
        EXPECT_EQ(code_of([] { (void)GridStep<Rational>::from_fraction(0, 4); }),
                  ValidationCode::kNonPositiveStep);
        EXPECT_EQ(GridStep<Rational>::from_fraction(1, 10).h(), Rational(1, 10));
    }
}

TYPED_TEST(GeometryTest, GridPointsAreRebuiltFromIndices) {
    using T = TypeParam;
    auto ellipse = reference_ellipse<T>();
    auto step = reference_step<T>("0.1");
    for (std::int64_t j = 0; j <= last_row(ellipse, step); ++j) {
        auto p = GridPoint<T>::at(ellipse, step, 3 * j, j);
        EXPECT_EQ(p.x, T(3 * j) * step.h());
        EXPECT_GE(p.y, T(0));
        if (!p.on_major_axis) EXPECT_EQ(p.y, ellipse.b() - T(j) * step.h());
    }
    EXPECT_EQ(last_row(ellipse, step), 60);
    EXPECT_TRUE(GridPoint<T>::at(ellipse, step, 0, 60).on_major_axis);
    EXPECT_THROW((void)GridPoint<T>::at(ellipse, step, 0, 61), std::out_of_range);
    EXPECT_THROW((void)GridPoint<T>::at(ellipse, step, -1, 0), std::out_of_range);
}

TYPED_TEST(GeometryTest, LastRowWhenBIsNotAMultipleOfH) {
    using T = TypeParam;
    EllipseSpec<T> ellipse(num<T>("5"), num<T>("2.5"));
    auto step = reference_step<T>("0.75");
    EXPECT_EQ(last_row(ellipse, step), 3);  // 2.5 - 3*0.75 = 0.25
    auto p = GridPoint<T>::at(ellipse, step, 0, 3);
    EXPECT_FALSE(p.on_major_axis);
    expect_value<T>(p.y, "0.25");
}

TYPED_TEST(GeometryTest, SignClassificationProperty) {
    using T = TypeParam;
    testing::CaseGenerator gen(11);
    for (int k = 0; k < 200; ++k) {
        auto ellipse = testing::ellipse_of<T>(gen.next());
        const T& a = ellipse.a();
        const T& b = ellipse.b();
        // Zero exactly in rational mode, up to rounding of a^2 b^2 in float.
        const double tol = std::same_as<T, double> ? 1e-12 * to_double(ellipse.a2() * ellipse.b2()) : 0.0;
        EXPECT_LT(eval_implicit(ellipse, T(0), T(0)), T(0));
        for (auto [x, y] : {std::pair{a, T(0)}, {T(-a), T(0)}, {T(0), b}, {T(0), T(-b)}}) {
            EXPECT_LE(std::abs(to_double(eval_implicit(ellipse, x, y))), tol);
        }
        EXPECT_GT(eval_implicit(ellipse, T(a + 1), T(b + 1)), T(0));
    }
}

// Classical unit-step initial parameter (4b^2 + a^2)/4 - a^2 b, exactly.
TEST(GeometryExact, UnitStepReducesToClassicalInitialParameter) {
    testing::CaseGenerator gen(5);
    for (int k = 0; k < 100; ++k) {
        auto c = gen.next();
        auto ellipse = testing::ellipse_of<Rational>(c);
        if (ellipse.b() < 1) continue;
        const Rational& a = ellipse.a();
        const Rational& b = ellipse.b();
        Rational classical = (4 * b * b + a * a) / 4 - a * a * b;
        EXPECT_EQ(initial_p1(ellipse, GridStep<Rational>(Rational(1))).p, classical);
    }
}

}  // namespace
}  // namespace mpeda
