#include "ghcs/error.hpp"
#include "ghcs/parameters.hpp"

#include <gtest/gtest.h>

using namespace ghcs;

namespace {
std::vector<cplx> re(std::initializer_list<double> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Validate, PositiveEntriesAreAdmissible) {
    const ValidationReport r = validate({}, re({2.5}));
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.rule, "ok");
    ASSERT_TRUE(r.params.has_value());
    EXPECT_EQ(r.params->q(), 1u);
}

TEST(Validate, NegativePairWithEqualIntegerParts) {
    EXPECT_TRUE(validate(re({-1.5, -1.2}), {}).valid);
    EXPECT_TRUE(validate(re({-0.5, 2.0}), re({-0.3})).valid);
    const ValidationReport bad = validate(re({-1.5, -2.2}), {});
    EXPECT_FALSE(bad.valid);
    EXPECT_EQ(bad.rule, "unpaired-negative");
}

TEST(Validate, UnpairedNegativeIsRejected) {
    const ValidationReport r = validate(re({-1.5}), re({2.0}));
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.rule, "unpaired-negative");
}

TEST(Validate, ZeroAndNegativeIntegersAreRejected) {
    for (double v : {0.0, -1.0, -2.0, -7.0}) {
        const ValidationReport ra = validate(re({v}), {});
        EXPECT_FALSE(ra.valid);
        EXPECT_EQ(ra.rule, "non-positive-integer");
        EXPECT_EQ(ra.list, 'a');
        const ValidationReport rb = validate(re({1.0}), re({3.0, v}));
        EXPECT_FALSE(rb.valid);
        EXPECT_EQ(rb.list, 'b');
        EXPECT_EQ(rb.index, 1u);
    }
}

TEST(Validate, ComplexEntriesNeedConjugatesInTheSameList) {
    EXPECT_TRUE(validate({cplx(1, 2), cplx(1, -2)}, re({0.5})).valid);
    const ValidationReport lone = validate({cplx(1, 2)}, {});
    EXPECT_FALSE(lone.valid);
    EXPECT_EQ(lone.rule, "unpaired-complex");
    EXPECT_FALSE(validate({cplx(1, 2)}, {cplx(1, -2)}).valid);
}

TEST(Validate, NonFiniteEntries) {
    EXPECT_FALSE(validate(re({std::nan("")}), {}).valid);
    EXPECT_FALSE(validate({}, re({INFINITY})).valid);
}

TEST(ParameterSet, MakeThrowsWithTheValidationMessage) {
    EXPECT_THROW(ParameterSet::make(re({-2.0}), {}), ParameterError);
    EXPECT_NO_THROW(ParameterSet::make_real({1.5}, {2.5}));
}

TEST(ParameterSet, CanonicalOrderMakesPermutationsEqual) {
    const ParameterSet x = ParameterSet::make_real({0.4, 0.3, 2.0}, {5.0, 1.5});
    const ParameterSet y = ParameterSet::make_real({2.0, 0.4, 0.3}, {1.5, 5.0});
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.label(), y.label());
}

TEST(ParameterSet, EtaRealFlagAndReduction) {
    const ParameterSet p = ParameterSet::make_real({0.3, 0.4}, {1.5});
    EXPECT_NEAR(p.eta(), -0.8, 1e-15);
    EXPECT_TRUE(p.is_real());
    EXPECT_FALSE(ParameterSet::make({cplx(1, 2), cplx(1, -2)}, {}).is_real());
    const ParameterSet q = ParameterSet::make_real({2.0, 3.0}, {3.0});
    EXPECT_EQ(q.reduced(), ParameterSet::make_real({2.0}, {}));
    const ParameterSet s = p.shifted(1.0);
    EXPECT_NEAR(s.a_real()[0], 1.3, 1e-15);
    EXPECT_NEAR(s.b_real()[0], 2.5, 1e-15);
    const ParameterSet m = p.with_matched_pair(cplx(7.0, 0.0));
    EXPECT_EQ(m.p(), 3u);
    EXPECT_EQ(m.q(), 2u);
    EXPECT_EQ(m.reduced(), p);
}

TEST(Classify, DomainsAndCircleKinds) {
    const DomainClass cs = classify(ParameterSet::make({}, {}));
    EXPECT_EQ(cs.kind, DomainKind::Plane);
    EXPECT_EQ(cs.eta, 0.0);

    const ParameterSet f10 = ParameterSet::make_real({2.0}, {});
    EXPECT_EQ(classify(f10).kind, DomainKind::UnitDisk);
    EXPECT_EQ(classify(f10).eta, 2.0);
    EXPECT_EQ(classify(f10, cplx(0.0, 1.0)).kind, DomainKind::CircleUnnormalizable);

    const ParameterSet f21 = ParameterSet::make_real({0.3, 0.4}, {1.5});
    EXPECT_TRUE(classify(f21).circle_normalizable);
    EXPECT_EQ(classify(f21, std::polar(1.0, 0.7)).kind, DomainKind::CircleNormalized);
    EXPECT_EQ(classify(f21, 0.5).kind, DomainKind::UnitDisk);
    EXPECT_THROW(classify(f21, 1.01), DivergenceError);

    EXPECT_THROW(classify(ParameterSet::make_real({1.0, 2.0}, {})), DivergenceError);
    EXPECT_EQ(classify(ParameterSet::make_real({}, {2.0}), 1e3).kind, DomainKind::Plane);
}
