#include <doctest.h>

#include "realcong/classify.hpp"
#include "test_util.hpp"

using namespace realcong;
using testutil::rm;

namespace {

CanonicalForm single(FormKind kind, CanonicalBlock b) {
    CanonicalForm f;
    f.kind = kind;
    f.blocks = {std::move(b)};
    f.flags = {Ambiguity::None};
    return f;
}

}  // namespace

TEST_CASE("classify_form1 resolves gamma signs") {
    CanonicalForm f = classify_form1(gamma(2));
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].to_spec() == "R1ii(k=2,N=+1)");
    CHECK(f.ambiguous_indices().empty());

    CanonicalForm g = classify_form1(-gamma(2));
    REQUIRE(g.blocks.size() == 1);
    CHECK(g.blocks[0].to_spec() == "R1ii(k=2,N=-1)");
    CHECK(g.ambiguous_indices().empty());
}

TEST_CASE("classify_form1 on nilpotent and H-hat examples") {
    CanonicalForm f = classify_form1(jordan(2, rat(0)));
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].to_spec() == "R1i(k=2)");

    RatMat s = rm({{"1", "0", "0", "0"},
                   {"1", "1", "0", "0"},
                   {"0", "2", "1", "0"},
                   {"1", "0", "1", "1"}});
    RatMat m = s * h_hat(1, rat(0), rat(1, 2)) * s.transpose();
    CanonicalForm g = classify_form1(m);
    REQUIRE(g.blocks.size() == 1);
    CHECK(g.blocks[0].to_spec() == "R1iv(k=1,a=0,b=1/2)");
}

TEST_CASE("classify_form2 examples") {
    CanonicalForm f = classify_form2(jordan(3, rat(0)));
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].to_spec() == "R2TriI(k=3,a=0)");

    CanonicalForm g = classify_form2(h_block(1, rat(1, 2)));
    REQUIRE(g.blocks.size() == 1);
    CHECK(g.blocks[0].to_spec() == "R2TriI(k=2,a=1/2)");

    CanonicalForm h = classify_form2(kron(gamma(3), c_rot(rat(3, 5), rat(4, 5))));
    REQUIRE(h.blocks.size() == 1);
    CHECK(h.blocks[0].family == Family::R2TriIII);
    CHECK(h.blocks[0].k == 3);
    REQUIRE(h.blocks[0].N.has_value());
    CHECK(h.blocks[0].N->rotation);
    CHECK(h.blocks[0].N->a.abs() == QuadScalar(rat(3, 5)));
    CHECK(h.blocks[0].N->b == QuadScalar(rat(4, 5)));
}

TEST_CASE("resolve_signs on a symmetric direct sum") {
    RatMat m = rm({{"1", "0"}, {"0", "-1"}});
    CanonicalForm f = classify_form1(m);
    REQUIRE(f.blocks.size() == 2);
    CHECK(f.blocks[0].to_spec() == "R1ii(k=1,N=+1)");
    CHECK(f.blocks[1].to_spec() == "R1ii(k=1,N=-1)");
    CHECK(f.ambiguous_indices().empty());
}

TEST_CASE("form conversions and the eps(k) rule") {
    CanonicalBlock g2;
    g2.family = Family::R1ii;
    g2.k = 2;
    g2.N = NParam::plus1();
    CanonicalForm f2 = form1_to_form2(single(FormKind::Form1, g2));
    REQUIRE(f2.blocks.size() == 1);
    CHECK(f2.blocks[0].to_spec() == "R2TriIII(k=2,N=+1)");

    CanonicalBlock g4 = g2;
    g4.k = 4;
    CanonicalForm f4 = form1_to_form2(single(FormKind::Form1, g4));
    CHECK(f4.blocks[0].to_spec() == "R2TriIII(k=4,N=-1)");

    // round trip through every block type
    std::vector<CanonicalBlock> blocks;
    CanonicalBlock j;
    j.family = Family::R1i;
    j.k = 3;
    blocks.push_back(j);
    CanonicalBlock rot;
    rot.family = Family::R1ii;
    rot.k = 3;
    rot.N = NParam::rot(QuadScalar(rat(3, 5)), QuadScalar(rat(4, 5)));
    blocks.push_back(rot);
    CanonicalBlock h;
    h.family = Family::R1iii;
    h.k = 2;
    h.a = QuadScalar(rat(1, 2));
    blocks.push_back(h);
    CanonicalBlock hh;
    hh.family = Family::R1iv;
    hh.k = 1;
    hh.a = QuadScalar(rat(0));
    hh.b = QuadScalar(rat(1, 2));
    blocks.push_back(hh);
    CanonicalForm f;
    f.kind = FormKind::Form1;
    f.blocks = blocks;
    f.flags.assign(blocks.size(), Ambiguity::None);
    f.normalize_order();
    CanonicalForm back = form2_to_form1(form1_to_form2(f));
    CHECK(back.to_spec() == f.to_spec());
}

TEST_CASE("hs_to_fhs mapping") {
    CanonicalBlock t0;
    t0.family = Family::HSType0;
    t0.k = 3;
    CHECK(hs_to_fhs(single(FormKind::HS, t0)).blocks[0].to_spec() == "FHSTriI(k=3,mu=0+0i)");

    CanonicalBlock t1;
    t1.family = Family::HSTypeI;
    t1.k = 4;
    t1.mu = Gaussian(rat(0), rat(1));
    CHECK(hs_to_fhs(single(FormKind::HS, t1)).blocks[0].to_spec() == "FHSTriII(k=4,mu=0-1i)");

    CanonicalBlock t2;
    t2.family = Family::HSTypeII;
    t2.k = 2;
    t2.mu = Gaussian(rat(2));
    CHECK(hs_to_fhs(single(FormKind::HS, t2)).blocks[0].to_spec() == "FHSTriI(k=4,mu=2+0i)");
}

TEST_CASE("hs_to_fhs sign agrees with the PkSk witness sign") {
    for (std::size_t k = 1; k <= 8; ++k) {
        CanonicalBlock t1;
        t1.family = Family::HSTypeI;
        t1.k = k;
        t1.mu = Gaussian(rat(1));
        CanonicalForm out = hs_to_fhs(single(FormKind::HS, t1));
        int eps = (k % 4 == 1 || k % 4 == 2) ? 1 : -1;
        CHECK(*out.blocks[0].mu == Gaussian(rat(eps)));
    }
}

TEST_CASE("lw_to_form1 table rows") {
    CanonicalBlock a1;
    a1.family = Family::LWalpha3;
    a1.k = 2;
    a1.alpha = rat(1);
    CHECK(lw_to_form1(a1).to_spec() == "R1i(k=4)");

    CanonicalBlock a3;
    a3.family = Family::LWalpha3;
    a3.k = 1;
    a3.alpha = rat(3);
    CHECK(lw_to_form1(a3).to_spec() == "R1iii(k=1,a=-1/2)");

    CanonicalBlock b5;
    b5.family = Family::LWbeta5;
    b5.k = 1;
    b5.a = QuadScalar(rat(1));
    b5.b = QuadScalar(rat(1));
    CHECK(lw_to_form1(b5).to_spec() == "R1iv(k=1,a=-1/5,b=2/5)");
}

TEST_CASE("lw consistency spot checks") {
    CanonicalBlock i4;
    i4.family = Family::LWinf4;
    i4.k = 2;
    i4.eps = 1;
    CHECK(classify_lw_consistency(i4).consistent);

    CanonicalBlock b4;
    b4.family = Family::LWbeta4;
    b4.k = 1;
    b4.eps = 1;
    b4.b = QuadScalar(rat(1));
    CHECK(classify_lw_consistency(b4).consistent);
    // its pencil pair is ((1-b^2)/(1+b^2), 2b/(1+b^2)) = (0, 1)
    RatMat m = realize_rational(b4);
    RealKcf k = real_kcf(m.transpose(), m);
    REQUIRE(k.complex_jordan.size() == 1);
    CHECK(std::get<0>(k.complex_jordan[0]) == QuadScalar(rat(0)));
    CHECK(std::get<1>(k.complex_jordan[0]) == QuadScalar(rat(1)));

    CanonicalBlock m3;
    m3.family = Family::LWm3;
    m3.k = 1;
    CHECK(lw_to_form1(m3).to_spec() == "R1i(k=3)");
    CHECK(classify_lw_consistency(m3).consistent);
}

TEST_CASE("equal_up_to_ambiguity respects flags") {
    CanonicalBlock plus;
    plus.family = Family::R1ii;
    plus.k = 2;
    plus.N = NParam::plus1();
    CanonicalBlock minus = plus;
    minus.N = NParam::minus1();

    CanonicalForm a = single(FormKind::Form1, plus);
    CanonicalForm b = single(FormKind::Form1, minus);
    CHECK(!equal_up_to_ambiguity(a, b));
    a.flags[0] = Ambiguity::SignOfN;
    CHECK(equal_up_to_ambiguity(a, b));
}
