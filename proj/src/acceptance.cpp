#include "realcong/acceptance.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>

#include "realcong/classify.hpp"
#include "realcong/matcore.hpp"
#include "realcong/pencil.hpp"
#include "realcong/verify.hpp"
#include "realcong/witnesses.hpp"

namespace realcong {

namespace {

struct Check {
    int total = 0;
    int failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    }
    std::string summary() const {
        std::ostringstream os;
        os << (total - failed) << "/" << total << " checks";
        if (failed) os << "; first failure: " << first_failure;
        return os.str();
    }
};

QuadScalar qs(long n, long d = 1) { return QuadScalar(rat(n, d)); }

CanonicalBlock r1i(std::size_t k) {
    CanonicalBlock b;
    b.family = Family::R1i;
    b.k = k;
    return b;
}

CanonicalBlock r1ii_sign(std::size_t k, int s) {
    CanonicalBlock b;
    b.family = Family::R1ii;
    b.k = k;
    b.N = s > 0 ? NParam::plus1() : NParam::minus1();
    return b;
}

CanonicalBlock r1ii_rot(std::size_t k, QuadScalar a, QuadScalar bb) {
    CanonicalBlock b;
    b.family = Family::R1ii;
    b.k = k;
    b.N = NParam::rot(std::move(a), std::move(bb));
    return b;
}

CanonicalBlock r1iii(std::size_t k, QuadScalar a) {
    CanonicalBlock b;
    b.family = Family::R1iii;
    b.k = k;
    b.a = std::move(a);
    return b;
}

CanonicalBlock r1iv(std::size_t k, QuadScalar a, QuadScalar bb) {
    CanonicalBlock b;
    b.family = Family::R1iv;
    b.k = k;
    b.a = std::move(a);
    b.b = std::move(bb);
    return b;
}

CanonicalBlock r2tri1(std::size_t k, QuadScalar a) {
    CanonicalBlock b;
    b.family = Family::R2TriI;
    b.k = k;
    b.a = std::move(a);
    return b;
}

CanonicalBlock r2tri2(std::size_t k, QuadScalar a, QuadScalar bb) {
    CanonicalBlock b;
    b.family = Family::R2TriII;
    b.k = k;
    b.a = std::move(a);
    b.b = std::move(bb);
    return b;
}

CanonicalBlock r2tri3_sign(std::size_t k, int s) {
    CanonicalBlock b;
    b.family = Family::R2TriIII;
    b.k = k;
    b.N = s > 0 ? NParam::plus1() : NParam::minus1();
    return b;
}

CanonicalBlock r2tri3_rot(std::size_t k, QuadScalar a, QuadScalar bb) {
    CanonicalBlock b;
    b.family = Family::R2TriIII;
    b.k = k;
    b.N = NParam::rot(std::move(a), std::move(bb));
    return b;
}

CanonicalBlock hs_block(Family f, std::size_t k, Gaussian mu) {
    CanonicalBlock b;
    b.family = f;
    b.k = k;
    b.mu = std::move(mu);
    return b;
}

CanonicalBlock lw_block(Family f, std::size_t k) {
    CanonicalBlock b;
    b.family = f;
    b.k = k;
    return b;
}

const std::vector<std::pair<Rational, Rational>>& pythagorean_grid() {
    static const std::vector<std::pair<Rational, Rational>> g = {
        {rat(3, 5), rat(4, 5)}, {rat(5, 13), rat(12, 13)}, {rat(0), rat(1)}};
    return g;
}

// ---- criterion 1: table reproduction -------------------------------------------

void check_real_block(Check& c, const CanonicalBlock& b) {
    RatMat m = realize_rational(b);
    bool ok = false;
    std::string why;
    try {
        ok = kcf_equal(real_kcf(m.transpose(), m), expected_real_kcf(b));
    } catch (const std::exception& e) {
        why = e.what();
    }
    c.expect(ok, "real table row " + b.to_spec() + (why.empty() ? "" : " (" + why + ")"));
}

void check_complex_block(Check& c, const CanonicalBlock& b) {
    GaussMat m = realize_gaussian(b);
    bool ok = false;
    std::string why;
    try {
        ok = kcf_equal(complex_kcf(m.conj_transpose(), m), expected_complex_kcf(b));
    } catch (const std::exception& e) {
        why = e.what();
    }
    c.expect(ok, "complex table row " + b.to_spec() + (why.empty() ? "" : " (" + why + ")"));
}

CriterionResult criterion_tables(unsigned) {
    Check c;
    for (std::size_t k = 1; k <= 5; ++k) {
        check_real_block(c, r1i(k));
        check_real_block(c, r1ii_sign(k, +1));
        check_real_block(c, r1ii_sign(k, -1));
        for (const auto& [a, b] : pythagorean_grid())
            check_real_block(c, r1ii_rot(k, QuadScalar(a), QuadScalar(b)));
        for (const Rational& a : {rat(1, 2), rat(-1, 2), rat(1, 3), rat(-1, 3)})
            check_real_block(c, r1iii(k, QuadScalar(a)));
    }
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
                 {rat(0), rat(1, 2)}, {rat(1, 2), rat(1, 3)}, {rat(-1, 3), rat(1, 4)}})
            check_real_block(c, r1iv(k, QuadScalar(a), QuadScalar(b)));

    for (std::size_t k : {1, 3, 5}) check_real_block(c, r2tri1(k, qs(0)));
    for (std::size_t k : {2, 4}) {
        check_real_block(c, r2tri1(k, qs(0)));
        for (const Rational& a : {rat(1, 2), rat(-1, 3), rat(2)})
            check_real_block(c, r2tri1(k, QuadScalar(a)));
    }
    for (std::size_t k = 1; k <= 2; ++k)
        for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{
                 {rat(0), rat(1, 2)}, {rat(1, 2), rat(1, 3)}})
            check_real_block(c, r2tri2(k, QuadScalar(a), QuadScalar(b)));
    for (std::size_t k = 1; k <= 5; ++k) {
        check_real_block(c, r2tri3_sign(k, +1));
        check_real_block(c, r2tri3_sign(k, -1));
        for (const auto& [a, b] : pythagorean_grid())
            check_real_block(c, r2tri3_rot(k, QuadScalar(a), QuadScalar(b)));
    }

    const std::vector<Gaussian> unit_mus = {Gaussian(rat(1)), Gaussian(rat(-1)),
                                            Gaussian(rat(0), rat(1)),
                                            Gaussian(rat(3, 5), rat(4, 5))};
    const std::vector<Gaussian> big_mus = {Gaussian(rat(2)), Gaussian(rat(-3)),
                                           Gaussian(rat(1), rat(1))};
    const std::vector<Gaussian> small_mus = {Gaussian(rat(1, 2)),
                                             Gaussian(rat(1, 3), rat(2, 3))};
    for (std::size_t k = 1; k <= 5; ++k) {
        check_complex_block(c, hs_block(Family::HSType0, k, Gaussian(rat(0))));
        for (const Gaussian& mu : unit_mus) {
            check_complex_block(c, hs_block(Family::HSTypeI, k, mu));
            check_complex_block(c, hs_block(Family::FHSTriII, k, mu));
        }
    }
    for (std::size_t k = 1; k <= 3; ++k)
        for (const Gaussian& mu : big_mus)
            check_complex_block(c, hs_block(Family::HSTypeII, k, mu));
    for (std::size_t k : {1, 3, 5})
        check_complex_block(c, hs_block(Family::FHSTriI, k, Gaussian(rat(0))));
    for (std::size_t k : {2, 4}) {
        check_complex_block(c, hs_block(Family::FHSTriI, k, Gaussian(rat(0))));
        for (const Gaussian& mu : big_mus)
            check_complex_block(c, hs_block(Family::FHSTriI, k, mu));
        for (const Gaussian& mu : small_mus)
            check_complex_block(c, hs_block(Family::FHSTriI, k, mu));
    }
    return {1, "table reproduction (four theorems)", c.failed == 0, c.summary()};
}

// ---- criterion 2: witness suite --------------------------------------------------

CriterionResult criterion_witnesses(unsigned seed) {
    Check c;
    const std::vector<Gaussian> mus = {Gaussian(rat(0), rat(1)), Gaussian(rat(3, 5), rat(4, 5)),
                                       Gaussian(rat(1, 2), rat(1, 2)), Gaussian(rat(1), rat(-2))};
    for (const Gaussian& mu : mus) c.expect(check_witness(w_matrix(mu)), "W witness");
    for (std::size_t k = 1; k <= 4; ++k)
        for (const Gaussian& mu : mus) {
            c.expect(check_witness(u_matrix(k, mu)), "U witness k=" + std::to_string(k));
            c.expect(check_witness(v_matrix(k, mu)), "V witness k=" + std::to_string(k));
        }
    // unitarity of the sqrt(2)-scaled transforms: (s T)(s T)^* = 2 I
    for (std::size_t k = 1; k <= 3; ++k) {
        GaussMat t = u_matrix(k, mus[0]).transform;
        GaussMat prod = t * t.conj_transpose();
        GaussMat two = Gaussian(rat(2)) * to_gaussian(RatMat::identity(2 * k));
        c.expect(prod == two, "scaled-unitary identity");
    }

    std::mt19937 rng(seed + 17);
    auto rnd_int_mat = [&](std::size_t n, int lo, int hi) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = rat(static_cast<long>(lo + static_cast<long>(rng() % (hi - lo + 1))));
        return m;
    };
    // similarity lift on random invertible S
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng() % 2;
        RatMat s;
        do {
            s = rnd_int_mat(n, -2, 2);
        } while (sgn(determinant(s)) == 0);
        RatMat a = rnd_int_mat(n, -2, 2);
        GaussMat gs = to_gaussian(s), ga = to_gaussian(a);
        GaussMat gb = gs * ga * *inverse(gs);
        c.expect(check_witness(similarity_to_congruence(gs, ga, gb, trial % 2 == 0)),
                 "similarity lift");
    }
    // mu_rem flip: H_2k(mu) traded for the inverse parameter
    for (std::size_t k = 1; k <= 3; ++k)
        for (const Gaussian& mu : {Gaussian(rat(2)), Gaussian(rat(1), rat(1))}) {
            Witness w = h_inverse_flip(k, mu);
            c.expect(check_witness(w), "h-flip witness");
        }
    // commutation permutation on random pairs
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t p = 1; p <= 5; ++p) {
            RatMat perm = kron_commute_perm(n, p);
            for (int t = 0; t < (n * p > 1 ? 20 : 2); ++t) {
                RatMat a(n, n), b(p, p);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        a(i, j) = rat(static_cast<long>(rng() % 7) - 3);
                for (std::size_t i = 0; i < p; ++i)
                    for (std::size_t j = 0; j < p; ++j)
                        b(i, j) = rat(static_cast<long>(rng() % 7) - 3);
                c.expect(kron(a, b) == perm * kron(b, a) * perm.transpose(),
                         "commutation identity");
            }
        }
    // Gamma -> Gamma~ signed permutation, k = 1..12 with the mod-4 sign rule
    for (std::size_t k = 1; k <= 12; ++k) {
        SignedWitness sw = pks_witness(k);
        c.expect(check_witness(sw.witness), "PkSk witness k=" + std::to_string(k));
        c.expect(sw.sign == ((k % 4 == 1 || k % 4 == 2) ? 1 : -1), "PkSk sign rule");
        // signed permutation: one entry of modulus 1 per row/column
        const GaussMat& t = sw.witness.transform;
        bool perm_ok = true;
        for (std::size_t i = 0; i < k; ++i) {
            int nz = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (!t(i, j).is_zero()) {
                    ++nz;
                    if (!(t(i, j) == Gaussian(rat(1)) || t(i, j) == Gaussian(rat(-1))))
                        perm_ok = false;
                }
            if (nz != 1) perm_ok = false;
        }
        c.expect(perm_ok, "PkSk signed permutation");
    }
    // proof-step witnesses
    for (std::size_t k = 1; k <= 3; ++k) {
        c.expect(check_witness(step_form1_step1(k, Gaussian(rat(3, 5), rat(4, 5)))),
                 "form1 step 1");
        c.expect(check_witness(step_form1_step1(k, Gaussian(rat(0), rat(1)))), "form1 step 1");
        c.expect(check_witness(step_form1_step2(k, Gaussian(rat(1, 2), rat(1, 2)))),
                 "form1 step 2");
        c.expect(check_witness(step_form1_step2(k, Gaussian(rat(1), rat(2)))), "form1 step 2");
        c.expect(check_witness(bflip_hhat(k, rat(1, 3), rat(1, 2))), "b-flip H-hat");
        c.expect(check_witness(bflip_that(k, rat(1, 3), rat(1, 2))), "b-flip T-hat");
    }
    c.expect(check_witness(bflip_c(rat(0), rat(1))), "b-flip C");
    c.expect(check_witness(bflip_c(rat(3, 5), rat(4, 5))), "b-flip C");
    // Lee-Weinberg witnesses
    for (std::size_t k : {2, 4, 6})
        for (int e : {1, -1})
            c.expect(check_witness(lw_witness(LwWitnessKind::Inf4, k, e)), "inf4 witness");
    for (std::size_t k : {1, 3, 5}) {
        c.expect(check_witness(lw_witness(LwWitnessKind::Inf5, k)), "inf5 witness");
        for (int e : {1, -1})
            c.expect(check_witness(lw_witness(LwWitnessKind::O3, k, e)), "o3 witness");
    }
    for (std::size_t k : {2, 4, 6})
        c.expect(check_witness(lw_witness(LwWitnessKind::O4, k)), "o4 witness");
    for (std::size_t k = 1; k <= 3; ++k)
        for (const Rational& al : {rat(2), rat(1, 2), rat(1), rat(3)})
            c.expect(check_witness(lw_witness(LwWitnessKind::Alpha3Flip, k, 1, al)),
                     "alpha3 flip witness");
    return {2, "witness suite (explicit transformations)", c.failed == 0, c.summary()};
}

// ---- criterion 3: round-trip classification --------------------------------------

struct RoundTripStats {
    int cases = 0;
    int multiset_ok = 0;
    int gamma_blocks = 0;
    int gamma_sign_ok = 0;
    int rot_sign_cases = 0;
    int rot_sign_resolved = 0;
};

CanonicalBlock random_form1_block(std::mt19937& rng, std::size_t budget) {
    for (;;) {
        switch (rng() % 5) {
            case 0: {
                std::size_t k = 1 + rng() % 3;
                if (k <= budget) return r1i(k);
                break;
            }
            case 1: {
                std::size_t k = 1 + rng() % 4;
                if (k <= budget) return r1ii_sign(k, rng() % 2 ? 1 : -1);
                break;
            }
            case 2: {
                std::size_t k = 1 + rng() % 2;
                if (2 * k <= budget) {
                    const auto& g = pythagorean_grid()[rng() % pythagorean_grid().size()];
                    return r1ii_rot(k, QuadScalar(g.first), QuadScalar(g.second));
                }
                break;
            }
            case 3: {
                std::size_t k = 1 + rng() % 2;
                if (2 * k <= budget) {
                    const Rational as[] = {rat(1, 2), rat(-1, 2), rat(1, 3), rat(2, 3)};
                    return r1iii(k, QuadScalar(as[rng() % 4]));
                }
                break;
            }
            default: {
                if (4 <= budget) {
                    const std::pair<Rational, Rational> abs[] = {
                        {rat(0), rat(1, 2)}, {rat(1, 2), rat(1, 3)}, {rat(-1, 4), rat(1, 2)}};
                    const auto& ab = abs[rng() % 3];
                    return r1iv(1, QuadScalar(ab.first), QuadScalar(ab.second));
                }
                break;
            }
        }
    }
}

RatMat random_unimodular(std::mt19937& rng, std::size_t n) {
    RatMat s = RatMat::identity(n);
    const std::size_t ops = 2 * n + 4;
    for (std::size_t t = 0; t < ops; ++t) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long f = static_cast<long>(rng() % 3) - 1;
        if (f == 0) f = 1;
        for (std::size_t col = 0; col < n; ++col) s(i, col) += rat(f) * s(j, col);
    }
    // a few row swaps and sign flips
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t i = rng() % n, j = rng() % n;
        for (std::size_t col = 0; col < n; ++col) std::swap(s(i, col), s(j, col));
        if (rng() % 2)
            for (std::size_t col = 0; col < n; ++col) s(i, col) = -s(i, col);
    }
    return s;
}

CriterionResult criterion_roundtrip(unsigned seed) {
    Check c;
    RoundTripStats st;
    std::mt19937 rng(seed);
    const int kCases = 200;
    for (int t = 0; t < kCases; ++t) {
        std::size_t target = 2 + rng() % 9;  // n <= 10
        std::vector<CanonicalBlock> blocks;
        std::size_t used = 0;
        while (blocks.size() < 5 && used < target) {
            CanonicalBlock b = random_form1_block(rng, target - used);
            used += b.size();
            blocks.push_back(std::move(b));
            if (rng() % 3 == 0) break;
        }
        CanonicalForm src;
        src.kind = FormKind::Form1;
        src.blocks = blocks;
        src.flags.assign(blocks.size(), Ambiguity::None);
        src.normalize_order();
        RatMat m = realize_form_matrix(blocks);
        RatMat s = random_unimodular(rng, m.rows());
        RatMat conj = s * m * s.transpose();
        ++st.cases;
        CanonicalForm got;
        try {
            got = classify_form1(conj);
        } catch (const std::exception& e) {
            c.expect(false, std::string("classification threw: ") + e.what());
            continue;
        }
        bool ok = equal_up_to_ambiguity(got, src);
        if (ok) ++st.multiset_ok;
        c.expect(ok, "round trip multiset [" + src.to_spec() + "]");
        // Gamma (x) [+-1] signs must come back exactly.
        std::vector<std::string> src_signs, got_signs;
        for (const auto& b : src.blocks)
            if (b.family == Family::R1ii && b.N && !b.N->rotation) src_signs.push_back(b.to_spec());
        for (std::size_t i = 0; i < got.blocks.size(); ++i)
            if (got.blocks[i].family == Family::R1ii && got.blocks[i].N &&
                !got.blocks[i].N->rotation) {
                got_signs.push_back(got.blocks[i].to_spec());
                if (got.flags[i] != Ambiguity::None) got_signs.back() += "?";
            }
        std::sort(src_signs.begin(), src_signs.end());
        std::sort(got_signs.begin(), got_signs.end());
        st.gamma_blocks += static_cast<int>(src_signs.size());
        if (src_signs == got_signs) st.gamma_sign_ok += static_cast<int>(src_signs.size());
        if (!src_signs.empty())
            c.expect(src_signs == got_signs, "Gamma sign resolution [" + src.to_spec() + "]");
        // Rotation a-sign resolution rate (recorded, not thresholded).
        bool has_rot = false, rot_resolved = true;
        for (std::size_t i = 0; i < got.blocks.size(); ++i)
            if (got.blocks[i].family == Family::R1ii && got.blocks[i].N &&
                got.blocks[i].N->rotation && !got.blocks[i].N->a.is_zero()) {
                has_rot = true;
                if (got.flags[i] != Ambiguity::None) rot_resolved = false;
            }
        if (has_rot) {
            ++st.rot_sign_cases;
            if (rot_resolved) ++st.rot_sign_resolved;
        }
    }
    // Dedicated singular grid: J-blocks mixed with Gamma signs.
    for (std::size_t kj : {1, 2, 3})
        for (std::size_t kg = 1; kg <= 4; ++kg)
            for (int s1 : {1, -1}) {
                std::vector<CanonicalBlock> blocks = {r1i(kj), r1ii_sign(kg, s1),
                                                      r1ii_sign(kg + 1, -s1)};
                CanonicalForm src;
                src.kind = FormKind::Form1;
                src.blocks = blocks;
                src.flags.assign(blocks.size(), Ambiguity::None);
                src.normalize_order();
                RatMat m = realize_form_matrix(blocks);
                RatMat s = random_unimodular(rng, m.rows());
                RatMat conj = s * m * s.transpose();
                CanonicalForm got = classify_form1(conj);
                bool exact = got.blocks == src.blocks && got.ambiguous_indices().empty();
                c.expect(exact, "singular Gamma sign grid [" + src.to_spec() + "]");
            }

    // Golden: measured a-sign resolution rate on this seed/grid.  The sign of
    // a is the open part of the theory; the pinned value documents behaviour.
    std::ostringstream os;
    os << c.summary() << "; rot-sign resolution " << st.rot_sign_resolved << "/"
       << st.rot_sign_cases;
    bool golden_ok = true;
    if (seed == 0) {
        const int kGoldenRotCases = -1;     // pinned after first run
        const int kGoldenRotResolved = -1;  // pinned after first run
        if (kGoldenRotCases >= 0)
            golden_ok = st.rot_sign_cases == kGoldenRotCases &&
                        st.rot_sign_resolved == kGoldenRotResolved;
    }
    return {3, "round-trip classification + sign resolution", c.failed == 0 && golden_ok,
            os.str()};
}

// ---- criterion 4: Table 1 + degenerate table -------------------------------------

CriterionResult criterion_lw(unsigned) {
    Check c;
    auto run = [&](CanonicalBlock b) {
        ConsistencyReport rep = classify_lw_consistency(b);
        c.expect(rep.consistent, b.to_spec() + ": " + rep.details);
    };
    for (std::size_t k = 0; k <= 3; ++k) run(lw_block(Family::LWm3, k));
    for (std::size_t k : {2, 4})
        for (int e : {1, -1}) {
            CanonicalBlock b = lw_block(Family::LWinf4, k);
            b.eps = e;
            run(b);
        }
    for (std::size_t k : {1, 3}) run(lw_block(Family::LWinf5, k));
    for (std::size_t k : {1, 3})
        for (int e : {1, -1}) {
            CanonicalBlock b = lw_block(Family::LWo3, k);
            b.eps = e;
            run(b);
        }
    for (std::size_t k : {2, 4}) run(lw_block(Family::LWo4, k));
    for (std::size_t k = 1; k <= 2; ++k)
        for (const Rational& al : {rat(1), rat(2), rat(1, 2), rat(3)}) {
            CanonicalBlock b = lw_block(Family::LWalpha3, k);
            b.alpha = al;
            run(b);
        }
    const std::vector<Rational> grid = {rat(1), rat(1, 2), rat(2)};
    for (std::size_t k = 1; k <= 3; ++k)
        for (int e : {1, -1})
            for (const Rational& bb : grid) {
                CanonicalBlock b = lw_block(Family::LWbeta4, k);
                b.eps = e;
                b.b = QuadScalar(bb);
                run(b);
            }
    for (std::size_t k = 1; k <= 2; ++k)
        for (const Rational& aa : grid)
            for (const Rational& bb : grid) {
                CanonicalBlock b = lw_block(Family::LWbeta5, k);
                b.a = QuadScalar(aa);
                b.b = QuadScalar(bb);
                run(b);
            }
    // degenerate variants (appendix table)
    for (std::size_t k = 1; k <= 3; ++k)
        for (int e : {1, -1}) {
            CanonicalBlock b = lw_block(Family::LWbeta4, k);
            b.eps = e;
            b.b = QuadScalar(rat(0));
            run(b);
        }
    for (std::size_t k = 1; k <= 2; ++k) {
        for (const Rational& aa : {rat(0), rat(1), rat(-1), rat(1, 2), rat(-3)}) {
            CanonicalBlock b = lw_block(Family::LWbeta5, k);
            b.a = QuadScalar(aa);
            b.b = QuadScalar(rat(0));
            run(b);
        }
        for (const Rational& bb : {rat(1), rat(1, 2)}) {
            CanonicalBlock b = lw_block(Family::LWbeta5, k);
            b.a = QuadScalar(rat(0));
            b.b = QuadScalar(bb);
            run(b);
        }
    }
    return {4, "Lee-Weinberg correspondence + degenerate table", c.failed == 0, c.summary()};
}

// ---- criterion 5: cosquare similarity oracle --------------------------------------

CriterionResult criterion_cosquares(unsigned) {
    Check c;
    for (std::size_t k = 1; k <= 6; ++k) {
        RatMat g = gamma(k);
        RatMat cos = *inverse(g.transpose()) * g;
        c.expect(check_similarity(cos, jordan(k, rat(k % 2 == 1 ? 1 : -1))),
                 "Gamma cosquare k=" + std::to_string(k));
    }
    for (std::size_t k = 1; k <= 6; ++k)
        for (const Rational& mu : {rat(2), rat(1, 2), rat(-3)}) {
            RatMat h = h_block(k, mu);
            RatMat cos = *inverse(h.transpose()) * h;
            RatMat want = direct_sum(jordan(k, mu), jordan(k, Rational(1 / mu)));
            c.expect(check_similarity(cos, want), "H cosquare k=" + std::to_string(k));
        }
    for (std::size_t k = 1; k <= 4; ++k) {
        Gaussian mu(rat(1, 2), rat(1));  // (1+2i)/2
        GaussMat h = h_block(k, mu);
        GaussMat cos = *inverse(h.conj_transpose()) * h;
        GaussMat want =
            direct_sum(jordan(k, mu), jordan(k, Gaussian(rat(1)) / mu.conj()));
        c.expect(check_similarity(cos, want), "H *cosquare k=" + std::to_string(k));
    }
    return {5, "cosquare similarity oracle", c.failed == 0, c.summary()};
}

// ---- criterion 6: realification ----------------------------------------------------

CriterionResult criterion_realify(unsigned seed) {
    Check c;
    std::mt19937 rng(seed + 4242);
    for (int t = 0; t < 100; ++t) {
        const std::size_t nblocks = 1 + rng() % 3;
        std::vector<RatMat> as, bs;
        std::vector<Gaussian> scales;
        const Gaussian pool[] = {Gaussian(rat(0), rat(1)), Gaussian(rat(1), rat(1)),
                                 Gaussian(rat(2), rat(-1)), Gaussian(rat(1))};
        for (std::size_t i = 0; i < nblocks; ++i) {
            std::size_t n = 1 + rng() % 2;
            RatMat a(n, n), b(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t cc = 0; cc < n; ++cc) {
                    a(r, cc) = rat(static_cast<long>(rng() % 5) - 2);
                    b(r, cc) = rat(static_cast<long>(rng() % 5) - 2);
                }
            as.push_back(a);
            bs.push_back(b);
            scales.push_back(pool[rng() % 4]);
        }
        RatMat A(0, 0), B(0, 0);
        GaussMat R(0, 0), S(0, 0);
        for (std::size_t i = 0; i < nblocks; ++i) {
            A = direct_sum(A, as[i]);
            B = direct_sum(B, bs[i]);
            GaussMat ri = scales[i] * to_gaussian(RatMat::identity(as[i].rows()));
            R = direct_sum(R, ri);
            S = direct_sum(S, ri);
        }
        const std::size_t n = A.rows();
        RatMat u = random_unimodular(rng, n), v = random_unimodular(rng, n);
        // premise: R' (A', B') = (C, D) S' with A' = A, C = u A v etc.
        RatMat C = u * A * v, D = u * B * v;
        GaussMat Rp = to_gaussian(u) * R;
        GaussMat Sp = *inverse(to_gaussian(v)) * S;
        // R' A = u R A = u A S ... verify premise explicitly before the call:
        // u R A = C v^{-1} S v? Keep the honest construction: R'(A,B) = (C,D)S'
        // holds because R A = A S blockwise (scalar blocks commute).
        try {
            RealifyResult res = realify_equivalence(Rp, Sp, A, B, C, D);
            bool exact = res.r * A == C * res.s && res.r * B == D * res.s;
            c.expect(exact, "realified pair satisfies the equivalence");
            c.expect(res.candidates_tried <= static_cast<long>(2 * n) + 1,
                     "tau found within the degree bound");
        } catch (const std::exception& e) {
            c.expect(false, std::string("realify threw: ") + e.what());
        }
    }
    return {6, "realification of complex equivalences", c.failed == 0, c.summary()};
}

// ---- criterion 7: Z-stack nullity lemma --------------------------------------------

CriterionResult criterion_zstack(unsigned seed) {
    Check c;
    std::mt19937 rng(seed + 777);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + rng() % 3;
        std::size_t k = 2 + rng() % 3;
        GaussMat a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = Gaussian(rat(static_cast<long>(rng() % 5) - 2),
                                   rat(static_cast<long>(rng() % 3) - 1));
                b(i, j) = Gaussian(rat(static_cast<long>(rng() % 5) - 2),
                                   rat(static_cast<long>(rng() % 3) - 1));
            }
        if (determinant(b).is_zero()) continue;
        try {
            z_block_nullity(a, b, k);  // asserts the iff internally
            c.expect(true, "");
        } catch (const std::logic_error& e) {
            c.expect(false, std::string("iff violated: ") + e.what());
        }
        ++done;
    }
    // the two beta-proof instances
    {
        GaussMat a(2, 2), b(2, 2);
        a(0, 0) = Gaussian(rat(1));
        a(0, 1) = -Gaussian::i();
        a(1, 0) = Gaussian::i();
        a(1, 1) = Gaussian(rat(1));
        b(0, 1) = Gaussian(rat(-1));
        b(1, 0) = Gaussian(rat(1));
        ZBlockReport rep = z_block_nullity(a, b, 2);
        c.expect(rep.z_nullity == 1 && rep.a_nullity == 1 && rep.intersection_trivial,
                 "beta4 proof instance");
    }
    {
        GaussMat a(2, 2), b(2, 2);
        a(0, 0) = Gaussian(rat(1));
        a(0, 1) = Gaussian::i();
        a(1, 0) = Gaussian::i();
        a(1, 1) = Gaussian(rat(-1));
        b(0, 1) = Gaussian(rat(1));
        b(1, 0) = Gaussian(rat(1));
        ZBlockReport rep = z_block_nullity(a, b, 2);
        c.expect(rep.z_nullity == 1 && rep.a_nullity == 1 && rep.intersection_trivial,
                 "beta5 proof instance");
    }
    return {7, "Z-stack nullity criterion", c.failed == 0, c.summary()};
}

// ---- criterion 8: rotation-parameter recovery --------------------------------------

CriterionResult criterion_recovery(unsigned) {
    Check c;
    const std::vector<std::pair<Rational, Rational>> grid = {
        {rat(3, 5), rat(4, 5)}, {rat(5, 13), rat(12, 13)}, {rat(8, 17), rat(15, 17)}};
    for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& [a, b] : grid)
            for (int sa : {1, -1}) {
                Rational aa = sa * a;
                Rational cc = aa * aa - b * b;
                if (k % 2 == 0) cc = -cc;
                Rational dd = 2 * abs_val(aa * b);
                // invert
                Rational cfix = k % 2 == 0 ? Rational(-cc) : cc;
                Rational s = (1 + cfix) / 2;
                QuadScalar arec = QuadScalar::sqrt_of(s);
                QuadScalar brec = QuadScalar(dd) / (QuadScalar(rat(2)) * arec);
                c.expect(arec == QuadScalar(abs_val(aa)), "recovered |a|");
                c.expect(brec == QuadScalar(b), "recovered b");
                c.expect((-arec) == QuadScalar(Rational(-abs_val(aa))), "both signs enumerable");
            }
    return {8, "rotation parameter recovery", c.failed == 0, c.summary()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed, int jobs) {
    using Fn = CriterionResult (*)(unsigned);
    const std::vector<Fn> fns = {criterion_tables,   criterion_witnesses, criterion_roundtrip,
                                 criterion_lw,       criterion_cosquares, criterion_realify,
                                 criterion_zstack,   criterion_recovery};
    std::vector<CriterionResult> out(fns.size());
    if (jobs > 1) {
        std::vector<std::future<CriterionResult>> futs;
        for (Fn fn : fns) futs.push_back(std::async(std::launch::async, fn, seed));
        for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < fns.size(); ++i) out[i] = fns[i](seed);
    }
    return out;
}

}  // namespace realcong
