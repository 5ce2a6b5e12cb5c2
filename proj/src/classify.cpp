#include "realcong/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "realcong/verify.hpp"

namespace realcong {

namespace {

int eps_of(std::size_t k) { return (k % 4 == 1 || k % 4 == 2) ? 1 : -1; }

struct NotRealizable : std::invalid_argument {
    NotRealizable() : std::invalid_argument("not realizable as a real congruence class") {}
};

}  // namespace

void CanonicalForm::normalize_order() {
    if (flags.size() != blocks.size()) flags.resize(blocks.size(), Ambiguity::None);
    std::vector<std::size_t> idx(blocks.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        int c = compare(blocks[x], blocks[y]);
        return c != 0 ? c < 0 : x < y;
    });
    std::vector<CanonicalBlock> nb;
    std::vector<Ambiguity> nf;
    for (std::size_t i : idx) {
        nb.push_back(blocks[i]);
        nf.push_back(flags[i]);
    }
    blocks = std::move(nb);
    flags = std::move(nf);
}

std::size_t CanonicalForm::total_size() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

std::string CanonicalForm::to_spec() const {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "+";
        s += blocks[i].to_spec();
    }
    return s;
}

std::vector<std::size_t> CanonicalForm::ambiguous_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i] != Ambiguity::None) out.push_back(i);
    return out;
}

namespace {

CanonicalBlock flip_ambiguous(const CanonicalBlock& b) {
    CanonicalBlock f = b;
    if (f.N && !f.N->rotation)
        f.N->sign = -f.N->sign;
    else if (f.N && f.N->rotation)
        f.N->a = -f.N->a;
    return f;
}

bool blocks_compatible(const CanonicalBlock& x, Ambiguity fx, const CanonicalBlock& y,
                       Ambiguity fy) {
    if (x == y) return true;
    if (fx == Ambiguity::None && fy == Ambiguity::None) return false;
    return flip_ambiguous(x) == y;
}

// Small bipartite perfect matching (augmenting paths).
bool perfect_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t ny) {
    std::vector<long> match_y(ny, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> try_kuhn = [&](std::size_t x) {
        for (std::size_t y : adj[x]) {
            if (seen[y]) continue;
            seen[y] = 1;
            if (match_y[y] < 0 || try_kuhn(static_cast<std::size_t>(match_y[y]))) {
                match_y[y] = static_cast<long>(x);
                return true;
            }
        }
        return false;
    };
    for (std::size_t x = 0; x < adj.size(); ++x) {
        seen.assign(ny, 0);
        if (!try_kuhn(x)) return false;
    }
    return true;
}

}  // namespace

bool equal_up_to_ambiguity(const CanonicalForm& x, const CanonicalForm& y) {
    if (x.kind != y.kind || x.blocks.size() != y.blocks.size()) return false;
    std::vector<std::vector<std::size_t>> adj(x.blocks.size());
    for (std::size_t i = 0; i < x.blocks.size(); ++i)
        for (std::size_t j = 0; j < y.blocks.size(); ++j) {
            Ambiguity fx = i < x.flags.size() ? x.flags[i] : Ambiguity::None;
            Ambiguity fy = j < y.flags.size() ? y.flags[j] : Ambiguity::None;
            if (blocks_compatible(x.blocks[i], fx, y.blocks[j], fy)) adj[i].push_back(j);
        }
    return perfect_matching(adj, y.blocks.size());
}

// ---- classify ------------------------------------------------------------------

namespace {

struct RealEntry {
    QuadScalar mu;
    std::size_t k;
    bool used = false;
};

struct ComplexEntry {
    QuadScalar a, b;
    std::size_t k;
    bool used = false;
};

CanonicalForm invert_table(const RealKcf& kcf) {
    CanonicalForm form;
    form.kind = FormKind::Form1;
    auto push = [&](CanonicalBlock b, Ambiguity f) {
        form.blocks.push_back(std::move(b));
        form.flags.push_back(f);
    };

    // (i) singular part: right/left minimal indices pair into odd J-blocks.
    std::vector<std::size_t> right = kcf.right_minimal, left = kcf.left_minimal;
    std::sort(right.begin(), right.end());
    std::sort(left.begin(), left.end());
    if (right != left) throw NotRealizable();
    for (std::size_t l : right) {
        CanonicalBlock b;
        b.family = Family::R1i;
        b.k = 2 * l + 1;
        push(b, Ambiguity::None);
    }

    std::vector<RealEntry> real;
    for (const auto& [mu, k] : kcf.real_jordan) real.push_back({mu, k});
    std::vector<ComplexEntry> cplx;
    for (const auto& [a, b, k] : kcf.complex_jordan) cplx.push_back({a, b, k});

    // (ii) infinite blocks pair with zero Jordan blocks into even J-blocks.
    std::vector<std::size_t> inf = kcf.infinite;
    std::sort(inf.begin(), inf.end());
    for (std::size_t l : inf) {
        bool found = false;
        for (auto& e : real)
            if (!e.used && e.k == l && e.mu.is_zero()) {
                e.used = found = true;
                break;
            }
        if (!found) throw NotRealizable();
        CanonicalBlock b;
        b.family = Family::R1i;
        b.k = 2 * l;
        push(b, Ambiguity::None);
    }
    for (const auto& e : real)
        if (!e.used && e.mu.is_zero()) throw NotRealizable();

    // (iii) unimodular real eigenvalues: (-1)^{k+1} gives Gamma_k (x) [+-1]
    // (sign open); (-1)^k must pair up into Gamma_k (x) C(0,1).
    const QuadScalar one(rat(1));
    for (auto& e : real) {
        if (e.used || !(e.mu == one || e.mu == QuadScalar(rat(-1)))) continue;
        const bool is_plus = e.mu == one;
        const bool matches_gamma = is_plus == (e.k % 2 == 1);
        if (matches_gamma) {
            e.used = true;
            CanonicalBlock b;
            b.family = Family::R1ii;
            b.k = e.k;
            b.N = NParam::plus1();
            push(b, Ambiguity::SignOfN);
        } else {
            // find a partner of the same (mu, k)
            RealEntry* partner = nullptr;
            for (auto& o : real)
                if (&o != &e && !o.used && o.k == e.k && o.mu == e.mu) {
                    partner = &o;
                    break;
                }
            if (!partner) throw NotRealizable();
            e.used = partner->used = true;
            CanonicalBlock b;
            b.family = Family::R1ii;
            b.k = e.k;
            b.N = NParam::rot(QuadScalar(rat(0)), QuadScalar(rat(1)));
            push(b, Ambiguity::None);
        }
    }

    // (iv) remaining real eigenvalues pair mu with 1/mu into H-blocks.
    for (auto& e : real) {
        if (e.used) continue;
        QuadScalar inv = e.mu.inverse();
        RealEntry* partner = nullptr;
        for (auto& o : real)
            if (&o != &e && !o.used && o.k == e.k && o.mu == inv) {
                partner = &o;
                break;
            }
        if (!partner) throw NotRealizable();
        e.used = partner->used = true;
        CanonicalBlock b;
        b.family = Family::R1iii;
        b.k = e.k;
        b.a = (e.mu.abs() - one).sign() < 0 ? e.mu : inv;
        push(b, Ambiguity::None);
    }

    // (v) complex pairs: unit circle -> Gamma_k (x) C(a,b) via the recovery
    // formulas (sign of a open); otherwise pair with the Moebius partner.
    for (auto& e : cplx) {
        if (e.used) continue;
        QuadScalar nrm = e.a.squared() + e.b.squared();
        if (nrm == one) {
            e.used = true;
            if (!e.a.is_rational())
                throw UnsupportedExact(
                    "unit-circle pair with irrational real part is outside the exact scope");
            Rational c = e.a.as_rational();
            if (e.k % 2 == 0) c = -c;  // (-1)^{k+1} c
            Rational s = (1 + c) / 2;
            if (sgn(s) <= 0) throw NotRealizable();
            QuadScalar a = QuadScalar::sqrt_of(s);
            QuadScalar b = e.b / (QuadScalar(rat(2)) * a);
            if (!(a.squared() + b.squared() == one))
                throw std::logic_error("recovered rotation parameters do not lie on the circle");
            CanonicalBlock blk;
            blk.family = Family::R1ii;
            blk.k = e.k;
            blk.N = NParam::rot(a, b);
            push(blk, Ambiguity::SignOfA);
        } else {
            QuadScalar pa = e.a / nrm, pb = e.b / nrm;
            ComplexEntry* partner = nullptr;
            for (auto& o : cplx)
                if (&o != &e && !o.used && o.k == e.k && o.a == pa && o.b == pb) {
                    partner = &o;
                    break;
                }
            if (!partner) throw NotRealizable();
            e.used = partner->used = true;
            CanonicalBlock blk;
            blk.family = Family::R1iv;
            blk.k = e.k;
            const bool inside = (nrm - one).sign() < 0;
            blk.a = inside ? e.a : pa;
            blk.b = inside ? e.b : pb;
            push(blk, Ambiguity::None);
        }
    }
    form.normalize_order();
    return form;
}

bool form_has_irrational(const CanonicalForm& f) {
    for (const auto& b : f.blocks) {
        if (b.a && !b.a->is_rational()) return true;
        if (b.b && !b.b->is_rational()) return true;
        if (b.N && b.N->rotation && (!b.N->a.is_rational() || !b.N->b.is_rational())) return true;
    }
    return false;
}

}  // namespace

CanonicalForm classify_form1(const RatMat& a) {
    if (!a.is_square()) throw std::invalid_argument("classify_form1: matrix must be square");
    RealKcf kcf = real_kcf(a.transpose(), a);
    CanonicalForm form = invert_table(kcf);
    if (form.total_size() != a.rows())
        throw std::logic_error("classification lost size bookkeeping");
    return resolve_signs(a, std::move(form));
}

CanonicalForm resolve_signs(const RatMat& a, CanonicalForm form) {
    std::vector<std::size_t> amb = form.ambiguous_indices();
    if (amb.empty()) return form;
    if (form_has_irrational(form)) {
        form.diagnostics.push_back(
            "sign resolution skipped: parameters outside the rationals cannot be realized "
            "exactly");
        return form;
    }
    if (amb.size() > 12) {
        form.diagnostics.push_back("sign resolution skipped: more than 2^12 assignments");
        return form;
    }
    const std::size_t n = a.rows();
    const std::vector<Inertia> target = congruence_invariant_profile(a, n);

    std::vector<CanonicalForm> survivors;
    std::set<std::string> seen;
    const std::size_t total = std::size_t(1) << amb.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        CanonicalForm cand = form;
        for (std::size_t i = 0; i < amb.size(); ++i)
            if (mask & (std::size_t(1) << i))
                cand.blocks[amb[i]] = flip_ambiguous(cand.blocks[amb[i]]);
        cand.normalize_order();
        if (!seen.insert(cand.to_spec()).second) continue;
        RatMat m = realize_form_matrix(cand.blocks);
        if (congruence_invariant_profile(m, n) == target) survivors.push_back(std::move(cand));
    }
    if (survivors.empty())
        throw std::logic_error("sign resolution: no candidate matches the invariant profile");
    if (survivors.size() == 1) {
        CanonicalForm out = survivors.front();
        out.flags.assign(out.blocks.size(), Ambiguity::None);
        out.diagnostics = form.diagnostics;
        return out;
    }
    CanonicalForm out = survivors.front();
    out.diagnostics = form.diagnostics;
    std::ostringstream os;
    os << "sign resolution inconclusive; surviving assignments:";
    for (const auto& s : survivors) os << " [" << s.to_spec() << "]";
    out.diagnostics.push_back(os.str());
    return out;
}

// ---- conversions -----------------------------------------------------------------

namespace {

QuadScalar normalize_inside_unit(const QuadScalar& a) {
    return (a.abs() - QuadScalar(rat(1))).sign() < 0 ? a : a.inverse();
}

}  // namespace

CanonicalForm form1_to_form2(const CanonicalForm& f) {
    if (f.kind != FormKind::Form1)
        throw std::invalid_argument("form1_to_form2: input is not a Form1 form");
    CanonicalForm out;
    out.kind = FormKind::Form2;
    out.diagnostics = f.diagnostics;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const CanonicalBlock& b = f.blocks[i];
        Ambiguity flag = i < f.flags.size() ? f.flags[i] : Ambiguity::None;
        CanonicalBlock n;
        switch (b.family) {
            case Family::R1i:
                n.family = Family::R2TriI;
                n.k = b.k;
                n.a = QuadScalar(rat(0));
                break;
            case Family::R1ii: {
                n.family = Family::R2TriIII;
                n.k = b.k;
                const int e = eps_of(b.k);
                if (b.N->rotation)
                    n.N = NParam::rot(e < 0 ? -b.N->a : b.N->a, b.N->b);
                else
                    n.N = b.N->sign * e > 0 ? NParam::plus1() : NParam::minus1();
                break;
            }
            case Family::R1iii:
                n.family = Family::R2TriI;
                n.k = 2 * b.k;
                n.a = b.a;
                break;
            case Family::R1iv:
                n.family = Family::R2TriII;
                n.k = b.k;
                n.a = b.a;
                n.b = b.b;
                break;
            default: throw std::invalid_argument("form1_to_form2: non-Form1 block");
        }
        out.blocks.push_back(std::move(n));
        out.flags.push_back(flag);
    }
    out.normalize_order();
    return out;
}

CanonicalForm form2_to_form1(const CanonicalForm& f) {
    if (f.kind != FormKind::Form2)
        throw std::invalid_argument("form2_to_form1: input is not a Form2 form");
    CanonicalForm out;
    out.kind = FormKind::Form1;
    out.diagnostics = f.diagnostics;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const CanonicalBlock& b = f.blocks[i];
        Ambiguity flag = i < f.flags.size() ? f.flags[i] : Ambiguity::None;
        CanonicalBlock n;
        switch (b.family) {
            case Family::R2TriI: {
                if (b.a->is_zero()) {
                    n.family = Family::R1i;
                    n.k = b.k;
                } else {
                    if (b.k % 2 != 0) throw std::invalid_argument("R2TriI: odd k needs a = 0");
                    n.family = Family::R1iii;
                    n.k = b.k / 2;
                    n.a = normalize_inside_unit(*b.a);
                }
                break;
            }
            case Family::R2TriII:
                n.family = Family::R1iv;
                n.k = b.k;
                n.a = b.a;
                n.b = b.b;
                break;
            case Family::R2TriIII: {
                n.family = Family::R1ii;
                n.k = b.k;
                const int e = eps_of(b.k);
                if (b.N->rotation)
                    n.N = NParam::rot(e < 0 ? -b.N->a : b.N->a, b.N->b);
                else
                    n.N = b.N->sign * e > 0 ? NParam::plus1() : NParam::minus1();
                break;
            }
            default: throw std::invalid_argument("form2_to_form1: non-Form2 block");
        }
        out.blocks.push_back(std::move(n));
        out.flags.push_back(flag);
    }
    out.normalize_order();
    return out;
}

CanonicalForm classify_form2(const RatMat& a) { return form1_to_form2(classify_form1(a)); }

CanonicalForm hs_to_fhs(const CanonicalForm& f) {
    if (f.kind != FormKind::HS) throw std::invalid_argument("hs_to_fhs: input is not an HS form");
    CanonicalForm out;
    out.kind = FormKind::FHS;
    out.diagnostics = f.diagnostics;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const CanonicalBlock& b = f.blocks[i];
        Ambiguity flag = i < f.flags.size() ? f.flags[i] : Ambiguity::None;
        CanonicalBlock n;
        switch (b.family) {
            case Family::HSType0:
                n.family = Family::FHSTriI;
                n.k = b.k;
                n.mu = Gaussian(rat(0));
                break;
            case Family::HSTypeI: {
                n.family = Family::FHSTriII;
                n.k = b.k;
                n.mu = eps_of(b.k) < 0 ? -*b.mu : *b.mu;
                break;
            }
            case Family::HSTypeII:
                n.family = Family::FHSTriI;
                n.k = 2 * b.k;
                n.mu = b.mu;
                break;
            default: throw std::invalid_argument("hs_to_fhs: non-HS block");
        }
        out.blocks.push_back(std::move(n));
        out.flags.push_back(flag);
    }
    out.normalize_order();
    return out;
}

// ---- Lee-Weinberg table ------------------------------------------------------------

namespace {

CanonicalBlock gamma_sign_block(std::size_t k, int sign) {
    CanonicalBlock b;
    b.family = Family::R1ii;
    b.k = k;
    b.N = sign > 0 ? NParam::plus1() : NParam::minus1();
    return b;
}

CanonicalBlock gamma_rot_block(std::size_t k, QuadScalar a, QuadScalar b) {
    CanonicalBlock blk;
    blk.family = Family::R1ii;
    blk.k = k;
    blk.N = NParam::rot(std::move(a), std::move(b));
    return blk;
}

}  // namespace

CanonicalForm lw_to_form1(const CanonicalBlock& blk, bool allow_degenerate) {
    blk.validate(allow_degenerate);
    CanonicalForm out;
    out.kind = FormKind::Form1;
    auto push = [&](CanonicalBlock b, Ambiguity f) {
        out.blocks.push_back(std::move(b));
        out.flags.push_back(f);
    };
    switch (blk.family) {
        case Family::LWm3: {
            CanonicalBlock b;
            b.family = Family::R1i;
            b.k = 2 * blk.k + 1;
            push(b, Ambiguity::None);
            break;
        }
        case Family::LWinf4: {
            int s = blk.eps * ((blk.k / 2 + 1) % 2 == 0 ? 1 : -1);
            push(gamma_sign_block(blk.k, s), Ambiguity::None);
            break;
        }
        case Family::LWinf5:
            push(gamma_rot_block(blk.k, QuadScalar(rat(0)), QuadScalar(rat(1))), Ambiguity::None);
            break;
        case Family::LWo3: {
            int s = blk.eps * (((blk.k - 1) / 2) % 2 == 0 ? 1 : -1);
            push(gamma_sign_block(blk.k, s), Ambiguity::None);
            break;
        }
        case Family::LWo4:
            push(gamma_rot_block(blk.k, QuadScalar(rat(0)), QuadScalar(rat(1))), Ambiguity::None);
            break;
        case Family::LWalpha3: {
            if (*blk.alpha == 1) {
                CanonicalBlock b;
                b.family = Family::R1i;
                b.k = 2 * blk.k;
                push(b, Ambiguity::None);
            } else {
                CanonicalBlock b;
                b.family = Family::R1iii;
                b.k = blk.k;
                b.a = QuadScalar(Rational((1 - *blk.alpha) / (1 + *blk.alpha)));
                push(b, Ambiguity::None);
            }
            break;
        }
        case Family::LWbeta4: {
            Rational bb = blk.b->as_rational();
            if (sgn(bb) == 0) {
                // degenerate b = 0
                if (blk.k % 2 == 0) {
                    push(gamma_rot_block(blk.k, QuadScalar(rat(0)), QuadScalar(rat(1))),
                         Ambiguity::None);
                } else {
                    const std::size_t l = (blk.k - 1) / 2;
                    int s = blk.eps * (l % 2 == 0 ? 1 : -1);
                    push(gamma_sign_block(blk.k, s), Ambiguity::None);
                    push(gamma_sign_block(blk.k, s), Ambiguity::None);
                }
                break;
            }
            Rational den = 1 + bb * bb;
            QuadScalar inv_sqrt = QuadScalar::sqrt_of(Rational(1 / den));
            QuadScalar amp = QuadScalar(abs_val(bb)) * inv_sqrt;
            if (blk.k % 2 == 0)
                push(gamma_rot_block(blk.k, amp, inv_sqrt), Ambiguity::SignOfA);
            else
                push(gamma_rot_block(blk.k, inv_sqrt, amp), Ambiguity::SignOfA);
            break;
        }
        case Family::LWbeta5: {
            Rational a = blk.a->as_rational(), b = blk.b->as_rational();
            if (sgn(b) == 0 && sgn(a) == 0) {
                if (blk.k % 2 == 0) {
                    push(gamma_rot_block(blk.k, QuadScalar(rat(0)), QuadScalar(rat(1))),
                         Ambiguity::None);
                    push(gamma_rot_block(blk.k, QuadScalar(rat(0)), QuadScalar(rat(1))),
                         Ambiguity::None);
                } else {
                    push(gamma_sign_block(blk.k, 1), Ambiguity::None);
                    push(gamma_sign_block(blk.k, 1), Ambiguity::None);
                    push(gamma_sign_block(blk.k, -1), Ambiguity::None);
                    push(gamma_sign_block(blk.k, -1), Ambiguity::None);
                }
                break;
            }
            if (sgn(b) == 0) {
                Rational aa = abs_val(a);
                if (aa == 1) {
                    CanonicalBlock j;
                    j.family = Family::R1i;
                    j.k = 2 * blk.k;
                    push(j, Ambiguity::None);
                    push(j, Ambiguity::None);
                } else {
                    CanonicalBlock h;
                    h.family = Family::R1iii;
                    h.k = blk.k;
                    h.a = QuadScalar(Rational((1 - aa) / (1 + aa)));
                    push(h, Ambiguity::None);
                    push(h, Ambiguity::None);
                }
                break;
            }
            if (sgn(a) == 0) {
                Rational den = 1 + b * b;
                QuadScalar inv_sqrt = QuadScalar::sqrt_of(Rational(1 / den));
                QuadScalar amp = QuadScalar(abs_val(b)) * inv_sqrt;
                for (int copy = 0; copy < 2; ++copy) {
                    if (blk.k % 2 == 0)
                        push(gamma_rot_block(blk.k, amp, inv_sqrt), Ambiguity::SignOfA);
                    else
                        push(gamma_rot_block(blk.k, inv_sqrt, amp), Ambiguity::SignOfA);
                }
                break;
            }
            Rational s = a * a + b * b;
            Rational den = (1 + abs_val(a)) * (1 + abs_val(a)) + b * b;
            CanonicalBlock h;
            h.family = Family::R1iv;
            h.k = blk.k;
            h.a = QuadScalar(Rational((1 - s) / den));
            h.b = QuadScalar(Rational(2 * abs_val(b) / den));
            push(h, Ambiguity::None);
            break;
        }
        default: throw std::invalid_argument("lw_to_form1: not a Lee-Weinberg block");
    }
    out.normalize_order();
    return out;
}

// ---- consistency -------------------------------------------------------------------

namespace {

bool beta4_pencil_fact(const CanonicalBlock& blk, std::string& detail) {
    Rational b = abs_val(blk.b->as_rational());
    RatMat m = realize_rational(blk);
    RealKcf got = real_kcf(m.transpose(), m);
    RealKcf want;
    Rational den = 1 + b * b;
    want.complex_jordan.emplace_back(QuadScalar(Rational((1 - b * b) / den)),
                                     QuadScalar(Rational(2 * b / den)), blk.k);
    if (!kcf_equal(got, want)) {
        detail += "beta4 pencil parameters differ from ((1-b^2)/(1+b^2), 2b/(1+b^2)); ";
        return false;
    }
    if (blk.k >= 2) {
        // geometric multiplicity 1 via the Z-stack criterion at lambda_1
        Gaussian lam1 = Gaussian(b, rat(1)) / Gaussian(b, rat(-1));
        GaussMat R(2, 2), S(2, 2);
        R(0, 0) = Gaussian(rat(1));
        R(0, 1) = Gaussian(b);
        R(1, 0) = Gaussian(-b);
        R(1, 1) = Gaussian(rat(1));
        S(0, 1) = Gaussian(rat(1));
        S(1, 0) = Gaussian(rat(-1));
        GaussMat A = lam1 * R.transpose() + R;
        GaussMat B = (lam1 - Gaussian(rat(1))) * S.transpose();
        ZBlockReport rep = z_block_nullity(A, B, blk.k);
        if (!(rep.z_nullity == rep.a_nullity && rep.a_nullity == 1 && rep.intersection_trivial)) {
            detail += "beta4 geometric multiplicity is not 1; ";
            return false;
        }
    }
    return true;
}

bool beta5_pencil_fact(const CanonicalBlock& blk, std::string& detail) {
    Rational a = blk.a->as_rational(), b = blk.b->as_rational();
    RatMat m = realize_rational(blk);
    RealKcf got = real_kcf(m.transpose(), m);
    RealKcf want;
    Rational s = a * a + b * b;
    Rational dminus = (a - 1) * (a - 1) + b * b;
    Rational dplus = (a + 1) * (a + 1) + b * b;
    want.complex_jordan.emplace_back(QuadScalar(Rational((1 - s) / dminus)),
                                     QuadScalar(Rational(2 * abs_val(b) / dminus)), blk.k);
    want.complex_jordan.emplace_back(QuadScalar(Rational((1 - s) / dplus)),
                                     QuadScalar(Rational(2 * abs_val(b) / dplus)), blk.k);
    if (!kcf_equal(got, want)) {
        detail += "beta5 pencil pair differs from the Moebius-partner pair; ";
        return false;
    }
    if (blk.k >= 2) {
        Gaussian lam1 = Gaussian(a + 1, -b) / Gaussian(a - 1, -b);
        GaussMat T(2, 2), Rp(2, 2), Sp(2, 2);
        T(0, 0) = Gaussian(b);
        T(0, 1) = Gaussian(a - 1);
        T(1, 0) = Gaussian(a - 1);
        T(1, 1) = Gaussian(-b);
        Rp(0, 0) = Gaussian(b);
        Rp(0, 1) = Gaussian(a + 1);
        Rp(1, 0) = Gaussian(a + 1);
        Rp(1, 1) = Gaussian(-b);
        Sp(0, 1) = Gaussian(rat(1));
        Sp(1, 0) = Gaussian(rat(1));
        GaussMat A = Rp - lam1 * T;
        GaussMat B = (Gaussian(rat(1)) - lam1) * Sp;
        ZBlockReport rep = z_block_nullity(A, B, blk.k);
        if (!(rep.z_nullity == rep.a_nullity && rep.a_nullity == 1 && rep.intersection_trivial)) {
            detail += "beta5 geometric multiplicity is not 1; ";
            return false;
        }
    }
    return true;
}

bool alpha3_similarity_fact(const CanonicalBlock& blk, std::string& detail) {
    const Rational alpha = *blk.alpha;
    RatMat jp = jordan(blk.k, Rational(alpha + 1));
    RatMat jm = jordan(blk.k, Rational(alpha - 1));
    RatMat c = -(*inverse(jp) * jm);
    if (!check_similarity(c, jordan(blk.k, Rational((1 - alpha) / (1 + alpha))))) {
        detail += "alpha3 cosquare is not similar to the expected Jordan block; ";
        return false;
    }
    return true;
}

}  // namespace

ConsistencyReport classify_lw_consistency(const CanonicalBlock& blk) {
    ConsistencyReport rep;
    bool deg = false;
    if (blk.family == Family::LWbeta4) deg = blk.b->sign() == 0;
    if (blk.family == Family::LWbeta5) deg = blk.a->sign() == 0 || blk.b->sign() == 0;
    RatMat m = realize_rational(blk, deg);
    CanonicalForm got = classify_form1(m);
    CanonicalForm want = lw_to_form1(blk, deg);
    std::string detail;
    bool ok = equal_up_to_ambiguity(got, want);
    if (!ok)
        detail += "classified [" + got.to_spec() + "] differs from table image [" +
                  want.to_spec() + "]; ";
    if (blk.family == Family::LWbeta4 && !deg) ok = beta4_pencil_fact(blk, detail) && ok;
    if (blk.family == Family::LWbeta5 && !deg) ok = beta5_pencil_fact(blk, detail) && ok;
    if (blk.family == Family::LWalpha3) ok = alpha3_similarity_fact(blk, detail) && ok;
    rep.consistent = ok;
    rep.details = ok ? "consistent" : detail;
    return rep;
}

}  // namespace realcong
