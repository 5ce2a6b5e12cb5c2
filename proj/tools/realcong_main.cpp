#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "realcong/acceptance.hpp"
#include "realcong/classify.hpp"
#include "realcong/matcore.hpp"
#include "realcong/pencil.hpp"
#include "realcong/verify.hpp"
#include "realcong/witnesses.hpp"

namespace {

using realcong::Backend;
using realcong::CanonicalBlock;
using realcong::CanonicalForm;
using realcong::ExactMatrix;
using realcong::Gaussian;
using realcong::Rational;
using realcong::Witness;
using json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ExactMatrix load_matrix(const std::string& path) {
    return ExactMatrix::from_json_text(read_file(path));
}

json matrix_json(const ExactMatrix& m) { return json::parse(m.to_json()); }

json witness_record(const Witness& w) {
    json j;
    j["name"] = w.name;
    j["relation"] = realcong::relation_name(w.relation);
    j["scale"] = realcong::rat_to_string(w.scale);
    const bool real_data = realcong::is_real(w.transform) && realcong::is_real(w.source_a) &&
                           realcong::is_real(w.target_a);
    auto emit = [&](const realcong::GaussMat& g) {
        if (real_data) return matrix_json(ExactMatrix{realcong::real_part(g)});
        return matrix_json(ExactMatrix{g});
    };
    j["transform"] = emit(w.transform);
    if (w.right) j["transform-right"] = emit(*w.right);
    j["source"] = emit(w.source_a);
    j["target"] = emit(w.target_a);
    j["verified"] = realcong::check_witness(w);
    return j;
}

json form_record(const CanonicalForm& f) {
    json j;
    json blocks = json::array();
    for (const auto& b : f.blocks) blocks.push_back(b.to_spec());
    j["blocks"] = std::move(blocks);
    j["ambiguous"] = f.ambiguous_indices();
    j["diagnostics"] = f.diagnostics;
    return j;
}

Gaussian parse_mu(const std::string& s) {
    auto g = realcong::parse_gaussian(s);
    if (g) return *g;
    auto r = realcong::parse_rational(s);
    if (!r) throw std::invalid_argument("bad scalar '" + s + "'");
    return Gaussian(*r);
}

Rational parse_rat_arg(const std::string& s) {
    auto r = realcong::parse_rational(s);
    if (!r) throw std::invalid_argument("bad rational '" + s + "'");
    return *r;
}

json tables_json() {
    using namespace realcong;
    json out;
    // HS block <-> FHS block (star congruence)
    json rel1 = json::array();
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const Gaussian& mu :
             {Gaussian(rat(1)), Gaussian(rat(-1)), Gaussian(rat(0), rat(1))}) {
            CanonicalForm f;
            f.kind = FormKind::HS;
            CanonicalBlock b;
            b.family = Family::HSTypeI;
            b.k = k;
            b.mu = mu;
            f.blocks = {b};
            f.flags = {Ambiguity::None};
            rel1.push_back({{"hs", b.to_spec()}, {"fhs", hs_to_fhs(f).to_spec()}});
        }
        CanonicalForm f0;
        f0.kind = FormKind::HS;
        CanonicalBlock b0;
        b0.family = Family::HSType0;
        b0.k = k;
        f0.blocks = {b0};
        f0.flags = {Ambiguity::None};
        rel1.push_back({{"hs", b0.to_spec()}, {"fhs", hs_to_fhs(f0).to_spec()}});
        CanonicalForm f2;
        f2.kind = FormKind::HS;
        CanonicalBlock b2;
        b2.family = Family::HSTypeII;
        b2.k = k;
        b2.mu = Gaussian(rat(2));
        f2.blocks = {b2};
        f2.flags = {Ambiguity::None};
        rel1.push_back({{"hs", b2.to_spec()}, {"fhs", hs_to_fhs(f2).to_spec()}});
    }
    out["hs-fhs"] = std::move(rel1);

    // first form <-> second form (real congruence)
    json rel2 = json::array();
    auto push2 = [&](CanonicalBlock b) {
        CanonicalForm f;
        f.kind = FormKind::Form1;
        f.blocks = {b};
        f.flags = {Ambiguity::None};
        rel2.push_back({{"form1", b.to_spec()}, {"form2", form1_to_form2(f).to_spec()}});
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        CanonicalBlock j1;
        j1.family = Family::R1i;
        j1.k = k;
        push2(j1);
        CanonicalBlock gp;
        gp.family = Family::R1ii;
        gp.k = k;
        gp.N = NParam::plus1();
        push2(gp);
        gp.N = NParam::minus1();
        push2(gp);
        CanonicalBlock gc;
        gc.family = Family::R1ii;
        gc.k = k;
        gc.N = NParam::rot(QuadScalar(rat(3, 5)), QuadScalar(rat(4, 5)));
        push2(gc);
        CanonicalBlock h;
        h.family = Family::R1iii;
        h.k = k;
        h.a = QuadScalar(rat(1, 2));
        push2(h);
        CanonicalBlock hh;
        hh.family = Family::R1iv;
        hh.k = k;
        hh.a = QuadScalar(rat(0));
        hh.b = QuadScalar(rat(1, 2));
        push2(hh);
    }
    out["form1-form2"] = std::move(rel2);

    // Lee-Weinberg -> first form
    json t1 = json::array();
    auto push_lw = [&](CanonicalBlock b, bool deg) {
        t1.push_back({{"lw", b.to_spec()}, {"form1", lw_to_form1(b, deg).to_spec()}});
    };
    for (std::size_t k = 0; k <= 3; ++k) {
        CanonicalBlock b;
        b.family = Family::LWm3;
        b.k = k;
        push_lw(b, false);
    }
    for (std::size_t k = 2; k <= 4; k += 2)
        for (int e : {1, -1}) {
            CanonicalBlock b;
            b.family = Family::LWinf4;
            b.k = k;
            b.eps = e;
            push_lw(b, false);
        }
    for (std::size_t k = 1; k <= 3; k += 2) {
        CanonicalBlock b5;
        b5.family = Family::LWinf5;
        b5.k = k;
        push_lw(b5, false);
        for (int e : {1, -1}) {
            CanonicalBlock b3;
            b3.family = Family::LWo3;
            b3.k = k;
            b3.eps = e;
            push_lw(b3, false);
        }
    }
    for (std::size_t k = 2; k <= 4; k += 2) {
        CanonicalBlock b;
        b.family = Family::LWo4;
        b.k = k;
        push_lw(b, false);
    }
    for (std::size_t k = 1; k <= 2; ++k)
        for (const Rational& al : {rat(1), rat(2)}) {
            CanonicalBlock b;
            b.family = Family::LWalpha3;
            b.k = k;
            b.alpha = al;
            push_lw(b, false);
        }
    for (std::size_t k = 1; k <= 2; ++k)
        for (const Rational& bb : {rat(1), rat(2)}) {
            CanonicalBlock b;
            b.family = Family::LWbeta4;
            b.k = k;
            b.b = QuadScalar(bb);
            push_lw(b, false);
        }
    for (std::size_t k = 1; k <= 2; ++k) {
        CanonicalBlock b;
        b.family = Family::LWbeta5;
        b.k = k;
        b.a = QuadScalar(rat(1));
        b.b = QuadScalar(rat(1));
        push_lw(b, false);
    }
    // degenerate variants
    json degen = json::array();
    auto push_deg = [&](CanonicalBlock b) {
        degen.push_back({{"lw", b.to_spec()}, {"form1", lw_to_form1(b, true).to_spec()}});
    };
    for (std::size_t k = 1; k <= 3; ++k) {
        CanonicalBlock b;
        b.family = Family::LWbeta4;
        b.k = k;
        b.b = QuadScalar(rat(0));
        push_deg(b);
    }
    for (std::size_t k = 1; k <= 2; ++k)
        for (const Rational& aa : {rat(0), rat(1), rat(1, 2)}) {
            CanonicalBlock b;
            b.family = Family::LWbeta5;
            b.k = k;
            b.a = QuadScalar(aa);
            b.b = QuadScalar(rat(0));
            push_deg(b);
        }
    out["lee-weinberg"] = std::move(t1);
    out["lee-weinberg-degenerate"] = std::move(degen);
    return out;
}

std::string tables_markdown(const json& t) {
    std::ostringstream os;
    auto emit = [&](const char* title, const json& rows, const char* lcol, const char* rcol) {
        os << "## " << title << "\n\n| " << lcol << " | " << rcol << " |\n|---|---|\n";
        for (const auto& row : rows)
            os << "| " << row.begin().value().get<std::string>() << " | "
               << std::next(row.begin()).value().get<std::string>() << " |\n";
        os << "\n";
    };
    emit("HS to FHS", t["hs-fhs"], "HS block", "FHS block");
    emit("First form to second form", t["form1-form2"], "form 1", "form 2");
    emit("Lee-Weinberg to first form", t["lee-weinberg"], "LW block", "form 1");
    emit("Degenerate Lee-Weinberg blocks", t["lee-weinberg-degenerate"], "LW block", "form 1");
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical forms of real matrices under real congruence"};
    app.require_subcommand(1);

    std::string spec, file_a, file_b, file_s, from, to, name, format = "json";
    int form = 1, mval = 3, jobs = 1;
    bool star = false, float_fallback = false;
    double tolerance = 1e-9;
    std::string k_arg = "1", mu_arg = "0+1i", a_arg = "0", b_arg = "1", alpha_arg = "1",
                eps_arg = "+1";

    auto* c_block = app.add_subcommand("block", "print the matrix of a block or form spec");
    c_block->add_option("spec", spec, "block spec, e.g. R1ii(k=2,N=+1)")->required();

    auto* c_canon = app.add_subcommand("canon", "canonical form of a real square matrix");
    c_canon->add_option("--form", form, "1 or 2")->check(CLI::Range(1, 2));
    c_canon->add_option("matrix", file_a, "matrix JSON file")->required();

    auto* c_convert = app.add_subcommand("convert", "convert between canonical forms");
    c_convert->add_option("--from", from)->required();
    c_convert->add_option("--to", to)->required();
    c_convert->add_option("spec", spec)->required();

    auto* c_kcf = app.add_subcommand("kcf", "real Kronecker structure of a pair (A, B)");
    c_kcf->add_option("A", file_a)->required();
    c_kcf->add_option("B", file_b)->required();
    c_kcf->add_flag("--float-fallback", float_fallback);
    c_kcf->add_option("--tolerance", tolerance);

    auto* c_wit = app.add_subcommand("witness", "print and check an explicit transformation");
    c_wit->add_option("name", name,
                      "one of W,U,V,PkSk,inf4,inf5,o3,o4,alpha3-flip,form1-step1,"
                      "form1-step2,bflip-C,bflip-Hhat,bflip-That,h-flip")
        ->required();
    c_wit->add_option("--k", k_arg);
    c_wit->add_option("--mu", mu_arg);
    c_wit->add_option("--a", a_arg);
    c_wit->add_option("--b", b_arg);
    c_wit->add_option("--alpha", alpha_arg);
    c_wit->add_option("--eps", eps_arg);

    auto* c_verify = app.add_subcommand("verify", "verification helpers");
    auto* v_cong = c_verify->add_subcommand("congruence", "check S A S^T == B (or S A S^* with --star)");
    v_cong->add_option("S", file_s)->required();
    v_cong->add_option("A", file_a)->required();
    v_cong->add_option("B", file_b)->required();
    v_cong->add_flag("--star", star);
    auto* v_prof = c_verify->add_subcommand("profile", "congruence-invariant inertia profile");
    v_prof->add_option("A", file_a)->required();
    v_prof->add_option("--m", mval);

    auto* c_tables = app.add_subcommand("tables", "emit the correspondence tables on a grid");
    c_tables->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));

    auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
    c_self->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_block) {
            auto blocks = realcong::parse_form_spec(spec);
            bool complex_form = false;
            for (const auto& b : blocks)
                if (b.mu && sgn(b.mu->im) != 0) complex_form = true;
            if (complex_form) {
                realcong::GaussMat m(0, 0);
                for (const auto& b : blocks)
                    m = realcong::direct_sum(m, realcong::realize_gaussian(b, true));
                std::cout << ExactMatrix{m}.to_json() << "\n";
            } else {
                realcong::RatMat m(0, 0);
                std::vector<CanonicalBlock> sorted = blocks;
                std::sort(sorted.begin(), sorted.end(),
                          [](const CanonicalBlock& x, const CanonicalBlock& y) {
                              return compare(x, y) < 0;
                          });
                for (const auto& b : sorted)
                    m = realcong::direct_sum(m, realcong::realize_rational(b, true));
                std::cout << ExactMatrix{m}.to_json() << "\n";
            }
            return 0;
        }
        if (*c_canon) {
            ExactMatrix m = load_matrix(file_a);
            CanonicalForm f = form == 1 ? realcong::classify_form1(m.rational())
                                        : realcong::classify_form2(m.rational());
            std::cout << form_record(f).dump() << "\n";
            return 0;
        }
        if (*c_convert) {
            if (from == "lw" && to == "form1") {
                CanonicalBlock b = realcong::parse_block_spec(spec);
                std::cout << json(realcong::lw_to_form1(b, true).to_spec()).dump() << "\n";
                return 0;
            }
            CanonicalForm f;
            f.blocks = realcong::parse_form_spec(spec);
            f.flags.assign(f.blocks.size(), realcong::Ambiguity::None);
            if (from == "form1" && to == "form2") {
                f.kind = realcong::FormKind::Form1;
                std::cout << json(realcong::form1_to_form2(f).to_spec()).dump() << "\n";
            } else if (from == "form2" && to == "form1") {
                f.kind = realcong::FormKind::Form2;
                std::cout << json(realcong::form2_to_form1(f).to_spec()).dump() << "\n";
            } else if (from == "hs" && to == "fhs") {
                f.kind = realcong::FormKind::HS;
                std::cout << json(realcong::hs_to_fhs(f).to_spec()).dump() << "\n";
            } else {
                std::cerr << "unsupported conversion " << from << " -> " << to << "\n";
                return kExitUsage;
            }
            return 0;
        }
        if (*c_kcf) {
            ExactMatrix a = load_matrix(file_a), b = load_matrix(file_b);
            if (float_fallback || a.backend() == Backend::FloatC) {
                realcong::CMat ca = a.backend() == Backend::FloatC
                                        ? a.floating()
                                        : realcong::to_cmat(a.rational());
                realcong::CMat cb = b.backend() == Backend::FloatC
                                        ? b.floating()
                                        : realcong::to_cmat(b.rational());
                realcong::FloatKcf k = realcong::real_kcf_float(ca, cb, tolerance);
                json j;
                j["right"] = k.right_minimal;
                j["left"] = k.left_minimal;
                j["inf"] = k.infinite;
                json jj = json::array();
                for (const auto& [re, im, sz] : k.jordan) jj.push_back({re, im, sz});
                j["jordan"] = std::move(jj);
                j["tolerance"] = k.tolerance;
                j["rank-report"] = k.rank_report;
                std::cout << j.dump() << "\n";
                return 0;
            }
            realcong::RealKcf k = realcong::real_kcf(a.rational(), b.rational());
            std::cout << k.to_json() << "\n";
            return 0;
        }
        if (*c_wit) {
            std::size_t k = std::stoul(k_arg);
            Gaussian mu = parse_mu(mu_arg);
            Rational ra = parse_rat_arg(a_arg), rb = parse_rat_arg(b_arg),
                     ralpha = parse_rat_arg(alpha_arg);
            int eps = eps_arg == "-1" ? -1 : 1;
            Witness w;
            if (name == "W")
                w = realcong::w_matrix(mu);
            else if (name == "U")
                w = realcong::u_matrix(k, mu);
            else if (name == "V")
                w = realcong::v_matrix(k, mu);
            else if (name == "PkSk")
                w = realcong::pks_witness(k).witness;
            else if (name == "inf4")
                w = realcong::lw_witness(realcong::LwWitnessKind::Inf4, k, eps);
            else if (name == "inf5")
                w = realcong::lw_witness(realcong::LwWitnessKind::Inf5, k);
            else if (name == "o3")
                w = realcong::lw_witness(realcong::LwWitnessKind::O3, k, eps);
            else if (name == "o4")
                w = realcong::lw_witness(realcong::LwWitnessKind::O4, k);
            else if (name == "alpha3-flip")
                w = realcong::lw_witness(realcong::LwWitnessKind::Alpha3Flip, k, 1, ralpha);
            else if (name == "form1-step1")
                w = realcong::step_form1_step1(k, mu);
            else if (name == "form1-step2")
                w = realcong::step_form1_step2(k, mu);
            else if (name == "bflip-C")
                w = realcong::bflip_c(ra, rb);
            else if (name == "bflip-Hhat")
                w = realcong::bflip_hhat(k, ra, rb);
            else if (name == "bflip-That")
                w = realcong::bflip_that(k, ra, rb);
            else if (name == "h-flip")
                w = realcong::h_inverse_flip(k, mu);
            else {
                std::cerr << "unknown witness '" << name << "'\n";
                return kExitUsage;
            }
            json rec = witness_record(w);
            std::cout << rec.dump() << "\n";
            return rec["verified"].get<bool>() ? 0 : kExitVerifyFailed;
        }
        if (*v_cong) {
            ExactMatrix s = load_matrix(file_s), a = load_matrix(file_a), b = load_matrix(file_b);
            Witness w;
            w.name = "cli";
            w.relation = star ? realcong::Relation::CongruenceStar
                              : realcong::Relation::CongruenceT;
            auto as_gauss = [](const ExactMatrix& m) {
                return m.backend() == Backend::Gaussian ? m.gaussian()
                                                        : realcong::to_gaussian(m.rational());
            };
            w.transform = as_gauss(s);
            w.source_a = as_gauss(a);
            w.target_a = as_gauss(b);
            bool ok = realcong::check_witness(w);
            json j;
            j["verified"] = ok;
            std::cout << j.dump() << "\n";
            return ok ? 0 : kExitVerifyFailed;
        }
        if (*v_prof) {
            ExactMatrix a = load_matrix(file_a);
            json prof = json::array();
            for (const realcong::Inertia& t :
                 realcong::congruence_invariant_profile(a.rational(), mval))
                prof.push_back({t.n_plus, t.n_minus, t.n_zero});
            json j;
            j["profile"] = std::move(prof);
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*c_tables) {
            json t = tables_json();
            if (format == "markdown")
                std::cout << tables_markdown(t);
            else
                std::cout << t.dump() << "\n";
            return 0;
        }
        if (*c_self) {
            unsigned seed = 0;
            if (const char* env = std::getenv("REALCONG_SEED")) seed = std::stoul(env);
            auto results = realcong::run_acceptance(seed, jobs);
            bool all = true;
            for (const auto& r : results) {
                std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " "
                          << r.name << " (" << r.detail << ")\n";
                all = all && r.pass;
            }
            return all ? 0 : kExitVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
