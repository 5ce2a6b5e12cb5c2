#include "realcong/matcore.hpp"

#include <json.hpp>

namespace realcong {

Inertia inertia_of_symmetric(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("inertia: matrix not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("inertia: matrix not symmetric");

    RatMat a = m;
    std::vector<std::size_t> act(n);
    for (std::size_t i = 0; i < n; ++i) act[i] = i;
    Inertia res;

    while (!act.empty()) {
        // Prefer a nonzero diagonal pivot of minimal weight.
        std::size_t pi = act.size();
        std::size_t best_w = 0;
        for (std::size_t t = 0; t < act.size(); ++t) {
            const Rational& d = a(act[t], act[t]);
            if (sgn(d) == 0) continue;
            std::size_t w = rat_weight(d);
            if (pi == act.size() || w < best_w) {
                pi = t;
                best_w = w;
            }
        }
        if (pi != act.size()) {
            const std::size_t p = act[pi];
            const Rational d = a(p, p);
            if (sgn(d) > 0)
                ++res.n_plus;
            else
                ++res.n_minus;
            act.erase(act.begin() + pi);
            for (std::size_t ti = 0; ti < act.size(); ++ti) {
                const std::size_t i = act[ti];
                if (sgn(a(i, p)) == 0) continue;
                Rational fi = a(i, p) / d;
                for (std::size_t tj = ti; tj < act.size(); ++tj) {
                    const std::size_t j = act[tj];
                    a(i, j) -= fi * a(j, p);
                    a(j, i) = a(i, j);
                }
            }
            continue;
        }
        // Zero diagonal everywhere; look for an off-diagonal 2x2 hyperbolic
        // pivot [[0,c],[c,0]], which contributes (+1,-1).
        std::size_t ti = act.size(), tj = act.size();
        for (std::size_t u = 0; u < act.size() && ti == act.size(); ++u)
            for (std::size_t v = u + 1; v < act.size(); ++v)
                if (sgn(a(act[u], act[v])) != 0) {
                    ti = u;
                    tj = v;
                    break;
                }
        if (ti == act.size()) {
            res.n_zero += act.size();
            break;
        }
        const std::size_t p = act[ti], q = act[tj];
        const Rational c = a(p, q);
        ++res.n_plus;
        ++res.n_minus;
        act.erase(act.begin() + tj);
        act.erase(act.begin() + ti);
        // Schur complement against P = [[0,c],[c,0]]:
        // a_ij -= (a_ip a_jq + a_iq a_jp) / c.
        for (std::size_t u = 0; u < act.size(); ++u) {
            const std::size_t i = act[u];
            if (sgn(a(i, p)) == 0 && sgn(a(i, q)) == 0) continue;
            for (std::size_t v = u; v < act.size(); ++v) {
                const std::size_t j = act[v];
                a(i, j) -= (a(i, p) * a(j, q) + a(i, q) * a(j, p)) / c;
                a(j, i) = a(i, j);
            }
        }
    }
    return res;
}

std::size_t ExactMatrix::rows() const {
    return std::visit([](const auto& x) { return x.rows(); }, m);
}

std::size_t ExactMatrix::cols() const {
    return std::visit([](const auto& x) { return x.cols(); }, m);
}

const RatMat& ExactMatrix::rational() const {
    if (backend() != Backend::Rational) throw std::invalid_argument("expected rational backend");
    return std::get<RatMat>(m);
}

const GaussMat& ExactMatrix::gaussian() const {
    if (backend() != Backend::Gaussian) throw std::invalid_argument("expected gaussian backend");
    return std::get<GaussMat>(m);
}

const CMat& ExactMatrix::floating() const {
    if (backend() != Backend::FloatC) throw std::invalid_argument("expected float backend");
    return std::get<CMat>(m);
}

namespace {

using json = nlohmann::ordered_json;

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Rational: return "rational";
        case Backend::Gaussian: return "gaussian";
        case Backend::FloatC: return "float";
    }
    return "?";
}

}  // namespace

std::string ExactMatrix::to_json() const {
    json j;
    j["rows"] = rows();
    j["cols"] = cols();
    j["backend"] = backend_name(backend());
    json data = json::array();
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            for (std::size_t i = 0; i < x.rows(); ++i) {
                json row = json::array();
                for (std::size_t jj = 0; jj < x.cols(); ++jj) {
                    if constexpr (std::is_same_v<T, RatMat>) {
                        row.push_back(rat_to_string(x(i, jj)));
                    } else if constexpr (std::is_same_v<T, GaussMat>) {
                        row.push_back(gaussian_to_string(x(i, jj)));
                    } else {
                        row.push_back(json::array({x(i, jj).real(), x(i, jj).imag()}));
                    }
                }
                data.push_back(std::move(row));
            }
        },
        m);
    j["data"] = std::move(data);
    return j.dump();
}

ExactMatrix ExactMatrix::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover line/column from the byte offset for the CLI error message.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::invalid_argument("malformed matrix JSON at line " + std::to_string(line) +
                                    ", column " + std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("backend") ||
        !j.contains("data"))
        throw std::invalid_argument("matrix JSON must have rows, cols, backend, data");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const std::string backend = j["backend"].get<std::string>();
    const json& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw std::invalid_argument("matrix JSON: data has wrong number of rows");
    auto cell = [&](std::size_t i, std::size_t jj) -> const json& {
        const json& row = data[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) +
                                        " has wrong length");
        return row[jj];
    };
    if (backend == "rational") {
        RatMat x(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t jj = 0; jj < cols; ++jj) {
                auto v = parse_rational(cell(i, jj).get<std::string>());
                if (!v) throw std::invalid_argument("matrix JSON: bad rational entry");
                x(i, jj) = *v;
            }
        return ExactMatrix{std::move(x)};
    }
    if (backend == "gaussian") {
        GaussMat x(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t jj = 0; jj < cols; ++jj) {
                auto v = parse_gaussian(cell(i, jj).get<std::string>());
                if (!v) throw std::invalid_argument("matrix JSON: bad gaussian entry");
                x(i, jj) = *v;
            }
        return ExactMatrix{std::move(x)};
    }
    if (backend == "float") {
        CMat x(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t jj = 0; jj < cols; ++jj) {
                const json& c = cell(i, jj);
                if (!c.is_array() || c.size() != 2)
                    throw std::invalid_argument("matrix JSON: float entry must be [re, im]");
                x(i, jj) = std::complex<double>(c[0].get<double>(), c[1].get<double>());
            }
        return ExactMatrix{std::move(x)};
    }
    throw std::invalid_argument("matrix JSON: unknown backend '" + backend + "'");
}

namespace {

template <class F>
ExactMatrix zip_backend(const ExactMatrix& a, const ExactMatrix& b, F&& f, const char* op) {
    if (a.backend() != b.backend())
        throw std::invalid_argument(std::string(op) + ": backend mismatch");
    switch (a.backend()) {
        case Backend::Rational: return ExactMatrix{f(a.rational(), b.rational())};
        case Backend::Gaussian: return ExactMatrix{f(a.gaussian(), b.gaussian())};
        case Backend::FloatC: return ExactMatrix{f(a.floating(), b.floating())};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    return zip_backend(a, b, [](const auto& x, const auto& y) { return direct_sum(x, y); },
                       "direct_sum");
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    return zip_backend(a, b, [](const auto& x, const auto& y) { return kron(x, y); }, "kron");
}

std::size_t rank(const ExactMatrix& m) {
    return std::visit([](const auto& x) { return rank_of(x); }, m.m);
}

Inertia inertia_of_symmetric(const ExactMatrix& m) {
    return inertia_of_symmetric(m.rational());
}

}  // namespace realcong
