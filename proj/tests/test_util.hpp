#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "realcong/matrix.hpp"

namespace realcong::testutil {

// Build a rational matrix from "p/q" entry strings.
inline RatMat rm(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<const char*>> r(rows.begin(), rows.end());
    RatMat m(r.size(), r.empty() ? 0 : r[0].size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) {
            auto v = parse_rational(r[i][j]);
            if (!v) throw std::invalid_argument(std::string("bad test entry ") + r[i][j]);
            m(i, j) = *v;
        }
    return m;
}

inline GaussMat gm(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<const char*>> r(rows.begin(), rows.end());
    GaussMat m(r.size(), r.empty() ? 0 : r[0].size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) {
            auto g = parse_gaussian(r[i][j]);
            if (g) {
                m(i, j) = *g;
                continue;
            }
            auto v = parse_rational(r[i][j]);
            if (!v) throw std::invalid_argument(std::string("bad test entry ") + r[i][j]);
            m(i, j) = Gaussian(*v);
        }
    return m;
}

inline unsigned test_seed() {
    if (const char* env = std::getenv("REALCONG_SEED")) return std::stoul(env);
    return 0;
}

}  // namespace realcong::testutil
