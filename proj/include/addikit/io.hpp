#pragma once

// JSON forms of the library's objects (nlohmann::json).

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "additive_code.hpp"
#include "bounds.hpp"
#include "error.hpp"
#include "field.hpp"
#include "linear_code.hpp"
#include "linearity.hpp"
#include "matrix.hpp"
#include "semifield.hpp"

namespace addikit::io {

using nlohmann::json;

inline json field_to_json(const Field& F) {
    return {{"p", F.characteristic()}, {"m", F.degree()}, {"modulus", F.modulus()}};
}

/// Accepts {p, m[, modulus]}; a given modulus must be the canonical one.
inline Field field_from_json(const json& j) {
    try {
        const Field F = Field::create(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
        if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != F.modulus()) {
            raise(ErrorCode::ParseError, "modulus is not the canonical one for " + F.name());
        }
        return F;
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("field spec: ") + e.what());
    }
}

inline json element_to_json(const FieldElement& x) { return {{"rep", x.rep()}}; }

inline FieldElement element_from_json(const Field& F, const json& j) {
    try {
        return F.element(j.at("rep").get<Rep>());
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("field element: ") + e.what());
    }
}

inline json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(std::vector<Rep>(m.row(r).begin(), m.row(r).end()));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const Field& F, const json& j) {
    try {
        const auto rows = j.at("entries").get<std::vector<Vector>>();
        Matrix m = Matrix::from_rows(F, rows);
        if (m.rows() != j.at("rows").get<std::size_t>() || (m.rows() > 0 && m.cols() != j.at("cols").get<std::size_t>())) {
            raise(ErrorCode::ParseError, "matrix dimensions disagree with entries");
        }
        return m;
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("matrix: ") + e.what());
    }
}

inline json linear_code_to_json(const LinearCode& code) {
    return {{"q", field_to_json(code.field())}, {"k", code.k()}, {"n", code.n()}, {"rows", code.generator().to_rows()}};
}

inline LinearCode linear_code_from_json(const json& j) {
    try {
        const Field F = field_from_json(j.at("q"));
        Matrix g = Matrix::from_rows(F, j.at("rows").get<std::vector<Vector>>());
        if (g.rows() != j.at("k").get<std::size_t>() || g.cols() != j.at("n").get<std::size_t>()) {
            raise(ErrorCode::ParseError, "k/n disagree with rows");
        }
        return LinearCode(std::move(g));
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("generator file: ") + e.what());
    }
}

inline json additive_code_to_json(const AdditiveCode& code) {
    return {{"q", field_to_json(code.base_field())},
            {"h", code.h()},
            {"k", code.k()},
            {"n", code.n()},
            {"rows", code.generator().to_rows()}};
}

inline AdditiveCode additive_code_from_json(const json& j) {
    try {
        const Field fq = field_from_json(j.at("q"));
        const auto h = j.at("h").get<std::uint32_t>();
        const Extension ext(fq, Field::create(fq.characteristic(), fq.degree() * h));
        Matrix g = Matrix::from_rows(ext.field(), j.at("rows").get<std::vector<Vector>>());
        if (g.rows() != j.at("k").get<std::size_t>() || g.cols() != j.at("n").get<std::size_t>()) {
            raise(ErrorCode::ParseError, "k/n disagree with rows");
        }
        return AdditiveCode(ext, std::move(g));
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("additive code file: ") + e.what());
    }
}

/// {n, k, h, dim, d, q, lower_bound, bound_met}
inline json params_report(const AdditiveParams& p, std::int64_t lower_bound) {
    return {{"n", p.n},
            {"k", p.k},
            {"h", p.h},
            {"dim", p.dim()},
            {"d", p.d},
            {"q", p.q},
            {"lower_bound", lower_bound},
            {"bound_met", static_cast<std::int64_t>(p.d) >= lower_bound}};
}

inline json semifield_to_json(const PartialSemifield& s) {
    json mats = json::array();
    for (const auto& m : s.matrices()) mats.push_back(m.to_rows());
    return {{"q", field_to_json(s.field())}, {"k", s.k()}, {"h", s.h()}, {"matrices", mats}};
}

inline PartialSemifield semifield_from_json(const json& j) {
    try {
        const Field F = field_from_json(j.at("q"));
        std::vector<Matrix> mats;
        for (const auto& m : j.at("matrices")) mats.push_back(Matrix::from_rows(F, m.get<std::vector<Vector>>()));
        if (mats.size() != j.at("h").get<std::size_t>()) raise(ErrorCode::ParseError, "h disagrees with matrix count");
        PartialSemifield s(std::move(mats));
        if (s.k() != j.at("k").get<std::size_t>()) raise(ErrorCode::ParseError, "k disagrees with matrix size");
        return s;
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("semifield file: ") + e.what());
    }
}

inline json verdict_to_json(const AdditiveGriesmerVerdict& v) {
    return {{"n", v.n},
            {"r", v.r},
            {"h", v.h},
            {"q", v.q},
            {"d", v.d},
            {"k", v.k},
            {"r_0", v.r0},
            {"m", v.m},
            {"m_window", v.m_window},
            {"f", v.f ? json(v.f->str()) : json(nullptr)},
            {"ceil_d_over_f", v.ceil_term},
            {"rhs", v.rhs},
            {"verdict", v.feasible ? "feasible" : "infeasible"},
            {"convention", v.convention()}};
}

inline json certificate_to_json(const NonlinearityCertificate& c) {
    return {{"verdict", c.verdict_name()},
            {"reason", c.reason_name()},
            {"h", c.h},
            {"total_rank", c.total_rank},
            {"witness", c.witness},
            {"rank", c.rank},
            {"max_m", c.max_m},
            {"subsets_checked", c.subsets_checked}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, path + ": " + e.what());
    }
}

/// "j,d_j" lines with a header.
inline std::string ghw_csv(const std::vector<std::size_t>& hierarchy) {
    std::string out = "j,d_j\n";
    for (std::size_t j = 0; j < hierarchy.size(); ++j) out += std::to_string(j + 1) + "," + std::to_string(hierarchy[j]) + "\n";
    return out;
}

/// "w,A_w" lines with a header.
inline std::string weight_csv(const std::vector<std::uint64_t>& distribution) {
    std::string out = "w,A_w\n";
    for (std::size_t w = 0; w < distribution.size(); ++w) out += std::to_string(w) + "," + std::to_string(distribution[w]) + "\n";
    return out;
}

}  // namespace addikit::io
