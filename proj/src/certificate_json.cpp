#include "invcert/certify.hpp"

#include <nlohmann/json.hpp>

namespace invcert {

namespace {

using Json = nlohmann::ordered_json;

Json vector_to_json(const FieldSpec& spec, const Vector& v) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(spec.format(v[i]));
    return arr;
}

Json matrix_to_json(const FieldSpec& spec, const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(spec.format(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

[[noreturn]] void malformed(const std::string& what) {
    fail(Errc::MalformedCertificate, what);
}

std::string get_string(const Json& j, const char* what) {
    if (!j.is_string()) malformed(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Vector vector_from_json(const FieldSpec& spec, const Json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be an array of literals");
    std::vector<FieldElement> e;
    e.reserve(j.size());
    for (const auto& lit : j) {
        try {
            e.push_back(spec.parse_literal(get_string(lit, what)));
        } catch (const Error& err) {
            if (err.code() == Errc::MalformedCertificate) throw;
            malformed(std::string(what) + ": " + err.what());
        }
    }
    return Vector(spec, std::move(e));
}

Matrix matrix_from_json(const FieldSpec& spec, const Json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& row : j) rows.push_back(vector_from_json(spec, row, what));
    std::size_t cols = rows.empty() ? 0 : rows.front().dim();
    std::vector<FieldElement> e;
    e.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.dim() != cols) malformed(std::string(what) + " rows have uneven lengths");
        for (std::size_t i = 0; i < row.dim(); ++i) e.push_back(row[i]);
    }
    return Matrix(spec, rows.size(), cols, std::move(e));
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    const FieldSpec& spec = cert.spec;
    Json root;
    root["field"] = spec.name();
    root["n"] = cert.n;
    Json levels = Json::array();
    for (const CertLevel& lvl : cert.levels) {
        Json l;
        Json ops = Json::array();
        for (const auto& op : lvl.ops) ops.push_back(op.to_string(spec));
        l["ops"] = std::move(ops);
        l["v_star"] = vector_to_json(spec, lvl.v_star);
        l["beta_star"] = spec.format(lvl.beta_star);
        l["w_star"] = vector_to_json(spec, lvl.w_star);
        l["h_star"] = vector_to_json(spec, lvl.h_star);
        l["b_tail"] = matrix_to_json(spec, lvl.b_tail);
        levels.push_back(std::move(l));
    }
    root["levels"] = std::move(levels);
    if (cert.base) {
        root["base"] = Json::array({spec.format(cert.base->first), spec.format(cert.base->second)});
    } else {
        root["base"] = "empty";
    }
    return root.dump();
}

Certificate certificate_from_json(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("certificate JSON: ") + e.what());
    }
    if (!root.is_object()) malformed("certificate must be a JSON object");
    if (!root.contains("field") || !root.contains("n") || !root.contains("levels") ||
        !root.contains("base"))
        malformed("certificate requires fields 'field', 'n', 'levels', 'base'");

    FieldSpec spec = FieldSpec::rationals();
    try {
        spec = FieldSpec::from_name(get_string(root["field"], "'field'"));
    } catch (const Error& e) {
        if (e.code() == Errc::MalformedCertificate) throw;
        malformed(e.what());
    }

    if (!root["n"].is_number_unsigned()) malformed("'n' must be a nonnegative integer");
    Certificate cert{spec, root["n"].get<std::size_t>(), {}, std::nullopt};

    if (!root["levels"].is_array()) malformed("'levels' must be an array");
    for (const auto& l : root["levels"]) {
        if (!l.is_object() || !l.contains("ops") || !l.contains("v_star") ||
            !l.contains("beta_star") || !l.contains("w_star") || !l.contains("h_star") ||
            !l.contains("b_tail"))
            malformed("level is missing a required field");
        if (!l["ops"].is_array()) malformed("'ops' must be an array of strings");
        std::vector<ElementaryOp> ops;
        for (const auto& s : l["ops"]) {
            try {
                ops.push_back(ElementaryOp::parse(spec, get_string(s, "op")));
            } catch (const Error& e) {
                if (e.code() == Errc::MalformedCertificate) throw;
                malformed(e.what());
            }
        }
        Vector v_star = vector_from_json(spec, l["v_star"], "'v_star'");
        FieldElement beta_star = spec.zero();
        try {
            beta_star = spec.parse_literal(get_string(l["beta_star"], "'beta_star'"));
        } catch (const Error& e) {
            if (e.code() == Errc::MalformedCertificate) throw;
            malformed(e.what());
        }
        Vector w_star = vector_from_json(spec, l["w_star"], "'w_star'");
        Vector h_star = vector_from_json(spec, l["h_star"], "'h_star'");
        Matrix b_tail = matrix_from_json(spec, l["b_tail"], "'b_tail'");
        // Size comes from v_star; full consistency is the verifier's job.
        cert.levels.push_back(CertLevel{v_star.dim() + 1, std::move(ops), std::move(v_star),
                                        std::move(beta_star), std::move(w_star), std::move(h_star),
                                        std::move(b_tail)});
    }

    const Json& base = root["base"];
    if (base.is_string()) {
        if (base.get<std::string>() != "empty") malformed("'base' must be a pair or \"empty\"");
    } else if (base.is_array() && base.size() == 2) {
        try {
            cert.base = std::make_pair(spec.parse_literal(get_string(base[0], "'base'")),
                                       spec.parse_literal(get_string(base[1], "'base'")));
        } catch (const Error& e) {
            if (e.code() == Errc::MalformedCertificate) throw;
            malformed(e.what());
        }
    } else {
        malformed("'base' must be a pair or \"empty\"");
    }
    return cert;
}

} // namespace invcert
