#include "devissage/config.hpp"

#include "devissage/errors.hpp"

#include <fstream>

namespace devissage {

namespace {

[[noreturn]] void schema_fail(const std::string& field, const std::string& why) {
    fail(Errc::schema_violation, field + ": " + why);
}

} // namespace

InstanceConfig parse_config_json(const nlohmann::json& j) {
    InstanceConfig cfg;
    if (!j.is_object()) schema_fail("<root>", "expected an object");
    if (!j.contains("name") || !j["name"].is_string()) schema_fail("name", "missing or not a string");
    cfg.name = j["name"].get<std::string>();
    if (!j.contains("p") || !j["p"].is_number_unsigned()) schema_fail("p", "missing or not a number");
    cfg.algebra.p = j["p"].get<Scalar>();
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        schema_fail("basis", "missing or empty");
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) schema_fail("basis", "labels must be strings");
        cfg.algebra.basis_labels.push_back(b.get<std::string>());
    }
    std::size_t n = cfg.algebra.basis_labels.size();

    cfg.algebra.table.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    if (!j.contains("mul") || !j["mul"].is_array()) schema_fail("mul", "missing or not an array");
    for (const auto& quad : j["mul"]) {
        if (!quad.is_array() || quad.size() != 4) schema_fail("mul", "entries must be [i,j,k,c]");
        long long i = quad[0].get<long long>(), jj = quad[1].get<long long>(),
                  k = quad[2].get<long long>(), c = quad[3].get<long long>();
        if (i < 0 || jj < 0 || k < 0 || static_cast<std::size_t>(i) >= n ||
            static_cast<std::size_t>(jj) >= n || static_cast<std::size_t>(k) >= n)
            schema_fail("mul", "index out of range");
        long long cc = c % static_cast<long long>(cfg.algebra.p);
        if (cc < 0) cc += cfg.algebra.p;
        cfg.algebra.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]
                         [static_cast<std::size_t>(k)] = static_cast<Scalar>(cc);
    }

    if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != n)
        schema_fail("unit", "missing or wrong length");
    for (const auto& c : j["unit"]) cfg.algebra.unit.push_back(c.get<Scalar>() % cfg.algebra.p);

    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) schema_fail("ideal", "must be an array of vectors");
        for (const auto& row : j["ideal"]) {
            if (!row.is_array() || row.size() != n) schema_fail("ideal", "rows must have length dim");
            Vec v;
            for (const auto& c : row) v.push_back(c.get<Scalar>() % cfg.algebra.p);
            cfg.ideal.push_back(std::move(v));
        }
    }

    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) schema_fail("options", "must be an object");
        if (o.contains("dim_bound")) cfg.options.dim_bound = o["dim_bound"].get<std::size_t>();
        if (o.contains("cap")) cfg.options.cap = o["cap"].get<std::size_t>();
        if (o.contains("seed")) cfg.options.seed = o["seed"].get<std::uint64_t>();
        if (o.contains("samples")) cfg.options.samples = o["samples"].get<std::size_t>();
    }
    return cfg;
}

InstanceConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::parse_error, std::string(e.what()));
    }
    return parse_config_json(j);
}

std::size_t effective_dim_bound(const InstanceConfig& cfg) {
    if (cfg.options.dim_bound) return *cfg.options.dim_bound;
    return cfg.algebra.basis_labels.size() <= 5 ? 3 : 2;
}

Instance instance_from_config(const InstanceConfig& cfg) {
    AlgebraPtr a;
    try {
        a = validate_algebra(cfg.algebra);
    } catch (const Error& e) {
        fail(Errc::algebra_invalid, e.what());
    }
    Mat ideal_rows = Mat::from_rows(cfg.ideal, a->dim, a->p);
    try {
        return make_instance(a, ideal_rows, cfg.options.cap);
    } catch (const Error& e) {
        if (e.code() == Errc::enumeration_budget_exceeded) throw;
        fail(Errc::ideal_invalid, e.what());
    }
}

} // namespace devissage
