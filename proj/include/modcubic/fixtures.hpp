#ifndef MODCUBIC_FIXTURES_HPP
#define MODCUBIC_FIXTURES_HPP

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcubic/intmatrix.hpp"
#include "modcubic/rational.hpp"

namespace modcubic::fixtures {

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture not found: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

struct Constant {
    std::string name;
    nlohmann::json value;
    std::string paper_ref;
    std::string quote;

    long long as_int() const { return std::stoll(value.get<std::string>()); }
    Rational as_rational() const { return Rational::from_string(value.get<std::string>()); }
    std::array<long long, 3> as_triple() const {
        auto v = value.get<std::vector<long long>>();
        if (v.size() != 3) throw std::runtime_error("constant " + name + " is not a triple");
        return {v[0], v[1], v[2]};
    }
};

struct ConstantsFixture {
    int version = 0;
    std::string suite;
    std::map<std::string, Constant> by_name;

    const Constant& at(const std::string& name) const {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw std::runtime_error("missing constant: " + name);
        return it->second;
    }
};

inline ConstantsFixture load_constants(const std::string& dir) {
    nlohmann::json j = load_json(dir + "/constants.json");
    ConstantsFixture f;
    f.version = j.at("version").get<int>();
    f.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("constants")) {
        Constant k{c.at("name").get<std::string>(), c.at("value"),
                   c.at("paper_ref").get<std::string>(), c.at("quote").get<std::string>()};
        f.by_name.emplace(k.name, std::move(k));
    }
    return f;
}

struct Table2Row {
    int row = 0;
    std::string pattern;  // one character per coordinate, '*' or '0'
    int torus_dim = 0;
    std::string quotient;
    std::string note;
};

struct Table2Fixture {
    int version = 0;
    std::string paper_ref;
    std::string quote;
    std::vector<std::string> coordinates;
    std::vector<Table2Row> rows;
};

inline Table2Fixture load_table2(const std::string& dir) {
    nlohmann::json j = load_json(dir + "/table2.json");
    Table2Fixture f;
    f.version = j.at("version").get<int>();
    f.paper_ref = j.at("paper_ref").get<std::string>();
    f.quote = j.at("quote").get<std::string>();
    f.coordinates = j.at("coordinates").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
        Table2Row row{r.at("row").get<int>(), r.at("pattern").get<std::string>(),
                      r.at("torus_dim").get<int>(), r.at("quotient").get<std::string>(),
                      r.at("note").get<std::string>()};
        if (row.pattern.size() != f.coordinates.size())
            throw std::runtime_error("table2 row pattern length mismatch");
        f.rows.push_back(std::move(row));
    }
    return f;
}

inline IntegerMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<long long>>());
    return IntegerMatrix::from_rows(rows);
}

struct ToricFixture {
    IntegerMatrix gamma, kernel_basis, tau, sigma, sublattice_generators, standard_basis;
    std::vector<long long> character;
    std::vector<std::vector<Rational>> vertices;
};

inline ToricFixture load_toric(const std::string& dir) {
    nlohmann::json j = load_json(dir + "/toric.json");
    ToricFixture f;
    f.gamma = matrix_from_json(j.at("gamma"));
    f.kernel_basis = matrix_from_json(j.at("kernel_basis"));
    f.tau = matrix_from_json(j.at("tau"));
    f.sigma = matrix_from_json(j.at("sigma"));
    f.sublattice_generators = matrix_from_json(j.at("sublattice_generators"));
    f.standard_basis = matrix_from_json(j.at("standard_basis"));
    f.character = j.at("character").get<std::vector<long long>>();
    for (const auto& v : j.at("vertices")) {
        std::vector<Rational> vert;
        for (const auto& c : v) vert.push_back(Rational::from_string(c.get<std::string>()));
        f.vertices.push_back(std::move(vert));
    }
    return f;
}

}  // namespace modcubic::fixtures

#endif
