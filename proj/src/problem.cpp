#include "weightprop/problem.hpp"

#include <fstream>
#include <sstream>

#include "weightprop/errors.hpp"

namespace weightprop {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::vector<std::int64_t> int_vector(const json& j, const std::string& where) {
    if (j.is_number_integer()) return {j.get<std::int64_t>()};
    if (!j.is_array()) throw InputError(where + ": expected an integer or a list of integers");
    std::vector<std::int64_t> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(where + ": expected integers");
        v.push_back(x.get<std::int64_t>());
    }
    return v;
}

template <class V>
std::vector<V> vector_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected a list");
    std::vector<V> out;
    for (const auto& x : j) out.emplace_back(int_vector(x, where));
    return out;
}

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

}  // namespace

const MatrixEntry& ProblemFile::matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) throw InputError("no matrix named '" + name + "'");
    return it->second;
}

const WeightList& ProblemFile::weights(const std::string& name) const {
    auto it = weightlists.find(name);
    if (it == weightlists.end()) throw InputError("no weight list named '" + name + "'");
    return it->second;
}

ProblemFile problem_from_json(const json& j) {
    if (!j.is_object()) throw InputError("problem file must be an object");
    ProblemFile p;
    const json& r = field(j, "ring", "problem");
    std::vector<std::string> vars;
    for (const auto& v : field(r, "vars", "ring")) vars.push_back(get_string(v, "ring.vars"));
    auto degrees = vector_list<Multidegree>(field(r, "degrees", "ring"), "ring.degrees");
    auto weights = vector_list<Weight>(field(r, "weights", "ring"), "ring.weights");
    TermOrder order = r.contains("order") ? parse_term_order(get_string(r["order"], "ring.order")) : TermOrder::GrevLex;
    p.ring = std::make_shared<const RingSpec>(std::move(vars), std::move(degrees), std::move(weights), order);

    if (j.contains("modules")) {
        for (const auto& [name, m] : j["modules"].items())
            p.modules.emplace(name, FreeModule(p.ring, vector_list<Multidegree>(field(m, "degrees", "module " + name),
                                                                                "module " + name)));
    }
    auto module = [&](const std::string& name, const std::string& where) -> const FreeModule& {
        auto it = p.modules.find(name);
        if (it == p.modules.end()) throw InputError(where + ": unknown module '" + name + "'");
        return it->second;
    };
    if (j.contains("matrices")) {
        for (const auto& [name, m] : j["matrices"].items()) {
            const std::string where = "matrix " + name;
            std::string rows = get_string(field(m, "rows", where), where);
            std::optional<std::string> cols;
            if (m.contains("cols")) cols = get_string(m["cols"], where);
            std::vector<std::vector<std::string>> entries;
            for (const auto& row : field(m, "entries", where)) {
                if (!row.is_array()) throw InputError(where + ": entries must be a list of rows");
                std::vector<std::string> rs;
                for (const auto& e : row) rs.push_back(e.is_number_integer() ? std::to_string(e.get<std::int64_t>())
                                                                             : get_string(e, where));
                entries.push_back(std::move(rs));
            }
            const FreeModule& codomain = module(rows, where);
            PolyMatrix pm;
            try {
                if (cols) {
                    std::vector<std::vector<Polynomial>> pe;
                    for (const auto& row : entries) {
                        std::vector<Polynomial> pr;
                        for (const auto& s : row) pr.push_back(parse_polynomial(*p.ring, s));
                        pe.push_back(std::move(pr));
                    }
                    pm = PolyMatrix::from_rows(codomain, module(*cols, where), pe);
                } else {
                    pm = PolyMatrix::parse(codomain, entries);
                }
            } catch (const ParseError& e) {
                throw ParseError(where + ": " + e.what(), e.position());
            } catch (const DomainError& e) {
                throw DomainError(where + ": " + e.what());
            } catch (const InputError& e) {
                throw InputError(where + ": " + e.what());
            }
            p.matrices.emplace(name, MatrixEntry{rows, cols, std::move(pm)});
        }
    }
    if (j.contains("weightlists")) {
        for (const auto& [name, w] : j["weightlists"].items()) {
            WeightList wl = vector_list<Weight>(w, "weight list " + name);
            for (const auto& x : wl)
                if (x.size() != p.ring->weight_rank())
                    throw InputError("weight list " + name + ": weight of wrong length");
            p.weightlists.emplace(name, std::move(wl));
        }
    }
    if (j.contains("resolution")) {
        for (const auto& n : j["resolution"]) {
            std::string s = get_string(n, "resolution");
            p.matrix(s);
            p.resolution.push_back(s);
        }
    }
    if (j.contains("module_order")) p.module_order = parse_module_order(get_string(j["module_order"], "module_order"));
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
    return problem_from_json(j);
}

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

json to_json(const ScalarMatrix& c) {
    json a = json::array();
    for (std::size_t i = 0; i < c.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < c.cols(); ++k) row.push_back(rational_to_json(c(i, k)));
        a.push_back(std::move(row));
    }
    return a;
}

json to_json(const WeightList& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(x.values());
    return a;
}

json to_json(const Multidegree& d) {
    return d.values();
}

json entries_to_json(const PolyMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m.ring(), m(i, k)));
        a.push_back(std::move(row));
    }
    return a;
}

json problem_to_json(const ProblemFile& p) {
    json j;
    const RingSpec& r = *p.ring;
    json degs = json::array(), ws = json::array();
    for (const auto& d : r.degrees()) degs.push_back(d.values());
    for (const auto& w : r.weights()) ws.push_back(w.values());
    j["ring"] = {{"vars", r.names()}, {"degrees", degs}, {"weights", ws}, {"order", to_string(r.order())}};
    json mods = json::object();
    for (const auto& [name, m] : p.modules) {
        json d = json::array();
        for (const auto& x : m.degrees()) d.push_back(x.values());
        mods[name] = {{"degrees", d}};
    }
    j["modules"] = mods;
    json mats = json::object();
    for (const auto& [name, m] : p.matrices) {
        json e = {{"rows", m.rows}, {"entries", entries_to_json(m.matrix)}};
        if (m.cols) e["cols"] = *m.cols;
        mats[name] = e;
    }
    j["matrices"] = mats;
    json wls = json::object();
    for (const auto& [name, w] : p.weightlists) wls[name] = to_json(w);
    j["weightlists"] = wls;
    if (!p.resolution.empty()) j["resolution"] = p.resolution;
    if (p.module_order) j["module_order"] = to_string(*p.module_order);
    return j;
}

Multidegree parse_multidegree(const std::string& csv) {
    std::vector<std::int64_t> v;
    std::stringstream ss(csv);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError("invalid degree component '" + item + "'", pos);
        }
        pos += item.size() + 1;
    }
    if (v.empty()) throw ParseError("empty degree", 0);
    return Multidegree(std::move(v));
}

}  // namespace weightprop
