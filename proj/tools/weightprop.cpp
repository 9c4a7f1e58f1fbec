#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "weightprop/errors.hpp"
#include "weightprop/problem.hpp"

using namespace weightprop;
using nlohmann::json;

namespace {

struct Options {
    std::string input;
    bool json_output = false;
    std::optional<std::string> module_order;
    std::optional<std::string> matrix;
    std::optional<std::string> weights;
    std::optional<std::string> degree;
    std::optional<std::string> bound;
    std::size_t from = 0;
};

void setup_logging() {
    auto logger = spdlog::stderr_logger_mt("weightprop");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("WEIGHTPROP_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

ModuleOrder resolve_order(const Options& o, const ProblemFile& p) {
    ModuleOrderKind k = ModuleOrderKind::TopUp;
    if (o.module_order) k = parse_module_order(*o.module_order);
    else if (p.module_order) k = *p.module_order;
    return ModuleOrder::on(*p.ring, k);
}

// Explicit name, else "M", else the only entry.
template <class Map>
std::string pick(const std::optional<std::string>& name, const Map& m, const char* fallback, const char* what) {
    if (name) return *name;
    if (m.count(fallback)) return fallback;
    if (m.size() == 1) return m.begin()->first;
    throw InputError(std::string("ambiguous ") + what + "; pass --" + what);
}

std::string term_string(const RingSpec& r, const ModuleTerm& t) {
    return to_string(r, Polynomial::term(t.monomial, 1)) + " [" + std::to_string(t.index + 1) + "]";
}

json matrix_json(const PolyMatrix& m) {
    json rows = json::array(), cols = json::array();
    for (const auto& d : m.codomain().degrees()) rows.push_back(d.values());
    for (const auto& d : m.domain().degrees()) cols.push_back(d.values());
    return {{"row_degrees", rows}, {"col_degrees", cols}, {"entries", entries_to_json(m)}};
}

json result_json(const PropagationResult& r) {
    return {{"change_of_basis", to_json(r.change_of_basis)},
            {"weights", to_json(r.weights)},
            {"basis_matrix", matrix_json(r.basis_matrix)}};
}

void print_weights(std::ostream& out, const WeightList& w) {
    for (const auto& x : w) out << "  " << x.str() << "\n";
}

void print_scalar(std::ostream& out, const ScalarMatrix& c) {
    for (std::size_t i = 0; i < c.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < c.cols(); ++j) out << " " << to_string(c(i, j));
        out << "\n";
    }
}

void print_result(std::ostream& out, const PropagationResult& r) {
    out << "basis matrix G:\n" << r.basis_matrix.str() << "change of basis C:\n";
    print_scalar(out, r.change_of_basis);
    out << "weights V:\n";
    print_weights(out, r.weights);
}

int run_gb(const Options& o, const ProblemFile& p) {
    const PolyMatrix& m = p.matrix(pick(o.matrix, p.matrices, "M", "matrix")).matrix;
    ModuleOrder ord = resolve_order(o, p);
    std::optional<Multidegree> bound;
    if (o.bound) bound = parse_multidegree(*o.bound);
    GroebnerBasis g = buchberger(m, ord, bound);
    PolyMatrix sorted = sort_gb_columns(g, SortDirection::Decreasing);
    json lts = json::array();
    for (const auto& c : sorted.columns()) lts.push_back(term_string(m.ring(), leading_term(ord, c).term));
    if (o.json_output) {
        std::cout << json{{"basis", matrix_json(sorted)}, {"leading_terms", lts}}.dump() << "\n";
    } else {
        std::cout << "Groebner basis (" << sorted.cols() << " elements, " << to_string(ord.kind) << "):\n"
                  << sorted.str() << "leading terms:\n";
        for (const auto& t : lts) std::cout << "  " << t.get<std::string>() << "\n";
    }
    return 0;
}

int run_resolve(const Options& o, const ProblemFile& p) {
    const PolyMatrix& m = p.matrix(pick(o.matrix, p.matrices, "M", "matrix")).matrix;
    Resolution res = minimal_resolution(m, resolve_order(o, p));
    if (o.json_output) {
        json diffs = json::array();
        for (const auto& d : res.differentials) diffs.push_back(matrix_json(d));
        std::cout << json{{"ranks", res.ranks()}, {"differentials", diffs}}.dump() << "\n";
    } else {
        std::cout << "ranks:";
        for (auto r : res.ranks()) std::cout << " " << r;
        std::cout << "\n";
        for (std::size_t i = 0; i < res.length(); ++i) {
            std::cout << "d" << i + 1 << ": F" << i + 1 << " -> F" << i << ", column degrees";
            for (const auto& d : res.differentials[i].domain().degrees()) std::cout << " " << d.str();
            std::cout << "\n" << res.differentials[i].str();
        }
    }
    return 0;
}

int run_propagate(const Options& o, const ProblemFile& p, bool forward) {
    const PolyMatrix& m = p.matrix(pick(o.matrix, p.matrices, "M", "matrix")).matrix;
    const WeightList& w = p.weights(pick(o.weights, p.weightlists, "W", "weights"));
    ModuleOrder ord = resolve_order(o, p);
    PropagationResult r = forward ? propagate_forward(m, w, ord) : propagate(m, w, ord);
    if (o.json_output) std::cout << result_json(r).dump() << "\n";
    else print_result(std::cout, r);
    return 0;
}

int run_resolution(const Options& o, const ProblemFile& p) {
    if (p.resolution.empty()) throw InputError("problem file has no resolution");
    std::vector<PolyMatrix> diffs;
    for (const auto& n : p.resolution) diffs.push_back(p.matrix(n).matrix);
    const WeightList& w = p.weights(pick(o.weights, p.weightlists, "W", "weights"));
    ResolutionWeights rw = propagate_resolution(diffs, o.from, w, resolve_order(o, p));
    if (o.json_output) {
        json ws = json::array(), cs = json::array(), steps = json::array();
        for (const auto& v : rw.per_module) ws.push_back(v ? to_json(*v) : json());
        for (const auto& c : rw.change_of_basis) cs.push_back(c ? to_json(*c) : json());
        for (const auto& s : rw.steps) {
            json j = result_json(s.result);
            j["module"] = s.module;
            j["direction"] = s.forward ? "forward" : "backward";
            j["input"] = matrix_json(s.input);
            steps.push_back(j);
        }
        std::cout << json{{"weights", ws}, {"change_of_basis", cs}, {"steps", steps}, {"errors", rw.errors}}.dump()
                  << "\n";
    } else {
        for (std::size_t i = 0; i < rw.per_module.size(); ++i) {
            std::cout << "V" << i << ":";
            if (!rw.per_module[i]) {
                std::cout << " unavailable\n";
                continue;
            }
            std::cout << "\n";
            print_weights(std::cout, *rw.per_module[i]);
        }
        for (const auto& e : rw.errors) std::cerr << "error: " << e << "\n";
    }
    return rw.complete() ? 0 : 1;
}

int run_graded(const Options& o, const ProblemFile& p) {
    if (!o.degree) throw InputError("--degree is required");
    const PolyMatrix& m = p.matrix(pick(o.matrix, p.matrices, "M", "matrix")).matrix;
    const WeightList& w = p.weights(pick(o.weights, p.weightlists, "W", "weights"));
    std::optional<Multidegree> cap;
    if (o.bound) cap = parse_multidegree(*o.bound);
    WeightList v = propagate_graded_components(parse_multidegree(*o.degree), m, w, resolve_order(o, p), cap);
    if (o.json_output) {
        std::cout << json{{"weights", to_json(v)}}.dump() << "\n";
    } else {
        std::cout << "weights of degree " << parse_multidegree(*o.degree).str() << " (" << v.size() << "):\n";
        print_weights(std::cout, v);
    }
    return 0;
}

int run_check_minimal(const Options& o, const ProblemFile& p) {
    const PolyMatrix& m = p.matrix(pick(o.matrix, p.matrices, "M", "matrix")).matrix;
    bool minimal = is_minimal_map(m);
    bool units = m.has_unit_entry();
    if (o.json_output) {
        std::cout << json{{"minimal", minimal}, {"unit_entries", units}}.dump() << "\n";
    } else {
        std::cout << (minimal ? "minimal" : "not minimal") << "\n";
        if (units) std::cout << "has unit entries\n";
    }
    if (!minimal) std::cerr << "error: columns are not minimal generators of the image\n";
    return minimal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Weight propagation along maps of graded free modules"};
    app.require_subcommand(1, 1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "problem file (JSON)")->required();
        sub->add_flag("--json", o.json_output, "machine-readable output");
        sub->add_option("--module-order", o.module_order, "top-up, pot-up, top-down or pot-down");
    };
    auto with_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", o.matrix, "matrix name");
    };
    auto with_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", o.weights, "weight list name");
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the column span");
    common(gb);
    with_matrix(gb);
    gb->add_option("--bound", o.bound, "truncation degree, comma separated");
    auto* resolve = app.add_subcommand("resolve", "minimal free resolution of the cokernel");
    common(resolve);
    with_matrix(resolve);
    auto* prop = app.add_subcommand("propagate", "domain weights from codomain weights");
    common(prop);
    with_matrix(prop);
    with_weights(prop);
    auto* fwd = app.add_subcommand("propagate-forward", "codomain weights from domain weights");
    common(fwd);
    with_matrix(fwd);
    with_weights(fwd);
    auto* res = app.add_subcommand("propagate-resolution", "weights of every module in a resolution");
    common(res);
    with_weights(res);
    res->add_option("--from", o.from, "index of the module with known weights")->required();
    auto* graded = app.add_subcommand("graded-weights", "weights of a graded component of the cokernel");
    common(graded);
    with_matrix(graded);
    with_weights(graded);
    graded->add_option("--degree", o.degree, "degree, comma separated")->required();
    graded->add_option("--bound", o.bound, "Groebner basis truncation degree");
    auto* check = app.add_subcommand("check-minimal", "test whether the columns are minimal generators");
    common(check);
    with_matrix(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ProblemFile p = load_problem(o.input);
        if (*gb) return run_gb(o, p);
        if (*resolve) return run_resolve(o, p);
        if (*prop) return run_propagate(o, p, false);
        if (*fwd) return run_propagate(o, p, true);
        if (*res) return run_resolution(o, p);
        if (*graded) return run_graded(o, p);
        return run_check_minimal(o, p);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
