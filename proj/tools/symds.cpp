// symds: exact command-line tools for doubly stochastic matrices with
// transpose, antitranspose, or half-turn symmetry.
//
// Every JSON report is deterministic: identical invocations produce
// byte-identical output.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symds/symds.hpp"

namespace {

using nlohmann::ordered_json;
using namespace symds;

constexpr unsigned long long kDefaultSeed = 0x53594D4453ULL;

int max_order_cap() {
    const char* env = std::getenv("SYMDS_MAX_N");
    if (!env) return 7;
    try {
        size_t used = 0;
        int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("SYMDS_MAX_N must be a positive integer, got '" + std::string(env) + "'");
    }
}

void require_within_cap(int n, int cap) {
    if (n > cap)
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds the enumeration cap " +
                                    std::to_string(cap) + " (raise SYMDS_MAX_N to allow it)");
}

ordered_json matrix_rows(const ExactMatrix& a) {
    ordered_json rows = ordered_json::array();
    for (int i = 1; i <= a.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 1; j <= a.order(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json result) {
    ordered_json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["result"] = std::move(result);
    return report;
}

void attach_reference_check(ordered_json& report, const std::string& expected, const std::string& got) {
    ordered_json rc;
    rc["expected"] = expected;
    rc["got"] = got;
    rc["pass"] = (expected == got);
    report["reference_check"] = std::move(rc);
}

// ---- Subcommand payloads --------------------------------------------------------

struct Options {
    int n = 0;
    std::string cls = "all";
    std::string in_path;
    std::string format;  // per-subcommand default applied at dispatch
    bool verify = false;
    bool centro = false;
    int integral = 0;
    std::string target = "th";
    std::string method = "decompose";
    unsigned long long seed = kDefaultSeed;
};

int run_count(const Options& opt) {
    const SymmetryClass cls = parse_class(opt.cls);
    require_within_cap(opt.n, max_order_cap());
    long long counted = 0;
    PermClassStream stream(opt.n, cls);
    while (stream.next()) ++counted;
    const long long formula = count_class(opt.n, cls);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt == "csv") {
        std::cout << "n,class,count,formula_count\n"
                  << opt.n << "," << class_name(cls) << "," << counted << "," << formula << "\n";
    } else if (fmt == "json") {
        ordered_json result;
        result["n"] = opt.n;
        result["class"] = class_name(cls);
        result["count"] = counted;
        result["formula_count"] = formula;
        ordered_json report = envelope("count", {{"n", opt.n}, {"class", opt.cls}}, std::move(result));
        attach_reference_check(report, std::to_string(formula), std::to_string(counted));
        emit(report);
    } else {
        throw std::invalid_argument("count supports --format json or csv");
    }
    return counted == formula ? 0 : 1;
}

int run_enumerate(const Options& opt) {
    const SymmetryClass cls = parse_class(opt.cls);
    require_within_cap(opt.n, max_order_cap());
    const std::vector<Permutation> members = enumerate_class(opt.n, cls);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt == "csv") {
        for (const auto& p : members) {
            for (int i = 1; i <= p.order(); ++i) std::cout << (i > 1 ? "," : "") << p(i);
            std::cout << "\n";
        }
    } else if (fmt == "dsm") {
        for (size_t k = 0; k < members.size(); ++k) {
            if (k) std::cout << "\n";
            write_dsm(std::cout, to_matrix(members[k]), "member " + std::to_string(k + 1));
        }
    } else if (fmt == "json") {
        ordered_json result;
        result["n"] = opt.n;
        result["class"] = class_name(cls);
        result["count"] = members.size();
        ordered_json list = ordered_json::array();
        for (const auto& p : members) list.push_back(to_string(p));
        result["members"] = std::move(list);
        emit(envelope("enumerate", {{"n", opt.n}, {"class", opt.cls}}, std::move(result)));
    } else {
        throw std::invalid_argument("enumerate supports --format json, csv, or dsm");
    }
    return 0;
}

int run_check_extreme(const Options& opt) {
    const SymmetryClass cls = parse_class(opt.cls);
    const ExactMatrix a = read_dsm_file(opt.in_path);
    const ExtremeVerdict v = is_extreme(a, cls, true);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt != "json") throw std::invalid_argument("check-extreme supports --format json only");
    ordered_json result;
    result["is_extreme"] = v.is_extreme;
    result["clause"] = v.structure;
    if (v.witness) {
        ordered_json w = ordered_json::array();
        w.push_back(matrix_rows(v.witness->first));
        w.push_back(matrix_rows(v.witness->second));
        result["witness"] = std::move(w);
    }
    emit(envelope("check-extreme", {{"in", opt.in_path}, {"class", opt.cls}}, std::move(result)));
    return 0;
}

int run_vertices(const Options& opt) {
    const SymmetryClass cls = parse_class(opt.cls);
    const int cap = max_order_cap();
    require_within_cap(opt.n, cap);
    const std::vector<ExactMatrix> vs = enumerate_extreme(opt.n, cls, cap);
    const std::string fmt = opt.format.empty() ? "dsm" : opt.format;
    if (fmt == "dsm") {
        for (size_t k = 0; k < vs.size(); ++k) {
            if (k) std::cout << "\n";
            write_dsm(std::cout, vs[k], "vertex " + std::to_string(k + 1) + " of " + std::to_string(vs.size()));
        }
    } else if (fmt == "json") {
        ordered_json result;
        result["n"] = opt.n;
        result["class"] = class_name(cls);
        result["count"] = vs.size();
        ordered_json list = ordered_json::array();
        for (const auto& v : vs) list.push_back(matrix_rows(v));
        result["vertices"] = std::move(list);
        emit(envelope("vertices", {{"n", opt.n}, {"class", opt.cls}}, std::move(result)));
    } else {
        throw std::invalid_argument("vertices supports --format dsm or json");
    }
    return 0;
}

int run_decompose(const Options& opt) {
    const ExactMatrix a = read_dsm_file(opt.in_path);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt != "json") throw std::invalid_argument("decompose supports --format json only");

    ordered_json terms = ordered_json::array();
    ExactMatrix resum(a.order());
    if (opt.integral > 0) {
        if (opt.cls != "pi")
            throw std::invalid_argument("--integral requires --class pi (half-turn-invariant splitting)");
        const auto perms = centro_birkhoff_integral(a, opt.integral);
        for (const auto& p : perms) {
            terms.push_back({{"coeff", "1"}, {"perm", to_string(p)}});
            resum += to_matrix(p);
        }
    } else {
        Decomposition d;
        if (opt.cls == "ds" || opt.cls == "all")
            d = birkhoff(a);
        else if (opt.cls == "pi")
            d = centro_birkhoff(a);
        else
            throw std::invalid_argument("decompose supports --class ds or pi");
        for (const auto& t : d.terms) {
            terms.push_back({{"coeff", t.coeff.str()}, {"perm", to_string(t.perm)}});
            resum += t.coeff * to_matrix(t.perm);
        }
    }
    ordered_json inputs = {{"in", opt.in_path}, {"class", opt.cls}};
    if (opt.integral > 0) inputs["integral"] = opt.integral;
    ordered_json report = envelope("decompose", std::move(inputs), std::move(terms));
    bool pass = true;
    if (opt.verify) {
        pass = (resum == a);
        attach_reference_check(report, "terms re-sum to the input", pass ? "terms re-sum to the input" : "mismatch");
    }
    emit(report);
    return pass ? 0 : 1;
}

int run_term_rank(const Options& opt) {
    const ExactMatrix a = read_dsm_file(opt.in_path);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    if (fmt != "json") throw std::invalid_argument("term-rank supports --format json only");
    const TermRankResult r = opt.centro ? centro_term_rank(a) : term_rank(a);
    const LineCover c = opt.centro ? centro_min_line_cover(a) : min_line_cover(a);
    ordered_json result;
    result["rho"] = r.rank;
    result["beta"] = c.size();
    ordered_json cells = ordered_json::array();
    for (auto [i, j] : r.cells) cells.push_back({i, j});
    result["witness_positions"] = std::move(cells);
    result["cover_rows"] = c.rows;
    result["cover_cols"] = c.cols;
    ordered_json inputs = {{"in", opt.in_path}};
    inputs["centro"] = opt.centro;
    emit(envelope("term-rank", std::move(inputs), std::move(result)));
    return 0;
}

int run_dimension(const Options& opt) {
    const SymmetryClass cls = parse_class(opt.cls);
    const long long formula = polytope_dimension(opt.n, cls);
    const std::string fmt = opt.format.empty() ? "json" : opt.format;
    bool pass = true;
    std::optional<int> verified;
    if (opt.verify) {
        const int cap = max_order_cap();
        require_within_cap(opt.n, cap);
        verified = affine_rank(enumerate_extreme(opt.n, cls, cap));
        pass = (*verified == formula);
    }
    if (fmt == "csv") {
        if (verified)
            std::cout << "formula,verified_rank,pass\n"
                      << formula << "," << *verified << "," << (pass ? "true" : "false") << "\n";
        else
            std::cout << "formula\n" << formula << "\n";
    } else if (fmt == "json") {
        ordered_json result;
        result["formula"] = formula;
        if (verified) {
            result["verified_rank"] = *verified;
            result["pass"] = pass;
        }
        ordered_json inputs = {{"n", opt.n}, {"class", opt.cls}};
        inputs["verify"] = opt.verify;
        ordered_json report = envelope("dimension", std::move(inputs), std::move(result));
        if (verified) attach_reference_check(report, std::to_string(formula), std::to_string(*verified));
        emit(report);
    } else {
        throw std::invalid_argument("dimension supports --format json or csv");
    }
    return pass ? 0 : 1;
}

int run_basis(const Options& opt) {
    std::vector<Permutation> members;
    SymmetryClass span_class;
    if (opt.target == "centro") {
        members = basis_centro(opt.n);
        span_class = SymmetryClass::PI;
    } else if (opt.target == "th") {
        members = basis_th(opt.n);
        span_class = SymmetryClass::TH;
    } else {
        throw std::invalid_argument("basis supports --target centro or th");
    }
    std::vector<ExactMatrix> ms;
    ms.reserve(members.size());
    for (const auto& p : members) ms.push_back(to_matrix(p));
    const int rank = linear_rank(ms);
    std::optional<int> class_rank;
    if (opt.n <= 8) {
        std::vector<ExactMatrix> all;
        for (const auto& p : enumerate_class(opt.n, span_class)) all.push_back(to_matrix(p));
        class_rank = linear_rank(all);
    }
    const bool pass = rank == static_cast<int>(members.size()) && (!class_rank || *class_rank == rank);

    const std::string fmt = opt.format.empty() ? "dsm" : opt.format;
    if (fmt == "dsm") {
        for (size_t k = 0; k < members.size(); ++k) {
            if (k) std::cout << "\n";
            write_dsm(std::cout, ms[k], "member " + std::to_string(k + 1) + " of " + std::to_string(members.size()));
        }
        std::cout << "\n# size " << members.size() << "\n# rank " << rank << "\n";
        if (class_rank) std::cout << "# class_span_rank " << *class_rank << "\n";
        std::cout << "# pass " << (pass ? "true" : "false") << "\n";
    } else if (fmt == "json") {
        ordered_json result;
        result["n"] = opt.n;
        result["target"] = opt.target;
        result["size"] = members.size();
        result["rank"] = rank;
        if (class_rank) result["class_span_rank"] = *class_rank;
        result["pass"] = pass;
        ordered_json list = ordered_json::array();
        for (const auto& p : members) list.push_back(to_string(p));
        result["members"] = std::move(list);
        emit(envelope("basis", {{"n", opt.n}, {"target", opt.target}}, std::move(result)));
    } else {
        throw std::invalid_argument("basis supports --format dsm or json");
    }
    return pass ? 0 : 1;
}

int run_latin(const Options& opt) {
    LatinSquare t;
    if (opt.method == "decompose") {
        t = latin_from_decomposition(opt.n);
    } else if (opt.method == "block") {
        if (opt.n < 2 || opt.n % 2 != 0)
            throw std::invalid_argument("latin --method block requires a positive even order");
        const int m = opt.n / 2;
        LatinSquare base;
        base.order = m;
        base.cells.resize(static_cast<size_t>(m) * m);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) base.cells[static_cast<size_t>(i - 1) * m + (j - 1)] = (i + j - 2) % m + 1;
        t = latin_block(base);
    } else {
        throw std::invalid_argument("latin supports --method block or decompose");
    }
    const std::string fmt = opt.format.empty() ? "grid" : opt.format;
    if (fmt == "grid") {
        for (int i = 1; i <= t.order; ++i) {
            for (int j = 1; j <= t.order; ++j) std::cout << (j > 1 ? " " : "") << t.at(i, j);
            std::cout << "\n";
        }
    } else if (fmt == "json") {
        ordered_json result;
        result["order"] = t.order;
        result["valid"] = validate_latin(t);
        result["half_turn_invariant"] = validate_latin(t, true);
        ordered_json rows = ordered_json::array();
        for (int i = 1; i <= t.order; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 1; j <= t.order; ++j) row.push_back(t.at(i, j));
            rows.push_back(std::move(row));
        }
        result["rows"] = std::move(rows);
        emit(envelope("latin", {{"n", opt.n}, {"method", opt.method}}, std::move(result)));
    } else {
        throw std::invalid_argument("latin supports --format grid or json");
    }
    return 0;
}

int run_reproduce(const Options& opt) {
    const std::vector<CheckResult> checks = run_all_checks(opt.seed);
    int failed = 0;
    const std::string fmt = opt.format.empty() ? "text" : opt.format;
    if (fmt == "text") {
        for (const auto& c : checks) {
            std::cout << "check " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
            if (!c.pass) {
                std::cout << "  expected: " << c.expected << "\n";
                std::cout << "  got:      " << c.got << "\n";
                ++failed;
            }
        }
        std::cout << "summary: " << checks.size() << " checks, " << failed << " failed\n";
    } else if (fmt == "json") {
        ordered_json list = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json e;
            e["id"] = c.id;
            e["name"] = c.name;
            e["expected"] = c.expected;
            e["got"] = c.got;
            e["pass"] = c.pass;
            if (!c.pass) ++failed;
            list.push_back(std::move(e));
        }
        ordered_json result;
        result["total"] = checks.size();
        result["failed"] = failed;
        result["checks"] = std::move(list);
        ordered_json report = envelope("reproduce", {{"seed", opt.seed}}, std::move(result));
        attach_reference_check(report, "0 failures", std::to_string(failed) + " failures");
        emit(report);
    } else {
        throw std::invalid_argument("reproduce supports --format text or json");
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for doubly stochastic matrices with symmetry structure"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format");
    };

    CLI::App* count = app.add_subcommand("count", "count class members and compare with the closed formula");
    count->add_option("--n", opt.n, "matrix order")->required();
    count->add_option("--class", opt.cls, "symmetry class: t, h, pi, th, ds, or all")->required();
    add_format(count);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all permutations of a symmetry class");
    enumerate->add_option("--n", opt.n, "matrix order")->required();
    enumerate->add_option("--class", opt.cls, "symmetry class")->required();
    add_format(enumerate);

    CLI::App* check = app.add_subcommand("check-extreme", "decide whether a matrix is a polytope vertex");
    check->add_option("--in", opt.in_path, "input matrix file")->required();
    check->add_option("--class", opt.cls, "symmetry class")->required();
    add_format(check);

    CLI::App* vertices = app.add_subcommand("vertices", "enumerate all vertices of a symmetry-class polytope");
    vertices->add_option("--n", opt.n, "matrix order")->required();
    vertices->add_option("--class", opt.cls, "symmetry class")->required();
    add_format(vertices);

    CLI::App* decompose = app.add_subcommand("decompose", "write a matrix as a convex sum of class permutations");
    decompose->add_option("--in", opt.in_path, "input matrix file")->required();
    decompose->add_option("--class", opt.cls, "ds for the plain decomposition, pi for the half-turn one")
        ->default_val("ds");
    decompose->add_option("--integral", opt.integral, "split an integral matrix with line sums k into k permutations");
    decompose->add_flag("--verify", opt.verify, "re-sum the terms and compare with the input");
    add_format(decompose);

    CLI::App* term_rank = app.add_subcommand("term-rank", "maximum matching size and minimum line cover");
    term_rank->add_option("--in", opt.in_path, "input matrix file")->required();
    term_rank->add_flag("--centro", opt.centro, "restrict to half-turn-invariant selections and covers");
    add_format(term_rank);

    CLI::App* dimension = app.add_subcommand("dimension", "polytope dimension by formula, optionally verified");
    dimension->add_option("--n", opt.n, "matrix order")->required();
    dimension->add_option("--class", opt.cls, "symmetry class")->required();
    dimension->add_flag("--verify", opt.verify, "recompute the dimension from the enumerated vertices");
    add_format(dimension);

    CLI::App* basis = app.add_subcommand("basis", "spanning set of class permutations with a rank report");
    basis->add_option("--n", opt.n, "matrix order")->required();
    basis->add_option("--target", opt.target, "centro or th")->required();
    add_format(basis);

    CLI::App* latin = app.add_subcommand("latin", "half-turn-invariant latin square of even order");
    latin->add_option("--n", opt.n, "square order")->required();
    latin->add_option("--method", opt.method, "block or decompose")->default_val("decompose");
    add_format(latin);

    CLI::App* reproduce = app.add_subcommand("reproduce", "run the full verification report");
    reproduce->add_option("--seed", opt.seed, "seed for the randomized batches");
    add_format(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (check->parsed()) return run_check_extreme(opt);
        if (vertices->parsed()) return run_vertices(opt);
        if (decompose->parsed()) return run_decompose(opt);
        if (term_rank->parsed()) return run_term_rank(opt);
        if (dimension->parsed()) return run_dimension(opt);
        if (basis->parsed()) return run_basis(opt);
        if (latin->parsed()) return run_latin(opt);
        if (reproduce->parsed()) return run_reproduce(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: a subcommand is required
}
