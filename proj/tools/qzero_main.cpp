// Command-line front end: build representations, run the relation checkers,
// scan the q -> 0 limits, classify generator families, and emit JSON/CSV
// reports.  Exit codes: 0 all requested checks pass, 1 a check failed,
// 2 usage error.  Errors are mirrored as JSON on stderr.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "qzero/json_io.hpp"

using namespace qz;

namespace {

struct RunConfig {
    int n = 2;
    int dim = 6;
    int margin = 4;
    double tol = 1e-10;
    double classify_tol = 1e-6;
    std::uint64_t seed = 1;
    std::string q_grid = "pow2:10";
    std::string format = "json";
    std::string out;
    int capacity = 20000;
};

Cplx parse_complex(const std::string& s) {
    if (s.rfind("deg:", 0) == 0) {
        const double deg = std::stod(s.substr(4));
        return std::polar(1.0, deg * M_PI / 180.0);
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Cplx(std::stod(s), 0.0);
    const Cplx v(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    const double m = std::abs(v);
    if (std::abs(m - 1.0) > 1e-9 && std::abs(m - 1.0) < 1e-2)
        std::cerr << "warning: phase " << s << " deviates from unit modulus by "
                  << std::abs(m - 1.0) << ", normalizing\n";
    return v;
}

Cplx parse_phase(const std::string& s) {
    Cplx v = parse_complex(s);
    const double m = std::abs(v);
    if (m == 0.0) throw Error("invalid-phase", "zero phase");
    return v / m;
}

ReducedWord parse_word(int n, const std::string& s) {
    ReducedWord w;
    w.n = n;
    if (s.empty() || s == "e" || s == "id") return w;
    if (s[0] == 's') {
        size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != 's') throw Error("invalid-word", "expected s<k> sequence");
            size_t end = pos + 1;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            w.letters.push_back(std::stoi(s.substr(pos + 1, end - pos - 1)));
            pos = end;
        }
    } else {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            w.letters.push_back(std::stoi(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    w.validate();
    return w;
}

std::vector<double> parse_q_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.rfind("pow2:", 0) == 0) {
        const int k = std::stoi(spec.substr(5));
        for (int e = 1; e <= k; ++e) grid.push_back(std::pow(2.0, -e));
        return grid;
    }
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        grid.push_back(std::stod(spec.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return grid;
}

void emit(const RunConfig& cfg, const Json& payload, const RelationReport* csv_source) {
    std::string text;
    if (cfg.format == "csv" && csv_source)
        text = report_to_csv(*csv_source);
    else
        text = payload.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw Error("invalid-parameter", "cannot open output path " + cfg.out);
        f << text;
    }
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("invalid-parameter", "cannot open " + path);
    Json j;
    f >> j;
    return j;
}

StarPolynomial load_expr(const std::string& expr, const std::string& file) {
    if (!expr.empty()) return parse_star_poly(expr);
    if (file.empty()) throw Error("invalid-parameter", "need --expr or --expr-file");
    std::ifstream f(file);
    if (!f) throw Error("invalid-parameter", "cannot open " + file);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_star_poly(text);
}

std::vector<Cplx> phase_grid(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<Cplx> out;
    for (int k = 0; k < count; ++k) out.push_back(std::polar(1.0, angle(rng)));
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"verification workbench for truncated shift-operator models"};
    app.require_subcommand(1);
    app.fallthrough(true);

    RunConfig cfg;
    // a JSON config file supplies defaults; explicit flags override them
    for (int k = 1; k + 1 < argc; ++k) {
        if (std::string(argv[k]) == "--config") {
            const Json j = load_json(argv[k + 1]);
            cfg.n = j.value("n", cfg.n);
            cfg.dim = j.value("dim", cfg.dim);
            cfg.margin = j.value("margin", cfg.margin);
            cfg.tol = j.value("tol", cfg.tol);
            cfg.classify_tol = j.value("classify_tol", cfg.classify_tol);
            cfg.seed = j.value("seed", cfg.seed);
            cfg.q_grid = j.value("q_grid", cfg.q_grid);
            cfg.format = j.value("format", cfg.format);
            cfg.out = j.value("out", cfg.out);
            cfg.capacity = j.value("capacity", cfg.capacity);
        }
    }
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    app.add_option("--n", cfg.n, "rank");
    app.add_option("--dim", cfg.dim, "per-factor truncation dimension");
    app.add_option("--margin", cfg.margin, "interior margin (-1: per-relation degree)");
    app.add_option("--tol", cfg.tol, "residual tolerance");
    app.add_option("--classify-tol", cfg.classify_tol, "zero threshold for classification");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--q-grid", cfg.q_grid, "q grid: pow2:<k> or comma list");
    app.add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "output path (stdout when empty)");
    app.add_option("--capacity", cfg.capacity, "dense capacity cap");

    std::string word_s = "e", lambda_s = "1,0", mu_s = "1,0";
    std::vector<std::string> phases_s;
    double q = 0.5;
    std::string input_path, expr, expr_file;
    int random_phases = 0;
    int witness_index = 2;

    auto* build_qrep_cmd = app.add_subcommand("build-qrep", "construct a q-representation");
    auto* check_q_cmd = app.add_subcommand("check-q", "verify the q-level relations");
    auto* qdet_cmd = app.add_subcommand("qdet", "quantum determinant and star formula");
    auto* cryst_cmd = app.add_subcommand("crystallise", "scan the rescaled q -> 0 limit");
    auto* build_zero_cmd = app.add_subcommand("build-zero", "construct the q = 0 limit model");
    auto* check_zero_cmd = app.add_subcommand("check-zero", "verify the q = 0 relation catalog");
    auto* canonical_cmd = app.add_subcommand("canonical", "emit a canonical rank-2 model");
    auto* classify_cmd = app.add_subcommand("classify", "classify a rank-2 generator family");
    auto* intertwine_cmd = app.add_subcommand("intertwine", "classify and build the intertwiner");
    auto* bialg_cmd = app.add_subcommand("bialgebra", "coproduct, coassociativity, counit checks");
    auto* antipode_cmd = app.add_subcommand("demo-antipode", "antipode obstruction value");
    auto* gap_cmd = app.add_subcommand("demo-toeplitz-gap", "character gap lower bound");
    auto* lemma_cmd = app.add_subcommand("lemma-perm", "permutation sum lower bounds");
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression in a model");
    auto* witness_cmd = app.add_subcommand("witness", "matrix-unit irreducibility witnesses");

    for (auto* cmd : {build_qrep_cmd, check_q_cmd, qdet_cmd, cryst_cmd}) {
        cmd->add_option("--q", q, "deformation parameter in (0,1)");
        cmd->add_option("--phases", phases_s, "n unit phases, re,im or deg:<angle>");
        cmd->add_option("--word", word_s, "reduced word, s1s2... or comma letters");
    }
    for (auto* cmd : {build_zero_cmd, check_zero_cmd, canonical_cmd, eval_cmd, witness_cmd,
                      intertwine_cmd}) {
        cmd->add_option("--word", word_s, "reduced word");
        cmd->add_option("--lambda", lambda_s, "first phase");
        cmd->add_option("--mu", mu_s, "second phase");
    }
    check_zero_cmd->add_option("--input", input_path, "representation JSON");
    check_zero_cmd->add_option("--random-phases", random_phases,
                               "additionally check this many random phase pairs");
    classify_cmd->add_option("--input", input_path, "representation JSON")->required();
    intertwine_cmd->add_option("--input", input_path, "representation JSON");
    eval_cmd->add_option("--input", input_path, "representation JSON");
    eval_cmd->add_option("--expr", expr, "expression text");
    eval_cmd->add_option("--expr-file", expr_file, "expression file");
    gap_cmd->add_option("--expr", expr, "expression text");
    gap_cmd->add_option("--expr-file", expr_file, "expression file");
    witness_cmd->add_option("--max-index", witness_index, "largest matrix-unit index");

    std::string word_b = "s2", word_c = "s1s2";
    bialg_cmd->add_option("--word", word_s, "first model word");
    bialg_cmd->add_option("--word-b", word_b, "second model word");
    bialg_cmd->add_option("--word-c", word_c, "third model word");
    bialg_cmd->add_option("--lambda", lambda_s, "first phase");
    bialg_cmd->add_option("--mu", mu_s, "second phase");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    set_dense_capacity_cap(cfg.capacity);

    auto phases = [&]() {
        std::vector<Cplx> out;
        for (const auto& s : phases_s) out.push_back(parse_phase(s));
        if (out.empty()) out.assign(cfg.n, Cplx(1.0));
        return out;
    };

    if (build_qrep_cmd->parsed()) {
        const QRep r = build_qrep(cfg.n, phases(), parse_word(cfg.n, word_s), q, cfg.dim);
        emit(cfg, qrep_to_json(r), nullptr);
        return 0;
    }
    if (check_q_cmd->parsed()) {
        const QRep r = build_qrep(cfg.n, phases(), parse_word(cfg.n, word_s), q, cfg.dim);
        const RelationReport rep = check_t_relations(r, cfg.tol, cfg.margin);
        emit(cfg, report_to_json(rep), &rep);
        return rep.pass ? 0 : 1;
    }
    if (qdet_cmd->parsed()) {
        const QRep r = build_qrep(cfg.n, phases(), parse_word(cfg.n, word_s), q, cfg.dim);
        const double dres = qdet_residual(r, cfg.margin >= 0 ? cfg.margin : cfg.n + 1);
        const RelationReport star = check_star_formula(r, cfg.tol, cfg.margin >= 0 ? cfg.margin : cfg.n + 1);
        Json out = {{"qdet_residual", dres}, {"star", report_to_json(star)}};
        emit(cfg, out, &star);
        return (dres <= cfg.tol && star.pass) ? 0 : 1;
    }
    if (cryst_cmd->parsed()) {
        const LimitScanReport rep = limit_scan(cfg.n, phases(), parse_word(cfg.n, word_s),
                                               cfg.dim, parse_q_grid(cfg.q_grid));
        emit(cfg, limit_to_json(rep), nullptr);
        return rep.verdict == "converged" ? 0 : 1;
    }
    if (build_zero_cmd->parsed()) {
        const CanonicalModel m =
            canonical_model(parse_phase(lambda_s), parse_phase(mu_s), word6_parse(word_s), cfg.dim);
        emit(cfg, canonical_to_json(m), nullptr);
        return 0;
    }
    if (canonical_cmd->parsed()) {
        const CanonicalModel m =
            canonical_model(parse_phase(lambda_s), parse_phase(mu_s), word6_parse(word_s), cfg.dim);
        emit(cfg, canonical_to_json(m), nullptr);
        return 0;
    }
    if (check_zero_cmd->parsed()) {
        RelationReport rep;
        if (!input_path.empty()) {
            const DenseRep r = rep_from_json(load_json(input_path));
            rep = check_relations(r, cfg.tol, cfg.margin);
        } else {
            const CanonicalModel m = canonical_model(parse_phase(lambda_s), parse_phase(mu_s),
                                                     word6_parse(word_s), cfg.dim);
            rep = check_relations(m.rep, cfg.tol, cfg.margin);
            if (random_phases > 0) {
                const auto ls = phase_grid(random_phases, cfg.seed);
                const auto ms = phase_grid(random_phases, cfg.seed + 1);
                for (int k = 0; k < random_phases; ++k) {
                    const CanonicalModel rm =
                        canonical_model(ls[k], ms[k], word6_parse(word_s), cfg.dim);
                    RelationReport extra = check_relations(rm.rep, cfg.tol, cfg.margin);
                    for (auto& e : extra.entries) {
                        e.indices.insert(e.indices.begin(), k + 1);
                        rep.entries.push_back(std::move(e));
                    }
                }
                rep.finalize(cfg.tol);
            }
        }
        emit(cfg, report_to_json(rep), &rep);
        return rep.pass ? 0 : 1;
    }
    if (classify_cmd->parsed()) {
        const DenseRep r = rep_from_json(load_json(input_path));
        const ClassificationReport rep = classify(r, cfg.classify_tol);
        emit(cfg, classification_to_json(rep), nullptr);
        return 0;
    }
    if (intertwine_cmd->parsed()) {
        DenseRep r;
        if (!input_path.empty()) {
            r = rep_from_json(load_json(input_path));
        } else {
            r = materialize(canonical_model(parse_phase(lambda_s), parse_phase(mu_s),
                                            word6_parse(word_s), cfg.dim)
                                .rep);
        }
        const ClassificationReport rep = classify(r, cfg.classify_tol);
        const Intertwiner u = build_intertwiner(r, rep, cfg.dim, std::max(cfg.margin, 0));
        Json out = classification_to_json(rep);
        out["intertwiner_residual"] = u.residual;
        out["orthonormality_residual"] = u.orthonormality;
        emit(cfg, out, nullptr);
        return (u.residual <= 1e-8) ? 0 : 1;
    }
    if (bialg_cmd->parsed()) {
        const Cplx l = parse_phase(lambda_s), m = parse_phase(mu_s);
        const CanonicalModel a = canonical_model(l, m, word6_parse(word_s), cfg.dim);
        const CanonicalModel b = canonical_model(m, l, word6_parse(word_b), cfg.dim);
        const CanonicalModel c = canonical_model(l, l, word6_parse(word_c), cfg.dim);
        // margins default to the per-relation degree on the doubled spaces
        const int margin = app.count("--margin") ? cfg.margin : -1;
        const BialgebraReport rep = check_bialgebra(a.rep, b.rep, c.rep, 1e-12, margin);
        emit(cfg, bialg_to_json(rep), nullptr);
        return rep.pass ? 0 : 1;
    }
    if (antipode_cmd->parsed()) {
        const double v = antipode_obstruction(cfg.dim >= 2 ? cfg.dim : 8);
        Json out = {{"obstruction", v}};
        std::cout << "antipode obstruction: " << v << "\n";
        if (!cfg.out.empty()) emit(cfg, out, nullptr);
        return std::abs(v - 1.0) <= 1e-12 ? 0 : 1;
    }
    if (gap_cmd->parsed()) {
        const double bound = toeplitz_gap_demo(load_expr(expr, expr_file), eighth_roots());
        Json out = {{"gap_bound", bound}};
        std::cout << "character gap bound: " << bound << "\n";
        if (!cfg.out.empty()) emit(cfg, out, nullptr);
        return bound >= 1.0 ? 0 : 1;
    }
    if (lemma_cmd->parsed()) {
        Json rows = Json::array();
        bool ok = true;
        for (int s = 1; s <= cfg.n; ++s)
            for (int r = s + 1; r <= cfg.n + 1; ++r) {
                const int v = lemma_perm_min(cfg.n, r, s);
                rows.push_back({{"r", r}, {"s", s}, {"min_sum", v}, {"bound", r - s}});
                ok = ok && v >= r - s;
            }
        emit(cfg, Json{{"rows", rows}, {"pass", ok}}, nullptr);
        return ok ? 0 : 1;
    }
    if (eval_cmd->parsed()) {
        const StarPolynomial p = load_expr(expr, expr_file);
        DenseRep r;
        if (!input_path.empty()) {
            r = rep_from_json(load_json(input_path));
        } else {
            r = materialize(canonical_model(parse_phase(lambda_s), parse_phase(mu_s),
                                            word6_parse(word_s), cfg.dim)
                                .rep);
        }
        DenseAlg alg{r};
        const CMat value = eval_star_poly(p, alg);
        Json out = matrix_to_json(TruncatedOperator(r.shape, value));
        out["norm"] = op_norm(value);
        out["expr"] = print_star_poly(p);
        emit(cfg, out, nullptr);
        return 0;
    }
    if (witness_cmd->parsed()) {
        const CanonicalModel m = canonical_model(parse_phase(lambda_s), parse_phase(mu_s),
                                                 word6_parse(word_s), cfg.dim);
        const RelationReport rep =
            irreducibility_witness(m, witness_index, std::max(cfg.margin, 0) == 4 ? 0 : cfg.margin);
        emit(cfg, report_to_json(rep), &rep);
        return rep.max_residual <= 1e-12 ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const Error& e) {
        Json err = {{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return e.code() == "invalid-parameter" || e.code() == "invalid-word" ||
                       e.code() == "invalid-phase"
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        Json err = {{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
