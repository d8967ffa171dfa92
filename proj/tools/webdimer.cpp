#include "webdimer/basisgen.hpp"
#include "webdimer/enumeration.hpp"
#include "webdimer/pairing.hpp"
#include "webdimer/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wd;

namespace {

// Exit statuses.
constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Usage : Error {
    explicit Usage(const std::string& msg) : Error("usage", msg) {}
};

// Computation failures; every other library error means bad input.
bool is_failure_code(const std::string& c) {
    static const std::set<std::string> codes = {"internal", "expansion_failed", "rank_loss", "rank_deficient"};
    return codes.count(c) > 0;
}

void emit_error(const std::string& code, const std::string& msg) {
    std::cerr << json{{"error", code}, {"message", msg}}.dump() << "\n";
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in || fs::is_directory(path)) throw Error("io", "cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw Error("bad_json", path + ": " + e.what());
    }
}

void write_json(const fs::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw Error("io", "cannot write " + p.string());
    out << j.dump(2) << "\n";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Usage("expected a comma-separated integer list, got \"" + s + "\"");
        }
    }
    return out;
}

std::pair<int, int> parse_shape(const std::string& s) {
    auto v = parse_int_list(s);
    if (v.size() != 2) throw Usage("shape must be K,N");
    return {v[0], v[1]};
}

// Aligned text or CSV.
struct Table {
    std::vector<std::string> head;
    std::vector<std::vector<std::string>> rows;

    std::string render(const std::string& format) const {
        std::ostringstream os;
        if (format == "csv") {
            auto line = [&](const std::vector<std::string>& r) {
                for (size_t i = 0; i < r.size(); ++i) {
                    bool quote = r[i].find_first_of(",\"") != std::string::npos;
                    std::string cell = r[i];
                    if (quote) {
                        std::string esc;
                        for (char c : cell) esc += c == '"' ? std::string("\"\"") : std::string(1, c);
                        cell = "\"" + esc + "\"";
                    }
                    os << (i ? "," : "") << cell;
                }
                os << "\n";
            };
            line(head);
            for (auto& r : rows) line(r);
            return os.str();
        }
        std::vector<size_t> w(head.size());
        for (size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
        for (auto& r : rows)
            for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(int(w[i])) << r[i];
            os << "\n";
        };
        line(head);
        std::vector<std::string> rule;
        for (size_t x : w) rule.push_back(std::string(x, '-'));
        line(rule);
        for (auto& r : rows) line(r);
        return os.str();
    }
};

struct Output {
    json j;
    std::optional<Table> table;
    std::string text;  // table-format fallback when there is no natural table
};

void print(const Output& o, const std::string& format) {
    if (format == "json") {
        std::cout << o.j.dump(2) << "\n";
    } else if (o.table) {
        std::cout << o.table->render(format);
    } else if (format == "csv") {
        throw Usage("this command has no CSV form; use --format json or table");
    } else {
        std::cout << (o.text.empty() ? o.j.dump(2) + "\n" : o.text);
    }
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += std::to_string(x);
    return s;
}

PlabicGraph load_graph(const std::string& file, const std::string& rect) {
    if (!file.empty() && !rect.empty()) throw Usage("give either --graph or --rectangle, not both");
    if (!file.empty()) return plabic_from_json(read_json(file));
    if (!rect.empty()) {
        auto [k, n] = parse_shape(rect);
        return make_rectangle_graph(k, n);
    }
    throw Usage("a plabic graph is required: --graph FILE or --rectangle K,N");
}

WebCombination load_web(const std::string& path, int default_r) { return combination_from_json(read_json(path), default_r); }

std::vector<fs::path> json_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw Error("io", dir + " is not a directory");
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("io", "no .json files in " + dir);
    return files;
}

// ---- commands ----------------------------------------------------------------

struct BasisOpts {
    std::string kind;
    int n = 0;
    std::string out;
};

Output cmd_basis(const BasisOpts& o) {
    std::vector<Web> B;
    int rows;
    if (o.kind == "sl2") B = sl2_basis(o.n), rows = 2;
    else if (o.kind == "sl3") B = sl3_basis(o.n), rows = 3;
    else throw Usage("basis kind must be sl2 or sl3");
    auto Ts = syt_enumerate(rows, o.n / rows);
    if (!o.out.empty()) fs::create_directories(o.out);
    Output res;
    res.j = {{"kind", o.kind}, {"n", o.n}, {"size", B.size()}, {"webs", json::array()}};
    res.table = Table{{"index", "word", "sign", "vertices", "forks"}, {}};
    for (size_t i = 0; i < B.size(); ++i) {
        auto ws = word_and_sign(B[i]);
        std::string word = word_str(ws.word);
        json entry = {{"index", i}, {"word", word}, {"sign", ws.sign}, {"tableau", tableau_to_json(Ts[i])}};
        if (o.out.empty()) entry["web"] = web_to_json(B[i]);
        else write_json(fs::path(o.out) / (word + ".json"), web_to_json(B[i]));
        res.j["webs"].push_back(entry);
        std::string fk;
        for (auto [a, b] : forks(B[i])) fk += (fk.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
        res.table->rows.push_back({std::to_string(i), word, std::to_string(ws.sign), std::to_string(B[i].nv()), fk});
    }
    return res;
}

struct DimersOpts {
    std::string graph, rect, lambda;
    int r = 1;
};

Output cmd_dimers(const DimersOpts& o) {
    PlabicGraph G = load_graph(o.graph, o.rect);
    std::vector<int> lambda = o.lambda.empty() ? std::vector<int>(G.n(), 1) : parse_int_list(o.lambda);
    auto covers = enumerate_dimer_covers(G, o.r, lambda);
    Output res;
    res.j = {{"r", o.r}, {"lambda", lambda}, {"count", covers.size()}, {"covers", json::array()}};
    res.table = Table{{"index", "edges (id^mult)", "face weight"}, {}};
    for (size_t i = 0; i < covers.size(); ++i) {
        json c = cover_to_json(covers[i]);
        std::string fw = mono_str(face_weight(G, covers[i]));
        c["face_weight"] = fw;
        res.j["covers"].push_back(c);
        std::string es;
        for (size_t e = 0; e < covers[i].mult.size(); ++e)
            if (covers[i].mult[e])
                es += (es.empty() ? "" : " ") + std::to_string(e) + (covers[i].mult[e] > 1 ? "^" + std::to_string(covers[i].mult[e]) : "");
        res.table->rows.push_back({std::to_string(i), es, fw});
    }
    return res;
}

struct MeasureOpts {
    std::string network, rect;
};

Output cmd_measure(const MeasureOpts& o, std::uint64_t seed) {
    if (o.network.empty() == o.rect.empty()) throw Usage("give exactly one of --network FILE or --rectangle K,N");
    std::optional<Network> N;
    if (!o.network.empty()) {
        N.emplace(network_from_json(read_json(o.network)));
    } else {
        auto [k, n] = parse_shape(o.rect);
        RationalRng rng(seed);
        N.emplace(random_network(make_rectangle_graph(k, n), rng));
    }
    auto v = boundary_measurement(*N);
    int k = N->G.type(), n = N->G.n();
    Output res;
    json pl = json::object();
    res.table = Table{{"subset", "plucker"}, {}};
    for (auto& [I, q] : v) {
        pl[subset_str(I)] = q_str(q);
        res.table->rows.push_back({subset_str(I), q_str(q)});
    }
    res.j = {{"k", k}, {"n", n}, {"plucker", pl}, {"three_term_violations", three_term_violations(v, k, n)}};
    if (!o.rect.empty()) res.j["network"] = network_to_json(*N), res.j["seed"] = seed;
    return res;
}

std::vector<Subset> parse_monomials(const std::string& s) {
    std::vector<Subset> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto v = parse_int_list(item);
        if (v.empty()) throw Usage("empty subset in --monomials");
        out.push_back(subset_of(v));
    }
    if (out.empty()) throw Usage("--monomials needs at least one subset");
    return out;
}

struct PairOpts {
    std::string web, monomials, poly, with;
    int r = 3;
};

Output cmd_pair(const PairOpts& o) {
    int given = !o.monomials.empty() + !o.poly.empty() + !o.with.empty();
    if (given != 1) throw Usage("give exactly one of --monomials, --poly or --with");
    WebCombination W = load_web(o.web, o.r);
    int n = W.terms.begin()->second.second.n;
    Q value;
    json input;
    if (!o.monomials.empty()) {
        auto I = parse_monomials(o.monomials);
        int k = popcount(I[0]);
        PluckerPoly f = PluckerPoly::constant(k, n, 1);
        for (Subset s : I) f = f * PluckerPoly::var(k, n, s);
        value = pair_with_poly(W, f);
        input = o.monomials;
    } else if (!o.poly.empty()) {
        PluckerPoly f = poly_from_json(read_json(o.poly), n);
        value = pair_with_poly(W, f);
        input = o.poly;
    } else {
        WebCombination X = load_web(o.with, o.r);
        value = pair_webs(W, X);
        input = o.with;
    }
    Output res;
    res.j = {{"pairing", q_str(value)}, {"against", input}};
    res.text = q_str(value) + "\n";
    return res;
}

struct DualityOpts {
    std::string dirA, dirB, which;
    bool report = false, full = false;
};

json duality_summary(const DualityReport& r) {
    return {{"rows", r.pairing.rows},
            {"cols", r.pairing.cols},
            {"transpose_bijection", r.transpose_bijection},
            {"diagonal_pm1", r.diagonal_pm1},
            {"diagonal_is_sign", r.diagonal_is_sign},
            {"offdiag_nonzero", r.offdiag_nonzero}};
}

Output cmd_duality(const DualityOpts& o, bool& failed) {
    DualityReport rep;
    if (!o.which.empty()) {
        if (!o.dirA.empty() || !o.dirB.empty()) throw Usage("--case excludes --basisA/--basisB");
        if (o.which == "2-3") rep = duality_matrix(sl2_basis(6), sl3_basis(6));
        else if (o.which == "3-2") rep = duality_matrix(sl3_basis(6), sl2_basis(6));
        else if (o.which == "3-3") rep = duality_matrix(sl3_basis(9), sl3_basis(9));
        else throw Usage("--case must be 2-3, 3-2 or 3-3");
    } else {
        if (o.dirA.empty() || o.dirB.empty()) throw Usage("give --basisA DIR and --basisB DIR, or --case");
        std::vector<WebCombination> A;
        for (auto& p : json_files(o.dirA)) A.push_back(load_web(p.string(), 3));
        std::vector<Web> B;
        for (auto& p : json_files(o.dirB)) {
            auto c = load_web(p.string(), 3);
            if (c.size() != 1 || c.terms.begin()->second.first != 1)
                throw Error("bad_argument", p.string() + ": basisB entries must be single webs");
            B.push_back(c.terms.begin()->second.second);
        }
        bool plain = A.size() == B.size() && std::all_of(A.begin(), A.end(), [](auto& c) {
                         return c.size() == 1 && c.terms.begin()->second.first == 1;
                     });
        if (plain) {
            std::vector<Web> Aw;
            for (auto& c : A) Aw.push_back(c.terms.begin()->second.second);
            rep = duality_matrix(Aw, B);
        } else {
            rep = duality_rows(A, B);
        }
    }
    Output res;
    res.j = duality_summary(rep);
    failed = !(rep.transpose_bijection && rep.diagonal_pm1 && rep.offdiag_nonzero == 0);
    res.j["dual_up_to_sign"] = !failed;
    if (o.report) {
        json rows = json::array();
        for (int i = 0; i < rep.pairing.rows; ++i) {
            int j = rep.partner[i];
            rows.push_back({{"row", i}, {"partner", j}, {"value", j >= 0 ? q_str(rep.pairing(i, j)) : "-"},
                            {"sign", j >= 0 ? rep.signs[j] : 0}});
        }
        res.j["diagonal"] = rows;
    }
    if (o.full) res.j["matrix"] = matrix_to_json(rep.pairing);
    Table t{{"rows", "cols", "transpose bijection", "diagonal ±1", "diagonal = sign", "off-diagonal nonzero"}, {}};
    t.rows.push_back({std::to_string(rep.pairing.rows), std::to_string(rep.pairing.cols), rep.transpose_bijection ? "yes" : "no",
                      rep.diagonal_pm1 ? "yes" : "no", rep.diagonal_is_sign ? "yes" : "no", std::to_string(rep.offdiag_nonzero)});
    res.table = t;
    return res;
}

Output cmd_twist_matrix(const std::string& path) {
    Matrix M = matrix_from_json(read_json(path));
    Matrix T = twist_matrix(M);
    Output res;
    res.j = {{"twist", matrix_to_json(T)}, {"cyclic_form_agrees", twist_matrix_cyclic(M) == T}};
    Table t;
    for (int c = 0; c < T.cols; ++c) t.head.push_back(std::to_string(c + 1));
    for (int r = 0; r < T.rows; ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < T.cols; ++c) row.push_back(q_str(T(r, c)));
        t.rows.push_back(row);
    }
    res.table = t;
    return res;
}

struct TwistOpts {
    std::string poly, graph, rect, mode = "literal";
    int check = 0;
};

Output cmd_twist_expand(const TwistOpts& o, std::uint64_t seed, bool& failed) {
    PlabicGraph G = load_graph(o.graph, o.rect);
    PluckerPoly f = poly_from_json(read_json(o.poly), G.n());
    TwistMode mode;
    if (o.mode == "literal") mode = TwistMode::literal;
    else if (o.mode == "factored") mode = TwistMode::factored;
    else throw Usage("--mode must be literal or factored");
    PluckerPoly t = twist_expand(f, G, mode);
    Output res;
    res.j = {{"terms", t.terms.size()}, {"laurent", poly_to_json(t)}};
    res.text = t.str() + "\n";
    if (o.check > 0) {
        RationalRng rng(seed);
        int agree = 0, poles = 0;
        for (int i = 0; i < o.check; ++i) {
            Matrix M = random_matrix(G.type(), G.n(), rng);
            try {
                agree += evaluate(t, M) == evaluate(f, twist_matrix(M));
            } catch (const Error& e) {
                if (e.code != "pole_at_point" || ++poles > 100 * o.check) throw;
                --i;  // resample
            }
        }
        res.j["check"] = {{"points", o.check}, {"agree", agree}, {"seed", seed}};
        failed = agree != o.check;
        res.text += "check: " + std::to_string(agree) + "/" + std::to_string(o.check) + " points agree with f(twist(M))\n";
    }
    return res;
}

Output cmd_count_trees(int d, bool codes) {
    auto trees = enumerate_sl3_tree_webs(d);
    Output res;
    res.j = {{"degree", d}, {"n", 3 * d}, {"enumerated", trees.size()}, {"closed_form", tree_count_closed_form(d)}};
    res.table = Table{{"degree", "n", "enumerated", "closed form"}, {}};
    res.table->rows.push_back({std::to_string(d), std::to_string(3 * d), std::to_string(trees.size()),
                               std::to_string(tree_count_closed_form(d))});
    if (codes) {
        res.j["trees"] = json::array();
        Table t{{"index", "binary", "first", "second"}, {}};
        for (size_t i = 0; i < trees.size(); ++i) {
            auto c = tree_bijection(trees[i]);
            res.j["trees"].push_back({{"binary", c.binary}, {"first", c.first}, {"second", c.second}, {"web", web_to_json(trees[i])}});
            t.rows.push_back({std::to_string(i), c.binary, c.first, c.second});
        }
        res.table = t;
    }
    return res;
}

Output cmd_count_sl4(std::uint64_t seed) {
    auto r = enumerate_sl4_tree_webs(12, seed);
    Output res;
    res.j = {{"n", 12},
             {"trees", r.trees},
             {"zero_invariant", r.zero_invariant},
             {"distinct_up_to_sign", r.distinct},
             {"distinct_exact", r.distinct_exact},
             {"collisions_checked", r.collisions_checked},
             {"collisions_confirmed", r.collisions_confirmed},
             {"fingerprint_size", r.fingerprint_size},
             {"seed", r.seed},
             {"convention", "connected standard trees; invariants compared up to sign"}};
    res.table = Table{{"trees", "zero", "distinct (up to sign)", "distinct (exact)", "collisions checked", "confirmed"}, {}};
    res.table->rows.push_back({std::to_string(r.trees), std::to_string(r.zero_invariant), std::to_string(r.distinct),
                               std::to_string(r.distinct_exact), std::to_string(r.collisions_checked),
                               std::to_string(r.collisions_confirmed)});
    return res;
}

Output cmd_count_lower_bound(int n) {
    if (n < 3) throw Usage("-n must be at least 3");
    Output res;
    // Only the C(n,12) coefficient is recomputed here (tree enumeration at r = 4).
    auto coeff = [](int v, const char* status) { return json{{"value", v}, {"status", status}}; };
    res.j = {{"rows", json::array()},
             {"degree4_coefficients",
              {{"9", coeff(288, "not reproduced")},
               {"10", coeff(400, "not reproduced")},
               {"11", coeff(264, "not reproduced")},
               {"12", coeff(52, "reproduced by tree enumeration")}}}};
    res.table = Table{{"n", "tree lower bound", "degree-4 formula"}, {}};
    for (int m = 3; m <= n; ++m) {
        auto lb = tree_lower_bound(m);
        auto d4 = degree4_count_formula(m);
        res.j["rows"].push_back({{"n", m}, {"lower_bound", lb}, {"degree4_formula", d4}});
        res.table->rows.push_back({std::to_string(m), std::to_string(lb), std::to_string(d4)});
    }
    return res;
}

Output cmd_verify(const std::string& suite, const VerifyConfig& cfg, bool& failed) {
    if (!is_suite(suite)) {
        std::string names;
        for (auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
        throw Usage("unknown suite \"" + suite + "\"; choose one of: " + names);
    }
    auto rs = run_suite(suite, cfg);
    failed = !all_passed(rs);
    Output res;
    res.j = report_json(rs, cfg);
    res.text = report_table(rs);
    Table t{{"criterion", "status", "title", "summary"}, {}};
    for (auto& r : rs) t.rows.push_back({std::to_string(r.id), status_str(r.status), r.title, r.summary});
    res.table = t;
    return res;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Webs, dimers and the twist on Grassmannians"};
    app.require_subcommand(1);
    std::string format = "json";
    std::uint64_t seed = 2024;
    unsigned workers_n = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--seed", seed, "Seed for random points and networks");
    app.add_option("--workers", workers_n, "Worker threads (0 = all cores)");

    BasisOpts bo;
    auto* basis = app.add_subcommand("basis", "Generate the SL_2 or SL_3 web basis for (1^n)");
    basis->add_option("kind", bo.kind, "sl2 or sl3")->required()->check(CLI::IsMember({"sl2", "sl3"}));
    basis->add_option("-n", bo.n, "Number of boundary points")->required();
    basis->add_option("--out", bo.out, "Directory for one web file per tableau");

    DimersOpts dopt;
    auto* dimers = app.add_subcommand("dimers", "r-dimer covers of a plabic graph");
    auto* denum = dimers->add_subcommand("enum", "Enumerate covers");
    dimers->require_subcommand(1);
    denum->add_option("--graph", dopt.graph, "Plabic graph JSON");
    denum->add_option("--rectangle", dopt.rect, "Built-in rectangle graph K,N");
    denum->add_option("-r", dopt.r, "Cover multiplicity")->check(CLI::PositiveNumber);
    denum->add_option("--lambda", dopt.lambda, "Boundary condition, e.g. 1,1,1,1,1,1 (default all ones)");

    MeasureOpts mo;
    auto* measure = app.add_subcommand("measure", "Boundary measurement of a network");
    measure->add_option("--network", mo.network, "Network JSON (plabic graph plus weights)");
    measure->add_option("--rectangle", mo.rect, "Random network on rectangle K,N (uses --seed)");

    PairOpts po;
    auto* pair = app.add_subcommand("pair", "Pairing of a web with monomials, a polynomial or another web");
    pair->add_option("--web", po.web, "Web or web combination JSON")->required();
    pair->add_option("--monomials", po.monomials, "Plücker factors, e.g. \"1,2,4;3,5,12;6,8,11;7,9,10\"");
    pair->add_option("--poly", po.poly, "Plücker polynomial JSON");
    pair->add_option("--with", po.with, "Second web JSON (expanded in Plücker coordinates)");
    pair->add_option("-r", po.r, "Default r when the web file omits it");

    DualityOpts du;
    auto* duality = app.add_subcommand("duality", "Pairing matrix between two bases");
    duality->add_option("--basisA", du.dirA, "Directory of row webs (SL_r)");
    duality->add_option("--basisB", du.dirB, "Directory of column webs (SL_k)");
    duality->add_option("--case", du.which, "Generated case: 2-3, 3-2 or 3-3");
    duality->add_flag("--report", du.report, "Include the per-row diagonal");
    duality->add_flag("--full", du.full, "Include the whole matrix");

    std::string mpath;
    auto* tmat = app.add_subcommand("twist-matrix", "Twist of a k x n matrix");
    tmat->add_option("--matrix", mpath, "Matrix JSON (nested arrays of rationals)")->required();

    TwistOpts to;
    auto* texp = app.add_subcommand("twist-expand", "Laurent expansion of the twist of a polynomial");
    texp->add_option("--poly", to.poly, "Plücker polynomial JSON")->required();
    texp->add_option("--graph", to.graph, "Plabic graph JSON");
    texp->add_option("--rectangle", to.rect, "Built-in rectangle graph K,N");
    texp->add_option("--mode", to.mode, "literal (sum over covers) or factored")->check(CLI::IsMember({"literal", "factored"}));
    texp->add_option("--check", to.check, "Compare with f(twist(M)) at this many random points");

    auto* count = app.add_subcommand("count", "Tree web counts");
    count->require_subcommand(1);
    int tree_r = 1;
    bool codes = false;
    auto* ctrees = count->add_subcommand("trees", "SL_3 tree webs of a given Plücker degree");
    ctrees->add_option("--r", tree_r, "Plücker degree (1..6)")->required()->check(CLI::Range(1, 6));
    ctrees->add_flag("--codes", codes, "List the binary and 4-ary tree codes");
    auto* csl4 = count->add_subcommand("sl4-trees", "Distinct SL_4 tree invariants on 12 points");
    int lb_n = 15;
    auto* clb = count->add_subcommand("lower-bound", "Tree lower bound and degree-4 formula for n = 3..N");
    clb->add_option("-n", lb_n, "Largest n")->required();

    std::string suite = "all";
    VerifyConfig vc;
    auto* verify = app.add_subcommand("verify", "Run acceptance checks");
    verify->add_option("--suite", suite, "all, 1..10, or a named suite");
    verify->add_option("--sl4-dir", vc.sl4_dir, "Directory of SL_4 orbit-representative web files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        std::cerr << app.help();
        return kUsage;
    }

    set_workers(workers_n);
    vc.seed = seed;
    bool failed = false;
    try {
        Output out;
        if (*basis) out = cmd_basis(bo);
        else if (*denum) out = cmd_dimers(dopt);
        else if (*measure) out = cmd_measure(mo, seed);
        else if (*pair) out = cmd_pair(po);
        else if (*duality) out = cmd_duality(du, failed);
        else if (*tmat) out = cmd_twist_matrix(mpath);
        else if (*texp) out = cmd_twist_expand(to, seed, failed);
        else if (*ctrees) out = cmd_count_trees(tree_r, codes);
        else if (*csl4) out = cmd_count_sl4(seed);
        else if (*clb) out = cmd_count_lower_bound(lb_n);
        else out = cmd_verify(suite, vc, failed);
        print(out, format);
    } catch (const Usage& e) {
        emit_error(e.code, e.what());
        return kUsage;
    } catch (const Error& e) {
        emit_error(e.code, e.what());
        return is_failure_code(e.code) ? kFailed : kUsage;
    } catch (const json::exception& e) {
        emit_error("bad_json", e.what());
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        emit_error("io", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kFailed;
    }
    return failed ? kFailed : kOk;
}
