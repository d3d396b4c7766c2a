#include "fpoly/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpoly/acceptance.hpp"
#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/identities.hpp"
#include "fpoly/idspace.hpp"
#include "fpoly/laplacian.hpp"
#include "fpoly/rng.hpp"

namespace fpoly {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw SchemaError("bad index list: " + text);
        }
    }
    return out;
}

int cmd_forest_poly(const std::string& graph_path, const std::string& partition_text,
                    std::ostream& out) {
    MarkedGraph g = MarkedGraph::from_json(read_file(graph_path));
    Partition p = canonicalize(Partition::parse(partition_text));
    if (p.m() != g.m()) throw SchemaError("partition arity does not match the graph's marked count");
    Poly poly = forest_poly(g, p);
    std::vector<std::string> names = g.var_names();
    ordered_json j;
    j["poly"] = poly.str(&names);
    j["forests"] = forest_count(g, p);
    out << j.dump() << "\n";
    return 0;
}

int cmd_gen_identity(int m, int c, int jv, const std::string& out_path, std::ostream& out) {
    IdentityRecord rec = gen_identity(m, c, jv);
    std::string text = rec.to_json();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw SchemaError("cannot write file: " + out_path);
        f << text << "\n";
    }
    out << text << "\n";
    return 0;
}

int cmd_verify_identity(const std::string& id_path, const std::string& graph_path,
                        std::ostream& out) {
    std::string text = read_file(id_path);
    FormalSum sum;
    try {
        IdentityRecord rec = IdentityRecord::from_json(text);
        sum = rec.sum;
    } catch (const SchemaError&) {
        sum = FormalSum::from_json(text);
    }
    MarkedGraph g = MarkedGraph::from_json(read_file(graph_path));
    bool ok = verify_identity(sum, g);
    ordered_json j;
    j["m"] = sum.m;
    j["graph"] = graph_path;
    j["verified"] = ok;
    out << j.dump() << "\n";
    return ok ? 0 : 1;
}

int cmd_blocks(int m, std::ostream& out) {
    FormalSum reference = block_sum(m, 1);
    bool c_independent = true;
    for (int c = 2; c <= m; ++c) {
        if (!(block_sum(m, c) == reference)) c_independent = false;
    }
    bool equals_nonforbidden = reference == all_nonforbidden_sum(m);
    ordered_json j;
    j["m"] = m;
    j["terms"] = reference.terms.size();
    j["c_independent"] = c_independent;
    j["equals_nonforbidden_sum"] = equals_nonforbidden;
    out << j.dump() << "\n";
    return (c_independent && equals_nonforbidden) ? 0 : 1;
}

int cmd_dim(int m, std::uint64_t seed, std::ostream& out) {
    DimensionReport r = dimension_report(m, seed);
    ordered_json j;
    j["m"] = r.m;
    j["expected"] = r.expected;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["pass"] = r.pass;
    out << j.dump() << "\n";
    return r.pass ? 0 : 1;
}

int cmd_vy_check(int trials, std::uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    std::vector<int> marked{1, 2, 3, 4};
    MarkedGraph k4 = MarkedGraph::complete(4, marked);
    MarkedGraph k5 = MarkedGraph::complete(5, marked);

    bool x_ok = true;
    for (int t = 0; t < trials && x_ok; ++t) {
        VYParams x;
        for (int i = 0; i < 8; ++i) x[i] = rng.rational(9, 9);
        FormalSum s = vy_identity(x);
        x_ok = verify_identity(s, k4) && verify_identity(s, k5);
    }

    bool specializations_ok = true;
    for (int c = 1; c <= 4 && specializations_ok; ++c) {
        for (int jp = 1; jp <= 3 && specializations_ok; ++jp) {
            FormalSum from_x = vy_identity(m4_specialization(c, jp));
            FormalSum generated = gen_identity(4, c, vertex_of_expansion_index(c, jp)).sum;
            specializations_ok = from_x == generated;
        }
    }

    bool y_ok = true;
    for (int t = 0; t < trials && y_ok; ++t) {
        VYParams y;
        for (int i = 0; i < 8; ++i) y[i] = rng.rational(9, 9);
        y_ok = vy_from_column_identities(y) == vy_identity(vy_x_from_y(y));
    }

    ordered_json j;
    j["trials"] = trials;
    j["random_x_verified"] = x_ok;
    j["specializations_match"] = specializations_ok;
    j["y_form_equivalent"] = y_ok;
    bool pass = x_ok && specializations_ok && y_ok;
    j["pass"] = pass;
    out << j.dump() << "\n";
    return pass ? 0 : 1;
}

int cmd_mtt_check(const std::string& graph_path, const std::string& rows_text,
                  const std::string& cols_text, std::ostream& out) {
    MarkedGraph g = MarkedGraph::from_json(read_file(graph_path));
    MinorSpec spec{parse_index_list(rows_text), parse_index_list(cols_text)};
    Poly det = minor_det(laplacian(g), spec);
    Poly forest = signed_forest_sum(g, spec);
    std::vector<std::string> names = g.var_names();
    ordered_json j;
    j["rows"] = spec.rows;
    j["cols"] = spec.cols;
    j["minor_det"] = det.str(&names);
    j["signed_forest_sum"] = forest.str(&names);
    bool equal = det == forest;
    j["equal"] = equal;
    out << j.dump() << "\n";
    return equal ? 0 : 1;
}

int cmd_colexp_check(int k, int trials, std::uint64_t seed, int dmin, int dmax, std::ostream& out) {
    if (k < 2) throw SchemaError("need k >= 2");
    if (dmin <= k) dmin = k + 1;
    if (dmax < dmin) dmax = dmin;
    Rng rng(seed);
    long long checked = 0;
    bool all_zero = true;
    for (int d = dmin; d <= dmax; ++d) {
        for (int t = 0; t < trials; ++t) {
            IntMatrix mat(static_cast<std::size_t>(d), std::vector<BigInt>(static_cast<std::size_t>(d)));
            for (auto& row : mat) {
                for (auto& x : row) x = rng.big_in(-9, 9);
            }
            for (int j = 1; j <= k; ++j) {
                if (column_expansion_residual(mat, k, j) != 0) all_zero = false;
                ++checked;
            }
            if (k <= 5) {
                if (dodgson_muir_residual(mat, k) != 0) all_zero = false;
                ++checked;
            }
        }
    }
    ordered_json j;
    j["k"] = k;
    j["d_min"] = dmin;
    j["d_max"] = dmax;
    j["trials"] = trials;
    j["seed"] = seed;
    j["residuals_checked"] = checked;
    j["all_zero"] = all_zero;
    out << j.dump() << "\n";
    return all_zero ? 0 : 1;
}

int cmd_selftest(const std::string& only, std::ostream& out) {
    std::vector<CriterionResult> results = run_acceptance(only);
    bool all_pass = true;
    for (const CriterionResult& r : results) {
        char line[256];
        std::snprintf(line, sizeof(line), "%s  %-32s  %7.2fs  %s", r.pass ? "PASS" : "FAIL",
                      r.name.c_str(), r.seconds, r.detail.c_str());
        out << line << "\n";
        if (!r.pass) all_pass = false;
    }
    out << (all_pass ? "selftest: all criteria passed" : "selftest: FAILURES above") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spanning forest polynomials and their quadratic identities"};
    app.require_subcommand(1);

    std::string graph_path, partition_text, id_path, out_path, rows_text, cols_text, only;
    int m = 4, c = 4, jv = 1, trials = 20, k = 3, dmin = 4, dmax = 7;
    std::uint64_t seed = 1;

    auto* fp = app.add_subcommand("forest-poly", "spanning forest polynomial of a partition");
    fp->add_option("--graph", graph_path, "graph JSON file")->required();
    fp->add_option("--partition", partition_text, "partition like (1,2,2) or (1,1,-,2)")->required();

    auto* gi = app.add_subcommand("gen-identity", "generate the identity for a removed column and expansion vertex");
    gi->add_option("--m", m, "marked vertex count")->required();
    gi->add_option("--c", c, "removed column (marked vertex)")->required();
    gi->add_option("--j", jv, "expansion vertex, != c")->required();
    gi->add_option("--out", out_path, "also write the identity JSON here");

    auto* vi = app.add_subcommand("verify-identity", "verify a formal sum against a graph");
    vi->add_option("--file", id_path, "identity JSON file")->required();
    vi->add_option("--graph", graph_path, "graph JSON file")->required();

    auto* bl = app.add_subcommand("blocks", "check that all blocks sum to the non-forbidden sum");
    bl->add_option("--m", m, "marked vertex count")->required();

    auto* dm = app.add_subcommand("dim", "verify dim X_m = m(m-2)");
    dm->add_option("--m", m, "marked vertex count (3..5)")->required();
    dm->add_option("--seed", seed, "random seed");
    std::string graphs_mode = "auto";
    dm->add_option("--graphs", graphs_mode, "corpus selection (auto)");

    auto* vy = app.add_subcommand("vy-check", "check the 8-parameter m=4 identity family");
    vy->add_option("--trials", trials, "random parameter vectors per check");
    vy->add_option("--seed", seed, "random seed");

    auto* mt = app.add_subcommand("mtt-check", "compare a Laplacian minor with its signed forest sum");
    mt->add_option("--graph", graph_path, "graph JSON file")->required();
    mt->add_option("--rows", rows_text, "rows to remove, e.g. 1,3")->required();
    mt->add_option("--cols", cols_text, "columns to remove, e.g. 1,2")->required();

    auto* ce = app.add_subcommand("colexp-check", "column expansion and Dodgson-Muir residuals on random matrices");
    ce->add_option("--k", k, "expansion order")->required();
    ce->add_option("--trials", trials, "matrices per dimension");
    ce->add_option("--seed", seed, "random seed");
    ce->add_option("--dmin", dmin, "smallest matrix dimension");
    ce->add_option("--dmax", dmax, "largest matrix dimension");

    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--only", only, "run only criteria whose name contains this substring");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fp->parsed()) return cmd_forest_poly(graph_path, partition_text, out);
        if (gi->parsed()) return cmd_gen_identity(m, c, jv, out_path, out);
        if (vi->parsed()) return cmd_verify_identity(id_path, graph_path, out);
        if (bl->parsed()) return cmd_blocks(m, out);
        if (dm->parsed()) {
            if (graphs_mode != "auto") throw SchemaError("only --graphs auto is supported");
            return cmd_dim(m, seed, out);
        }
        if (vy->parsed()) return cmd_vy_check(trials, seed, out);
        if (mt->parsed()) return cmd_mtt_check(graph_path, rows_text, cols_text, out);
        if (ce->parsed()) return cmd_colexp_check(k, trials, seed, dmin, dmax, out);
        if (st->parsed()) return cmd_selftest(only, out);
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace fpoly
