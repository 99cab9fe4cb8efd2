// Command-line interface: algebra files in, reports out. Exit codes:
// 0 success, 2 validation failure (bad input, failed preconditions),
// 1 internal error.

#include "liegen/liegen.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace liegen;

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_source(const std::string& arg) {
    if (arg == "-") return read_stream(std::cin);
    std::ifstream f(arg);
    if (!f) throw input_error("cannot open file '" + arg + "'");
    return read_stream(f);
}

/// Accepts a file path, "catalog:NAME", or "-" for stdin.
LieAlgebra resolve_algebra(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog::get(arg.substr(8)).algebra;
    return parse_algebra(read_source(arg));
}

/// Accepts "diag:1,1,-1,-1" inline or a matrix file path.
Matrix resolve_matrix(const std::string& arg, int n) {
    if (arg.rfind("diag:", 0) == 0) return parse_matrix(arg, n);
    return parse_matrix(read_source(arg), n);
}

std::vector<int> diagonal_signs(const Matrix& m, const std::string& which) {
    std::vector<int> eps;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0)
                throw input_error(which + " must be diagonal in the given basis");
        if (m.at(i, i) == 1)
            eps.push_back(1);
        else if (m.at(i, i) == -1)
            eps.push_back(-1);
        else
            throw input_error(which + " must have diagonal entries +-1");
    }
    return eps;
}

std::vector<int> parse_choices(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok == "+1" || tok == "+" || tok == "1")
            out.push_back(1);
        else if (tok == "-1" || tok == "-")
            out.push_back(-1);
        else
            throw input_error("bad sign choice '" + tok + "' (use +1 or -1)");
    }
    return out;
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "machine") return OutputFormat::machine;
    throw input_error("unknown format '" + s + "'");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw input_error("cannot write file '" + path + "'");
    f << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie algebra generator products, coadjoint invariant counts, product structures"};
    app.require_subcommand(1);

    std::string format = "text";
    long long seed = 20240101;
    app.add_option("--format", format, "output format: text or machine")->capture_default_str();
    app.add_option("--seed", seed, "seed for sampled rank oracles")->envname("LIEGEN_SEED");

    std::string arg_a, arg_b, arg_out, arg_e, arg_e1, arg_e2, arg_choices, arg_split, arg_name;
    int arg_dim = 0, arg_m = 0;
    bool arg_all = false;

    auto* cmd_info = app.add_subcommand("info", "structural fingerprint of an algebra");
    cmd_info->add_option("FILE", arg_a)->required();

    auto* cmd_product = app.add_subcommand("product", "generator product of two algebras");
    cmd_product->add_option("A", arg_a)->required();
    cmd_product->add_option("B", arg_b)->required();
    cmd_product->add_option("-o,--output", arg_out, "output file (default stdout)");

    auto* cmd_inv = app.add_subcommand("invariants", "coadjoint invariant count, both routes");
    cmd_inv->add_option("FILE", arg_a)->required();

    auto* cmd_thm = app.add_subcommand("theorem1", "dimension identities of the generator product");
    cmd_thm->add_option("A", arg_a)->required();
    cmd_thm->add_option("B", arg_b)->required();

    auto* cmd_classify = app.add_subcommand("classify", "decomposition types of a given total dimension");
    cmd_classify->add_option("--dim", arg_dim, "total dimension")->required();

    auto* cmd_struct = app.add_subcommand("structures", "check a product structure candidate");
    cmd_struct->add_option("FILE", arg_a)->required();
    cmd_struct->add_option("--E", arg_e, "matrix file or diag:...")->required();

    auto* cmd_extend = app.add_subcommand("extend", "extend diagonal structures to a product");
    cmd_extend->add_option("A", arg_a)->required();
    cmd_extend->add_option("B", arg_b, "second factor (omit when using --split)");
    cmd_extend->add_option("--E1", arg_e1, "structure on factor 1 (matrix file or diag:...)")->required();
    cmd_extend->add_option("--E2", arg_e2, "structure on factor 2")->required();
    cmd_extend->add_option("--choices", arg_choices, "signs for free pairs, e.g. +1,-1");
    cmd_extend->add_flag("--all", arg_all, "enumerate all sign choices");
    cmd_extend->add_option("--split", arg_split,
                           "treat A as a product with factor sizes d1,d2 (e.g. --split 4,4)");

    auto* cmd_para = app.add_subcommand("paracomplex-build", "paracomplex structure on g+ x g-");
    cmd_para->add_option("GPLUS", arg_a)->required();
    cmd_para->add_option("GMINUS", arg_b)->required();
    cmd_para->add_option("--m", arg_m, "half of b1/2: both factors need b1 = 2m")->required();

    auto* cmd_catalog = app.add_subcommand("catalog", "list built-in algebras or print one");
    cmd_catalog->add_option("NAME", arg_name);

    CLI11_PARSE(app, argc, argv);

    try {
        const OutputFormat fmt = parse_format(format);

        if (*cmd_info) {
            const LieAlgebra g = resolve_algebra(arg_a);
            std::cout << render_info(g, fingerprint(g), fmt);
        } else if (*cmd_product) {
            const GeneratorProduct gp = generator_product(resolve_algebra(arg_a), resolve_algebra(arg_b));
            std::ostringstream os;
            os << "# generator product, dim " << gp.algebra.dim << ", " << gp.centrals.size()
               << " adjoined central element(s)\n";
            if (!gp.inputs_solvable) os << "# warning: a factor is not solvable\n";
            for (const auto& [i, j, z] : gp.cocycle_support)
                os << "# [" << gp.algebra.labels[i] << "," << gp.algebra.labels[j] << "] = "
                   << gp.algebra.labels[z] << "\n";
            os << emit_algebra(gp.algebra);
            write_output(arg_out, os.str());
        } else if (*cmd_inv) {
            const LieAlgebra g = resolve_algebra(arg_a);
            const InvariantReport r = invariant_report(g);
            const int certified =
                certified_random_rank(coadjoint_matrix(g), 20, static_cast<std::uint64_t>(seed));
            std::cout << render_invariants(g, r, certified, fmt);
        } else if (*cmd_thm) {
            const auto r = verify_extension_identities(resolve_algebra(arg_a), resolve_algebra(arg_b));
            std::cout << render_extension_identities(r, fmt);
        } else if (*cmd_classify) {
            std::cout << render_types(enumerate_types(arg_dim), fmt);
        } else if (*cmd_struct) {
            const LieAlgebra g = resolve_algebra(arg_a);
            const Matrix e = resolve_matrix(arg_e, g.dim);
            std::cout << render_structure(check_product_structure(g, e), fmt);
        } else if (*cmd_extend) {
            ProductFrame frame;
            if (!arg_split.empty()) {
                if (!arg_b.empty()) throw input_error("--split takes a single product algebra");
                const LieAlgebra g = resolve_algebra(arg_a);
                const auto comma = arg_split.find(',');
                if (comma == std::string::npos) throw input_error("--split needs d1,d2");
                frame = make_frame(g, std::stoi(arg_split.substr(0, comma)),
                                   std::stoi(arg_split.substr(comma + 1)));
            } else {
                if (arg_b.empty()) throw input_error("extend needs two factors or --split");
                frame = frame_of(generator_product(resolve_algebra(arg_a), resolve_algebra(arg_b)));
            }
            const auto eps1 = diagonal_signs(
                resolve_matrix(arg_e1, static_cast<int>(frame.factor1.size())), "--E1");
            const auto eps2 = diagonal_signs(
                resolve_matrix(arg_e2, static_cast<int>(frame.factor2.size())), "--E2");
            if (arg_all) {
                const auto exts = enumerate_extensions(frame, eps1, eps2);
                for (std::size_t i = 0; i < exts.size(); ++i)
                    std::cout << render_extension(exts[i], i + 1, fmt);
            } else {
                std::map<std::pair<int, int>, int> choices;
                if (!arg_choices.empty()) {
                    const auto signs = parse_choices(arg_choices);
                    std::size_t t = 0;
                    std::vector<int> pos1(frame.algebra.dim, -1), pos2(frame.algebra.dim, -1);
                    for (std::size_t p = 0; p < frame.factor1.size(); ++p)
                        pos1[frame.factor1[p]] = static_cast<int>(p);
                    for (std::size_t p = 0; p < frame.factor2.size(); ++p)
                        pos2[frame.factor2[p]] = static_cast<int>(p);
                    for (const auto& [i, j, z] : frame.cross) {
                        if (eps1[pos1[i]] == eps2[pos2[j]]) continue;
                        if (t >= signs.size()) throw input_error("not enough entries in --choices");
                        choices[{i, j}] = signs[t++];
                    }
                    if (t != signs.size()) throw input_error("too many entries in --choices");
                }
                const auto ext = extend_to_product(frame, eps1, eps2, choices);
                std::cout << render_extension(ext, 1, fmt);
                std::cout << render_structure(ext.structure, fmt);
            }
        } else if (*cmd_para) {
            const auto ext =
                build_paracomplex_product(resolve_algebra(arg_a), resolve_algebra(arg_b), arg_m);
            std::ostringstream os;
            os << render_structure(ext.structure, fmt);
            os << emit_algebra(ext.structure.algebra);
            std::cout << os.str();
        } else if (*cmd_catalog) {
            if (arg_name.empty()) {
                for (const auto& n : catalog::names()) {
                    if (n == "abelian_N" || n == "rn_N") {
                        std::cout << n << "  (parameterized; e.g. " << (n == "rn_N" ? "rn_5" : "abelian_3")
                                  << ")\n";
                    } else {
                        const auto entry = catalog::get(n);
                        std::cout << n << "  dim " << entry.algebra.dim << "  -- " << entry.provenance
                                  << "\n";
                    }
                }
            } else {
                const auto entry = catalog::get(arg_name);
                std::cout << "# " << entry.name << ": " << entry.provenance << "\n"
                          << emit_algebra(entry.algebra);
            }
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
