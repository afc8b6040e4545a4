#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catchain/catchain.hpp"

using namespace catchain;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;  // validation failure / negative verdict
constexpr int kExitSchema = 2;   // schema or IO error

FinCategory load_category(const std::string& path) {
    return validate_category(parse_category(load_json(path)));
}

std::vector<Rational> parse_vector_option(const std::string& text) {
    std::vector<Rational> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(',', begin), text.size());
        out.push_back(Rational::parse(text.substr(begin, end - begin)));
        begin = end + 1;
    }
    return out;
}

std::string format_vector(const Matrix& column) {
    std::string out;
    for (std::size_t r = 0; r < column.rows(); ++r) {
        if (r > 0) out += ',';
        out += column(r, 0).str();
    }
    return out;
}

Rational max_abs_entry(const Matrix& m) {
    Rational best(0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, abs(m(r, c)));
    return best;
}

int run_validate(const std::string& path) {
    const auto violations = check_category(parse_category(load_json(path)));
    if (violations.empty()) {
        const FinCategory c = load_category(path);
        std::cout << "valid: " << c.object_count() << " objects, " << c.morphism_count()
                  << " morphisms\n";
        return kExitOk;
    }
    std::cout << "invalid: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) std::cout << "  - " << v.message() << "\n";
    return kExitVerdict;
}

int run_nerve(const std::string& path, std::size_t max_dim, bool list) {
    const SimplicialSetTrunc s = nerve(load_category(path), max_dim);
    for (std::size_t n = 0; n <= max_dim; ++n) {
        std::cout << "dim " << n << ": " << s.count(n) << "\n";
        if (list)
            for (std::size_t k = 0; k < s.count(n); ++k)
                std::cout << "  [" << k << "] " << simplex_label(s.simplices[n][k]) << "\n";
    }
    return kExitOk;
}

int run_chain(const std::string& path, std::size_t max_dim, bool normalized) {
    const ChResult ch = ch_category(load_category(path), max_dim);
    std::cout << chain_complex_to_json(normalized ? ch.normalized : ch.complex).dump(2) << "\n";
    return kExitOk;
}

int run_homology(const std::string& path, std::size_t max_dim, bool normalized) {
    const ChResult ch = ch_category(load_category(path), max_dim);
    const auto numbers = betti(normalized ? ch.normalized : ch.complex, max_dim - 2);
    for (std::size_t n = 0; n < numbers.size(); ++n)
        std::cout << (n > 0 ? " " : "") << "b" << n << "=" << numbers[n];
    std::cout << " (b" << max_dim - 1 << "=?)\n";
    return kExitOk;
}

int run_coskeletal(const std::string& path, std::size_t max_dim) {
    const SimplicialSetTrunc s = nerve(load_category(path), max_dim);
    const auto finding = check_two_coskeletal(s, max_dim >= 4);
    if (finding.ok()) {
        std::cout << "Ok\n";
        return kExitOk;
    }
    std::cout << (finding.kind == CoskeletalFinding::Kind::MissingFiller ? "MissingFiller"
                                                                         : "NonUniqueFiller")
              << " at dimension " << finding.dimension << ": boundary (";
    for (std::size_t i = 0; i < finding.boundary.size(); ++i)
        std::cout << (i > 0 ? ", " : "")
                  << simplex_label(s.simplices[finding.dimension - 1][finding.boundary[i]]);
    std::cout << ")\n";
    return kExitVerdict;
}

int run_diamond(const std::string& path, const std::string& f_text, const std::string& g_text) {
    const ReflexiveVectGraph g = validate_graph(parse_graph(load_json(path)));
    const Matrix fv = Matrix::column(parse_vector_option(f_text));
    const Matrix gv = Matrix::column(parse_vector_option(g_text));
    try {
        std::cout << format_vector(diamond(g, gv, fv)) << "\n";
    } catch (const NotComposableError& e) {
        std::cout << e.what() << "\n";
        return kExitVerdict;
    }
    return kExitOk;
}

int run_solve_comp(const std::string& path) {
    const auto result = solve_composition(parse_graph(load_json(path)));
    switch (result.kind) {
        case LinearSolution::Kind::Unique:
            std::cout << "Unique; equals diamond: " << (result.equals_diamond ? "yes" : "no")
                      << "\n";
            return result.equals_diamond ? kExitOk : kExitVerdict;
        case LinearSolution::Kind::Affine:
            std::cout << "Affine(" << result.affine_dim << "); equals diamond: no\n";
            return kExitVerdict;
        case LinearSolution::Kind::None:
            std::cout << "None; equals diamond: no\n";
            return kExitVerdict;
    }
    return kExitVerdict;
}

int run_eh_check(const std::string& path, std::size_t exhaustive_size, std::size_t samples,
                 std::uint64_t seed) {
    const MagmaPair m = parse_magma(load_json(path));
    const auto bad = check_magma(m);
    if (!bad.empty()) {
        for (const auto& b : bad) std::cerr << "magma invalid: " << b << "\n";
        return kExitVerdict;
    }
    int exit_code = kExitOk;
    const auto result = eckmann_hilton_check(m);
    if (result.confirmed) {
        std::cout << "Confirmed: operations coincide and commute; unit " << m.elements[m.unit1]
                  << "\n";
    } else {
        const auto [a, b, c, d] = result.witness;
        const auto id = [&](std::size_t k) { return m.elements[k]; };
        std::cout << "Interchange violation at (" << id(a) << ", " << id(b) << ", " << id(c)
                  << ", " << id(d) << "): (a+b)o(c+d) = " << id(m.op2[m.op1[a][b]][m.op1[c][d]])
                  << " but (aoc)+(bod) = " << id(m.op1[m.op2[a][c]][m.op2[b][d]]) << "\n";
        exit_code = kExitVerdict;
    }
    if (exhaustive_size > 0) {
        const EckmannHiltonScan stats =
            exhaustive_size <= 3 ? exhaustive_eckmann_hilton_scan(exhaustive_size)
                                 : sampled_eckmann_hilton_scan(exhaustive_size, samples, seed);
        std::cout << "scan size=" << exhaustive_size << ": pairs=" << stats.pairs
                  << " interchange=" << stats.interchange << " counterexamples=0\n";
    }
    return exit_code;
}

int run_homotopy(const std::vector<std::string>& paths, std::size_t max_dim) {
    const FinCategory c = load_category(paths[0]);
    const FinCategory d = load_category(paths[1]);
    const Functor f = validate_functor(c, d, parse_functor(load_json(paths[2])));
    const Functor g = validate_functor(c, d, parse_functor(load_json(paths[3])));
    const NatTransf alpha = validate_nat_transf(f, g, parse_nat_transf(load_json(paths[4])));

    const ChResult src = ch_category(c, max_dim);
    const ChResult tgt = ch_category(d, max_dim);
    const ChainHomotopy h = ch_nat_transf(alpha, src, tgt);
    const ChainHomotopy hn = normalized_homotopy(h, src, tgt);

    bool all_zero = true;
    for (std::size_t n = 0; n < max_dim; ++n) {
        const Rational norm = max_abs_entry(homotopy_defect(h, n));
        all_zero = all_zero && norm.is_zero();
        std::cout << "degree " << n << ": defect norm = " << norm.str() << "\n";
    }
    for (std::size_t n = 0; n < max_dim; ++n) {
        const Rational norm = max_abs_entry(homotopy_defect(hn, n));
        all_zero = all_zero && norm.is_zero();
        std::cout << "normalized degree " << n << ": defect norm = " << norm.str() << "\n";
    }

    std::cout << "h1 decomposition (B - A):\n";
    const Matrix& h1 = h.components[1];
    for (std::size_t col = 0; col < src.complex.dim(1); ++col) {
        std::cout << "  " << src.complex.spaces[1].basis[col] << ":";
        bool any = false;
        for (std::size_t row = 0; row < tgt.complex.dim(2); ++row) {
            const Rational& entry = h1(row, col);
            if (entry.is_zero()) continue;
            any = true;
            const std::string label = "(" + tgt.complex.spaces[2].basis[row] + ")";
            if (entry == Rational(1)) std::cout << " +" << label;
            else if (entry == Rational(-1)) std::cout << " -" << label;
            else std::cout << " " << entry.str() << "*" << label;
        }
        if (!any) std::cout << " 0";
        std::cout << "\n";
    }

    std::cout << (all_zero ? "verdict: homotopy verified in all degrees\n"
                           : "verdict: homotopy identity FAILED\n");
    return all_zero ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact category-to-chain-complex pipeline over the rationals"};
    app.require_subcommand(1);

    std::string input, input2, functor_f, functor_g, transf;
    std::string f_text, g_text;
    std::size_t max_dim = 3;
    bool list = false, normalized = false;
    std::size_t exhaustive_size = 0, samples = 1000;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "check the category axioms on a table");
    validate->add_option("input", input, "category document")->required();

    auto* nerve_cmd = app.add_subcommand("nerve", "simplex counts of the truncated nerve");
    nerve_cmd->add_option("input", input)->required();
    nerve_cmd->add_option("--max-dim", max_dim, "truncation dimension")->required();
    nerve_cmd->add_flag("--list", list, "list every simplex");

    auto* chain_cmd = app.add_subcommand("chain", "emit the chain complex as JSON");
    chain_cmd->add_option("input", input)->required();
    chain_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::Range(std::size_t{2}, std::size_t{12}));
    chain_cmd->add_flag("--normalized", normalized, "normalized complex instead of alternating");

    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of the nerve");
    homology_cmd->add_option("input", input)->required();
    homology_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::Range(std::size_t{2}, std::size_t{12}));
    homology_cmd->add_flag("--normalized", normalized);

    auto* coskeletal_cmd = app.add_subcommand("coskeletal", "unique-filler check on the nerve");
    coskeletal_cmd->add_option("input", input)->required();
    coskeletal_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::Range(std::size_t{3}, std::size_t{4}));

    auto* diamond_cmd = app.add_subcommand("diamond", "compose two morphism vectors");
    diamond_cmd->add_option("input", input, "reflexive graph document")->required();
    diamond_cmd->add_option("--f", f_text, "first morphism, comma-separated rationals")->required();
    diamond_cmd->add_option("--g", g_text, "second morphism, comma-separated rationals")->required();

    auto* solve_cmd = app.add_subcommand("solve-comp", "solve for the composition from the unit laws");
    solve_cmd->add_option("input", input)->required();

    auto* eh_cmd = app.add_subcommand("eh-check", "interchange / Eckmann-Hilton check");
    eh_cmd->add_option("input", input, "magma pair document")->required();
    eh_cmd->add_option("--exhaustive-size", exhaustive_size,
                       "also scan all unital pairs on a carrier of this size (sampled above 3)");
    eh_cmd->add_option("--samples", samples, "sample count for carriers above size 3");
    eh_cmd->add_option("--seed", seed, "seed for sampled scans");

    auto* homotopy_cmd = app.add_subcommand("homotopy", "natural transformation to chain homotopy");
    homotopy_cmd->add_option("C", input, "source category")->required();
    homotopy_cmd->add_option("D", input2, "target category")->required();
    homotopy_cmd->add_option("F", functor_f, "functor C -> D")->required();
    homotopy_cmd->add_option("G", functor_g, "functor C -> D")->required();
    homotopy_cmd->add_option("alpha", transf, "natural transformation F => G")->required();
    homotopy_cmd->add_option("--max-dim", max_dim)->required()->check(CLI::Range(std::size_t{2}, std::size_t{12}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return run_validate(input);
        if (*nerve_cmd) return run_nerve(input, max_dim, list);
        if (*chain_cmd) return run_chain(input, max_dim, normalized);
        if (*homology_cmd) return run_homology(input, max_dim, normalized);
        if (*coskeletal_cmd) return run_coskeletal(input, max_dim);
        if (*diamond_cmd) return run_diamond(input, f_text, g_text);
        if (*solve_cmd) return run_solve_comp(input);
        if (*eh_cmd) return run_eh_check(input, exhaustive_size, samples, seed);
        if (*homotopy_cmd)
            return run_homotopy({input, input2, functor_f, functor_g, transf}, max_dim);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSchema;
    }
    return kExitSchema;
}
