#include "nilknap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilknap/compile.hpp"
#include "nilknap/format.hpp"
#include "nilknap/heisenberg.hpp"
#include "nilknap/symbolic.hpp"
#include "nilknap/universal.hpp"

namespace nilknap {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

bool looks_like_instance(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        return line.compare(start, 5, "rank:") == 0;
    }
    return false;
}

std::vector<std::string> slot_names(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back(slot_name(i));
    return names;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"knapsack <-> Diophantine reduction toolkit for free class-2 nilpotent groups"};
    app.require_subcommand(1);

    std::string in_path, out_path, witness_text;
    long bound = 5;
    int jobs = 1;
    bool term_mode = false, positive = false, packed = false, report = false;
    long px = 1, pz = 1, py = 1, pu = 1;
    long toy = 0;

    auto* reduce = app.add_subcommand("reduce", "compile a system into a knapsack instance");
    reduce->add_option("--in", in_path)->required();
    reduce->add_option("--out", out_path)->required();
    reduce->add_flag("--term-mode", term_mode, "use the term-tree construction");
    reduce->add_flag("--positive", positive, "four-square encode for positive solutions first");
    reduce->add_flag("--packed", packed, "reuse gadget generators (experimental economy)");

    auto* derive = app.add_subcommand("derive", "derive the equivalent system of an instance");
    derive->add_option("--in", in_path)->required();
    derive->add_option("--out", out_path)->required();

    auto* solve = app.add_subcommand("solve", "bounded exhaustive search");
    solve->add_option("--in", in_path)->required();
    solve->add_option("--bound", bound)->required();
    solve->add_option("--jobs", jobs);

    auto* verify = app.add_subcommand("verify", "check a witness against an instance");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--witness", witness_text)->required();

    auto* embed = app.add_subcommand("embed", "unitriangular matrix images of an instance");
    embed->add_option("--in", in_path)->required();
    embed->add_option("--out", out_path)->required();

    auto* jones = app.add_subcommand("jones", "emit the 51-equation universal system");
    jones->add_option("--x", px)->required();
    jones->add_option("--z", pz)->required();
    jones->add_option("--y", py)->required();
    jones->add_option("--u", pu)->required();
    jones->add_option("--toy-exponent", toy)->check(CLI::PositiveNumber);
    jones->add_option("--out", out_path)->required();
    jones->add_flag("--report", report, "also print a compilation resource report");
    jones->add_flag("--packed", packed, "count with generator reuse enabled");

    auto* heis = app.add_subcommand("heis", "rank-2 decision pipeline");
    heis->add_option("--in", in_path)->required();
    heis->add_option("--bound", bound)->required();
    heis->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (reduce->parsed()) {
        DiophantineSystem sys = parse_system(read_file(in_path));
        if (positive) sys = nonneg_encode(sys, NonnegMode::Positive);
        CommutatorPool pool(packed);
        CompileResult compiled;
        if (term_mode) {
            compiled = compile_terms(sys, pool);
        } else {
            sys = degree_reduce(sys);
            compiled = compile_quadratic(sys, pool);
        }
        write_file(out_path, print_instance(compiled.instance));
        out << "wrote " << out_path << ": rank " << compiled.instance.rank << ", "
            << compiled.instance.inputs.size() << " inputs\n";
        return 0;
    }

    if (derive->parsed()) {
        KPInstance inst = parse_instance(read_file(in_path));
        write_file(out_path, print_system(kp_to_system(inst)));
        out << "wrote " << out_path << "\n";
        return 0;
    }

    if (solve->parsed()) {
        std::string text = read_file(in_path);
        if (looks_like_instance(text)) {
            KPInstance inst = parse_instance(text);
            SearchBox box = SearchBox::symmetric(inst.inputs.size(), Integer(bound));
            auto w = bounded_solve_kp(inst, box, jobs);
            if (w)
                out << "witness: " << print_witness(*w, slot_names(inst.inputs.size())) << "\n";
            else
                out << "UNSAT-in-box (bound " << bound << ")\n";
        } else {
            DiophantineSystem sys = parse_system(text);
            SearchBox box = SearchBox::symmetric(sys.variables.size(), Integer(bound));
            auto w = bounded_solve_system(sys, box, jobs);
            if (w)
                out << "witness: " << print_witness(*w, sys.variables) << "\n";
            else
                out << "UNSAT-in-box (bound " << bound << ")\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        KPInstance inst = parse_instance(read_file(in_path));
        Assignment values = parse_witness(witness_text);
        std::vector<Integer> eps;
        for (std::size_t i = 1; i <= inst.inputs.size(); ++i) {
            auto it = values.find(slot_name(i));
            if (it == values.end()) throw std::runtime_error("witness missing " + slot_name(i));
            eps.push_back(it->second);
        }
        auto [product, hit] = evaluate_kp(inst, eps);
        NormalForm residual = multiply(product, inverse(inst.target));
        out << (hit ? "true" : "false") << "\n";
        out << "residual: " << print_normal_form(residual) << "\n";
        return 0;
    }

    if (embed->parsed()) {
        KPInstance inst = parse_instance(read_file(in_path));
        std::ostringstream os;
        os << "# rank " << inst.rank << ", dimension " << (2 * inst.rank + 1) << "\n";
        for (std::size_t i = 0; i < inst.inputs.size(); ++i) {
            os << "g" << (i + 1) << ":\n";
            os << print_matrix(rho_word(spell(inst.inputs[i])));
        }
        os << "g:\n" << print_matrix(rho_word(spell(inst.target)));
        write_file(out_path, os.str());
        out << "wrote " << out_path << "\n";
        return 0;
    }

    if (jones->parsed()) {
        UniversalParams params;
        params.x = px;
        params.z = pz;
        params.y = py;
        params.u = pu;
        if (toy > 0) params.toy_exponent = Integer(toy);
        DiophantineSystem sys = jones_system(params);
        write_file(out_path, print_system(sys));
        out << "wrote " << out_path << ": " << sys.equations.size() << " equations\n";
        if (report) {
            // Counting is structural, so a symbolic system is counted on a
            // toy-exponent shadow copy.
            DiophantineSystem countable = sys;
            if (!params.toy_exponent) {
                UniversalParams shadow = params;
                shadow.toy_exponent = Integer(1);
                countable = jones_system(shadow);
                out << "note: counts computed with toy exponent 1 (structure is identical)\n";
            }
            CommutatorPool pool(packed);
            CompileResult compiled = compile_quadratic(degree_reduce(countable), pool);
            out << resource_report(countable, compiled).render();
        }
        return 0;
    }

    if (heis->parsed()) {
        KPInstance inst = parse_instance(read_file(in_path));
        HeisenbergReduction red = heisenberg_reduce(inst);
        if (red.trivially_unsat()) {
            out << "UNSAT (inconsistent linear subsystem)\n";
            return 0;
        }
        const std::size_t k = inst.inputs.size();
        SearchBox eps_box = SearchBox::symmetric(k, Integer(bound));
        auto report_witness = [&](const std::vector<Integer>& t) {
            std::vector<Integer> eps = red.eps_of(t);
            Witness w;
            for (std::size_t i = 0; i < k; ++i) w.assignment[slot_name(i + 1)] = eps[i];
            out << "witness: " << print_witness(w, slot_names(k)) << "\n";
        };

        if (red.residual.is_zero()) {
            // Constant residual: the reduction is decisive either way.
            if (red.residual_rhs != 0) {
                out << "UNSAT (residual constant equation fails)\n";
            } else {
                report_witness(std::vector<Integer>(red.params.size(), Integer(0)));
            }
            return 0;
        }

        auto pbox = heisenberg_parameter_box(red, eps_box);
        if (pbox) {
            DiophantineSystem residual_sys;
            for (const auto& p : red.params) residual_sys.declare(p);
            GeneralPoly lhs;
            for (const auto& [key, c] : red.residual.quadratic())
                lhs.add_monomial({key.first, key.second}, c);
            for (const auto& [v, c] : red.residual.linear().terms()) lhs.add_monomial({v}, c);
            residual_sys.equations.push_back(
                {lhs.to_term(), Term::constant(ConstExpr(red.residual_rhs))});
            auto w = bounded_solve_system(residual_sys, *pbox, jobs);
            if (w) {
                std::vector<Integer> t;
                for (const auto& p : red.params) t.push_back(w->assignment.at(p));
                report_witness(t);
                return 0;
            }
        }
        out << "UNKNOWN (no witness with |e_i| <= " << bound
            << "; beyond the box the residual is undecided)\n";
        return 0;
    }

    return 2;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run(argc, argv, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NonMaterializable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nilknap
