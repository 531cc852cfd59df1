// Command-line front end for the bicomplex linear-algebra library.
//
//   bcx decompose <matrix>            idempotent component matrices
//   bcx rank <matrix>                 all rank quantities
//   bcx solve <matrix> <rhs>          solution set of A*X = B
//   bcx classify <matrix> [<rhs>]     homogeneous or right-hand-side case
//   bcx verify <matrix> <rhs> <cand>  does the candidate solve the system?
//
// Default arithmetic is exact rationals; --approx switches to binary64 with
// tolerance pivoting (--tol, or the BCX_TOL environment variable). Output is
// human-readable by default; --output structured prints one JSON document.
// Exit codes: 0 success (inconsistent systems included), 1 parse/IO errors,
// 2 usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcx/bcx.hpp"

namespace {

using nlohmann::ordered_json;

enum class Verb { Decompose, Rank, Solve, Classify, Verify };

struct Invocation {
    Verb verb = Verb::Rank;
    std::string matrix_path;
    std::string rhs_path;        // solve, verify; classify optionally
    std::string candidate_path;  // verify
    bool has_rhs = false;
    bool approx = false;
    double tolerance = 1e-10;
    bool structured = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bcx::Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw bcx::Error("cannot read file: " + path);
    return buf.str();
}

const char* status_name(bcx::SolutionStatus s) {
    switch (s) {
        case bcx::SolutionStatus::Inconsistent: return "Inconsistent";
        case bcx::SolutionStatus::Unique: return "Unique";
        default: return "Infinite";
    }
}

const char* case_name(bcx::SystemCase c) {
    switch (c) {
        case bcx::SystemCase::NoSolution: return "NoSolution";
        case bcx::SystemCase::UniqueSolution: return "UniqueSolution";
        case bcx::SystemCase::InfiniteSolutions: return "InfiniteSolutions";
        case bcx::SystemCase::NoOrUnique: return "NoOrUnique";
        default: return "NoOrInfinite";
    }
}

const char* homogeneous_name(bcx::HomogeneousClass c) {
    switch (c) {
        case bcx::HomogeneousClass::UniqueZero: return "UniqueZero";
        case bcx::HomogeneousClass::AllOfSpace: return "AllOfSpace";
        default: return "Infinite";
    }
}

template <typename S>
ordered_json matrix_json(const bcx::BicomplexMatrix<S>& A) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(bcx::format_literal(A(i, j)));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(rows)}};
}

template <typename S>
ordered_json complex_matrix_json(const bcx::Matrix<S>& M) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(bcx::format_complex(M(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename S>
ordered_json vector_json(const bcx::BicomplexVector<S>& v) {
    ordered_json out = ordered_json::array();
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(bcx::format_literal(v[k]));
    return out;
}

template <typename S>
ordered_json complex_vector_json(const std::vector<S>& v) {
    ordered_json out = ordered_json::array();
    for (const S& z : v) out.push_back(bcx::format_complex(z));
    return out;
}

ordered_json ranks_json(const bcx::RankReport& r) {
    return ordered_json{{"rho_r", r.rho_r},   {"rho_c", r.rho_c}, {"rho_ir", r.rho_ir},
                        {"rho_ic", r.rho_ic}, {"rho_mr", r.rho_mr},
                        {"rho_1", r.rho_1},   {"rho_2", r.rho_2}};
}

std::string ranks_line(const bcx::RankReport& r) {
    std::ostringstream out;
    out << "rho_r=" << r.rho_r << " rho_c=" << r.rho_c << " rho_ir=" << r.rho_ir
        << " rho_ic=" << r.rho_ic << " rho_mr=" << r.rho_mr << " rho_1=" << r.rho_1
        << " rho_2=" << r.rho_2;
    return out.str();
}

ordered_json envelope(const Invocation& inv, const char* verb) {
    ordered_json doc;
    doc["format"] = 1;
    doc["verb"] = verb;
    doc["mode"] = inv.approx ? "approx" : "exact";
    if (inv.approx) doc["tolerance"] = inv.tolerance;
    return doc;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

template <typename S>
int run(const Invocation& inv) {
    const bcx::RankPolicy policy =
        inv.approx ? bcx::RankPolicy::approx(inv.tolerance) : bcx::RankPolicy::exact();
    const bcx::BicomplexMatrix<S> A = bcx::parse_matrix<S>(read_file(inv.matrix_path));

    switch (inv.verb) {
        case Verb::Decompose: {
            if (inv.structured) {
                ordered_json doc = envelope(inv, "decompose");
                doc["matrix"] = matrix_json(A);
                doc["first"] = complex_matrix_json(A.first());
                doc["second"] = complex_matrix_json(A.second());
                emit(doc);
            } else {
                std::cout << "first component:\n" << bcx::format_complex_matrix(A.first())
                          << "second component:\n" << bcx::format_complex_matrix(A.second());
            }
            return 0;
        }
        case Verb::Rank: {
            const bcx::RankReport r = bcx::rank_report(A, policy);
            if (inv.structured) {
                ordered_json doc = envelope(inv, "rank");
                doc["matrix"] = matrix_json(A);
                doc["ranks"] = ranks_json(r);
                emit(doc);
            } else {
                std::cout << "rho_r  = " << r.rho_r << "\nrho_c  = " << r.rho_c
                          << "\nrho_ir = " << r.rho_ir << "\nrho_ic = " << r.rho_ic
                          << "\nrho_mr = " << r.rho_mr << "\nrho_1  = " << r.rho_1
                          << "\nrho_2  = " << r.rho_2 << "\n";
            }
            return 0;
        }
        case Verb::Solve: {
            const bcx::BicomplexVector<S> B = bcx::parse_vector<S>(read_file(inv.rhs_path));
            const bcx::SolutionSet<S> sol = bcx::solve(A, B, policy);
            const bcx::RankReport ra = bcx::rank_report(A, policy);
            const bcx::RankReport raug = bcx::rank_report(bcx::augment(A, B), policy);
            if (inv.structured) {
                ordered_json doc = envelope(inv, "solve");
                doc["matrix"] = matrix_json(A);
                doc["rhs"] = vector_json(B);
                doc["status"] = status_name(sol.status);
                doc["nullity"] = sol.nullity;
                doc["particular"] =
                    sol.particular ? vector_json(*sol.particular) : ordered_json(nullptr);
                ordered_json kernel;
                kernel["from_first"] = ordered_json::array();
                for (const auto& v : sol.kernel.from_first)
                    kernel["from_first"].push_back(complex_vector_json(v));
                kernel["from_second"] = ordered_json::array();
                for (const auto& v : sol.kernel.from_second)
                    kernel["from_second"].push_back(complex_vector_json(v));
                kernel["lifted"] = ordered_json::array();
                for (const auto& v : sol.kernel.lifted) kernel["lifted"].push_back(vector_json(v));
                doc["kernel"] = std::move(kernel);
                doc["ranks"] = ranks_json(ra);
                doc["ranks_augmented"] = ranks_json(raug);
                emit(doc);
            } else {
                std::cout << "status: " << status_name(sol.status) << "\n"
                          << "nullity: " << sol.nullity << "\n";
                if (sol.particular) {
                    std::cout << "particular:\n" << bcx::format_vector(*sol.particular);
                }
                for (std::size_t k = 0; k < sol.kernel.lifted.size(); ++k) {
                    std::cout << "kernel[" << k << "]:\n"
                              << bcx::format_vector(sol.kernel.lifted[k]);
                }
                std::cout << "ranks of A: " << ranks_line(ra) << "\n"
                          << "ranks of [A|B]: " << ranks_line(raug) << "\n";
            }
            return 0;
        }
        case Verb::Classify: {
            if (!inv.has_rhs) {
                const bcx::HomogeneousClass c = bcx::classify_homogeneous(A, policy);
                const std::size_t k = bcx::modified_rank(A, policy);
                if (inv.structured) {
                    ordered_json doc = envelope(inv, "classify");
                    doc["matrix"] = matrix_json(A);
                    doc["homogeneous"] = true;
                    doc["classification"] = homogeneous_name(c);
                    doc["rho_mr"] = k;
                    emit(doc);
                } else {
                    std::cout << "classification: " << homogeneous_name(c) << "\n"
                              << "rho_mr: " << k << "\n";
                }
                return 0;
            }
            const bcx::BicomplexVector<S> B = bcx::parse_vector<S>(read_file(inv.rhs_path));
            const bcx::NonHomogeneousClassification c =
                bcx::classify_nonhomogeneous(A, B, policy);
            const std::size_t k = bcx::modified_rank(A, policy);
            if (inv.structured) {
                ordered_json doc = envelope(inv, "classify");
                doc["matrix"] = matrix_json(A);
                doc["rhs"] = vector_json(B);
                doc["homogeneous"] = false;
                doc["apriori"] = case_name(c.apriori);
                doc["resolved"] = status_name(c.resolved);
                doc["rho_mr"] = k;
                emit(doc);
            } else {
                std::cout << "apriori: " << case_name(c.apriori) << "\n"
                          << "resolved: " << status_name(c.resolved) << "\n"
                          << "rho_mr: " << k << "\n";
            }
            return 0;
        }
        case Verb::Verify: {
            const bcx::BicomplexVector<S> B = bcx::parse_vector<S>(read_file(inv.rhs_path));
            const bcx::BicomplexVector<S> Y =
                bcx::parse_vector<S>(read_file(inv.candidate_path));
            const bool ok = bcx::verify_membership(A, B, Y, policy);
            if (inv.structured) {
                ordered_json doc = envelope(inv, "verify");
                doc["matrix"] = matrix_json(A);
                doc["rhs"] = vector_json(B);
                doc["candidate"] = vector_json(Y);
                doc["satisfies"] = ok;
                emit(doc);
            } else {
                std::cout << "satisfies: " << (ok ? "yes" : "no") << "\n";
            }
            return 0;
        }
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    Invocation inv;
    std::string output = "human";

    CLI::App app{"bicomplex matrix calculator: decomposition, ranks, and linear systems"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* approx_flag =
        app.add_flag("--approx", inv.approx,
                     "use binary64 arithmetic with tolerance pivoting (default: exact rationals)");
    auto* tol_opt = app.add_option("--tol", inv.tolerance,
                                   "pivot tolerance for --approx (default 1e-10; "
                                   "BCX_TOL is honored when --tol is absent)")
                        ->check(CLI::NonNegativeNumber)
                        ->needs(approx_flag);
    app.add_option("--output", output, "output form: human or structured")
        ->check(CLI::IsMember({"human", "structured"}));

    auto* decompose = app.add_subcommand("decompose", "print the two idempotent components");
    decompose->add_option("matrix", inv.matrix_path, "matrix file")->required();
    auto* rank = app.add_subcommand("rank", "print all rank quantities");
    rank->add_option("matrix", inv.matrix_path, "matrix file")->required();
    auto* solve = app.add_subcommand("solve", "solve A*X = B");
    solve->add_option("matrix", inv.matrix_path, "matrix file")->required();
    solve->add_option("rhs", inv.rhs_path, "right-hand-side file (one column)")->required();
    auto* classify = app.add_subcommand(
        "classify", "classify the system (homogeneous without a right-hand side)");
    classify->add_option("matrix", inv.matrix_path, "matrix file")->required();
    classify->add_option("rhs", inv.rhs_path, "right-hand-side file (optional)");
    auto* verify = app.add_subcommand("verify", "check a candidate solution");
    verify->add_option("matrix", inv.matrix_path, "matrix file")->required();
    verify->add_option("rhs", inv.rhs_path, "right-hand-side file")->required();
    verify->add_option("candidate", inv.candidate_path, "candidate solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (decompose->parsed()) inv.verb = Verb::Decompose;
    if (rank->parsed()) inv.verb = Verb::Rank;
    if (solve->parsed()) inv.verb = Verb::Solve;
    if (classify->parsed()) {
        inv.verb = Verb::Classify;
        inv.has_rhs = classify->count("rhs") > 0;
    }
    if (verify->parsed()) inv.verb = Verb::Verify;
    if (solve->parsed() || verify->parsed()) inv.has_rhs = true;
    inv.structured = output == "structured";

    if (inv.approx && tol_opt->count() == 0) {
        if (const char* env = std::getenv("BCX_TOL")) {
            try {
                std::size_t used = 0;
                const std::string text(env);
                const double v = std::stod(text, &used);
                if (used != text.size() || !(v >= 0.0)) throw std::invalid_argument(text);
                inv.tolerance = v;
            } catch (const std::exception&) {
                std::cerr << "error: BCX_TOL must be a nonnegative number, got '" << env
                          << "'\n";
                return 2;
            }
        }
    }

    try {
        return inv.approx ? run<bcx::FloatComplex>(inv) : run<bcx::ExactComplex>(inv);
    } catch (const bcx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const bcx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
