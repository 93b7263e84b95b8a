#include "report.hpp"

#include "lexmorse/error.hpp"
#include "lexmorse/io.hpp"
#include "lexmorse/multiset.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace lexmorse;

// 1 for bad input, 2 for anything the library reports about the mathematics.
int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownElement:
    case ErrorCode::NotHookShaped:
    case ErrorCode::BoundExceeded:
    case ErrorCode::MalformedNotation:
        return 1;
    default:
        return 2;
    }
}

cli::Limits limits_from_env() {
    cli::Limits lim;
    if (const char* v = std::getenv("LEXMORSE_MAX_FACES")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0') throw Error(ErrorCode::ParseError, "LEXMORSE_MAX_FACES: not a number");
        lim.max_faces = static_cast<std::size_t>(n);
    }
    return lim;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic discrete Morse functions on order complexes"};
    app.require_subcommand(1);
    // Lets --format follow a nested subcommand such as `multiset ... cancel`.
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string poset_path, labels_path;
    auto* analyze = app.add_subcommand("analyze", "Facet order, matching and oracles for a labeled poset");
    analyze->add_option("poset", poset_path, "Poset file (cover u v)")->required();
    analyze->add_option("labels", labels_path, "Edge labels file (label u v int)")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string lambda;
    bool force = false;
    int max_n = 8;
    auto* multiset = app.add_subcommand("multiset", "Multiset partition posets");
    multiset->add_option("--lambda", lambda, "Letter multiplicities, e.g. 3,1,1")->required();
    multiset->add_option("--max-n", max_n, "Refuse posets with more than this many letters");
    multiset->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    multiset->require_subcommand(1);
    cli::MultisetCommand mcmd = cli::MultisetCommand::Report;
    multiset->add_subcommand("report", "Lexicographic matching with critical cells in bar notation")
        ->callback([&] { mcmd = cli::MultisetCommand::Report; });
    auto* cancel = multiset->add_subcommand("cancel", "Cancel every lower critical cell");
    cancel->add_flag("--force", force, "Run on non-hook shapes");
    cancel->callback([&] { mcmd = cli::MultisetCommand::Cancel; });
    multiset->add_subcommand("mobius", "Mobius function by recursion and by the Morse formula")
        ->callback([&] { mcmd = cli::MultisetCommand::Mobius; });
    multiset->add_subcommand("homology", "Reduced Betti numbers of the order complex")
        ->callback([&] { mcmd = cli::MultisetCommand::Homology; });

    PuzzleOptions popts;
    popts.max_parts = 5;
    auto* puzzle = app.add_subcommand("puzzle", "Exhaustive search for the integer splitting puzzle");
    puzzle->add_option("--max-total", popts.max_total, "Bound on n_1 + ... + n_k")->required();
    puzzle->add_option("--max-parts", popts.max_parts, "Bound on k");
    puzzle->add_flag("--distinct", popts.distinct, "Require the extra distinctness conditions");
    puzzle->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const auto lim = limits_from_env();
        cli::Json r;
        std::string text;
        if (*analyze) {
            r = cli::analyze_report(read_poset_file(poset_path), read_labels_file(labels_path), lim);
            if (format == "text") text = cli::analyze_text(r);
        } else if (*multiset) {
            cli::MultisetRequest req{parse_lambda(lambda), mcmd, force, max_n};
            r = cli::multiset_report(req, lim);
            if (format == "text") text = cli::multiset_text(r);
        } else {
            r = cli::puzzle_report(popts);
            if (format == "text") text = cli::puzzle_text(r);
        }
        if (format == "json")
            std::cout << r.dump(2) << "\n";
        else
            std::cout << text;
        return cli::report_passes(r) ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
