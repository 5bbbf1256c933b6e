#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lynpbw/commands.hpp"

using namespace lynpbw;

int main(int argc, char** argv) {
    CLI::App app{"exact computations with graded presentations"};
    app.get_formatter()->column_width(34);

    std::string command, file;
    app.add_option("command", command,
                   "gb | basis | pbw | heights | rearrange | coideal | check-comult | ore | "
                   "hilbert | chains | report-all")
        ->required();
    app.add_option("file", file, "presentation document")->required();

    CommandOptions opts;
    std::string mode = "tau", side = "left", sub;
    app.add_option("--max-degree", opts.max_degree, "override the document's max_degree");
    app.add_option("--mode", mode, "tau | tau-inverse")
        ->check(CLI::IsMember({"tau", "tau-inverse"}));
    app.add_option("--side", side, "left | right")->check(CLI::IsMember({"left", "right"}));
    app.add_option("--orders", opts.orders, "extra random orders for basis verification");
    app.add_option("--seed", opts.seed, "seed for the random orders");
    app.add_flag("--machine", opts.machine, "suppress comment lines");
    app.add_option("--subalphabet", sub, "initial-segment sizes Y1[,Y2]");
    app.add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--poly", opts.poly, "expression for rearrange");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    opts.mode = mode == "tau" ? BracketMode::Tau : BracketMode::TauInverse;
    opts.side = side == "left" ? Side::Left : Side::Right;
    if (!sub.empty()) {
        std::istringstream in(sub);
        std::string part;
        while (std::getline(in, part, ',')) {
            try {
                opts.subalphabet.push_back(std::stoi(part));
            } catch (const std::exception&) {
                std::cerr << "error: bad --subalphabet value '" << part << "'\n";
                return 2;
            }
        }
        if (opts.subalphabet.empty() || opts.subalphabet.size() > 2) {
            std::cerr << "error: --subalphabet takes Y1 or Y1,Y2\n";
            return 2;
        }
    }

    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    try {
        Presentation pres = parse_presentation(buf.str());
        return run_command(command, pres, opts, std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
