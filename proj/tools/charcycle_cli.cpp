#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "charcycle/job.hpp"
#include "charcycle/parse.hpp"

int main(int argc, char** argv) {
    CLI::App app{"characteristic cycles of localizations and local cohomology"};

    std::string input_path;
    std::string expression;
    std::string strategy = "single";
    std::string format = "text";
    std::string split_spec;
    std::string cache_dir;
    bool strict = false;
    bool vertices = false;

    app.add_option("input", input_path, "job file ('-' for stdin)");
    app.add_option("-e,--expr", expression, "job text given inline");
    app.add_option("--strategy", strategy, "localization strategy: single|iterative")
        ->check(CLI::IsMember({"single", "iterative"}));
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--split", split_spec,
                   "direct-sum split of the declared cycle, e.g. \"0|1,2\" "
                   "(component indices in canonical order)");
    app.add_option("--cache-dir", cache_dir, "directory for the computation cache");
    app.add_flag("--strict", strict, "escalate the saturation warning to exit code 4");
    app.add_flag("--vertices", vertices, "include the full hypercube tables in the report");

    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (!expression.empty()) {
        text = expression;
    } else if (input_path.empty() || input_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "error: cannot open " << input_path << "\n";
            return 3;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    try {
        charcycle::JobSpec job = charcycle::parse_job(text);
        charcycle::RunOptions options;
        options.strategy = strategy == "iterative" ? charcycle::Strategy::Iterative
                                                   : charcycle::Strategy::Single;
        options.strict = strict;
        options.vertices = vertices;
        options.cache_dir = cache_dir;
        if (!split_spec.empty())
            options.split = charcycle::parse_split(split_spec);
        charcycle::Report report = charcycle::run(job, options);
        if (format == "json")
            std::cout << report.structured << "\n";
        else
            std::cout << report.text;
        if (report.exit_code == 3)
            std::cerr << report.text;
        return report.exit_code;
    } catch (const charcycle::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const charcycle::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
