#include <mixmul/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char **argv)
{
    using namespace mixmul;

    CLI::App app{"Multiplicities and mixed multiplicities of monomial filtrations"};
    std::string config_path;
    std::string out_path;
    std::string format;
    bool no_timestamp = false;
    bool validate_only = false;
    unsigned threads = 0;
    app.add_option("--config", config_path, "Job config (JSON)")->required();
    app.add_option("--out", out_path, "Report path; stdout when absent");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
    app.add_option("--threads", threads, "Worker threads for G evaluations")->check(CLI::PositiveNumber);
    app.add_flag("--validate", validate_only, "Only print config diagnostics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? cli::ok : cli::input_error;
    }

    Json config;
    try {
        config = cli::load_config(config_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::input_error;
    }

    if (validate_only) {
        const auto diag = cli::validate(config);
        for (const auto &d : diag)
            std::cerr << "error: " << d << '\n';
        if (diag.empty())
            std::cout << "config ok\n";
        return diag.empty() ? cli::ok : cli::input_error;
    }

    cli::RunOptions ro;
    ro.timestamp = !no_timestamp;
    if (threads > 0)
        ro.threads = threads;
    if (!format.empty())
        ro.format = format;
    if (!out_path.empty())
        ro.out_path = out_path;

    const auto res = cli::run(config, ro);
    for (const auto &m : res.messages)
        std::cerr << (res.status == cli::verification_failed ? "FAIL: " : "error: ") << m << '\n';
    if (res.status == cli::input_error)
        return res.status;

    const auto path = cli::output_path(config, ro);
    if (path.empty()) {
        std::cout << res.text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out || !(out << res.text)) {
            std::cerr << "error: cannot write '" << path << "'\n";
            return cli::input_error;
        }
    }
    return res.status;
}
