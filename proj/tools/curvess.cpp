// curvess: analyze curve documents, single plane germs, or the builtin corpus.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 truncation cap hit.
#include "curvess/corpus.hpp"
#include "curvess/error.hpp"
#include "curvess/parse.hpp"
#include "curvess/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace curvess;

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NonIsolated:
    case ErrorKind::NotMPrimary:
        return 3;
    default:
        return 2;
    }
}

std::pair<int, int> parse_window(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "--hc-window expects a,b");
    try {
        const int a = std::stoi(text.substr(0, comma));
        const int b = std::stoi(text.substr(comma + 1));
        if (a > b)
            throw Error(ErrorKind::InvalidArgument, "--hc-window needs a <= b");
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "--hc-window expects two integers");
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hodge and Hochschild degeneration checks for curves with lci singularities"};
    app.require_subcommand(1);

    std::optional<std::uint32_t> truncation;
    std::string format = "text";
    std::string hc_window = "-2,4";
    int tail_window = 4;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--truncation", truncation, "fixed jet truncation order")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--hc-window", hc_window, "range a,b of m for the Hochschild pages");
        sub->add_option("--tail-window", tail_window, "largest p shown in the tail")->check(CLI::Range(1, 64));
    };

    std::string file;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a curve document");
    analyze_cmd->add_option("file", file, "curve document (JSON)")->required();
    add_common(analyze_cmd);

    std::string expr;
    std::string vars = "u,v";
    auto* sing_cmd = app.add_subcommand("sing", "analyze one plane germ at the origin");
    sing_cmd->add_option("expr", expr, "polynomial f(u, v)")->required();
    sing_cmd->add_option("--vars", vars, "the two variable names");
    add_common(sing_cmd);

    std::string export_dir;
    auto* corpus_cmd = app.add_subcommand("corpus", "run the builtin corpus");
    corpus_cmd->add_option("--export", export_dir, "write the corpus documents to this directory");
    add_common(corpus_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        ReportOptions opts;
        opts.analysis.truncation = truncation;
        opts.hc_window = parse_window(hc_window);
        opts.tail_window = tail_window;

        if (*analyze_cmd) {
            const Report rep = analyze(load_curve(file), opts);
            std::cout << render_report(rep, format);
            return rep.any_failed() ? 1 : 0;
        }
        if (*sing_cmd) {
            CurveDocument doc;
            doc.label = expr;
            SingularityDocument s;
            s.kind = "plane";
            s.variables = parse_var_list(vars);
            s.f = expr;
            doc.singularities.push_back(s);
            if (s.variables.size() != 2)
                throw Error(ErrorKind::InvalidArgument, "--vars needs exactly two names");
            const Report rep = analyze(parse_curve(doc), opts);
            std::cout << render_report(rep, format);
            return rep.any_failed() ? 1 : 0;
        }
        if (!export_dir.empty()) {
            std::filesystem::create_directories(export_dir);
            for (const EmbeddedDocument& d : embedded_corpus()) {
                std::ofstream out(std::filesystem::path(export_dir) / d.name);
                out << d.content;
                if (!out)
                    throw Error(ErrorKind::Io, std::string("cannot write ") + d.name);
            }
            return 0;
        }
        const CorpusSummary summary = run_corpus(opts);
        std::cout << render_corpus(summary, format);
        return summary.any_failed ? 1 : 0;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}
