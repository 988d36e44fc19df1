// matchpoly: exact matching-polynomial analysis of small graphs.
//
// Subcommands:
//   analyze   full theta analysis of one graph (JSON or text)
//   roots     mu and its degree <= 2 root candidates with multiplicities
//   barriers  analyze with barrier enumeration always on
//   verify    run the theorem suite over a corpus
//   hunt      search small graphs for a named counterexample
//
// Exit codes: 0 success (verify: suite pass; hunt: witness found),
// 1 suite failure / witness not found, 2 bad input, 3 refusal to run an
// exhaustive scan above the cap without --force.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matchpoly/analysis.hpp"
#include "matchpoly/errors.hpp"
#include "matchpoly/suite.hpp"

namespace {

using namespace matchpoly;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file '" + path + "'");
    out << payload;
}

ThetaSpec theta_from_flags(const std::string& theta_rational, const std::string& theta_poly,
                           const std::string& label) {
    if (!theta_poly.empty()) {
        IntPoly m = IntPoly::parse_text(theta_poly);
        return ThetaSpec(std::move(m), label);
    }
    if (!theta_rational.empty()) {
        ThetaSpec t = ThetaSpec::parse_rational(theta_rational);
        if (!label.empty()) return ThetaSpec(t.minpoly(), label);
        return t;
    }
    return ThetaSpec::zero();
}

std::string render_analysis_text(const nlohmann::ordered_json& doc) {
    std::ostringstream out;
    out << "graph: " << doc["graph"]["format"].get<std::string>() << ", n = "
        << doc["graph"]["n"].get<int>() << "\n";
    out << "theta: " << doc["theta"]["label"].get<std::string>() << "  (minpoly "
        << doc["theta"]["minpoly"].get<std::string>() << ")\n";
    out << "mu: " << doc["mu"].get<std::string>() << "\n";
    out << "mult: " << doc["mult"].get<int>() << "\n";
    out << "critical: " << (doc["critical"].get<bool>() ? "true" : "false") << "\n";
    auto set_line = [&](const char* name, const nlohmann::ordered_json& arr) {
        out << name << " = {";
        for (std::size_t i = 0; i < arr.size(); ++i) out << (i ? "," : "") << arr[i].get<std::string>();
        out << "}";
    };
    out << "decomposition: ";
    set_line("D", doc["decomposition"]["D"]);
    out << " ";
    set_line("A", doc["decomposition"]["A"]);
    out << " ";
    set_line("N", doc["decomposition"]["N"]);
    out << " ";
    set_line("P", doc["decomposition"]["P"]);
    out << "\n";
    if (doc["deficiency"].is_null()) {
        out << "deficiency: skipped\n";
    } else {
        out << "deficiency: " << doc["deficiency"]["value"].get<int>() << ", witness ";
        set_line("X", doc["deficiency"]["witness"]);
        out << "\n";
    }
    if (doc["barriers"].is_null()) {
        out << "barriers: skipped\n";
    } else {
        out << "barriers: " << doc["barriers"]["all"].size() << " total, "
            << doc["barriers"]["maximal"].size() << " maximal, intersection ";
        set_line("", doc["barriers"]["intersection_of_maximal"]);
        out << (doc["barriers"]["equals_A_theta"].get<bool>() ? " = A_theta" : " != A_theta");
        out << (doc["barriers"]["N_theta_empty"].get<bool>() ? " (N_theta empty)" : " (N_theta nonempty)");
        out << "\n";
    }
    return out.str();
}

std::string render_roots_text(const nlohmann::ordered_json& doc) {
    std::ostringstream out;
    out << "mu: " << doc["mu_pretty"].get<std::string>() << "  [" << doc["mu"].get<std::string>()
        << "]\n";
    if (doc["candidates"].empty()) {
        out << "no roots with minimal polynomial of degree <= 2\n";
        return out.str();
    }
    for (const auto& c : doc["candidates"]) {
        out << c["pretty"].get<std::string>() << ": " << c["multiplicity"].get<int>() << "\n";
    }
    return out.str();
}

struct AnalyzeArgs {
    std::string input = "-";
    std::string format = "edgelist";
    std::string theta_rational;
    std::string theta_poly;
    std::string label;
    std::string output = "json";
    std::string out_path;
    bool no_barriers = false;
    bool force = false;
};

void add_analyze_flags(CLI::App* cmd, AnalyzeArgs& a, bool barrier_alias) {
    cmd->add_option("--input", a.input, "input file or - for stdin")->capture_default_str();
    cmd->add_option("--format", a.format, "graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_option("--theta", a.theta_rational, "rational theta, e.g. 0, 1, -2, 5/4");
    cmd->add_option("--theta-poly", a.theta_poly,
                    "theta minimal polynomial, descending coefficients, e.g. \"1 0 -3\"");
    cmd->add_option("--label", a.label, "display label for theta");
    cmd->add_option("--output", a.output, "output form")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", a.out_path, "write to file instead of stdout");
    if (!barrier_alias)
        cmd->add_flag("--no-barriers", a.no_barriers, "skip the exhaustive deficiency/barrier scans");
    cmd->add_flag("--force", a.force, "run exhaustive scans above the n cap");
}

int run_analyze(const AnalyzeArgs& a, bool barrier_alias) {
    if (!a.theta_rational.empty() && !a.theta_poly.empty())
        throw std::domain_error("--theta and --theta-poly are mutually exclusive");
    ThetaSpec theta = theta_from_flags(a.theta_rational, a.theta_poly, a.label);
    AnalyzeOptions opt;
    opt.with_barriers = barrier_alias || !a.no_barriers;
    opt.force = a.force;
    nlohmann::ordered_json doc = analyze_document(read_input(a.input), a.format, theta, opt);
    write_output(a.out_path, a.output == "json" ? doc.dump(2) + "\n" : render_analysis_text(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matching-polynomial, theta-decomposition and barrier-set toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args, barrier_args;
    CLI::App* analyze = app.add_subcommand("analyze", "full theta analysis of one graph");
    add_analyze_flags(analyze, analyze_args, false);
    CLI::App* barriers = app.add_subcommand("barriers", "analyze with barrier enumeration forced on");
    add_analyze_flags(barriers, barrier_args, true);

    struct {
        std::string input = "-";
        std::string format = "edgelist";
        std::string output = "text";
        std::string out_path;
    } roots_args;
    CLI::App* roots = app.add_subcommand("roots", "mu and its degree <= 2 roots");
    roots->add_option("--input", roots_args.input, "input file or - for stdin")->capture_default_str();
    roots->add_option("--format", roots_args.format, "graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    roots->add_option("--output", roots_args.output, "output form")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    roots->add_option("--out", roots_args.out_path, "write to file instead of stdout");

    struct {
        int nmax = -1;
        std::string corpus_path;
        std::string policy = "deg2";
        std::string theta_file;
        int jobs = 1;
        std::string out_path;
        std::uint64_t random_count = 0;
        int random_n = 10;
        double random_p = 0.5;
        std::uint64_t seed = 1;
    } verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the theorem suite over a corpus");
    verify->add_option("--nmax", verify_args.nmax, "exhaustive corpus: all labeled graphs on 0..K vertices");
    verify->add_option("--corpus", verify_args.corpus_path, "graph6 corpus file, one graph per line");
    verify->add_option("--theta-policy", verify_args.policy, "theta policy")
        ->check(CLI::IsMember({"zero", "deg2", "file"}))
        ->capture_default_str();
    verify->add_option("--theta-file", verify_args.theta_file,
                       "file of theta minimal polynomials (one per line, descending coefficients)");
    verify->add_option("--jobs", verify_args.jobs, "worker threads")->capture_default_str();
    verify->add_option("--out", verify_args.out_path, "write the JSON report here (text summary to stdout)");
    verify->add_option("--random-count", verify_args.random_count,
                       "append seeded random graphs to the corpus");
    verify->add_option("--random-n", verify_args.random_n, "vertex count for random graphs")
        ->capture_default_str();
    verify->add_option("--random-p", verify_args.random_p, "edge probability for random graphs")
        ->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "seed for random graphs")->capture_default_str();

    struct {
        std::string target;
        int nmax = 7;
        int count = 1;
        int jobs = 1;
        std::string out_path;
    } hunt_args;
    CLI::App* hunt = app.add_subcommand("hunt", "search small graphs for a named counterexample");
    hunt->add_option("--target", hunt_args.target,
                     "one of: barrier_not_zero_barrier, extreme_not_barrier, "
                     "barrier_family_not_closed, special_intersection_gap")
        ->required();
    hunt->add_option("--nmax", hunt_args.nmax, "largest vertex count to scan")->capture_default_str();
    hunt->add_option("--count", hunt_args.count, "stop after this many witnesses")->capture_default_str();
    hunt->add_option("--jobs", hunt_args.jobs, "worker threads")->capture_default_str();
    hunt->add_option("--out", hunt_args.out_path, "write the JSON report here (text summary to stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_args, false);
        if (barriers->parsed()) return run_analyze(barrier_args, true);

        if (roots->parsed()) {
            nlohmann::ordered_json doc = roots_document(read_input(roots_args.input), roots_args.format);
            write_output(roots_args.out_path,
                         roots_args.output == "json" ? doc.dump(2) + "\n" : render_roots_text(doc));
            return 0;
        }

        if (verify->parsed()) {
            std::vector<Corpus> parts;
            if (verify_args.nmax >= 0) parts.push_back(exhaustive_corpus(verify_args.nmax));
            if (!verify_args.corpus_path.empty())
                parts.push_back(graph6_corpus(read_input(verify_args.corpus_path)));
            if (verify_args.random_count > 0)
                parts.push_back(random_corpus(verify_args.random_n, verify_args.random_p,
                                              verify_args.random_count, verify_args.seed));
            if (parts.empty())
                throw std::domain_error("verify needs --nmax, --corpus or --random-count");
            Corpus corpus = parts.size() == 1
                                ? std::move(parts.front())
                                : concat_corpora(std::move(parts), "combined corpus");

            SuiteOptions opt;
            opt.jobs = verify_args.jobs;
            if (verify_args.policy == "zero") {
                opt.policy = ThetaPolicy::ZeroOnly;
            } else if (verify_args.policy == "deg2") {
                opt.policy = ThetaPolicy::CandidatesDeg2;
            } else {
                opt.policy = ThetaPolicy::ExplicitList;
                if (verify_args.theta_file.empty())
                    throw std::domain_error("--theta-policy file needs --theta-file");
                std::istringstream in(read_input(verify_args.theta_file));
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    opt.explicit_thetas.emplace_back(IntPoly::parse_text(line));
                }
            }
            SuiteReport rep = run_suite(corpus, opt);
            if (verify_args.out_path.empty()) {
                std::cout << rep.to_json().dump(2) << "\n";
                std::cerr << rep.to_text();
            } else {
                write_output(verify_args.out_path, rep.to_json().dump(2) + "\n");
                std::cout << rep.to_text();
            }
            return rep.pass() ? 0 : 1;
        }

        if (hunt->parsed()) {
            auto target = hunt_target_from_string(hunt_args.target);
            if (!target) {
                std::cerr << "error: unknown hunt target '" << hunt_args.target << "'\n";
                return 2;
            }
            HuntReport rep =
                hunt_counterexamples(*target, hunt_args.nmax, hunt_args.count, hunt_args.jobs);
            if (hunt_args.out_path.empty()) {
                std::cout << rep.to_json().dump(2) << "\n";
                std::cerr << rep.to_text();
            } else {
                write_output(hunt_args.out_path, rep.to_json().dump(2) + "\n");
                std::cout << rep.to_text();
            }
            return rep.ok() ? 0 : 1;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
