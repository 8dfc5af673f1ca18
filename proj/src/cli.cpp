#include "alldiff/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alldiff/engine.hpp"
#include "alldiff/generators.hpp"
#include "alldiff/problem_io.hpp"
#include "alldiff/regin.hpp"

namespace alldiff::cli {

namespace {

struct InputOptions {
    std::string file;
    std::string generator;
    gen::GeneratorParams params;
};

struct Options {
    InputOptions input;
    std::string level = "gac";
    bool stats = false;
    bool dump_graph = false;
    std::string mode = "first";
    std::size_t repeat = 1;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("file", in.file, "Problem file, '-' for stdin");
    cmd.add_option("--generate", in.generator, "Built-in instance instead of a file")
        ->check(CLI::IsMember({"speeches", "revised-speeches", "nqueens", "random"}));
    cmd.add_option("--n", in.params.n, "Board size for nqueens");
    cmd.add_option("--vars", in.params.random.n, "Variable count for random");
    cmd.add_option("--lo", in.params.random.lo, "Smallest value for random");
    cmd.add_option("--hi", in.params.random.hi, "Largest value for random");
    cmd.add_option("--density", in.params.random.density, "Value density for random");
    cmd.add_option("--seed", in.params.random.seed, "Seed for random");
}

void add_level_option(CLI::App& cmd, Options& o) {
    cmd.add_option("--level", o.level, "decomp, bound, range or gac")
        ->check(CLI::IsMember({"decomp", "bound", "range", "gac"}));
}

Problem load(const InputOptions& in) {
    if (!in.generator.empty()) {
        if (!in.file.empty()) throw UsageError("give either a file or --generate, not both");
        return gen::generate(in.generator, in.params);
    }
    if (in.file.empty()) throw UsageError("no input: give a file, '-' or --generate");
    std::ostringstream text;
    if (in.file == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream f(in.file);
        if (!f) throw UsageError("cannot open '" + in.file + "'");
        text << f.rdbuf();
    }
    return io::parse_problem(text.str());
}

ConsistencyLevel level_of(const Options& o) {
    auto level = parse_level(o.level);
    if (!level) throw UsageError("unknown level '" + o.level + "'");
    return *level;
}

double millis(std::chrono::nanoseconds ns) {
    return std::chrono::duration<double, std::milli>(ns).count();
}

void print_stats(std::ostream& err, const engine::SearchStats& s) {
    err << "nodes: " << s.nodes_explored << "\nfailures: " << s.failures
        << "\nprunings: " << s.prunings << "\ntime_ms: " << std::fixed << std::setprecision(3)
        << millis(s.wall_time) << '\n';
    err.unsetf(std::ios::floatfield);
}

int do_filter(const Options& o, std::ostream& out, std::ostream& err) {
    const Problem p = load(o.input);
    const ConsistencyLevel level = level_of(o);
    if (o.dump_graph) {
        for (std::size_t ci = 0; ci < p.constraints.size(); ++ci) {
            const auto& c = p.constraints[ci];
            const auto g = regin::build_value_graph(c, p.domains);
            err << "constraint " << ci + 1 << ":\n"
                << regin::dump_value_graph(g, regin::maximum_matching(g), p.names);
        }
    }
    const auto start = std::chrono::steady_clock::now();
    const FilterOutcome result = engine::propagate(p, level, p.domains);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (o.stats) {
        err << "time_ms: " << std::fixed << std::setprecision(3)
            << millis(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)) << '\n';
        err.unsetf(std::ios::floatfield);
    }
    if (!result) {
        out << "INFEASIBLE\n";
        err << result.reason().diagnostic << '\n';
        return kExitNoSolution;
    }
    if (o.stats) {
        err << "prunings: " << p.domains.total_size() - result.store().total_size() << '\n';
    }
    for (std::size_t i = 0; i < p.n; ++i) {
        const VariableId v{i};
        out << p.name_of(v) << ": " << to_string(result.store()[v]) << '\n';
    }
    return kExitOk;
}

int do_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const Problem p = load(o.input);
    const auto result = engine::solve(p, level_of(o), engine::SearchMode::First);
    if (o.stats) print_stats(err, result.stats);
    if (!result.solution) {
        out << "NO SOLUTION\n";
        return kExitNoSolution;
    }
    for (std::size_t i = 0; i < p.n; ++i) {
        out << p.name_of(VariableId{i}) << " = " << (*result.solution)[i] << '\n';
    }
    return kExitOk;
}

int do_count(const Options& o, std::ostream& out, std::ostream& err) {
    const Problem p = load(o.input);
    const auto result = engine::solve(p, level_of(o), engine::SearchMode::CountAll);
    if (o.stats) print_stats(err, result.stats);
    out << result.solution_count << '\n';
    return result.solution_count ? kExitOk : kExitNoSolution;
}

int do_bench(const Options& o, bool level_given, std::ostream& out, std::ostream& err) {
    if (o.input.generator.empty() && o.input.file.empty()) {
        throw UsageError("bench needs --generate NAME or a file");
    }
    if (o.repeat == 0) throw UsageError("--repeat must be at least 1");
    const Problem p = load(o.input);
    const auto mode = o.mode == "count" ? engine::SearchMode::CountAll : engine::SearchMode::First;

    std::vector<ConsistencyLevel> levels;
    if (level_given) {
        levels.push_back(level_of(o));
    } else {
        levels.assign(std::begin(kAllLevels), std::end(kAllLevels));
    }

    std::size_t arity = 0;
    for (const auto& c : p.constraints) arity = std::max(arity, c.vars.size());
    out << "instance: " << (o.input.generator.empty() ? o.input.file : o.input.generator)
        << " vars=" << p.n << " constraints=" << p.constraints.size() << " max_arity=" << arity
        << " values=" << p.domains.total_size() << '\n';
    out << std::left << std::setw(8) << "level" << std::right << std::setw(12) << "nodes"
        << std::setw(12) << "failures" << std::setw(14) << "prunings" << std::setw(12)
        << "solutions" << std::setw(14) << "best_ms" << '\n';

    bool any = false;
    for (ConsistencyLevel level : levels) {
        engine::SearchResult best;
        for (std::size_t r = 0; r < o.repeat; ++r) {
            auto result = engine::solve(p, level, mode);
            if (r == 0 || result.stats.wall_time < best.stats.wall_time) best = std::move(result);
        }
        any = any || best.solution_count > 0;
        out << std::left << std::setw(8) << to_string(level) << std::right << std::setw(12)
            << best.stats.nodes_explored << std::setw(12) << best.stats.failures << std::setw(14)
            << best.stats.prunings << std::setw(12) << best.solution_count << std::setw(14)
            << std::fixed << std::setprecision(3) << millis(best.stats.wall_time) << '\n';
        out.unsetf(std::ios::floatfield);
        if (o.stats) {
            err << to_string(level) << ":\n";
            print_stats(err, best.stats);
        }
    }
    return any ? kExitOk : kExitNoSolution;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("alldifferent filtering at four consistency levels", "alldiff");
    app.require_subcommand(1);
    Options o;

    auto* filter = app.add_subcommand("filter", "Print the filtered domain of every variable");
    auto* solve = app.add_subcommand("solve", "Print the first solution");
    auto* count = app.add_subcommand("count", "Print the number of solutions");
    auto* bench = app.add_subcommand("bench", "Solve an instance at each level and time it");
    for (auto* cmd : {filter, solve, count, bench}) {
        add_input_options(*cmd, o.input);
        add_level_option(*cmd, o);
        cmd->add_flag("--stats", o.stats, "Search statistics to the error stream");
    }
    filter->add_flag("--dump-graph", o.dump_graph, "Value graph and matching to the error stream");
    bench->add_option("--mode", o.mode, "first or count")->check(CLI::IsMember({"first", "count"}));
    bench->add_option("--repeat", o.repeat, "Runs per level; the fastest is reported");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (filter->parsed()) return do_filter(o, out, err);
        if (solve->parsed()) return do_solve(o, out, err);
        if (count->parsed()) return do_count(o, out, err);
        return do_bench(o, bench->count("--level") > 0, out, err);
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const io::ValidationError& e) {
        err << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace alldiff::cli
