#include "alldiff/generators.hpp"

#include <random>
#include <string>

namespace alldiff::gen {

namespace {

struct Speaker {
    const char* name;
    Value earliest;
    Value latest;
};

constexpr Speaker kSpeakers[] = {
    {"sebastian", 3, 6}, {"frederic", 3, 4}, {"jan_georg", 2, 5},
    {"krzysztof", 2, 4}, {"maarten", 3, 4},  {"luca", 1, 6},
};

Problem schedule(bool revised) {
    Problem p;
    std::vector<Domain> domains;
    AllDifferentConstraint all;
    for (const auto& s : kSpeakers) {
        const std::string name = s.name;
        if (revised && (name == "krzysztof" || name == "luca")) continue;
        all.vars.push_back(VariableId{p.n++});
        p.names.push_back(name);
        domains.push_back(Domain::range(s.earliest, s.latest));
    }
    p.domains = DomainStore(std::move(domains));
    p.constraints.push_back(std::move(all));
    return p;
}

}  // namespace

Problem speeches() { return schedule(false); }

Problem revised_speeches() { return schedule(true); }

Problem nqueens(std::size_t n) {
    if (n == 0) throw UsageError("nqueens: n must be at least 1");
    Problem p;
    p.n = 3 * n;
    std::vector<Domain> domains(p.n);
    AllDifferentConstraint columns, up, down;
    const auto size = static_cast<Value>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = static_cast<Value>(i + 1);
        const VariableId q{i}, u{n + i}, d{2 * n + i};
        domains[q.index] = Domain::range(1, size);
        domains[u.index] = Domain::range(1 + row, size + row);
        domains[d.index] = Domain::range(1 - row, size - row);
        columns.vars.push_back(q);
        up.vars.push_back(u);
        down.vars.push_back(d);
    }
    // Channels in the order of their derived variables, as a parsed file lists them.
    for (std::size_t family = 1; family <= 2; ++family) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = static_cast<Value>(i + 1);
            p.channels.push_back({VariableId{i}, VariableId{family * n + i}, family == 1 ? row : -row});
        }
    }
    p.names.resize(p.n);
    for (std::size_t i = 0; i < n; ++i) {
        p.names[i] = "q" + std::to_string(i + 1);
        p.names[n + i] = "u" + std::to_string(i + 1);
        p.names[2 * n + i] = "d" + std::to_string(i + 1);
    }
    p.domains = DomainStore(std::move(domains));
    p.constraints = {std::move(columns), std::move(up), std::move(down)};
    return p;
}

Problem random_problem(const RandomParams& params) {
    if (params.n == 0) throw UsageError("random: n must be at least 1");
    if (params.lo > params.hi) throw UsageError("random: empty value range");
    if (!(params.density >= 0.0 && params.density <= 1.0)) {
        throw UsageError("random: density must lie in [0,1]");
    }
    if (span_of(params.lo, params.hi) >= 1'000'000) throw UsageError("random: value range too wide");

    // Raw engine output only: the standard distributions are not portable.
    std::mt19937_64 rng(params.seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const std::uint64_t width = span_of(params.lo, params.hi) + 1;

    Problem p;
    p.n = params.n;
    std::vector<Domain> domains;
    AllDifferentConstraint all;
    for (std::size_t i = 0; i < params.n; ++i) {
        std::vector<Value> values;
        for (std::uint64_t k = 0; k < width; ++k) {
            if (unit() < params.density) values.push_back(params.lo + static_cast<Value>(k));
        }
        if (values.empty()) values.push_back(params.lo + static_cast<Value>(rng() % width));
        domains.emplace_back(std::move(values));
        all.vars.push_back(VariableId{i});
        p.names.push_back("x" + std::to_string(i + 1));
    }
    p.domains = DomainStore(std::move(domains));
    p.constraints.push_back(std::move(all));
    return p;
}

Problem generate(std::string_view name, const GeneratorParams& params) {
    if (name == "speeches") return speeches();
    if (name == "revised-speeches") return revised_speeches();
    if (name == "nqueens") return nqueens(params.n);
    if (name == "random") return random_problem(params.random);
    throw UsageError("unknown generator '" + std::string(name) +
                     "' (expected speeches, revised-speeches, nqueens or random)");
}

}  // namespace alldiff::gen
