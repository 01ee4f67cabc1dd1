#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "sr3/generator.hpp"
#include "sr3/io.hpp"
#include "sr3/oracle.hpp"
#include "sr3/repair.hpp"
#include "sr3/solver.hpp"
#include "sr3/welfare_approx.hpp"

using json = nlohmann::json;
using namespace sr3;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitParse = 4;

json matching_to_json(const Matching& m) {
    json triples = json::array();
    for (const Triple& t : m.triples()) triples.push_back({t.members[0], t.members[1], t.members[2]});
    return triples;
}

json welfare_to_json(const WelfareReport& report) {
    json histogram = json::object();
    for (auto [w, count] : report.histogram) histogram[std::to_string(w)] = count;
    return {{"total", report.total}, {"histogram", histogram}};
}

// Oracle budget, overridable through SR3_ORACLE_MAX_AGENTS.
EnumerationBudget oracle_budget() {
    EnumerationBudget budget = EnumerationBudget::maximum_only();
    if (const char* env = std::getenv("SR3_ORACLE_MAX_AGENTS")) {
        try {
            budget.max_agents = std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("SR3_ORACLE_MAX_AGENTS is not an integer");
        }
    }
    return budget;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

struct BenchRow {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    double solve_ms = 0.0;
    double check_ms = 0.0;
    long long welfare = 0;
    bool stable = false;
};

int run_bench(const std::string& suite, std::uint64_t seed, std::vector<int> sizes,
              std::vector<double> ps, int reps, int threads, bool as_json) {
    struct Task {
        int n;
        double p;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    if (suite == "solve") {
        std::uint64_t counter = 0;
        for (int n : sizes)
            for (double p : ps)
                for (int r = 0; r < reps; ++r) tasks.push_back({n, p, seed + counter++});
    } else if (suite == "repair") {
        for (int n : sizes)
            for (int r = 0; r < reps; ++r) tasks.push_back({n, 0.0, seed});
    } else {
        throw InputError("unknown bench suite '" + suite + "' (expected solve or repair)");
    }

    std::vector<BenchRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            BenchRow row;
            row.n = task.n;
            row.p = task.p;
            row.seed = task.seed;
            if (suite == "solve") {
                GeneratorConfig config;
                config.family = Family::Random;
                config.n = task.n;
                config.p = task.p;
                config.seed = task.seed;
                Instance inst = generate(config).inst;
                auto t0 = std::chrono::steady_clock::now();
                Matching m = find_stable(inst);
                row.solve_ms = ms_since(t0);
                auto t1 = std::chrono::steady_clock::now();
                row.stable = is_stable(inst, m);
                row.check_ms = ms_since(t1);
                row.welfare = welfare(inst, m).total;
            } else {
                GeneratorConfig config;
                config.family = Family::LongChain;
                config.n = task.n;
                config.validate = false;
                Generated gen = generate(config);
                auto t0 = std::chrono::steady_clock::now();
                Matching m = repair(gen.inst, *gen.matching, *gen.pivot);
                row.solve_ms = ms_since(t0);
                auto t1 = std::chrono::steady_clock::now();
                row.stable = is_stable(gen.inst, m);
                row.check_ms = ms_since(t1);
                row.welfare = welfare(gen.inst, m).total;
            }
            rows[i] = row;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.n, a.p, a.seed) < std::tie(b.n, b.p, b.seed);
    });
    if (as_json) {
        json out = json::array();
        for (const BenchRow& r : rows)
            out.push_back({{"n", r.n},
                           {"p", r.p},
                           {"seed", r.seed},
                           {"solve_ms", r.solve_ms},
                           {"check_ms", r.check_ms},
                           {"welfare", r.welfare},
                           {"stable", r.stable}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n\tp\tseed\tsolve_ms\tcheck_ms\twelfare\tstable\n";
        for (const BenchRow& r : rows)
            std::cout << r.n << "\t" << r.p << "\t" << r.seed << "\t" << r.solve_ms << "\t"
                      << r.check_ms << "\t" << r.welfare << "\t" << (r.stable ? "yes" : "no")
                      << "\n";
    }
    for (const BenchRow& r : rows)
        if (!r.stable) return kExitUnstable;
    return kExitStable;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"three-dimensional stable roommates with additively separable preferences"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "find a stable P-matching");
    std::string solve_file, solve_out;
    bool solve_complete = false, solve_json = false;
    solve->add_option("instance", solve_file)->required();
    solve->add_flag("--complete", solve_complete, "group leftover agents into triples");
    solve->add_option("--out", solve_out, "write the matching to this file");
    solve->add_flag("--json", solve_json);

    auto* verify = app.add_subcommand("verify", "check stability of a matching");
    std::string verify_inst, verify_matching;
    bool verify_json = false;
    verify->add_option("instance", verify_inst)->required();
    verify->add_option("matching", verify_matching)->required();
    verify->add_flag("--json", verify_json);

    auto* approx = app.add_subcommand("approx", "welfare 2-approximation");
    std::string approx_inst, approx_out;
    bool approx_oracle = false, approx_json = false, approx_greedy = false;
    approx->add_option("instance", approx_inst)->required();
    approx->add_flag("--oracle", approx_oracle, "compare with the exact oracle");
    approx->add_flag("--greedy", approx_greedy, "use the greedy-maximal pair phase");
    approx->add_option("--out", approx_out);
    approx->add_flag("--json", approx_json);

    auto* exact = app.add_subcommand("exact", "brute-force oracle (budget-guarded)");
    std::string exact_inst;
    bool exact_maxuw = false, exact_json = false;
    exact->add_option("instance", exact_inst)->required();
    exact->add_flag("--max-uw", exact_maxuw, "maximum-welfare stable matching");
    exact->add_flag("--json", exact_json);

    auto* gen = app.add_subcommand("gen", "seeded instance generation");
    std::string gen_family = "random", gen_mode = "binary-symmetric";
    std::string gen_out, gen_match_out;
    int gen_n = 0, gen_case = 0, gen_q = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    bool gen_unique = false, gen_json = false;
    gen->add_option("--family", gen_family, "random|planted-pit|repair-case|long-chain");
    gen->add_option("--n", gen_n);
    gen->add_option("--p", gen_p);
    gen->add_option("--mode", gen_mode);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--case", gen_case, "repair case 1..7");
    gen->add_option("--q", gen_q, "planted-pit: 3q vertices");
    gen->add_flag("--unique", gen_unique, "planted-pit: keep the planted solution unique");
    gen->add_option("--out", gen_out, "instance file (default stdout)");
    gen->add_option("--match-out", gen_match_out, "repair families: matching file");
    std::string gen_pit_out, gen_solution_out;
    gen->add_option("--pit-out", gen_pit_out, "planted-pit: graph in pit format");
    gen->add_option("--solution-out", gen_solution_out, "planted-pit: planted partition");
    gen->add_flag("--json", gen_json);

    auto* reduce = app.add_subcommand("reduce-pit", "gadget reduction tooling");
    std::string pit_file, reduce_out, encode_file, decode_file, reduce_match_out;
    reduce->add_option("pit", pit_file)->required();
    reduce->add_option("--out", reduce_out, "write the reduced instance");
    reduce->add_option("--encode", encode_file, "partition file to encode as a matching");
    reduce->add_option("--decode", decode_file, "stable matching file to decode");
    reduce->add_option("--match-out", reduce_match_out, "where encode writes the matching");

    auto* bench = app.add_subcommand("bench", "timing harness");
    std::string bench_suite = "solve", bench_sizes = "30,60", bench_ps = "0.5";
    std::uint64_t bench_seed = 0;
    int bench_reps = 3, bench_threads = 1;
    bool bench_json = false;
    bench->add_option("suite", bench_suite, "solve|repair");
    bench->add_option("--seed", bench_seed);
    bench->add_option("--sizes", bench_sizes, "comma-separated agent counts");
    bench->add_option("--p", bench_ps, "comma-separated densities (solve suite)");
    bench->add_option("--reps", bench_reps);
    bench->add_option("--threads", bench_threads);
    bench->add_flag("--json", bench_json);

    app.parse(argc, argv);

    if (*solve) {
        Instance inst = parse_instance(read_file(solve_file));
        Matching m = find_stable(inst, solve_complete);
        WelfareReport report = welfare(inst, m);
        emit(solve_out, serialize_matching(m));
        if (solve_json) {
            std::cout << json{{"n", inst.agent_count()},
                              {"triples", matching_to_json(m)},
                              {"welfare", welfare_to_json(report)},
                              {"complete", solve_complete}}
                             .dump(2)
                      << "\n";
        } else if (!solve_out.empty()) {
            std::cout << "matched " << 3 * m.size() << "/" << inst.agent_count()
                      << " agents, welfare " << report.total << "\n";
        }
        return kExitStable;
    }

    if (*verify) {
        Instance inst = parse_instance(read_file(verify_inst));
        Matching m = parse_matching(read_file(verify_matching), inst.agent_count());
        std::optional<Triple> blocker = find_blocking_triple(inst, m);
        const bool stable = !blocker.has_value();
        const bool p_matching = is_p_matching(inst, m);
        WelfareReport report = welfare(inst, m);
        if (verify_json) {
            json out{{"stable", stable},
                     {"p_matching", p_matching},
                     {"welfare", welfare_to_json(report)}};
            out["blocking_triple"] =
                blocker ? json{blocker->members[0], blocker->members[1], blocker->members[2]}
                        : json(nullptr);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (stable ? "stable" : "unstable") << ", "
                      << (p_matching ? "P-matching" : "not a P-matching") << ", welfare "
                      << report.total << "\n";
            if (blocker)
                std::cout << "blocking triple: {" << blocker->members[0] << ","
                          << blocker->members[1] << "," << blocker->members[2] << "}\n";
        }
        return stable ? kExitStable : kExitUnstable;
    }

    if (*approx) {
        Instance inst = parse_instance(read_file(approx_inst));
        PairStrategy strategy =
            approx_greedy ? PairStrategy::GreedyMaximal : PairStrategy::Maximum;
        ApproxReport report = approx_report(inst, approx_oracle, oracle_budget(), strategy);
        if (!approx_out.empty()) emit(approx_out, serialize_matching(report.m_a));
        if (approx_json) {
            json out{{"welfare", report.welfare_a}, {"triples", matching_to_json(report.m_a)}};
            out["welfare_opt"] = report.welfare_opt ? json(*report.welfare_opt) : json(nullptr);
            out["ratio_bound_satisfied"] =
                report.ratio_bound_satisfied ? json(*report.ratio_bound_satisfied) : json(nullptr);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "welfare " << report.welfare_a;
            if (report.welfare_opt)
                std::cout << " (optimum " << *report.welfare_opt << ", bound "
                          << (*report.ratio_bound_satisfied ? "satisfied" : "violated") << ")";
            std::cout << "\n";
        }
        return kExitStable;
    }

    if (*exact) {
        Instance inst = parse_instance(read_file(exact_inst));
        if (exact_maxuw) {
            auto [m, w] = max_uw_stable(inst, oracle_budget());
            if (exact_json)
                std::cout << json{{"max_uw", w}, {"triples", matching_to_json(m)}}.dump(2)
                          << "\n";
            else
                std::cout << "max stable welfare " << w << "\n";
        } else {
            const bool exists = exists_stable(inst, oracle_budget());
            if (exact_json)
                std::cout << json{{"exists_stable", exists}}.dump(2) << "\n";
            else
                std::cout << (exists ? "a stable matching exists" : "no stable matching exists")
                          << "\n";
        }
        return kExitStable;
    }

    if (*gen) {
        GeneratorConfig config;
        auto family = family_from_string(gen_family);
        if (!family) throw InputError("unknown family '" + gen_family + "'");
        config.family = *family;
        auto mode = mode_from_string(gen_mode);
        if (!mode) throw InputError("unknown mode '" + gen_mode + "'");
        config.mode = *mode;
        config.n = gen_n;
        config.p = gen_p;
        config.seed = gen_seed;
        config.repair_case = gen_case;
        config.q = gen_q;
        config.unique_solution = gen_unique;
        Generated generated = generate(config);
        emit(gen_out, serialize_instance(generated.inst));
        if (!gen_match_out.empty() && generated.matching)
            write_file(gen_match_out, serialize_matching(*generated.matching));
        if (!gen_pit_out.empty() || !gen_solution_out.empty()) {
            if (config.family != Family::PlantedPit)
                throw InputError("--pit-out/--solution-out require the planted-pit family");
            auto [g, planted] =
                generate_planted_pit(config.q, config.p, config.seed, config.unique_solution);
            if (!gen_pit_out.empty()) write_file(gen_pit_out, serialize_pit(g));
            if (!gen_solution_out.empty())
                write_file(gen_solution_out, serialize_triple_list(planted));
        }
        if (gen_json) {
            json out{{"n", generated.inst.agent_count()}, {"family", gen_family}};
            out["pivot"] = generated.pivot ? json(*generated.pivot) : json(nullptr);
            out["expected_case"] =
                generated.expected_case ? json(*generated.expected_case) : json(nullptr);
            std::cout << out.dump(2) << "\n";
        } else if (generated.pivot) {
            std::cout << "pivot " << *generated.pivot << ", expected case "
                      << *generated.expected_case << "\n";
        }
        return kExitStable;
    }

    if (*reduce) {
        PITInstance g = parse_pit(read_file(pit_file));
        auto [inst, map] = reduce_pit(g);
        if (!reduce_out.empty()) emit(reduce_out, serialize_instance(inst));
        if (!encode_file.empty()) {
            std::vector<Triple> partition =
                parse_triple_list(read_file(encode_file), g.vertex_count);
            Matching m = encode_pit_solution(g, partition, map);
            emit(reduce_match_out, serialize_matching(m));
        }
        if (!decode_file.empty()) {
            Matching m = parse_matching(read_file(decode_file), inst.agent_count());
            std::cout << serialize_triple_list(decode_stable_matching(g, map, m));
        }
        if (reduce_out.empty() && encode_file.empty() && decode_file.empty())
            std::cout << "agents " << inst.agent_count() << ", unit arcs " << inst.arcs().size()
                      << "\n";
        return kExitStable;
    }

    if (*bench) {
        auto parse_list = [](const std::string& csv) {
            std::vector<std::string> items;
            std::stringstream stream(csv);
            std::string item;
            while (std::getline(stream, item, ',')) items.push_back(item);
            return items;
        };
        std::vector<int> sizes;
        for (const std::string& s : parse_list(bench_sizes)) sizes.push_back(std::stoi(s));
        std::vector<double> ps;
        for (const std::string& s : parse_list(bench_ps)) ps.push_back(std::stod(s));
        return run_bench(bench_suite, bench_seed, sizes, ps, bench_reps, bench_threads,
                         bench_json);
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
