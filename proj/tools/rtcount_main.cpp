// rtcount_main.cpp -- command line front end.  Everything goes through the
// C API in rtcount.h; this file owns flag parsing, output formatting and the
// status -> exit code mapping (0 ok, 2 usage, 3 guard, 4 io/cache, 1 bug).

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtcount.h"

namespace {

using nlohmann::ordered_json;

int exit_code(rtc_status st) {
    switch (st) {
        case RTC_OK: return 0;
        case RTC_ERR_INVALID: return 2;
        case RTC_ERR_GUARD: return 3;
        case RTC_ERR_IO: return 4;
        case RTC_ERR_INTERNAL: return 1;
    }
    return 1;
}

int fail(rtc_status st) {
    std::fprintf(stderr, "rtcount: %s: %s\n", rtc_status_name(st), rtc_last_error());
    return exit_code(st);
}

struct PipelineHandle {
    rtc_pipeline* p = rtc_pipeline_new();
    ~PipelineHandle() { rtc_pipeline_free(p); }
};

struct GraphHandle {
    rtc_graph* g = nullptr;
    ~GraphHandle() { rtc_graph_free(g); }
};

int cmd_sequence(int64_t n_max, const std::string& format, const std::string& cache,
                 bool emit_total, int threads) {
    PipelineHandle h;
    if (rtc_status st = rtc_pipeline_set_threads(h.p, threads)) return fail(st);
    if (!cache.empty() && std::filesystem::exists(cache))
        if (rtc_status st = rtc_pipeline_load_cache(h.p, cache.c_str())) return fail(st);

    std::vector<int64_t> half(static_cast<size_t>(n_max)), total(static_cast<size_t>(n_max));
    if (rtc_status st = rtc_pipeline_sequence(h.p, n_max, half.data(), total.data()))
        return fail(st);
    if (!cache.empty())
        if (rtc_status st = rtc_pipeline_save_cache(h.p, cache.c_str())) return fail(st);

    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (int64_t n = 1; n <= n_max; ++n) {
            ordered_json row;
            row["n"] = n;
            row["a103158"] = half[n - 1];
            if (emit_total) row["total"] = total[n - 1];
            rows.push_back(std::move(row));
        }
        std::printf("%s\n", rows.dump(2).c_str());
    } else {
        std::printf(emit_total ? "n,a103158,total\n" : "n,a103158\n");
        for (int64_t n = 1; n <= n_max; ++n) {
            if (emit_total)
                std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 "\n", n, half[n - 1], total[n - 1]);
            else
                std::printf("%" PRId64 ",%" PRId64 "\n", n, half[n - 1]);
        }
    }
    return 0;
}

int cmd_solutions(int64_t d, const std::string& format) {
    int64_t lambda = 0, g2 = 0, pi = 0;
    if (rtc_status st = rtc_lambda_count(d, &lambda)) return fail(st);
    if (rtc_status st = rtc_gamma2(3 * d * d, &g2)) return fail(st);
    if (rtc_status st = rtc_pi_epsilon(d, &pi)) return fail(st);
    int64_t* rows = nullptr;
    size_t count = 0;
    if (rtc_status st = rtc_solutions_3d2(d, &rows, &count)) return fail(st);

    if (format == "json") {
        ordered_json obj;
        obj["d"] = d;
        obj["lambda"] = lambda;
        obj["gamma2_3d2"] = g2;
        obj["pi_epsilon"] = pi;
        ordered_json sols = ordered_json::array();
        for (size_t i = 0; i < count; ++i)
            sols.push_back({rows[4 * i], rows[4 * i + 1], rows[4 * i + 2], rows[4 * i + 3]});
        obj["solutions"] = std::move(sols);
        std::printf("%s\n", obj.dump(2).c_str());
    } else {
        std::printf("# lambda=%" PRId64 " gamma2_3d2=%" PRId64 " pi_epsilon=%" PRId64 "\n", lambda,
                    g2, pi);
        std::printf("a,b,c,d\n");
        for (size_t i = 0; i < count; ++i)
            std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 "\n", rows[4 * i],
                        rows[4 * i + 1], rows[4 * i + 2], rows[4 * i + 3]);
    }
    rtc_free_i64(rows);
    return 0;
}

int cmd_oracle(int64_t n_max, const std::string& method, bool force) {
    std::printf("n,total,a103158\n");
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t total = 0;
        rtc_status st = (method == "quadruple") ? rtc_oracle_quadruple_count(n, &total)
                                                : rtc_oracle_triangle_count(n, force ? 1 : 0, &total);
        if (st) return fail(st);
        std::printf("%" PRId64 ",%" PRId64 ",%" PRId64 "\n", n, total, total / 2);
    }
    return 0;
}

int cmd_graph(int64_t d_max, const std::string& dot_path, bool components) {
    GraphHandle h;
    if (rtc_status st = rtc_graph_build(d_max, &h.g)) return fail(st);

    if (!dot_path.empty()) {
        char* dot = nullptr;
        if (rtc_status st = rtc_graph_dot(h.g, &dot)) return fail(st);
        if (dot_path == "-") {
            std::printf("%s", dot);
        } else {
            std::ofstream out(dot_path, std::ios::binary);
            if (out) out << dot;
            if (!out) {
                rtc_free_str(dot);
                std::fprintf(stderr, "rtcount: cannot write '%s'\n", dot_path.c_str());
                return 4;
            }
        }
        rtc_free_str(dot);
    }
    if (components) {
        char* csv = nullptr;
        if (rtc_status st = rtc_graph_components_csv(h.g, &csv)) return fail(st);
        std::printf("%s", csv);
        rtc_free_str(csv);
    }
    if (dot_path.empty() && !components)
        std::printf("nodes=%zu edges=%zu self_loops=%zu components=%zu\n",
                    rtc_graph_node_count(h.g), rtc_graph_edge_count(h.g),
                    rtc_graph_self_loop_count(h.g), rtc_graph_component_count(h.g));
    return 0;
}

int cmd_plotdata(int64_t n_max, int threads) {
    PipelineHandle h;
    if (rtc_status st = rtc_pipeline_set_threads(h.p, threads)) return fail(st);
    std::vector<int64_t> half(static_cast<size_t>(n_max));
    if (rtc_status st = rtc_pipeline_sequence(h.p, n_max, half.data(), nullptr)) return fail(st);
    std::printf("n,a103158,ratio\n");
    for (int64_t n = 1; n <= n_max; ++n) {
        // the one float in the program, computed from exact integers last
        const double ratio = std::log(static_cast<double>(half[n - 1])) /
                             std::log(static_cast<double>(n) + 1.0);
        std::printf("%" PRId64 ",%" PRId64 ",%.6f\n", n, half[n - 1], ratio);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular tetrahedra with vertices in {0..n}^3: exact counts and structure"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "counting threads (0 = machine parallelism)")
        ->check(CLI::NonNegativeNumber);

    int64_t seq_n = 0;
    std::string seq_format = "csv", seq_cache;
    bool seq_total = false;
    auto* seq = app.add_subcommand("sequence", "count rows for n = 1..N");
    seq->add_option("--max-n", seq_n, "largest cube size")->required();
    seq->add_option("--format", seq_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    seq->add_option("--cache", seq_cache, "irreducible-record cache file (read + extend)");
    seq->add_flag("--emit-total", seq_total, "also print the raw doubled total");

    int64_t sol_d = 0;
    std::string sol_format = "csv";
    auto* sol = app.add_subcommand("solutions", "primitive solutions of a^2+b^2+c^2 = 3d^2");
    sol->add_option("--d", sol_d, "odd parameter d")->required();
    sol->add_option("--format", sol_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    int64_t ora_n = 0;
    std::string ora_method = "triangle";
    bool ora_force = false;
    auto* ora = app.add_subcommand("oracle", "brute-force counts for n = 1..N");
    ora->add_option("--max-n", ora_n, "largest cube size")->required();
    ora->add_option("--method", ora_method, "quadruple or triangle")
        ->check(CLI::IsMember({"quadruple", "triangle"}));
    ora->add_flag("--force", ora_force, "lift the triangle oracle guard");

    int64_t gr_d = 0;
    std::string gr_dot;
    bool gr_comp = false;
    auto* gr = app.add_subcommand("graph", "relation graph on primitive solutions");
    gr->add_option("--max-d", gr_d, "largest d")->required();
    gr->add_option("--dot", gr_dot, "write DOT here ('-' for stdout)");
    gr->add_flag("--components", gr_comp, "print the component table");

    int64_t plot_n = 0;
    auto* plot = app.add_subcommand("plotdata", "growth-exponent rows ln a(n) / ln(n+1)");
    plot->add_option("--max-n", plot_n, "largest cube size")->required();

    // let the global --threads flag appear after the subcommand too
    for (CLI::App* s : {seq, sol, ora, gr, plot}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems exit 2; --help exits 0
    }

    if (seq->parsed()) return cmd_sequence(seq_n, seq_format, seq_cache, seq_total, threads);
    if (sol->parsed()) return cmd_solutions(sol_d, sol_format);
    if (ora->parsed()) return cmd_oracle(ora_n, ora_method, ora_force);
    if (gr->parsed()) return cmd_graph(gr_d, gr_dot, gr_comp);
    if (plot->parsed()) return cmd_plotdata(plot_n, threads);
    return 2;
}
