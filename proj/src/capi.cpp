// capi.cpp -- the C boundary.  Exceptions stop here and become status codes;
// a thread-local string keeps the message for rtc_last_error.

#include "rtcount.h"

#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "rtgraph.hpp"

struct rtc_pipeline {
    rtc::pipeline::Pipeline impl;
};

struct rtc_graph {
    rtc::rtgraph::RtGraph impl;
};

namespace {

thread_local std::string g_last_error;

rtc_status fail(rtc_status st, const std::string& what) {
    g_last_error = what;
    return st;
}

// Runs fn inside the exception-to-status firewall.
template <typename Fn>
rtc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return RTC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(RTC_ERR_INVALID, e.what());
    } catch (const rtc::GuardError& e) {
        return fail(RTC_ERR_GUARD, e.what());
    } catch (const rtc::CacheError& e) {
        return fail(RTC_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RTC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RTC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RTC_ERR_INTERNAL, "unknown error");
    }
}

rtc_status require(bool ok, const char* what) {
    return ok ? RTC_OK : fail(RTC_ERR_INVALID, what);
}

char* dup_string(const std::string& s) {
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

}  // namespace

extern "C" {

const char* rtc_status_name(rtc_status st) {
    switch (st) {
        case RTC_OK: return "ok";
        case RTC_ERR_INVALID: return "invalid argument";
        case RTC_ERR_GUARD: return "guard exceeded";
        case RTC_ERR_IO: return "io/cache error";
        case RTC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* rtc_last_error(void) { return g_last_error.c_str(); }

rtc_status rtc_legendre_minus3(int64_t p, int* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::legendre_minus3(p); });
}

rtc_status rtc_lambda_count(int64_t d, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::lambda_count(d); });
}

rtc_status rtc_hs_total_count(int64_t d, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::hs_total_count(d); });
}

rtc_status rtc_gamma2(int64_t d, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::gamma2(d); });
}

rtc_status rtc_gamma3(int64_t d, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::gamma3(d); });
}

rtc_status rtc_pi_epsilon(int64_t d, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::numtheory::pi_epsilon(d); });
}

rtc_status rtc_solutions_3d2(int64_t d, int64_t** out, size_t* count) {
    if (rtc_status st = require(out && count, "out and count must not be null")) return st;
    return guarded([&] {
        const auto sols = rtc::numtheory::three_squares_primitive(d);
        *count = sols.size();
        if (sols.empty()) {
            *out = nullptr;
            return;
        }
        int64_t* buf = new int64_t[sols.size() * 4];
        for (size_t i = 0; i < sols.size(); ++i) {
            buf[4 * i + 0] = sols[i].a;
            buf[4 * i + 1] = sols[i].b;
            buf[4 * i + 2] = sols[i].c;
            buf[4 * i + 3] = sols[i].d;
        }
        *out = buf;
    });
}

void rtc_free_i64(int64_t* p) { delete[] p; }

rtc_status rtc_solutions_connected(const int64_t x[4], const int64_t y[4], int* out) {
    if (rtc_status st = require(x && y && out, "arguments must not be null")) return st;
    return guarded([&] {
        const rtc::numtheory::PrimitiveSolution sx{x[0], x[1], x[2], x[3]};
        const rtc::numtheory::PrimitiveSolution sy{y[0], y[1], y[2], y[3]};
        *out = rtc::rtgraph::are_connected(sx, sy) ? 1 : 0;
    });
}

rtc_status rtc_oracle_quadruple_count(int64_t n, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::oracle::quadruple_count(n); });
}

rtc_status rtc_oracle_triangle_count(int64_t n, int force, int64_t* out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] { *out = rtc::oracle::triangle_count(n, force != 0); });
}

rtc_pipeline* rtc_pipeline_new(void) { return new (std::nothrow) rtc_pipeline; }

void rtc_pipeline_free(rtc_pipeline* p) { delete p; }

rtc_status rtc_pipeline_set_threads(rtc_pipeline* p, int threads) {
    if (rtc_status st = require(p != nullptr, "pipeline must not be null")) return st;
    return guarded([&] {
        if (threads < 0) throw std::invalid_argument("threads must be >= 0");
        p->impl.set_threads(threads);
    });
}

rtc_status rtc_pipeline_load_cache(rtc_pipeline* p, const char* path) {
    if (rtc_status st = require(p && path, "pipeline and path must not be null")) return st;
    return guarded([&] { p->impl.load_cache(path); });
}

rtc_status rtc_pipeline_save_cache(rtc_pipeline* p, const char* path) {
    if (rtc_status st = require(p && path, "pipeline and path must not be null")) return st;
    return guarded([&] { p->impl.save_cache(path); });
}

rtc_status rtc_pipeline_sequence(rtc_pipeline* p, int64_t n_max, int64_t* half_out,
                                 int64_t* total_out) {
    if (rtc_status st = require(p && half_out, "pipeline and half_out must not be null"))
        return st;
    return guarded([&] {
        const auto rows = p->impl.sequence(n_max);
        for (size_t i = 0; i < rows.size(); ++i) {
            half_out[i] = rows[i].half;
            if (total_out) total_out[i] = rows[i].total;
        }
    });
}

rtc_status rtc_pipeline_record_count(const rtc_pipeline* p, size_t* out) {
    if (rtc_status st = require(p && out, "pipeline and out must not be null")) return st;
    return guarded([&] { *out = p->impl.records().size(); });
}

rtc_status rtc_graph_build(int64_t d_max, rtc_graph** out) {
    if (rtc_status st = require(out != nullptr, "out must not be null")) return st;
    return guarded([&] {
        auto g = new rtc_graph;
        try {
            g->impl = rtc::rtgraph::build_graph(d_max);
        } catch (...) {
            delete g;
            throw;
        }
        *out = g;
    });
}

void rtc_graph_free(rtc_graph* g) { delete g; }

size_t rtc_graph_node_count(const rtc_graph* g) { return g ? g->impl.nodes.size() : 0; }

size_t rtc_graph_edge_count(const rtc_graph* g) { return g ? g->impl.edges.size() : 0; }

size_t rtc_graph_self_loop_count(const rtc_graph* g) {
    if (!g) return 0;
    size_t loops = 0;
    for (const auto& e : g->impl.edges) loops += e.u == e.v;
    return loops;
}

size_t rtc_graph_component_count(const rtc_graph* g) {
    if (!g) return 0;
    return rtc::rtgraph::components(g->impl).size();
}

rtc_status rtc_graph_dot(const rtc_graph* g, char** out) {
    if (rtc_status st = require(g && out, "graph and out must not be null")) return st;
    return guarded([&] { *out = dup_string(rtc::rtgraph::export_dot(g->impl)); });
}

rtc_status rtc_graph_components_csv(const rtc_graph* g, char** out) {
    if (rtc_status st = require(g && out, "graph and out must not be null")) return st;
    return guarded([&] { *out = dup_string(rtc::rtgraph::components_csv(g->impl)); });
}

void rtc_free_str(char* s) { delete[] s; }

}  // extern "C"
