#include "dc3col.h"

#include "dc/checks.hpp"
#include "dc/coloring.hpp"
#include "dc/dimacs.hpp"
#include "dc/generators.hpp"
#include "dc/recognition.hpp"
#include "dc/structure.hpp"

#include <cstring>
#include <new>
#include <string>

struct dc_graph {
    dc::Graph impl;
};

namespace {

thread_local std::string g_last_error;

dc_status status_from(dc::errc code) {
    switch (code) {
    case dc::errc::bad_argument: return DC_ERROR_ARGUMENT;
    case dc::errc::loop_edge: return DC_ERROR_LOOP_EDGE;
    case dc::errc::vertex_range: return DC_ERROR_VERTEX_RANGE;
    case dc::errc::parse: return DC_ERROR_PARSE;
    case dc::errc::too_large: return DC_ERROR_TOO_LARGE;
    case dc::errc::disconnected: return DC_ERROR_DISCONNECTED;
    case dc::errc::io: return DC_ERROR_IO;
    case dc::errc::verification_failed: return DC_ERROR_VERIFICATION;
    case dc::errc::no_compatible_tree: return DC_ERROR_NO_COMPATIBLE_TREE;
    case dc::errc::precondition: return DC_ERROR_PRECONDITION;
    }
    return DC_ERROR_INTERNAL;
}

dc_status fail(dc_status status, const char* msg) {
    g_last_error = msg;
    return status;
}

template <typename Fn>
dc_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const dc::Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DC_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DC_ERROR_INTERNAL;
    }
}

char* dup_text(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* dc_status_name(dc_status status) {
    switch (status) {
    case DC_OK: return "ok";
    case DC_ERROR_ARGUMENT: return "bad_argument";
    case DC_ERROR_LOOP_EDGE: return "loop_edge";
    case DC_ERROR_VERTEX_RANGE: return "vertex_range";
    case DC_ERROR_PARSE: return "parse_error";
    case DC_ERROR_TOO_LARGE: return "too_large";
    case DC_ERROR_DISCONNECTED: return "disconnected";
    case DC_ERROR_IO: return "io_error";
    case DC_ERROR_VERIFICATION: return "verification_failed";
    case DC_ERROR_NO_COMPATIBLE_TREE: return "no_compatible_tree";
    case DC_ERROR_PRECONDITION: return "precondition_violated";
    case DC_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* dc_last_error(void) { return g_last_error.c_str(); }

dc_status dc_graph_from_edges(int32_t n, const int32_t* endpoints, int64_t edge_count,
                              dc_graph** out) {
    if (!out || (edge_count > 0 && !endpoints) || edge_count < 0)
        return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::pair<dc::Vertex, dc::Vertex>> edges;
        edges.reserve(static_cast<size_t>(edge_count));
        for (int64_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new dc_graph{dc::from_edges(n, edges)};
        return DC_OK;
    });
}

dc_status dc_graph_parse_dimacs(const char* text, dc_graph** out) {
    if (!text || !out) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new dc_graph{dc::parse_dimacs(text)};
        return DC_OK;
    });
}

dc_status dc_graph_read_dimacs(const char* path, dc_graph** out) {
    if (!path || !out) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new dc_graph{dc::read_dimacs_file(path)};
        return DC_OK;
    });
}

dc_status dc_graph_write_dimacs(const dc_graph* g, const char* path) {
    if (!g || !path) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        dc::write_dimacs_file(g->impl, path);
        return DC_OK;
    });
}

dc_status dc_graph_format_dimacs(const dc_graph* g, char** out_text) {
    if (!g || !out_text) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        *out_text = dup_text(dc::write_dimacs(g->impl));
        return DC_OK;
    });
}

void dc_graph_free(dc_graph* g) { delete g; }

void dc_text_free(char* text) { delete[] text; }

int32_t dc_graph_vertex_count(const dc_graph* g) { return g ? g->impl.n : -1; }

int64_t dc_graph_edge_count(const dc_graph* g) { return g ? g->impl.m : -1; }

int dc_graph_has_edge(const dc_graph* g, int32_t u, int32_t v) {
    return g && g->impl.has_edge(u, v) ? 1 : 0;
}

int32_t dc_graph_degree(const dc_graph* g, int32_t v) {
    if (!g || v < 0 || v >= g->impl.n) return -1;
    return g->impl.degree(v);
}

dc_status dc_graph_neighbors(const dc_graph* g, int32_t v, int32_t* buf, int32_t buf_len,
                             int32_t* out_len) {
    if (!g || !out_len) return fail(DC_ERROR_ARGUMENT, "null argument");
    if (v < 0 || v >= g->impl.n) return fail(DC_ERROR_VERTEX_RANGE, "vertex out of range");
    const auto& nb = g->impl.adj[v];
    *out_len = static_cast<int32_t>(nb.size());
    if (nb.empty()) return DC_OK;
    if (!buf || buf_len < *out_len) return fail(DC_ERROR_ARGUMENT, "buffer too small");
    for (size_t i = 0; i < nb.size(); ++i) buf[i] = nb[i];
    return DC_OK;
}

int dc_graph_is_connected(const dc_graph* g) { return g && dc::is_connected(g->impl) ? 1 : 0; }

dc_status dc_find_mno(const dc_graph* g, int* found, int32_t* order, int32_t* witness) {
    if (!g || !found) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        auto mno = dc::find_mno(g->impl);
        *found = mno.has_value() ? 1 : 0;
        if (mno) {
            for (int i = 0; i < g->impl.n; ++i) {
                if (order) order[i] = mno->order[static_cast<size_t>(i)];
                if (witness) witness[i] = mno->witness[static_cast<size_t>(i)];
            }
        }
        return DC_OK;
    });
}

dc_status dc_blocks_locally_connected(const dc_graph* g, int* result) {
    if (!g || !result) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        *result = dc::blocks_locally_connected(g->impl) ? 1 : 0;
        return DC_OK;
    });
}

dc_status dc_is_locally_connected(const dc_graph* g, int* result, int32_t* witness_vertex) {
    if (!g || !result) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        auto lc = dc::is_locally_connected(g->impl);
        *result = lc.ok ? 1 : 0;
        if (!lc.ok && witness_vertex && lc.witness) *witness_vertex = *lc.witness;
        return DC_OK;
    });
}

dc_status dc_find_k4(const dc_graph* g, int* found, int32_t quad[4]) {
    if (!g || !found) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        auto k4 = dc::find_k4(g->impl);
        *found = k4.has_value() ? 1 : 0;
        if (k4 && quad)
            for (int i = 0; i < 4; ++i) quad[i] = (*k4)[static_cast<size_t>(i)];
        return DC_OK;
    });
}

dc_status dc_three_color(const dc_graph* g, int checked, dc_color_verdict* verdict,
                         int32_t* colors) {
    if (!g || !verdict) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        dc::ThreeColorResult res =
            checked ? dc::three_color_checked(g->impl) : dc::three_color(g->impl);
        switch (res.verdict) {
        case dc::ThreeColorVerdict::colored: *verdict = DC_COLORED; break;
        case dc::ThreeColorVerdict::not_three_colorable: *verdict = DC_NOT_THREE_COLORABLE; break;
        case dc::ThreeColorVerdict::not_applicable: *verdict = DC_NOT_APPLICABLE; break;
        }
        if (res.coloring && colors)
            for (int i = 0; i < g->impl.n; ++i) colors[i] = res.coloring->color[static_cast<size_t>(i)];
        return DC_OK;
    });
}

dc_status dc_two_color(const dc_graph* g, int* found, int32_t* colors) {
    if (!g || !found) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        auto res = dc::two_color(g->impl);
        *found = res.has_value() ? 1 : 0;
        if (res && colors)
            for (int i = 0; i < g->impl.n; ++i) colors[i] = res->color[static_cast<size_t>(i)];
        return DC_OK;
    });
}

int dc_validate_coloring(const dc_graph* g, const int32_t* colors, int32_t max_colors) {
    if (!g || !colors) return 0;
    dc::Coloring c;
    c.color.assign(colors, colors + g->impl.n);
    c = dc::make_coloring(std::move(c.color));
    return dc::validate_coloring(g->impl, c, max_colors) ? 1 : 0;
}

dc_status dc_generate(const char* family, int32_t n, double density, uint64_t seed,
                      dc_graph** out) {
    if (!family || !out) return fail(DC_ERROR_ARGUMENT, "null argument");
    auto fam = dc::family_from_name(family);
    if (!fam) return fail(DC_ERROR_ARGUMENT, "unknown family");
    return guarded([&] {
        dc::GenSpec spec;
        spec.n = n;
        spec.density = density;
        spec.seed = seed;
        spec.family = *fam;
        *out = new dc_graph{dc::generate(spec)};
        return DC_OK;
    });
}

dc_status dc_add_universal_vertex(const dc_graph* g, dc_graph** out) {
    if (!g || !out) return fail(DC_ERROR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new dc_graph{dc::add_universal_vertex(g->impl)};
        return DC_OK;
    });
}

dc_status dc_check_property(const dc_graph* g, const char* property, int* holds,
                            char** report_json) {
    if (!g || !property || !holds) return fail(DC_ERROR_ARGUMENT, "null argument");
    auto prop = dc::property_from_name(property);
    if (!prop) return fail(DC_ERROR_ARGUMENT, "unknown property");
    return guarded([&] {
        dc::CheckReport rep = dc::check_property(g->impl, *prop);
        *holds = rep.holds ? 1 : 0;
        if (report_json) *report_json = dup_text(rep.details.dump());
        return DC_OK;
    });
}

} // extern "C"
