#include "arcdiag/arcdiag.h"

#include "analysis.hpp"
#include "bijections.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "recurrences.hpp"
#include "verify.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct arcdiag_diagram {
  arcdiag::ArcDiagram value;
};

namespace {

using arcdiag::ErrorCode;

thread_local std::string g_last_error;

arcdiag_status fail(arcdiag_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
arcdiag_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return ARCDIAG_OK;
  } catch (const arcdiag::Error& e) {
    return fail(static_cast<arcdiag_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARCDIAG_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARCDIAG_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  } catch (...) {
    return fail(ARCDIAG_INTERNAL_ERROR, "internal error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw arcdiag::Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  require(out != nullptr, "output pointer is null");
  *out = dup_string(s);
}

const arcdiag::ArcDiagram& deref(const arcdiag_diagram* d) {
  require(d != nullptr, "diagram handle is null");
  return d->value;
}

void put_diagram(arcdiag_diagram** out, arcdiag::ArcDiagram value) {
  require(out != nullptr, "output pointer is null");
  *out = new arcdiag_diagram{std::move(value)};
}

arcdiag::Family to_family(arcdiag_family f) {
  switch (f) {
    case ARCDIAG_NC_MATCHING: return arcdiag::Family::NcMatching;
    case ARCDIAG_MATCHING: return arcdiag::Family::Matching;
    case ARCDIAG_MOTZKIN: return arcdiag::Family::Motzkin;
    case ARCDIAG_BELL: return arcdiag::Family::Bell;
  }
  throw arcdiag::Error(ErrorCode::InvalidArgument, "unknown family value");
}

std::string_view text_arg(const char* s, const char* what) {
  require(s != nullptr, what);
  return s;
}

arcdiag::EnumerationCaps caps_from(int cap) {
  arcdiag::EnumerationCaps caps;
  if (cap > 0) {
    caps.crossing = caps.noncrossing = cap;
    return caps;
  }
  if (const char* env = std::getenv("ARCDIAG_ENUM_CAP"); env != nullptr && *env != '\0') {
    int value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < 0) {
      throw arcdiag::Error(ErrorCode::InvalidArgument,
                           std::string("ARCDIAG_ENUM_CAP is not a nonnegative integer: ") + env);
    }
    caps.crossing = caps.noncrossing = value;
  }
  return caps;
}

}  // namespace

extern "C" {

const char* arcdiag_version(void) { return "1.0.0"; }

const char* arcdiag_last_error(void) { return g_last_error.c_str(); }

const char* arcdiag_status_name(arcdiag_status status) {
  switch (status) {
    case ARCDIAG_OK: return "ok";
    case ARCDIAG_INVALID_ARGUMENT: return "invalid argument";
    case ARCDIAG_PARSE_ERROR: return "parse error";
    case ARCDIAG_OUT_OF_RANGE: return "out of range";
    case ARCDIAG_RESOURCE_LIMIT: return "resource limit";
    case ARCDIAG_INVALID_DIAGRAM: return "invalid diagram";
    case ARCDIAG_WRONG_FAMILY: return "wrong family";
    case ARCDIAG_WRONG_PARITY: return "wrong parity";
    case ARCDIAG_NOT_SYMMETRIC: return "not symmetric";
    case ARCDIAG_IO_ERROR: return "i/o error";
    case ARCDIAG_PRECISION_ERROR: return "precision error";
    case ARCDIAG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void arcdiag_string_free(char* text) { std::free(text); }

// ---- diagrams ----------------------------------------------------------------

arcdiag_status arcdiag_diagram_parse(const char* text, arcdiag_diagram** out) {
  return guarded([&] { put_diagram(out, arcdiag::parse_diagram(text_arg(text, "text is null"))); });
}

arcdiag_status arcdiag_diagram_create(int node_count, const int* lefts, const int* rights,
                                      size_t arc_count, arcdiag_diagram** out) {
  return guarded([&] {
    require(arc_count == 0 || (lefts != nullptr && rights != nullptr), "arc arrays are null");
    std::vector<arcdiag::Arc> arcs;
    arcs.reserve(arc_count);
    for (size_t i = 0; i < arc_count; ++i) arcs.push_back({lefts[i], rights[i]});
    put_diagram(out, arcdiag::ArcDiagram(node_count, std::move(arcs)));
  });
}

arcdiag_diagram* arcdiag_diagram_clone(const arcdiag_diagram* diagram) {
  if (diagram == nullptr) return nullptr;
  try {
    return new arcdiag_diagram{diagram->value};
  } catch (...) {
    g_last_error = "out of memory";
    return nullptr;
  }
}

void arcdiag_diagram_free(arcdiag_diagram* diagram) { delete diagram; }

int arcdiag_diagram_node_count(const arcdiag_diagram* diagram) {
  return diagram == nullptr ? -1 : diagram->value.node_count();
}

size_t arcdiag_diagram_arc_count(const arcdiag_diagram* diagram) {
  return diagram == nullptr ? 0 : diagram->value.arc_count();
}

arcdiag_status arcdiag_diagram_arc(const arcdiag_diagram* diagram, size_t index, int* left,
                                   int* right) {
  return guarded([&] {
    const auto arcs = deref(diagram).arcs();
    if (index >= arcs.size()) {
      throw arcdiag::Error(ErrorCode::OutOfRange, "arc index " + std::to_string(index) +
                                                      " out of range");
    }
    require(left != nullptr && right != nullptr, "output pointer is null");
    *left = arcs[index].left;
    *right = arcs[index].right;
  });
}

arcdiag_status arcdiag_diagram_format(const arcdiag_diagram* diagram, char** out) {
  return guarded([&] { put_string(out, arcdiag::format_diagram(deref(diagram))); });
}

arcdiag_status arcdiag_diagram_blocks(const arcdiag_diagram* diagram, char** out) {
  return guarded(
      [&] { put_string(out, arcdiag::format_blocks(arcdiag::components(deref(diagram)))); });
}

arcdiag_status arcdiag_diagram_is_valid(const arcdiag_diagram* diagram, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::validate(deref(diagram)) ? 1 : 0;
  });
}

arcdiag_status arcdiag_diagram_in_family(const arcdiag_diagram* diagram, arcdiag_family family,
                                         int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::in_family(deref(diagram), to_family(family)) ? 1 : 0;
  });
}

arcdiag_status arcdiag_diagram_is_symmetric(const arcdiag_diagram* diagram, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::is_symmetric(deref(diagram)) ? 1 : 0;
  });
}

arcdiag_status arcdiag_diagram_isolated_count(const arcdiag_diagram* diagram, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::isolated_count(deref(diagram));
  });
}

arcdiag_status arcdiag_diagram_component_count(const arcdiag_diagram* diagram, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::component_count(deref(diagram));
  });
}

arcdiag_status arcdiag_diagram_reverse_complement(const arcdiag_diagram* diagram,
                                                  arcdiag_diagram** out) {
  return guarded([&] { put_diagram(out, arcdiag::reverse_complement(deref(diagram))); });
}

arcdiag_status arcdiag_parse_family(const char* name, arcdiag_family* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const arcdiag::Family f = arcdiag::parse_family(text_arg(name, "family name is null"));
    *out = static_cast<arcdiag_family>(static_cast<int>(f));
  });
}

// ---- enumeration and counting -------------------------------------------------

arcdiag_status arcdiag_default_cap(arcdiag_family family, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = caps_from(0).cap_for(to_family(family));
  });
}

arcdiag_status arcdiag_enumerate(arcdiag_family family, int n, int symmetric_only, int cap,
                                 arcdiag_diagram_callback callback, void* user_data) {
  return guarded([&] {
    require(callback != nullptr, "callback is null");
    arcdiag_diagram handle;
    arcdiag::enumerate(
        to_family(family), n, symmetric_only != 0,
        [&](const arcdiag::ArcDiagram& d) {
          handle.value = d;
          return callback(&handle, user_data) != 0;
        },
        caps_from(cap));
  });
}

arcdiag_status arcdiag_count(arcdiag_family family, int n, int symmetric_only,
                             arcdiag_method method, int cap, char** out_decimal) {
  return guarded([&] {
    const arcdiag::Family f = to_family(family);
    if (n < 0) throw arcdiag::Error(ErrorCode::InvalidArgument, "n must be nonnegative");
    arcdiag::BigCount value;
    if (method == ARCDIAG_METHOD_RECURRENCE) {
      value = arcdiag::count_by_recurrence(f, n, symmetric_only != 0);
    } else if (method == ARCDIAG_METHOD_ORACLE) {
      value = arcdiag::count(f, n, symmetric_only != 0, caps_from(cap));
    } else {
      throw arcdiag::Error(ErrorCode::InvalidArgument, "unknown counting method");
    }
    put_string(out_decimal, arcdiag::to_decimal(value));
  });
}

arcdiag_status arcdiag_count_by_statistic(arcdiag_family family, int n, int symmetric_only,
                                          arcdiag_statistic statistic, int cap, char** out_json) {
  return guarded([&] {
    arcdiag::Statistic stat;
    switch (statistic) {
      case ARCDIAG_STAT_ISOLATED_NODES: stat = arcdiag::Statistic::IsolatedNodes; break;
      case ARCDIAG_STAT_COMPONENTS_MINUS_ONE: stat = arcdiag::Statistic::ComponentsMinusOne; break;
      default: throw arcdiag::Error(ErrorCode::InvalidArgument, "unknown statistic");
    }
    const auto histogram =
        arcdiag::count_by_statistic(to_family(family), n, symmetric_only != 0, stat, caps_from(cap));
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [k, v] : histogram) doc[std::to_string(k)] = arcdiag::to_decimal(v);
    put_string(out_json, doc.dump());
  });
}

// ---- sequences and triangles -----------------------------------------------------

arcdiag_status arcdiag_sequence_offset(const char* name, int* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = arcdiag::sequence_offset(arcdiag::parse_sequence_id(text_arg(name, "name is null")));
  });
}

arcdiag_status arcdiag_sequence_label(const char* name, char** out) {
  return guarded([&] {
    const auto id = arcdiag::parse_sequence_id(text_arg(name, "name is null"));
    put_string(out, std::string(arcdiag::sequence_label(id)));
  });
}

arcdiag_status arcdiag_sequence_value(const char* name, int n, char** out_decimal) {
  return guarded([&] {
    const auto id = arcdiag::parse_sequence_id(text_arg(name, "name is null"));
    put_string(out_decimal, arcdiag::to_decimal(arcdiag::seq_value(id, n)));
  });
}

arcdiag_status arcdiag_bfile_text(const char* name, int max_n, char** out) {
  return guarded([&] {
    const auto id = arcdiag::parse_sequence_id(text_arg(name, "name is null"));
    put_string(out, arcdiag::render_bfile(id, max_n));
  });
}

arcdiag_status arcdiag_bfile_write(const char* name, int max_n, const char* path) {
  return guarded([&] {
    const auto id = arcdiag::parse_sequence_id(text_arg(name, "name is null"));
    arcdiag::write_bfile(id, max_n, std::string(text_arg(path, "path is null")));
  });
}

arcdiag_status arcdiag_triangle_render(const char* which, int rows, const char* format,
                                       char** out) {
  return guarded([&] {
    const auto kind = arcdiag::parse_triangle_kind(text_arg(which, "triangle name is null"));
    const auto fmt = arcdiag::parse_table_format(text_arg(format, "format is null"));
    if (rows < 1) throw arcdiag::Error(ErrorCode::OutOfRange, "rows must be >= 1");
    const arcdiag::TriangleTable table = kind == arcdiag::TriangleKind::P ? arcdiag::triangle_P(rows)
                                         : kind == arcdiag::TriangleKind::Q
                                             ? arcdiag::triangle_Q(rows)
                                             : arcdiag::triangle_A(rows);
    put_string(out, arcdiag::render_triangle(table, fmt));
  });
}

// ---- bijections -------------------------------------------------------------------

arcdiag_status arcdiag_phi(const char* steps, arcdiag_diagram** out) {
  return guarded([&] {
    const arcdiag::MotzkinPath path(arcdiag::parse_steps(text_arg(steps, "steps are null")));
    put_diagram(out, arcdiag::phi(path));
  });
}

arcdiag_status arcdiag_phi_inverse(const arcdiag_diagram* diagram, char** out_steps) {
  return guarded([&] {
    put_string(out_steps, arcdiag::format_steps(arcdiag::phi_inverse(deref(diagram)).steps()));
  });
}

arcdiag_status arcdiag_phi_left(const arcdiag_diagram* diagram, char** out_steps) {
  return guarded([&] {
    put_string(out_steps, arcdiag::format_steps(arcdiag::phi_left(deref(diagram)).steps()));
  });
}

arcdiag_status arcdiag_tau(const char* steps, char** out_word) {
  return guarded([&] {
    const arcdiag::MotzkinPrefix prefix(arcdiag::parse_steps(text_arg(steps, "steps are null")));
    put_string(out_word, arcdiag::tau(prefix.steps()).str());
  });
}

arcdiag_status arcdiag_psi(const arcdiag_diagram* diagram, char** out_word) {
  return guarded([&] { put_string(out_word, arcdiag::psi(deref(diagram)).str()); });
}

arcdiag_status arcdiag_psi_case(const arcdiag_diagram* diagram, char** out) {
  return guarded([&] {
    const auto c = arcdiag::classify_psi_case(arcdiag::phi_left(deref(diagram)));
    put_string(out, std::string(arcdiag::psi_case_name(c)));
  });
}

arcdiag_status arcdiag_merge_even(const arcdiag_diagram* diagram, arcdiag_diagram** out) {
  return guarded([&] { put_diagram(out, arcdiag::merge_even(deref(diagram))); });
}

arcdiag_status arcdiag_split_odd(const arcdiag_diagram* diagram, arcdiag_diagram** out) {
  return guarded([&] { put_diagram(out, arcdiag::split_odd(deref(diagram))); });
}

arcdiag_status arcdiag_ternary_words(int n, char** out) {
  return guarded([&] {
    std::string text;
    for (const auto& w : arcdiag::enumerate_ternary(n)) text += w.str() + "\n";
    put_string(out, text);
  });
}

// ---- analysis and verification ------------------------------------------------------

arcdiag_status arcdiag_ratio_table(int max_n, int digits, int min_n, const char* format,
                                   char** out) {
  return guarded([&] {
    const std::string_view fmt = text_arg(format, "format is null");
    if (fmt != "csv" && fmt != "text" && fmt != "json") {
      throw arcdiag::Error(ErrorCode::InvalidArgument,
                           "unknown ratio format '" + std::string(fmt) + "' (csv, text, json)");
    }
    const auto rows = arcdiag::ratio_table(max_n, digits, min_n);
    put_string(out, fmt == "csv"    ? arcdiag::render_ratio_csv(rows)
                    : fmt == "text" ? arcdiag::render_ratio_text(rows)
                                    : arcdiag::render_ratio_json(rows));
  });
}

arcdiag_status arcdiag_asymptotic_report(int max_n, int precision_digits, int json, char** out) {
  return guarded([&] {
    const auto rows = arcdiag::asymptotic_report(max_n, precision_digits);
    put_string(out, json ? arcdiag::render_asymptotics_json(rows)
                         : arcdiag::render_asymptotics_text(rows));
  });
}

arcdiag_status arcdiag_asymptotic_estimate(int n, int precision_digits, double* c1_hat,
                                           double* c2_hat, double* m_hat) {
  return guarded([&] {
    require(c1_hat != nullptr && c2_hat != nullptr && m_hat != nullptr, "output pointer is null");
    const auto e = arcdiag::asymptotic_estimate(n, precision_digits);
    *c1_hat = e.c1_hat;
    *c2_hat = e.c2_hat;
    *m_hat = e.m_hat;
  });
}

arcdiag_status arcdiag_decay_check(int max_n, int from, int json, char** out, int* passed) {
  return guarded([&] {
    const auto report = arcdiag::decay_check(max_n, from);
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
    put_string(out, json ? arcdiag::render_decay_json(report) : arcdiag::render_decay_text(report));
  });
}

arcdiag_status arcdiag_verify(const char* scope, int max_n, int json, char** out, int* passed) {
  return guarded([&] {
    const auto s = arcdiag::parse_verify_scope(text_arg(scope, "scope is null"));
    const auto report =
        arcdiag::run_verify(s, max_n > 0 ? std::optional<int>(max_n) : std::nullopt);
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
    put_string(out, json ? arcdiag::render_verify_json(report) : arcdiag::render_verify_text(report));
  });
}

}  // extern "C"
