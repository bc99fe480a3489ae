// arcdiag command-line front end. Talks to the library only through the C API.

#include <arcdiag/arcdiag.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

constexpr const char* kSynopsis =
    "usage: arcdiag <count|enumerate|triangle|bijection|verify|ratios|export> [options]"
    " (arcdiag <verb> --help for details)";

// Thrown after a failed C call; carries the exit code to use.
struct Failure {
  int exit_code;
};

int exit_code_for(arcdiag_status status) {
  switch (status) {
    case ARCDIAG_OK: return kExitOk;
    case ARCDIAG_IO_ERROR:
    case ARCDIAG_PRECISION_ERROR:
    case ARCDIAG_INTERNAL_ERROR: return kExitRuntime;
    default: return kExitUsage;
  }
}

void check(arcdiag_status status) {
  if (status == ARCDIAG_OK) return;
  std::cerr << "arcdiag: " << arcdiag_status_name(status) << ": " << arcdiag_last_error() << '\n';
  if (status == ARCDIAG_RESOURCE_LIMIT) {
    std::cerr << "hint: use --method recurrence for large n\n";
  }
  if (exit_code_for(status) == kExitUsage) std::cerr << kSynopsis << '\n';
  throw Failure{exit_code_for(status)};
}

// Owns a char* returned by the C API.
class OwnedString {
 public:
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { arcdiag_string_free(ptr_); }

  char** out() { return &ptr_; }
  std::string str() const { return ptr_ ? std::string(ptr_) : std::string(); }

 private:
  char* ptr_ = nullptr;
};

class Diagram {
 public:
  explicit Diagram(const std::string& text) { check(arcdiag_diagram_parse(text.c_str(), &ptr_)); }
  Diagram() = default;
  Diagram(const Diagram&) = delete;
  Diagram& operator=(const Diagram&) = delete;
  ~Diagram() { arcdiag_diagram_free(ptr_); }

  const arcdiag_diagram* get() const { return ptr_; }
  arcdiag_diagram** out() { return &ptr_; }

 private:
  arcdiag_diagram* ptr_ = nullptr;
};

void print_line(const std::string& s) { std::cout << s << '\n'; }

// Prints text that already ends in a newline.
void print_block(const std::string& s) { std::cout << s; }

std::string diagram_text(const arcdiag_diagram* d) {
  OwnedString s;
  check(arcdiag_diagram_format(d, s.out()));
  return s.str();
}

arcdiag_family family_from(const std::string& name) {
  arcdiag_family f{};
  check(arcdiag_parse_family(name.c_str(), &f));
  return f;
}

struct CountOptions {
  std::string family;
  int n = 0;
  bool symmetric = false;
  std::string method = "recurrence";
  std::string statistic;
  int cap = 0;
};

struct EnumerateOptions {
  std::string family;
  int n = 0;
  bool symmetric = false;
  std::string format = "arcs";
  long long limit = -1;
  int cap = 0;
};

struct TriangleOptions {
  std::string which;
  int rows = 7;
  std::string format = "csv";
};

struct BijectionOptions {
  std::string diagram;
  std::string path;
  int n = 0;
};

struct VerifyOptions {
  std::string check = "all";
  int max = 0;
  bool json = false;
};

struct RatioOptions {
  std::string kind = "table";
  int max = 20;
  int min = 5;
  int digits = 10;
  int from = 20;
  int precision = 30;
  std::string format = "text";
};

struct ExportOptions {
  std::string seq;
  int max = 0;
  std::string out;
};

int run_count(const CountOptions& o) {
  const arcdiag_family f = family_from(o.family);
  if (!o.statistic.empty()) {
    if (o.method != "oracle") {
      std::cerr << "arcdiag: --statistic needs --method oracle\n" << kSynopsis << '\n';
      return kExitUsage;
    }
    const arcdiag_statistic stat =
        o.statistic == "isolated" ? ARCDIAG_STAT_ISOLATED_NODES : ARCDIAG_STAT_COMPONENTS_MINUS_ONE;
    OwnedString json;
    check(arcdiag_count_by_statistic(f, o.n, o.symmetric, stat, o.cap, json.out()));
    const auto histogram = nlohmann::ordered_json::parse(json.str());
    for (const auto& [k, v] : histogram.items()) {
      std::cout << k << ' ' << v.get<std::string>() << '\n';
    }
    return kExitOk;
  }
  const arcdiag_method method =
      o.method == "oracle" ? ARCDIAG_METHOD_ORACLE : ARCDIAG_METHOD_RECURRENCE;
  OwnedString value;
  check(arcdiag_count(f, o.n, o.symmetric, method, o.cap, value.out()));
  print_line(value.str());
  return kExitOk;
}

struct EnumerateState {
  const EnumerateOptions* options;
  long long printed = 0;
  arcdiag_status inner = ARCDIAG_OK;
};

int on_diagram(const arcdiag_diagram* d, void* user) {
  auto* state = static_cast<EnumerateState*>(user);
  OwnedString s;
  const arcdiag_status st = state->options->format == "blocks" ? arcdiag_diagram_blocks(d, s.out())
                                                               : arcdiag_diagram_format(d, s.out());
  if (st != ARCDIAG_OK) {
    state->inner = st;
    return 0;
  }
  std::cout << s.str() << '\n';
  ++state->printed;
  return state->options->limit < 0 || state->printed < state->options->limit;
}

int run_enumerate(const EnumerateOptions& o) {
  EnumerateState state{&o};
  if (o.limit == 0) return kExitOk;
  check(arcdiag_enumerate(family_from(o.family), o.n, o.symmetric, o.cap, on_diagram, &state));
  check(state.inner);
  return kExitOk;
}

int run_triangle(const TriangleOptions& o) {
  OwnedString out;
  check(arcdiag_triangle_render(o.which.c_str(), o.rows, o.format.c_str(), out.out()));
  print_block(out.str());
  return kExitOk;
}

int run_verify(const VerifyOptions& o) {
  OwnedString out;
  int passed = 0;
  check(arcdiag_verify(o.check.c_str(), o.max, o.json, out.out(), &passed));
  print_block(out.str());
  return passed ? kExitOk : kExitVerifyFailed;
}

int run_ratios(const RatioOptions& o) {
  OwnedString out;
  if (o.kind == "table") {
    check(arcdiag_ratio_table(o.max, o.digits, o.min, o.format.c_str(), out.out()));
    print_block(out.str());
    return kExitOk;
  }
  if (o.format == "csv") {
    std::cerr << "arcdiag: --format csv is only available for --kind table\n" << kSynopsis << '\n';
    return kExitUsage;
  }
  const int json = o.format == "json";
  if (o.kind == "asymptotics") {
    check(arcdiag_asymptotic_report(o.max, o.precision, json, out.out()));
    print_block(out.str());
    return kExitOk;
  }
  int passed = 0;
  check(arcdiag_decay_check(o.max, o.from, json, out.out(), &passed));
  print_block(out.str());
  return passed ? kExitOk : kExitVerifyFailed;
}

int run_export(const ExportOptions& o) {
  if (o.out.empty()) {
    OwnedString text;
    check(arcdiag_bfile_text(o.seq.c_str(), o.max, text.out()));
    print_block(text.str());
    return kExitOk;
  }
  check(arcdiag_bfile_write(o.seq.c_str(), o.max, o.out.c_str()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting, enumeration and bijections for symmetric arc diagrams", "arcdiag"};
  app.set_version_flag("--version", std::string(arcdiag_version()));
  app.require_subcommand(1);
  app.fallthrough(false);

  const auto families = CLI::IsMember({"nc-matching", "matching", "motzkin", "bell"});

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count diagrams of a family on n nodes");
  count_cmd->add_option("--family", count.family, "nc-matching, matching, motzkin or bell")
      ->required()
      ->check(families);
  count_cmd->add_option("--n", count.n, "Number of nodes")->required();
  count_cmd->add_flag("--symmetric", count.symmetric, "Only symmetric diagrams");
  count_cmd->add_option("--method", count.method, "recurrence (default) or oracle")
      ->check(CLI::IsMember({"recurrence", "oracle"}));
  count_cmd->add_option("--statistic", count.statistic,
                        "Histogram by isolated nodes or components - 1 (oracle only)")
      ->check(CLI::IsMember({"isolated", "components"}));
  count_cmd->add_option("--cap", count.cap, "Enumeration cap (default: ARCDIAG_ENUM_CAP or built-in)")
      ->check(CLI::NonNegativeNumber);

  EnumerateOptions enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "List every diagram of a family on n nodes");
  enum_cmd->add_option("--family", enumerate.family)->required()->check(families);
  enum_cmd->add_option("--n", enumerate.n, "Number of nodes")->required();
  enum_cmd->add_flag("--symmetric", enumerate.symmetric, "Only symmetric diagrams");
  enum_cmd->add_option("--format", enumerate.format, "arcs (n;l-r,...) or blocks")
      ->check(CLI::IsMember({"arcs", "blocks"}));
  enum_cmd->add_option("--limit", enumerate.limit, "Stop after this many diagrams")
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--cap", enumerate.cap, "Enumeration cap")->check(CLI::NonNegativeNumber);

  TriangleOptions triangle;
  auto* tri_cmd = app.add_subcommand("triangle", "Print the P, Q or A triangle");
  tri_cmd->add_option("--which", triangle.which, "P, Q or A")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "A"}));
  tri_cmd->add_option("--rows", triangle.rows, "Number of rows")->check(CLI::PositiveNumber);
  tri_cmd->add_option("--format", triangle.format, "csv, tsv or json")
      ->check(CLI::IsMember({"csv", "tsv", "json"}));

  BijectionOptions bij;
  auto* bij_cmd = app.add_subcommand("bijection", "Apply one of the bijections");
  bij_cmd->require_subcommand(1);
  auto add_diagram_op = [&](const char* name, const char* help) {
    auto* sub = bij_cmd->add_subcommand(name, help);
    sub->add_option("--diagram", bij.diagram, "Diagram as n;l-r,...")->required();
    return sub;
  };
  auto* phi_cmd = bij_cmd->add_subcommand("phi", "Motzkin path -> Motzkin diagram");
  phi_cmd->add_option("--path", bij.path, "Steps over U, H, D")->required();
  auto* tau_cmd = bij_cmd->add_subcommand("tau", "Motzkin prefix -> digits (U=2, H=1, D=0)");
  tau_cmd->add_option("--path", bij.path, "Steps over U, H, D")->required();
  auto* phi_inv_cmd = add_diagram_op("phi-inverse", "Motzkin diagram -> Motzkin path");
  auto* phi_left_cmd = add_diagram_op("phi-left", "Symmetric odd Motzkin diagram -> left half path");
  auto* psi_cmd = add_diagram_op("psi", "Symmetric Motzkin diagram on 2n-1 nodes -> word in T_n");
  auto* psi_case_cmd = add_diagram_op("psi-case", "Which case of psi applies");
  auto* merge_cmd = add_diagram_op("merge", "Symmetric Motzkin diagram on 2n nodes -> 2n-1 nodes");
  add_diagram_op("split", "Symmetric Motzkin diagram on 2n-1 nodes -> 2n nodes");
  auto* ternary_cmd = bij_cmd->add_subcommand("ternary", "List T_n");
  ternary_cmd->add_option("--n", bij.n, "Word length")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd
      ->add_option("--check", verify.check,
                   "tables, oracle, roundtrip, qconjecture, deutsch, aformula or all")
      ->check(CLI::IsMember(
          {"tables", "oracle", "roundtrip", "qconjecture", "deutsch", "aformula", "all"}));
  verify_cmd->add_option("--max", verify.max, "Upper bound (default depends on the check)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");

  RatioOptions ratios;
  auto* ratio_cmd = app.add_subcommand("ratios", "Symmetric/total ratios and asymptotics");
  ratio_cmd->add_option("--kind", ratios.kind, "table, asymptotics or decay")
      ->check(CLI::IsMember({"table", "asymptotics", "decay"}));
  ratio_cmd->add_option("--max", ratios.max, "Largest n");
  ratio_cmd->add_option("--min", ratios.min, "Smallest row label (table)");
  ratio_cmd->add_option("--digits", ratios.digits, "Decimal places (table)");
  ratio_cmd->add_option("--from", ratios.from, "First n of the bound check (decay)");
  ratio_cmd->add_option("--precision", ratios.precision, "MPFR decimal digits (asymptotics)");
  ratio_cmd->add_option("--format", ratios.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Write a sequence as an OEIS b-file");
  export_cmd->add_option("--seq", exp.seq, "S, R, P, Q, M, L, A005773, A, BELL or FIB")
      ->required();
  export_cmd->add_option("--max", exp.max, "Last index")->required();
  export_cmd->add_option("--out", exp.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "arcdiag: error: " << e.what() << '\n' << kSynopsis << '\n';
    return kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*enum_cmd) return run_enumerate(enumerate);
    if (*tri_cmd) return run_triangle(triangle);
    if (*verify_cmd) return run_verify(verify);
    if (*ratio_cmd) return run_ratios(ratios);
    if (*export_cmd) return run_export(exp);
    if (*bij_cmd) {
      OwnedString out;
      if (*phi_cmd) {
        Diagram d;
        check(arcdiag_phi(bij.path.c_str(), d.out()));
        print_line(diagram_text(d.get()));
      } else if (*tau_cmd) {
        check(arcdiag_tau(bij.path.c_str(), out.out()));
        print_line(out.str());
      } else if (*ternary_cmd) {
        check(arcdiag_ternary_words(bij.n, out.out()));
        print_block(out.str());
      } else {
        const Diagram in(bij.diagram);
        if (*phi_inv_cmd) {
          check(arcdiag_phi_inverse(in.get(), out.out()));
          print_line(out.str());
        } else if (*phi_left_cmd) {
          check(arcdiag_phi_left(in.get(), out.out()));
          print_line(out.str());
        } else if (*psi_cmd) {
          check(arcdiag_psi(in.get(), out.out()));
          print_line(out.str());
        } else if (*psi_case_cmd) {
          check(arcdiag_psi_case(in.get(), out.out()));
          print_line(out.str());
        } else {
          Diagram result;
          check(*merge_cmd ? arcdiag_merge_even(in.get(), result.out())
                           : arcdiag_split_odd(in.get(), result.out()));
          print_line(diagram_text(result.get()));
        }
      }
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cout.flush();
    return f.exit_code;
  }
  std::cerr << kSynopsis << '\n';
  return kExitUsage;
}
