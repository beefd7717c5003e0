#include "mvmlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "mvmlab/algebra_io.hpp"
#include "mvmlab/congruence.hpp"
#include "mvmlab/corpus.hpp"
#include "mvmlab/goodseq.hpp"
#include "mvmlab/mvm.hpp"
#include "mvmlab/search.hpp"
#include "mvmlab/structure.hpp"
#include "mvmlab/ulm_checks.hpp"

namespace mvmlab {

namespace {

/// Bad input that is not a parse error of a file (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<std::size_t, std::size_t> parse_sizes(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw UsageError("bad size range '" + text + "'; expected a..b");
    }
    return std::stoul(s);
  };
  const auto dots = text.find("..");
  std::size_t lo, hi;
  if (dots == std::string::npos) {
    lo = hi = number(text);
  } else {
    lo = number(text.substr(0, dots));
    hi = number(text.substr(dots + 2));
  }
  if (lo < 1 || lo > hi) throw UsageError("empty size range '" + text + "'");
  return {lo, hi};
}

std::vector<Element> parse_entries(const std::string& text) {
  std::vector<Element> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw UsageError("bad sequence entry '" + item + "'");
    }
    out.push_back(static_cast<Element>(std::stoul(item)));
  }
  return out;
}

MvmRef load_mvm(const std::string& path) {
  return share(require_mvm(load_algebra(path)));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int verdict_exit(const Report& r) { return r.passed() ? kExitPass : kExitFail; }

int cmd_check_axioms(const std::string& path, bool lemmas, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(path);
  bool all = true;
  for (const AxiomGroup& g : mvm_axioms()) {
    std::string detail;
    bool ok = true;
    for (const Equation& e : g.equations) {
      HoldsResult h = holds(a, e);
      if (!h) {
        ok = false;
        detail = e.to_string() + " fails at (";
        for (std::size_t i = 0; i < h.witness.size(); ++i) {
          if (i) detail += ", ";
          detail += e.var_names[i] + "=" + std::to_string(h.witness[i]);
        }
        detail += ")";
        break;
      }
    }
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << g.name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
  out << "A1..A7: " << (all ? "pass" : "fail") << "\n";
  if (all && lemmas) {
    Report r = lemma_suite(require_mvm(a));
    out << r.render();
    all = r.passed();
  }
  return all ? kExitPass : kExitFail;
}

int cmd_mv_check(const std::string& path, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(path);
  if (a.find_operation(sig::kNeg)) {
    MvCheck c = check_mv(a);
    if (!c.passed()) {
      out << "FAIL MV axioms: " << c.failure->describe() << "\n";
      return kExitFail;
    }
    out << "PASS MV axioms\n";
    (void)mv_to_mvm(*c.algebra);
    out << "PASS derived MVM: A1..A7 hold\n";
    return kExitPass;
  }
  MvmAlgebra m = require_mvm(a);
  const bool neg = has_mv_negation(m);
  out << (neg ? "PASS" : "FAIL") << " MV negation: " << yes_no(neg) << "\n";
  return neg ? kExitPass : kExitFail;
}

int cmd_gs_sum(const std::string& path, const std::string& a_text,
               const std::string& b_text, std::ostream& out) {
  MvmRef m = load_mvm(path);
  GoodSequence a = GoodSequence::make(m, parse_entries(a_text));
  GoodSequence b = GoodSequence::make(m, parse_entries(b_text));
  GoodSequence c = gs_sum(a, b);
  out << a.to_string() << " + " << b.to_string() << " = " << c.to_string()
      << "\n";
  return kExitPass;
}

int cmd_gs_enum(const std::string& path, std::size_t max_len,
                std::ostream& out) {
  MvmRef m = load_mvm(path);
  const auto all = gs_enumerate(m, max_len);
  for (const GoodSequence& s : all) out << s.to_string() << "\n";
  out << all.size() << " good sequences of length <= " << max_len << "\n";
  return kExitPass;
}

int cmd_congruences(const std::string& path, std::ostream& out) {
  const FiniteAlgebra a = load_algebra(path);
  const auto cs = all_congruences(a);
  for (const Congruence& c : cs) out << c.to_string() << "\n";
  out << cs.size() << " congruences\n";
  return kExitPass;
}

int cmd_si_check(const std::string& path, bool suite, std::ostream& out) {
  MvmRef m = load_mvm(path);
  const MvmAlgebra& a = *m;
  const SiResult si = is_subdirectly_irreducible(a);
  bool law = true;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      law = law && (a.oplus(x, y) == a.one() || a.odot(x, y) == a.zero());
    }
  }
  out << "SI: " << yes_no(si.irreducible)
      << "; totally ordered: " << yes_no(is_totally_ordered(a))
      << "; good-pair law: " << yes_no(law) << "\n";
  if (si.monolith) out << "monolith: " << si.monolith->to_string() << "\n";
  if (!suite) return kExitPass;
  Report r = si_theorem_suite(m);
  out << r.render();
  return verdict_exit(r);
}

int cmd_search(const std::string& satisfy_path,
               const std::string& violate_path, const std::string& sizes,
               bool no_symmetry, std::uint64_t node_limit,
               const std::string& out_path, std::ostream& out) {
  ProblemFile sat = parse_problem(read_file(satisfy_path));
  SearchProblem p;
  p.satisfy = sat.equations;
  if (!violate_path.empty()) {
    ProblemFile vio = parse_problem(read_file(violate_path), sat.constants);
    if (vio.equations.size() != 1) {
      throw UsageError(violate_path + ": expected exactly one equation");
    }
    p.violate = vio.equations.front();
  }
  std::tie(p.min_size, p.max_size) = parse_sizes(sizes);
  p.symmetry_breaking = !no_symmetry;
  p.node_limit = node_limit;
  SearchOutcome o = find_model(p);
  out << "status: " << status_name(o.status) << "\n";
  if (o.model) {
    out << "verified: " << yes_no(o.verified);
    if (!o.verified) out << " (" << o.verification << ")";
    out << "\n" << serialize_algebra(*o.model);
    if (!out_path.empty()) save_algebra(*o.model, out_path);
  }
  out << "--\nnodes: " << o.stats.nodes << "\n";
  return o.model && o.verified ? kExitPass : kExitFail;
}

int cmd_independence(const std::string& sizes, const std::string& report_path,
                     std::uint64_t node_limit, std::ostream& out) {
  const auto [lo, hi] = parse_sizes(sizes);
  IndependenceResult res = independence_suite(lo, hi, node_limit);
  std::ostringstream body;
  body << res.report().render();
  body << "witnesses: " << res.witnesses << "; bound_hit: " << res.bound_hits
       << "; exhausted: " << res.exhausted
       << "; discrepancies: " << res.discrepancies << "\n";
  for (const IndependenceItem& it : res.items) {
    if (!it.witness) continue;
    body << "\n# witness for " << it.name << " (violates " << it.violated
         << ")\n"
         << serialize_algebra(*it.witness);
  }
  out << body.str();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw UsageError(report_path + ": cannot write report");
    f << body.str();
  }
  return res.discrepancies == 0 ? kExitPass : kExitFail;
}

int cmd_corpus(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const FiniteAlgebra& a : builtin_corpus()) {
    const auto path = std::filesystem::path(dir) / (a.name() + ".alg");
    save_algebra(a, path);
    out << path.string() << "\n";
  }
  return kExitPass;
}

}  // namespace

ProblemFile parse_problem(std::string_view text,
                          const std::vector<std::string>& extra_constants) {
  ProblemFile out;
  std::set<std::string> constants(extra_constants.begin(),
                                  extra_constants.end());
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("const ", 0) == 0) {
      const std::string name = trim(line.substr(6));
      if (name.empty() ||
          !std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(c) || c == '_'; })) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad constant name");
      }
      constants.insert(name);
      out.constants.push_back(name);
      continue;
    }
    if (line == "axioms mvm") {
      for (const AxiomGroup& g : mvm_axioms()) {
        out.equations.insert(out.equations.end(), g.equations.begin(),
                             g.equations.end());
      }
      continue;
    }
    lines.emplace_back(lineno, line);
  }
  for (const auto& [no, eq] : lines) {
    try {
      out.equations.push_back(
          parse_equation(eq, constants, "line " + std::to_string(no)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite MV-monoidal algebras: axioms, good sequences, the "
               "ULM equivalence, congruences and model search",
               "mvmlab"};
  app.require_subcommand(1);

  std::string algebra, seq_a, seq_b, sizes, satisfy, violate, report_path,
      out_path;
  std::size_t max_len = 4;
  std::int64_t denominator = 2;
  bool lemmas = false, suite = false, no_symmetry = false;
  std::uint64_t node_limit = 0;

  auto* check = app.add_subcommand("check-axioms", "Check A1..A7 exhaustively");
  check->add_option("--algebra", algebra, "Algebra file")->required();
  check->add_flag("--lemmas", lemmas, "Also run the derived-identity suite");

  auto* gsum = app.add_subcommand("gs-sum", "Add two good sequences");
  gsum->add_option("--algebra", algebra, "Algebra file")->required();
  gsum->add_option("--a", seq_a, "Entries, comma separated")->required();
  gsum->add_option("--b", seq_b, "Entries, comma separated")->required();

  auto* genum = app.add_subcommand("gs-enum", "List good sequences");
  genum->add_option("--algebra", algebra, "Algebra file")->required();
  genum->add_option("--max-len", max_len, "Longest sequence")
      ->check(CLI::Range(0, 16));

  auto* rt = app.add_subcommand("roundtrip", "Unit/counit round trips");
  rt->add_option("--algebra", algebra, "Algebra file")->required();
  rt->add_option("--max-len", max_len, "Longest sequence")
      ->check(CLI::Range(1, 8));

  auto* demo = app.add_subcommand("ulm-demo", "Checks on k/m integers");
  demo->add_option("--denominator", denominator, "m")
      ->required()
      ->check(CLI::Range(1, 64));

  auto* cong = app.add_subcommand("congruences", "List all congruences");
  cong->add_option("--algebra", algebra, "Algebra file")->required();

  auto* si = app.add_subcommand("si-check", "Subdirect irreducibility");
  si->add_option("--algebra", algebra, "Algebra file")->required();
  si->add_flag("--suite", suite, "Run the structure theorem suite");

  auto* search = app.add_subcommand("search-models", "Finite model search");
  search->add_option("--satisfy", satisfy, "Problem file")->required();
  search->add_option("--violate", violate, "File with one equation");
  search->add_option("--sizes", sizes, "Range a..b")->required();
  search->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
  search->add_option("--node-limit", node_limit, "Decisions per size");
  search->add_option("--out", out_path, "Write the model here");

  auto* indep = app.add_subcommand("independence", "Axiom independence suite");
  indep->add_option("--sizes", sizes, "Range a..b")->required();
  indep->add_option("--report", report_path, "Also write the report here");
  indep->add_option("--node-limit", node_limit, "Decisions per size");

  auto* mv = app.add_subcommand("mv-check", "MV axioms or MV negation");
  mv->add_option("--algebra", algebra, "Algebra file")->required();

  auto* corpus = app.add_subcommand("corpus", "Write the example algebras");
  corpus->add_option("--out", out_path, "Directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check_axioms(algebra, lemmas, out);
    if (gsum->parsed()) return cmd_gs_sum(algebra, seq_a, seq_b, out);
    if (genum->parsed()) return cmd_gs_enum(algebra, max_len, out);
    if (rt->parsed()) return verdict_exit([&] {
        Report r = roundtrip_suite(load_mvm(algebra), max_len);
        out << r.render();
        return r;
      }());
    if (demo->parsed()) {
      Report r = ulm_demo(denominator);
      out << r.render();
      return verdict_exit(r);
    }
    if (cong->parsed()) return cmd_congruences(algebra, out);
    if (si->parsed()) return cmd_si_check(algebra, suite, out);
    if (search->parsed()) {
      return cmd_search(satisfy, violate, sizes, no_symmetry, node_limit,
                        out_path, out);
    }
    if (indep->parsed()) {
      return cmd_independence(sizes, report_path, node_limit, out);
    }
    if (mv->parsed()) return cmd_mv_check(algebra, out);
    if (corpus->parsed()) return cmd_corpus(out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GoodSequenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mvmlab
