// leibniz: command-line front end for the header library.
//
//   leibniz <verb> <input> [--format text|json] [--field F<p>] [--budget N]
//
// <input> is an algebra file or corpus:<name>. Exit codes: 0 success,
// 1 verification failure, 2 usage or parse error, 3 unsupported.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibniz/leibniz.hpp"

namespace {

using namespace leibniz;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3 };

struct Options {
  std::string input;
  std::string format = "text";
  std::string field;
  std::uint64_t budget = oracle::Budget{}.max_subspaces;
  std::string ideal;
  std::string subalgebra;
  bool verbose = false;
  std::vector<std::string> corpus_args;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Text rendering of the JSON document

bool is_subspace(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("dim") && j.contains("ambient") && j.contains("basis");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

std::string inline_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_text(j[i]);
  return out + "]";
}

bool is_flat(const Json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  for (const auto& e : j)
    if (!is_flat(e)) return false;
  return true;
}

void render(std::ostream& out, const Json& j, int indent);

void render_subspace(std::ostream& out, const std::string& key, const Json& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad << key << ": dim " << s["dim"].get<std::size_t>() << " of " << s["ambient"].get<std::size_t>() << "\n";
  for (const auto& row : s["basis"]) out << pad << "  " << inline_text(row) << "\n";
}

void render_member(std::ostream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_subspace(v)) {
    render_subspace(out, key, v, indent);
  } else if ((v.is_array() || v.is_object()) && v.empty()) {
    out << pad << key << ": none\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
    out << pad << key << ":\n";
    for (const auto& e : v) out << pad << "  - " << e.get<std::string>() << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_flat) && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_array(); })) {
    out << pad << key << ":\n";
    for (const auto& e : v) out << pad << "  " << inline_text(e) << "\n";
  } else if (is_flat(v)) {
    out << pad << key << ": " << inline_text(v) << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_subspace(v[i])) {
        render_subspace(out, "[" + std::to_string(i) + "]", v[i], indent + 2);
      } else {
        std::ostringstream item;
        render(item, v[i], indent + 4);
        std::string text = item.str();
        if (text.size() > static_cast<std::size_t>(indent + 2)) text.replace(static_cast<std::size_t>(indent + 2), 2, "- ");
        out << text;
      }
    }
  } else {
    out << pad << key << ":\n";
    render(out, v, indent + 2);
  }
}

void render(std::ostream& out, const Json& j, int indent) {
  if (!j.is_object()) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << inline_text(j) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) render_member(out, key, value, indent);
}

void emit(const Options& opt, const Json& doc) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    render(std::cout, doc, 0);
}

// ---------------------------------------------------------------------------
// Inputs

LeibnizAlgebra load(const Options& opt) {
  LeibnizAlgebra L = LeibnizAlgebra::zero_algebra(FieldDesc::rationals());
  if (opt.input.rfind("corpus:", 0) == 0) {
    try {
      L = corpus::by_name(opt.input.substr(7)).algebra;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    L = read_algebra_file(opt.input);
  }
  if (opt.field.empty()) return L;
  FieldDesc target = FieldDesc::rationals();
  try {
    target = FieldDesc::parse(opt.field);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (target == L.field()) return L;
  if (!L.field().is_rationals())
    throw UnsupportedField("cannot change an algebra over " + L.field().name() + " to " + target.name() +
                           "; only rational algebras can be reduced mod p");
  auto reduced = reduce(L, target);
  if (!reduced)
    throw UnsupportedField("the algebra does not reduce to " + target.name() +
                           ": a denominator is not a unit or the reduced table fails the identity");
  return *reduced;
}

// Rows "a,b;c,d" with entries such as 1, -2, 3/4.
Subspace parse_rows(const LeibnizAlgebra& L, const std::string& text, const char* what) {
  std::vector<Vector> rows;
  std::stringstream rows_in(text);
  std::string row;
  while (std::getline(rows_in, row, ';')) {
    Vector v;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      try {
        v.push_back(Scalar::parse(L.field(), cell));
      } catch (const std::exception&) {
        throw UsageError(std::string("bad entry '") + cell + "' in " + what);
      }
    }
    if (v.size() != L.dim())
      throw UsageError(std::string(what) + " rows need " + std::to_string(L.dim()) + " entries, got " +
                       std::to_string(v.size()));
    rows.push_back(std::move(v));
  }
  return Subspace::span(L.field(), L.dim(), rows);
}

Json algebra_json(const LeibnizAlgebra& L) { return Json::parse(print_algebra(L)); }

Json series_json(const std::vector<Subspace>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(to_json(t));
  return out;
}

// Prints the identity report and returns kFailed when L is not Leibniz.
std::optional<int> require_identity(const Options& opt, const LeibnizAlgebra& L) {
  const VerificationReport r = check_leibniz(L);
  if (r.ok()) return std::nullopt;
  emit(opt, to_json(r));
  return kFailed;
}

// ---------------------------------------------------------------------------
// Verbs

int cmd_validate(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  const VerificationReport r = check_leibniz(L);
  emit(opt, to_json(r));
  return r.ok() ? kOk : kFailed;
}

int cmd_info(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  Json doc{{"field", L.field().name()},
           {"dim", L.dim()},
           {"basis", L.labels()},
           {"lie", is_lie(L)},
           {"solvable", is_solvable(L)},
           {"nilpotent", is_nilpotent(L)},
           {"kernel_dim", leibniz_kernel(L).dim()},
           {"center", to_json(center(L))}};
  emit(opt, doc);
  return kOk;
}

int cmd_kernel(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  emit(opt, Json{{"kernel", to_json(leibniz_kernel(L))}});
  return kOk;
}

int cmd_liesation(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  const QuotientPresentation q = liesation(L);
  emit(opt, Json{{"kernel", to_json(q.ideal)}, {"representatives", q.quotient.labels()}, {"algebra", algebra_json(q.quotient)}});
  return kOk;
}

int cmd_series(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  const auto lcs = lower_central_series(L);
  const auto ds = derived_series(L);
  emit(opt, Json{{"lower_central", series_json(lcs)},
                 {"derived", series_json(ds)},
                 {"nilpotent", lcs.back().is_zero()},
                 {"solvable", ds.back().is_zero()}});
  return kOk;
}

int cmd_nilradical(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  Json doc = to_json(nilradical(L, oracle::Budget{opt.budget}));
  if (!opt.verbose) doc.erase("certificates");
  emit(opt, doc);
  return kOk;
}

int cmd_radical(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  Json doc = to_json(radical(L, oracle::Budget{opt.budget}));
  if (!opt.verbose) doc.erase("certificates");
  emit(opt, doc);
  return kOk;
}

int cmd_frattini(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  const bool nilpotent = is_nilpotent(L);
  const Subspace phi = frattini_ideal(L, oracle::Budget{opt.budget});
  emit(opt, Json{{"method", nilpotent ? "square" : "maximal-subalgebra-scan"}, {"frattini", to_json(phi)}});
  return kOk;
}

int cmd_quotient(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  const Subspace J = opt.ideal.empty() ? leibniz_kernel(L) : parse_rows(L, opt.ideal, "--ideal");
  const QuotientPresentation q = quotient(L, J);
  emit(opt, Json{{"ideal", to_json(q.ideal)}, {"representatives", q.quotient.labels()}, {"algebra", algebra_json(q.quotient)}});
  return kOk;
}

Json search_json(const LeibnizAlgebra& L, const ComplementSearch& s) {
  Json doc{{"found", s.subalgebra.has_value()},
           {"exhaustive", s.exhaustive},
           {"candidates", s.candidates},
           {"kernel", to_json(leibniz_kernel(L))},
           {"B", s.subalgebra ? to_json(*s.subalgebra) : Json(nullptr)},
           {"notices", s.notices}};
  if (!s.subalgebra && !s.exhaustive)
    doc["notices"].push_back("the heuristic family was exhausted; a complement B always exists, it was just not found");
  return doc;
}

int cmd_find_b(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  emit(opt, search_json(L, find_complement_B(L, oracle::Budget{opt.budget})));
  return kOk;
}

Json not_applicable(const std::string& subject, const FieldDesc& f, const std::string& why) {
  VerificationReport r(subject, f);
  r.mark_not_applicable(why);
  return to_json(r);
}

int cmd_verify(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  const oracle::Budget budget{opt.budget};
  Json reports = Json::array();
  bool failed = false;
  const auto add = [&](Json report) {
    failed = failed || report["verdict"] == "fail";
    reports.push_back(std::move(report));
  };

  try {
    add(to_json(verify_lemma1(L, budget)));
  } catch (const Unsupported& e) {
    add(not_applicable("lemma1", L.field(), e.what()));
  }

  std::optional<Subspace> B;
  std::string b_source = "supplied";
  if (!opt.subalgebra.empty()) {
    B = parse_rows(L, opt.subalgebra, "--subalgebra");
  } else {
    const ComplementSearch s = find_complement_B(L, budget);
    B = s.subalgebra;
    b_source = s.exhaustive ? "exhaustive search" : "heuristic search";
  }
  if (B) {
    Json t = to_json(verify_theorem2(L, *B, budget));
    t["B_source"] = b_source;
    add(std::move(t));
  } else {
    add(not_applicable("theorem2", L.field(),
                       "no complement B was found by the bounded search; one always exists, so this is not a "
                       "counterexample"));
  }

  for (const auto& [name, fn] : std::vector<std::pair<std::string, VerificationReport (*)(const LeibnizAlgebra&)>>{
           {"prop3", &verify_prop3}, {"corollary", &verify_corollary}}) {
    try {
      add(to_json(fn(L)));
    } catch (const UnsupportedField& e) {
      add(not_applicable(name, L.field(), e.what()));
    }
  }

  emit(opt, Json{{"field", L.field().name()}, {"verdict", failed ? "fail" : "pass"}, {"reports", reports}});
  return failed ? kFailed : kOk;
}

int cmd_corpus(const Options& opt) {
  const auto& args = opt.corpus_args;
  if (args.empty() || args[0] == "list") {
    if (args.size() > 1) throw UsageError("corpus list takes no arguments");
    Json entries = Json::array();
    for (const auto& e : corpus::standard_corpus())
      entries.push_back(Json{{"name", e.name}, {"dim", e.algebra.dim()}, {"field", e.algebra.field().name()}});
    emit(opt, Json{{"entries", entries}, {"families", {"example2:<n>:<r>", "abelian:<n>", "<name>+sl2"}}});
    return kOk;
  }
  if (args[0] == "emit") {
    if (args.size() != 2) throw UsageError("usage: corpus emit <name>");
    try {
      std::cout << print_algebra(corpus::by_name(args[1]).algebra);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return kOk;
  }
  throw UsageError("unknown corpus action '" + args[0] + "' (expected list or emit)");
}

int cmd_oracle_scan(const Options& opt) {
  const LeibnizAlgebra L = load(opt);
  if (auto code = require_identity(opt, L)) return *code;
  if (L.field().is_rationals())
    throw UnsupportedField("oracle-scan enumerates subspaces over F_p only; pass --field F2 (or F3, F5, F7)");
  const oracle::LatticeScan scan = oracle::scan_lattice(L, oracle::Budget{opt.budget});
  const VerificationReport lattice = oracle::verify_nilpotent_ideal_lattice(scan);
  Json doc{{"field", L.field().name()},
           {"subspaces", scan.subspaces},
           {"subalgebras", scan.subalgebras.size()},
           {"ideals", scan.ideals.size()},
           {"nilpotent_ideals", scan.nilpotent_ideals.size()},
           {"solvable_ideals", scan.solvable_ideals.size()},
           {"maximal_subalgebras", scan.maximal_subalgebras.size()},
           {"nilradical", to_json(oracle::nilradical_oracle(scan))},
           {"radical", to_json(oracle::radical_oracle(scan))},
           {"frattini", to_json(oracle::frattini_oracle(scan))},
           {"lattice", to_json(lattice)}};
  if (opt.verbose) {
    doc["ideal_list"] = series_json(scan.ideals);
    doc["maximal_subalgebra_list"] = series_json(scan.maximal_subalgebras);
  }
  emit(opt, doc);
  return lattice.ok() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, Options& opt, bool with_input = true) {
  if (with_input) sub->add_option("input", opt.input, "algebra file, or corpus:<name>")->required();
  sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--field", opt.field, "reduce a rational algebra mod p first, e.g. F3");
  sub->add_option("--budget", opt.budget, "cap on subspaces visited by exhaustive scans");
  sub->add_flag("-v,--verbose", opt.verbose, "include certificates and full lists");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Leibniz algebras"};
  app.require_subcommand(1, 1);
  Options opt;

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const std::vector<Verb> verbs = {
      {"validate", "check the Leibniz identity on all basis triples", cmd_validate},
      {"info", "dimension, flags and center", cmd_info},
      {"kernel", "Leibniz kernel I (span of squares)", cmd_kernel},
      {"liesation", "the Lie algebra L/I", cmd_liesation},
      {"series", "lower central and derived series", cmd_series},
      {"nilradical", "largest nilpotent ideal", cmd_nilradical},
      {"radical", "largest solvable ideal", cmd_radical},
      {"frattini", "Frattini ideal", cmd_frattini},
      {"quotient", "quotient by --ideal (default: the kernel)", cmd_quotient},
      {"find-b", "search for a subalgebra B with L = I + B and I cap B in phi(B)", cmd_find_b},
      {"verify", "check the statements about N(L/I) on this algebra", cmd_verify},
      {"oracle-scan", "exhaustive ideal/subalgebra lattice over F_p", cmd_oracle_scan},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    add_common(sub, opt);
    if (std::string(v.name) == "quotient") sub->add_option("--ideal", opt.ideal, "ideal rows, e.g. \"0,1;1,0\"");
    if (std::string(v.name) == "verify")
      sub->add_option("--subalgebra", opt.subalgebra, "use this B for the complement statement, rows \"a,b;c,d\"");
    handlers.emplace_back(sub, v.run);
  }
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list builders or emit one as an algebra file");
  corpus_cmd->add_option("action", opt.corpus_args, "list | emit <name>");
  add_common(corpus_cmd, opt, false);
  handlers.emplace_back(corpus_cmd, cmd_corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string where = opt.input.empty() ? "leibniz" : opt.input;
  try {
    for (const auto& [sub, run] : handlers)
      if (sub->parsed()) return run(opt);
  } catch (const ParseError& e) {
    std::cerr << where << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    std::cerr << "leibniz: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InternalInconsistency& e) {
    std::cerr << "leibniz: internal inconsistency: " << e.what() << "\n";
    return kFailed;
  } catch (const TheoremViolation& e) {
    std::cerr << "leibniz: theorem violation: " << e.what() << "\n";
    return kFailed;
  } catch (const PremiseViolation& e) {
    std::cerr << "leibniz: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "leibniz: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
