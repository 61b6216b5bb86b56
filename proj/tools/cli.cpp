#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "chromsym/colourings.hpp"
#include "chromsym/csp.hpp"
#include "chromsym/error.hpp"
#include "chromsym/geometry.hpp"
#include "chromsym/serialize.hpp"

namespace chromsym::cli {

namespace {

const ReverseHessenberg& require_r(const RunConfig& c) {
  if (!c.r) throw Error(ErrorCode::OutOfRange, "this command needs --r");
  return *c.r;
}

int require_m(const RunConfig& c) {
  if (!c.m) throw Error(ErrorCode::OutOfRange, "this command needs --m");
  if (*c.m < 1) throw Error(ErrorCode::OutOfRange, "m must be at least 1");
  return *c.m;
}

int require_n(const RunConfig& c) {
  if (!c.n) throw Error(ErrorCode::OutOfRange, "this command needs --n");
  if (*c.n < 0) throw Error(ErrorCode::OutOfRange, "n must be nonnegative");
  return *c.n;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

std::string weight_text(std::span<const int> w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + ")";
}

void warn_infeasible(std::ostream& err, const ReverseHessenberg& r, int m) {
  err << "warning: r = " << r.to_string() << " needs at least " << min_colours(r) << " colours; with m = " << m
      << " there are no proper colourings and CSP_r = 0\n";
}

int run_info(const RunConfig& c, std::ostream& out) {
  const auto& r = require_r(c);
  const auto g = edges(r);
  Json doc;
  doc["n"] = r.size();
  doc["r"] = to_json(r);
  doc["E_r"] = edge_count(r);
  Json edge_list = Json::array();
  for (const auto& e : g.edges) edge_list.push_back({e.lower, e.upper});
  doc["edges"] = edge_list;
  doc["min_colours"] = min_colours(r);
  if (c.m) {
    const int m = require_m(c);
    doc["m"] = m;
    doc["feasible"] = is_feasible(r, m);
    if (is_feasible(r, m)) {
      doc["d_r"] = dimension(r, m);
      std::vector<int> fibres;
      for (int i = 1; i <= r.size(); ++i) fibres.push_back(fibre_dimension(r, m, i));
      doc["fibre_dims"] = fibres;
    }
  }
  if (c.format == Format::Json) {
    emit(out, doc);
    return kOk;
  }
  out << "r = " << r.to_string() << "\n";
  out << "n = " << r.size() << "\n";
  out << "E_r = " << edge_count(r) << "\n";
  out << "edges:";
  for (const auto& e : g.edges) out << " (" << e.lower << "," << e.upper << ")";
  out << "\n";
  out << "min colours = " << min_colours(r) << "\n";
  if (c.m) {
    out << "m = " << *c.m << ": " << (doc["feasible"].get<bool>() ? "feasible" : "infeasible") << "\n";
    if (doc.contains("d_r")) {
      out << "d_r = " << doc["d_r"].get<int>() << "\n";
      out << "fibre dims:";
      for (int d : doc["fibre_dims"]) out << ' ' << d;
      out << "\n";
    }
  }
  return kOk;
}

int run_csp_family(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto& r = require_r(c);
  const int m = require_m(c);
  if (!is_feasible(r, m)) warn_infeasible(err, r, m);
  const auto table = kostka_table(r.size(), m);
  const auto csp = compute_csp(r, m, c.parallel);
  const auto expansion = schur_expand(csp, table);
  const auto report = verify_kato(expansion, table);
  const int status = (c.command == Command::Verify && !report.pass) ? kVerificationFailed : kOk;

  if (c.format == Format::Json) {
    emit(out, csp_document(expansion, report));
    return status;
  }
  const int edges_r = csp.edge_count;
  switch (c.command) {
    case Command::Csp:
      out << "CSP_r for r = " << r.to_string() << ", m = " << m << " (E_r = " << edges_r << ")\n";
      out << "monomial basis, coefficient of x^mu:\n";
      if (csp.monomial.empty()) out << "  0\n";
      for (const auto& [mu, poly] : csp.monomial) {
        out << "  m" << weight_text(mu.padded(m)) << ": " << poly.to_string() << "\n";
      }
      break;
    case Command::Schur:
      out << "Schur expansion for r = " << r.to_string() << ", m = " << m << " (E_r = " << edges_r
          << ", center2 = " << edges_r << ")\n";
      if (expansion.coefficients.empty()) out << "  0\n";
      for (const auto& [lambda, poly] : expansion.coefficients) {
        out << "  s" << lambda.to_string() << ": " << poly.to_string()
            << "    qdim M = " << multiplicity_text(poly, edges_r) << "\n";
      }
      break;
    default:
      out << "verification for r = " << r.to_string() << ", m = " << m << " (center2 = " << report.center2 << ")\n";
      for (const auto& l : report.per_lambda) {
        out << "  s" << l.lambda.to_string() << ": " << l.coefficient.to_string()
            << "  nonnegative=" << (l.nonnegative ? "yes" : "no")
            << " palindromic=" << (l.palindromic ? "yes" : "no") << " support=";
        if (l.low) {
          out << "[" << *l.low << "," << *l.high << "]";
        } else {
          out << "none";
        }
        out << (l.supported ? "" : " (outside [0,E_r])") << (l.pass() ? " ok" : " FAIL") << "\n";
      }
      out << "  reconstruction: " << (report.reconstruction ? "ok" : "FAIL") << "\n";
      out << (report.pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return status;
}

int run_poincare(const RunConfig& c, std::ostream& out) {
  const auto& r = require_r(c);
  const int m = require_m(c);
  const auto report = geometry_report(r, m, c.parallel);
  const int status = report.identities_pass ? kOk : kVerificationFailed;
  if (c.format == Format::Json) {
    Json doc;
    doc["n"] = r.size();
    doc["m"] = m;
    doc["r"] = to_json(r);
    doc["E_r"] = edge_count(r);
    doc["geometry"] = to_json(report);
    emit(out, doc);
    return status;
  }
  out << "r = " << r.to_string() << ", m = " << m << ", d_r = " << report.dimension << "\n";
  out << "fibre dims:";
  for (int d : report.fibre_dims) out << ' ' << d;
  out << "\n";
  out << "bundle product: " << report.poincare_product.to_string() << "\n";
  out << "cell paving:    " << report.poincare_bb.to_string() << "\n";
  out << "equal: " << (report.poincare_equal() ? "yes" : "no") << "\n";
  out << "identities: " << (report.identities_pass ? "pass" : "FAIL") << "\n";
  return status;
}

int run_colourings(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto& r = require_r(c);
  const int m = require_m(c);
  if (c.limit && *c.limit < 0) throw Error(ErrorCode::OutOfRange, "--limit must be nonnegative");
  if (!is_feasible(r, m)) warn_infeasible(err, r, m);
  const long limit = c.limit.value_or(-1);
  long emitted = 0;
  Json list = Json::array();
  ColouringEnumerator e(r, m);
  // Stop emitting once the limit is hit; the enumerator itself has no early exit.
  e.run([&](const ColouringView& v) {
    if (limit >= 0 && emitted >= limit) return;
    ++emitted;
    if (c.format == Format::Json) {
      Json item;
      item["kappa"] = v.colouring();
      item["asc"] = v.ascents;
      item["wt"] = std::vector<int>(v.weight.begin(), v.weight.end());
      item["height"] = v.height;
      item["d"] = v.cell_dim();
      list.push_back(std::move(item));
    } else {
      for (std::size_t k = 0; k < v.kappa.size(); ++k) out << (k ? " " : "") << v.kappa[k];
      out << " | asc=" << v.ascents << " wt=" << weight_text(v.weight) << " d=" << v.cell_dim() << "\n";
    }
  });
  if (c.format == Format::Json) {
    Json doc;
    doc["n"] = r.size();
    doc["m"] = m;
    doc["r"] = to_json(r);
    doc["total"] = colouring_count(r, m);
    doc["colourings"] = std::move(list);
    emit(out, doc);
  }
  return kOk;
}

int run_kostka(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  const int m = require_m(c);
  const auto table = kostka_table(n, m);
  if (c.format == Format::Json) {
    Json doc;
    doc["n"] = n;
    doc["m"] = m;
    const Json t = to_json(table);
    doc["index"] = t["index"];
    doc["matrix"] = t["matrix"];
    emit(out, doc);
    return kOk;
  }
  out << "Kostka numbers K[lambda][mu], n = " << n << ", m = " << m << "\n";
  for (std::size_t a = 0; a < table.index().size(); ++a) {
    out << "  " << table.index()[a].to_string() << ":";
    for (std::size_t b = 0; b < table.index().size(); ++b) out << ' ' << table.entry(a, b);
    out << "\n";
  }
  return kOk;
}

struct SweepCase {
  int m = 0;
  bool verification = false;
  bool geometry = false;
};

int run_sweep(const RunConfig& c, std::ostream& out) {
  const int n = require_n(c);
  if (!c.m_max && !c.m) throw Error(ErrorCode::OutOfRange, "sweep needs --m-max (or --m) as the colour cap");
  const int cap = c.m_max ? *c.m_max : *c.m;
  if (cap < 1) throw Error(ErrorCode::OutOfRange, "the colour cap must be at least 1");

  const auto functions = all_reverse_hessenberg(n);
  std::map<int, KostkaTable> tables;
  for (int m = 1; m <= cap; ++m) tables.emplace(m, kostka_table(n, m));

  std::vector<std::vector<SweepCase>> results(functions.size());
  auto check = [&](std::size_t k) {
    const auto& r = functions[k];
    for (int m = std::max(1, min_colours(r)); m <= cap; ++m) {
      const auto& table = tables.at(m);
      const auto report = verify_kato(schur_expand(compute_csp(r, m), table), table);
      results[k].push_back({m, report.pass, geometry_report(r, m).identities_pass});
    }
  };
  if (c.parallel) {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < functions.size(); k = next++) check(k);
      });
    }
  } else {
    for (std::size_t k = 0; k < functions.size(); ++k) check(k);
  }

  std::size_t cases = 0;
  Json counterexamples = Json::array();
  std::ostringstream failures;
  for (std::size_t k = 0; k < functions.size(); ++k) {
    for (const auto& sc : results[k]) {
      ++cases;
      if (sc.verification && sc.geometry) continue;
      Json item;
      item["r"] = to_json(functions[k]);
      item["m"] = sc.m;
      item["verification"] = sc.verification;
      item["geometry"] = sc.geometry;
      counterexamples.push_back(item);
      failures << "FAIL r = " << functions[k].to_string() << ", m = " << sc.m
               << (sc.verification ? "" : " (Schur coefficients)") << (sc.geometry ? "" : " (geometry)") << "\n";
    }
  }
  const std::size_t failed = counterexamples.size();
  if (c.format == Format::Json) {
    Json doc;
    doc["n"] = n;
    doc["m_max"] = cap;
    doc["functions"] = functions.size();
    doc["cases"] = cases;
    doc["failures"] = failed;
    doc["counterexamples"] = std::move(counterexamples);
    emit(out, doc);
  } else {
    out << failures.str();
    out << cases << " (r, m) cases checked with m <= " << cap << "\n";
    out << functions.size() << " functions checked, " << failed << " failures\n";
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Info: return run_info(config, out);
    case Command::Csp:
    case Command::Schur:
    case Command::Verify: return run_csp_family(config, out, err);
    case Command::Poincare: return run_poincare(config, out);
    case Command::Colourings: return run_colourings(config, out, err);
    case Command::Kostka: return run_kostka(config, out);
    case Command::Sweep: return run_sweep(config, out);
  }
  return kInvalidInput;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic quasisymmetric polynomials of unit interval graphs: exact Schur expansions and checks"};
  app.require_subcommand(1);

  RunConfig config;
  std::string r_text;
  bool have_r = false;
  std::string format = "text";

  const std::vector<std::pair<Command, std::pair<const char*, const char*>>> commands = {
      {Command::Info, {"info", "graph data, feasibility, dimension and fibre dimensions"}},
      {Command::Csp, {"csp", "CSP_r in the monomial basis"}},
      {Command::Schur, {"schur", "Schur coefficients c_lambda(q)"}},
      {Command::Verify, {"verify", "check nonnegativity, palindromicity and support of every c_lambda"}},
      {Command::Poincare, {"poincare", "Poincare polynomial from the bundle product and from the cell paving"}},
      {Command::Colourings, {"colourings", "list proper colourings with their statistics"}},
      {Command::Kostka, {"kostka", "Kostka table for partitions of n with at most m parts"}},
      {Command::Sweep, {"sweep", "verify every reverse Hessenberg function on [n] for all feasible m up to a cap"}},
  };
  std::map<CLI::App*, Command> by_app;
  for (const auto& [cmd, text] : commands) {
    CLI::App* sub = app.add_subcommand(text.first, text.second);
    by_app[sub] = cmd;
    if (cmd != Command::Kostka && cmd != Command::Sweep) {
      sub->add_option_function<std::string>("--r", [&](const std::string& s) { r_text = s; have_r = true; },
                                            "reverse Hessenberg function, e.g. 0,0,1")
          ->required();
    }
    if (cmd == Command::Kostka || cmd == Command::Sweep) {
      sub->add_option_function<int>("--n", [&](int v) { config.n = v; }, "number of vertices")->required();
    }
    sub->add_option_function<int>("--m", [&](int v) { config.m = v; }, "number of colours");
    if (cmd == Command::Sweep) {
      sub->add_option_function<int>("--m-max", [&](int v) { config.m_max = v; }, "largest number of colours");
    }
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--parallel", config.parallel, "split enumeration across threads");
    if (cmd == Command::Colourings) {
      sub->add_option_function<long>("--limit", [&](long v) { config.limit = v; }, "maximum number of colourings");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    config.command = by_app.at(app.get_subcommands().front());
    config.format = format == "json" ? Format::Json : Format::Text;
    if (have_r) config.r = ReverseHessenberg::parse(r_text);
    return run(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace chromsym::cli
