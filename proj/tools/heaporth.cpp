// heaporth: compute bases, moments, Hankel determinants, continued fractions,
// heaps and paths, and certify the identities in the verify registry.
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heaporth/contfrac.hpp"
#include "heaporth/error.hpp"
#include "heaporth/format.hpp"
#include "heaporth/heap.hpp"
#include "heaporth/json_io.hpp"
#include "heaporth/motzkin.hpp"
#include "heaporth/ortho_basis.hpp"
#include "heaporth/verify.hpp"

using namespace heaporth;
using nlohmann::json;

namespace {

enum class Format { kPlain, kJson, kLatex };

struct Globals {
  std::string spec = "symbolic";
  std::string format = "plain";
};

CoeffSpec load_spec(const std::string& text) {
  const std::string prefix = "custom:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string path = text.substr(prefix.size());
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::kParse, "cannot open spec file '" + path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, "spec file '" + path + "': " + e.what());
    }
    return CoeffSpec::from_json(j);
  }
  return CoeffSpec::from_name(text);
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "latex") return Format::kLatex;
  return Format::kPlain;
}

std::string basis_letter(const CoeffSpec& spec) { return spec.kind() == CoeffSpec::Kind::kFibonacci ? "P" : "Q"; }

// Wraps a term as "(...)" when it has more than one monomial.
std::string factor_string(const MultiPoly& p) {
  const std::string s = p.to_string();
  return p.terms().size() > 1 ? "(" + s + ")" : s;
}

int cmd_poly(const Globals& g, unsigned n, bool all) {
  const CoeffSpec spec = load_spec(g.spec);
  const OrthoBasis basis = generate_basis(n, spec);
  const std::string q = basis_letter(spec);
  const unsigned first = all ? 0 : n;
  switch (parse_format(g.format)) {
    case Format::kPlain:
      for (unsigned k = first; k <= n; ++k) {
        if (all) std::cout << q << "_" << k << " = ";
        std::cout << basis[k].to_string() << "\n";
      }
      break;
    case Format::kJson: {
      json arr = json::array();
      for (unsigned k = first; k <= n; ++k) arr.push_back(to_json(basis[k]));
      std::cout << json{{"spec", spec.name()}, {"basis", arr}}.dump() << "\n";
      break;
    }
    case Format::kLatex: {
      std::vector<MultiPoly> c, lambda{MultiPoly()};
      for (unsigned k = 0; k < n; ++k) c.push_back(spec.c(k));
      for (unsigned k = 1; k < n; ++k) lambda.push_back(spec.lam(k));
      if (n > 0) std::cout << latex_recursion(q, c, lambda) << "\n";
      for (unsigned k = first; k <= n; ++k) std::cout << "$" << q << "_{" << k << "}(x) = " << latex_of(basis[k]) << "$\n";
      break;
    }
  }
  return 0;
}

int cmd_moments(const Globals& g, unsigned nmax, const std::string& method) {
  const CoeffSpec spec = load_spec(g.spec);
  std::vector<MultiPoly> mu;
  if (method == "paths") {
    for (unsigned n = 0; n <= nmax; ++n) mu.push_back(moments_by_paths(n, spec));
  } else {
    mu = stieltjes_moments(nmax, spec).mu;
  }
  switch (parse_format(g.format)) {
    case Format::kPlain:
      for (unsigned n = 0; n <= nmax; ++n) std::cout << "mu_" << n << " = " << mu[n].to_string() << "\n";
      break;
    case Format::kJson: {
      json arr = json::array();
      for (const auto& m : mu) arr.push_back(to_compact_json(m));
      std::cout << json{{"moments", arr}}.dump() << "\n";
      break;
    }
    case Format::kLatex:
      std::cout << "\\begin{aligned}\n";
      for (unsigned n = 0; n <= nmax; ++n)
        std::cout << "\\mu_{" << n << "} &= " << latex_of(mu[n]) << (n < nmax ? " \\\\\n" : "\n");
      std::cout << "\\end{aligned}\n";
      break;
  }
  return 0;
}

int cmd_hankel(const Globals& g, const std::string& which, unsigned n) {
  const CoeffSpec spec = load_spec(g.spec);
  const MomentSeq mu = stieltjes_moments(2 * n + 1, spec);
  const bool shifted = which == "chi";
  const HankelMatrix a = shifted ? HankelMatrix::shifted(n, mu) : HankelMatrix::plain(n, mu);
  const HankelDets hd = hankel_dets(n, mu);
  const MultiPoly& value = shifted ? hd.chi : hd.d;
  const std::string name = shifted ? "chi" : "d";
  switch (parse_format(g.format)) {
    case Format::kPlain:
      std::cout << name << "_" << n << " = " << value.to_string() << "\n";
      break;
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : a.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_compact_json(e));
        rows.push_back(r);
      }
      std::cout << json{{"which", which}, {"n", n}, {"matrix", rows}, {"value", to_compact_json(value)}}.dump() << "\n";
      break;
    }
    case Format::kLatex:
      std::cout << "$" << (shifted ? "\\chi" : "d") << "_{" << n << "} = \\det " << latex_pmatrix(a.entries) << " = "
                << latex_of(value) << "$\n";
      break;
  }
  return 0;
}

int cmd_expand(const Globals& g, const std::string& target) {
  if (target.rfind("x^", 0) != 0 || target.size() < 3 ||
      target.find_first_not_of("0123456789", 2) != std::string::npos)
    throw Error(ErrorKind::kParse, "target must look like x^N, got '" + target + "'");
  const unsigned n = static_cast<unsigned>(std::stoul(target.substr(2)));
  const CoeffSpec spec = load_spec(g.spec);
  const OrthoBasis basis = generate_basis(n, spec);
  const MomentSeq mu = stieltjes_moments(2 * n, spec);
  const std::vector<MultiPoly> coeffs = expand_in_basis(UniPoly::x_power(n), basis, mu);
  const std::string q = basis_letter(spec);
  switch (parse_format(g.format)) {
    case Format::kPlain:
    case Format::kLatex: {
      const bool latex = parse_format(g.format) == Format::kLatex;
      std::ostringstream os;
      bool first = true;
      for (unsigned k = 0; k <= n; ++k) {
        const MultiPoly& a = coeffs[k];
        if (a.is_zero()) continue;
        std::string coef;
        bool negative = false;
        if (auto v = a.constant_value()) {
          negative = v->sign() < 0;
          const BigRational mag = negative ? -*v : *v;
          if (!(mag == BigRational(1))) coef = latex ? latex_of(MultiPoly(mag)) : mag.to_string() + "*";
        } else {
          coef = latex ? "\\left(" + latex_of(a) + "\\right)" : factor_string(a) + "*";
        }
        if (first) {
          os << (negative ? "-" : "");
        } else {
          os << (negative ? " - " : " + ");
        }
        os << coef << q << (latex ? "_{" + std::to_string(k) + "}" : "_" + std::to_string(k));
        first = false;
      }
      if (first) os << "0";
      if (latex)
        std::cout << "$x^{" << n << "} = " << os.str() << "$\n";
      else
        std::cout << target << " = " << os.str() << "\n";
      break;
    }
    case Format::kJson: {
      json arr = json::array();
      for (const auto& a : coeffs) arr.push_back(to_compact_json(a));
      std::cout << json{{"target", target}, {"spec", spec.name()}, {"coefficients", arr}}.dump() << "\n";
      break;
    }
  }
  return 0;
}

int cmd_cf(const Globals& g, std::optional<unsigned> depth, unsigned order) {
  const CoeffSpec spec = load_spec(g.spec);
  const unsigned d = depth.value_or(convergent_depth_for_order(order));
  const Convergent cv = convergent(d, spec);
  const TruncatedSeries s = cv.value.series(order);
  switch (parse_format(g.format)) {
    case Format::kPlain:
      std::cout << "J^(" << d << ") = " << cv.value.to_string() << "\n";
      std::cout << "series = " << s.to_string("x") << "\n";
      break;
    case Format::kJson:
      std::cout << json{{"depth", d},
                        {"numerator", to_json(cv.value.num())},
                        {"denominator", to_json(cv.value.den())},
                        {"series", to_json(s)}}
                       .dump()
                << "\n";
      break;
    case Format::kLatex:
      std::cout << "$" << cfrac_latex(d, spec) << "$\n";
      break;
  }
  return 0;
}

void print_heap(const Heap& h, Format f) {
  switch (f) {
    case Format::kJson:
      std::cout << h.to_json().dump() << "\n";
      break;
    default:
      std::cout << canonical_word(h).to_string() << "\n" << h.ascii();
      break;
  }
}

int cmd_heap(const Globals& g, const std::string& action, const std::vector<std::string>& args) {
  const Format f = parse_format(g.format);
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(ErrorKind::kParse, "heap " + action + " expects " + std::to_string(k) + " quoted word argument(s)");
  };
  if (action == "settle") {
    need(1);
    print_heap(settle(HeapWord::parse(args[0])), f);
  } else if (action == "canon") {
    need(1);
    const HeapWord w = canonical_word(settle(HeapWord::parse(args[0])));
    if (f == Format::kJson)
      std::cout << json{{"canonical", w.to_string()}}.dump() << "\n";
    else
      std::cout << w.to_string() << "\n";
  } else if (action == "eq") {
    need(2);
    const bool eq = heaps_equivalent(HeapWord::parse(args[0]), HeapWord::parse(args[1]));
    if (f == Format::kJson)
      std::cout << json{{"equivalent", eq}}.dump() << "\n";
    else
      std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  } else if (action == "from-path") {
    need(1);
    // Either a step path "NE,E,SE" or a letter word "a0 c1 b1".
    const bool steps = args[0].find_first_of("NS") != std::string::npos;
    const PathWord word = steps ? path_word(MotzkinPath::parse(args[0])) : PathWord::parse(args[0]);
    const HeapWord hw = motzkin_to_heap(word);
    const Heap h = settle(hw);
    if (f == Format::kJson) {
      json j = h.to_json();
      j["word"] = hw.to_string();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "word: " << hw.to_string() << "\n";
      print_heap(h, f);
    }
  } else if (action == "to-path") {
    need(1);
    const MotzkinPath p = heap_to_motzkin(settle(HeapWord::parse(args[0])));
    if (f == Format::kJson)
      std::cout << json{{"path", p.to_string()}, {"word", path_word(p).to_string()}}.dump() << "\n";
    else
      std::cout << p.to_string() << "\n" << path_word(p).to_string() << "\n";
  } else {
    throw Error(ErrorKind::kParse, "unknown heap action '" + action + "'");
  }
  return 0;
}

int cmd_path(const Globals& g, const std::string& action, const std::vector<std::string>& args, unsigned n,
             unsigned start, unsigned end) {
  const Format f = parse_format(g.format);
  if (action == "enum") {
    const auto paths = enumerate_paths(start, end, n);
    if (f == Format::kJson) {
      json arr = json::array();
      for (const auto& p : paths) arr.push_back(p.to_string());
      std::cout << json{{"count", paths.size()}, {"paths", arr}}.dump() << "\n";
    } else {
      for (const auto& p : paths) std::cout << p.to_string() << "\n";
      std::cout << "count = " << paths.size() << "\n";
    }
    return 0;
  }
  if (args.size() != 1) throw Error(ErrorKind::kParse, "path " + action + " expects one quoted argument");
  if (action == "word") {
    const PathWord w = path_word(MotzkinPath::parse(args[0]));
    if (f == Format::kJson)
      std::cout << json{{"word", w.to_string()}}.dump() << "\n";
    else
      std::cout << w.to_string() << "\n";
  } else if (action == "weight") {
    const bool steps = args[0].find_first_of("NS") != std::string::npos;
    const PathWord w = steps ? path_word(MotzkinPath::parse(args[0])) : PathWord::parse(args[0]);
    const MultiPoly wt = path_weight(w, load_spec(g.spec));
    if (f == Format::kJson)
      std::cout << json{{"weight", to_compact_json(wt)}}.dump() << "\n";
    else if (f == Format::kLatex)
      std::cout << "$" << latex_of(wt) << "$\n";
    else
      std::cout << wt.to_string() << "\n";
  } else {
    throw Error(ErrorKind::kParse, "unknown path action '" + action + "'");
  }
  return 0;
}

int cmd_verify(const Globals& g, std::vector<std::string> ids, std::optional<unsigned> nmax, unsigned jobs) {
  if (ids.empty()) ids.push_back("ALL");
  std::vector<std::string> expanded;
  for (const auto& id : ids) {
    if (id == "ALL") {
      for (const auto& v : verifiers()) expanded.push_back(v.id);
    } else {
      find_verifier(id);
      expanded.push_back(id);
    }
  }
  std::vector<VerifyReport> reports(expanded.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < expanded.size(); ++i) reports[i] = run_verifier(expanded[i], nmax);
  } else {
    for (std::size_t base = 0; base < expanded.size(); base += jobs) {
      std::vector<std::future<VerifyReport>> batch;
      for (std::size_t i = base; i < std::min(expanded.size(), base + jobs); ++i)
        batch.push_back(std::async(std::launch::async, [&, i] { return run_verifier(expanded[i], nmax); }));
      for (std::size_t i = 0; i < batch.size(); ++i) reports[base + i] = batch[i].get();
    }
  }
  const Format f = parse_format(g.format);
  const VerifyReport* failed = nullptr;
  json out = json::array();
  for (const auto& r : reports) {
    if (!r.ok && failed == nullptr) failed = &r;
    if (f == Format::kJson) {
      out.push_back({{"id", r.id}, {"ok", r.ok}, {"checks", r.lines}});
    } else {
      std::cout << "== " << r.id << " " << (r.ok ? "PASS" : "FAIL") << "\n";
      for (const auto& line : r.lines) std::cout << "  " << line << "\n";
    }
  }
  if (f == Format::kJson) std::cout << out.dump() << "\n";
  if (failed != nullptr) {
    std::cerr << "verification failed: " << failed->id << ": " << failed->first_failure << "\n";
    return 1;
  }
  if (f != Format::kJson) std::cout << "all " << reports.size() << " identities verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials, lattice paths and heaps of pieces in exact arithmetic", "heaporth"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--spec", g.spec, "Coefficients: symbolic, catalan, fib, or custom:<file.json>")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}))
      ->envname("HEAPORTH_FORMAT")
      ->capture_default_str();

  int rc = 0;

  auto* poly = app.add_subcommand("poly", "Print the basis polynomial Q_n");
  unsigned poly_n = 0;
  bool poly_all = false;
  poly->add_option("-n", poly_n, "Degree")->required();
  poly->add_flag("--all", poly_all, "Print Q_0 .. Q_n");
  poly->callback([&] { rc = cmd_poly(g, poly_n, poly_all); });

  auto* moments = app.add_subcommand("moments", "Print the moments mu_0 .. mu_nmax");
  unsigned mom_nmax = 8;
  std::string mom_method = "stieltjes";
  moments->add_option("--nmax", mom_nmax, "Largest moment index")->capture_default_str();
  moments->add_option("--method", mom_method, "stieltjes or paths")
      ->check(CLI::IsMember({"stieltjes", "paths"}))
      ->capture_default_str();
  moments->callback([&] { rc = cmd_moments(g, mom_nmax, mom_method); });

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant d_n or its shifted variant chi_n");
  std::string hk_which = "d";
  unsigned hk_n = 0;
  hankel->add_option("--which", hk_which, "d or chi")->check(CLI::IsMember({"d", "chi"}))->capture_default_str();
  hankel->add_option("-n", hk_n, "Index")->required();
  hankel->callback([&] { rc = cmd_hankel(g, hk_which, hk_n); });

  auto* expand = app.add_subcommand("expand", "Expand x^N in the basis");
  std::string ex_target;
  expand->add_option("--target", ex_target, "Monomial x^N")->required();
  expand->callback([&] { rc = cmd_expand(g, ex_target); });

  auto* cf = app.add_subcommand("cf", "Continued-fraction convergent and its series");
  std::optional<unsigned> cf_depth;
  unsigned cf_order = 8;
  cf->add_option("--depth", cf_depth, "Convergent depth (default: enough for --order)");
  cf->add_option("--order", cf_order, "Series order")->capture_default_str();
  cf->callback([&] { rc = cmd_cf(g, cf_depth, cf_order); });

  auto* heap = app.add_subcommand("heap", "Heaps of monomers and dimers");
  std::string heap_action;
  std::vector<std::string> heap_args;
  heap->add_option("action", heap_action, "settle, canon, eq, from-path, to-path")
      ->required()
      ->check(CLI::IsMember({"settle", "canon", "eq", "from-path", "to-path"}));
  heap->add_option("words", heap_args, "Quoted words, e.g. \"m0 d2 m2\"");
  heap->callback([&] { rc = cmd_heap(g, heap_action, heap_args); });

  auto* path = app.add_subcommand("path", "Motzkin paths");
  std::string path_action;
  std::vector<std::string> path_args;
  unsigned path_n = 4, path_start = 0, path_end = 0;
  path->add_option("action", path_action, "enum, word, weight")
      ->required()
      ->check(CLI::IsMember({"enum", "word", "weight"}));
  path->add_option("input", path_args, "Path \"NE,E,SE@r\" or word \"a0 c1 b1\"");
  path->add_option("-n", path_n, "Length for enum")->capture_default_str();
  path->add_option("--start", path_start, "Start level for enum")->capture_default_str();
  path->add_option("--end", path_end, "End level for enum")->capture_default_str();
  path->callback([&] { rc = cmd_path(g, path_action, path_args, path_n, path_start, path_end); });

  auto* verify = app.add_subcommand("verify", "Certify named identities (ALL for every one)");
  std::vector<std::string> vf_ids;
  std::optional<unsigned> vf_nmax;
  unsigned vf_jobs = 1;
  verify->add_option("ids", vf_ids, "Identity ids");
  verify->add_option("--nmax", vf_nmax, "Override each verifier's default size");
  verify->add_option("--jobs", vf_jobs, "Run up to k verifiers concurrently")->check(CLI::PositiveNumber);
  verify->callback([&] { rc = cmd_verify(g, vf_ids, vf_nmax, vf_jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return 2;
  }
  return rc;
}
