// circspec: command-line access to circulant spectra, pair classification,
// the NCSC families, exhaustive search and the verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
// check-pair --verdict-exit instead exits 10 isomorphic, 11 cospectral,
// 12 ncsc, 13 unrelated.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "circspec/cospectral.hpp"
#include "circspec/io.hpp"
#include "circspec/prime.hpp"
#include "circspec/spectra.hpp"
#include "circspec/verify.hpp"

namespace {

using circspec::CirculantGraph;
using circspec::ConnectionSet;
using circspec::io::Json;
namespace cs = circspec::cospectral;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

const std::map<std::string, std::string> kFormats{{"json", "json"}, {"csv", "csv"}, {"table", "table"}};

std::string inertia_string(const circspec::Inertia& in) {
  return std::to_string(in.positive) + "," + std::to_string(in.negative) + "," + std::to_string(in.zero);
}

std::string set_text(const ConnectionSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  return out + "}";
}

int verdict_exit(const circspec::PairVerdict& v) {
  const auto c = circspec::verdict_class(v);
  if (c == "isomorphic") return 10;
  if (c == "cospectral") return 11;
  if (c == "ncsc") return 12;
  return 13;
}

void print_verdict_table(std::ostream& out, const circspec::PairVerdict& v) {
  out << "class            " << circspec::verdict_class(v) << "\n"
      << "isomorphic       " << circspec::to_string(v.isomorphic);
  if (v.multiplier) out << " (q=" << *v.multiplier << ")";
  out << "\n"
      << "cospectral       " << (v.cospectral ? "yes" : "no") << "\n"
      << "sing. cospectral " << (v.singularly_cospectral ? "yes" : "no") << "\n"
      << "same inertia     " << (v.same_inertia ? "yes" : "no") << "  (" << inertia_string(v.inertia1) << " vs "
      << inertia_string(v.inertia2) << ")\n";
}

void print_verdict_csv(std::ostream& out, const ConnectionSet& a, const ConnectionSet& b,
                       const circspec::PairVerdict& v) {
  out << "n,set1,set2,class,isomorphic,multiplier,cospectral,sc,same_inertia,inertia1,inertia2\n"
      << a.order() << ",\"" << circspec::io::set_string(a) << "\",\"" << circspec::io::set_string(b) << "\","
      << circspec::verdict_class(v) << "," << circspec::to_string(v.isomorphic) << ","
      << (v.multiplier ? std::to_string(*v.multiplier) : "") << "," << std::boolalpha << v.cospectral << ","
      << v.singularly_cospectral << "," << v.same_inertia << ",\"" << inertia_string(v.inertia1) << "\",\""
      << inertia_string(v.inertia2) << "\"\n";
}

struct SpectrumArgs {
  int n = 0;
  std::vector<int> gens;
  std::string format = "json";
  long precision = 128;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const CirculantGraph g(ConnectionSet::make(a.n, a.gens));
  const auto spectrum = circspec::spectra::spectrum(g, a.precision);
  const auto sums = circspec::spectra::power_sums(g, 8);
  const auto in = circspec::spectra::inertia(g);
  if (a.format == "json") {
    std::cout << circspec::io::spectrum_json(g, spectrum, sums, in).dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << "j,lambda\n";
    for (int j = 0; j < a.n; ++j) {
      std::cout << j << "," << Json(spectrum.values[static_cast<std::size_t>(j)]).dump() << "\n";
    }
  } else {
    std::cout << "n = " << a.n << "  S = " << set_text(g.connection_set()) << "\n";
    for (int j = 0; j < a.n; ++j) {
      std::cout << "  lambda_" << std::left << std::setw(4) << j << std::right << std::setprecision(12)
                << spectrum.values[static_cast<std::size_t>(j)] << "\n";
    }
    std::cout << "power sums p_1..p_8:";
    for (const auto& p : sums.sums()) std::cout << " " << p.get_str();
    std::cout << "\ninertia (pos,neg,zero) = " << inertia_string(in) << "\n";
  }
  return 0;
}

struct PairArgs {
  int n = 0;
  std::vector<int> gens1, gens2;
  std::string format = "json";
  bool verdict_exit = false;
};

int cmd_check_pair(const PairArgs& a) {
  const CirculantGraph g1(ConnectionSet::make(a.n, a.gens1));
  const CirculantGraph g2(ConnectionSet::make(a.n, a.gens2));
  const auto v = cs::classify_pair(g1, g2);
  if (a.format == "json") {
    Json j;
    j["graph1"] = circspec::io::graph_json(g1.connection_set());
    j["graph2"] = circspec::io::graph_json(g2.connection_set());
    j["verdict"] = circspec::io::verdict_json(v);
    std::cout << j.dump() << "\n";
  } else if (a.format == "csv") {
    print_verdict_csv(std::cout, g1.connection_set(), g2.connection_set(), v);
  } else {
    std::cout << "G1 = " << set_text(g1.connection_set()) << "  G2 = " << set_text(g2.connection_set())
              << "  (n = " << a.n << ")\n";
    print_verdict_table(std::cout, v);
  }
  return a.verdict_exit ? verdict_exit(v) : 0;
}

struct FamilyArgs {
  std::string name;
  int k = -1;
  int s = -1;
  int alpha = -1;
  int n = -1;
  std::vector<int> gens;
  std::string format = "json";
};

int cmd_family(const FamilyArgs& a) {
  auto need = [&](int value, const char* flag) {
    if (value < 0) throw CLI::RequiredError(std::string("--") + flag);
    return value;
  };
  Json params;
  cs::GraphPair pair{CirculantGraph(2, {1}), CirculantGraph(2, {1})};
  std::string expectation;
  if (a.name == "lemma21") {
    pair = cs::family_lemma21(need(a.n, "n"), a.gens);
    params["n"] = a.n;
    params["gens"] = a.gens;
    expectation = "singularly cospectral";
  } else if (a.name == "thm31") {
    pair = cs::family_thm31(need(a.k, "k"));
    params["k"] = a.k;
    expectation = "NCSC with different inertia";
  } else if (a.name == "thm32") {
    pair = cs::family_thm32(need(a.alpha, "alpha"));
    params["alpha"] = a.alpha;
    expectation = "NCSC with the same inertia";
  } else {
    pair = cs::family_thm44(need(a.k, "k"), need(a.s, "s"));
    params["k"] = a.k;
    params["s"] = a.s;
    expectation = "NCSC";
  }
  const auto v = cs::classify_pair(pair.first, pair.second);
  bool holds = v.singularly_cospectral;
  if (a.name == "thm31") holds = v.ncsc() && !v.same_inertia;
  if (a.name == "thm32") holds = v.ncsc() && v.same_inertia;
  if (a.name == "thm44") holds = v.ncsc();

  if (a.format == "json") {
    Json j;
    j["family"] = a.name;
    j["params"] = params;
    j["graph1"] = circspec::io::graph_json(pair.first.connection_set());
    j["graph2"] = circspec::io::graph_json(pair.second.connection_set());
    j["verdict"] = circspec::io::verdict_json(v);
    j["expected"] = expectation;
    j["holds"] = holds;
    std::cout << j.dump() << "\n";
  } else if (a.format == "csv") {
    print_verdict_csv(std::cout, pair.first.connection_set(), pair.second.connection_set(), v);
  } else {
    std::cout << a.name << " " << params.dump() << "\n"
              << "G1 = " << set_text(pair.first.connection_set()) << "\n"
              << "G2 = " << set_text(pair.second.connection_set()) << "\n";
    print_verdict_table(std::cout, v);
    std::cout << "expected         " << expectation << ": " << (holds ? "holds" : "VIOLATED") << "\n";
  }
  return holds ? 0 : kExitVerification;
}

struct SearchArgs {
  int n = 0;
  int max_s = 0;
  std::string output;
  int workers = 1;
  std::size_t pair_cap = 5'000'000;
  std::string format = "json";
};

int cmd_search(const SearchArgs& a) {
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output, std::ios::binary);
    if (!file) throw circspec::DomainError("cannot open output file " + a.output);
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  const bool csv = a.format == "csv";
  if (csv) out << circspec::io::csv_header_search() << "\n";
  const auto summary = cs::search_ncsc(
      a.n, a.max_s,
      [&](const cs::SearchRecord& r) {
        out << (csv ? circspec::io::search_record_csv(r) : circspec::io::search_record_json(r).dump()) << "\n";
      },
      {a.workers, a.pair_cap});
  const auto tail = circspec::io::search_summary_json(summary);
  if (csv) {
    out << "# " << tail.dump() << "\n";
  } else {
    out << tail.dump() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  circspec::verify::SuiteOptions opts;
};

int cmd_verify(const VerifyArgs& a) {
  const auto results = circspec::verify::run_suite(a.suite, a.opts);
  const auto report = circspec::verify::report_json(a.suite, results);
  std::cout << report.dump(2) << "\n";
  return report["passed"].get<bool>() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circspec: spectra, singular cospectrality and isomorphism of circulant graphs"};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, power sums p_1..p_8 and inertia of one graph");
  spectrum->add_option("--n", spectrum_args.n, "Order n")->required()->check(CLI::Range(2, 1 << 20));
  spectrum->add_option("--gens", spectrum_args.gens, "Generators (half-set), comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--format", spectrum_args.format)->transform(CLI::IsMember(kFormats));
  spectrum->add_option("--precision", spectrum_args.precision, "Working precision in bits")
      ->check(CLI::Range(53L, 1L << 16));

  PairArgs pair_args;
  auto* pair = app.add_subcommand("check-pair", "Classify a pair of circulant graphs");
  pair->add_option("--n", pair_args.n)->required()->check(CLI::Range(2, 1 << 20));
  pair->add_option("--gens1", pair_args.gens1)->required()->delimiter(',')->check(CLI::PositiveNumber);
  pair->add_option("--gens2", pair_args.gens2)->required()->delimiter(',')->check(CLI::PositiveNumber);
  pair->add_option("--format", pair_args.format)->transform(CLI::IsMember(kFormats));
  pair->add_flag("--verdict-exit", pair_args.verdict_exit,
                 "Exit 10 isomorphic, 11 cospectral, 12 ncsc, 13 unrelated");

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "Build and classify a pair from one of the NCSC families");
  family->add_option("name", family_args.name, "lemma21, thm31, thm32 or thm44")
      ->required()
      ->check(CLI::IsMember({"lemma21", "thm31", "thm32", "thm44"}));
  family->add_option("--k", family_args.k, "Half order k (thm31, thm44)");
  family->add_option("--s", family_args.s, "Generator count s (thm44)");
  family->add_option("--alpha", family_args.alpha, "Family parameter alpha (thm32)");
  family->add_option("--n", family_args.n, "Even order n (lemma21)");
  family->add_option("--gens", family_args.gens, "Generators (lemma21)")->delimiter(',')->check(CLI::PositiveNumber);
  family->add_option("--format", family_args.format)->transform(CLI::IsMember(kFormats));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exhaustive NCSC search, newline-delimited JSON");
  search->add_option("--n", search_args.n)->required()->check(CLI::Range(4, 4096));
  search->add_option("--max-s", search_args.max_s)->required()->check(CLI::PositiveNumber);
  search->add_option("--output", search_args.output, "Output path (default stdout)");
  search->add_option("--workers", search_args.workers)->check(CLI::Range(1, 256));
  search->add_option("--pair-cap", search_args.pair_cap, "Maximum number of pairs to examine");
  search->add_option("--format", search_args.format)->transform(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; nonzero exit on any violation");
  verify->add_option("suite", verify_args.suite, "all, inertia, bounds, prime or families")
      ->check(CLI::IsMember({"all", "inertia", "bounds", "prime", "families"}));
  verify->add_option("--max-k", verify_args.opts.max_k)->check(CLI::Range(6, 10000));
  verify->add_option("--max-alpha", verify_args.opts.max_alpha)->check(CLI::Range(0, 1000));
  verify->add_option("--max-p", verify_args.opts.max_p)->check(CLI::Range(3, 31));
  verify->add_option("--max-s", verify_args.opts.max_s)->check(CLI::Range(2, 10000));
  verify->add_option("--lemma-max-k", verify_args.opts.lemma_max_k)->check(CLI::Range(6, 10000));
  verify->add_option("--ncsc-max-k", verify_args.opts.ncsc_max_k)->check(CLI::Range(6, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_args);
    if (*pair) return cmd_check_pair(pair_args);
    if (*family) return cmd_family(family_args);
    if (*search) return cmd_search(search_args);
    if (*verify) return cmd_verify(verify_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: missing " << e.what() << "\n";
    return kExitUsage;
  } catch (const circspec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const circspec::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const circspec::RefinementExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
