#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "endofree/suites.hpp"

using namespace endofree;

namespace {

long long default_budget() {
  if (const char* env = std::getenv("ENDOFREE_BUDGET")) return std::atoll(env);
  return 1000000;
}

BijectionSpec parse_bijection(const std::string& text) {
  if (text == "identity") return BijectionSpec::identity();
  if (text == "mirror") return BijectionSpec::mirror();
  if (text == "inversion") return BijectionSpec::inversion();
  throw error("unknown bijection spec: " + text);
}

std::map<long long, long long> parse_prime_pairs(const std::string& body) {
  std::map<long long, long long> pi;
  size_t start = 0;
  while (start < body.size()) {
    size_t comma = body.find(',', start);
    std::string pair = body.substr(start, comma == std::string::npos ? comma : comma - start);
    size_t arrow = pair.find("<->");
    if (arrow == std::string::npos) throw error("prime pair needs '<->': " + pair);
    long long a = std::stoll(pair.substr(0, arrow));
    long long b = std::stoll(pair.substr(arrow + 3));
    pi[a] = b;
    pi[b] = a;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return pi;
}

void emit(const SuiteReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
    return;
  }
  std::cout << "suite: " << rep.suite << "  (" << rep.variety.name() << ", rank "
            << rep.variety.rank << ")\n";
  for (const auto& c : rep.checks) {
    std::cout << "  " << c.name << ": " << status_name(c.verdict.status)
              << "  [" << c.verdict.checked << " checked]\n";
    if (c.verdict.status != Status::Holds && !c.verdict.witness.is_null())
      std::cout << "    witness: " << c.verdict.witness.dump() << "\n";
  }
  if (!rep.solutions.empty()) {
    std::cout << "  solutions:";
    for (const auto& s : rep.solutions) std::cout << " " << s;
    std::cout << "\n";
  }
  std::cout << "  wall_ms: " << rep.wall_ms << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"endofree: free-algebra endomorphism monoids and their automorphisms"};
  app.require_subcommand(1);

  std::string variety_name = "free-semigroup", ring_text = "Z", format = "text";
  int rank = 2;
  std::uint64_t seed = 0;
  int sample_count = 100;
  long long budget = default_budget();
  app.add_option("--variety", variety_name, "free-semigroup|free-group|free-inverse|free-module");
  app.add_option("--rank", rank, "number of generators");
  app.add_option("--ring", ring_text, "Z|Q|GF(p,m)|GF(q) (modules only)");
  app.add_option("--seed", seed, "sample seed");
  app.add_option("--samples", sample_count, "sample count");
  app.add_option("--budget", budget, "elementary-check budget");
  app.add_option("--format", format, "text|json");

  auto* canon = app.add_subcommand("canon", "canonical form of a term");
  canon->fallthrough();
  std::string term_text;
  canon->add_option("term", term_text, "term over the variety signature")->required();

  auto* matrix = app.add_subcommand("matrix", "basis matrix of an automorphism of End(F)");
  matrix->fallthrough();
  std::string aut_text = "identity";
  matrix->add_option("--aut", aut_text, "automorphism spec");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite_name;
  verify->add_option("suite", suite_name,
                     "semigroup-binary|monogenic|inverse-system|inverse-idempotent|"
                     "group-words|mirror-classification|module-semi-inner|quasi-inner-battery")
      ->required();
  int max_len = 6, max_syllables = 3, max_exp = 2;
  long long mult_bound = 50;
  std::string reading = "A", primes_text = "2<->3", sigma_text, ring_aut_text = "identity";
  std::string bijection_text = "identity";
  bool cyclic = false;
  std::vector<std::string> fixture_texts;
  verify->add_option("--max-len", max_len, "word-length bound");
  verify->add_option("--max-syllables", max_syllables, "syllable bound (group words)");
  verify->add_option("--max-exp", max_exp, "exponent bound (group words)");
  verify->add_option("--reading", reading, "A|B (inverse system)");
  verify->add_option("--primes", primes_text, "prime transpositions, e.g. 2<->3,5<->7");
  verify->add_flag("--cyclic", cyclic, "use the infinite cyclic group (monogenic)");
  verify->add_option("--mult-bound", mult_bound, "multiplicativity bound (monogenic)");
  verify->add_option("--sigma", sigma_text, "endomorphism images (module-semi-inner)");
  verify->add_option("--ring-aut", ring_aut_text, "identity|frobenius^e (module-semi-inner)");
  verify->add_option("--bijection", bijection_text, "identity|mirror|inversion (inverse-idempotent)");
  verify->add_option("--aut", fixture_texts, "fixture spec(s) (quasi-inner-battery)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    VarietySpec var = parse_variety(variety_name, rank, ring_text);
    SampleSpec samples{sample_count, 5, seed};

    if (canon->parsed()) {
      std::cout << print_element(var, canonicalize(parse_term(term_text, var), var)) << "\n";
      return 0;
    }
    if (matrix->parsed()) {
      BasisMatrix m = matrix_of(parse_endaut(var, aut_text));
      std::cout << print_matrix_table(m) << print_matrix(m) << "\n";
      return 0;
    }

    SuiteReport rep;
    if (suite_name == "semigroup-binary") {
      rep = suite_semigroup_binary(max_len);
    } else if (suite_name == "monogenic") {
      rep = suite_monogenic(parse_prime_pairs(primes_text), cyclic, mult_bound, samples);
    } else if (suite_name == "inverse-system") {
      if (reading != "A" && reading != "B") throw error("--reading must be A or B");
      rep = suite_inverse_system(max_len, reading[0]);
    } else if (suite_name == "inverse-idempotent") {
      rep = suite_inverse_idempotent(VarietySpec::free_inverse(rank),
                                     parse_bijection(bijection_text), max_len);
    } else if (suite_name == "group-words") {
      rep = suite_group_words(max_syllables, max_exp);
    } else if (suite_name == "mirror-classification") {
      rep = suite_mirror_classification(rank, samples);
    } else if (suite_name == "module-semi-inner") {
      Ring ring = parse_ring(ring_text);
      VarietySpec mod = VarietySpec::free_module(ring, rank);
      Endo sigma = sigma_text.empty() ? identity_endo(mod) : parse_endo(mod, sigma_text);
      RingAut theta;
      if (ring_aut_text == "identity")
        theta = RingAut{0};
      else if (ring_aut_text == "frobenius")
        theta = RingAut{1};
      else if (ring_aut_text.rfind("frobenius^", 0) == 0)
        theta = RingAut{std::stoi(ring_aut_text.substr(10))};
      else
        throw error("unknown ring automorphism: " + ring_aut_text);
      rep = suite_module_semi_inner(ring, theta, sigma, samples);
    } else if (suite_name == "quasi-inner-battery") {
      std::vector<EndAut> fixtures;
      for (const auto& t : fixture_texts) fixtures.push_back(parse_endaut(var, t));
      if (fixtures.empty()) fixtures.push_back(EndAut::identity(var));
      rep = suite_quasi_inner_battery(var, fixtures, budget, seed);
    } else {
      throw error("unknown suite: " + suite_name);
    }
    emit(rep, format);
    return rep.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
