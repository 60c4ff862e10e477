// tempo: command-line front end for the timed-automata library.
//
// Exit codes: 0 accept/pass, 1 reject/counterexample, 2 usage or parse
// error, 3 inconclusive.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempo/tempo.hpp"
#include "tempo/testing/suites.hpp"

namespace {

using namespace tempo;
using json = nlohmann::json;

enum Exit { ok = 0, no = 1, usage = 2, inconclusive = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
T load(const std::string& path) {
  auto a = parse_automaton_as<T>(slurp(path));
  require_valid(a);
  return a;
}

AnyAutomaton load_any(const std::string& path) { return parse_automaton(slurp(path)); }

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

int verdict(bool yes, const char* y = "accept", const char* n = "reject") {
  std::cout << (yes ? y : n) << '\n';
  return yes ? ok : no;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

json to_json(const testing::SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"passed", c.passed()}, {"total", c.total}, {"failures", c.failures}};
    if (c.criterion) j["criterion"] = c.criterion;
    if (!c.note.empty()) j["note"] = c.note;
    if (c.failures) j["first_failure"] = c.first_failure;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempo: timed automata, regions and timed shuffle"};
  app.require_subcommand(1);
  int code = ok;

  std::string file, file2, word, out;

  auto* member_cmd = app.add_subcommand("member", "finite-word membership");
  member_cmd->add_option("automaton", file, "automaton file")->required();
  member_cmd->add_option("--word,-w", word, "timed word, e.g. \"1/2 a 1 a\"")->required();
  member_cmd->callback([&] {
    auto a = load<TimedAutomaton>(file);
    code = verdict(member(a, parse_timed_word(word, a.alphabet)));
  });

  auto* omega_cmd = app.add_subcommand("member-omega", "lasso membership for Büchi automata");
  omega_cmd->add_option("automaton", file)->required();
  omega_cmd->add_option("--word,-w", word, "lasso word \"PREFIX | PERIOD\"")->required();
  omega_cmd->callback([&] {
    auto a = load<TimedBuchiAutomaton>(file);
    code = verdict(member_lasso(a, parse_lasso(word, a.alphabet)));
  });

  std::size_t cap = StopwatchOptions{}.silent_cap;
  auto* sw_cmd = app.add_subcommand("member-sw", "stopwatch membership");
  sw_cmd->add_option("automaton", file)->required();
  sw_cmd->add_option("--word,-w", word)->required();
  sw_cmd->add_option("--cap", cap, "guarded silent moves per gap")->capture_default_str();
  sw_cmd->callback([&] {
    auto any = load_any(file);
    StopwatchAutomaton a = std::holds_alternative<TimedAutomaton>(any)
                               ? StopwatchAutomaton::from(std::get<TimedAutomaton>(any))
                               : std::get<StopwatchAutomaton>(std::move(any));
    require_valid(a);
    const auto v = decide_stopwatch(a, parse_timed_word(word, a.body.alphabet), {cap});
    std::cout << to_string(v) << '\n';
    code = v == Verdict::accept ? ok : v == Verdict::reject ? no : inconclusive;
  });

  auto* det_cmd = app.add_subcommand("det-check", "report nondeterministic transition pairs");
  det_cmd->add_option("automaton", file)->required();
  det_cmd->callback([&] {
    auto report = std::visit(
        [](const auto& a) -> DeterminismReport {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, StopwatchAutomaton>)
            return is_deterministic(a.body);
          else
            return is_deterministic(a);
        },
        load_any(file));
    if (!report.single_initial) std::cout << "several initial locations\n";
    for (auto [i, j] : report.overlapping) std::cout << "overlap: transitions " << i << " and " << j << '\n';
    code = verdict(report.deterministic, "deterministic", "nondeterministic");
  });

  auto* comp_cmd = app.add_subcommand("complement", "complement a deterministic automaton");
  comp_cmd->add_option("automaton", file)->required();
  comp_cmd->add_option("-o,--output", out);
  comp_cmd->callback([&] { emit(to_text(complement_det(load<TimedAutomaton>(file))), out); });

  auto* empty_cmd = app.add_subcommand("empty", "region-graph emptiness (exit 0 when empty)");
  empty_cmd->add_option("automaton", file)->required();
  empty_cmd->callback([&] { code = verdict(is_empty(load<TimedAutomaton>(file)), "empty", "nonempty"); });

  auto* empty_omega_cmd = app.add_subcommand("empty-omega", "Büchi emptiness (exit 0 when empty)");
  empty_omega_cmd->add_option("automaton", file)->required();
  empty_omega_cmd->callback(
      [&] { code = verdict(is_empty_buchi(load<TimedBuchiAutomaton>(file)), "empty", "nonempty"); });

  auto* witness_cmd = app.add_subcommand("witness", "print an accepted word");
  witness_cmd->add_option("automaton", file)->required();
  witness_cmd->callback([&] {
    try {
      std::cout << to_string(witness(load<TimedAutomaton>(file))) << '\n';
    } catch (const EmptyLanguage&) {
      std::cout << "empty\n";
      code = no;
    }
  });

  auto* untime_cmd = app.add_subcommand("untime", "letter projection as a zero-clock automaton");
  untime_cmd->add_option("automaton", file)->required();
  untime_cmd->add_option("-o,--output", out);
  untime_cmd->callback([&] {
    auto a = load<TimedAutomaton>(file);
    emit(to_text(to_timed_automaton(untime(a), a.name + "_untimed")), out);
  });

  std::string name, sigma = "a", letter = "a", c = "c";
  std::size_t n = 2;
  auto* gadget_cmd = app.add_subcommand("gadget", "print a gadget automaton");
  gadget_cmd->add_option("name", name)->required()->check(CLI::IsMember({"A", "An", "R1", "R2", "R3", "L2"}));
  gadget_cmd->add_option("-n", n, "pairs for An")->capture_default_str();
  gadget_cmd->add_option("--sigma", sigma, "comma-separated alphabet")->capture_default_str();
  gadget_cmd->add_option("-a,--letter", letter)->capture_default_str();
  gadget_cmd->add_option("-c,--sep", c, "separator for L2")->capture_default_str();
  gadget_cmd->add_option("-o,--output", out);
  gadget_cmd->callback([&] {
    const auto s = split_commas(sigma);
    TimedAutomaton g;
    if (name == "A") g = gadget_A(s, letter);
    if (name == "An") g = gadget_An(s, letter, n);
    if (name == "R1") g = gadget_R1();
    if (name == "R2") g = gadget_R2();
    if (name == "R3") g = gadget_R3();
    if (name == "L2") g = gadget_L2(s, c);
    emit(to_text(g), out);
  });

  std::string kind;
  std::optional<std::string> a_letter;
  auto* build_cmd = app.add_subcommand("build", "build a reduction automaton from L");
  build_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"thm1", "thm2", "thm4", "tba"}));
  build_cmd->add_option("-L", file, "automaton for L")->required();
  build_cmd->add_option("-c", c, "fresh separator letter")->required();
  build_cmd->add_option("-n", n, "clock budget for thm2")->capture_default_str();
  build_cmd->add_option("-a", a_letter, "gadget letter (default: first of the alphabet)");
  build_cmd->add_option("-o,--output", out);
  build_cmd->callback([&] {
    if (kind == "tba") {
      emit(to_text(build_tba_reduction(load<TimedBuchiAutomaton>(file), c, a_letter).built), out);
      return;
    }
    auto l = load<TimedAutomaton>(file);
    auto r = kind == "thm1" ? build_thm1(l, c, a_letter)
             : kind == "thm2" ? build_thm2(l, n, c, a_letter)
                              : build_thm4(l, c);
    emit(to_text(r.built), out);
  });

  auto* union_cmd = app.add_subcommand("union", "language union");
  union_cmd->add_option("left", file)->required();
  union_cmd->add_option("right", file2)->required();
  union_cmd->add_option("-o,--output", out);
  union_cmd->callback([&] {
    auto x = load_any(file), y = load_any(file2);
    if (x.index() != y.index() || std::holds_alternative<StopwatchAutomaton>(x))
      throw UsageError("union needs two automata of the same kind (finite or Büchi)");
    if (auto* p = std::get_if<TimedAutomaton>(&x))
      emit(to_text(union_of(*p, std::get<TimedAutomaton>(y))), out);
    else
      emit(to_text(union_of(std::get<TimedBuchiAutomaton>(x), std::get<TimedBuchiAutomaton>(y))), out);
  });

  auto* product_cmd = app.add_subcommand("product", "language intersection");
  product_cmd->add_option("left", file)->required();
  product_cmd->add_option("right", file2)->required();
  product_cmd->add_option("-o,--output", out);
  product_cmd->callback(
      [&] { emit(to_text(product(load<TimedAutomaton>(file), load<TimedAutomaton>(file2))), out); });

  auto* concat_cmd = app.add_subcommand("concat-sep", "left . (R x {sep}) . right");
  concat_cmd->add_option("left", file)->required();
  concat_cmd->add_option("right", file2)->required();
  concat_cmd->add_option("-c,--sep", c)->required();
  concat_cmd->add_option("-o,--output", out);
  concat_cmd->callback([&] {
    auto a = load<TimedAutomaton>(file);
    auto b = load_any(file2);
    if (auto* p = std::get_if<TimedAutomaton>(&b))
      emit(to_text(concat_sep(a, c, *p)), out);
    else if (auto* q = std::get_if<TimedBuchiAutomaton>(&b))
      emit(to_text(concat_sep(a, c, *q)), out);
    else
      throw UsageError("concat-sep: right operand cannot be a stopwatch automaton");
  });

  std::string x, y;
  auto* sm_cmd = app.add_subcommand("shuffle-member", "is W in the shuffle of X and Y");
  sm_cmd->add_option("w", word)->required();
  sm_cmd->add_option("x", x)->required();
  sm_cmd->add_option("y", y)->required();
  sm_cmd->callback([&] {
    const auto w = parse_timed_word(word), xw = parse_timed_word(x), yw = parse_timed_word(y);
    const auto d = shuffle_decompose(w, xw, yw);
    if (d) {
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << (d->assignment[i] == Side::left ? 'x' : 'y') << (i + 1 < w.size() ? " " : "");
      std::cout << '\n';
    }
    code = verdict(d.has_value());
  });

  auto* sa_cmd = app.add_subcommand("shuffle-aut", "stopwatch automaton for the shuffle of two languages");
  sa_cmd->add_option("left", file)->required();
  sa_cmd->add_option("right", file2)->required();
  sa_cmd->add_option("-o,--output", out);
  sa_cmd->callback(
      [&] { emit(to_text(shuffle_automaton(load<TimedAutomaton>(file), load<TimedAutomaton>(file2))), out); });

  std::size_t count = 5;
  std::uint64_t seed = 0;
  auto* ss_cmd = app.add_subcommand("shuffle-sample", "random members of the shuffle of X and Y");
  ss_cmd->add_option("x", x)->required();
  ss_cmd->add_option("y", y)->required();
  ss_cmd->add_option("--count,-k", count)->capture_default_str();
  ss_cmd->add_option("--seed", seed)->capture_default_str();
  ss_cmd->callback([&] {
    Sampler s(seed);
    for (const auto& w : sample_shuffle(parse_timed_word(x), parse_timed_word(y), count, s))
      std::cout << to_string(w) << '\n';
  });

  GridSpec grid;
  std::string denoms = "1,2,4";
  auto* grid_cmd = app.add_subcommand("grid-univ", "search a word grid for a rejected word");
  grid_cmd->add_option("automaton", file)->required();
  grid_cmd->add_option("--max-len", grid.max_length)->capture_default_str();
  grid_cmd->add_option("--denoms", denoms)->capture_default_str();
  grid_cmd->add_option("--max-num", grid.max_numerator)->capture_default_str();
  grid_cmd->callback([&] {
    grid.denominators.clear();
    for (const auto& d : split_commas(denoms)) grid.denominators.push_back(std::stoll(d));
    const auto v = bounded_universality(load<TimedAutomaton>(file), grid);
    if (v.counterexample) {
      std::cout << "counterexample: " << to_string(*v.counterexample) << '\n';
      code = no;
    } else {
      std::cout << "no counterexample among " << v.words_checked << " grid words\n";
    }
  });

  auto* suite_cmd = app.add_subcommand("suite", "run a seeded property suite and print a JSON report");
  std::vector<std::string> names = testing::suite_names();
  names.push_back("all");
  suite_cmd->add_option("name", name)->required()->check(CLI::IsMember(names));
  suite_cmd->add_option("--seed", seed)->capture_default_str();
  suite_cmd->callback([&] {
    json report;
    bool pass = true;
    if (name == "all") {
      report = json::array();
      for (const auto& s : testing::suite_names()) {
        auto r = testing::run_suite(s, seed);
        pass = pass && r.passed();
        report.push_back(to_json(r));
      }
    } else {
      auto r = testing::run_suite(name, seed);
      pass = r.passed();
      report = to_json(r);
    }
    std::cout << report.dump(2) << '\n';
    code = pass ? ok : no;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  } catch (const InconclusiveError& e) {
    std::cout << "inconclusive\n";
    std::cerr << "tempo: " << e.what() << '\n';
    return inconclusive;
  } catch (const std::exception& e) {
    std::cerr << "tempo: " << e.what() << '\n';
    return usage;
  }
  return code;
}
