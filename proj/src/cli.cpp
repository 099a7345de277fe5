#include "selfsim/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "selfsim/constructions.hpp"
#include "selfsim/engine.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/machines.hpp"
#include "selfsim/padic.hpp"
#include "selfsim/suites.hpp"

namespace selfsim {
namespace {

using nlohmann::json;

Eta parse_eta(const std::string& spec) {
  const std::string grammar = "eta spec is int:<v> | rat:<p>/<q> | seed:<u64>:<precision>";
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidInput(grammar);
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "int") return Eta::integer(std::stoll(rest));
  if (kind == "rat") return Eta::rational(BigRat(rest));
  if (kind == "seed") {
    auto second = rest.find(':');
    if (second == std::string::npos) throw InvalidInput(grammar);
    std::uint64_t seed = std::stoull(rest.substr(0, second), nullptr, 0);
    unsigned prec = static_cast<unsigned>(std::stoul(rest.substr(second + 1)));
    return Eta::stream(seed, prec);
  }
  throw InvalidInput("unknown eta kind '" + kind + "'; " + grammar);
}

MachinePtr parse_machine_json(const json& j) {
  if (j.is_string()) return parse_machine_json(json{{"type", j.get<std::string>()}});
  if (!j.is_object() || !j.contains("type"))
    throw InvalidInput("machine spec needs a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "adding") return adding_machine();
  if (type == "dyadic") return dyadic_machine(parse_eta(j.at("eta").get<std::string>()));
  if (type == "zomega")
    return zomega_machine(parse_eta(j.at("eta").get<std::string>()),
                          j.value("max_index", 4u));
  if (type == "product")
    return direct_product(parse_machine_json(j.at("left")),
                          parse_machine_json(j.at("right")));
  if (type == "economical")
    return economical_power(parse_machine_json(j.at("base")),
                            j.at("dimension").get<unsigned>());
  if (type == "c2") return c2_extension(parse_machine_json(j.at("base")));
  if (type == "lamplighter")
    return lamplighter(parse_machine_json(j.at("base")), j.at("modulus").get<unsigned>());
  throw InvalidInput("unknown machine type '" + type + "'");
}

MachinePtr parse_machine(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"'))
    return parse_machine_json(json::parse(text));
  return parse_machine_json(json(text));
}

Elem parse_element(const Machine& m, const json& j) {
  if (dynamic_cast<const AddingMachine*>(&m)) {
    if (!j.is_number_integer()) throw InvalidInput("adding element is an integer");
    return AddingMachine::element(j.get<long long>());
  }
  if (auto* dm = dynamic_cast<const DyadicMachine*>(&m)) {
    if (j.is_object() && j.contains("rational"))
      return DyadicMachine::element(Padic2::exact(BigRat(j.at("rational").get<std::string>())));
    if (j.is_object() && j.contains("digits")) {
      std::vector<int> w;
      for (const auto& d : j.at("digits")) {
        int b = d.get<int>();
        if (b != 0 && b != 1) throw InvalidInput("digits are 0 or 1");
        w.push_back(b);
      }
      // a finite digit word pins the value only modulo 2^length
      unsigned prec = static_cast<unsigned>(w.size());
      if (dm->eta().kind() == Eta::Kind::Stream) prec = std::min(prec, dm->eta().precision());
      return DyadicMachine::element(Padic2::windowed(eta_value_residue(w, dm->eta(), prec), prec));
    }
    throw InvalidInput("dyadic element needs \"rational\" or \"digits\"");
  }
  if (dynamic_cast<const ZomegaMachine*>(&m)) {
    if (!j.is_object()) throw InvalidInput("vector element is {\"index\": coefficient, ...}");
    Vect v;
    for (auto it = j.begin(); it != j.end(); ++it)
      v[static_cast<unsigned>(std::stoul(it.key()))] = it.value().get<long long>();
    return ZomegaMachine::element(std::move(v));
  }
  if (auto* pm = dynamic_cast<const DirectProduct*>(&m)) {
    return DirectProduct::element(parse_element(*pm->left(), j.at("left")),
                                  parse_element(*pm->right(), j.at("right")));
  }
  if (auto* em = dynamic_cast<const EconomicalPower*>(&m)) {
    if (!j.is_array() || j.size() != em->dimension())
      throw InvalidInput("power element is an array of dimension entries");
    std::vector<Elem> parts;
    for (const auto& x : j) parts.push_back(parse_element(*em->base(), x));
    return EconomicalPower::element(std::move(parts));
  }
  if (auto* cm = dynamic_cast<const C2Extension*>(&m)) {
    std::map<unsigned, Elem> slots;
    if (j.contains("vec"))
      for (auto it = j.at("vec").begin(); it != j.at("vec").end(); ++it)
        slots[static_cast<unsigned>(std::stoul(it.key()))] =
            parse_element(*cm->base(), it.value());
    bool flip = j.value("sigma", 0) != 0;
    return cm->make(std::move(slots), flip);
  }
  if (auto* lm = dynamic_cast<const Lamplighter*>(&m)) {
    std::vector<std::pair<Elem, int>> lamps;
    if (j.contains("lamps"))
      for (const auto& x : j.at("lamps"))
        lamps.emplace_back(parse_element(*lm->base(), x.at("pos")),
                           x.at("val").get<int>());
    Elem base = j.contains("base") ? parse_element(*lm->base(), j.at("base"))
                                   : lm->base()->identity();
    return lm->make(lamps, std::move(base));
  }
  throw InvalidInput("no element grammar for machine '" + m.describe() + "'");
}

struct VerifyArgs {
  std::optional<MachinePtr> machine;
  std::optional<Eta> eta;
  std::optional<unsigned> trials, depth, max_len;
  std::optional<std::uint64_t> seed;
};

const Machine& need_machine(const VerifyArgs& v, const std::string& suite) {
  if (!v.machine) throw InvalidInput("suite '" + suite + "' needs --machine");
  return **v.machine;
}

Eta need_eta(const VerifyArgs& v, const std::string& suite) {
  if (v.eta) return *v.eta;
  if (v.machine) {
    if (auto* dm = dynamic_cast<const DyadicMachine*>(v.machine->get())) return dm->eta();
    if (auto* zm = dynamic_cast<const ZomegaMachine*>(v.machine->get())) return zm->eta();
  }
  throw InvalidInput("suite '" + suite + "' needs --eta (or a machine that carries one)");
}

std::uint64_t need_seed(const VerifyArgs& v, const std::string& suite) {
  if (!v.seed) throw InvalidInput("suite '" + suite + "' is randomized and needs --seed");
  return *v.seed;
}

SuiteResult dispatch_suite(const std::string& name, const VerifyArgs& v) {
  auto trials = [&](unsigned d) { return v.trials.value_or(d); };
  auto depth = [&](unsigned d) { return v.depth.value_or(d); };
  if (name == "digits-roundtrip")
    return suite_digits_roundtrip(need_eta(v, name), trials(100), depth(64), need_seed(v, name));
  if (name == "action-axioms")
    return suite_action_axioms(need_machine(v, name), trials(100), depth(8), need_seed(v, name));
  if (name == "corefree")
    return suite_corefree(need_machine(v, name), v.max_len.value_or(3), depth(10));
  if (name == "transitivity") return suite_transitivity(need_machine(v, name), depth(8));
  if (name == "intertwining")
    return suite_intertwining(need_eta(v, name), trials(100), need_seed(v, name));
  if (name == "boundary")
    return suite_boundary(need_eta(v, name), trials(200), depth(32), need_seed(v, name));
  if (name == "block-chi") return suite_block_chi(trials(200), need_seed(v, name));
  if (name == "abelian-portraits")
    return suite_abelian_portraits(need_machine(v, name), trials(100), depth(6), need_seed(v, name));
  throw InvalidInput("unknown suite '" + name +
                     "'; suites: digits-roundtrip action-axioms corefree transitivity "
                     "intertwining boundary block-chi abelian-portraits");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"self-similar actions on the binary rooted tree"};
  app.require_subcommand(1);

  std::string eta_spec, value, machine_spec, element_expr, vertex, suite;
  unsigned count = 8, depth = 4, max_len = 3, trials = 0;
  unsigned budget = 200;
  std::uint64_t seed = 0;
  bool verbose = false;

  auto* alpha = app.add_subcommand("alpha", "digits of the associated 2-adic unit");
  alpha->add_option("--eta", eta_spec, "base: int:<v> | rat:<p>/<q> | seed:<u64>:<prec>")
      ->required();
  alpha->add_option("-n,--count", count, "how many digits")->required();
  alpha->add_flag("-v,--verbose", verbose, "also print the division chain values");

  auto* digits = app.add_subcommand("digits", "base-eta expansion of a rational");
  digits->add_option("--eta", eta_spec, "base spec")->required();
  digits->add_option("--value", value, "rational p/q with odd q")->required();
  digits->add_option("-n,--count", count, "how many digits")->required();

  auto* act = app.add_subcommand("act", "image of a tree vertex under an element");
  act->add_option("--machine", machine_spec, "machine spec (bare name or JSON)")->required();
  act->add_option("--element", element_expr, "element expression (JSON)")->required();
  act->add_option("--vertex", vertex, "vertex word, digits 0-9a-z, root first")->required();

  auto* portrait_cmd = app.add_subcommand("portrait", "root permutations down to a depth");
  portrait_cmd->add_option("--machine", machine_spec, "machine spec")->required();
  portrait_cmd->add_option("--element", element_expr, "element expression")->required();
  portrait_cmd->add_option("--depth", depth, "portrait depth");

  auto* states_cmd = app.add_subcommand("states", "closure of an element under restriction");
  states_cmd->add_option("--machine", machine_spec, "machine spec")->required();
  states_cmd->add_option("--element", element_expr, "element expression")->required();
  states_cmd->add_option("--budget", budget, "stop once this many states are found");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  auto* vm = verify->add_option("--machine", machine_spec, "machine spec");
  auto* ve = verify->add_option("--eta", eta_spec, "base spec");
  auto* vt = verify->add_option("--trials", trials, "randomized trial count");
  auto* vd = verify->add_option("--depth", depth, "probe depth");
  auto* vl = verify->add_option("--max-len", max_len, "generator word length bound");
  auto* vs = verify->add_option("--seed", seed, "root seed; trial i uses seed + i");

  std::vector<char*> argv;
  std::string prog = "selfsim";
  argv.push_back(prog.data());
  std::vector<std::string> copy(args);
  for (std::string& a : copy) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs[0]->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (alpha->parsed()) {
      Eta eta = parse_eta(eta_spec);
      AlphaStream stream(eta);
      for (unsigned k = 1; k <= count; ++k) out << (k > 1 ? " " : "") << stream.alpha(k);
      out << "\n";
      if (verbose)
        for (unsigned k = 1; k <= count; ++k)
          out << "p" << k << ": " << stream.p(k).render() << "\n";
      return 0;
    }
    if (digits->parsed()) {
      Eta eta = parse_eta(eta_spec);
      std::vector<int> w = eta_digits(Padic2::exact(BigRat(value)), eta, count);
      for (int b : w) out << b;
      out << "\n";
      return 0;
    }

    if (act->parsed() || portrait_cmd->parsed() || states_cmd->parsed()) {
      MachinePtr m = parse_machine(machine_spec);
      Elem e = parse_element(*m, json::parse(element_expr));
      if (act->parsed()) {
        Word w = word_from_string(vertex, m->degree());
        out << word_to_string(act_word(*m, e, w)) << "\n";
      } else if (portrait_cmd->parsed()) {
        for (const auto& [w, p] : portrait(*m, e, depth))
          out << (w.empty() ? "\xce\xb5" : word_to_string(w)) << "\t" << perm_cycles(p) << "\n";
      } else {
        StatesResult sr = states(*m, e, budget);
        out << "count: " << sr.states.size() << "\n";
        out << "status: " << (sr.budget_exhausted ? "budget_exhausted" : "closed") << "\n";
        std::vector<std::string> names;
        for (const Elem& s : sr.states) names.push_back(m->render(s));
        std::sort(names.begin(), names.end());
        for (const std::string& n : names) out << "state: " << n << "\n";
      }
      return 0;
    }

    VerifyArgs v;
    if (vm->count()) v.machine = parse_machine(machine_spec);
    if (ve->count()) v.eta = parse_eta(eta_spec);
    if (vt->count()) v.trials = trials;
    if (vd->count()) v.depth = depth;
    if (vl->count()) v.max_len = max_len;
    if (vs->count()) v.seed = seed;
    SuiteResult r = dispatch_suite(suite, v);
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
    return r.passed ? 0 : 1;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace selfsim
