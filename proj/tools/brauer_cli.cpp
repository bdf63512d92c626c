// Command-line front door for the diagram-monoid library.  Exit codes:
// 0 success/verified, 1 verification failure, 2 usage or parse error,
// 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/canonical.hpp"
#include "brauer/diagram.hpp"
#include "brauer/enumerate.hpp"
#include "brauer/presentation.hpp"

using json = nlohmann::ordered_json;
using namespace brauer;

namespace {

struct Options {
  bool as_json = false;
  std::uint64_t seed = 1;  // fixes any sampled computation; all current
                           // commands are exhaustive
  int threads = 1;
};

json spec_json(const CanonicalSpec& spec) {
  json j;
  j["family"] = family_name(spec_family(spec));
  if (const auto* b = std::get_if<BrauerSpec>(&spec)) {
    j["k"] = b->k;
  } else if (const auto* it = std::get_if<BlockSpec>(&spec)) {
    j["lambda"] = it->lambda;
  } else {
    const auto& r = std::get<RookSpec>(spec);
    j["k"] = r.k;
    j["l"] = r.l;
    j["m"] = r.m;
    j["t"] = r.t;
  }
  return j;
}

Presentation load_presentation(const std::string& name, const std::string& file,
                               int n) {
  if (!name.empty() && !file.empty())
    throw ParseError("give either --name or --file, not both");
  if (!name.empty()) {
    if (n < 2) throw DegreeTooSmall("--n must be at least 2 for builtin presentations");
    return builtin_presentation(presentation_from_label(name), n);
  }
  if (file.empty()) throw ParseError("need --name or --file");
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open presentation file '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Presentation p = parse_presentation(buf.str());
  if (n > 0) {
    if (n < p.n)
      throw ParseError("--n " + std::to_string(n) +
                       " is below the degree required by the generators (" +
                       std::to_string(p.n) + ")");
    p.n = n;
  }
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"Brauer-type diagram monoids: multiplication, enumeration, "
               "presentation checking and canonical forms"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit JSON instead of text");
  app.add_option("--seed", opt.seed, "seed for sampled computations");
  app.add_option("--threads", opt.threads, "max worker threads")
      ->check(CLI::Range(1, 256));

  // ---- multiply ----------------------------------------------------------
  auto* cmd_mul = app.add_subcommand("multiply", "compose two diagrams");
  int mul_n = 0;
  bool mul_star = false;
  std::vector<std::string> mul_args;
  cmd_mul->add_option("--n", mul_n, "degree (checked against the operands)");
  cmd_mul->add_flag("--star", mul_star, "use the star composition");
  cmd_mul->add_option("diagrams", mul_args, "two diagrams in text form")
      ->expected(2);

  // ---- enumerate ---------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "list all elements of a family");
  std::string enum_family;
  int enum_n = 0;
  std::uint64_t enum_cap = 10'000'000;
  cmd_enum->add_option("--family", enum_family)->required();
  cmd_enum->add_option("--n", enum_n)->required();
  cmd_enum->add_option("--cap", enum_cap, "element cap");

  // ---- census ------------------------------------------------------------
  auto* cmd_census = app.add_subcommand(
      "census", "count by rank/type and verify the closed formulas");
  std::string census_family;
  int census_n = 0;
  std::uint64_t census_cap = 10'000'000;
  cmd_census->add_option("--family", census_family)->required();
  cmd_census->add_option("--n", census_n)->required();
  cmd_census->add_option("--cap", census_cap, "element cap");

  // ---- orbits ------------------------------------------------------------
  auto* cmd_orbits = app.add_subcommand(
      "orbits", "two-sided symmetric-group orbits and their canonical reps");
  std::string orbits_family;
  int orbits_n = 0;
  std::uint64_t orbits_cap = 10'000'000;
  cmd_orbits->add_option("--family", orbits_family)->required();
  cmd_orbits->add_option("--n", orbits_n)->required();
  cmd_orbits->add_option("--cap", orbits_cap, "element cap");

  // ---- verify-presentation ------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify-presentation", "evaluate every relation in the diagram monoid");
  std::string verify_name, verify_file;
  int verify_n = 0;
  std::vector<std::size_t> verify_drop;
  cmd_verify->add_option("--name", verify_name, "builtin: brauer/it/pb/is");
  cmd_verify->add_option("--file", verify_file, "presentation file");
  cmd_verify->add_option("--n", verify_n, "degree");
  cmd_verify->add_option("--drop-relation", verify_drop,
                         "drop relation k before checking (repeatable)");

  // ---- derive ------------------------------------------------------------
  auto* cmd_derive = app.add_subcommand(
      "derive", "search for a rewriting certificate lhs -> rhs");
  std::string derive_name, derive_file, derive_lhs, derive_rhs;
  int derive_n = 0, derive_depth = 20;
  std::uint64_t derive_width = 1 << 22;
  cmd_derive->add_option("--name", derive_name);
  cmd_derive->add_option("--file", derive_file);
  cmd_derive->add_option("--n", derive_n);
  cmd_derive->add_option("--lhs", derive_lhs)->required();
  cmd_derive->add_option("--rhs", derive_rhs)->required();
  cmd_derive->add_option("--depth", derive_depth, "total depth cap");
  cmd_derive->add_option("--width", derive_width, "visited-words cap");

  // ---- enumerate-presented -------------------------------------------------
  auto* cmd_pres = app.add_subcommand(
      "enumerate-presented", "congruence enumeration of a presented monoid");
  std::string pres_name, pres_file;
  int pres_n = 0;
  std::uint64_t pres_cap = 1'000'000;
  bool pres_nf = false;
  std::vector<std::size_t> pres_drop;
  cmd_pres->add_option("--name", pres_name);
  cmd_pres->add_option("--file", pres_file);
  cmd_pres->add_option("--n", pres_n);
  cmd_pres->add_option("--cap", pres_cap, "class definition cap");
  cmd_pres->add_flag("--normal-forms", pres_nf, "also print one normal form per class");
  cmd_pres->add_option("--drop-relation", pres_drop,
                       "drop relation k before enumerating (repeatable)");

  // ---- factor ------------------------------------------------------------
  auto* cmd_factor = app.add_subcommand(
      "factor", "write x = u * canonical * v for x in B/IT/PB");
  std::string factor_family, factor_arg;
  cmd_factor->add_option("--family", factor_family)->required();
  cmd_factor->add_option("diagram", factor_arg)->required();

  // ---- render ------------------------------------------------------------
  auto* cmd_render = app.add_subcommand("render", "ASCII drawing of a diagram");
  std::string render_arg;
  cmd_render->add_option("diagram", render_arg)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();  // global flags may follow the subcommand name

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  EnumLimits limits;
  limits.threads = opt.threads;

  if (cmd_mul->parsed()) {
    Diagram a = parse_diagram(mul_args[0]);
    Diagram b = parse_diagram(mul_args[1]);
    if (mul_n > 0 && (a.degree() != mul_n || b.degree() != mul_n))
      throw DegreeMismatch(mul_n, a.degree() != mul_n ? a.degree() : b.degree());
    if (mul_star) {
      Diagram prod = star_multiply(a, b);
      if (opt.as_json) std::cout << json{{"product", to_text(prod)}}.dump() << "\n";
      else std::cout << to_text(prod) << "\n";
      return 0;
    }
    MulResult r = multiply(a, b);
    if (opt.as_json) {
      std::cout << json{{"product", to_text(r.product)}, {"circles", r.circles}}.dump()
                << "\n";
    } else {
      std::cout << to_text(r.product) << "\n" << "circles: " << r.circles << "\n";
    }
    return 0;
  }

  if (cmd_enum->parsed()) {
    limits.max_elements = enum_cap;
    auto elems = enumerate(family_from_name(enum_family), enum_n, limits);
    if (opt.as_json) {
      json j;
      j["family"] = enum_family;
      j["n"] = enum_n;
      j["total"] = std::to_string(elems.size());
      json list = json::array();
      for (const auto& d : elems) list.push_back(to_text(d));
      j["elements"] = std::move(list);
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& d : elems) std::cout << to_text(d) << "\n";
    }
    return 0;
  }

  if (cmd_census->parsed()) {
    limits.max_elements = census_cap;
    Census c = census(family_from_name(census_family), census_n, limits);
    if (opt.as_json) {
      json j;
      j["family"] = census_family;
      j["n"] = census_n;
      j["total"] = to_string(c.total);
      json ranks;
      for (const auto& [k, v] : c.by_rank) ranks[std::to_string(k)] = to_string(v);
      j["by_rank"] = std::move(ranks);
      if (!c.by_it_type.empty() || !c.by_pb_type.empty()) {
        json types;
        for (const auto& [t, v] : c.by_it_type) types[format_it_type(t)] = to_string(v);
        for (const auto& [t, v] : c.by_pb_type) types[format_pb_type(t)] = to_string(v);
        j["by_type"] = std::move(types);
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "family: " << census_family << "\nn: " << census_n
                << "\ntotal: " << to_string(c.total) << "\n";
      for (const auto& [k, v] : c.by_rank)
        std::cout << "rank " << k << ": " << to_string(v) << "\n";
      for (const auto& [t, v] : c.by_it_type)
        std::cout << "type " << format_it_type(t) << ": " << to_string(v) << "\n";
      for (const auto& [t, v] : c.by_pb_type)
        std::cout << "type " << format_pb_type(t) << ": " << to_string(v) << "\n";
      std::cout << "formulas: verified\n";
    }
    return 0;
  }

  if (cmd_orbits->parsed()) {
    limits.max_elements = orbits_cap;
    auto reports = orbits(family_from_name(orbits_family), orbits_n, limits);
    if (opt.as_json) {
      json j;
      j["family"] = orbits_family;
      j["n"] = orbits_n;
      j["group_order"] = to_string(reports.empty()
                                       ? factorial(orbits_n) * factorial(orbits_n)
                                       : reports.front().group_order);
      json list = json::array();
      for (const auto& r : reports)
        list.push_back(json{{"rep", to_text(r.representative)},
                            {"size", to_string(r.orbit_size)},
                            {"stabilizer", to_string(r.stabilizer_size)}});
      j["orbits"] = std::move(list);
      std::cout << j.dump() << "\n";
    } else {
      for (const auto& r : reports)
        std::cout << "rep " << to_text(r.representative) << " size "
                  << to_string(r.orbit_size) << " stabilizer "
                  << to_string(r.stabilizer_size) << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    Presentation p = load_presentation(verify_name, verify_file, verify_n);
    std::sort(verify_drop.rbegin(), verify_drop.rend());
    for (std::size_t k : verify_drop) p = drop_relation(p, k);
    SoundnessReport rep = check_soundness(p);
    if (opt.as_json) {
      json fails = json::array();
      for (const auto& f : rep.failures)
        fails.push_back(json{{"relation", f.relation},
                             {"lhs", f.lhs},
                             {"rhs", f.rhs},
                             {"lhs_value", f.lhs_value},
                             {"rhs_value", f.rhs_value}});
      std::cout << json{{"presentation", p.label},
                        {"n", p.n},
                        {"checked", rep.checked},
                        {"failures", std::move(fails)}}
                       .dump()
                << "\n";
    } else if (rep.ok()) {
      std::cout << "all " << rep.checked << " relations hold in " << p.label
                << " at n=" << p.n << "\n";
    } else {
      for (const auto& f : rep.failures)
        std::cout << "relation " << f.relation << " fails: " << f.lhs << " -> "
                  << f.lhs_value << " but " << f.rhs << " -> " << f.rhs_value
                  << "\n";
    }
    return rep.ok() ? 0 : 1;
  }

  if (cmd_derive->parsed()) {
    Presentation p = load_presentation(derive_name, derive_file, derive_n);
    Word lhs = parse_word(derive_lhs), rhs = parse_word(derive_rhs);
    auto cert = derive(p, lhs, rhs, derive_depth, derive_width);
    if (!cert) {
      if (opt.as_json) std::cout << json{{"found", false}}.dump() << "\n";
      else std::cout << "no certificate within depth " << derive_depth << "\n";
      return 3;
    }
    if (!replay(p, *cert, lhs, rhs)) throw Error("internal: certificate replay failed");
    if (opt.as_json) {
      json steps = json::array();
      for (std::size_t i = 0; i < cert->steps.size(); ++i)
        steps.push_back(json{{"relation", cert->steps[i].relation},
                             {"forward", cert->steps[i].forward},
                             {"pos", cert->steps[i].pos},
                             {"word", format_word(cert->words[i + 1])}});
      std::cout << json{{"found", true},
                        {"start", format_word(lhs)},
                        {"steps", std::move(steps)}}
                       .dump()
                << "\n";
    } else {
      std::cout << format_word(cert->words.front()) << "\n";
      for (std::size_t i = 0; i < cert->steps.size(); ++i) {
        const auto& st = cert->steps[i];
        std::cout << "  = " << format_word(cert->words[i + 1]) << "   [rel "
                  << st.relation << (st.forward ? " ->" : " <-") << " at "
                  << st.pos << "]\n";
      }
      std::cout << "certificate: " << cert->steps.size() << " steps, replays ok\n";
    }
    return 0;
  }

  if (cmd_pres->parsed()) {
    Presentation p = load_presentation(pres_name, pres_file, pres_n);
    std::sort(pres_drop.rbegin(), pres_drop.rend());
    for (std::size_t k : pres_drop) p = drop_relation(p, k);
    CongruenceResult r = enumerate_presented(p, pres_cap, pres_nf);
    bool complete = r.status == CongruenceResult::Status::Complete;
    if (opt.as_json) {
      json j;
      j["presentation"] = p.label;
      j["n"] = p.n;
      j["status"] = complete ? "complete" : "cap-exceeded";
      if (complete) j["size"] = std::to_string(r.size);
      if (pres_nf && complete) {
        json nf = json::array();
        for (const auto& w : r.normal_forms) nf.push_back(format_word(w));
        j["normal_forms"] = std::move(nf);
      }
      std::cout << j.dump() << "\n";
    } else if (complete) {
      std::cout << "size: " << r.size << "\n";
      if (pres_nf)
        for (const auto& w : r.normal_forms) std::cout << format_word(w) << "\n";
    } else {
      std::cout << "cap exceeded before closure\n";
    }
    return complete ? 0 : 3;
  }

  if (cmd_factor->parsed()) {
    Diagram x = parse_diagram(factor_arg);
    Factorization f = factorize(x, family_from_name(factor_family));
    json triple{{"u", to_text(f.u)},
                {"core", spec_json(f.core)},
                {"v", to_text(f.v)}};
    if (opt.as_json) {
      std::cout << triple.dump() << "\n";
    } else {
      std::cout << "u: " << to_text(f.u) << "\ncore: " << format_spec(f.core)
                << "\nv: " << to_text(f.v) << "\n"
                << triple.dump() << "\n";
    }
    return 0;
  }

  if (cmd_render->parsed()) {
    Diagram d = parse_diagram(render_arg);
    if (opt.as_json) {
      std::cout << json{{"diagram", to_text(d)}, {"ascii", render_ascii(d)}}.dump()
                << "\n";
    } else {
      std::cout << to_text(d) << "\n" << render_ascii(d);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FormulaMismatch& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const CanonicalMissing& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const CanonicalDuplicated& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAMember& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAPermutation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
