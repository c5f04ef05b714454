// Command-line frontend: Alexander matrices, stratification reports, Betti
// numbers of finite abelian covers, and the binomial obstruction screen.
//
// Exit codes: 0 success, 1 input error, 2 obstruction verdict, 3 internal
// error. Output is deterministic for fixed inputs regardless of the worker
// count (--threads or ALEXSTRAT_THREADS).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "alexstrat/covers.hpp"
#include "alexstrat/errors.hpp"
#include "alexstrat/kahler.hpp"
#include "alexstrat/parallel.hpp"
#include "alexstrat/strata.hpp"

using json = nlohmann::ordered_json;
using namespace alexstrat;

namespace {

struct RunConfig {
  std::string input_path;
  std::string inline_text;
  bool as_json = false;
  unsigned threads = 0;  // 0: ALEXSTRAT_THREADS or hardware
};

Presentation load_presentation(const RunConfig& cfg) {
  if (!cfg.input_path.empty() && !cfg.inline_text.empty())
    throw InputError("give either an input file or --text, not both");
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw InputError("cannot read input file: " + cfg.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }
  if (!cfg.inline_text.empty()) return parse_presentation(cfg.inline_text);
  throw InputError("no presentation given: pass an input file or --text");
}

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e}, {"coefficient", c.str()}});
  return json{{"terms", terms}};
}

json character_json(const TorsionCharacter& chi) {
  return json{{"modulus", chi.modulus}, {"exponents", chi.exponents}};
}

json binomial_json(const Binomial& b) {
  return json{{"exponent", b.exponent},
              {"unit_order", b.unit_order},
              {"unit_power", b.unit_power}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --at "N=6,a=1,1"
TorsionCharacter parse_character(const std::string& text, int rank) {
  int modulus = 0;
  std::vector<int> exps;
  std::string_view sv(text);
  auto fail = [&]() -> TorsionCharacter {
    throw InputError("malformed character '" + text + "'; expected N=<int>,a=<int>,<int>,...");
  };
  if (sv.substr(0, 2) != "N=") return fail();
  sv.remove_prefix(2);
  std::size_t used = 0;
  try {
    modulus = std::stoi(std::string(sv), &used);
  } catch (const std::exception&) {
    return fail();
  }
  sv.remove_prefix(used);
  if (sv.substr(0, 3) != ",a=") return fail();
  sv.remove_prefix(3);
  std::stringstream rest{std::string(sv)};
  std::string item;
  while (std::getline(rest, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) return fail();
      exps.push_back(v);
    } catch (const std::exception&) {
      return fail();
    }
  }
  return TorsionCharacter(rank, modulus, std::move(exps));
}

// --group "2,2"
FiniteAbelianGroup parse_group(const std::string& text) {
  FiniteAbelianGroup g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int d = std::stoi(item, &pos);
      if (pos != item.size() || d < 1) throw InputError("");
      g.orders.push_back(d);
    } catch (const std::exception&) {
      throw InputError("malformed group '" + text + "'; expected cyclic orders like 6 or 2,2");
    }
  }
  if (g.orders.empty()) throw InputError("group needs at least one cyclic factor");
  return g;
}

// --images "x:1,0;y:0,1"
std::vector<std::vector<int>> parse_images(const std::string& text,
                                           const Presentation& pres, int factors) {
  std::vector<std::optional<std::vector<int>>> by_gen(pres.generators.size());
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos)
      throw InputError("malformed image '" + part + "'; expected <generator>:<coords>");
    const std::string name = part.substr(0, colon);
    auto it = std::find(pres.generators.begin(), pres.generators.end(), name);
    if (it == pres.generators.end())
      throw InputError("unknown generator '" + name + "' in --images");
    std::vector<int> coords;
    std::stringstream cs(part.substr(colon + 1));
    std::string num;
    while (std::getline(cs, num, ',')) {
      try {
        std::size_t pos = 0;
        coords.push_back(std::stoi(num, &pos));
        if (pos != num.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("malformed image coordinates in '" + part + "'");
      }
    }
    if (static_cast<int>(coords.size()) != factors)
      throw InputError("image for '" + name + "' needs " + std::to_string(factors) +
                       " coordinate(s)");
    auto idx = static_cast<std::size_t>(it - pres.generators.begin());
    if (by_gen[idx]) throw InputError("duplicate image for generator '" + name + "'");
    by_gen[idx] = std::move(coords);
  }
  std::vector<std::vector<int>> images;
  for (std::size_t i = 0; i < by_gen.size(); ++i) {
    if (!by_gen[i])
      throw InputError("missing image for generator '" + pres.generators[i] + "'");
    images.push_back(std::move(*by_gen[i]));
  }
  return images;
}

int cmd_derive(const RunConfig& cfg, const std::string& word_text) {
  const Presentation pres = load_presentation(cfg);
  const Word w = parse_word(word_text, pres);
  const auto names = variable_names(pres);
  const auto grad = fox_gradient(w, pres.rank());
  if (cfg.as_json) {
    json partials = json::array();
    for (int i = 0; i < pres.rank(); ++i)
      partials.push_back(json{{"generator", pres.generators[static_cast<std::size_t>(i)]},
                              {"poly", poly_json(grad[static_cast<std::size_t>(i)])}});
    emit(json{{"command", "derive"},
              {"word", w.to_text(pres.generators)},
              {"partials", partials}});
  } else {
    std::cout << "word: " << w.to_text(pres.generators) << "\n";
    for (int i = 0; i < pres.rank(); ++i)
      std::cout << "d/d" << pres.generators[static_cast<std::size_t>(i)] << ": "
                << grad[static_cast<std::size_t>(i)].to_string(names) << "\n";
  }
  return 0;
}

int cmd_matrix(const RunConfig& cfg, bool abelianized) {
  const Presentation pres = load_presentation(cfg);
  const AlexanderMatrix m = alexander_matrix(pres);
  if (abelianized) {
    const AbelianizationData ab = abelianization(pres);
    const AbelianizedView view = abelianized_view(m, ab);
    if (cfg.as_json) {
      json rows = json::array();
      for (const auto& row : view.entries) {
        json r = json::array();
        for (const auto& p : row) r.push_back(poly_json(p));
        rows.push_back(r);
      }
      emit(json{{"command", "matrix"},
                {"abelianized", true},
                {"variables", view.names},
                {"entries", rows}});
      return 0;
    }
    std::cout << "abelianized view (free quotient rank " << ab.betti << ")\n";
    for (int i = 0; i < pres.rank(); ++i)
      for (int j = 0; j < pres.relator_count(); ++j)
        std::cout << "M[" << pres.generators[static_cast<std::size_t>(i)] << "][" << (j + 1)
                  << "] = "
                  << view.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         .to_string(view.names)
                  << "\n";
    return 0;
  }
  const auto names = variable_names(pres);
  if (cfg.as_json) {
    json relators = json::array();
    for (const auto& rel : pres.relators) relators.push_back(rel.to_text(pres.generators));
    json rows = json::array();
    for (const auto& row : m.entries) {
      json r = json::array();
      for (const auto& p : row) r.push_back(poly_json(p));
      rows.push_back(r);
    }
    emit(json{{"command", "matrix"},
              {"generators", pres.generators},
              {"relators", relators},
              {"entries", rows}});
    return 0;
  }
  std::cout << pres.rank() << " x " << pres.relator_count() << " matrix of free derivatives\n";
  for (int i = 0; i < pres.rank(); ++i)
    for (int j = 0; j < pres.relator_count(); ++j)
      std::cout << "M[" << pres.generators[static_cast<std::size_t>(i)] << "][" << (j + 1)
                << "] = " << m.entry(i, j).to_string(names) << "\n";
  return 0;
}

int cmd_abelianization(const RunConfig& cfg) {
  const Presentation pres = load_presentation(cfg);
  const AbelianizationData ab = abelianization(pres);
  if (cfg.as_json) {
    json torsion = json::array();
    for (const Int& f : ab.torsion) torsion.push_back(f.str());
    json diag = json::array();
    for (const Int& f : ab.snf.invariant_factors()) diag.push_back(f.str());
    emit(json{{"command", "abelianization"},
              {"rank", pres.rank()},
              {"betti", ab.betti},
              {"torsion", torsion},
              {"invariant_factors", diag}});
    return 0;
  }
  std::cout << "rank: " << pres.rank() << "\n" << "betti: " << ab.betti << "\n";
  std::cout << "torsion:";
  if (ab.torsion.empty()) std::cout << " none";
  for (const Int& f : ab.torsion) std::cout << " " << f;
  std::cout << "\n";
  return 0;
}

int cmd_strata(const RunConfig& cfg, const std::string& at) {
  const Presentation pres = load_presentation(cfg);
  const StrataContext ctx{pres};
  const TorsionCharacter chi = parse_character(at, pres.rank());
  const StratumReport rep = ctx.report(chi);
  if (cfg.as_json) {
    emit(json{{"command", "strata"},
              {"character", character_json(rep.character)},
              {"normalized", character_json(rep.character.normalized())},
              {"matrix_rank", rep.matrix_rank},
              {"dim_c1", rep.dim_c1},
              {"dim_h1", rep.dim_h1},
              {"depth", rep.depth}});
    return 0;
  }
  std::cout << "character: " << rep.character.to_text() << "\n"
            << "normalized: " << rep.character.normalized().to_text() << "\n"
            << "matrix rank: " << rep.matrix_rank << "\n"
            << "dim C^1: " << rep.dim_c1 << "\n"
            << "dim H^1: " << rep.dim_h1 << "\n"
            << "depth: " << rep.depth << "\n";
  return 0;
}

int cmd_torsion_scan(const RunConfig& cfg, int stratum, int order, const std::string& loci) {
  const Presentation pres = load_presentation(cfg);
  bool w = false;
  if (loci == "W")
    w = true;
  else if (loci != "V")
    throw InputError("--loci must be V or W");
  const auto members = torsion_scan(pres, stratum, order, w, cfg.threads);
  if (cfg.as_json) {
    json chars = json::array();
    for (const auto& chi : members) chars.push_back(character_json(chi));
    emit(json{{"command", "torsion-scan"},
              {"stratum", stratum},
              {"order", order},
              {"loci", loci},
              {"characters", chars}});
    return 0;
  }
  for (const auto& chi : members) std::cout << chi.to_text() << "\n";
  std::cout << "total: " << members.size() << "\n";
  return 0;
}

int cmd_betti(const RunConfig& cfg, const std::string& group_text,
              const std::string& images_text) {
  const Presentation pres = load_presentation(cfg);
  const FiniteAbelianGroup group = parse_group(group_text);
  const auto images = parse_images(images_text, pres, group.factors());
  const Epimorphism epi = validate_epimorphism(pres, group, images);
  const StrataContext ctx{pres};
  const long formula = betti_cover_formula(ctx, epi, cfg.threads);
  const long oracle = betti_cover_oracle(ctx.matrix(), epi);
  if (formula != oracle)
    throw std::logic_error("formula and oracle Betti computations disagree: " +
                           std::to_string(formula) + " vs " + std::to_string(oracle));
  if (cfg.as_json) {
    emit(json{{"command", "betti"},
              {"group", group.orders},
              {"cover_size", group.size()},
              {"b1_base", ctx.betti()},
              {"formula", formula},
              {"oracle", oracle}});
    return 0;
  }
  std::cout << "b1 = " << formula << " (formula) / " << oracle << " (oracle)\n";
  return 0;
}

int cmd_kahler(const RunConfig& cfg, ObstructionOptions opts,
               const std::string& base_hint) {
  const Presentation pres = load_presentation(cfg);
  if (!base_hint.empty()) opts.base_hint = parse_word(base_hint, pres);
  const ObstructionReport rep = kahler_obstruction_report(pres, opts);
  const auto names = variable_names(pres);
  if (cfg.as_json) {
    json pencils = json::array();
    for (const auto& pr : rep.pencils) {
      json divisors = json::array();
      for (const auto& b : pr.divisors) divisors.push_back(binomial_json(b));
      pencils.push_back(json{{"poly", poly_json(pr.pencil)},
                             {"text", pr.pencil.to_string(names)},
                             {"support_variables", pr.support_variables},
                             {"divisors", divisors},
                             {"fully_binomial", pr.fully_binomial}});
    }
    json j{{"command", "kahler-check"},
           {"status", to_string(rep.status)},
           {"max_degree", rep.options.max_degree},
           {"max_order", rep.options.max_order},
           {"cert_order", rep.options.cert_order},
           {"cert_threshold", rep.options.cert_threshold},
           {"certificates", rep.certificates},
           {"pencils", pencils},
           {"summary", rep.summary}};
    if (rep.form) {
      j["base_relator"] = rep.form->base.to_text(pres.generators);
      json conjs = json::array();
      for (const auto& us : rep.form->conjugators) {
        json list = json::array();
        for (const auto& u : us) list.push_back(u.to_text(pres.generators));
        conjs.push_back(list);
      }
      j["conjugators"] = conjs;
    }
    emit(j);
  } else {
    std::cout << "status: " << to_string(rep.status) << "\n";
    if (rep.form) {
      std::cout << "base relator: " << rep.form->base.to_text(pres.generators) << "\n";
      for (std::size_t i = 0; i < rep.pencils.size(); ++i) {
        const auto& pr = rep.pencils[i];
        std::cout << "p_" << (i + 1) << " = " << pr.pencil.to_string(names)
                  << "  [support " << pr.support_variables << ", "
                  << (pr.fully_binomial ? "fully binomial within bounds"
                                        : "not fully binomial within bounds")
                  << ", " << pr.divisors.size() << " binomial divisor(s)]\n";
      }
    }
    std::cout << rep.summary << "\n";
  }
  return rep.status == KahlerStatus::Obstructed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander stratifications of finitely presented groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_flag("--json", cfg.as_json, "emit JSON instead of text");
  app.add_option("--threads", cfg.threads,
                 "worker threads (0: ALEXSTRAT_THREADS or hardware)");

  auto add_input = [&](CLI::App* sub) {
    sub->fallthrough();  // let --json / --threads appear after the subcommand
    sub->add_option("input", cfg.input_path, "presentation file");
    sub->add_option("--text", cfg.inline_text, "inline presentation text");
  };

  std::string word_text;
  auto* derive = app.add_subcommand("derive", "free derivatives of a word");
  add_input(derive);
  derive->add_option("--word", word_text, "word to derive")->required();

  bool abelianized = false;
  auto* matrix = app.add_subcommand("matrix", "matrix of relator derivatives");
  add_input(matrix);
  matrix->add_flag("--abelianized", abelianized,
                   "push exponents to the free abelian quotient (display only)");

  auto* abel = app.add_subcommand("abelianization", "first homology of the presentation");
  add_input(abel);

  std::string at;
  auto* strata = app.add_subcommand("strata", "stratum data at one character");
  add_input(strata);
  strata->add_option("--at", at, "character, e.g. N=6,a=1,1")->required();

  int stratum = 1, order = 1;
  std::string loci = "V";
  auto* scan = app.add_subcommand("torsion-scan", "characters of bounded order in a stratum");
  add_input(scan);
  scan->add_option("--stratum", stratum, "stratum index i")->required();
  scan->add_option("--order", order, "order bound N")->required();
  scan->add_option("--loci", loci, "V (default) or W");

  std::string group_text, images_text;
  auto* betti = app.add_subcommand("betti", "first Betti number of a finite abelian cover");
  add_input(betti);
  betti->add_option("--group", group_text, "cyclic orders, e.g. 6 or 2,2")->required();
  betti->add_option("--images", images_text, "generator images, e.g. x:1;y:1")->required();

  ObstructionOptions opts;
  std::string base_hint;
  auto* kahler = app.add_subcommand("kahler-check", "binomial obstruction screen");
  add_input(kahler);
  kahler->add_option("--max-degree", opts.max_degree, "binomial exponent box bound");
  kahler->add_option("--max-order", opts.max_order, "unit order bound");
  kahler->add_option("--cert-order", opts.cert_order,
                     "certificate order bound (default: max order)");
  kahler->add_option("--cert-threshold", opts.cert_threshold,
                     "certificates required for an obstruction");
  kahler->add_option("--base-relator", base_hint, "base relator hint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (derive->parsed()) return cmd_derive(cfg, word_text);
    if (matrix->parsed()) return cmd_matrix(cfg, abelianized);
    if (abel->parsed()) return cmd_abelianization(cfg);
    if (strata->parsed()) return cmd_strata(cfg, at);
    if (scan->parsed()) return cmd_torsion_scan(cfg, stratum, order, loci);
    if (betti->parsed()) return cmd_betti(cfg, group_text, images_text);
    if (kahler->parsed()) return cmd_kahler(cfg, opts, base_hint);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
