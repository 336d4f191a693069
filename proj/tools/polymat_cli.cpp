// Command-line front end: reproducible pipelines over rankvec/arr files.
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 size limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polymat/cone.hpp"
#include "polymat/constructs.hpp"
#include "polymat/inequality.hpp"
#include "polymat/matroid.hpp"
#include "polymat/represent.hpp"

using json = nlohmann::ordered_json;
using namespace polymat;

namespace {

Mask parse_mask(const std::string& text) {
  std::string t = text;
  if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) t = t.substr(2);
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(t, &pos, 16);
    if (pos != t.size()) throw input_error("bad mask: " + text);
    return Mask(v);
  } catch (const std::logic_error&) {
    throw input_error("bad mask: " + text);
  }
}

std::vector<Mask> parse_mask_list(const std::string& text) {
  std::vector<Mask> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_mask(tok));
  if (out.empty()) throw input_error("empty mask list");
  return out;
}

std::string mask_hex(Mask m) {
  std::ostringstream os;
  os << "0x" << std::hex << m;
  return os.str();
}

void emit_rankvec(const std::string& out, const RankVector& h) {
  if (out.empty() || out == "-") {
    write_rankvec(std::cout, h);
  } else {
    save_rankvec(out, h);
    std::cerr << "wrote " << out << "\n";
  }
}

void emit_arr(const std::string& out, const Arrangement& arr) {
  if (out.empty() || out == "-") {
    write_arr(std::cout, arr);
  } else {
    save_arr(out, arr);
    std::cerr << "wrote " << out << "\n";
  }
}

json ingleton_json(const IngletonReport& rep) {
  json rec;
  rec["min_score"] = rat_str_short(rep.min_score);
  rec["argmin"] = {mask_hex(rep.argmin[0]), mask_hex(rep.argmin[1]), mask_hex(rep.argmin[2]),
                   mask_hex(rep.argmin[3])};
  rec["checked"] = rep.quadruples_checked;
  rec["mode"] = rep.mode == ScanMode::exhaustive ? "exhaustive" : "sampled";
  return rec;
}

struct VerifyItem {
  std::string name;
  bool holds = false;
  bool expected = true;
  std::string detail;
};

int run_verify(const Field& f1, const Field& f2, const Rational& eps, std::uint64_t trials,
               std::uint64_t seed, unsigned threads) {
  std::vector<VerifyItem> items;
  auto add = [&](const std::string& name, bool holds, bool expected, std::string detail = "") {
    items.push_back({name, holds, expected, std::move(detail)});
  };

  const bool even1 = f1.p() == 2;
  const bool odd2 = f2.p() != 2;

  RankVector h1 = rank_vector(fano_arrangement(f1));
  RankVector h2 = rank_vector(dfz_arrangement(f2));

  // fixed characteristic-dependence probes
  {
    RankVector a = rank_vector(fano_arrangement(Field::make(2, 1)));
    RankVector b = rank_vector(fano_arrangement(Field::make(3, 1)));
    Mask w4 = 1u << 6, w12 = (1u << 3) | (1u << 4);
    add("H(W4|W1W2) over GF(2) = 0", cond_entropy(a, w4, w12) == 0, true);
    add("H(W4|W1W2) over GF(3) = 1", cond_entropy(b, w4, w12) == 1, true);
    RankVector c = rank_vector(dfz_arrangement(Field::make(3, 1)));
    RankVector d = rank_vector(dfz_arrangement(Field::make(2, 1)));
    Mask z3 = 1u << 2, v38 = 0b1111110000000;
    add("H(Z3|V3..V8) over GF(3) = 0", cond_entropy(c, z3, v38) == 0, true);
    add("H(Z3|V3..V8) over GF(2) = 1", cond_entropy(d, z3, v38) == 1, true);
  }

  {
    bool all = true;
    std::string first;
    for (const RankEquality& eq : fano_equalities())
      if (!eq.holds(h1)) {
        all = false;
        if (first.empty()) first = eq.name;
        break;
      }
    add("equality list holds on first block (" + f1.literal() + ")", all, even1,
        first.empty() ? "" : "fails " + first);
  }
  {
    bool all = true;
    std::string first;
    for (const RankEquality& eq : dfz_equalities())
      if (!eq.holds(h2)) {
        all = false;
        if (first.empty()) first = eq.name;
        break;
      }
    add("equality list holds on second block (" + f2.literal() + ")", all, odd2,
        first.empty() ? "" : "fails " + first);
  }

  add("first block is a polymatroid", is_polymatroid(h1), true);
  add("second block is a polymatroid", is_polymatroid(h2), true);
  add("first block is a matroid", is_matroid(h1), true);
  add("second block is a matroid", is_matroid(h2), true);
  add("first block is connected", is_connected(h1), true);
  add("second block is connected", is_connected(h2), true);

  RankVector sum_h = direct_sum(h1, h2);
  add("direct sum rank is 8", sum_h.at(sum_h.full_mask()) == 8, true,
      "got " + rat_str_short(sum_h.at(sum_h.full_mask())));
  add("direct sum is a polymatroid", is_polymatroid(sum_h), true);
  add("direct sum is disconnected", !is_connected(sum_h), true);

  bool built = true;
  std::string build_err;
  RankVector g;
  if (eps > 0) {
    try {
      g = phi_perturbed(eps, f1, f2);
    } catch (const std::exception& e) {
      built = false;
      build_err = e.what();
    }
  } else {
    g = epsilon_perturb(sum_h, eps);
  }
  add("perturbed vector built with block restrictions intact", built, true, build_err);
  if (!built) {
    g = epsilon_perturb(sum_h, eps);
  }

  add("perturbed vector is a polymatroid", is_polymatroid(g), true);

  Mask x1_mask = h1.full_mask();
  Mask x2_mask = g.full_mask() ^ x1_mask;
  Rational lhs = g.at(x1_mask) + g.at(x2_mask);
  Rational rhs = g.at(g.full_mask());
  {
    bool strict = lhs > rhs;
    std::string detail = rat_str_short(lhs) + (strict ? " > " : (lhs == rhs ? " = " : " < ")) +
                         rat_str_short(rhs);
    if (eps > 0) {
      add("restricted ranks exceed the total strictly", strict, true, detail);
    } else {
      add("restricted ranks exceed the total strictly", strict, false,
          detail + " (epsilon=0 gives equality; the construction needs epsilon>0)");
    }
  }

  {
    std::vector<Mask> block1, block2;
    for (std::uint32_t i = 0; i < h1.n(); ++i) block1.push_back(Mask(1) << i);
    for (std::uint32_t i = 0; i < h2.n(); ++i) block2.push_back(Mask(1) << (h1.n() + i));
    RankVector r1 = induce(g, block1);
    RankVector r2 = induce(g, block2);
    add("restriction to the first block equals its rank vector", r1.values() == h1.values(), true);
    add("restriction to the second block equals its rank vector", r2.values() == h2.values(),
        true);
    auto v1 = equality_set_check(h1, r1);
    auto v2 = equality_set_check(h2, r2);
    add("perturbed vector satisfies the first equality set", !v1.has_value(), true,
        v1 ? v1->describe(h1.ground()) : "");
    add("perturbed vector satisfies the second equality set", !v2.has_value(), true,
        v2 ? v2->describe(h2.ground()) : "");
  }

  {
    ScanOptions opts;
    opts.mode = ScanMode::sampled;
    opts.trials = trials;
    opts.seed = seed;
    opts.threads = threads;
    IngletonReport rep = ingleton_scan(g, opts);
    add("sampled scan finds no negative score", rep.min_score >= 0, true,
        "min " + rat_str_short(rep.min_score) + " over " + std::to_string(trials) + " quadruples");
  }

  {
    std::vector<Mask> ys = {1u << 0, 1u << 1, 1u << 2};
    std::vector<Mask> ws = {1u << 3, 1u << 4, 1u << 5, 1u << 6};
    add("throughput ratio of the first block is 1", dfz_ratio(h1, ys, ws) == 1, true);
    std::vector<Mask> zs, vs;
    for (int i = 0; i < 5; ++i) zs.push_back(1u << i);
    for (int i = 5; i < 13; ++i) vs.push_back(1u << i);
    add("throughput ratio of the second block is 1", dfz_ratio(h2, zs, vs) == 1, true);
  }

  int bad = 0;
  for (const VerifyItem& item : items) {
    std::string status = item.holds == item.expected ? (item.expected ? "pass" : "xfail")
                                                     : (item.holds ? "XPASS" : "FAIL");
    if (item.holds != item.expected) ++bad;
    json rec;
    rec["item"] = item.name;
    rec["status"] = status;
    if (!item.detail.empty()) rec["detail"] = item.detail;
    std::cout << rec.dump() << "\n";
  }
  std::cerr << (bad == 0 ? "verification passed" : "verification FAILED") << " ("
            << items.size() - std::size_t(bad) << "/" << items.size() << " items)\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polymatroid and subspace-rank toolkit"};
  app.require_subcommand(1);
  // --h is a documented option name, so the short -h help flag has to go.
  app.set_help_flag("--help", "print help");

  std::string h_file, h2_file, arr_file, out, out_dir, gens_dir;
  std::string field_lit = "GF(2)", field_x1 = "GF(2)", field_x2 = "GF(3)";
  std::string eps_text = "1", mode = "exhaustive", which, emit = "arr";
  std::string set_text, sets_text, num_text, den_text, preset;
  std::uint64_t trials = 1000000, seed = 1;
  unsigned threads = 0;
  std::uint32_t k = 1, gen_n = 4, gen_dim = 4;

  auto* construct = app.add_subcommand("construct", "emit a named construction");
  std::string what;
  construct->add_option("what", what, "fano|x2|phi|phi-eps")->required();
  construct->add_option("--field", field_lit, "field for fano/x2");
  construct->add_option("--field-x1", field_x1, "first block field for phi/phi-eps");
  construct->add_option("--field-x2", field_x2, "second block field for phi/phi-eps");
  construct->add_option("--epsilon", eps_text, "epsilon for phi-eps");
  construct->add_option("--emit", emit, "arr|rankvec (fano/x2 only)");
  construct->add_option("--out", out, "output path (default stdout)");

  auto* rank_cmd = app.add_subcommand("rank", "rank of one subset");
  rank_cmd->add_option("--h", h_file)->required();
  rank_cmd->add_option("--set", set_text)->required();

  auto* checkp = app.add_subcommand("check-polymatroid", "polymatroid axioms");
  checkp->add_option("--h", h_file)->required();

  auto* checkm = app.add_subcommand("check-matroid", "matroid conditions");
  checkm->add_option("--h", h_file)->required();

  auto* circ = app.add_subcommand("circuits", "minimal dependent sets, one hex mask per line");
  circ->add_option("--h", h_file)->required();

  auto* conn = app.add_subcommand("connected", "connectivity of a matroid");
  conn->add_option("--h", h_file)->required();

  auto* ing = app.add_subcommand("ingleton", "minimum Ingleton score");
  ing->add_option("--h", h_file)->required();
  ing->add_option("--mode", mode, "exhaustive|sampled");
  ing->add_option("--trials", trials);
  ing->add_option("--seed", seed);
  ing->add_option("--threads", threads);

  auto* pert = app.add_subcommand("perturb", "epsilon-perturb a rank vector");
  pert->add_option("--h", h_file)->required();
  pert->add_option("--epsilon", eps_text)->required();
  pert->add_option("--out", out);

  auto* ipert = app.add_subcommand("int-perturb", "integer perturbation of an arrangement");
  ipert->add_option("--arr", arr_file)->required();
  ipert->add_option("--k", k)->required();
  ipert->add_option("--out", out);

  auto* dsum = app.add_subcommand("direct-sum", "direct sum of two rank vectors");
  dsum->add_option("--h1", h_file)->required();
  dsum->add_option("--h2", h2_file)->required();
  dsum->add_option("--out", out);

  auto* ind = app.add_subcommand("induce", "rank vector induced by subset unions");
  ind->add_option("--h", h_file)->required();
  ind->add_option("--sets", sets_text, "comma-separated hex masks")->required();
  ind->add_option("--out", out);

  auto* eqs = app.add_subcommand("equalities", "evaluate a construction's equality list");
  eqs->add_option("--which", which, "x1|x2")->required();
  eqs->add_option("--h", h_file)->required();

  auto* ratio = app.add_subcommand("dfz-ratio", "min/max singleton rank ratio");
  ratio->add_option("--h", h_file)->required();
  ratio->add_option("--num", num_text, "numerator masks");
  ratio->add_option("--den", den_text, "denominator masks");
  ratio->add_option("--preset", preset, "fano|x2");

  auto* egen = app.add_subcommand("enum-gens", "enumerate representable generators");
  egen->add_option("--n", gen_n)->required();
  egen->add_option("--field", field_lit)->required();
  egen->add_option("--dim", gen_dim)->required();
  egen->add_option("--out-dir", out_dir)->required();

  auto* cmem = app.add_subcommand("cone-member", "conic membership with certificate");
  cmem->add_option("--h", h_file)->required();
  cmem->add_option("--gens", gens_dir)->required();

  auto* verify = app.add_subcommand("verify-paper", "end-to-end verification pipeline");
  verify->add_option("--field-x1", field_x1);
  verify->add_option("--field-x2", field_x2);
  verify->add_option("--epsilon", eps_text);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->set_help_flag("--help", "print help");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      if (what == "fano" || what == "x2") {
        Field f = Field::parse(construct->count("--field") ? field_lit
                                                           : (what == "fano" ? "GF(2)" : "GF(3)"));
        Arrangement arr = what == "fano" ? fano_arrangement(f) : dfz_arrangement(f);
        if (emit == "arr")
          emit_arr(out, arr);
        else if (emit == "rankvec")
          emit_rankvec(out, rank_vector(arr));
        else
          throw input_error("--emit must be arr or rankvec");
      } else if (what == "phi" || what == "phi-eps") {
        Field f1 = Field::parse(field_x1), f2 = Field::parse(field_x2);
        if (what == "phi")
          emit_rankvec(out, phi_base(f1, f2));
        else
          emit_rankvec(out, phi_perturbed(rat_parse(eps_text), f1, f2));
      } else {
        throw input_error("unknown construction: " + what);
      }
      return 0;
    }
    if (rank_cmd->parsed()) {
      RankVector h = load_rankvec(h_file);
      Mask a = parse_mask(set_text);
      json rec;
      rec["set"] = mask_hex(a);
      rec["rank"] = rat_str_short(rank(h, a));
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (checkp->parsed()) {
      RankVector h = load_rankvec(h_file);
      auto bad = polymatroid_violation(h);
      json rec;
      rec["polymatroid"] = !bad.has_value();
      if (bad) rec["violation"] = bad->describe();
      std::cout << rec.dump() << "\n";
      return bad ? 1 : 0;
    }
    if (checkm->parsed()) {
      RankVector h = load_rankvec(h_file);
      bool ok = is_matroid(h);
      json rec;
      rec["matroid"] = ok;
      std::cout << rec.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (circ->parsed()) {
      RankVector h = load_rankvec(h_file);
      for (Mask c : circuits(h)) std::cout << mask_hex(c) << "\n";
      return 0;
    }
    if (conn->parsed()) {
      RankVector h = load_rankvec(h_file);
      bool ok = is_connected(h);
      json rec;
      rec["connected"] = ok;
      std::cout << rec.dump() << "\n";
      return ok ? 0 : 1;
    }
    if (ing->parsed()) {
      RankVector h = load_rankvec(h_file);
      ScanOptions opts;
      if (mode == "exhaustive")
        opts.mode = ScanMode::exhaustive;
      else if (mode == "sampled")
        opts.mode = ScanMode::sampled;
      else
        throw input_error("--mode must be exhaustive or sampled");
      opts.trials = trials;
      opts.seed = seed;
      opts.threads = threads;
      std::cout << ingleton_json(ingleton_scan(h, opts)).dump() << "\n";
      return 0;
    }
    if (pert->parsed()) {
      RankVector h = load_rankvec(h_file);
      emit_rankvec(out, epsilon_perturb(h, rat_parse(eps_text)));
      return 0;
    }
    if (ipert->parsed()) {
      Arrangement arr = load_arr(arr_file);
      emit_arr(out, integer_perturb(arr, k));
      return 0;
    }
    if (dsum->parsed()) {
      emit_rankvec(out, direct_sum(load_rankvec(h_file), load_rankvec(h2_file)));
      return 0;
    }
    if (ind->parsed()) {
      emit_rankvec(out, induce(load_rankvec(h_file), parse_mask_list(sets_text)));
      return 0;
    }
    if (eqs->parsed()) {
      RankVector h = load_rankvec(h_file);
      auto list = which == "x1" ? fano_equalities()
                                : which == "x2" ? dfz_equalities()
                                                : throw input_error("--which must be x1 or x2");
      bool all = true;
      for (const RankEquality& eq : list) {
        Rational v = eval_expr(h, eq.expr);
        json rec;
        rec["name"] = eq.name;
        rec["value"] = rat_str_short(v);
        rec["holds"] = v == 0;
        std::cout << rec.dump() << "\n";
        if (v != 0) all = false;
      }
      std::cerr << (all ? "all equalities hold" : "some equalities fail") << "\n";
      return all ? 0 : 1;
    }
    if (ratio->parsed()) {
      RankVector h = load_rankvec(h_file);
      std::vector<Mask> nums, dens;
      if (!preset.empty()) {
        if (preset == "fano") {
          for (int i = 0; i < 3; ++i) nums.push_back(1u << i);
          for (int i = 3; i < 7; ++i) dens.push_back(1u << i);
        } else if (preset == "x2") {
          for (int i = 0; i < 5; ++i) nums.push_back(1u << i);
          for (int i = 5; i < 13; ++i) dens.push_back(1u << i);
        } else {
          throw input_error("--preset must be fano or x2");
        }
      } else {
        nums = parse_mask_list(num_text);
        dens = parse_mask_list(den_text);
      }
      json rec;
      rec["ratio"] = rat_str_short(dfz_ratio(h, nums, dens));
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (egen->parsed()) {
      GeneratorSet gens = enumerate_generators(gen_n, Field::parse(field_lit), gen_dim);
      save_generators(out_dir, gens);
      json rec;
      rec["generators"] = gens.generators.size();
      rec["subspaces"] = gens.subspace_count;
      rec["tuples"] = gens.tuples_scanned;
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (cmem->parsed()) {
      RankVector h = load_rankvec(h_file);
      GeneratorSet gens = load_generators(gens_dir);
      MembershipCertificate cert = cone_member(h, gens);
      json rec;
      rec["member"] = cert.member;
      if (cert.member) {
        json coeffs = json::array();
        for (const auto& [j, c] : cert.coefficients)
          coeffs.push_back({{"generator", j}, {"coefficient", rat_str_short(c)}});
        rec["coefficients"] = coeffs;
      } else {
        json lam = json::array();
        for (const Rational& v : cert.separating) lam.push_back(rat_str_short(v));
        rec["separating"] = lam;
        std::cerr << "non-member relative to the supplied finite generator set; this does not "
                     "by itself decide membership in the full representable cone\n";
      }
      std::cout << rec.dump() << "\n";
      return 0;
    }
    if (verify->parsed()) {
      return run_verify(Field::parse(field_x1), Field::parse(field_x2), rat_parse(eps_text),
                        trials, seed, threads);
    }
  } catch (const size_error& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
