// slip: exact multigraded commutative algebra for ideals of points in toric
// varieties.  JSON in, JSON out; see README for the file formats.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "slip/constructions.hpp"
#include "slip/criteria.hpp"
#include "slip/json_io.hpp"
#include "slip/registry.hpp"
#include "slip/ringmaps.hpp"

using namespace slip;

namespace {

int emit(const json& report, const std::string& json_out, int exit_code = 0) {
  std::string text = report.dump(2);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << text << "\n";
  }
  std::cout << text << "\n";
  return exit_code;
}

struct IdealArg {
  CoxPtr ring;
  Ideal ideal;
};

IdealArg load_ideal(const std::string& arg) {
  IdealArg out;
  out.ideal = ideal_from_json(load_json_arg(arg), &out.ring);
  return out;
}

MonomialOrder order_from_name(const std::string& name, const CoxPtr& ring) {
  std::vector<int> prio(ring->nvars());
  for (std::size_t i = 0; i < prio.size(); ++i) prio[i] = static_cast<int>(i);
  if (name == "grevlex") return MonomialOrder::grevlex(prio);
  if (name == "lex") return MonomialOrder::lex(prio);
  if (name == "product") {
    // per-block lex with later blocks dominating, the shape used by the
    // degreewise constructions
    int split = 0;
    while (split < static_cast<int>(ring->nvars()) && ring->block[split] == ring->block[0])
      ++split;
    std::vector<int> px(split), py(ring->nvars() - split);
    for (int i = 0; i < split; ++i) px[i] = i;
    for (std::size_t i = 0; i < py.size(); ++i) py[i] = static_cast<int>(i);
    return MonomialOrder::product(split, MonomialOrder::lex(px), MonomialOrder::lex(py));
  }
  throw std::invalid_argument("unknown order: " + name);
}

DegreeSet degree_set_from_string(const std::string& s, int rank) {
  if (s == "all") return DegreeSet::all(rank);
  if (s == "none" || s.empty()) return DegreeSet::empty(rank);
  std::vector<MultiDegree> gens;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<long> v;
    std::stringstream ts(item);
    std::string c;
    while (std::getline(ts, c, ',')) v.push_back(std::stol(c));
    if (static_cast<int>(v.size()) != rank)
      throw std::invalid_argument("degree set generator of wrong rank: " + item);
    gens.push_back(MultiDegree(std::move(v)));
  }
  return DegreeSet::upward(std::move(gens), rank);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraded ideals of points in toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_out;
  app.add_option("--json-out", json_out, "also write the report to this path");

  // ---- hf ----
  auto* hf_cmd = app.add_subcommand("hf", "Hilbert function of S/I on a window");
  std::string hf_ideal, hf_window = "0..5", hf_order = "grevlex";
  long hf_r = 0;
  hf_cmd->add_option("--ideal", hf_ideal, "ideal JSON (file or inline)")->required();
  hf_cmd->add_option("--window", hf_window, "degree window a..b");
  hf_cmd->add_option("--order", hf_order, "lex|grevlex|product");
  hf_cmd->add_option("--r", hf_r, "also compare against h_{r,X}");

  // ---- saturate ----
  auto* sat_cmd = app.add_subcommand("saturate", "(I : B(X)^inf)");
  std::string sat_ideal;
  sat_cmd->add_option("--ideal", sat_ideal)->required();

  // ---- restrict ----
  auto* res_cmd = app.add_subcommand("restrict", "I ∩ S[kept factors]");
  std::string res_ideal, res_factors = "0";
  res_cmd->add_option("--ideal", res_ideal)->required();
  res_cmd->add_option("--factors", res_factors, "comma-separated factor indices (0-based)");

  // ---- preimage ----
  auto* pre_cmd = app.add_subcommand("preimage", "phi^{-1}(I) under a graded ring map");
  std::string pre_map, pre_ideal;
  bool pre_recheck = false;
  pre_cmd->add_option("--map", pre_map, "map JSON (file or inline)")->required();
  pre_cmd->add_option("--ideal", pre_ideal)->required();
  pre_cmd->add_flag("--recheck-saturation", pre_recheck);

  // ---- segre-check ----
  auto* seg_cmd = app.add_subcommand("segre-check", "degree-u embedding criterion");
  std::string seg_ring, seg_u;
  long seg_r = 2, seg_window = 5;
  seg_cmd->add_option("--ring", seg_ring)->required();
  seg_cmd->add_option("--u", seg_u, "degree, e.g. 1,4")->required();
  seg_cmd->add_option("--r", seg_r)->required();
  seg_cmd->add_option("--d-window", seg_window);

  // ---- hom-dim ----
  auto* hom_cmd = app.add_subcommand("hom-dim", "dim Hom_S(J, S/J)_0");
  std::string hom_ideal;
  hom_cmd->add_option("--ideal", hom_ideal)->required();

  // ---- ext1-dim ----
  auto* ext_cmd = app.add_subcommand("ext1-dim", "dim Ext^1_S(J/I, S/J)_0");
  std::string ext_ideal, ext_other;
  bool ext_sat = false;
  ext_cmd->add_option("--ideal", ext_ideal, "the smaller ideal I")->required();
  ext_cmd->add_option("--j", ext_other, "the larger ideal J (same ring)");
  ext_cmd->add_flag("--saturate", ext_sat, "use J = (I : B^inf)");

  // ---- tangent ----
  auto* tan_cmd = app.add_subcommand("tangent", "factor tangent-space criterion");
  std::string tan_ideal;
  long tan_r = 2;
  int tan_i = 1;
  bool tan_gate = false, tan_all = false;
  tan_cmd->add_option("--ideal", tan_ideal)->required();
  tan_cmd->add_option("--r", tan_r)->required();
  tan_cmd->add_option("--i", tan_i, "factor index (1-based)");
  tan_cmd->add_flag("--all-factors", tan_all);
  tan_cmd->add_flag("--gate-excluded", tan_gate, "exit 1 unless the verdict is excluded");

  // ---- tangent-custom ----
  auto* tc_cmd = app.add_subcommand("tangent-custom", "criterion for custom A ⊆ B");
  std::string tc_ideal, tc_a = "none", tc_b = "all", tc_cert = "user-asserted";
  std::string tc_window = "0..6";
  long tc_r = 2, tc_lbound = 10, tc_we = 0, tc_wf = 1;
  bool tc_gate = false;
  tc_cmd->add_option("--ideal", tc_ideal)->required();
  tc_cmd->add_option("--r", tc_r)->required();
  tc_cmd->add_option("--A", tc_a, "antichain 'u1,u2;v1,v2' or all|none");
  tc_cmd->add_option("--B", tc_b, "antichain or all");
  tc_cmd->add_option("--certificate", tc_cert,
                     "user-asserted|factor-square|witness-constant-e|witness-hirzebruch");
  tc_cmd->add_option("--witness-e", tc_we);
  tc_cmd->add_option("--witness-f", tc_wf);
  tc_cmd->add_option("--lbound", tc_lbound);
  tc_cmd->add_option("--window", tc_window);
  tc_cmd->add_flag("--gate-excluded", tc_gate);

  // ---- lift3 ----
  auto* l3_cmd = app.add_subcommand("lift3", "degreewise product lift of I_X to X x Y");
  std::string l3_ideal, l3_yring, l3_bound = "4";
  long l3_r = 2;
  l3_cmd->add_option("--ideal", l3_ideal, "I_X")->required();
  l3_cmd->add_option("--y-ring", l3_yring)->required();
  l3_cmd->add_option("--r", l3_r)->required();
  l3_cmd->add_option("--bound", l3_bound, "harvest bound per coordinate");

  // ---- lift4 ----
  auto* l4_cmd = app.add_subcommand("lift4", "apolarity lift of a saturated ideal");
  std::string l4_ideal;
  long l4_r = 4;
  l4_cmd->add_option("--ideal", l4_ideal)->required();
  l4_cmd->add_option("--r", l4_r)->required();

  // ---- p1p1 ----
  auto* pp_cmd = app.add_subcommand("p1p1", "the rank-2 construction with its embedding");
  long pp_r = 4;
  bool pp_full = false;
  pp_cmd->add_option("--r", pp_r)->required();
  pp_cmd->add_flag("--check-embedding", pp_full, "also run the preimage pipeline");

  // ---- map-check ----
  auto* mc_cmd = app.add_subcommand("map-check", "gradedness + lift conditions of a map");
  std::string mc_map, mc_rays, mc_builtin;
  mc_cmd->add_option("--map", mc_map, "map JSON");
  mc_cmd->add_option("--rays", mc_rays, "toric data JSON: source_rays/target_rays/delta");
  mc_cmd->add_option("--builtin", mc_builtin, "blowdown-h1");

  // ---- classify ----
  auto* cl_cmd = app.add_subcommand("classify", "irreducibility of Hilb^{h_{r,X}}");
  long cl_r = 1;
  std::string cl_ns = "1";
  cl_cmd->add_option("--r", cl_r)->required();
  cl_cmd->add_option("--ns", cl_ns, "comma-separated factor dimensions")->required();

  // ---- example ----
  auto* ex_cmd = app.add_subcommand("example", "run a registry case");
  std::string ex_id;
  bool ex_all = false;
  ex_cmd->add_option("id", ex_id, "case id");
  ex_cmd->add_flag("--all", ex_all);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hf_cmd) {
      auto [ring, ideal] = load_ideal(hf_ideal);
      DegreeBox box = parse_window(hf_window, ring->pic_rank);
      MonomialOrder order = order_from_name(hf_order, ring);
      json values = json::array();
      bool ok = true;
      for (const auto& d : box.degrees()) {
        long hf = hf_quotient(ideal, d, order);
        json row = {{"degree", multidegree_to_json(d)}, {"hf", hf}};
        if (hf_r > 0) {
          long tg = h_target(*ring, hf_r, d);
          row["target"] = tg;
          ok = ok && hf == tg;
        }
        values.push_back(row);
      }
      json rep = {{"values", values}};
      if (hf_r > 0) rep["ok"] = ok;
      return emit(rep, json_out);
    }
    if (*sat_cmd) {
      auto [ring, ideal] = load_ideal(sat_ideal);
      Ideal s = saturate_irrelevant(ideal);
      return emit(ideal_to_json(*ring, s), json_out);
    }
    if (*res_cmd) {
      auto [ring, ideal] = load_ideal(res_ideal);
      std::vector<int> factors;
      std::stringstream ss(res_factors);
      std::string item;
      while (std::getline(ss, item, ',')) factors.push_back(std::stoi(item));
      CoxPtr sub;
      Ideal r = restrict_to_factors(ideal, factors, &sub);
      return emit(ideal_to_json(*sub, r), json_out);
    }
    if (*pre_cmd) {
      GradedRingMap map = map_from_json(load_json_arg(pre_map));
      auto [ring, ideal] = load_ideal(pre_ideal);
      PreimageReport rep;
      Ideal result = preimage(map, ideal, &rep, pre_recheck);
      json out = ideal_to_json(*map.source, result);
      out["report"] = preimage_report_to_json(rep);
      return emit(out, json_out);
    }
    if (*seg_cmd) {
      CoxPtr ring = ring_from_json(load_json_arg(seg_ring));
      std::vector<long> u;
      std::stringstream ss(seg_u);
      std::string item;
      while (std::getline(ss, item, ',')) u.push_back(std::stol(item));
      auto rep = check_embedding_conditions(ring, MultiDegree(std::move(u)), seg_r, seg_window);
      return emit(embedding_report_to_json(rep), json_out);
    }
    if (*hom_cmd) {
      auto [ring, ideal] = load_ideal(hom_ideal);
      return emit({{"dim", hom_dim_degree_zero(ideal)}}, json_out);
    }
    if (*ext_cmd) {
      auto [ring, ideal] = load_ideal(ext_ideal);
      Ideal j;
      if (ext_sat)
        j = saturate_irrelevant(ideal);
      else if (!ext_other.empty())
        j = ideal_from_json(load_json_arg(ext_other));
      else
        throw std::invalid_argument("ext1-dim needs --j or --saturate");
      return emit({{"dim", ext1_dim_degree_zero(ideal, j)}}, json_out);
    }
    if (*tan_cmd) {
      auto [ring, ideal] = load_ideal(tan_ideal);
      json reports = json::array();
      bool all_excluded = true, any_excluded = false;
      std::vector<int> is;
      if (tan_all)
        for (int i = 0; i < ring->pic_rank; ++i) is.push_back(i);
      else
        is.push_back(tan_i - 1);
      for (int i : is) {
        auto rep = tangent_criterion_factor(ideal, tan_r, i);
        reports.push_back(criterion_report_to_json(rep));
        all_excluded = all_excluded && rep.verdict == "excluded";
        any_excluded = any_excluded || rep.verdict == "excluded";
      }
      json out = reports.size() == 1 ? reports[0] : json{{"reports", reports}};
      return emit(out, json_out, tan_gate && !any_excluded ? 1 : 0);
    }
    if (*tc_cmd) {
      auto [ring, ideal] = load_ideal(tc_ideal);
      DegreeSet a = degree_set_from_string(tc_a, ring->pic_rank);
      DegreeSet b = degree_set_from_string(tc_b, ring->pic_rank);
      CertificateSpec cert;
      cert.lbound = tc_lbound;
      cert.window = parse_window(tc_window, ring->pic_rank);
      if (tc_cert == "user-asserted") {
        cert.kind = CertificateSpec::Kind::UserAsserted;
      } else if (tc_cert == "factor-square") {
        cert.kind = CertificateSpec::Kind::BuiltinFactorSquare;
      } else if (tc_cert == "witness-constant-e") {
        cert.kind = CertificateSpec::Kind::Witness;
        cert.witness.kind = SufficiencyWitness::Kind::ConstantE;
        cert.witness.e = MultiDegree{tc_we};
        cert.witness.f = MultiDegree{tc_wf};
      } else if (tc_cert == "witness-hirzebruch") {
        cert.kind = CertificateSpec::Kind::Witness;
        cert.witness.kind = SufficiencyWitness::Kind::HirzebruchFiber;
      } else {
        throw std::invalid_argument("unknown certificate: " + tc_cert);
      }
      auto rep = tangent_criterion_custom(ideal, tc_r, a, b, cert);
      bool excluded = rep.verdict == "excluded" || rep.verdict == "excluded-conditional";
      return emit(criterion_report_to_json(rep), json_out, tc_gate && !excluded ? 1 : 0);
    }
    if (*l3_cmd) {
      auto [xring, ix] = load_ideal(l3_ideal);
      CoxPtr yring = ring_from_json(load_json_arg(l3_yring));
      long bound = std::stol(l3_bound);
      MultiDegree bx(std::vector<long>(xring->pic_rank, bound));
      MultiDegree by(std::vector<long>(yring->pic_rank, bound));
      auto res = product_lift(ix, yring, l3_r, xring->default_order(),
                              yring->default_order(), bx, by);
      json out = ideal_to_json(*res.plan.xy, res.harvested);
      out["closure_ok"] = res.closure_ok;
      out["hf"] = hf_report_to_json(hf_matches_target(
          res.harvested, l3_r,
          DegreeBox(MultiDegree::zero(bx.size() + by.size()), res.plan.combine_degree(bx, by))));
      return emit(out, json_out);
    }
    if (*l4_cmd) {
      auto [ring, j] = load_ideal(l4_ideal);
      auto lift = apolarity_lift(j, l4_r);
      json out = ideal_to_json(*ring, lift.ideal);
      out["a"] = lift.a;
      out["b"] = lift.b;
      out["hf"] = hf_report_to_json(
          hf_matches_target(lift.ideal, l4_r, DegreeBox::cube(1, 0, lift.b + l4_r)));
      return emit(out, json_out);
    }
    if (*pp_cmd) {
      auto c = construct_p1p1_ideal(pp_r);
      json out = ideal_to_json(*c.ring, c.ideal);
      out["hf"] = hf_report_to_json(
          hf_matches_target(c.ideal, pp_r, DegreeBox::cube(2, 0, pp_r + 2)));
      if (pp_full) {
        auto emb = check_embedding_conditions(c.ring, MultiDegree{1, pp_r}, pp_r);
        out["embedding"] = embedding_report_to_json(emb);
        auto map = segre_map(c.ring, MultiDegree{1, pp_r}, pp_r, c.order);
        Ideal k = preimage(map, c.ideal);
        Ideal ksat = saturate_irrelevant(k);
        out["K_sat"] = polys_to_json(ksat.generators());
        Monomial m(map.source->nvars(), 0);
        m[0] = static_cast<int>(pp_r - 2);
        out["t1_pow_rm2_in_K"] =
            membership(Polynomial::monomial(
                           std::static_pointer_cast<const Ring>(map.source), m),
                       k);
      }
      return emit(out, json_out);
    }
    if (*mc_cmd) {
      GradedRingMap map;
      std::optional<ToricLiftData> data;
      if (mc_builtin == "blowdown-h1") {
        auto bl = hirzebruch_blowdown_lift();
        map = bl.map;
        data = bl.data;
      } else if (!mc_map.empty()) {
        map = map_from_json(load_json_arg(mc_map));
      } else {
        throw std::invalid_argument("map-check needs --map or --builtin");
      }
      if (!mc_rays.empty()) {
        json rj = load_json_arg(mc_rays);
        ToricLiftData d;
        d.source_rays = rj.at("source_rays").get<std::vector<std::vector<long>>>();
        d.target_rays = rj.at("target_rays").get<std::vector<std::vector<long>>>();
        d.delta = rj.at("delta").get<std::vector<std::vector<long>>>();
        data = d;
      }
      map.validate();
      json out = {{"graded", true}, {"B_condition", check_lift_B_condition(map)}};
      if (data) out["toric_identity"] = toric_lift_identity_check(map, *data);
      return emit(out, json_out);
    }
    if (*cl_cmd) {
      std::vector<int> ns;
      std::stringstream ss(cl_ns);
      std::string item;
      while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
      return emit({{"irreducible", classify_products_irreducible(cl_r, ns)}}, json_out);
    }
    if (*ex_cmd) {
      const auto& reg = example_registry();
      if (ex_all) {
        json arr = json::array();
        bool ok = true;
        for (const auto& [id, runner] : reg) {
          auto outcome = runner();
          ok = ok && outcome.ok;
          arr.push_back(outcome_to_json(outcome));
        }
        return emit({{"examples", arr}, {"ok", ok}}, json_out, ok ? 0 : 1);
      }
      auto it = reg.find(ex_id);
      if (it == reg.end()) throw std::invalid_argument("unknown example id: " + ex_id);
      auto outcome = it->second();
      return emit(outcome_to_json(outcome), json_out, outcome.ok ? 0 : 1);
    }
  } catch (const std::exception& ex) {
    json err = {{"error", ex.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 2;
}
