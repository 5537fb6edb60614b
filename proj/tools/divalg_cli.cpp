#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "divalg/csa/catalog.hpp"
#include "divalg/error.hpp"
#include "divalg/exact/catalog.hpp"
#include "divalg/exact/field_ops.hpp"
#include "divalg/exact/modular.hpp"
#include "divalg/groups/balanced.hpp"
#include "divalg/projective/normal_core.hpp"
#include "divalg/scenarios/runners.hpp"

using namespace divalg;

namespace {

enum Exit { kPass = 0, kInput = 2, kBound = 3, kInconclusive = 4, kCheckFailed = 5 };

struct Globals {
  std::string fields = std::string(DIVALG_DATA_DIR) + "/fields.json";
  std::string algebras = std::string(DIVALG_DATA_DIR) + "/algebras.json";
  std::string catalog = std::string(DIVALG_DATA_DIR) + "/catalog.json";
  std::string report_dir;
  std::string output = "json";
  std::uint64_t seed = 0x5EED;
  std::size_t closure_bound = projective::kDefaultClosureBound;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded:
    case ErrorCode::SearchBoundExceeded:
      return kBound;
    case ErrorCode::HeuristicInconclusive:
      return kInconclusive;
    case ErrorCode::CrossCheckFailed:
    case ErrorCode::StabilityCheckFailed:
      return kCheckFailed;
    default:
      return kInput;
  }
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void emit(const Json& doc, const std::string& mode) {
  if (mode == "pretty") {
    std::cout << doc.dump(2) << "\n";
  } else if (mode == "tsv") {
    for (const auto& [key, value] : doc.items()) std::cout << key << "\t" << value.dump() << "\n";
  } else {
    std::cout << doc.dump() << "\n";
  }
}

Json element_list(const std::vector<csa::AlgebraElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rationals_to_json(x.flat()));
  return out;
}

Json element_list(const projective::ProjectiveGroup& g) {
  Json out = Json::array();
  for (const auto& x : g.elements) out.push_back(rationals_to_json(x.rep().flat()));
  return out;
}

Json group_action(const std::string& action, const projective::ProjectiveGroup& g, std::size_t bound) {
  Json out{{"algebra", g.algebra->label()}, {"order", g.order()}};
  if (action == "closure") {
    out["elements"] = element_list(g);
    out["table"] = groups::group_to_json(g.table)["table"];
    return out;
  }
  if (action == "gamma") {
    const auto r = projective::gamma_of(g);
    Json pairing = Json::array();
    for (const auto& row : r.paired.paired.pairing) pairing.push_back(rationals_to_json(row));
    out["invariant_factors"] = r.paired.paired.invariant_factors;
    out["pairing"] = pairing;
    out["gamma"] = r.gamma;
    out["gamma_order"] = r.gamma.size();
    out["field_degree"] = r.field.degree;
    out["elements"] = element_list(g);
    return out;
  }
  const auto ng = projective::compute_NG(g, bound);
  out["n_g"] = ng.members;
  out["n_g_order"] = ng.members.size();
  out["is_normal"] = ng.is_normal;
  out["quotient_order"] = g.order() / ng.members.size();
  out["quotient_abelian"] = ng.quotient_abelian;
  if (action == "ng") {
    Json lifts = Json::object();
    for (const auto& [x, fl] : ng.lifts) lifts[std::to_string(x)] = Json{{"alpha", fl.alpha}, {"order", fl.order}};
    out["lifts"] = lifts;
    out["elements"] = element_list(g);
  } else if (action == "lift") {
    const auto lifted = projective::lift_NG(g, ng, bound);
    out["lift_order"] = lifted.elements.size();
    out["structure"] = groups::recognize(lifted.table).to_string();
    out["projects_onto"] = lifted.projects_onto;
    out["orders"] = lifted.orders;
    out["lift_elements"] = element_list(lifted.elements);
    out["lift_table"] = groups::group_to_json(lifted.table)["table"];
  } else {
    const auto inv = projective::invariant_subfield(g, ng);
    out["branch"] = inv.branch;
    out["degree"] = inv.field.degree;
    out["generators_from"] = inv.generators_from;
    out["acting_trivially"] = inv.acting_trivially;
  }
  return out;
}

void write_reports(const std::vector<scenarios::VerificationReport>& reports, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : reports) {
    std::ofstream(dir + "/" + r.scenario() + ".json") << r.to_json().dump(2) << "\n";
    std::ofstream(dir + "/" + r.scenario() + ".tsv") << r.to_tsv();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subgroups of central division algebras: exact arithmetic and verification suites"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--fields", g.fields, "field catalog")->check(CLI::ExistingFile);
  app.add_option("--algebras", g.algebras, "algebra catalog")->check(CLI::ExistingFile);
  app.add_option("--catalog", g.catalog, "group catalog")->check(CLI::ExistingFile);
  app.add_option("--report-dir", g.report_dir, "write verification reports here");
  app.add_option("--output", g.output, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--seed", g.seed, "seed for sampling");
  app.add_option("--closure-bound", g.closure_bound, "maximum group size during closure")->check(CLI::PositiveNumber);

  auto* nrd = app.add_subcommand("nrd", "reduced norm of an element");
  std::string algebra_label, element;
  nrd->add_option("--algebra", algebra_label)->required();
  nrd->add_option("--element", element, "comma-separated rationals, z-major")->required();

  auto* group = app.add_subcommand("group", "projective group pipelines");
  std::string action, spec_path;
  group->add_option("action", action)->required()->check(CLI::IsMember({"closure", "ng", "lift", "gamma", "subfield"}));
  group->add_option("--spec", spec_path)->required()->check(CLI::ExistingFile);

  auto* sdp = app.add_subcommand("sdp", "balanced semidirect products");
  std::string sdp_action, table_path;
  std::uint64_t n = 0, p = 0;
  sdp->add_option("action", sdp_action)->required()->check(CLI::IsMember({"exists", "build", "classify"}));
  sdp->add_option("n", n);
  sdp->add_option("p_arg", p);
  sdp->add_option("--group", table_path)->check(CLI::ExistingFile);
  sdp->add_option("--p", p);

  auto* verify = app.add_subcommand("verify", "run verification scenarios");
  std::string scenario;
  scenarios::SuiteOptions opts;
  std::vector<std::string> names = scenarios::scenario_names();
  names.push_back("all");
  verify->add_option("scenario", scenario)->required()->check(CLI::IsMember(names));
  verify->add_option("--n-max", opts.n_max, "balanced suite bound");
  verify->add_option("--max-order", opts.gamma_max_order, "gamma suite group order bound")->check(CLI::Range(1, 64));
  verify->add_option("--pairings", opts.pairings_per_shape, "gamma suite pairings per shape")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ParseError: " << one_line(e.what()) << "\n";
    return kInput;
  }

  try {
    const auto fields = exact::FieldCatalog::load(g.fields);
    const auto algebras = csa::AlgebraCatalog::load(g.algebras, fields);

    if (*nrd) {
      const auto& alg = algebras.get(algebra_label);
      const auto x = alg->from_flat(parse_rational_list(element));
      const auto norm = csa::reduced_norm(x);
      const auto order = exact::is_root_of_unity(norm);
      emit(Json{{"nrd", rationals_to_json(norm.coords())}, {"is_root_of_unity", order ? Json(*order) : Json(false)}}, g.output);
      return kPass;
    }
    if (*group) {
      const auto spec = scenarios::load_group_spec(spec_path);
      const auto pg = scenarios::build_group(spec, algebras, g.closure_bound);
      emit(group_action(action, pg, g.closure_bound), g.output);
      return kPass;
    }
    if (*sdp) {
      if (sdp_action == "classify") {
        if (table_path.empty() || p == 0) fail(ErrorCode::InvalidArgument, "classify needs --group and --p");
        if (!groups::is_odd_prime(p)) fail(ErrorCode::InvalidArgument, "p must be an odd prime");
        const auto table = groups::group_from_json(read_json_file(table_path));
        const auto e = groups::embeds_in_balanced_shape(table, p);
        Json out{{"order", table.order()}, {"p", p}, {"embeds", e.has_value()}};
        if (e) {
          out["n"] = e->n;
          out["r"] = e->r;
          out["images"] = e->images;
        }
        emit(out, g.output);
        return kPass;
      }
      if (n == 0 || p == 0) fail(ErrorCode::InvalidArgument, sdp_action + " needs positive n and p");
      if (sdp_action == "exists") {
        const bool exists = groups::balanced_exists(n, p);
        Json witness = Json::array();
        for (auto [q, e] : exact::factor_u64(n)) witness.push_back(Json{{"prime", q}, {"mod_p", q % p}});
        emit(Json{{"n", n}, {"p", p}, {"exists", exists}, {"prime_factors", witness}}, g.output);
      } else {
        const auto [d, table] = groups::balanced_build(n, p);
        emit(Json{{"n", d.n}, {"p", d.p}, {"r", d.r}, {"order", table.order()}, {"table", groups::group_to_json(table)["table"]}},
             g.output);
      }
      return kPass;
    }

    const auto catalog = scenarios::GroupCatalog::load(g.catalog, algebras);
    const scenarios::Context ctx{&fields, &algebras, &catalog, g.closure_bound, g.seed};
    const auto reports = scenarios::run_scenario(scenario, ctx, opts);
    if (!g.report_dir.empty()) write_reports(reports, g.report_dir);
    std::vector<std::string> failing;
    bool any_fail = false;
    for (const auto& r : reports) {
      if (g.output == "json") {
        std::cout << r.to_json().dump() << "\n";
      } else if (g.output == "tsv") {
        std::cout << r.to_tsv();
      } else {
        std::cout << r.to_pretty();
      }
      for (const auto& id : r.failing_ids()) failing.push_back(r.scenario() + ":" + id);
      any_fail = any_fail || r.overall() == scenarios::Status::Fail;
    }
    if (!failing.empty()) {
      std::string list;
      for (const auto& id : failing) list += (list.empty() ? "" : ",") + id;
      std::cerr << (any_fail ? "CheckFailed: " : "Inconclusive: ") << list << "\n";
    }
    if (any_fail) return kCheckFailed;
    return failing.empty() ? kPass : kInconclusive;
  } catch (const Error& e) {
    std::cerr << one_line(e.what()) << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "InvalidArgument: " << one_line(e.what()) << "\n";
    return kInput;
  }
}
