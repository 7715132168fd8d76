#pragma once

// Command-line front end. Parses ring/ideal JSON specs, dispatches the
// computations and emits a JSON report on stdout (deterministic bytes for
// fixed input and flags) plus a one-line human summary on stderr.
//
// Exit codes: 0 success, 1 validation/usage error, 2 resource guard,
// 3 internal invariant violation (never expected).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobcone/detmat.hpp"
#include "frobcone/json_io.hpp"

namespace frobcone::cli {

struct Options {
  std::string ring_path;
  std::string ideal_path;
  std::string sop_path;
  std::string start;
  int e = 1;
  int e_max = 3;
  int m = 1, n = 1;
  bool interior = false;
  bool fit = false;
  bool timing = false;
  long long max_points = -1;
  int threads = 1;
};

namespace detail {

inline Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) fail_validation("FileNotFound", "cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    fail_validation("ParseError", std::string("invalid JSON: ") + e.what());
  }
}

inline VecZ parse_signature(const std::string& text, Index expected) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      entries.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail_validation("ParseError", "signature entries must be integers: '" + item + "'");
    }
  }
  if (static_cast<Index>(entries.size()) != expected)
    fail_validation("ParseError", "signature must have one entry per facet");
  return vecz_from(entries);
}

inline Limits make_limits(const Options& opt) {
  Limits limits;
  if (opt.max_points > 0) {
    limits.max_lattice_points = opt.max_points;
    limits.max_decompose_points = opt.max_points;
  }
  limits.threads = opt.threads;
  return limits;
}

inline Json limits_json(const Limits& limits) {
  return Json{{"max_lattice_points", limits.max_lattice_points},
              {"max_decompose_points", limits.max_decompose_points},
              {"threads", limits.threads}};
}

struct LoadedRing {
  Json spec;
  CheckedRing ring;
};

inline LoadedRing load_ring(const Options& opt, std::istream& in) {
  Json spec = read_json(opt.ring_path, in);
  return LoadedRing{spec, validate(parse_ring(spec))};
}

inline Json sequence_json(const FSignatureReport& rep) {
  Json seq = Json::array();
  for (const auto& [e, value] : rep.sequence)
    seq.push_back(Json{{"e", e}, {"value", rat_json(value)}});
  return seq;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"frobcone: exact Frobenius decompositions, Cohen-Macaulay cone certificates and "
               "Hilbert-Kunz functions for toric rings"};
  app.require_subcommand(1);

  Options opt;

  std::vector<CLI::App*> subs;
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", opt.ring_path, "ring spec JSON file ('-' for stdin)")->required();
    return sub;
  };

  subs.push_back(add_ring(app.add_subcommand("validate", "check a ring spec")));
  subs.push_back(add_ring(app.add_subcommand("clgroup", "divisor class group and conic classes")));
  {
    CLI::App* sub = add_ring(app.add_subcommand("decompose", "Frobenius direct image decomposition"));
    sub->add_option("--e", opt.e, "Frobenius exponent")->required();
    sub->add_option("--start", opt.start, "start signature, comma-separated integers");
    subs.push_back(sub);
  }
  subs.push_back(add_ring(app.add_subcommand("mu", "fundamental class as exact limit multiplicities")));
  {
    CLI::App* sub = add_ring(app.add_subcommand("cone", "Cohen-Macaulay cone membership with certificate"));
    sub->add_option("--emax", opt.e_max, "decompose up to this exponent")->required();
    sub->add_flag("--interior", opt.interior, "test interior membership");
    subs.push_back(sub);
  }
  subs.push_back(add_ring(app.add_subcommand("realize", "integral realization n*mu = [N]")));
  subs.push_back(add_ring(app.add_subcommand("xi", "canonical-duality involution on conic classes")));
  {
    CLI::App* sub = add_ring(app.add_subcommand("fsig", "F-signature: exact limit and finite sequence"));
    sub->add_option("--emax", opt.e_max, "sequence up to this exponent")->required();
    subs.push_back(sub);
  }
  {
    CLI::App* sub = add_ring(app.add_subcommand("dualfsig-lb", "certified dual F-signature lower bound"));
    sub->add_option("--emax", opt.e_max, "sequence up to this exponent")->required();
    subs.push_back(sub);
  }
  {
    CLI::App* sub = add_ring(app.add_subcommand("hk", "Hilbert-Kunz samples and signed-power fit"));
    sub->add_option("--ideal", opt.ideal_path, "ideal spec JSON file")->required();
    sub->add_option("--emax", opt.e_max, "sample e = 1..emax")->required();
    sub->add_flag("--fit", opt.fit, "fit the signed-power form");
    subs.push_back(sub);
  }
  {
    CLI::App* sub = add_ring(app.add_subcommand("crosscheck", "decomposition lengths vs Frobenius powers"));
    sub->add_option("--sop", opt.sop_path, "system-of-parameters JSON file")->required();
    sub->add_option("--e", opt.e, "Frobenius exponent")->required();
    subs.push_back(sub);
  }
  {
    CLI::App* sub = app.add_subcommand("detmat", "determinantal family Chow series");
    sub->add_option("--m", opt.m, "matrix size parameter m")->required();
    sub->add_option("--n", opt.n, "matrix size parameter n")->required();
    subs.push_back(sub);
  }
  for (CLI::App* sub : subs) {
    sub->add_option("--max-points", opt.max_points, "cap on enumeration candidates")
        ->envname("FROBCONE_MAX_POINTS");
    sub->add_option("--threads", opt.threads, "worker threads for enumeration");
    sub->add_flag("--timing", opt.timing, "include timing_ms in the report");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().at(0)->get_name();

  const auto started = std::chrono::steady_clock::now();
  Limits limits = detail::make_limits(opt);

  try {
    Json inputs = Json::object();
    Json results = Json::object();
    std::string summary;

    if (command == "detmat") {
      DetMatReport rep = chow_determinantal(opt.m, opt.n);
      inputs = Json{{"m", opt.m}, {"n", opt.n}};
      results = Json{{"m", rep.m},
                     {"n", rep.n},
                     {"trunc", rep.m + 1},
                     {"tauR", series_json(rep.tau_r)},
                     {"tauOmega", series_json(rep.tau_omega)},
                     {"mu", series_json(rep.mu)},
                     {"kClass", series_json(rep.k_class)}};
      summary = "detmat(" + std::to_string(opt.m) + "," + std::to_string(opt.n) + ") in Q[a]/(a^" +
                std::to_string(opt.m + 1) + ")";
    } else {
      detail::LoadedRing loaded = detail::load_ring(opt, in);
      const CheckedRing& ring = loaded.ring;
      inputs["ring"] = loaded.spec;

      if (command == "validate") {
        Json rays = Json::array();
        for (const VecZ& r : ring.cone_extreme_rays()) rays.push_back(veci_json(r));
        results = Json{{"ok", true},
                       {"ring", ring_json(ring.ring())},
                       {"extreme_rays", rays},
                       {"conic_class_count", ring.class_table().classes.size()}};
        summary = "valid ring with " + std::to_string(ring.class_table().classes.size()) + " conic classes";
      } else if (command == "clgroup") {
        const ClGroup& cl = ring.class_group();
        Json factors = Json::array();
        for (const Int& f : cl.invariant_factors) factors.push_back(int_json(f));
        Json classes = Json::array();
        const ClassTable& table = ring.class_table();
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
          const ConicClass& c = table.classes[i];
          classes.push_back(Json{{"name", c.name},
                                 {"form", veci_json(c.form)},
                                 {"representative", veci_json(c.representative)},
                                 {"volume", rat_json(table.volumes[i])},
                                 {"is_free", c.is_free},
                                 {"is_canonical", c.is_canonical}});
        }
        results = Json{{"invariant_factors", factors},
                       {"free_rank", cl.free_rank},
                       {"canonical_class",
                        table.classes[static_cast<std::size_t>(table.canonical_index)].name},
                       {"classes", classes}};
        summary = "class group with free rank " + std::to_string(cl.free_rank);
      } else if (command == "decompose") {
        VecZ start = opt.start.empty() ? ring.zero_signature()
                                       : detail::parse_signature(opt.start, ring.facet_count());
        MultiplicityVector mv = frobenius_decompose(ring, start, opt.e, limits);
        inputs["e"] = opt.e;
        inputs["start"] = veci_json(start);
        results = Json{{"e", mv.e},
                       {"q", int_json(mv.q)},
                       {"total", int_json(mv.total())},
                       {"counts", class_int_map_json(ring, mv.counts)}};
        summary = "decomposed into " + mv.total().str() + " conic summands";
      } else if (command == "mu") {
        ClassVector mu = mu_class(ring);
        results = Json{{"mu", class_vector_json(mu)}, {"formal_rank", rat_json(mu.formal_rank())}};
        summary = "mu supported on " + std::to_string(mu.support.size()) + " classes";
      } else if (command == "cone") {
        CMConeModel model = build_cm_cone(ring, opt.e_max, limits);
        std::vector<ConicClass> added;
        model = xi_close(ring, model, &added);
        ClassVector mu = mu_class(ring);
        MembershipCertificate cert = check_mu_membership(model, mu, opt.interior);
        VecQ coords = class_vector_coordinates(model, mu);
        internal_check(verify_certificate(model.cone, coords, cert),
                       "emitted certificate failed the final re-check");
        Json gens = Json::array();
        for (const ConicClass& c : model.class_order) gens.push_back(c.name);
        Json added_json = Json::array();
        for (const ConicClass& c : added) added_json.push_back(c.name);
        inputs["emax"] = opt.e_max;
        inputs["interior"] = opt.interior;
        results = Json{{"generators", gens},
                       {"xi_closure_added", added_json},
                       {"mu", class_vector_json(mu)},
                       {"certificate", certificate_json(model, cert)},
                       {"verified", true}};
        summary = "membership certificate: " + results["certificate"]["verdict"].get<std::string>();
      } else if (command == "realize") {
        ClassVector mu = mu_class(ring);
        IntegralRealization real = integral_realization(mu);
        Json spec_json = Json::object();
        for (const auto& [form, mult] : real.module_spec)
          spec_json[frobcone::detail::format_class_name(form)] = int_json(mult);
        results = Json{{"n", int_json(real.n)}, {"module", spec_json},
                       {"mu", class_vector_json(mu)}};
        summary = "n = " + real.n.str() + " realizes n*mu as a conic direct sum";
      } else if (command == "xi") {
        XiMap map = xi(ring);
        Json perm = Json::object();
        for (const auto& [from, to] : map.permutation)
          perm[frobcone::detail::format_class_name(from)] = frobcone::detail::format_class_name(to);
        const ClassTable& table = ring.class_table();
        results = Json{{"canonical_class",
                        table.classes[static_cast<std::size_t>(table.canonical_index)].name},
                       {"permutation", perm},
                       {"involution", true}};
        summary = "xi permutes " + std::to_string(map.permutation.size()) + " classes";
      } else if (command == "fsig") {
        FSignatureReport rep = f_signature(ring, opt.e_max, limits);
        inputs["emax"] = opt.e_max;
        results = Json{{"exact_limit", rat_json(rep.exact_limit)},
                       {"sequence", detail::sequence_json(rep)}};
        summary = "F-signature " + rat_string(rep.exact_limit);
      } else if (command == "dualfsig-lb") {
        FSignatureReport rep = dual_f_signature_lower_bound(ring, opt.e_max, limits);
        inputs["emax"] = opt.e_max;
        results = Json{{"certified_lower_bound", rat_json(rep.exact_limit)},
                       {"positive", rep.exact_limit > 0},
                       {"sequence", detail::sequence_json(rep)}};
        summary = "dual F-signature >= " + rat_string(rep.exact_limit);
      } else if (command == "hk") {
        Json ideal_spec = detail::read_json(opt.ideal_path, in);
        MonomialIdeal ideal = parse_ideal(ideal_spec, ring.dim());
        inputs["ideal"] = ideal_spec;
        inputs["emax"] = opt.e_max;
        std::vector<HKSample> samples;
        Json samples_json = Json::array();
        for (int e = 1; e <= opt.e_max; ++e) {
          samples.push_back(frobenius_power_length(ring, ideal, e, limits));
          samples_json.push_back(Json{{"e", samples.back().e},
                                      {"q", int_json(samples.back().q)},
                                      {"length", int_json(samples.back().length)}});
        }
        results["samples"] = samples_json;
        if (opt.fit) results["fit"] = fit_json(fit_signed_powers(samples, ring.p(), ring.dim()));
        summary = "sampled " + std::to_string(samples.size()) + " Hilbert-Kunz lengths";
      } else if (command == "crosscheck") {
        Json sop_spec = detail::read_json(opt.sop_path, in);
        std::vector<VecZ> theta = parse_vector_list(
            sop_spec.is_object() && sop_spec.contains("generators") ? sop_spec.at("generators") : sop_spec,
            ring.dim(), "sop");
        inputs["sop"] = sop_spec;
        inputs["e"] = opt.e;
        CrossCheckReport rep = hk_cross_check(ring, theta, opt.e, limits);
        Json per_class = Json::object();
        for (const auto& [idx, pair] : rep.per_class)
          per_class[ring.class_table().classes[static_cast<std::size_t>(idx)].name] =
              Json{{"count", int_json(pair.first)}, {"length", int_json(pair.second)}};
        results = Json{{"e", opt.e},
                       {"lhs", int_json(rep.lhs)},
                       {"rhs", int_json(rep.rhs)},
                       {"equal", rep.equal},
                       {"per_class", per_class}};
        summary = std::string("cross-check ") + (rep.equal ? "agrees" : "DISAGREES");
      } else {
        fail_internal("unhandled subcommand '" + command + "'");
      }
    }

    Json report{{"schema", 1},
                {"command", command},
                {"inputs", inputs},
                {"limits", detail::limits_json(limits)},
                {"results", results}};
    if (opt.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << report.dump(2) << "\n";
    err << command << ": " << summary << "\n";
    return 0;
  } catch (const Error& e) {
    Json error{{"error",
                Json{{"kind", e.kind() == ErrorKind::Validation     ? "validation"
                              : e.kind() == ErrorKind::ResourceGuard ? "resource-guard"
                                                                     : "internal"},
                     {"code", e.code()},
                     {"message", e.what()}}}};
    err << error.dump(2) << "\n";
    switch (e.kind()) {
      case ErrorKind::Validation: return 1;
      case ErrorKind::ResourceGuard: return 2;
      case ErrorKind::Internal: return 3;
    }
    return 3;
  } catch (const std::exception& e) {
    err << Json{{"error", Json{{"kind", "internal"}, {"code", "Unexpected"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 3;
  }
}

}  // namespace frobcone::cli
