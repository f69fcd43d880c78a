#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/eta_quotient.hpp"

using namespace halfint;
using namespace halfint::cli;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kAccuracy = 3 };

void print_result(const CheckResult& r) { std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL") << '\n'; }

int finish(const RunConfig& c, const std::string& stem, CheckResult r) {
  r.detail["config"] = config_to_json(c);
  write_artifacts(c, stem, r);
  print_result(r);
  return r.pass ? kPass : kCheckFailed;
}

std::vector<double> parse_s_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not a number in s list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period polynomials, lifts and L-values of half-integral weight cusp forms"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, form, a, out;
  double tol = 0.0;
  int samples = 0, truncation = 0;
  unsigned long seed = 0;
  bool expensive = false;
  auto* o_config = app.add_option("--config", config_path, "JSON file mirroring the run configuration");
  auto* o_form = app.add_option("--form", form, "form file or bundled name (f13, g6)");
  auto* o_a = app.add_option("--a", a, "kernel parameter as a rational, e.g. 17/4");
  auto* o_tol = app.add_option("--tol", tol, "tolerance override for the selected check");
  auto* o_samples = app.add_option("--samples", samples, "number of sample points");
  auto* o_trunc = app.add_option("--truncation", truncation, "number of Fourier coefficients");
  auto* o_seed = app.add_option("--seed", seed, "seed for randomized checks");
  auto* o_out = app.add_option("--out", out, "output directory");
  app.add_flag("--expensive", expensive, "enable the nested-quadrature integral representation");

  auto* forms = app.add_subcommand("forms", "list, search, validate and export forms");
  forms->require_subcommand(1);
  auto* forms_list = forms->add_subcommand("list", "bundled forms");
  int search_k2 = 13, search_level = 4, search_bound = 20;
  auto* forms_search = forms->add_subcommand("eta-search", "eta quotients of a given weight and level");
  forms_search->add_option("--weight-times-two", search_k2)->required();
  forms_search->add_option("--level", search_level)->required();
  forms_search->add_option("--bound", search_bound, "exponent box [-bound, bound]");
  std::string validate_path;
  auto* forms_validate = forms->add_subcommand("validate", "check modularity and Fricke data, record the status");
  forms_validate->add_option("path", validate_path)->required();
  std::string export_name;
  auto* forms_export = forms->add_subcommand("export", "write a bundled form to a file");
  forms_export->add_option("name", export_name)->required();

  std::string s_text;
  auto* lvalue = app.add_subcommand("lvalue", "completed L-values");
  lvalue->add_option("--s", s_text, "comma-separated real s values");

  auto* period = app.add_subcommand("period", "period polynomial from critical L-values");

  std::string which;
  auto* verify = app.add_subcommand("verify", "numeric verification");
  std::vector<std::string> choices = verify_names();
  choices.push_back("all");
  verify->add_option("which", which)->required()->check(CLI::IsMember(choices));

  std::string mode;
  std::vector<std::string> basis;
  auto* lift = app.add_subcommand("lift", "solve for lifted integral-weight forms");
  lift->add_option("mode", mode)->required()->check(CLI::IsMember({"pair", "odd"}));
  lift->add_option("--basis", basis, "basis forms of weight k - 1/2");

  auto* kr = app.add_subcommand("kr", "Eichler-type series identity and integral representation");

  for (auto* sub : {forms, forms_list, forms_search, forms_validate, forms_export, lvalue, period, verify, lift, kr}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (o_config->count()) cfg = config_from_json(read_json_file(config_path));
    if (o_form->count()) cfg.form = form;
    if (o_a->count()) cfg.a = a;
    if (o_samples->count()) cfg.samples = samples;
    if (o_trunc->count()) cfg.truncation = truncation;
    if (o_seed->count()) cfg.seed = seed;
    if (o_out->count()) cfg.out_dir = out;
    if (!basis.empty()) cfg.basis = basis;
    if (expensive) cfg.expensive = true;
    auto override_tol = [&](const std::string& name) {
      if (o_tol->count()) cfg.tolerances[name] = tol;
    };
    cfg.validate();

    if (*forms_list) {
      for (const auto& name : bundled_names()) {
        FourierExpansion f = bundled_form(name, 60);
        std::cout << name << "  weight " << f.weight_times_two << "/2  level " << f.level << "  "
                  << status_name(f.status) << '\n';
      }
      return kPass;
    }
    if (*forms_search) {
      Json list = Json::array();
      for (const auto& q : eta_search(search_k2, search_level, search_bound)) {
        std::cout << q.to_string() << '\n';
        Json e = Json::object();
        for (auto [d, r] : q.exponents) e[std::to_string(d)] = r;
        list.push_back(e);
      }
      std::filesystem::create_directories(cfg.out_dir);
      write_json_file(std::filesystem::path(cfg.out_dir) / "eta_search.json",
                      {{"weight_times_two", search_k2}, {"level", search_level}, {"bound", search_bound}, {"quotients", list}});
      return kPass;
    }
    if (*forms_validate) {
      FourierExpansion f = read_form_file(validate_path);
      FormValidation v;
      f = with_validation(std::move(f), &v);
      write_form_file(validate_path, f);
      for (const auto& d : v.modularity.deviations) {
        std::cout << "modularity " << d.gamma << ": " << d.max_relative_deviation << '\n';
      }
      if (v.fricke) std::cout << "fricke: " << v.fricke->max_relative_deviation << '\n';
      std::cout << validate_path << ": " << status_name(f.status) << '\n';
      return v.pass ? kPass : kCheckFailed;
    }
    if (*forms_export) {
      std::filesystem::create_directories(cfg.out_dir);
      const auto path = std::filesystem::path(cfg.out_dir) / (export_name + ".json");
      write_form_file(path, bundled_form(export_name, cfg.truncation));
      std::cout << path.string() << '\n';
      return kPass;
    }
    if (*lvalue) return finish(cfg, "lvalue", lvalue_table(cfg, parse_s_list(s_text)));
    if (*period) return finish(cfg, "period", period_report(cfg));
    if (*verify) {
      if (which != "all") {
        override_tol(which);
        return finish(cfg, "verify_" + which, run_check(which, cfg));
      }
      Json summary = {{"config", config_to_json(cfg)}, {"checks", Json::object()}};
      bool all_pass = true;
      for (const auto& name : verify_names()) {
        override_tol(name);
        CheckResult r = run_check(name, cfg);
        r.detail["config"] = config_to_json(cfg);
        write_artifacts(cfg, "verify_" + name, r);
        print_result(r);
        summary["checks"][name] = r.pass;
        all_pass = all_pass && r.pass;
      }
      summary["pass"] = all_pass;
      write_json_file(std::filesystem::path(cfg.out_dir) / "verify_all.json", summary);
      return all_pass ? kPass : kCheckFailed;
    }
    if (*lift) {
      override_tol("lift");
      return mode == "pair" ? finish(cfg, "lift_pair", lift_pair_report(cfg)) : finish(cfg, "lift_odd", lift_odd_report(cfg));
    }
    if (*kr) {
      override_tol("kreich");
      return finish(cfg, "kr", check_kreich(cfg));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AccuracyError& e) {
    std::cerr << "accuracy budget exceeded: " << e.what() << " (estimate " << e.error_estimate() << ")\n";
    return kAccuracy;
  } catch (const UnvalidatedFormError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
