// assoform command-line front end. Every command prints one JSON report on
// stdout. Exit codes: 0 pass, 1 verification failure, 2 invalid or degenerate
// input, 3 polynomial parse error.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assoform/assoform.hpp"
#include "assoform/report.hpp"

using namespace assoform;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kInvalid = 2, kParse = 3 };

struct Outcome {
  Json results = Json::object();
  bool pass = true;
};

bool g_timing = false;

/// Runs `body`, wraps its outcome in a report, prints it and returns the exit code.
int run(const std::string& command, const Json& inputs, const std::function<Outcome(Json&)>& body) {
  Json report = {{"command", command}, {"inputs", inputs}};
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    Json echo = Json::object();
    Outcome out = body(echo);
    if (!echo.empty()) report["inputs"]["parsed"] = echo;
    report["results"] = std::move(out.results);
    report["status"] = out.pass ? "pass" : "fail";
    code = out.pass ? kPass : kFail;
  } catch (const ParseError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}};
    code = kParse;
  } catch (const NondegeneracyError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "degenerate"}, {"message", e.what()}, {"probe_degree", e.probe_degree()}};
    code = kInvalid;
  } catch (const FiniteColengthError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "infinite_colength"}, {"message", e.what()}, {"probe_degree", e.probe_degree()}};
    code = kInvalid;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "invalid"}, {"message", e.what()}};
    code = kInvalid;
  }
  if (g_timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  std::cout << report.dump(2) << '\n';
  if (report["status"] == "error") std::cerr << "error: " << report["error"]["message"].get<std::string>() << '\n';
  return code;
}

Poly parse_with(const std::string& text, int n, Space space) {
  if (n > 0) return parse_poly(text, n, space);
  Poly p = parse_poly_infer(text);
  if (p.space() != space) return parse_poly(text, p.nvars(), space);
  return p;
}

void require_shape(const Poly& f, int n, int d) {
  if (n > 0 && f.nvars() != n) throw DomainError("expected " + std::to_string(n) + " variables");
  if (d > 0 && (!f.is_homogeneous() || f.is_zero() || f.degree() != d))
    throw DomainError("expected a nonzero form of degree " + std::to_string(d));
}

Rational invariant_value(const std::string& name, const Poly& f) {
  if (name == "cat") return catalecticant(f);
  if (name == "i2") return i2_quartic(f);
  if (name == "delta-quartic") return delta_quartic(f);
  if (name == "j-quartic") return j_quartic(f);
  if (name == "k-quartic") return k_quartic(f);
  if (name == "a4") return aronhold_a4(f);
  if (name == "a6") return a6_family(TernaryCubicFamily::from_poly(f));
  if (name == "delta-cubic") return delta_cubic_family(TernaryCubicFamily::from_poly(f));
  if (name == "j-cubic") return j_cubic_family(TernaryCubicFamily::from_poly(f));
  if (name == "k-cubic") return k_cubic(f);
  throw DomainError("unknown invariant " + name);
}

const std::vector<std::string> kInvariantNames = {"cat", "i2",  "delta-quartic", "j-quartic", "k-quartic",
                                                  "a4",  "a6",  "delta-cubic",   "j-cubic",   "k-cubic"};

Json scan_entry(Family family, const std::string& text) {
  Json entry = {{"t", text}};
  FamilyPoint p{family, parse_rational(text)};
  entry["t"] = to_string(p.t);
  if (!is_admissible(p)) {
    entry["admissible"] = false;
    return entry;
  }
  entry["admissible"] = true;
  entry["exceptional"] = is_exceptional(p);
  Poly f = family_form(p);
  entry["form"] = to_json(f);
  entry["associated_form"] = to_json(associated_form(f).form);
  Rational j = j_invariant(p);
  entry["J"] = to_string(j);
  entry["mobius_of_J"] = to_string(mobius(family, ProjectivePoint::finite(j)));
  try {
    entry["J_of_associated_form"] = to_string(j_of_associated_form(p));
  } catch (const DivisionByZero&) {
    entry["J_of_associated_form"] = "inf";
  }
  entry["involution"] = to_string(involution_check(f));
  if (p.t != 0) entry["dual_parameter"] = to_string(dual_parameter(p));
  return entry;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated forms of homogeneous polynomials, with exact verification suites"};
  app.require_subcommand(1);
  app.add_flag("--timing", g_timing, "Add wall-clock milliseconds to the report");
  std::function<int()> action;

  auto* assoc = app.add_subcommand("assoc", "Associated form of a nondegenerate form");
  std::string assoc_text;
  int assoc_n = 0, assoc_d = 0;
  assoc->add_option("poly", assoc_text, "Form in z1..zn")->required();
  assoc->add_option("--n", assoc_n, "Number of variables");
  assoc->add_option("--d", assoc_d, "Degree");
  assoc->callback([&] {
    action = [&] {
      return run("assoc", {{"poly", assoc_text}, {"n", assoc_n}, {"d", assoc_d}}, [&](Json& echo) {
        Poly f = parse_with(assoc_text, assoc_n, Space::Z);
        require_shape(f, assoc_n, assoc_d);
        echo["poly"] = to_json(f);
        auto phi = associated_form(f);
        Outcome out;
        out.results = {{"form", to_json(phi.form)}, {"mu", to_json(phi.mu)}};
        return out;
      });
    };
  });

  auto* verify = app.add_subcommand("verify", "Run a seeded random verification suite");
  std::string suite_name;
  std::uint64_t seed = 0;
  std::size_t count = 20;
  std::vector<std::string> suite_names;
  for (Suite s : kAllSuites) suite_names.emplace_back(to_string(s));
  verify->add_option("suite", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--count", count, "Number of cases");
  verify->callback([&] {
    action = [&] {
      return run("verify", {{"suite", suite_name}, {"seed", seed}, {"count", count}}, [&](Json&) {
        Suite suite = *parse_suite(suite_name);
        std::size_t done = 0;
        auto report = run_suite(suite, seed, count, [&](const CaseResult& c) {
          ++done;
          std::cerr << "[" << suite_name << "] " << done << "/" << count << " case " << c.index
                    << (c.pass ? " pass" : " FAIL") << '\n';
        });
        Outcome out;
        out.results = to_json(report);
        out.pass = report.passed();
        return out;
      });
    };
  });

  auto* inv_sys = app.add_subcommand("inverse-system", "Annihilator of an e-space form in degree d-1");
  std::string F_text;
  int inv_n = 0, inv_d = 0;
  inv_sys->add_option("F", F_text, "Form in e1..en of degree n(d-2)")->required();
  inv_sys->add_option("--n", inv_n, "Number of variables");
  inv_sys->add_option("--d", inv_d, "Degree of the forms whose gradients span the tuple")->required();
  inv_sys->callback([&] {
    action = [&] {
      return run("inverse-system", {{"F", F_text}, {"n", inv_n}, {"d", inv_d}}, [&](Json& echo) {
        Poly F = parse_with(F_text, inv_n, Space::E);
        require_shape(F, inv_n, 0);
        echo["F"] = to_json(F);
        auto at = apolar_tuple(F, inv_d);
        Outcome out;
        out.results["kernel_dimension"] = at.kernel_dimension;
        out.results["in_image"] = false;
        if (at.applicable()) {
          Json forms = Json::array();
          for (const auto& g : at.tuple->forms()) forms.push_back(to_json(g));
          out.results["tuple"] = forms;
          bool finite = is_finite_colength(*at.tuple);
          out.results["finite_colength"] = finite;
          out.results["in_image"] = finite;
          if (finite) {
            auto scale = proportionality(associated_form_tuple(*at.tuple).form, F);
            out.results["psi_of_tuple_over_F"] = scale ? Json(to_string(*scale)) : Json(nullptr);
            out.pass = scale.has_value();
          }
        }
        return out;
      });
    };
  });

  auto* invariant = app.add_subcommand("invariant", "Evaluate a classical invariant");
  std::string inv_name, inv_text;
  invariant->add_option("name", inv_name, "Invariant")->required()->check(CLI::IsMember(kInvariantNames));
  invariant->add_option("poly", inv_text, "Form in z or e variables")->required();
  invariant->callback([&] {
    action = [&] {
      return run("invariant", {{"name", inv_name}, {"poly", inv_text}}, [&](Json& echo) {
        Poly f = parse_poly_infer(inv_text);
        echo["poly"] = to_json(f);
        Outcome out;
        out.results["value"] = to_string(invariant_value(inv_name, f));
        return out;
      });
    };
  });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of C[z]/(f1..fn)");
  std::vector<std::string> tuple_texts;
  hilbert->add_option("forms", tuple_texts, "The n forms of the tuple")->required();
  hilbert->callback([&] {
    action = [&] {
      return run("hilbert", {{"forms", tuple_texts}}, [&](Json& echo) {
        std::vector<Poly> forms;
        for (const auto& text : tuple_texts) forms.push_back(parse_poly(text, static_cast<int>(tuple_texts.size()), Space::Z));
        PolyTuple t(std::move(forms));
        Json parsed = Json::array();
        for (const auto& g : t.forms()) parsed.push_back(to_json(g));
        echo["forms"] = parsed;
        Outcome out;
        out.results["hilbert_function"] = hilbert_function(t);
        out.results["socle_degree"] = t.socle_degree();
        return out;
      });
    };
  });

  auto* scan = app.add_subcommand("duality-scan", "J values, Mobius images and involution status along a family");
  std::string family_name;
  std::vector<std::string> t_values;
  scan->add_option("family", family_name, "quartic or cubic")->required()->check(CLI::IsMember({"quartic", "cubic"}));
  scan->add_option("--t", t_values, "Comma-separated rational parameters")->required()->delimiter(',');
  scan->callback([&] {
    action = [&] {
      return run("duality-scan", {{"family", family_name}, {"t", t_values}}, [&](Json&) {
        Family family = family_name == "quartic" ? Family::BinaryQuartic : Family::TernaryCubic;
        Outcome out;
        Json entries = Json::array();
        for (const auto& text : t_values) entries.push_back(scan_entry(family, text));
        out.results["points"] = entries;
        return out;
      });
    };
  });

  auto* iterate = app.add_subcommand("iterate", "Follow f, Phi(f), Phi(Phi(f)), ... for n(d-2) = d");
  std::string iter_text;
  int steps = 4;
  iterate->add_option("poly", iter_text, "Binary quartic or ternary cubic")->required();
  iterate->add_option("--steps", steps, "Maximum number of applications");
  iterate->callback([&] {
    action = [&] {
      return run("iterate", {{"poly", iter_text}, {"steps", steps}}, [&](Json& echo) {
        Poly f = parse_poly_infer(iter_text);
        echo["poly"] = to_json(f);
        if (f.nvars() * (f.degree() - 2) != f.degree())
          throw DomainError("iterate: needs n(d-2) = d (binary quartics, ternary cubics)");
        Outcome out;
        Json orbit = Json::array();
        Poly current = f;
        std::string stop = "steps";
        for (int k = 0; k < steps; ++k) {
          if (!is_nondegenerate(current)) {
            stop = "degenerate";
            break;
          }
          current = associated_form(current).form.retag(Space::Z);
          orbit.push_back(to_json(current));
        }
        out.results["orbit"] = orbit;
        out.results["stopped"] = stop;
        return out;
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  return action();
}
