#include "leibniz/cli.hpp"

#include "leibniz/classify.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/io.hpp"
#include "leibniz/triangular.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz::cli {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

const char* yes(bool b) { return b ? "true" : "false"; }

class Output {
 public:
  explicit Output(Report& r) : r_(r) {}
  void verdict(const std::string& key, const std::string& value) {
    r_.verdicts.emplace_back(key, value);
    r_.text += key + ": " + value + "\n";
  }
  void line(const std::string& s) { r_.text += s + "\n"; }
  void block(const std::string& s) { r_.text += s; }
  void artifact(const std::string& path) { r_.artifacts.push_back(path); }
  void exit(int code) { r_.exit_code = code; }

 private:
  Report& r_;
};

void emit_algebra(Output& out, const ScalarTable& t, const std::string& path) {
  if (path.empty()) {
    out.block(write_algebra(t));
  } else {
    save_algebra(path, t);
    out.artifact(path);
  }
}

// n and f of an extension table from its dimension n(n-1)/2 + f.
std::pair<int, int> extension_shape(std::size_t dim) {
  for (int n = 3; n <= kMaxConcreteN; ++n) {
    const std::size_t nil = static_cast<std::size_t>(n * (n - 1) / 2);
    if (dim > nil && dim < nil + static_cast<std::size_t>(n)) return {n, static_cast<int>(dim - nil)};
  }
  throw InputError("dimension " + std::to_string(dim) + " is not n(n-1)/2 + f with 1 <= f <= n-1");
}

void print_polys(Output& out, const std::string& title, const std::vector<Poly>& polys) {
  out.verdict(title, std::to_string(polys.size()));
  for (const auto& p : polys) out.line("  " + p.to_string());
}

void verify_lemma(Output& out, const std::string& lemma, int n, int f, std::uint64_t seed, std::size_t samples) {
  if (lemma == "2.4") {
    ExtensionSampler sampler(n, f);
    Rng rng(seed);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      ScalarTable t = master_extension(sampler.sample(rng));
      for (const auto& m : all_structure_matrices(t, n, f)) {
        ShapeCheck c = check_structure_matrix(m.a, n);
        if (!c.passed()) {
          ++failures;
          for (const auto& msg : c.failures) out.line("  " + msg);
        }
      }
    }
    out.verdict("samples", std::to_string(samples));
    out.verdict("structure_failures", std::to_string(failures));
    out.exit(failures == 0 ? verified : refuted);
    return;
  }
  if (lemma != "3.1" && lemma != "3.2") throw InputError("--lemma expects 2.4, 3.1 or 3.2");
  ResidueReport r = derive_relations(n, f, seed, 0);
  out.verdict("residue_triples", std::to_string(r.residues.size()));
  out.verdict("linear_relations", std::to_string(r.linear_relations.size()));
  const bool ok = lemma == "3.1" ? r.left_action_verified() : r.generator_products_verified();
  print_polys(out, lemma == "3.1" ? "missing_left_action" : "missing_generator_products",
              lemma == "3.1" ? r.missing_left_action : r.missing_generator_products);
  print_polys(out, "unexplained_linear", r.unexplained_linear);
  out.verdict("verified", yes(ok));
  out.exit(ok ? verified : refuted);
}

void verify_restrictions(Output& out, int n, int f, std::uint64_t seed, std::size_t samples) {
  ResidueReport r = derive_relations(n, f, seed, samples);
  out.verdict("linear_verified", yes(r.linear_verified()));
  print_polys(out, "restriction_residuals", r.restriction_residuals);
  print_polys(out, "eigenvalue_residuals", r.eigenvalue_residuals);
  print_polys(out, "cross_generator_residuals", r.cross_generator_residuals);
  print_polys(out, "unexplained_quadratic", r.unexplained_quadratic);
  print_polys(out, "specialized_unexplained", r.specialized_unexplained);
  out.verdict("sample_points", std::to_string(r.sample_points));
  out.verdict("sample_failures", std::to_string(r.sample_failures));
  const bool ok = r.linear_verified() && r.restrictions_verified();
  out.verdict("verified", yes(ok));
  out.exit(ok ? verified : refuted);
}

void verify_theorem(Output& out, int n, std::uint64_t seed, std::size_t samples, bool corrupt) {
  MaximalExtensionReport r = verify_maximal_extension(n, seed, samples, corrupt);
  out.verdict("symbolic_forced_lie", yes(r.symbolic_forced_lie));
  for (const auto& s : r.surviving_symmetric_parts) out.line("  " + s);
  out.verdict("samples", std::to_string(r.samples));
  out.verdict("lie_samples", std::to_string(r.lie_samples));
  out.verdict("verified", yes(r.passed()));
  out.exit(r.passed() ? verified : refuted);
}

std::vector<std::string> reversed(std::vector<std::string> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

Report run(const std::vector<std::string>& args) {
  Report report;
  report.command = args;
  Output out(report);

  CLI::App app{"Exact computations with Leibniz algebras over T(n)", "leibniz_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", seed, "seed for every sampled verification");

  int n = 0, f = 1;
  std::size_t samples = 0;
  std::string out_path, params_path, file, form_name, lemma, theorem, eq, witness_path;
  bool restrictions = false, corrupt = false;

  auto* triangular_cmd = app.add_subcommand("triangular", "emit T(n)");
  triangular_cmd->add_option("--n", n)->required();
  triangular_cmd->add_option("--out", out_path);

  auto* extend_cmd = app.add_subcommand("extend", "build a concrete extension of T(n)");
  extend_cmd->add_option("--n", n)->required();
  extend_cmd->add_option("--f", f)->required();
  extend_cmd->add_option("--params", params_path)->required();
  extend_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "verify a structural statement");
  verify_cmd->add_option("--lemma", lemma, "2.4, 3.1 or 3.2");
  verify_cmd->add_option("--theorem", theorem, "3.4");
  verify_cmd->add_option("--eq", eq, "3, followed by an algebra file");
  verify_cmd->add_flag("--restrictions", restrictions, "quadratic restrictions after the linear relations");
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--f", f);
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_flag("--corrupt-normalization", corrupt);
  verify_cmd->add_option("file", file);

  auto* check_cmd = app.add_subcommand("check", "Leibniz and Lie tests and series dimensions");
  check_cmd->add_option("file", file)->required();
  auto* series_cmd = app.add_subcommand("series", "lower central and derived series");
  series_cmd->add_option("file", file)->required();
  auto* derivations_cmd = app.add_subcommand("derivations", "derivation algebra");
  derivations_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify-l41", "normal form of a one-generator extension of T(4)");
  classify_cmd->add_option("--params", params_path)->required();
  classify_cmd->add_option("--witness-out", witness_path);

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical table");
  canonical_cmd->add_option("--form", form_name)->required();
  canonical_cmd->add_option("--params", params_path);
  canonical_cmd->add_option("--out", out_path);

  try {
    app.parse(reversed(args));
  } catch (const CLI::CallForHelp& e) {
    report.text = app.help();
    report.exit_code = verified;
    return report;
  } catch (const CLI::ParseError& e) {
    report.error = e.what();
    report.text = app.help();
    report.exit_code = input_error;
    return report;
  }
  report.structured = format == "structured";

  try {
    if (triangular_cmd->parsed()) {
      ScalarTable t = triangular(n);
      out.verdict("dim", std::to_string(t.dim()));
      emit_algebra(out, t, out_path);
    } else if (extend_cmd->parsed()) {
      ScalarTable t = master_extension({n, f, load_params(params_path)});
      out.verdict("leibniz", "true");
      out.verdict("lie", yes(is_lie(t)));
      out.verdict("eq_3", yes(verify_eq_3(t, n, f)));
      emit_algebra(out, t, out_path);
    } else if (verify_cmd->parsed()) {
      const int chosen = !lemma.empty() + !theorem.empty() + !eq.empty() + restrictions;
      if (chosen != 1) throw InputError("verify needs exactly one of --lemma, --theorem, --eq, --restrictions");
      if (!eq.empty()) {
        if (eq != "3") throw InputError("--eq expects 3");
        if (file.empty()) throw InputError("--eq 3 needs an algebra file");
        ScalarTable t = load_algebra(file);
        auto [tn, tf] = extension_shape(t.dim());
        const bool lie = is_lie(t);
        out.verdict("lie", yes(lie));
        const bool ok = verify_eq_3(t, tn, tf);
        out.verdict("verified", yes(ok));
        out.exit(ok ? verified : refuted);
      } else {
        if (n == 0) throw InputError("--n is required");
        if (!theorem.empty()) {
          if (theorem != "3.4") throw InputError("--theorem expects 3.4");
          verify_theorem(out, n, seed, samples == 0 ? 100 : samples, corrupt);
        } else if (restrictions) {
          verify_restrictions(out, n, f, seed, samples == 0 ? 500 : samples);
        } else {
          verify_lemma(out, lemma, n, f, seed, samples == 0 ? 200 : samples);
        }
      }
    } else if (check_cmd->parsed()) {
      ScalarTable t = load_algebra(file);
      const bool leibniz = is_leibniz(t);
      out.verdict("leibniz", yes(leibniz));
      out.verdict("lie", yes(is_lie(t)));
      SeriesSignature s = series_signature(t);
      out.verdict("lower_central", join(s.lower_central));
      out.verdict("derived", join(s.derived));
      out.exit(leibniz ? verified : refuted);
    } else if (series_cmd->parsed()) {
      ScalarTable t = load_algebra(file);
      SeriesSignature s = series_signature(t);
      out.verdict("lower_central", join(s.lower_central));
      out.verdict("derived", join(s.derived));
      out.verdict("nilpotent", yes(is_nilpotent(t)));
      out.verdict("solvable", yes(is_solvable(t)));
    } else if (derivations_cmd->parsed()) {
      ScalarTable t = load_algebra(file);
      Subspace der = derivation_algebra(t, Execution::parallel);
      out.verdict("dim_der", std::to_string(der.dim()));
      const std::size_t d = t.dim();
      for (std::size_t k = 0; k < der.dim(); ++k) {
        Vector v = der.basis_vector(k);
        Matrix m(d, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) m(r, c) = v[r * d + c];
        out.line("derivation " + std::to_string(k + 1));
        out.block(write_matrix(m));
      }
    } else if (classify_cmd->parsed()) {
      Classification c = classify_L41(L41Params::from_map(load_params(params_path)));
      out.verdict("form", to_string(c.form.id));
      for (const auto& name : form_parameter_names(c.form.id)) {
        auto it = c.form.params.find(name);
        out.verdict(name, it == c.form.params.end() ? "0" : it->second.to_string());
      }
      out.verdict("route", c.route);
      const std::string witness = write_matrix(c.witness.matrix());
      if (witness_path.empty()) {
        out.line("witness");
        out.block(witness);
      } else {
        write_file(witness_path, witness);
        out.artifact(witness_path);
      }
    } else if (canonical_cmd->parsed()) {
      CanonicalForm form{parse_form_id(form_name), {}};
      if (!params_path.empty()) form.params = load_params(params_path);
      ScalarTable t = build_canonical(form);
      out.verdict("form", to_string(form.id));
      out.verdict("lie", yes(is_lie(t)));
      emit_algebra(out, t, out_path);
    }
  } catch (const InputError& e) {
    report.error = e.what();
    report.exit_code = input_error;
  } catch (const std::invalid_argument& e) {
    report.error = e.what();
    report.exit_code = input_error;
  } catch (const std::out_of_range& e) {
    report.error = e.what();
    report.exit_code = input_error;
  }
  return report;
}

std::string render_structured(const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.verdicts) verdicts[k] = v;
  doc["verdicts"] = verdicts;
  doc["artifacts"] = report.artifacts;
  doc["exit_code"] = report.exit_code;
  if (!report.error.empty()) doc["error"] = report.error;
  return doc.dump(2) + "\n";
}

}  // namespace leibniz::cli
