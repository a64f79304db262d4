// lira: exact verification and computation for Lie-Rinehart structures,
// Poisson algebras, prequantum modules, and costratified spaces.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 the
// request itself was unusable (bad file, bad flags, unsupported input).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lira/builtins.hpp"
#include "lira/cohomology.hpp"
#include "lira/costrat_orbits.hpp"
#include "lira/costratified.hpp"
#include "lira/enveloping.hpp"
#include "lira/io.hpp"
#include "lira/lie_rinehart.hpp"
#include "lira/poisson.hpp"
#include "lira/prequant.hpp"

namespace {

using namespace lira;

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Presets name the built-in structures: "de-rham:<n>", "lie:sl2",
// "poisson:plane", "poisson:exotic".
LieRinehart preset_lie_rinehart(const std::string& name) {
  if (name.rfind("de-rham:", 0) == 0) {
    int n = std::stoi(name.substr(8));
    if (n < 1 || n > 6) throw FormatError("de-rham preset supports 1 to 6 variables");
    return de_rham(n);
  }
  if (name == "lie:sl2") return sl2();
  if (name == "poisson:plane") return differentials_chart(poisson_plane());
  if (name == "poisson:exotic") return differentials_chart(exotic_plane());
  throw FormatError("unknown preset \"" + name +
                    "\" (try de-rham:<n>, lie:sl2, poisson:plane, poisson:exotic)");
}

int emit_report(const std::string& command, const std::string& digest, const Clock& clock,
                Report rep, bool as_json) {
  RunReport rr{command, digest, clock.ms(), std::move(rep)};
  if (as_json)
    std::cout << rr.to_json().dump(2) << "\n";
  else
    std::cout << rr.report.text() << (rr.ok() ? "all checks passed\n" : "CHECKS FAILED\n");
  return rr.ok() ? 0 : 1;
}

void parse_window(const std::string& spec, int& lo, int& hi) {
  size_t pos = spec.find("..");
  if (pos == std::string::npos)
    throw FormatError("window must look like A..B, got \"" + spec + "\"");
  lo = std::stoi(spec.substr(0, pos));
  hi = std::stoi(spec.substr(pos + 2));
  if (lo > hi) throw FormatError("window is empty: " + spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-Rinehart / Poisson / prequantization toolkit"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string file, kind, preset, pairs_spec, window_spec = "0..4", data_dir = "data";
  uint32_t degree = 4, form_max = 2, filtration = 3, coeff_degree = 2;
  int ell = 2, s = 1, level = 1;
  bool oracle = false;

  auto* c_verify = app.add_subcommand("verify", "check the axioms of a structure description");
  c_verify->add_option("file", file, "JSON description")->required();
  c_verify->add_option("--kind", kind, "override the file's kind (lie-rinehart, poisson, "
                                       "extension, prequantum, costratified)");
  c_verify->add_option("--degree", degree, "monomial window bound for sampled laws");

  auto* c_cohom = app.add_subcommand("cohomology", "weight-graded cohomology dimensions");
  c_cohom->add_option("file", file, "JSON description of a lie-rinehart structure");
  c_cohom->add_option("--preset", preset, "built-in structure (de-rham:<n>, lie:sl2, "
                                          "poisson:plane, poisson:exotic)");
  c_cohom->add_option("--form-max", form_max, "largest form degree reported");
  c_cohom->add_option("--poly-window", window_spec, "weight window A..B");

  auto* c_pbw = app.add_subcommand("pbw", "filtration and independence checks for the "
                                          "enveloping algebra");
  c_pbw->add_option("file", file, "JSON description of a lie-rinehart structure");
  c_pbw->add_option("--preset", preset, "built-in structure");
  c_pbw->add_option("--filtration", filtration, "filtration levels checked");
  c_pbw->add_option("--coeff-degree", coeff_degree, "coefficient degree bound");

  auto* c_dirac = app.add_subcommand("dirac", "quantization consistency for observable pairs");
  c_dirac->add_option("file", file, "JSON description of a prequantum structure "
                                    "(default: the symplectic plane with theta = p dq)");
  c_dirac->add_option("--pairs", pairs_spec, "semicolon-separated observable pairs, "
                                             "e.g. \"q,p;q^2,p\"");
  c_dirac->add_option("--degree", degree, "monomial window bound");

  auto* c_costrat = app.add_subcommand("costrat", "reduced-space dimensions and the "
                                                  "costratified structure of oscillator orbits");
  c_costrat->add_option("--ell", ell, "ambient dimension")->required();
  c_costrat->add_option("--s", s, "number of particles")->required();
  c_costrat->add_option("--k", level, "total level")->required();
  c_costrat->add_flag("--oracle", oracle, "compare against invariant dimensions computed "
                                          "by exact linear algebra");

  auto* c_invariants = app.add_subcommand("invariants", "run every description in a data "
                                                        "directory plus built-in cross-checks");
  c_invariants->add_option("--data", data_dir, "directory of JSON descriptions");
  c_invariants->add_option("--degree", degree, "monomial window bound for sampled laws");

  for (auto* sub : {c_verify, c_cohom, c_pbw, c_dirac, c_costrat, c_invariants})
    sub->add_flag("--json", as_json, "emit a machine-readable run report");

  try {
    app.parse(argc, argv);

    Clock clock;

    if (*c_verify) {
      std::string raw = slurp(file);
      json j = load_json_file(file);
      if (kind.empty()) kind = kind_of(j);
      Report rep = run_verification(kind, j, degree);
      return emit_report("verify " + kind + " " + file, digest_hex(raw), clock, std::move(rep),
                         as_json);
    }

    if (*c_cohom) {
      if (preset.empty() == file.empty())
        throw FormatError("cohomology needs exactly one of a file or --preset");
      LieRinehart L = preset.empty() ? load_lie_rinehart(load_json_file(file))
                                     : preset_lie_rinehart(preset);
      int lo = 0, hi = 0;
      parse_window(window_spec, lo, hi);
      CohomTable table = cohomology_dims(L, (int)form_max, lo, hi);
      std::string digest = digest_hex(preset.empty() ? slurp(file) : preset);
      if (as_json) {
        json rows = json::array();
        for (const auto& r : table.rows)
          rows.push_back(json{{"p", r.p},
                              {"weight", r.weight},
                              {"cochains", r.dim_cochains},
                              {"cocycles", r.dim_cocycles},
                              {"boundaries", r.dim_boundaries},
                              {"h", r.dim_h}});
        json out{{"command", "cohomology"},
                 {"inputs_digest", digest},
                 {"wall_ms", clock.ms()},
                 {"weight_shift", table.shift},
                 {"rows", std::move(rows)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("weight shift per form degree: %d\n", table.shift);
        std::printf("%6s %8s %10s %10s %12s %6s\n", "p", "weight", "cochains", "cocycles",
                    "boundaries", "H");
        for (const auto& r : table.rows)
          std::printf("%6d %8d %10d %10d %12d %6d\n", r.p, r.weight, r.dim_cochains,
                      r.dim_cocycles, r.dim_boundaries, r.dim_h);
      }
      return 0;
    }

    if (*c_pbw) {
      if (preset.empty() == file.empty())
        throw FormatError("pbw needs exactly one of a file or --preset");
      LieRinehart L = preset.empty() ? load_lie_rinehart(load_json_file(file))
                                     : preset_lie_rinehart(preset);
      Report rep = check_pbw(L, (int)filtration, coeff_degree);
      std::string digest = digest_hex(preset.empty() ? slurp(file) : preset);
      return emit_report("pbw", digest, clock, std::move(rep), as_json);
    }

    if (*c_dirac) {
      Prequantum Q = file.empty() ? plane_prequantum() : load_prequantum(load_json_file(file));
      std::vector<std::pair<Poly, Poly>> pairs;
      if (pairs_spec.empty()) {
        for (int i = 0; i < Q.P.A.nvars(); ++i)
          for (int j = i + 1; j < Q.P.A.nvars(); ++j)
            pairs.emplace_back(Q.P.A.var(i), Q.P.A.var(j));
      } else {
        std::stringstream ss(pairs_spec);
        std::string chunk;
        while (std::getline(ss, chunk, ';')) {
          size_t pos = chunk.find(',');
          if (pos == std::string::npos)
            throw FormatError("pair \"" + chunk + "\" must look like f,g");
          pairs.emplace_back(Q.P.A.parse(chunk.substr(0, pos)),
                             Q.P.A.parse(chunk.substr(pos + 1)));
        }
      }
      Report rep = check_dirac(Q, pairs, degree);
      std::string digest = digest_hex(file.empty() ? std::string("plane") : slurp(file));
      return emit_report("dirac", digest, clock, std::move(rep), as_json);
    }

    if (*c_costrat) {
      if (s < 1 || s > ell)
        throw FormatError("costrat needs 1 <= s <= ell");
      RestrictionProfile prof = restriction_profile(ell, s, level);
      json out{{"command", "costrat"},
               {"ell", ell},
               {"s", s},
               {"k", level},
               {"reduced_dim", prof.total},
               {"restriction_image", prof.image},
               {"restriction_kernel", prof.kernel}};
      bool ok = true;
      if (oracle) {
        try {
          long long inv = invariant_dim(ell, s, (uint32_t)(2 * level));
          out["invariant_dim"] = inv;
          out["match"] = (inv == prof.total);
          ok = inv == prof.total;
        } catch (const UnsupportedError& e) {
          out["invariant_dim"] = nullptr;
          out["oracle_skipped"] = e.what();
        }
      }
      Costratified C = costratified_chain(ell, level);
      Report rep = verify_costratified(C);
      ok = ok && rep.ok();
      out["chain_ok"] = rep.ok();
      json dims = json::array();
      for (int d : C.dims) dims.push_back(d);
      out["chain_dims"] = std::move(dims);
      out["wall_ms"] = clock.ms();
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("reduced space (ell=%d, s=%d, k=%d): dim %lld\n", ell, s, level, prof.total);
        std::printf("restriction to s-1 particles: image %lld, kernel %lld\n", prof.image,
                    prof.kernel);
        if (out.contains("invariant_dim") && !out["invariant_dim"].is_null())
          std::printf("invariant dimension at degree %d: %lld (%s)\n", 2 * level,
                      out["invariant_dim"].get<long long>(),
                      out["match"].get<bool>() ? "match" : "MISMATCH");
        if (out.contains("oracle_skipped"))
          std::printf("oracle skipped: %s\n", out["oracle_skipped"].get<std::string>().c_str());
        std::cout << (rep.ok() ? "costratified chain verified\n" : rep.text());
      }
      return ok ? 0 : 1;
    }

    if (*c_invariants) {
      Report rep;
      std::vector<std::filesystem::path> files;
      if (std::filesystem::is_directory(data_dir))
        for (const auto& entry : std::filesystem::directory_iterator(data_dir))
          if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      if (files.empty())
        rep.fail("data directory \"" + data_dir + "\" holds descriptions",
                 "no .json files found");
      for (const auto& path : files) {
        json j = load_json_file(path.string());
        bool should_fail = expect_fail(j);
        Report sub;
        try {
          sub = run_verification(kind_of(j), j, degree);
        } catch (const std::exception& e) {
          rep.fail(path.filename().string(), std::string("verifier crashed: ") + e.what());
          continue;
        }
        bool ok = sub.ok() != should_fail;
        std::string witness;
        if (!ok && should_fail)
          witness = "expected verification to fail, but every check passed";
        else if (!ok && sub.first_failure())
          witness = sub.first_failure()->name + ": " + sub.first_failure()->witness;
        rep.check(path.filename().string() +
                      (should_fail ? " (must be rejected)" : " (must verify)"),
                  ok, witness);
      }

      rep.check("reduced-space dimension matches invariant count (ell=2, s=1, k=2)",
                reduced_space_dim(2, 1, 2) == invariant_dim(2, 1, 4), "");
      rep.check("reduced-space dimension matches invariant count (ell=2, s=2, k=2)",
                reduced_space_dim(2, 2, 2) == invariant_dim(2, 2, 4), "");
      rep.check("reduced-space dimension matches invariant count (ell=3, s=2, k=2)",
                reduced_space_dim(3, 2, 2) == invariant_dim(3, 2, 4), "");
      {
        auto t = cohomology_dims(de_rham(2), 2, 1, 2);
        bool exact = true;
        for (const auto& r : t.rows)
          if (r.dim_h != 0) exact = false;
        rep.check("coordinate-field cohomology vanishes in positive weight", exact, "");
      }
      return emit_report("invariants " + data_dir, digest_hex(data_dir), clock, std::move(rep),
                         as_json);
    }

    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GradingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
