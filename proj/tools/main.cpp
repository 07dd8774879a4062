// Command-line calculator for h^{q,0} of symmetric products (equivalently,
// Hilbert schemes of points) of surfaces, over Q or a prime field.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symforms/invariants.hpp"
#include "symforms/json_io.hpp"
#include "symforms/presets.hpp"
#include "symforms/series.hpp"

namespace {

using symforms::FieldSpec;
using symforms::InvariantReport;
using symforms::SurfaceHodgeData;

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceArgs {
  std::string preset;
  std::vector<unsigned> hodge;  // h00,h10,h20
  std::int64_t characteristic = -1;

  void attach(CLI::App* cmd) {
    // --h would collide with the default -h short help flag
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--preset", preset, "named surface preset");
    cmd->add_option("--h", hodge, "explicit Hodge data h00,h10,h20")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--char", characteristic,
                    "ground-field characteristic (0 or a prime); overrides "
                    "the preset's field");
  }

  SurfaceHodgeData resolve() const {
    if (!preset.empty() && !hodge.empty()) {
      throw CLI::ValidationError("--preset and --h are mutually exclusive");
    }
    SurfaceHodgeData data;
    if (!preset.empty()) {
      auto p = symforms::find_preset(preset);
      if (!p) throw CLI::ValidationError("unknown preset: " + preset);
      data = p->data;
    } else if (!hodge.empty()) {
      data.h00 = hodge[0];
      data.h10 = hodge[1];
      data.h20 = hodge[2];
      data.label = "custom";
      data.field = FieldSpec(0);
    } else {
      throw CLI::ValidationError("one of --preset or --h is required");
    }
    if (characteristic >= 0) {
      data.field = FieldSpec(static_cast<std::uint64_t>(characteristic));
    }
    return data;
  }
};

std::string surface_line(const SurfaceHodgeData& data) {
  return "surface " + (data.label.empty() ? std::string("custom") : data.label) +
         ": (h00,h10,h20) = (" + std::to_string(data.h00) + "," +
         std::to_string(data.h10) + "," + std::to_string(data.h20) +
         ") over " + data.field.to_string();
}

void check_q_range(unsigned n, unsigned q) {
  if (n < 1) throw CLI::ValidationError("--n must be >= 1");
  if (q > 2 * n) {
    throw CLI::ValidationError("q = " + std::to_string(q) +
                               " exceeds 2n = " + std::to_string(2 * n) +
                               ": no q-forms in that degree");
  }
}

int cmd_invariants(const SurfaceArgs& surface, unsigned n, unsigned q,
                   bool want_basis, bool run_oracle, bool as_json) {
  SurfaceHodgeData data = surface.resolve();
  check_q_range(n, q);
  InvariantReport report =
      symforms::invariant_dimension(data, n, q, want_basis);
  if (run_oracle) {
    InvariantReport oracle =
        symforms::invariant_dimension_bruteforce(data, n, q);
    if (oracle.dimension != report.dimension) {
      throw OracleMismatch(
          "generator-kernel dimension " + std::to_string(report.dimension) +
          " disagrees with brute-force dimension " +
          std::to_string(oracle.dimension));
    }
  }
  if (as_json) {
    std::cout << symforms::report_to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << surface_line(data) << "\n";
  std::cout << "h^{" << q << ",0}(Hilb^" << n << ") = h^{" << q
            << ",0}(X^(" << n << ")) = " << report.dimension << "  [method: "
            << symforms::method_name(report.method) << "]\n";
  if (q == 2 && n >= 2 && report.dimension > 1 &&
      data.field.characteristic() == 2) {
    std::cout << "note: h^{2,0} > 1 -- the two-form does not span, so this "
                 "Hilbert scheme is not irreducible symplectic\n";
  }
  if (run_oracle) {
    std::cout << "oracle: brute force over all " << n
              << "! permutations agrees\n";
  }
  if (want_basis && report.basis) {
    std::cout << "fixed basis (coefficients over the monomial basis):\n";
    for (const auto& vec : *report.basis) {
      std::cout << "  [";
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << vec[i].to_string();
      }
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_table(const SurfaceArgs& surface, unsigned n_max,
              std::optional<unsigned> q_fixed, unsigned q_max, bool as_json) {
  SurfaceHodgeData data = surface.resolve();
  if (n_max < 1) throw CLI::ValidationError("--n-max must be >= 1");
  unsigned q_lo = q_fixed ? *q_fixed : 0;
  unsigned q_hi = q_fixed ? *q_fixed : q_max;

  nlohmann::json rows = nlohmann::json::array();
  if (!as_json) {
    std::cout << surface_line(data) << "\n";
    std::cout << "q\\n";
    for (unsigned n = 1; n <= n_max; ++n) std::cout << "\t" << n;
    std::cout << "\n";
  }
  for (unsigned q = q_lo; q <= q_hi; ++q) {
    if (!as_json) std::cout << q;
    for (unsigned n = 1; n <= n_max; ++n) {
      if (q > 2 * n) {
        if (as_json) continue;
        std::cout << "\t-";
        continue;
      }
      auto report = symforms::invariant_dimension(data, n, q);
      if (as_json) {
        rows.push_back(symforms::report_to_json(report));
      } else {
        std::cout << "\t" << report.dimension;
      }
    }
    if (!as_json) std::cout << "\n";
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_compare(const SurfaceArgs& surface, unsigned n_max, unsigned q_max,
                bool as_json) {
  SurfaceHodgeData data = surface.resolve();
  if (data.field.characteristic() == 0) {
    throw CLI::ValidationError(
        "compare needs a positive characteristic (the characteristic-0 "
        "count is the baseline)");
  }
  auto discrepancies = symforms::compare(data, n_max, q_max);
  if (as_json) {
    std::cout << symforms::discrepancies_to_json(discrepancies).dump(2)
              << "\n";
    return 0;
  }
  std::cout << surface_line(data) << "\n";
  if (discrepancies.empty()) {
    std::cout << "no discrepancies: the characteristic-0 count matches the "
                 "engine for all n <= " << n_max << ", q <= " << q_max << "\n";
    return 0;
  }
  std::cout << "characteristic-0 count vs " << data.field.to_string()
            << " engine:\n";
  for (const auto& d : discrepancies) {
    std::cout << "  n=" << d.n << " q=" << d.q << ": char0=" << d.char0_value
              << " engine=" << d.engine_value << "\n";
  }
  return 0;
}

int cmd_presets() {
  for (const auto& p : symforms::all_presets()) {
    std::cout << p.name << ": (h00,h10,h20) = (" << p.data.h00 << ","
              << p.data.h10 << "," << p.data.h20 << ") over "
              << p.data.field.to_string() << "\n    " << p.notes << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact h^{q,0} calculator for symmetric products and Hilbert schemes "
      "of surfaces, over Q or a prime field"};
  app.require_subcommand(1);

  SurfaceArgs inv_surface, table_surface, cmp_surface;
  unsigned n = 1, q = 0, n_max = 4, q_max = 4;
  std::optional<unsigned> table_q;
  bool want_basis = false, run_oracle = false;
  bool inv_json = false, table_json = false, cmp_json = false;

  auto* inv = app.add_subcommand(
      "invariants", "dimension of the S_n-invariant q-forms for one (n, q)");
  inv_surface.attach(inv);
  inv->add_option("--n", n, "number of points")->required();
  inv->add_option("--q", q, "form degree")->required();
  inv->add_flag("--basis", want_basis, "print an explicit fixed basis");
  inv->add_flag("--oracle", run_oracle,
                "cross-check against brute force over all of S_n");
  inv->add_flag("--json", inv_json, "JSON output");

  auto* table = app.add_subcommand(
      "table", "sweep of dimensions over n in [1, n-max], q in [0, q-max]");
  table_surface.attach(table);
  table->add_option("--n-max", n_max, "largest n")->required();
  table->add_option("--q", table_q, "single q row");
  table->add_option("--q-max", q_max, "largest q (default 4)");
  table->add_flag("--json", table_json, "JSON output");

  auto* cmp = app.add_subcommand(
      "compare",
      "where the characteristic-0 count disagrees with the char-p engine");
  cmp_surface.attach(cmp);
  cmp->add_option("--n-max", n_max, "largest n (default 4)");
  cmp->add_option("--q-max", q_max, "largest q (default 4)");
  cmp->add_flag("--json", cmp_json, "JSON output");

  auto* presets = app.add_subcommand("presets", "list surface presets");

  try {
    app.parse(argc, argv);
    if (inv->parsed()) {
      return cmd_invariants(inv_surface, n, q, want_basis, run_oracle,
                            inv_json);
    }
    if (table->parsed()) {
      return cmd_table(table_surface, n_max, table_q, q_max, table_json);
    }
    if (cmp->parsed()) return cmd_compare(cmp_surface, n_max, q_max, cmp_json);
    if (presets->parsed()) return cmd_presets();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleMismatch& e) {
    std::cerr << "internal assertion failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
