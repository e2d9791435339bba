#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepalt/las.hpp"
#include "sepalt/numeric.hpp"
#include "sepalt/perm.hpp"
#include "sepalt/sampler.hpp"
#include "sepalt/schroder.hpp"
#include "sepalt/series.hpp"

namespace {

using nlohmann::json;

json report_json(const std::vector<sepalt::CheckLine>& lines) {
  json arr = json::array();
  for (const auto& l : lines)
    arr.push_back({{"identity", l.identity},
                   {"n", l.n},
                   {"status", l.pass ? "pass" : "fail"},
                   {"lhs", l.lhs},
                   {"rhs", l.rhs}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sepalt;
  init_precision();

  CLI::App app{"Longest alternating subsequences in random separable permutations"};
  app.require_subcommand(1);

  // count
  int count_n = 10;
  auto* cmd_count = app.add_subcommand("count", "Print s_1..s_N (big Schroeder numbers)");
  cmd_count->add_option("N", count_n, "largest index")->required()->check(CLI::PositiveNumber);

  // enum
  int enum_n = 4;
  auto* cmd_enum = app.add_subcommand("enum", "Stream all separable permutations of length n");
  cmd_enum->add_option("n", enum_n, "length")->required()->check(CLI::PositiveNumber);

  // sample
  int sample_n = 10;
  std::uint64_t sample_count = 10, sample_seed = 0;
  std::string sample_ensemble = "separable";
  auto* cmd_sample = app.add_subcommand("sample", "Stream random permutations");
  cmd_sample->add_option("n", sample_n, "length")->required()->check(CLI::PositiveNumber);
  cmd_sample->add_option("--samples", sample_count, "number of draws");
  cmd_sample->add_option("--seed", sample_seed, "rng seed");
  cmd_sample->add_option("--ensemble", sample_ensemble, "separable | uniform")
      ->check(CLI::IsMember({"separable", "uniform"}));

  // stats
  int stats_n = 100, stats_workers = 1;
  std::uint64_t stats_samples = 1000, stats_seed = 0;
  std::string stats_ensemble = "separable";
  auto* cmd_stats = app.add_subcommand("stats", "Monte Carlo LAS statistics (JSON)");
  cmd_stats->add_option("n", stats_n, "length")->required()->check(CLI::PositiveNumber);
  cmd_stats->add_option("--samples", stats_samples, "sample budget");
  cmd_stats->add_option("--seed", stats_seed, "rng seed");
  cmd_stats->add_option("--workers", stats_workers, "worker threads")->check(CLI::PositiveNumber);
  cmd_stats->add_option("--ensemble", stats_ensemble, "separable | uniform")
      ->check(CLI::IsMember({"separable", "uniform"}));

  // moments
  int moments_n = 8, moments_order = 0;
  auto* cmd_moments = app.add_subcommand("moments", "Exact moments for one n (JSON)");
  cmd_moments->add_option("n", moments_n, "length")->required()->check(CLI::PositiveNumber);
  cmd_moments->add_option("--order", moments_order, "series order (default max(n, 64))");

  // series
  std::string series_name;
  int series_order = 64;
  auto* cmd_series = app.add_subcommand("series", "Dump series coefficients as CSV");
  cmd_series->add_option("name", series_name, "X | s | G_pm | G_mm | H_pm | H_mm")
      ->required()
      ->check(CLI::IsMember({"X", "s", "G_pm", "G_mm", "H_pm", "H_mm"}));
  cmd_series->add_option("--order", series_order, "series order")->check(CLI::PositiveNumber);

  // verify
  int verify_max_n = 8, verify_order = 64;
  auto* cmd_verify = app.add_subcommand("verify", "Check every recursion and identity (JSON)");
  cmd_verify->add_option("--max-n", verify_max_n, "enumeration checks for n = 3..max-n")
      ->check(CLI::Range(3, 10));
  cmd_verify->add_option("--order", verify_order, "series order")->check(CLI::Range(16, 1 << 20));

  // asymptotics
  std::vector<long> asym_ns = {250, 500, 1000, 2000};
  auto* cmd_asym = app.add_subcommand(
      "asymptotics", "CSV of exact values vs asymptotic formulas for s, a, b, alpha");
  cmd_asym->add_option("--n-list", asym_ns, "evaluation points")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_count) {
      const auto s = schroder_numbers(count_n);
      for (int i = 1; i <= count_n; ++i) std::cout << (i > 1 ? " " : "") << s[(size_t)i];
      std::cout << "\n";
    } else if (*cmd_enum) {
      for (const auto& p : enumerate_separable(enum_n)) std::cout << p.to_string() << "\n";
    } else if (*cmd_sample) {
      Rng rng(sample_seed);
      if (sample_ensemble == "separable") {
        SeparableSampler sampler(sample_n);
        for (std::uint64_t i = 0; i < sample_count; ++i)
          std::cout << sampler.sample(sample_n, rng).to_string() << "\n";
      } else {
        for (std::uint64_t i = 0; i < sample_count; ++i)
          std::cout << SeparableSampler::sample_uniform(sample_n, rng).to_string() << "\n";
      }
    } else if (*cmd_stats) {
      std::cout << mc_stats(stats_n, stats_samples, stats_seed, stats_workers, stats_ensemble)
                       .to_json()
                << "\n";
    } else if (*cmd_moments) {
      const int order = moments_order > 0 ? moments_order : std::max(moments_n, 64);
      if (moments_n > order) throw std::length_error("n exceeds requested order");
      const Catalog cat = build_catalog(order);
      const ExactMoments m = exact_moments(moments_n, cat);
      const auto both = [](const Rational& q) {
        return json{{"exact", rat_str(q)}, {"decimal", real_str(to_real(q))}};
      };
      json j{{"n", m.n},
             {"mean_pm", both(m.mean_pm)},
             {"c_mm", both(m.c_mm)},
             {"secmom_pm", both(m.secmom_pm)},
             {"C_mm", both(m.C_mm)},
             {"var_pm", both(m.var_pm)}};
      std::cout << j.dump(2) << "\n";
    } else if (*cmd_series) {
      const Catalog cat = build_catalog(series_order);
      const TruncatedSeries* f = nullptr;
      if (series_name == "X") f = &cat.X;
      else if (series_name == "s") f = &cat.s;
      else if (series_name == "G_pm") f = &cat.G_pm;
      else if (series_name == "G_mm") f = &cat.G_mm;
      else if (series_name == "H_pm") f = &cat.H_pm;
      else f = &cat.H_mm;
      std::cout << "n,numerator,denominator\n";
      for (int i = 0; i <= f->order(); ++i)
        std::cout << i << "," << (*f)[i].get_num() << "," << (*f)[i].get_den() << "\n";
    } else if (*cmd_verify) {
      std::vector<CheckLine> lines;
      for (int n = 3; n <= verify_max_n; ++n)
        for (auto& l : verify_structure(n)) lines.push_back(std::move(l));
      for (auto& l : verify_identities(verify_order)) lines.push_back(std::move(l));
      std::cout << report_json(lines).dump(2) << "\n";
      if (!all_pass(lines)) {
        for (const auto& l : lines)
          if (!l.pass) std::cerr << "verification failed: " << l.identity << " (n=" << l.n << ")\n";
        return 1;
      }
    } else if (*cmd_asym) {
      long max_n = 3;
      for (long n : asym_ns) max_n = std::max(max_n, n);
      if (max_n > 1000000) throw std::length_error("n too large");
      const auto s = schroder_numbers(static_cast<int>(max_n));
      const auto a = coeff_sequence(CoeffKind::a, static_cast<int>(max_n));
      const auto b = coeff_sequence(CoeffKind::b, static_cast<int>(max_n));
      const auto alpha = coeff_sequence(CoeffKind::alpha, static_cast<int>(max_n));
      std::cout << "kind,n,value,lead_formula,refined_formula,ratio\n";
      const auto row = [&](const char* kind, long n, const BigInt& v, AsymKind lead,
                           AsymKind refined) {
        const Real lead_v = asymptotic_value(lead, n);
        const Real refined_v = asymptotic_value(refined, n);
        std::cout << kind << "," << n << "," << v << "," << real_str(lead_v) << ","
                  << real_str(refined_v) << "," << real_str(to_real(BigInt(v)) / lead_v) << "\n";
      };
      for (long n : asym_ns) {
        if (n < 3) throw std::domain_error("asymptotics need n >= 3");
        row("s", n, s[(size_t)n], AsymKind::s_lead, AsymKind::s_refined);
        row("a", n, a[(size_t)n], AsymKind::a_lead, AsymKind::a_refined);
        row("b", n, b[(size_t)n], AsymKind::b_lead, AsymKind::b_refined);
        row("alpha", n, alpha[(size_t)n], AsymKind::alpha_lead, AsymKind::alpha_refined);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
