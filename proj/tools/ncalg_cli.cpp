#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncalg/growth.hpp"
#include "ncalg/lie.hpp"
#include "ncalg/pbw.hpp"
#include "ncalg/presentation.hpp"
#include "ncalg/report.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/veronese.hpp"

using namespace ncalg;

namespace {

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

RewriteSystem completed_system(const Presentation& p, long long max_degree) {
  return complete(make_system(p.order(), p.relators), max_degree);
}

void emit(const Report& report, const std::string& format) {
  std::cout << (format == "json" ? report.to_json() : report.to_text());
}

void describe_input(Report& report, const Presentation& p) {
  if (!p.name.empty()) report.fact("input", p.name);
  report.fact("generators", std::to_string(p.alphabet.size()));
  report.fact("order", p.order_kind == OrderKind::deglex ? "deglex" : "shortlex");
  report.fact("relators", std::to_string(p.relators.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented graded algebras: completion, growth, quadratization"};
  app.require_subcommand(1);

  std::string file, format = "text", emit_what, lie_spec = "builtin:L", builtin_name = "L";
  std::string data_file;
  long long max_degree = 0, n_arg = 0;
  int d = 1, max_letter_degree = 2, matrix_indices = 0, min_verified = 0;
  bool do_eliminate = false;

  auto* cmd_complete = app.add_subcommand("complete", "Complete a rewriting system up to a degree");
  cmd_complete->add_option("file", file, "presentation file or builtin:U / builtin:A")->required();
  cmd_complete->add_option("--max-degree", max_degree, "degree bound")->required();
  cmd_complete->add_option("--emit", emit_what)->check(CLI::IsMember({"rules"}));
  cmd_complete->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_growth = app.add_subcommand("growth", "Count normal words by degree");
  cmd_growth->add_option("file", file)->required();
  cmd_growth->add_option("--max-degree", max_degree)->required();
  std::string flavor = "graded";
  cmd_growth->add_option("--flavor", flavor)->check(CLI::IsMember({"graded", "cumulative"}));
  cmd_growth->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* cmd_classify = app.add_subcommand("classify", "Classify the growth of an algebra");
  cmd_classify->add_option("file", file)->required();
  cmd_classify->add_option("--max-degree", max_degree)->required();
  cmd_classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_veronese = app.add_subcommand("veronese", "Quadratize via the degree-d Veronese");
  cmd_veronese->add_option("file", file)->required();
  cmd_veronese->add_option("--d", d, "Veronese degree")->required();
  cmd_veronese->add_option("--max-letter-degree", max_letter_degree,
                           "verify counts through this letter degree (>= 3 enables the probe)");
  cmd_veronese->add_flag("--eliminate", do_eliminate, "eliminate letters pinned by linear relations");
  cmd_veronese->add_option("--emit", emit_what)->check(CLI::IsMember({"presentation"}));
  cmd_veronese->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_pbw = app.add_subcommand("pbw-check", "Compare algebra dimensions with the enveloping series");
  cmd_pbw->add_option("--lie", lie_spec)->check(CLI::IsMember({"builtin:L"}));
  cmd_pbw->add_option("--algebra", file)->required();
  cmd_pbw->add_option("--max-degree", max_degree)->required();
  cmd_pbw->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_lie = app.add_subcommand("lie-check", "Jacobi identity and matrix model checks");
  cmd_lie->add_option("--builtin", builtin_name)->check(CLI::IsMember({"L"}));
  cmd_lie->add_option("--max-degree", max_degree)->required();
  cmd_lie->add_option("--matrix-indices", matrix_indices,
                      "also check the 2x2 matrix realization up to this index");
  cmd_lie->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_appendix = app.add_subcommand("verify-appendix", "Reconcile a named relation list");
  cmd_appendix->add_option("--data", data_file)->required();
  std::string appendix_algebra = "builtin:U";
  int appendix_d = 4;
  cmd_appendix->add_option("--algebra", appendix_algebra);
  cmd_appendix->add_option("--d", appendix_d);
  cmd_appendix->add_option("--min-verified", min_verified, "fail unless at least this many verify");
  cmd_appendix->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_partition = app.add_subcommand("partition", "Partition numbers p(n)");
  cmd_partition->add_option("n", n_arg)->required()->check(CLI::NonNegativeNumber);

  auto* cmd_kobayashi = app.add_subcommand("kobayashi-count", "Closed-form normal word count");
  cmd_kobayashi->add_option("n", n_arg)->required()->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  Report report;
  report.command = join_args(argc - 1, argv + 1);

  try {
    if (app.got_subcommand(cmd_partition)) {
      std::cout << to_string(partition_p(n_arg)) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_kobayashi)) {
      std::cout << to_string(kobayashi_closed_form(n_arg)) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_complete)) {
      auto loaded = load_presentation(file);
      for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
      const Presentation& p = loaded.presentation;
      auto sys = completed_system(p, max_degree);
      describe_input(report, p);
      report.fact("max-degree", std::to_string(max_degree));
      report.fact("rules", std::to_string(sys.rules().size()));
      if (emit_what == "rules") {
        ReportTable table{"rules", {"lhs", "rhs"}, {}};
        for (const RewriteRule& r : sys.rules())
          table.rows.push_back({to_string(r.lhs, p.alphabet), to_string(r.rhs, p.alphabet)});
        report.tables.push_back(std::move(table));
      }
      emit(report, format);
    } else if (app.got_subcommand(cmd_growth)) {
      auto loaded = load_presentation(file);
      const Presentation& p = loaded.presentation;
      auto series = normal_word_counts(completed_system(p, max_degree), max_degree);
      if (flavor == "cumulative") series = cumulative(series);
      if (format == "csv") {
        std::cout << to_csv(series);
        return 0;
      }
      describe_input(report, p);
      report.fact("flavor", flavor);
      report.tables.push_back(series_table("series", series));
      emit(report, format);
    } else if (app.got_subcommand(cmd_classify)) {
      auto loaded = load_presentation(file);
      const Presentation& p = loaded.presentation;
      auto series = cumulative(normal_word_counts(completed_system(p, max_degree), max_degree));
      GrowthClass cls = classify_growth(series);
      describe_input(report, p);
      report.fact("label", to_string(cls.label));
      report.fact("alpha", fmt_double(cls.alpha));
      report.fact("degree", fmt_double(cls.degree));
      report.fact("median_ratio", fmt_double(cls.median_ratio));
      report.fact("max_ratio_drop", fmt_double(cls.max_ratio_drop));
      report.fact("max_second_difference", fmt_double(cls.max_second_difference));
      report.fact("floats", "alpha through max_second_difference are floating-point diagnostics");
      emit(report, format);
    } else if (app.got_subcommand(cmd_veronese)) {
      auto loaded = load_presentation(file);
      const Presentation& p = loaded.presentation;
      QuadPresentation qp = veronese_presentation(p, d);
      describe_input(report, p);
      report.fact("d", std::to_string(d));
      report.fact("letters", std::to_string(qp.letter_count()));
      report.fact("linear-relations", std::to_string(qp.linear_relations.size()));
      if (do_eliminate) {
        qp = eliminate_linear(qp);
        report.fact("letters-after-elimination", std::to_string(qp.letter_count()));
        if (!qp.eliminated.empty()) {
          ReportTable table{"eliminated", {"letter", "substitution"}, {}};
          for (const auto& [letter, combo] : qp.eliminated)
            table.rows.push_back({letter.name, to_string(combo, qp.letter_alphabet)});
          report.tables.push_back(std::move(table));
        }
      }
      report.fact("quadratic-relations", std::to_string(qp.quadratic_relations.size()));
      long long depth = d * std::max<long long>(2, max_letter_degree);
      auto h = normal_word_counts(completed_system(p, depth), depth);
      RankReport rank = relation_rank(qp, h.at(2 * d));
      report.fact("rank", std::to_string(rank.rank));
      report.fact("expected-rank", to_string(rank.expected));
      report.require(rank.ok(), "quadratic relation rank " + std::to_string(rank.rank) +
                                    " != letters^2 - h(2d) = " + to_string(rank.expected));
      if (max_letter_degree >= 3) {
        QuadraticityReport probe = verify_quadraticity(qp, h, d, max_letter_degree);
        ReportTable table{"quadraticity", {"letter-degree", "counted", "expected"}, {}};
        for (const QuadraticityRow& row : probe.rows) {
          table.rows.push_back(
              {std::to_string(row.m), to_string(row.counted), to_string(row.expected)});
          report.require(row.counted == row.expected,
                         "normal word count at letter degree " + std::to_string(row.m) +
                             " is " + to_string(row.counted) + ", source algebra has " +
                             to_string(row.expected));
        }
        report.tables.push_back(std::move(table));
      }
      if (emit_what == "presentation") {
        std::cout << print_presentation(qp.as_presentation());
        return report.ok() ? 0 : 1;
      }
      emit(report, format);
    } else if (app.got_subcommand(cmd_pbw)) {
      auto loaded = load_presentation(file);
      const Presentation& p = loaded.presentation;
      GradedLie L = GradedLie::build_L(max_degree);
      auto lie_dims = L.graded_dims(max_degree);
      auto counts = normal_word_counts(completed_system(p, max_degree), max_degree);
      auto env = enveloping_series(lie_dims, max_degree);
      CrossCheck check = pbw_cross_check(lie_dims, counts, max_degree);
      describe_input(report, p);
      report.fact("lie", lie_spec);
      report.fact("degrees-compared", std::to_string(check.degrees_compared));
      ReportTable table{"comparison", {"degree", "enveloping", "algebra"}, {}};
      for (long long deg = 0; deg <= max_degree; ++deg)
        table.rows.push_back(
            {std::to_string(deg), to_string(env.at(deg)), to_string(counts.at(deg))});
      report.tables.push_back(std::move(table));
      for (long long deg : check.mismatch_degrees)
        report.require(false, "dimension mismatch at degree " + std::to_string(deg));
      emit(report, format);
    } else if (app.got_subcommand(cmd_lie)) {
      GradedLie L = GradedLie::build_L(max_degree);
      JacobiReport jac = jacobi_check(L, max_degree);
      report.fact("builtin", builtin_name);
      report.fact("max-degree", std::to_string(max_degree));
      report.fact("jacobi-triples", std::to_string(jac.triples_checked));
      for (const auto& triple : jac.violations)
        report.require(false, "Jacobi identity fails on (" + to_string(triple[0]) + ", " +
                                  to_string(triple[1]) + ", " + to_string(triple[2]) + ")");
      if (matrix_indices > 0) {
        MatrixModelReport mm = matrix_model_check(matrix_indices);
        report.fact("matrix-pairs", std::to_string(mm.pairs_checked));
        for (const std::string& v : mm.violations) report.require(false, v);
      }
      emit(report, format);
    } else if (app.got_subcommand(cmd_appendix)) {
      auto loaded = load_presentation(appendix_algebra);
      const Presentation& p = loaded.presentation;
      QuadPresentation qp = eliminate_linear(veronese_presentation(p, appendix_d));
      Alphabet names = appendix_alphabet(qp);
      auto lines = parse_named_relations(read_file(data_file), names);
      AppendixReport rec = appendix_reconcile(qp, lines);
      describe_input(report, p);
      report.fact("data", data_file);
      report.fact("total", std::to_string(rec.total));
      report.fact("parsed", std::to_string(rec.parsed_count));
      report.fact("verified", std::to_string(rec.verified_count));
      ReportTable table{"unverified", {"name", "line", "detail"}, {}};
      for (const AppendixVerdict& v : rec.verdicts) {
        if (v.verified) continue;
        table.rows.push_back({v.name, std::to_string(v.line), v.detail});
        report.discrepancies.push_back(v.name + " (line " + std::to_string(v.line) +
                                       "): " + v.detail);
      }
      if (!table.rows.empty()) report.tables.push_back(std::move(table));
      report.require(rec.verified_count >= min_verified,
                     "only " + std::to_string(rec.verified_count) + " of " +
                         std::to_string(rec.total) + " relations verified (need " +
                         std::to_string(min_verified) + ")");
      emit(report, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return report.ok() ? 0 : 1;
}
