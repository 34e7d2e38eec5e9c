#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cjones/batch.hpp"
#include "cjones/bracket.hpp"
#include "cjones/closed_forms.hpp"
#include "cjones/engine.hpp"
#include "cjones/errors.hpp"
#include "cjones/minimize.hpp"
#include "cjones/torus.hpp"
#include "cjones/walks.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("CJONES_JOBS")) {
    try {
      return std::stoi(env);
    } catch (...) {
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple-walk enumeration and colored Jones evaluation"};
  app.require_subcommand(1);

  std::string word_arg;
  bool semi = false, dump_walks = false;
  auto* walks = app.add_subcommand("walks", "Count simple walks");
  walks->add_option("word", word_arg, "Braid word, e.g. [1,1,1]")->required();
  walks->add_flag("--semi", semi, "Also count walks on the reflection");
  walks->add_flag("--dump", dump_walks, "Print every walk");

  int color = 2;
  bool eval_root = false;
  auto* jones = app.add_subcommand("jones", "Colored Jones polynomial");
  jones->add_option("word", word_arg)->required();
  jones->add_option("--color", color, "Color N >= 2")->required();
  jones->add_flag("--eval-root", eval_root,
                  "Also evaluate at q = exp(2*pi*i/N)");

  auto* oracle = app.add_subcommand("oracle-jones",
                                    "Jones polynomial by the bracket oracle");
  oracle->add_option("word", word_arg)->required();

  std::string knot_name;
  auto* closed = app.add_subcommand("closed-form",
                                    "Closed-form colored Jones polynomial");
  closed->add_option("knot", knot_name, "5_2, 6_1 or 7_2")->required();
  closed->add_option("--color", color)->required();

  bool norm_leading = false;
  auto* minimize = app.add_subcommand("minimize",
                                      "Minimize walks over the symmetry orbit");
  minimize->add_option("word", word_arg)->required();
  minimize->add_flag("--normalize-leading", norm_leading,
                     "Shift the minimizer to start with sigma_1");

  int family = 2, max_n = 10;
  auto* torus = app.add_subcommand("torus", "Torus braid walk counts");
  torus->add_option("--family", family, "2 or 3")->required();
  torus->add_option("--max", max_n, "Largest n")->required();

  std::string task_name, in_path, out_path;
  int jobs = default_jobs();
  auto* batch = app.add_subcommand("batch", "Run a task over a CSV corpus");
  batch->add_option("--task", task_name, "walks, minimize or jones")
      ->required();
  batch->add_option("--in", in_path)->required();
  batch->add_option("--out", out_path)->required();
  batch->add_option("--jobs", jobs, "Worker count (default: all cores)");
  batch->add_option("--color", color, "Color for the jones task");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*walks) {
      cjones::BraidWord b = cjones::parse_braid(word_arg);
      if (semi) {
        auto [mine, mirror] = cjones::enumerate_semi_simple(b);
        std::cout << mine.count() << " " << mirror.count() << "\n";
        if (dump_walks) {
          std::cout << cjones::dump(mine);
          std::cout << cjones::dump(mirror);
        }
      } else {
        auto census = cjones::enumerate_simple_walks(b);
        std::cout << census.count() << "\n";
        if (dump_walks) std::cout << cjones::dump(census);
      }
    } else if (*jones) {
      cjones::BraidWord b = cjones::parse_braid(word_arg);
      std::cout << cjones::colored_jones(b, color).to_string() << "\n";
      if (eval_root) {
        auto kv = cjones::kashaev_evaluation(b, color);
        std::cout << kv.value.real() << (kv.value.imag() < 0 ? " - " : " + ")
                  << std::abs(kv.value.imag()) << "i  log|.|/N = "
                  << kv.log_abs_over_n << "\n";
      }
    } else if (*oracle) {
      cjones::BraidWord b = cjones::parse_braid(word_arg);
      std::cout << cjones::jones_via_bracket(b).to_string() << "\n";
    } else if (*closed) {
      cjones::Laurent p;
      if (knot_name == "5_2")
        p = cjones::cjp_5_2(color);
      else if (knot_name == "6_1")
        p = cjones::cjp_6_1(color);
      else if (knot_name == "7_2")
        p = cjones::cjp_7_2(color);
      else
        throw cjones::DomainError("unknown knot " + knot_name);
      std::cout << p.to_string() << "\n";
    } else if (*minimize) {
      cjones::BraidWord b = cjones::parse_braid(word_arg);
      cjones::OrbitEntry e = cjones::minimize_walks(b);
      cjones::BraidWord best = e.word;
      bool normalized = false;
      if (norm_leading) {
        auto nl = cjones::normalize_leading(best);
        best = nl.word;
        normalized = nl.normalized;
      }
      std::cout << cjones::to_string(best) << " " << e.sw_count
                << (e.mirror ? " mirror" : "");
      if (norm_leading && !normalized) std::cout << " unnormalized";
      std::cout << "\n";
    } else if (*torus) {
      cjones::SeriesReport rep = cjones::count_series(family, max_n);
      for (size_t i = 0; i < rep.counts.size(); ++i)
        std::cout << (i + 1) << " " << rep.counts[i] << "\n";
      std::cout << "recurrence " << (rep.recurrence_ok ? "ok" : "FAILED")
                << "\nclosed-form " << (rep.closedform_ok ? "ok" : "FAILED")
                << "\n";
    } else if (*batch) {
      cjones::BatchOptions opt;
      if (task_name == "walks")
        opt.task = cjones::BatchTask::walks;
      else if (task_name == "minimize")
        opt.task = cjones::BatchTask::minimize;
      else if (task_name == "jones")
        opt.task = cjones::BatchTask::jones;
      else
        throw cjones::DomainError("unknown task " + task_name);
      opt.color = color;
      opt.jobs = jobs;
      cjones::CsvLoad load = cjones::load_csv(in_path);
      for (const std::string& err : load.row_errors)
        std::cerr << in_path << ": " << err << "\n";
      auto results = cjones::run_batch(load.records, opt);
      std::ofstream out(out_path);
      if (!out) throw cjones::ResourceError("cannot write " + out_path);
      const bool json = out_path.size() > 5 &&
                        out_path.substr(out_path.size() - 5) == ".json";
      out << (json ? cjones::results_to_json(results)
                   : cjones::results_to_csv(results));
    }
  } catch (const cjones::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cjones::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cjones::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
