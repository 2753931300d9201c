// wordstat: word statistics for finite binary words.
//
// Subcommands: generate, analyze, profile, classify, bench, reproduce.
// Exit codes: 0 success, 2 usage error, 3 input parse error, 4 reproduction
// failure. All data outputs are deterministic functions of the flags.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordstat/reproduce.hpp"
#include "wordstat/wordstat.hpp"

using json = nlohmann::ordered_json;
using namespace wordstat;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitAcceptance = 4;

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

json json_count(BigCount v) {
  if (fits_uint64(v)) return static_cast<std::uint64_t>(v);
  return to_string(v);  // exact decimal as string beyond 64 bits
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty())
    std::fwrite(text.data(), 1, text.size(), stdout);
  else
    write_text(output_path, text);
}

std::vector<std::int64_t> parse_checkpoint_scheme(const std::string& scheme, std::int64_t n) {
  if (scheme == "dense") {
    if (n > 100000)
      throw CLI::ValidationError("--checkpoints",
                                 "dense checkpoints are limited to n <= 100000");
    return dense_checkpoints(n);
  }
  if (scheme == "geometric") return geometric_checkpoints(n);
  if (scheme.rfind("geometric:", 0) == 0) {
    const double ratio = std::stod(scheme.substr(10));
    if (!(ratio > 1.0))
      throw CLI::ValidationError("--checkpoints", "geometric ratio must be > 1");
    return geometric_checkpoints(n, ratio);
  }
  if (scheme.rfind("list:", 0) == 0) {
    std::vector<std::int64_t> cps;
    std::string item;
    std::istringstream in(scheme.substr(5));
    while (std::getline(in, item, ',')) cps.push_back(std::stoll(item));
    validate_checkpoints(cps, n);
    return cps;
  }
  throw CLI::ValidationError("--checkpoints",
                             "expected dense, geometric, geometric:<ratio> or list:<n1,n2,...>");
}

std::string svg_path_for(const std::string& output) {
  std::string base = output;
  for (const char* ext : {".csv", ".json"}) {
    if (base.size() > std::strlen(ext) &&
        base.compare(base.size() - std::strlen(ext), std::strlen(ext), ext) == 0) {
      base.resize(base.size() - std::strlen(ext));
      break;
    }
  }
  return base + ".svg";
}

struct GenerateOptions {
  std::string kind = "random";
  std::string eta, zeta, ratio = "2", path, output;
  std::int64_t k1 = 1, length = 0;
  std::uint64_t seed = 1;
};

int run_generate(const GenerateOptions& opt) {
  GeneratorSpec spec;
  if (opt.kind == "periodic") {
    spec.kind = GeneratorKind::periodic;
    spec.eta = Word::from_string(opt.eta);
    spec.zeta = Word::from_string(opt.zeta);
  } else if (opt.kind == "sparse") {
    spec.kind = GeneratorKind::sparse;
    spec.k1 = opt.k1;
    spec.ratio = parse_rational(opt.ratio);
  } else if (opt.kind == "random") {
    spec.kind = GeneratorKind::random_iid;
    spec.seed = opt.seed;
  } else if (opt.kind == "fibonacci") {
    spec.kind = GeneratorKind::fibonacci;
  } else if (opt.kind == "file") {
    spec.kind = GeneratorKind::file;
    spec.path = opt.path;
  } else {
    throw CLI::ValidationError("--kind", "expected periodic, sparse, random, fibonacci or file");
  }
  spec.length = opt.length;
  const Word w = make_word(spec);
  if (opt.output.empty()) throw CLI::ValidationError("--output", "generate requires --output");
  write_word_file(opt.output, w);
  std::printf("length=%lld %s output=%s\n", static_cast<long long>(w.size()),
              describe(spec).c_str(), opt.output.c_str());
  return 0;
}

struct AnalyzeOptions {
  std::string input, output;
};

int run_analyze(const AnalyzeOptions& opt) {
  const Word w = read_word_file(opt.input);
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  json out;
  out["n"] = n;
  out["sigma"] = json_count(sigma(w));
  if (n == 0) {
    out["lambda"] = nullptr;
    out["sigma_over_n2"] = nullptr;
    out["sigma_over_n3"] = nullptr;
    out["lambda_over_n3"] = nullptr;
    out["lemma1_slack"] = nullptr;
    out["note"] = "lambda is undefined for the empty word";
  } else {
    const BigCount s = sigma(w);
    const BigCount l = lambda(w);
    const double nd = static_cast<double>(n);
    out["lambda"] = json_count(l);
    out["sigma_over_n2"] = to_double(s) / (nd * nd);
    out["sigma_over_n3"] = to_double(s) / (nd * nd * nd);
    out["lambda_over_n3"] = to_double(l) / (nd * nd * nd);
    out["lemma1_slack"] = json_count(48 * s - l);
  }
  out["config"] = {{"command", "analyze"}, {"input", opt.input}};
  emit(opt.output, out.dump(2) + "\n");
  return 0;
}

struct ProfileOptions {
  std::string input, output, functional = "sigma", checkpoints = "geometric", format = "csv";
  std::vector<std::string> emit_formats;
};

int run_profile(const ProfileOptions& opt) {
  const Word w = read_word_file(opt.input);
  if (w.empty()) throw CLI::ValidationError("--input", "profile requires a nonempty word");
  const auto cps = parse_checkpoint_scheme(opt.checkpoints, static_cast<std::int64_t>(w.size()));
  const bool want_sigma = opt.functional == "sigma" || opt.functional == "both";
  const bool want_lambda = opt.functional == "lambda" || opt.functional == "both";
  if (!want_sigma && !want_lambda)
    throw CLI::ValidationError("--functional", "expected sigma, lambda or both");
  const bool want_svg =
      std::find(opt.emit_formats.begin(), opt.emit_formats.end(), "svg") != opt.emit_formats.end();
  if (want_svg && opt.output.empty())
    throw CLI::ValidationError("--emit", "svg emission requires --output");
  if (opt.functional == "both" && opt.output.empty())
    throw CLI::ValidationError("--output", "--functional both requires --output");

  json config = {{"command", "profile"},
                 {"input", opt.input},
                 {"functional", opt.functional},
                 {"checkpoints", opt.checkpoints},
                 {"format", opt.format}};

  std::optional<Profile> sigma_prof;
  std::optional<LambdaProfile> lambda_prof;
  if (want_sigma) sigma_prof = sigma_profile(w, cps);
  if (want_lambda) lambda_prof = lambda_profile(w, cps);

  auto output_name = [&](const char* tag, const char* ext) {
    if (opt.functional != "both") return opt.output;
    return opt.output + "." + tag + "." + ext;
  };

  if (opt.format == "csv") {
    if (want_sigma) emit(output_name("sigma", "csv"), sigma_profile_csv(*sigma_prof));
    if (want_lambda) emit(output_name("lambda", "csv"), lambda_profile_csv(*lambda_prof));
  } else if (opt.format == "json") {
    json out;
    out["config"] = config;
    if (want_sigma) {
      json rows = json::array();
      for (std::size_t i = 0; i < sigma_prof->size(); ++i) {
        const double nd = static_cast<double>(sigma_prof->checkpoints[i]);
        rows.push_back({{"n", sigma_prof->checkpoints[i]},
                        {"sigma", json_count(sigma_prof->values[i])},
                        {"sigma_over_n2", to_double(sigma_prof->values[i]) / (nd * nd)},
                        {"sigma_over_n3", to_double(sigma_prof->values[i]) / (nd * nd * nd)}});
      }
      out["sigma"] = std::move(rows);
    }
    if (want_lambda) {
      json rows = json::array();
      for (std::size_t i = 0; i < lambda_prof->profile.size(); ++i) {
        const double nd = static_cast<double>(lambda_prof->profile.checkpoints[i]);
        const PowerWitness& wit = lambda_prof->witnesses[i];
        rows.push_back({{"n", lambda_prof->profile.checkpoints[i]},
                        {"lambda", json_count(lambda_prof->profile.values[i])},
                        {"lambda_over_n3", to_double(lambda_prof->profile.values[i]) / (nd * nd * nd)},
                        {"witness_eta_len", wit.eta_length},
                        {"witness_exponent", wit.exponent},
                        {"witness_pos", wit.position}});
      }
      out["lambda"] = std::move(rows);
    }
    emit(opt.output, out.dump(2) + "\n");
  } else {
    throw CLI::ValidationError("--format", "expected csv or json");
  }

  if (want_svg) {
    std::vector<RatioSeries> series;
    std::vector<std::string> labels;
    if (want_sigma) {
      series.push_back(ratio_series(*sigma_prof, 2));
      labels.push_back("sigma/n^2");
      series.push_back(ratio_series(*sigma_prof, 3));
      labels.push_back("sigma/n^3");
    }
    if (want_lambda) {
      series.push_back(ratio_series(lambda_prof->profile, 3));
      labels.push_back("lambda/n^3");
    }
    write_text(svg_path_for(opt.output), svg_chart(series, labels, "normalized profile"));
  }
  return 0;
}

struct ClassifyOptions {
  std::string input, output;
  ClassifierConfig config;
};

int run_classify(const ClassifyOptions& opt) {
  const Word w = read_word_file(opt.input);
  const Verdict v = classify(w, opt.config);
  json out;
  out["label"] = to_string(v.label);
  out["estimated_limit"] = v.estimated_limit;
  if (v.estimated_period)
    out["estimated_period"] = *v.estimated_period;
  else
    out["estimated_period"] = nullptr;
  json evidence;
  evidence["tail_min"] = v.evidence.tail_min;
  evidence["tail_max"] = v.evidence.tail_max;
  evidence["oscillation"] = v.evidence.oscillation;
  if (v.evidence.morse_hedlund_k)
    evidence["morse_hedlund_k"] = *v.evidence.morse_hedlund_k;
  else
    evidence["morse_hedlund_k"] = nullptr;
  evidence["dominant_power"] = {{"n", v.evidence.dominant_power.n},
                                {"exponent", v.evidence.dominant_power.exponent},
                                {"eta_length", v.evidence.dominant_power.eta_length}};
  out["evidence"] = std::move(evidence);
  out["config"] = {{"command", "classify"},
                   {"input", opt.input},
                   {"min_length", v.config.min_length},
                   {"eps_osc", v.config.eps_osc},
                   {"theta_pos", v.config.theta_pos},
                   {"k_max", v.config.k_max},
                   {"tail_fraction", v.config.tail_fraction},
                   {"confirm_tail_fraction", v.config.confirm_tail_fraction},
                   {"checkpoint_ratio", v.config.checkpoint_ratio}};
  emit(opt.output, out.dump(2) + "\n");
  return 0;
}

struct BenchOptions {
  std::vector<std::int64_t> sizes{1000, 10000, 100000, 1000000};
  std::int64_t naive_cutoff = 10000;
  std::string json_path;
};

int run_bench(const BenchOptions& opt) {
  // sigma_naive additionally guards at 4096: its associative counter needs
  // quadratic memory, which passes 2 GB near n = 1e4.
  constexpr std::int64_t kSigmaNaiveGuard = 4096;
  json rows = json::array();
  std::printf("%10s  %-24s %12s\n", "n", "algorithm", "seconds");
  auto report = [&](std::int64_t n, const char* algo, std::optional<double> seconds) {
    if (seconds)
      std::printf("%10lld  %-24s %12.4f\n", static_cast<long long>(n), algo, *seconds);
    else
      std::printf("%10lld  %-24s %12s\n", static_cast<long long>(n), algo, "skipped");
    rows.push_back({{"n", n},
                    {"algorithm", algo},
                    {"seconds", seconds ? json(*seconds) : json("skipped")}});
  };
  for (std::int64_t n : opt.sizes) {
    const Word w = make_random(1, n);
    double t0 = now();
    volatile double sink = to_double(sigma(w));
    report(n, "sigma", now() - t0);
    if (n <= opt.naive_cutoff && n <= kSigmaNaiveGuard) {
      t0 = now();
      sink = to_double(sigma_naive(w));
      report(n, "sigma_naive", now() - t0);
    } else {
      report(n, "sigma_naive", std::nullopt);
    }
    if (!w.empty()) {
      t0 = now();
      sink = to_double(lambda(w));
      report(n, "lambda", now() - t0);
      if (n <= opt.naive_cutoff) {
        t0 = now();
        sink = to_double(lambda_naive(w));
        report(n, "lambda_naive", now() - t0);
      } else {
        report(n, "lambda_naive", std::nullopt);
      }
    }
    t0 = now();
    const Profile prof = sigma_profile(w, geometric_checkpoints(n));
    sink = static_cast<double>(prof.size());
    report(n, "sigma_profile_geometric", now() - t0);
    (void)sink;
  }
  if (!opt.json_path.empty()) {
    json out;
    out["config"] = {{"command", "bench"},
                     {"sizes", opt.sizes},
                     {"naive_cutoff", opt.naive_cutoff}};
    out["rows"] = std::move(rows);
    write_text(opt.json_path, out.dump(2) + "\n");
  }
  return 0;
}

struct ReproduceOptions {
  std::string only, json_path;
};

int run_reproduce(const ReproduceOptions& opt) {
  const auto results = reproduce::run_all(opt.only);
  if (results.empty()) {
    std::fprintf(stderr, "no criterion matches --only %s\n", opt.only.c_str());
    return kExitUsage;
  }
  bool all_pass = true;
  json jcriteria = json::array();
  for (const auto& cr : results) {
    const char* status = cr.pass ? "PASS" : (cr.warn_only ? "WARN" : "FAIL");
    std::printf("[%s] criterion %2d %-20s %s (%.2f s)\n", status, cr.id, cr.key.c_str(),
                cr.title.c_str(), cr.seconds);
    json jrows = json::array();
    for (const auto& row : cr.rows) {
      std::printf("   %s %-58s expected %-24s observed %s\n", row.ok ? "ok  " : "FAIL",
                  row.name.c_str(), row.expected.c_str(), row.observed.c_str());
      jrows.push_back({{"name", row.name},
                       {"expected", row.expected},
                       {"observed", row.observed},
                       {"ok", row.ok}});
    }
    jcriteria.push_back({{"id", cr.id},
                         {"key", cr.key},
                         {"title", cr.title},
                         {"warn_only", cr.warn_only},
                         {"pass", cr.pass},
                         {"seconds", cr.seconds},
                         {"rows", std::move(jrows)}});
    if (!cr.pass && !cr.warn_only) all_pass = false;
  }
  std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILURE");
  if (!opt.json_path.empty()) {
    json out;
    out["config"] = {{"command", "reproduce"}, {"only", opt.only}};
    out["pass"] = all_pass;
    out["criteria"] = std::move(jcriteria);
    write_text(opt.json_path, out.dump(2) + "\n");
  }
  return all_pass ? 0 : kExitAcceptance;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"word statistics: occurrence-count complexity, power scores, "
               "and eventual-periodicity classification for binary words"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* cmd_gen = app.add_subcommand("generate", "generate a word file");
  cmd_gen->add_option("--kind", gen.kind, "periodic|sparse|random|fibonacci|file");
  cmd_gen->add_option("--eta", gen.eta, "periodic repeating block (e.g. 01)");
  cmd_gen->add_option("--zeta", gen.zeta, "periodic transient prefix");
  cmd_gen->add_option("--k1", gen.k1, "sparse first zero-block length");
  cmd_gen->add_option("--ratio", gen.ratio, "sparse growth ratio (e.g. 2, 3/2, 1.5)");
  cmd_gen->add_option("--seed", gen.seed, "random seed");
  cmd_gen->add_option("--path", gen.path, "input path for --kind file");
  cmd_gen->add_option("--length", gen.length, "target length")->required();
  cmd_gen->add_option("--output", gen.output, "output word file")->required();

  AnalyzeOptions ana;
  auto* cmd_ana = app.add_subcommand("analyze", "sigma/lambda summary of a word file");
  cmd_ana->add_option("--input", ana.input, "word file")->required();
  cmd_ana->add_option("--output", ana.output, "output JSON path (default stdout)");

  ProfileOptions prof;
  auto* cmd_prof = app.add_subcommand("profile", "prefix profiles as CSV/JSON (+ optional SVG)");
  cmd_prof->add_option("--input", prof.input, "word file")->required();
  cmd_prof->add_option("--functional", prof.functional, "sigma|lambda|both (default sigma)");
  cmd_prof->add_option("--checkpoints", prof.checkpoints,
                       "dense|geometric|geometric:<ratio>|list:<n1,n2,...>");
  cmd_prof->add_option("--format", prof.format, "csv|json (default csv)");
  cmd_prof->add_option("--output", prof.output, "output path (default stdout)");
  cmd_prof->add_option("--emit", prof.emit_formats, "extra emissions: svg");

  ClassifyOptions cls;
  auto* cmd_cls = app.add_subcommand("classify", "eventual-periodicity verdict as JSON");
  cmd_cls->add_option("--input", cls.input, "word file")->required();
  cmd_cls->add_option("--output", cls.output, "output JSON path (default stdout)");
  cmd_cls->add_option("--eps-osc", cls.config.eps_osc, "tail flatness tolerance");
  double theta_override = -1;
  cmd_cls->add_option("--theta-pos", theta_override, "positive-level floor");
  cmd_cls->add_option("--k-max", cls.config.k_max, "largest admissible period");
  cmd_cls->add_option("--min-length", cls.config.min_length, "minimum input length");

  BenchOptions ben;
  auto* cmd_ben = app.add_subcommand("bench", "timing table for the engines");
  cmd_ben->add_option("--sizes", ben.sizes, "word lengths to time")->delimiter(',');
  cmd_ben->add_option("--naive-cutoff", ben.naive_cutoff, "largest n for naive paths");
  cmd_ben->add_option("--json", ben.json_path, "also write machine-readable JSON");

  ReproduceOptions rep;
  auto* cmd_rep = app.add_subcommand("reproduce", "run the acceptance experiments");
  cmd_rep->add_option("--only", rep.only, "filter criteria by key substring");
  cmd_rep->add_option("--json", rep.json_path, "also write machine-readable JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_ana->parsed()) return run_analyze(ana);
    if (cmd_prof->parsed()) return run_profile(prof);
    if (cmd_cls->parsed()) {
      // theta_pos tracks k_max unless explicitly overridden
      cls.config.theta_pos =
          theta_override > 0 ? theta_override : 1.0 / (3.0 * static_cast<double>(cls.config.k_max));
      return run_classify(cls);
    }
    if (cmd_ben->parsed()) return run_bench(ben);
    if (cmd_rep->parsed()) return run_reproduce(rep);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input parse error: %s\n", e.what());
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitUsage;
}
