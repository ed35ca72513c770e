#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qsp/bijections.hpp"
#include "qsp/blambda.hpp"
#include "qsp/gfq.hpp"
#include "qsp/json.hpp"
#include "qsp/partitions.hpp"
#include "qsp/profiles.hpp"
#include "qsp/qstirling.hpp"
#include "qsp/setpart.hpp"
#include "qsp/shifted.hpp"
#include "qsp/tableaux.hpp"
#include "qsp/verify.hpp"

namespace {

using qsp::json::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;
constexpr int kDefaultMaxSize = 30;

enum class Format { plain, json, csv };

struct Output {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::json : csv ? Format::csv : Format::plain; }
};

void add_format_flags(CLI::App* sub, Output& out, bool with_csv) {
  auto* j = sub->add_flag("--json", out.json, "JSON output");
  if (with_csv) sub->add_flag("--csv", out.csv, "CSV output")->excludes(j);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_poly(const qsp::Polynomial& p, const Output& out) {
  if (out.json)
    print_json(qsp::json::to_json(p));
  else
    std::cout << p << '\n';
}

std::string default_cache_path() {
  const char* env = std::getenv("QSP_CACHE");
  return env ? env : "";
}

qsp::BLambdaCache open_cache(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) return {};
  return qsp::BLambdaCache::load(path);
}

void check_size_limit(const qsp::IntegerPartition& lambda, bool allow_large) {
  if (lambda.size() > kDefaultMaxSize && !allow_large)
    throw std::invalid_argument("|lambda| = " + std::to_string(lambda.size()) + " exceeds " + std::to_string(kDefaultMaxSize) +
                                "; pass --allow-large to go further");
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition polynomials b_lambda(q), q-Stirling numbers and subspace profile counts over F_q"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Output out;
  std::string shape_text, profile_text, pivots_text, tableau_text, partition_text, method_text, cache_path = default_cache_path();
  int n = -1, m = -1, l = -1, d = -1, r = -1, p = -1, i_arg = -1;
  std::optional<int> m_opt, n_opt, max_n;
  bool allow_large = false, compare = false;
  std::uint64_t budget = qsp::kDefaultSubspaceBudget;
  unsigned threads = 1, jobs = 1;
  std::vector<std::string> suites;
  std::string diag_text;
  int max_size = 12;

  auto* blambda = app.add_subcommand("blambda", "b_lambda(q) for a partition");
  blambda->add_option("--shape", shape_text, "partition, e.g. 3,3,1")->required();
  blambda->add_option("--method", method_text, "tableau_sum | setpartition_sum | recursion")->default_str("recursion");
  blambda->add_option("--cache", cache_path, "cache file (default: $QSP_CACHE)");
  blambda->add_flag("--allow-large", allow_large, "permit |lambda| above 30");
  add_format_flags(blambda, out, false);

  auto* sigma_cmd = app.add_subcommand("sigma", "subspaces with a given profile");
  sigma_cmd->add_option("--n", n, "ambient dimension")->required();
  sigma_cmd->add_option("--profile", profile_text, "profile mu")->required();
  sigma_cmd->add_option("--pivots", pivots_text, "pivot set C, e.g. 1,3");
  sigma_cmd->add_option("--method", method_text, "tableau_sum | recursion (with --pivots)");
  add_format_flags(sigma_cmd, out, false);

  auto* pi_cmd = app.add_subcommand("pi", "subspaces with a given partial profile");
  pi_cmd->add_option("--n", n, "ambient dimension")->required();
  pi_cmd->add_option("--profile", profile_text, "partial profile mu")->required();
  pi_cmd->add_option("--pivots", pivots_text, "pivot set C");
  add_format_flags(pi_cmd, out, false);

  auto* anti = app.add_subcommand("anti", "l-fold anti-invariant subspaces");
  anti->add_option("--n", n)->required();
  anti->add_option("--m", m)->required();
  anti->add_option("--l", l)->required();
  add_format_flags(anti, out, false);

  auto* splitting = app.add_subcommand("splitting", "splitting subspaces of dimension m in F_q^{md}");
  splitting->add_option("--m", m)->required();
  splitting->add_option("--d", d)->required();
  add_format_flags(splitting, out, false);

  auto* rlocus = app.add_subcommand("rlocus", "m-dimensional subspaces W with r(W) = r");
  rlocus->add_option("--n", n)->required();
  rlocus->add_option("--m", m)->required();
  rlocus->add_option("--r", r)->required();
  add_format_flags(rlocus, out, false);

  auto* qstirling = app.add_subcommand("qstirling", "q-Stirling numbers S_q(n, m)");
  qstirling->add_option("--n", n)->required();
  qstirling->add_option("--m", m_opt, "single entry; omit for the whole row");
  qstirling->add_option("--method", method_text, "recurrence | blambda_sum | tableau_sum | setpartition_sum | noninterlacing_sum");
  add_format_flags(qstirling, out, false);

  auto* setparts = app.add_subcommand("setpartitions", "set partitions in a fibre, or all of a given shape");
  auto* sp_tab = setparts->add_option("--tableau", tableau_text, "tableau whose fibre to list");
  auto* sp_shape = setparts->add_option("--shape", shape_text, "block sizes");
  setparts->add_option("--n", n_opt, "ground set [n] (with --shape; default |shape|)");
  sp_tab->excludes(sp_shape);
  add_format_flags(setparts, out, true);

  auto* tableaux = app.add_subcommand("tableaux", "multilinear tableaux of a shape");
  tableaux->add_option("--shape", shape_text)->required();
  tableaux->add_option("--n", n_opt, "support inside [n] (default: standard tableaux)");
  add_format_flags(tableaux, out, true);

  auto* shifted = app.add_subcommand("shifted", "number of standard shifted tableaux");
  shifted->add_option("--shape", shape_text)->required();
  add_format_flags(shifted, out, false);

  auto* theta_cmd = app.add_subcommand("theta", "two-block partition to two-row tableau");
  theta_cmd->add_option("--partition", partition_text, "e.g. 12689|3457")->required();
  add_format_flags(theta_cmd, out, false);

  auto* theta_inv = app.add_subcommand("theta-inv", "inverse of theta");
  theta_inv->add_option("--tableau", tableau_text)->required();
  theta_inv->add_option("--i", i_arg, "number of interlacings")->required();
  add_format_flags(theta_inv, out, false);

  auto* oracle = app.add_subcommand("oracle", "exhaustive subspace census over F_p");
  oracle->add_option("--p", p)->required();
  oracle->add_option("--n", n)->required();
  oracle->add_flag("--compare", compare, "compare every tally with its closed form");
  oracle->add_option("--budget", budget, "maximum number of subspaces to enumerate");
  oracle->add_option("--diag", diag_text, "diagonal entries, e.g. 0,1,2 (default 0..n-1)");
  oracle->add_option("--threads", threads, "worker threads");
  add_format_flags(oracle, out, true);

  auto* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", suites, "suite name, repeatable (default: all)");
  verify->add_option("--max-n", max_n, "override the main size bound");
  verify->add_option("--budget", budget, "subspace budget for oracle-all");
  verify->add_option("--jobs", jobs, "suites to run in parallel");
  add_format_flags(verify, out, false);

  auto* cache = app.add_subcommand("cache", "manage the b_lambda cache file");
  cache->require_subcommand(1);
  auto* warm = cache->add_subcommand("warm", "fill the cache up to a size");
  warm->add_option("--max-size", max_size, "largest |lambda|");
  warm->add_option("--cache", cache_path, "cache file (default: $QSP_CACHE)");
  auto* dump = cache->add_subcommand("dump", "print the cache file");
  dump->add_option("--cache", cache_path, "cache file (default: $QSP_CACHE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (out.json && out.csv) throw std::invalid_argument("--json and --csv are mutually exclusive");

    if (*blambda) {
      const auto lambda = qsp::IntegerPartition::parse(shape_text);
      check_size_limit(lambda, allow_large);
      const auto method = qsp::parse_blambda_method(method_text.empty() ? "recursion" : method_text);
      qsp::BLambdaCache c = open_cache(cache_path);
      const std::size_t before = c.size();
      print_poly(qsp::b_lambda(lambda, method, c), out);
      if (!cache_path.empty() && c.size() != before) c.save(cache_path);
      return kExitOk;
    }

    if (*sigma_cmd) {
      const auto mu = qsp::IntegerPartition::parse(profile_text);
      if (sigma_cmd->count("--pivots")) {
        const auto method = qsp::parse_pivot_method(method_text.empty() ? "recursion" : method_text);
        print_poly(qsp::sigma_pivots(n, qsp::ColumnSet::parse(pivots_text), mu, method), out);
      } else {
        if (!method_text.empty()) throw std::invalid_argument("--method applies only together with --pivots");
        print_poly(qsp::sigma(n, mu), out);
      }
      return kExitOk;
    }

    if (*pi_cmd) {
      const auto mu = qsp::IntegerPartition::parse(profile_text);
      print_poly(pi_cmd->count("--pivots") ? qsp::pi_pivots(n, qsp::ColumnSet::parse(pivots_text), mu) : qsp::pi(n, mu), out);
      return kExitOk;
    }

    if (*anti) {
      print_poly(qsp::anti_invariant_count(n, m, l), out);
      return kExitOk;
    }

    if (*splitting) {
      print_poly(qsp::splitting_count(m, d), out);
      return kExitOk;
    }

    if (*rlocus) {
      print_poly(qsp::r_locus_count(n, m, r), out);
      return kExitOk;
    }

    if (*qstirling) {
      if (n < 0) throw std::invalid_argument("--n must be nonnegative");
      const auto method = qsp::parse_stirling_method(method_text.empty() ? "recurrence" : method_text);
      qsp::BLambdaCache c;
      if (m_opt) {
        print_poly(qsp::s_q(n, *m_opt, method, c), out);
        return kExitOk;
      }
      json row = json::array();
      for (int k = 0; k <= n; ++k) {
        const qsp::Polynomial v = qsp::s_q(n, k, method, c);
        if (out.json)
          row.push_back(qsp::json::to_json(v));
        else
          std::cout << "S_q(" << n << "," << k << ") = " << v << '\n';
      }
      if (out.json) print_json(row);
      return kExitOk;
    }

    if (*setparts) {
      std::vector<qsp::SetPartition> list;
      if (!tableau_text.empty()) {
        list = qsp::fibre(qsp::Tableau::parse(tableau_text));
      } else if (setparts->count("--shape")) {
        const auto lambda = qsp::IntegerPartition::parse(shape_text);
        const int ground = n_opt.value_or(lambda.size());
        if (ground != lambda.size())
          throw std::invalid_argument("block sizes sum to " + std::to_string(lambda.size()) + ", not n = " + std::to_string(ground));
        qsp::enumerate_by_shape(qsp::ColumnSet::range(ground), lambda, [&](const qsp::SetPartition& a) { list.push_back(a); });
      } else {
        throw std::invalid_argument("setpartitions needs --tableau or --shape");
      }
      switch (out.format()) {
        case Format::json: {
          json arr = json::array();
          for (const auto& a : list)
            arr.push_back({{"blocks", qsp::json::to_json(a)}, {"interlacings", qsp::interlacing_number(a)}});
          print_json(arr);
          break;
        }
        case Format::csv:
          std::cout << "partition,interlacings\n";
          for (const auto& a : list) std::cout << csv_quote(a.to_string()) << ',' << qsp::interlacing_number(a) << '\n';
          break;
        case Format::plain:
          for (const auto& a : list) std::cout << a << "  v=" << qsp::interlacing_number(a) << '\n';
          break;
      }
      return kExitOk;
    }

    if (*tableaux) {
      const auto lambda = qsp::IntegerPartition::parse(shape_text);
      const auto mode = n_opt ? qsp::SupportMode::subset_of(*n_opt) : qsp::SupportMode::exact(qsp::ColumnSet::range(lambda.size()));
      const auto list = qsp::generate_tableaux(lambda, mode);
      switch (out.format()) {
        case Format::json: {
          json arr = json::array();
          for (const auto& t : list) {
            const auto w = qsp::c_weight(t);
            json entry = qsp::json::to_json(t);
            entry["c"] = qsp::json::count(w.count);
            entry["c_q"] = qsp::json::to_json(w.weight);
            arr.push_back(entry);
          }
          print_json(arr);
          break;
        }
        case Format::csv:
          std::cout << "tableau,c,c_q\n";
          for (const auto& t : list) {
            const auto w = qsp::c_weight(t);
            std::cout << csv_quote(t.to_string(true)) << ',' << w.count << ',' << csv_quote(w.weight.to_string()) << '\n';
          }
          break;
        case Format::plain:
          for (const auto& t : list) {
            const auto w = qsp::c_weight(t);
            std::cout << t.to_string(true) << "  c=" << w.count << "  c_q=" << w.weight << '\n';
          }
          break;
      }
      return kExitOk;
    }

    if (*shifted) {
      const auto lambda = qsp::IntegerPartition::parse(shape_text);
      const qsp::BigInt count = qsp::count_shifted(lambda);
      if (out.json) {
        print_json({{"shape", lambda.parts()},
                    {"shifted", qsp::json::count(count)},
                    {"odd_c", qsp::json::count(qsp::count_odd_c(lambda))},
                    {"distinct_parts_hypothesis", qsp::distinct_parts_hypothesis(lambda)}});
      } else {
        std::cout << count << '\n';
      }
      return kExitOk;
    }

    if (*theta_cmd) {
      const auto res = qsp::theta(qsp::SetPartition::parse(partition_text));
      if (out.json)
        print_json({{"tableau", qsp::json::to_json(res.tableau)}, {"i", res.interlacings}});
      else
        std::cout << res.tableau.to_string(true) << " i=" << res.interlacings << '\n';
      return kExitOk;
    }

    if (*theta_inv) {
      const auto a = qsp::theta_inverse(qsp::Tableau::parse(tableau_text), i_arg);
      if (out.json)
        print_json({{"blocks", qsp::json::to_json(a)}});
      else
        std::cout << a << '\n';
      return kExitOk;
    }

    if (*oracle) {
      qsp::CensusOptions opts;
      opts.budget = budget;
      opts.compare = compare;
      opts.threads = threads;
      if (!diag_text.empty()) {
        std::vector<int> diag;
        std::stringstream ss(diag_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          std::size_t pos = 0;
          int v = 0;
          try {
            v = std::stoi(tok, &pos);
          } catch (const std::exception&) {
            pos = 0;
          }
          if (tok.empty() || pos != tok.size()) throw std::invalid_argument("malformed --diag entry '" + tok + "'");
          diag.push_back(v);
        }
        opts.diagonal = diag;
      }
      const qsp::CensusReport rep = qsp::census(p, n, opts);
      const auto mism = rep.mismatches();
      switch (out.format()) {
        case Format::json:
          print_json(qsp::json::to_json(rep, compare));
          break;
        case Format::csv:
          std::cout << "kind,key,count\n";
          for (const auto& [k, v] : rep.by_dimension) std::cout << "dimension," << k << ',' << v << '\n';
          for (const auto& [k, v] : rep.by_profile) std::cout << "profile," << csv_quote(k.to_string()) << ',' << v << '\n';
          for (const auto& [k, v] : rep.by_partial) std::cout << "partial," << csv_quote(k.to_string()) << ',' << v << '\n';
          for (const auto& [k, v] : rep.by_dim_r)
            std::cout << "dim_r," << csv_quote(std::to_string(k.first) + "," + std::to_string(k.second)) << ',' << v << '\n';
          break;
        case Format::plain:
          std::cout << "census of F_" << p << "^" << n << ": " << rep.total << " subspaces\n";
          for (const auto& [k, v] : rep.by_profile)
            std::cout << "  profile (" << k.to_string() << "): " << v << '\n';
          if (compare) std::cout << rep.comparisons.size() << " comparisons, " << mism.size() << " mismatches\n";
          for (const auto& c : mism)
            std::cout << "  MISMATCH " << c.category << ' ' << c.key << ": observed " << c.observed << ", formula " << c.expected
                      << '\n';
          break;
      }
      return compare && !mism.empty() ? kExitMismatch : kExitOk;
    }

    if (*verify) {
      qsp::VerifyOptions vo;
      vo.max_n = max_n;
      vo.budget = budget;
      if (suites.empty()) suites.push_back("all");
      const auto results = qsp::run_suites(suites, vo, jobs);
      bool ok = true;
      json arr = json::array();
      for (const auto& res : results) {
        ok = ok && res.ok();
        if (out.json) {
          arr.push_back(qsp::json::to_json(res));
          continue;
        }
        std::cout << res.name << ": " << res.checks << " checks, " << res.failure_count << " failures\n";
        for (const auto& msg : res.failures) std::cout << "  " << msg << '\n';
      }
      if (out.json) print_json(arr);
      return ok ? kExitOk : kExitMismatch;
    }

    if (*cache) {
      if (cache_path.empty()) throw std::invalid_argument("no cache file: pass --cache or set QSP_CACHE");
      if (*warm) {
        qsp::BLambdaCache c = open_cache(cache_path);
        qsp::warm_cache(c, max_size);
        c.save(cache_path);
        std::cout << c.size() << " entries in " << cache_path << '\n';
      } else {
        qsp::BLambdaCache::load(cache_path).write(std::cout);
      }
      return kExitOk;
    }
  } catch (const qsp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
