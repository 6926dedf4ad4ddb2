// slnq: verify the coset branching function identities over a grid, print
// sector censuses, render K-graphs and check the q-series limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slnq/harness.hpp"

namespace {

enum Exit { ok = 0, identity_failure = 1, usage_error = 2, io_error = 3 };

template <class T>
std::vector<T> parse_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      throw CLI::ValidationError("list", "empty entry in '" + s + "'");
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size())
      throw CLI::ValidationError("list", "not an integer: '" + item + "'");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

int emit(const slnq::Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? ok : io_error;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return io_error;
  }
  f << text;
  f.close();
  if (!f) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return io_error;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the sl(n) level-1 x level-1 / level-2 coset branching functions"};
  app.require_subcommand(1);

  std::string n_text = "2,3,4";
  std::optional<int> lmax, length, opt_i, opt_j, opt_k;
  long long order = 0;
  int jobs = 1;
  bool timing = false;
  bool no_shell = false;
  std::string out_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "comma-separated ranks (n >= 2)");
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "closed forms against path and graph enumeration");
  common(verify);
  verify->add_option("--lmax", lmax, "largest length (default 10 for n <= 3, 6 otherwise)");
  verify->add_option("--i", opt_i, "restrict to this i");
  verify->add_option("--j", opt_j, "restrict to this j");
  verify->add_option("--k", opt_k, "restrict to this k");
  verify->add_flag("--timing", timing, "include per-cell seconds in the JSON report");
  verify->add_flag("--no-shell", no_shell, "skip the per-cell certificate of the Weyl enumeration bound");

  auto* census = app.add_subcommand("census", "per-sector generating functions of K-graphs");
  common(census);
  census->add_option("--lmax", lmax, "largest length");
  census->add_option("--L", length, "a single length instead of 0..lmax");
  census->add_option("--k", opt_k, "restrict to this k");
  census->add_flag("--timing", timing, "include per-class seconds in the JSON report");

  auto* corollary = app.add_subcommand("corollary", "truncated q-series identities");
  common(corollary);
  corollary->add_option("--j", opt_j, "restrict to this j");
  corollary->add_option("--k", opt_k, "restrict to this k");
  corollary->add_option("--order", order, "compare coefficients up to q^order (default 8 for n=2, 6 otherwise)")
      ->check(CLI::PositiveNumber);

  std::string iota_text, parent_text;
  bool dump_all = false;
  auto* dump = app.add_subcommand("dump", "render K-graphs as text");
  dump->add_option("--n", n_text, "rank")->required();
  dump->add_option("--L", length, "path length")->required();
  dump->add_option("--i", opt_i, "class index i (default 0)");
  dump->add_option("--j", opt_j, "class index j (default 0)");
  dump->add_option("--k", opt_k, "boundary index k (default 0)");
  dump->add_option("--out", out_path, "write here instead of stdout");
  auto* sel_iota = dump->add_option("--iota", iota_text, "the graph of this integer sequence");
  auto* sel_parent = dump->add_option("--parent", parent_text, "the parent with this label m_1,...,m_{n-1}");
  auto* sel_all = dump->add_flag("--all", dump_all, "every graph of the class");
  sel_iota->excludes(sel_parent)->excludes(sel_all);
  sel_parent->excludes(sel_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : usage_error;
  }

  try {
    slnq::RunConfig cfg;
    cfg.n_list = parse_list<int>(n_text);
    cfg.l_max = lmax;
    cfg.i = opt_i;
    cfg.j = opt_j;
    cfg.k = opt_k;
    cfg.order = order;
    cfg.jobs = jobs;
    cfg.timing = timing;
    cfg.shell = !no_shell;

    if (verify->parsed()) {
      auto report = slnq::run_verify(cfg);
      std::cerr << slnq::verify_table(report);
      int rc = emit(slnq::to_json(report, cfg.timing), out_path);
      return rc != ok ? rc : (report.failures() ? identity_failure : ok);
    }
    if (census->parsed()) {
      auto report = slnq::run_census(cfg, length);
      std::cerr << slnq::census_table(report);
      int rc = emit(slnq::to_json(report, cfg.timing), out_path);
      return rc != ok ? rc : (report.failures() ? identity_failure : ok);
    }
    if (corollary->parsed()) {
      auto report = slnq::run_corollary(cfg);
      std::cerr << slnq::corollary_table(report);
      int rc = emit(slnq::to_json(report), out_path);
      return rc != ok ? rc : (report.failures() ? identity_failure : ok);
    }
    if (dump->parsed()) {
      if (cfg.n_list.size() != 1)
        throw slnq::ContractViolation("dump takes a single rank");
      slnq::DumpRequest req;
      req.n = cfg.n_list.front();
      req.L = *length;
      req.i = opt_i.value_or(0);
      req.j = opt_j.value_or(0);
      req.k = opt_k.value_or(0);
      if (!iota_text.empty())
        req.iota = parse_list<int>(iota_text);
      else if (!parent_text.empty())
        req.parent = parse_list<long long>(parent_text);
      else
        req.all = true;
      std::string text = slnq::run_dump(req);
      if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return std::cout ? ok : io_error;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!(f << text)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return io_error;
      }
      return ok;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const slnq::ContractViolation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return identity_failure;
  }
  return usage_error;
}
