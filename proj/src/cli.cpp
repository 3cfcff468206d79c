// SPDX-License-Identifier: Apache-2.0
#include "polycount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycount/cache.hpp"
#include "polycount/errors.hpp"
#include "polycount/identities.hpp"
#include "polycount/recurrences.hpp"
#include "polycount/weights.hpp"

namespace polycount {

namespace {

using ojson = nlohmann::ordered_json;

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool set = false;
};

// "a" or "a..b", inclusive.
IntRange parse_range(const std::string& text) {
  IntRange r;
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      auto a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw ParameterError("malformed range '" + text + "' (expected a or a..b)");
  }
  if (r.hi < r.lo) throw ParameterError("empty range '" + text + "'");
  r.set = true;
  return r;
}

Rat parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return frac(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ParameterError("malformed rational '" + text + "'");
  }
}

struct Common {
  std::string format = "text";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
};

std::string status_word(Status s) {
  std::string w = to_string(s);
  std::transform(w.begin(), w.end(), w.begin(), ::toupper);
  return w;
}

ojson report_json(const std::string& command, const ojson& params, const Report& r, double ms) {
  ojson j;
  j["command"] = command;
  j["parameters"] = params;
  auto checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson rec;
    rec["name"] = c.name;
    ojson in = ojson::object();
    for (const auto& [k, v] : c.inputs) in[k] = v;
    rec["inputs"] = in;
    rec["expected"] = c.expected;
    rec["actual"] = c.actual;
    rec["status"] = to_string(c.status);
    if (!c.detail.empty()) rec["detail"] = c.detail;
    checks.push_back(std::move(rec));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"unchecked", r.count(Status::unchecked)},
                  {"skipped", r.skipped}};
  j["wall_time_ms"] = ms;
  return j;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_report(std::ostream& out, const Common& common, const std::string& command, const ojson& params,
                 const Report& r, double ms) {
  if (common.format == "json") {
    out << report_json(command, params, r, ms).dump(2) << "\n";
    return;
  }
  if (common.format == "csv") {
    out << "name,inputs,expected,actual,status\n";
    for (const auto& c : r.checks) {
      std::string in;
      for (const auto& [k, v] : c.inputs) in += (in.empty() ? "" : " ") + k + "=" + v;
      out << csv_field(c.name) << "," << csv_field(in) << "," << csv_field(c.expected) << "," << csv_field(c.actual)
          << "," << to_string(c.status) << "\n";
    }
    return;
  }
  out << r.title << "\n";
  for (const auto& c : r.checks) {
    out << status_word(c.status) << "  " << c.name;
    for (const auto& [k, v] : c.inputs) out << " " << k << "=" << v;
    out << "  expected=" << c.expected << " actual=" << c.actual;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::unchecked) << " unchecked, " << r.skipped << " skipped\n";
}

class Session {
 public:
  explicit Session(const Common& c) {
    if (!c.no_cache) {
      if (auto dir = resolve_cache_dir(c.cache_dir)) cache_.emplace(*dir);
    }
    source_.emplace(cache_ ? &*cache_ : nullptr);
  }
  CachedSource& source() { return *source_; }

 private:
  std::optional<CountCache> cache_;
  std::optional<CachedSource> source_;
};

void add_common(CLI::App* app, Common& c, std::vector<std::string> formats = {"text", "json", "csv"}) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  app->add_option("--cache-dir", c.cache_dir, "count cache directory");
  app->add_flag("--no-cache", c.no_cache, "do not read or write the count cache");
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- count
struct CountArgs {
  int n = 0, m = 0, k = 0;
  std::optional<int> s;
  bool all_s = false;
  std::string method = "transfer";
};

int cmd_count(const CountArgs& a, const Common& c, std::ostream& out) {
  LatticeSpec spec{a.n, a.m, a.k};
  spec.validate();
  if (a.s && *a.s < 0) throw ParameterError("--s must be nonnegative");
  std::vector<std::pair<int, Int>> rows;
  if (a.method == "brute") {
    int hi = a.all_s ? static_cast<int>(spec.capacity()) : *a.s;
    for (int s = a.all_s ? 0 : *a.s; s <= hi; ++s) rows.emplace_back(s, brute_force_count(spec, s));
  } else {
    Session session(c);
    if (a.all_s) {
      const auto& t = session.source().table(spec);
      for (std::size_t s = 0; s < t.size(); ++s) rows.emplace_back(static_cast<int>(s), t[s]);
    } else {
      rows.emplace_back(*a.s, session.source().count(spec, *a.s));
    }
  }
  if (c.format == "json") {
    ojson j;
    j["k"] = a.k;
    j["n"] = a.n;
    j["m"] = a.m;
    j["method"] = a.method;
    if (a.all_s) {
      auto arr = ojson::array();
      for (const auto& r : rows) arr.push_back(r.second.get_str());
      j["counts"] = arr;
    } else {
      j["s"] = *a.s;
      j["count"] = rows.front().second.get_str();
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "n,m,s,count\n";
    for (const auto& r : rows) out << a.n << "," << a.m << "," << r.first << "," << r.second.get_str() << "\n";
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? " " : "") << rows[i].second.get_str();
    out << "\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------- table
struct TableArgs {
  int k = 0, n_max = 0, m_max = 0;
  std::optional<std::string> out_path;
};

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out) {
  if (a.n_max < 1 || a.m_max < 1) throw ParameterError("--n-max and --m-max must be positive");
  LatticeSpec{1, 1, a.k}.validate();
  Session session(c);
  std::ostringstream body;
  ojson arr = ojson::array();
  if (c.format == "csv") body << "n,m,s,count\n";
  for (int n = 1; n <= a.n_max; ++n) {
    for (int m = 1; m <= a.m_max; ++m) {
      LatticeSpec spec{n, m, a.k};
      const auto& t = session.source().table(spec);
      if (c.format == "csv") {
        for (std::size_t s = 0; s < t.size(); ++s) body << n << "," << m << "," << s << "," << t[s].get_str() << "\n";
      } else {
        arr.push_back(ojson::parse(cache_entry_json(spec, t)));
      }
    }
  }
  if (c.format == "json") body << arr.dump(2) << "\n";
  if (!a.out_path) {
    out << body.str();
    return exit_ok;
  }
  std::ofstream f(*a.out_path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << body.str()) || !f.flush()) throw IoError("cannot write " + *a.out_path);
  return exit_ok;
}

// ---------------------------------------------------------------- verify
struct VerifyArgs {
  int k = 2;
  int s = 1;
  std::string s_range;
  int n = 0;
  std::string n_range, m_range;
  bool unsafe = false;
  std::string lambda = "2", eta = "-1";
  long anchor_n = 0;
  std::string filter = "*";
  bool mutation = false;
};

std::vector<DiagonalPoint> diagonal_points(const VerifyArgs& a) {
  if (a.n_range.empty()) throw ParameterError("--n is required");
  auto nr = parse_range(a.n_range);
  if (a.m_range.empty()) return square_points(nr.lo, nr.hi);
  auto mr = parse_range(a.m_range);
  return grid_points(nr.lo, nr.hi, mr.lo, mr.hi);
}

int finish(const Report& r, const Common& c, const std::string& command, const ojson& params, Clock::time_point t0,
           std::ostream& out) {
  emit_report(out, c, command, params, r, since(t0));
  return r.ok() && !r.checks.empty() ? exit_ok : exit_check_failed;
}

int cmd_verify(const std::string& target, const VerifyArgs& a, const Common& c, std::ostream& out) {
  auto t0 = Clock::now();
  ojson params;
  Report r;
  if (target == "strip") {
    if (a.m_range.empty()) throw ParameterError("--m is required");
    auto mr = parse_range(a.m_range);
    Session session(c);
    params = {{"k", a.k}, {"n", a.n}, {"s", a.s}, {"m", a.m_range}};
    r = verify_strip(a.k, a.n, a.s, mr.lo, mr.hi, session.source());
  } else if (target == "diagonal" || target == "corollary") {
    Session session(c);
    auto pts = diagonal_points(a);
    params = {{"k", a.k}, {"s", a.s}, {"n", a.n_range}, {"m", a.m_range.empty() ? a.n_range : a.m_range},
              {"unsafe_range", a.unsafe}};
    r = target == "diagonal" ? verify_diagonal(a.k, a.s, pts, session.source(), a.unsafe)
                             : verify_diagonal_corollary(a.k, a.s, pts, session.source(), a.unsafe);
  } else if (target == "weights") {
    RhsModel model;
    model.s = a.s;
    model.lambda = parse_rational(a.lambda);
    model.eta = parse_rational(a.eta);
    model.n = a.anchor_n ? a.anchor_n : 2L * a.s + 1;
    params = {{"s", a.s}, {"lambda", to_string(model.lambda)}, {"eta", to_string(model.eta)}, {"anchor_n", model.n}};
    r = verify_weights(model);
    r.merge(verify_rhs_column_sums(a.s));
  } else if (target == "quadrants") {
    auto sr = a.s_range.empty() ? IntRange{a.s, a.s, true} : parse_range(a.s_range);
    if (sr.lo < 1) throw ParameterError("--s must be at least 1");
    params = {{"s", a.s_range.empty() ? std::to_string(a.s) : a.s_range}};
    r.title = "quadrant lemmas";
    for (int s = sr.lo; s <= sr.hi; ++s) r.merge(verify_quadrant_lemmas(s));
  } else {
    params = {{"filter", a.filter}, {"mutation", a.mutation}};
    r = run_registry(a.filter);
    if (a.mutation) {
      for (const auto& check : registry()) {
        if (!glob_match(a.filter, check.name) || check.parts.empty()) continue;
        auto m = mutation_test(check);
        std::string detail;
        for (const auto& sv : m.survivors) detail += (detail.empty() ? "survived: " : "; ") + sv;
        r.add(CheckRecord{"mutation " + check.name,
                          {{"perturbations", std::to_string(m.perturbations)}},
                          std::to_string(m.perturbations),
                          std::to_string(m.detected),
                          m.ok() ? Status::pass : Status::fail,
                          detail});
      }
    }
    // An empty selection is a successful run.
    emit_report(out, c, "verify identities", params, r, since(t0));
    return r.ok() ? exit_ok : exit_check_failed;
  }
  return finish(r, c, "verify " + target, params, t0, out);
}

// ---------------------------------------------------------------- extend
struct ExtendArgs {
  int k = 2, s = 1, anchor_n = 0, anchor_m = 0, steps = 1;
  bool no_crosscheck = false;
  bool unsafe = false;
};

int cmd_extend(const ExtendArgs& a, const Common& c, std::ostream& out) {
  if (a.steps < 1) throw ParameterError("--steps must be positive");
  Session session(c);
  auto seed = make_seed(a.k, a.s, a.anchor_n, a.anchor_m, session.source(), a.unsafe);
  auto ext = extend_diagonal(seed, a.steps, a.unsafe);

  // Newest-first window after the last step, for the residual.
  std::vector<Int> all(seed.window.rbegin(), seed.window.rend());
  all.insert(all.end(), ext.begin(), ext.end());
  std::vector<Int> window(all.rbegin(), all.rbegin() + 2 * a.s + 1);
  Int residual = diagonal_residual(a.s, window);

  bool mismatch = false;
  EnumeratingSource direct;
  ojson points = ojson::array();
  for (int t = 0; t < a.steps; ++t) {
    int n = a.anchor_n + t + 1, m = a.anchor_m + t + 1;
    ojson p = {{"n", n}, {"m", m}, {"count", ext[t].get_str()}};
    if (!a.no_crosscheck) {
      try {
        Int d = direct.count(LatticeSpec{n, m, a.k}, a.s);
        p["direct"] = d.get_str();
        p["crosscheck"] = d == ext[t] ? "pass" : "fail";
        mismatch = mismatch || d != ext[t];
      } catch (const ResourceError&) {
        p["crosscheck"] = "unchecked";
      }
    }
    points.push_back(std::move(p));
  }
  if (residual != 0) mismatch = true;
  if (c.format == "json") {
    ojson j;
    j["command"] = "extend";
    j["parameters"] = {{"k", a.k}, {"s", a.s}, {"anchor_n", a.anchor_n}, {"anchor_m", a.anchor_m}, {"steps", a.steps}};
    j["points"] = points;
    j["residual"] = residual.get_str();
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "n,m,s,count\n";
    for (const auto& p : points)
      out << p["n"].get<int>() << "," << p["m"].get<int>() << "," << a.s << "," << p["count"].get<std::string>() << "\n";
  } else {
    for (const auto& p : points) out << p["count"].get<std::string>() << "\n";
  }
  return mismatch ? exit_check_failed : exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact k-mer configuration counts and recurrence verification", "polycount"};
  app.require_subcommand(1);
  Common common;

  CountArgs ca;
  auto* count = app.add_subcommand("count", "count configurations of s k-mers on an n x m lattice");
  count->add_option("--n", ca.n, "rows")->required();
  count->add_option("--m", ca.m, "columns")->required();
  count->add_option("--k", ca.k, "polymer length")->required();
  auto* s_opt = count->add_option("--s", ca.s, "number of polymers");
  auto* all_opt = count->add_flag("--all-s", ca.all_s, "every s from 0 to capacity");
  s_opt->excludes(all_opt);
  count->add_option("--method", ca.method, "transfer or brute")->check(CLI::IsMember({"transfer", "brute"}));
  add_common(count, common);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "write all count tables up to n-max x m-max");
  table->add_option("--k", ta.k)->required();
  table->add_option("--n-max", ta.n_max)->required();
  table->add_option("--m-max", ta.m_max)->required();
  table->add_option("--out", ta.out_path, "output file (stdout if absent)");
  common.format = "csv";
  add_common(table, common, {"json", "csv"});

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  std::string target;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* v = verify->add_subcommand(name, help);
    v->callback([&target, name] { target = name; });
    add_common(v, common);
    return v;
  };
  auto* strip = sub("strip", "strip recurrence in m at fixed width n");
  strip->add_option("--k", va.k);
  strip->add_option("--n", va.n)->required();
  strip->add_option("--s", va.s);
  strip->add_option("--m", va.m_range, "range a..b of start columns")->required();
  for (const char* name : {"diagonal", "corollary"}) {
    auto* d = sub(name, std::string(name) + " recurrence along n = m shifts");
    d->add_option("--k", va.k);
    d->add_option("--s", va.s);
    d->add_option("--n", va.n_range, "range of n (square points unless --m is given)")->required();
    d->add_option("--m", va.m_range, "range of m");
    d->add_flag("--unsafe-range", va.unsafe, "report below-bound points as unchecked instead of refusing");
  }
  auto* weights = sub("weights", "weight-grid cancellation and right-hand side");
  weights->add_option("--s", va.s)->required();
  weights->add_option("--lambda", va.lambda);
  weights->add_option("--eta", va.eta);
  weights->add_option("--anchor-n", va.anchor_n);
  auto* quadrants = sub("quadrants", "per-term quadrant lemmas");
  quadrants->add_option("--s", va.s_range, "s or range a..b")->required();
  auto* ids = sub("identities", "run the identity registry");
  ids->add_option("--filter", va.filter, "glob over check names");
  ids->add_flag("--mutation", va.mutation, "also run the certificate mutation property");

  ExtendArgs ea;
  auto* extend = app.add_subcommand("extend", "extend a diagonal with the recurrence");
  extend->add_option("--k", ea.k);
  extend->add_option("--s", ea.s)->required();
  extend->add_option("--anchor-n", ea.anchor_n)->required();
  extend->add_option("--anchor-m", ea.anchor_m)->required();
  extend->add_option("--steps", ea.steps);
  extend->add_flag("--no-crosscheck", ea.no_crosscheck);
  extend->add_flag("--unsafe-range", ea.unsafe);
  add_common(extend, common);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    common.format = "text";
    app.parse(std::move(rev));
    if (*table && common.format == "text") common.format = "csv";
    if (*count && !ca.s && !ca.all_s) throw ParameterError("one of --s or --all-s is required");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*count) return cmd_count(ca, common, out);
    if (*table) return cmd_table(ta, common, out);
    if (*verify) return cmd_verify(target, va, common, out);
    return cmd_extend(ea, common, out);
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return exit_io;
  }
}

}  // namespace polycount
