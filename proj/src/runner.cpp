#include "circforest/runner.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circforest/arith.hpp"
#include "circforest/chebyshev.hpp"
#include "circforest/errors.hpp"
#include "circforest/forest.hpp"
#include "circforest/laurent_poly.hpp"
#include "circforest/mahler.hpp"
#include "circforest/spec.hpp"

namespace circforest {
namespace {

using nlohmann::ordered_json;

CountMethod parse_method(const std::string& m) {
  if (m == "det" || m == "determinant") return CountMethod::determinant;
  if (m == "resultant") return CountMethod::resultant;
  if (m == "chebyshev") return CountMethod::chebyshev;
  throw InputError("InvalidInput", "unknown method: " + m);
}

// Smallest order at which the family is a valid simple graph; used when a
// command that does not depend on n (mahler, asymptotics) omits --n.
unsigned long default_order(const std::vector<unsigned long>& steps, bool half) {
  for (unsigned long m = 1; m <= 100000; ++m) {
    try {
      CirculantSpec::validate(steps, half, m);
      return m;
    } catch (const InputError&) {
    }
  }
  throw InputError("InvalidStepSet", "no valid order for this step set");
}

ForestCount count_one(const CirculantSpec& spec, CountMethod m,
                      const PrecisionBudget& budget) {
  switch (m) {
    case CountMethod::determinant: return count_by_determinant(spec);
    case CountMethod::resultant: return count_by_resultant(spec);
    case CountMethod::chebyshev: return count_by_chebyshev(spec, budget);
  }
  std::abort();  // unreachable
}

ordered_json count_record(const CirculantSpec& spec, const RunRequest& req) {
  const PrecisionBudget budget(req.precision_bits);
  ordered_json rec;
  rec["n"] = spec.n();
  if (req.method == "all") {
    const ForestCount det = count_by_determinant(spec);
    const ForestCount res = count_by_resultant(spec);
    const ForestCount che = count_by_chebyshev(spec, budget);
    if (det.value != res.value || det.value != che.value)
      throw InternalError("InternalInconsistency",
                          "counting methods disagree for " + spec.name());
    rec["value"] = det.value.get_str();
    rec["method"] = "all";
    rec["determinant"] = det.value.get_str();
    rec["resultant"] = res.value.get_str();
    rec["chebyshev"] = che.value.get_str();
    rec["residual"] = che.residual.value();
  } else {
    const ForestCount fc = count_one(spec, parse_method(req.method), budget);
    rec["value"] = fc.value.get_str();
    rec["method"] = method_name(fc.method);
    if (fc.residual) rec["residual"] = *fc.residual;
  }
  return rec;
}

void do_count(const RunRequest& req, RunResult& res) {
  const CirculantSpec spec =
      CirculantSpec::validate(req.steps, req.half_step, req.n);
  res.records.push_back(count_record(spec, req));
}

void do_count_range(const RunRequest& req, RunResult& res) {
  if (req.n_from > req.n_to)
    throw InputError("InvalidInput", "--n-from must not exceed --n-to");
  for (unsigned long m = req.n_from; m <= req.n_to; ++m) {
    std::optional<CirculantSpec> spec;
    try {
      spec = CirculantSpec::validate(req.steps, req.half_step, m);
    } catch (const InputError&) {
      continue;  // the family has no member at this order
    }
    res.records.push_back(count_record(*spec, req));
  }
}

void do_by_size(const RunRequest& req, RunResult& res) {
  const CirculantSpec spec =
      CirculantSpec::validate(req.steps, req.half_step, req.n);
  const ForestSizeVector v = counts_by_size(spec);
  for (std::size_t t = 0; t < v.counts.size(); ++t) {
    ordered_json rec;
    rec["n"] = spec.n();
    rec["size"] = t + 1;
    rec["count"] = v.counts[t].get_str();
    res.records.push_back(std::move(rec));
  }
}

void do_structure(const RunRequest& req, RunResult& res) {
  const CirculantSpec spec =
      CirculantSpec::validate(req.steps, req.half_step, req.n);
  const mpz_class f = count_by_resultant(spec).value;
  const SquareStructure s = verify_square_structure(spec, f);
  ordered_json rec;
  rec["n"] = spec.n();
  rec["f"] = f.get_str();
  rec["p"] = s.odd_steps;
  rec["multiplier"] = s.multiplier.get_str();
  rec["a"] = s.root.get_str();
  rec["holds"] = s.holds;
  res.records.push_back(std::move(rec));
}

void do_mahler(const RunRequest& req, RunResult& res) {
  const unsigned long n =
      req.n != 0 ? req.n : default_order(req.steps, req.half_step);
  res.request.n = n;  // echo the effective order
  const CirculantSpec spec =
      CirculantSpec::validate(req.steps, req.half_step, n);
  const auto [rp, qd] =
      mahler_estimates(spec, PrecisionBudget(req.precision_bits), req.quad_tol);
  for (const MahlerEstimate* e : {&rp, &qd}) {
    ordered_json rec;
    rec["method"] = mahler_method_name(e->method);
    rec["value"] = e->value.str(40);
    rec["errorBound"] = e->error_bound.str(3);
    res.records.push_back(std::move(rec));
  }
}

void do_asymptotics(const RunRequest& req, RunResult& res) {
  if (req.n_to == 0)
    throw InputError("InvalidInput", "asymptotics needs --n-to");
  const unsigned long n =
      req.n != 0 ? req.n : default_order(req.steps, req.half_step);
  res.request.n = n;
  const CirculantSpec spec =
      CirculantSpec::validate(req.steps, req.half_step, n);
  const ConvergenceReport rep =
      convergence_report(spec, req.n_to, PrecisionBudget(req.precision_bits));
  for (const ConvergenceRow& row : rep.rows) {
    ordered_json rec;
    rec["n"] = row.n;
    rec["f"] = row.f.get_str();
    rec["ratio"] = row.ratio.str(30);
    rec["nthRoot"] = row.nth_root.str(30);
    res.records.push_back(std::move(rec));
  }
  ordered_json limit;
  limit["method"] = mahler_method_name(rep.limit_constant.method);
  limit["value"] = rep.limit_constant.value.str(40);
  limit["errorBound"] = rep.limit_constant.error_bound.str(3);
  res.extra["limit"] = std::move(limit);
  res.extra["finalRatioWithinTol"] = rep.final_ratio_within_tol;
}

// ---- selftest ----------------------------------------------------------

std::vector<std::vector<unsigned long>> step_subsets(unsigned long max_step) {
  std::vector<std::vector<unsigned long>> out;
  for (unsigned long mask = 1; mask < (1UL << max_step); ++mask) {
    std::vector<unsigned long> steps;
    for (unsigned long s = 1; s <= max_step; ++s)
      if (mask & (1UL << (s - 1))) steps.push_back(s);
    out.push_back(std::move(steps));
  }
  return out;
}

struct Tally {
  unsigned long passed = 0;
  std::vector<std::string> failures;

  void note(bool ok, const std::string& name) {
    if (ok) {
      ++passed;
    } else if (failures.size() < 8) {
      failures.push_back(name);
    } else if (failures.size() == 8) {
      failures.push_back("...");
    }
  }

  ordered_json record(const std::string& check, const std::string& unit) const {
    ordered_json rec;
    rec["check"] = check;
    rec["pass"] = failures.empty();
    std::string detail = std::to_string(passed) + " " + unit + " passed";
    if (!failures.empty()) {
      detail = std::to_string(failures.size()) + " failed:";
      for (const std::string& f : failures) detail += " " + f;
    }
    rec["detail"] = detail;
    return rec;
  }
};

void do_selftest(const RunRequest& req, RunResult& res) {
  const PrecisionBudget budget(req.precision_bits);
  Tally agreement, structure, cycle, mahler;
  std::vector<CirculantSpec> families;

  // Even-valency grid: steps from subsets of {1..5}, orders 3..64;
  // half-step grid: subsets of {1..4}, orders 2..40.
  for (int half = 0; half <= 1; ++half) {
    const unsigned long max_step = half ? 4 : 5;
    const unsigned long n_hi = half ? 40 : 64;
    for (const auto& steps : step_subsets(max_step)) {
      bool family_seen = false;
      for (unsigned long m = half ? 2 : 3; m <= n_hi; ++m) {
        std::optional<CirculantSpec> spec;
        try {
          spec = CirculantSpec::validate(steps, half != 0, m);
        } catch (const InputError&) {
          continue;
        }
        if (!family_seen) {
          families.push_back(*spec);
          family_seen = true;
        }
        const mpz_class det = count_by_determinant(*spec).value;
        const mpz_class resv = count_by_resultant(*spec).value;
        const mpz_class che = count_by_chebyshev(*spec, budget).value;
        agreement.note(det == resv && det == che, spec->name());
        const SquareStructure s = verify_square_structure(*spec, det);
        structure.note(s.holds && s.multiplier == predicted_multiplier(*spec),
                       spec->name());
      }
    }
  }

  // Cycle identity: f(C_n(1)) = 5 F_n^2 for even n, L_n^2 for odd n.  The
  // order-2 cycle is not a simple graph, so that single value comes from
  // the closed form 2 T_2(3/2) - 2 instead of the engine.
  for (unsigned long m = 2; m <= 40; ++m) {
    mpz_class f;
    if (m == 2) {
      const mpq_class v = 2 * chebyshev_T(2, mpq_class(3, 2)) - 2;
      f = v.get_num();  // 5, exactly; denominator is 1
    } else {
      f = count_by_resultant(CirculantSpec::validate({1}, false, m)).value;
    }
    const auto [fib, luc] = fibonacci_lucas(m);
    const mpz_class want = m % 2 == 0 ? mpz_class(5 * fib * fib) : mpz_class(luc * luc);
    cycle.note(f == want, "C_" + std::to_string(m) + "(1)");
  }

  // Mahler cross-check once per family: mahler_estimates throws when the
  // two methods disagree beyond their combined bounds.
  for (const CirculantSpec& spec : families) {
    bool ok = true;
    try {
      mahler_estimates(spec, budget, req.quad_tol);
    } catch (const Error&) {
      ok = false;
    }
    mahler.note(ok, spec.name());
  }

  res.records.push_back(agreement.record("methodAgreement", "grid counts"));
  res.records.push_back(structure.record("squareStructure", "grid counts"));
  res.records.push_back(cycle.record("cycleIdentity", "orders"));
  res.records.push_back(mahler.record("mahlerCrossCheck", "families"));
  for (const auto& rec : res.records) {
    if (!rec.at("pass").get<bool>()) {
      res.status = "error";
      res.error_kind = "SelftestFailed";
      res.error_detail = "one or more selftest checks failed";
      res.exit_code = 4;
      break;
    }
  }
}

// ---- rendering ---------------------------------------------------------

ordered_json request_json(const RunRequest& q) {
  ordered_json j;
  j["command"] = q.command;
  j["steps"] = q.steps;
  j["halfStep"] = q.half_step;
  if (q.command == "count-range") {
    j["nFrom"] = q.n_from;
    j["nTo"] = q.n_to;
  } else if (q.command == "asymptotics") {
    j["n"] = q.n;
    j["nMax"] = q.n_to;
  } else if (q.command != "selftest") {
    j["n"] = q.n;
  }
  if (q.command == "count" || q.command == "count-range") j["method"] = q.method;
  j["precisionBits"] = q.precision_bits;
  if (q.command == "mahler" || q.command == "selftest") j["quadTol"] = q.quad_tol;
  j["format"] = q.format;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_cell(const ordered_json& rec, const char* key) {
  if (!rec.contains(key)) return "";
  const auto& v = rec.at(key);
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return v.dump();  // numbers and booleans carry no commas
}

std::string emit_csv(const RunResult& r) {
  static const std::vector<std::pair<std::string, std::vector<const char*>>>
      schemas = {
          {"count", {"n", "value", "method", "residual"}},
          {"count-range", {"n", "value", "method", "residual"}},
          {"by-size", {"n", "size", "count"}},
          {"structure", {"n", "f", "p", "multiplier", "a", "holds"}},
          {"mahler", {"method", "value", "errorBound"}},
          {"asymptotics", {"n", "f", "ratio", "nthRoot"}},
          {"selftest", {"check", "pass", "detail"}},
      };
  const std::vector<const char*>* columns = nullptr;
  for (const auto& [cmd, cols] : schemas)
    if (cmd == r.request.command) columns = &cols;
  if (columns == nullptr || r.status != "ok") return "";
  std::string out;
  for (std::size_t i = 0; i < columns->size(); ++i) {
    if (i) out += ",";
    out += (*columns)[i];
  }
  out += "\n";
  for (const auto& rec : r.records) {
    for (std::size_t i = 0; i < columns->size(); ++i) {
      if (i) out += ",";
      out += csv_cell(rec, (*columns)[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

RunResult run(const RunRequest& req) {
  RunResult res;
  res.request = req;
  try {
    if (req.command == "count") {
      do_count(req, res);
    } else if (req.command == "count-range") {
      do_count_range(req, res);
    } else if (req.command == "by-size") {
      do_by_size(req, res);
    } else if (req.command == "structure") {
      do_structure(req, res);
    } else if (req.command == "mahler") {
      do_mahler(req, res);
    } else if (req.command == "asymptotics") {
      do_asymptotics(req, res);
    } else if (req.command == "selftest") {
      do_selftest(req, res);
    } else {
      throw InputError("InvalidInput", "unknown command: " + req.command);
    }
  } catch (const InputError& e) {
    res.status = "error";
    res.error_kind = e.kind();
    res.error_detail = e.what();
    res.exit_code = 2;
  } catch (const NumericError& e) {
    res.status = "error";
    res.error_kind = e.kind();
    res.error_detail = e.what();
    res.exit_code = 3;
  } catch (const InternalError& e) {
    res.status = "error";
    res.error_kind = e.kind();
    res.error_detail = e.what();
    res.exit_code = 4;
  } catch (const std::exception& e) {
    res.status = "error";
    res.error_kind = "InternalInconsistency";
    res.error_detail = e.what();
    res.exit_code = 4;
  }
  return res;
}

std::string emit(const RunResult& result) {
  if (result.request.format == "csv") return emit_csv(result);
  ordered_json j;
  j["request"] = request_json(result.request);
  j["records"] = result.records;
  for (const auto& [key, value] : result.extra.items()) j[key] = value;
  j["status"] = result.status;
  if (result.status != "ok") {
    j["errorKind"] = result.error_kind;
    j["errorDetail"] = result.error_detail;
  }
  return j.dump(2) + "\n";
}

}  // namespace circforest
