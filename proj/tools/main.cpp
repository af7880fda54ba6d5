// bsl: exact computations with polynomial eigenfunctions of finite-order
// differential operators, banded recurrences, Geronimus transformations,
// and the Hermite obstruction sums.
//
// Exit codes: 0 success, 1 error (machine-readable code on stderr),
// 2 a verification subcommand found a violated identity.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsl/bispectral.hpp"
#include "bsl/darboux.hpp"
#include "bsl/diffop.hpp"
#include "bsl/eigenpoly.hpp"
#include "bsl/error.hpp"
#include "bsl/hermite.hpp"
#include "bsl/io.hpp"
#include "bsl/recurrence.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

enum class Format { Json, Csv, Pretty };

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    if (r.lo > r.hi) bsl::fail(bsl::ErrorCode::ParseError, "empty range \"" + text + "\"");
    return r;
  } catch (const std::invalid_argument&) {
    bsl::fail(bsl::ErrorCode::ParseError, "malformed range \"" + text + "\"");
  } catch (const std::out_of_range&) {
    bsl::fail(bsl::ErrorCode::ParseError, "range value out of range in \"" + text + "\"");
  }
}

bsl::Rational parse_rational_flag(const std::string& text) { return bsl::Rational::parse(text); }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void note_normalization(const bsl::DiffOperator& op) {
  if (op.constant_shift()) {
    std::cerr << "note: subtracted constant " << op.constant_shift()->str()
              << " from a_0 during normalization\n";
  }
}

// Deterministic grid runner: cells may be computed out of order but are
// always returned in submission order.
template <typename Cell>
std::vector<Cell> run_grid(int workers, const std::vector<std::function<Cell()>>& tasks) {
  std::vector<Cell> results(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<int>(workers, static_cast<int>(tasks.size()));
  pool.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

int default_cap() {
  if (const char* env = std::getenv("BSL_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      bsl::fail(bsl::ErrorCode::ParseError, "BSL_CAP is not an integer");
    }
  }
  return bsl::kDefaultCompositionCap;
}

// ---------------------------------------------------------------- op group

int cmd_op_spectrum(const std::string& path, int n, Format format) {
  const auto op = bsl::load_operator_file(path);
  note_normalization(op);
  const auto sp = bsl::spectrum(op, n);
  if (format == Format::Csv) {
    std::cout << "n,lambda\n";
    for (int i = 0; i <= n; ++i) std::cout << i << "," << sp.lambda[static_cast<size_t>(i)] << "\n";
    std::cout << "# distinct," << (sp.distinct ? "true" : "false") << "\n";
  } else if (format == Format::Pretty) {
    for (int i = 0; i <= n; ++i) {
      std::cout << "lambda_" << i << " = " << sp.lambda[static_cast<size_t>(i)] << "\n";
    }
    std::cout << "distinct: " << (sp.distinct ? "true" : "false") << "\n";
  } else {
    json lambdas = json::array();
    for (const auto& v : sp.lambda) lambdas.push_back(v.str());
    emit({{"lambda", lambdas}, {"distinct", sp.distinct}});
  }
  return kExitOk;
}

int cmd_op_delta(const std::string& path, int n, Format format) {
  const auto op = bsl::load_operator_file(path);
  note_normalization(op);
  const bsl::DeltaTable dt(op, n);
  if (format == Format::Csv) {
    std::cout << "n,k,delta\n";
    for (int r = 0; r <= n; ++r) {
      for (int k = 0; k <= r; ++k) std::cout << r << "," << k << "," << dt(r, k) << "\n";
    }
  } else if (format == Format::Pretty) {
    for (int r = 0; r <= n; ++r) {
      std::cout << "delta_" << r << ":";
      for (int k = 0; k <= r; ++k) std::cout << " " << dt(r, k);
      std::cout << "\n";
    }
  } else {
    json rows = json::array();
    for (int r = 0; r <= n; ++r) {
      json row = json::array();
      for (int k = 0; k <= r; ++k) row.push_back(dt(r, k).str());
      rows.push_back(std::move(row));
    }
    emit({{"delta", rows}});
  }
  return kExitOk;
}

int cmd_op_eigenpoly(const std::string& path, int n, const std::string& method, int cap,
                     Format format) {
  const auto op = bsl::load_operator_file(path);
  note_normalization(op);
  std::optional<bsl::Poly> backsub, explicit_poly;
  if (method == "backsub" || method == "both") backsub = bsl::eigenpoly_backsub(op, n);
  if (method == "explicit" || method == "both") explicit_poly = bsl::eigenpoly_explicit(op, n, cap);

  const bool agree = !backsub || !explicit_poly || *backsub == *explicit_poly;
  const bsl::Poly& poly = backsub ? *backsub : *explicit_poly;

  if (format == Format::Pretty) {
    std::cout << "P_" << n << " = " << poly.str() << "\n";
    if (backsub && explicit_poly) {
      std::cout << "methods agree: " << (agree ? "true" : "false") << "\n";
    }
  } else {
    json doc{{"n", n}};
    if (backsub) doc["backsub"] = bsl::poly_to_json(*backsub);
    if (explicit_poly) doc["explicit"] = bsl::poly_to_json(*explicit_poly);
    if (backsub && explicit_poly) doc["agree"] = agree;
    doc["pretty"] = poly.str();
    emit(doc);
  }
  return agree ? kExitOk : kExitViolation;
}

int cmd_op_verify(const std::string& path, int n, Format format) {
  const auto op = bsl::load_operator_file(path);
  note_normalization(op);
  const auto sp = bsl::spectrum(op, n);
  int first_bad = -1;
  for (int i = 0; i <= n; ++i) {
    const bsl::Poly p = bsl::eigenpoly_backsub(op, i);
    if (!bsl::verify_eigen(op, p, sp.lambda[static_cast<size_t>(i)])) {
      first_bad = i;
      break;
    }
  }
  if (format == Format::Pretty) {
    if (first_bad < 0) {
      std::cout << "eigen-relation verified for n = 0.." << n << "\n";
    } else {
      std::cout << "eigen-relation FAILED at n = " << first_bad << "\n";
    }
  } else {
    json doc{{"checked", n + 1}, {"ok", first_bad < 0}};
    if (first_bad >= 0) doc["first_failure"] = first_bad;
    emit(doc);
  }
  return first_bad < 0 ? kExitOk : kExitViolation;
}

// --------------------------------------------------------------- rec group

int cmd_rec_gen(const std::string& path, int n, Format format) {
  const auto j = bsl::banded_from_file(path);
  const auto family = bsl::polys_from_recurrence(j, n);
  if (format == Format::Pretty) {
    for (int i = 0; i <= n; ++i) {
      std::cout << "P_" << i << " = " << family[static_cast<size_t>(i)].str() << "\n";
    }
  } else {
    emit(bsl::polys_to_json(family));
  }
  return kExitOk;
}

json fit_to_json(int p, const bsl::FitReport& report, bool include_matrix) {
  json doc{{"p", p}, {"ok", report.ok}};
  if (report.ok) {
    if (include_matrix) doc["matrix"] = bsl::banded_to_json(report.matrix);
  } else {
    doc["fail_n"] = report.fail_n;
    doc["fail_k"] = report.fail_k;
    doc["residual"] = report.residual.str();
  }
  return doc;
}

int cmd_rec_fit(const std::string& path, int p, int p_max, Format format) {
  const auto polys = bsl::polys_from_file(path);
  if (p_max > 0) {
    bool any_ok = false;
    json verdicts = json::array();
    if (format == Format::Csv) std::cout << "p,ok,fail_n,fail_k\n";
    for (int q = 1; q <= p_max; ++q) {
      const auto report = bsl::fit_recurrence(polys, q);
      any_ok = any_ok || report.ok;
      if (format == Format::Csv) {
        std::cout << q << "," << (report.ok ? "true" : "false") << ","
                  << (report.ok ? "" : std::to_string(report.fail_n)) << ","
                  << (report.ok ? "" : std::to_string(report.fail_k)) << "\n";
      } else if (format == Format::Pretty) {
        std::cout << "p = " << q << ": "
                  << (report.ok ? "recurrence found"
                                : "fails at n = " + std::to_string(report.fail_n) +
                                      ", basis index " + std::to_string(report.fail_k))
                  << "\n";
      } else {
        verdicts.push_back(fit_to_json(q, report, false));
      }
    }
    if (format == Format::Json) emit(verdicts);
    return any_ok ? kExitOk : kExitViolation;
  }

  const auto report = bsl::fit_recurrence(polys, p);
  if (format == Format::Pretty) {
    if (report.ok) {
      std::cout << "recurrence found for p = " << p << "\n";
    } else {
      std::cout << "no (p+2)-term recurrence for p = " << p << ": residual at n = "
                << report.fail_n << ", basis index " << report.fail_k << "\n";
    }
  } else {
    emit(fit_to_json(p, report, true));
  }
  return report.ok ? kExitOk : kExitViolation;
}

// ----------------------------------------------------------- darboux group

int cmd_darboux_factorize(const std::string& path, const std::string& c_text,
                          const std::string& gamma1_text, int n, bool check_dets, Format format) {
  const auto j = bsl::banded_from_file(path);
  const int rows = n > 0 ? n : j.n_max();
  const auto f = bsl::ul_factorize(j, parse_rational_flag(c_text), parse_rational_flag(gamma1_text),
                                   rows, check_dets);
  if (format == Format::Pretty) {
    std::cout << "u:";
    for (const auto& v : f.upper.diag) std::cout << " " << v;
    std::cout << "\nl:";
    for (const auto& v : f.lower.off) std::cout << " " << v;
    std::cout << "\ntrusted rows: " << f.trusted_rows << "\n";
  } else {
    emit({{"c", parse_rational_flag(c_text).str()},
          {"upper", bsl::bidiagonal_to_json(f.upper)},
          {"lower", bsl::bidiagonal_to_json(f.lower)},
          {"trusted_rows", f.trusted_rows}});
  }
  return kExitOk;
}

int cmd_darboux_transform(const std::vector<std::string>& factor_paths, const std::string& c_text,
                          int s, int rows) {
  std::vector<bsl::BidiagonalMatrix> factors;
  factors.reserve(factor_paths.size());
  for (const auto& path : factor_paths) factors.push_back(bsl::bidiagonal_from_file(path));
  const auto out = bsl::geronimus_transform(factors, parse_rational_flag(c_text), s, rows);
  emit(bsl::banded_to_json(out));
  return kExitOk;
}

bsl::GammaSequence gammas_from_flags(const std::string& gammas_path,
                                     const std::string& hermite_gamma1,
                                     const std::string& gamma2, int needed) {
  if (!gammas_path.empty()) return bsl::gammas_from_file(gammas_path);
  if (hermite_gamma1.empty()) {
    bsl::fail(bsl::ErrorCode::ParseError, "provide --gammas FILE or --hermite-gamma1 G");
  }
  const bsl::Rational g1 = parse_rational_flag(hermite_gamma1);
  if (gamma2.empty()) return bsl::gamma_sequence_constrained(g1, needed);
  return bsl::gamma_sequence_general(g1, parse_rational_flag(gamma2), needed);
}

int cmd_darboux_conjugate(const std::string& path, const std::string& gammas_path,
                          const std::string& hermite_gamma1, const std::string& gamma2, int n,
                          Format format) {
  const auto j = bsl::banded_from_file(path);
  const auto gammas = gammas_from_flags(gammas_path, hermite_gamma1, gamma2, n + 1);
  const auto d = bsl::conjugate_by_transform(j, gammas, n);
  if (format == Format::Pretty) {
    for (int r = 0; r <= n; ++r) {
      for (int c = 0; c <= n; ++c) std::cout << d(r, c) << (c == n ? "\n" : " ");
    }
  } else {
    json rows = json::array();
    for (int r = 0; r <= n; ++r) {
      json row = json::array();
      for (int c = 0; c <= n; ++c) row.push_back(d(r, c).str());
      rows.push_back(std::move(row));
    }
    emit({{"n_max", n}, {"matrix", rows}});
  }
  return kExitOk;
}

// -------------------------------------------------------------- test group

int cmd_test_necessary(const std::string& path, const std::string& gammas_path,
                       const std::string& hermite_gamma1, const std::string& gamma2,
                       const std::string& n_range_text, const std::string& k_range_text,
                       int workers, Format format) {
  const auto op = bsl::load_operator_file(path);
  note_normalization(op);
  const Range n_range = parse_range(n_range_text);
  const Range k_range = parse_range(k_range_text);
  if (n_range.lo < 1 || k_range.lo < 1) {
    bsl::fail(bsl::ErrorCode::IndexError, "necessary-condition grid needs n, k >= 1");
  }
  const auto triangle = bsl::eigenpoly_family(op, n_range.hi);
  const auto gammas = gammas_from_flags(gammas_path, hermite_gamma1, gamma2, n_range.hi);

  struct Cell {
    int n = 0, k = 0;
    bsl::Rational value;
  };
  std::vector<std::function<Cell()>> tasks;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int k = k_range.lo; k <= std::min(k_range.hi, n); ++k) {
      tasks.emplace_back(
          [&, n, k] { return Cell{n, k, bsl::necessary_condition(op, triangle, gammas, n, k)}; });
    }
  }

  bool any_nonzero = false;
  json out = json::array();
  if (format == Format::Csv) std::cout << "n,k,value,nonzero\n";
  const auto emit_cell = [&](const Cell& cell) {
    const bool nonzero = !cell.value.is_zero();
    any_nonzero = any_nonzero || nonzero;
    if (format == Format::Csv) {
      std::cout << cell.n << "," << cell.k << "," << cell.value << ","
                << (nonzero ? "true" : "false") << "\n"
                << std::flush;
    } else if (format == Format::Pretty) {
      std::cout << "(n, k) = (" << cell.n << ", " << cell.k << "): " << cell.value
                << (nonzero ? "  [nonzero]" : "") << "\n";
    } else {
      out.push_back(
          {{"n", cell.n}, {"k", cell.k}, {"value", cell.value.str()}, {"nonzero", nonzero}});
    }
  };
  if (workers <= 1) {
    // stream rows as they are computed so long sweeps stay inspectable
    for (const auto& task : tasks) emit_cell(task());
  } else {
    for (const auto& cell : run_grid(workers, tasks)) emit_cell(cell);
  }
  if (format == Format::Json) emit(out);
  return any_nonzero ? kExitViolation : kExitOk;
}

// ----------------------------------------------------------- hermite group

int cmd_hermite_sigma(const std::string& n_text, const std::string& k_text,
                      const std::string& gamma1_text, const std::string& mode, int workers,
                      Format format) {
  const Range n_range = parse_range(n_text);
  const Range k_range = parse_range(k_text);
  const bsl::Rational gamma1 = parse_rational_flag(gamma1_text);
  const bool want_bruteforce = mode == "all" || mode == "bruteforce";
  const bool want_sum = mode == "all" || mode == "sum";
  const bool want_closed = mode == "all" || mode == "closed";

  struct Cell {
    int n = 0, k = 0;
    std::optional<bsl::Rational> bruteforce, sum, closed;
    bool ok = true;
  };
  std::vector<std::function<Cell()>> tasks;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int k = std::max(1, k_range.lo); k <= std::min(k_range.hi, n); ++k) {
      tasks.emplace_back([=] {
        Cell cell{n, k, {}, {}, {}, true};
        if (want_bruteforce) {
          cell.bruteforce = bsl::sigma_h(n, k, gamma1, bsl::SigmaMode::Bruteforce);
        }
        if (want_sum) cell.sum = bsl::sigma_h(n, k, gamma1, bsl::SigmaMode::Sum);
        if (want_closed && (mode == "closed" || (n % 2 == 0 && k % 2 == 1))) {
          // in "all" mode the closed form is skipped outside its parity
          // domain; asking for it explicitly surfaces the ParityError
          cell.closed = bsl::sigma_h(n, k, gamma1, bsl::SigmaMode::Closed);
        }
        if (cell.bruteforce && cell.sum && !(*cell.bruteforce == *cell.sum)) cell.ok = false;
        if (cell.sum && cell.closed && !(abs(*cell.closed) == abs(*cell.sum))) cell.ok = false;
        return cell;
      });
    }
  }
  bool all_ok = true;
  json out = json::array();
  if (format == Format::Csv) std::cout << "n,k,sigma_bruteforce,sigma_sum,sigma_closed,nonzero\n";
  const auto opt_str = [](const std::optional<bsl::Rational>& v) {
    return v ? v->str() : std::string{};
  };
  const auto emit_cell = [&](const Cell& cell) {
    all_ok = all_ok && cell.ok;
    const std::optional<bsl::Rational>& reference = cell.sum ? cell.sum : cell.bruteforce;
    const bool nonzero = reference && !reference->is_zero();
    if (format == Format::Csv) {
      std::cout << cell.n << "," << cell.k << "," << opt_str(cell.bruteforce) << ","
                << opt_str(cell.sum) << "," << opt_str(cell.closed) << ","
                << (nonzero ? "true" : "false") << "\n"
                << std::flush;
    } else if (format == Format::Pretty) {
      std::cout << "Sigma_H(" << cell.n << ", " << cell.k << "):";
      if (cell.bruteforce) std::cout << " bruteforce = " << *cell.bruteforce;
      if (cell.sum) std::cout << " sum = " << *cell.sum;
      if (cell.closed) std::cout << " closed = " << *cell.closed;
      std::cout << "\n";
    } else {
      json row{{"n", cell.n}, {"k", cell.k}, {"nonzero", nonzero}};
      if (cell.bruteforce) row["sigma_bruteforce"] = cell.bruteforce->str();
      if (cell.sum) row["sigma_sum"] = cell.sum->str();
      if (cell.closed) row["sigma_closed"] = cell.closed->str();
      out.push_back(std::move(row));
    }
  };
  if (workers <= 1) {
    for (const auto& task : tasks) emit_cell(task());
  } else {
    for (const auto& cell : run_grid(workers, tasks)) emit_cell(cell);
  }
  if (format == Format::Json) emit(out);
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_hermite_gamma(const std::string& gamma1_text, const std::string& gamma2_text, int m,
                      Format format) {
  const bsl::Rational g1 = parse_rational_flag(gamma1_text);
  const bsl::GammaSequence g =
      gamma2_text.empty() ? bsl::gamma_sequence_constrained(g1, m)
                          : bsl::gamma_sequence_general(g1, parse_rational_flag(gamma2_text), m);
  if (format == Format::Pretty) {
    for (int i = 1; i <= g.size(); ++i) std::cout << "gamma_" << i << " = " << g.gamma(i) << "\n";
  } else if (format == Format::Csv) {
    std::cout << "m,gamma\n";
    for (int i = 1; i <= g.size(); ++i) std::cout << i << "," << g.gamma(i) << "\n";
  } else {
    emit(bsl::gammas_to_json(g));
  }
  return kExitOk;
}

int cmd_hermite_table(int n, Format format) {
  const auto t = bsl::hermite_triangle(n);
  if (format == Format::Csv) {
    std::cout << "n,i,coeff\n";
    for (int r = 0; r <= n; ++r) {
      for (int i = 0; i <= r; ++i) std::cout << r << "," << i << "," << t.b(r, i) << "\n";
    }
  } else if (format == Format::Pretty) {
    for (int r = 0; r <= n; ++r) std::cout << "H_" << r << " = " << t.poly(r).str() << "\n";
  } else {
    json rows = json::array();
    for (int r = 0; r <= n; ++r) rows.push_back(bsl::poly_to_json(t.poly(r)));
    emit(rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bispectral polynomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --format / --workers may follow the subcommand

  std::string format_name = "json";
  app.add_option("--format", format_name, "output format: json, csv, pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  int workers = 1;
  app.add_option("--workers", workers, "worker threads for grid subcommands")
      ->check(CLI::PositiveNumber);

  std::string op_path, matrix_path, polys_path, gammas_path;
  std::string c_text = "0", gamma1_text, gamma2_text, mode = "all", method = "backsub";
  std::string n_range_text, k_range_text;
  std::vector<std::string> factor_paths;
  int n = 0, m_count = 10, p = 1, p_max = 0, s = 1, rows = 0, cap = -1;
  bool check_dets = false;

  // op -----------------------------------------------------------------
  auto* op_cmd = app.add_subcommand("op", "differential-operator computations");
  op_cmd->require_subcommand(1);

  auto* op_spectrum = op_cmd->add_subcommand("spectrum", "eigenvalues and distinctness verdict");
  op_spectrum->add_option("--op", op_path, "operator document")->required();
  op_spectrum->add_option("--n", n, "compute lambda_0..lambda_n")->required();

  auto* op_delta = op_cmd->add_subcommand("delta", "delta table");
  op_delta->add_option("--op", op_path, "operator document")->required();
  op_delta->add_option("--n", n, "table size")->required();

  auto* op_eigen = op_cmd->add_subcommand("eigenpoly", "monic eigenpolynomial P_n");
  op_eigen->add_option("--op", op_path, "operator document")->required();
  op_eigen->add_option("--n", n, "degree")->required();
  op_eigen->add_option("--method", method, "backsub, explicit, or both")
      ->check(CLI::IsMember({"backsub", "explicit", "both"}));
  op_eigen->add_option("--cap", cap, "composition-enumeration cap (default 25, env BSL_CAP)");

  auto* op_verify = op_cmd->add_subcommand("verify", "check L P_n = lambda_n P_n for n = 0..N");
  op_verify->add_option("--op", op_path, "operator document")->required();
  op_verify->add_option("--n", n, "upper degree")->required();

  // rec ----------------------------------------------------------------
  auto* rec_cmd = app.add_subcommand("rec", "banded recurrence computations");
  rec_cmd->require_subcommand(1);

  auto* rec_gen = rec_cmd->add_subcommand("gen", "generate P_0..P_n from a banded matrix");
  rec_gen->add_option("--matrix", matrix_path, "banded matrix document")->required();
  rec_gen->add_option("--n", n, "last index to generate")->required();

  auto* rec_fit = rec_cmd->add_subcommand("fit", "fit a (p+2)-term recurrence to a family");
  rec_fit->add_option("--polys", polys_path, "polynomial family document")->required();
  rec_fit->add_option("--p", p, "band parameter to test");
  rec_fit->add_option("--p-max", p_max, "sweep p = 1..p_max and report per-p verdicts");

  // darboux --------------------------------------------------------------
  auto* darboux_cmd = app.add_subcommand("darboux", "factorizations and transformations");
  darboux_cmd->require_subcommand(1);

  auto* dfact = darboux_cmd->add_subcommand("factorize", "UL factorization of J - CI");
  dfact->add_option("--matrix", matrix_path, "tridiagonal matrix document")->required();
  dfact->add_option("--c", c_text, "shift C (default 0)");
  dfact->add_option("--gamma1", gamma1_text, "free parameter l_1")->required();
  dfact->add_option("--n", n, "truncation rows (default: all available)");
  dfact->add_flag("--check-dets", check_dets, "require det(C I_m - J_m) != 0 for m <= n");

  auto* dtrans = darboux_cmd->add_subcommand("transform", "cyclic recombination of factors");
  dtrans->add_option("--factor", factor_paths, "factor documents in order U, L1, ..., Lp")
      ->required();
  dtrans->add_option("--c", c_text, "shift C (default 0)");
  dtrans->add_option("--s", s, "rotation index, 1..p");
  dtrans->add_option("--rows", rows, "trusted output rows")->required();

  auto* dconj = darboux_cmd->add_subcommand("conjugate", "T J T^{-1} via the band recursion");
  dconj->add_option("--matrix", matrix_path, "tridiagonal matrix document")->required();
  dconj->add_option("--gammas", gammas_path, "gamma sequence document");
  dconj->add_option("--hermite-gamma1", gamma1_text, "constrained chain with this gamma_1");
  dconj->add_option("--gamma2", gamma2_text, "general chain second parameter");
  dconj->add_option("--n", n, "truncation index")->required();

  // test -----------------------------------------------------------------
  auto* test_cmd = app.add_subcommand("test", "transformation tests");
  test_cmd->require_subcommand(1);

  auto* tnec = test_cmd->add_subcommand("necessary", "necessary-condition grid");
  tnec->add_option("--op", op_path, "operator document")->required();
  tnec->add_option("--gammas", gammas_path, "gamma sequence document");
  tnec->add_option("--hermite-gamma1", gamma1_text, "constrained chain with this gamma_1");
  tnec->add_option("--gamma2", gamma2_text, "general chain second parameter");
  tnec->add_option("--n-range", n_range_text, "n range a:b")->required();
  tnec->add_option("--k-range", k_range_text, "k range a:b")->required();

  // hermite ----------------------------------------------------------------
  auto* hermite_cmd = app.add_subcommand("hermite", "the Hermite program");
  hermite_cmd->require_subcommand(1);

  auto* hsigma = hermite_cmd->add_subcommand("sigma", "Sigma_H values");
  hsigma->add_option("--n", n_range_text, "n or range a:b")->required();
  hsigma->add_option("--k", k_range_text, "k or range a:b")->required();
  hsigma->add_option("--gamma1", gamma1_text, "gamma_1 (default 1)");
  hsigma->add_option("--mode", mode, "all, bruteforce, sum, or closed")
      ->check(CLI::IsMember({"all", "bruteforce", "sum", "closed"}));

  auto* hgamma = hermite_cmd->add_subcommand("gamma", "Geronimus gamma chains");
  hgamma->add_option("--gamma1", gamma1_text, "gamma_1")->required();
  hgamma->add_option("--gamma2", gamma2_text, "general-mode gamma_2");
  hgamma->add_option("--m", m_count, "chain length");

  auto* htable = hermite_cmd->add_subcommand("table", "closed-form coefficient triangle");
  htable->add_option("--n", n, "triangle size")->required();

  CLI11_PARSE(app, argc, argv);

  const Format format = format_name == "csv"      ? Format::Csv
                        : format_name == "pretty" ? Format::Pretty
                                                  : Format::Json;

  try {
    if (*op_spectrum) return cmd_op_spectrum(op_path, n, format);
    if (*op_delta) return cmd_op_delta(op_path, n, format);
    if (*op_eigen) {
      return cmd_op_eigenpoly(op_path, n, method, cap >= 0 ? cap : default_cap(), format);
    }
    if (*op_verify) return cmd_op_verify(op_path, n, format);
    if (*rec_gen) return cmd_rec_gen(matrix_path, n, format);
    if (*rec_fit) return cmd_rec_fit(polys_path, p, p_max, format);
    if (*dfact) {
      return cmd_darboux_factorize(matrix_path, c_text, gamma1_text, n, check_dets, format);
    }
    if (*dtrans) return cmd_darboux_transform(factor_paths, c_text, s, rows);
    if (*dconj) {
      return cmd_darboux_conjugate(matrix_path, gammas_path, gamma1_text, gamma2_text, n, format);
    }
    if (*tnec) {
      return cmd_test_necessary(op_path, gammas_path, gamma1_text, gamma2_text, n_range_text,
                                k_range_text, workers, format);
    }
    if (*hsigma) {
      return cmd_hermite_sigma(n_range_text, k_range_text,
                               gamma1_text.empty() ? "1" : gamma1_text, mode, workers, format);
    }
    if (*hgamma) return cmd_hermite_gamma(gamma1_text, gamma2_text, m_count, format);
    if (*htable) return cmd_hermite_table(n, format);
  } catch (const bsl::Error& e) {
    std::cerr << json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
