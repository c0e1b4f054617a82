#include "cli.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toeplitz/core.hpp"
#include "toeplitz/dense.hpp"
#include "toeplitz/displacement.hpp"
#include "toeplitz/families.hpp"
#include "toeplitz/hankel.hpp"
#include "toeplitz/isometry.hpp"
#include "toeplitz/matrix_file.hpp"
#include "toeplitz/product.hpp"

namespace toeplitz::cli {

namespace {

using nlohmann::json;

/// Usage problem found after parsing; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = 1e-9;
  bool json = false;

  std::string file;
  std::string file_a;
  std::string file_b;
  bool oracle = false;

  std::string regime;
  std::optional<std::size_t> n, m, l;
  std::string lambda = "1,0";
  std::uint64_t seed = 0;
  std::string out_a;
  std::string out_b;

  std::string out;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const std::string re = s.substr(0, comma);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument("");
    double y = 0.0;
    if (comma != std::string::npos) {
      const std::string im = s.substr(comma + 1);
      y = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument("");
    }
    const Complex z{x, y};
    if (!is_finite(z)) throw std::invalid_argument("");
    return z;
  } catch (const std::exception&) {
    throw UsageError("--lambda expects re,im (got \"" + s + "\")");
  }
}

void emit(std::ostream& out, const Options& opt, const json& verdict, const std::string& text) {
  if (opt.json) {
    out << verdict.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

std::string outcome_text(const RankOneOutcome& o) {
  if (const auto* p = std::get_if<Proportional>(&o)) {
    return "proportional, lambda = " + format_number(p->lambda.real()) + " + " +
           format_number(p->lambda.imag()) + "i";
  }
  const auto& z = std::get<BothZero>(o);
  if (z.lambda_zero()) return "both_zero (lambda = 0)";
  if (z.lambda_infinity()) return "both_zero (lambda = infinity)";
  return "both_zero";
}

void put_outcome(json& j, const RankOneOutcome& o) {
  if (const auto* p = std::get_if<Proportional>(&o)) {
    j["case"] = "proportional";
    j["lambda"] = complex_json(p->lambda);
  } else {
    const auto& z = std::get<BothZero>(o);
    j["case"] = "both_zero";
    j["lambda"] = z.lambda_zero() ? json("zero") : z.lambda_infinity() ? json("infinity") : json();
  }
}

// check ----------------------------------------------------------------------

int cmd_check(const Options& opt, std::ostream& out) {
  const MatrixValue value = read_matrix_file(opt.file);
  const DenseMatrix d = dense_of(value);
  const Tolerance tol = Tolerance::uniform(opt.tol);

  const bool toep_direct = dense_is_toeplitz(d, tol);
  const bool toep_disp = is_toeplitz_by_displacement(d, tol);
  const DenseMatrix flipped = reverse_columns(d);
  const bool hank_direct = dense_is_hankel(d, tol);
  const bool hank_disp = is_toeplitz_by_displacement(flipped, tol);

  json j{{"kind", kind_of(value)}, {"rows", d.rows()}, {"cols", d.cols()}};
  if (toep_direct != toep_disp || hank_direct != hank_disp) {
    j["error"] = "displacement and direct routes disagree";
    emit(out, opt, j, "disagreement between displacement and direct routes");
    return kOracleDisagreement;
  }
  const char* structure = toep_disp ? "toeplitz" : hank_disp ? "hankel" : "none";
  j["structure"] = structure;
  j["via"] = "displacement";
  j["toeplitz"] = toep_disp;
  j["hankel"] = hank_disp;
  std::string text = std::string("structure: ") + structure;
  if (toep_disp && hank_disp) text += " (also hankel)";
  emit(out, opt, j, text);
  return toep_disp || hank_disp ? kTrue : kFalse;
}

// product --------------------------------------------------------------------

int cmd_product(const Options& opt, std::ostream& out) {
  const MatrixValue a = read_matrix_file(opt.file_a);
  const MatrixValue b = read_matrix_file(opt.file_b);
  if (std::holds_alternative<DenseMatrix>(a) || std::holds_alternative<DenseMatrix>(b)) {
    throw UsageError("product needs toeplitz or hankel files, not dense");
  }
  const Tolerance tol = Tolerance::uniform(opt.tol);

  // The verdict comes from a Toeplitz product; `target` is the structure of
  // the actual product and `to_product` maps a broken Toeplitz position back
  // to it.
  std::optional<ProductVerdict> verdict;
  std::string target = "toeplitz";
  std::string pair_kind;
  std::size_t n = 0, l = 0;
  const auto* ta = std::get_if<AsymToeplitz>(&a);
  const auto* tb = std::get_if<AsymToeplitz>(&b);
  const auto* ha = std::get_if<AsymHankel>(&a);
  const auto* hb = std::get_if<AsymHankel>(&b);
  if (ta && tb) {
    pair_kind = "toeplitz*toeplitz";
    n = ta->rows(), l = tb->cols();
    verdict = product_is_toeplitz(*ta, *tb, tol);
  } else if (ha && hb) {
    pair_kind = "hankel*hankel";
    n = ha->rows(), l = hb->cols();
    verdict = hankel_product_is_toeplitz(*ha, *hb, tol);
  } else if (ha && tb) {
    pair_kind = "hankel*toeplitz";
    target = "hankel";
    n = ha->rows(), l = tb->cols();
    verdict = hankel_times_toeplitz_is_hankel(*ha, *tb, tol);
  } else {
    pair_kind = "toeplitz*hankel";
    target = "hankel";
    n = ta->rows(), l = hb->cols();
    verdict = toeplitz_times_hankel_is_hankel(*ta, *hb, tol);
  }

  const bool structured = accepted(*verdict);
  json j{{"pair", pair_kind}, {"structure", target}, {"result", structured}};
  std::string text = pair_kind + ": product is " + (structured ? "" : "not ") + target;
  if (const auto* cert = std::get_if<ProductCertificate>(&*verdict)) {
    j["regime"] = to_string(cert->regime);
    put_outcome(j, cert->outcome);
    text += " [" + std::string(to_string(cert->regime)) + ", " + outcome_text(cert->outcome) + "]";
  } else {
    const auto& nt = std::get<NotToeplitz>(*verdict);
    j["regime"] = to_string(nt.regime);
    std::size_t r = nt.row, c = nt.col;
    if (pair_kind == "hankel*toeplitz") {
      r = n - nt.row;
      c = nt.col - 1;
    } else if (pair_kind == "toeplitz*hankel") {
      c = l - 1 - nt.col;
    }
    j["mismatch"] = json::array({r, c});
    text += " [" + std::string(to_string(nt.regime)) + ", breaks at (" + std::to_string(r) +
            ", " + std::to_string(c) + ")]";
  }

  if (opt.oracle) {
    const DenseMatrix p = dense_mul(dense_of(a), dense_of(b));
    const bool dense = target == "toeplitz" ? dense_is_toeplitz(p, tol) : dense_is_hankel(p, tol);
    j["oracle"] = dense;
    if (dense != structured) {
      j["error"] = "structured verdict disagrees with the dense oracle";
      emit(out, opt, j, text + "\noracle disagrees: dense product is " + (dense ? "" : "not ") +
                            target);
      return kOracleDisagreement;
    }
    text += "\noracle agrees";
  }
  emit(out, opt, j, text);
  return structured ? kTrue : kFalse;
}

// generate -------------------------------------------------------------------

struct Sizes {
  std::size_t n, m, l;
};

int cmd_generate(const Options& opt, std::ostream& out) {
  std::string key = opt.regime;
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  std::optional<Regime> regime = parse_regime(key);
  std::optional<DegenerateForm> form;
  Sizes defaults{4, 4, 4};
  if (regime) {
    switch (*regime) {
      case Regime::R1: defaults = {3, 4, 3}; break;
      case Regime::R2: defaults = {5, 3, 5}; break;
      case Regime::R3: defaults = {3, 4, 6}; break;
      case Regime::R4: defaults = {6, 4, 3}; break;
    }
  } else if (key == "form-a") {
    form = DegenerateForm::RowBandA;
    defaults = {3, 4, 5};
  } else if (key == "form-b") {
    form = DegenerateForm::ColBandB;
    defaults = {5, 4, 3};
  } else if (key == "lambda-zero") {
    form = DegenerateForm::LambdaZero;
  } else if (key == "lambda-inf") {
    form = DegenerateForm::LambdaInfinity;
  } else {
    throw UsageError("unknown --regime \"" + opt.regime + "\"");
  }
  const Sizes s{opt.n.value_or(defaults.n), opt.m.value_or(defaults.m),
                opt.l.value_or(defaults.l)};
  if (s.n == 0 || s.m == 0 || s.l == 0) throw UsageError("sizes must be positive");
  if (s.n > 4096 || s.m > 4096 || s.l > 4096) throw UsageError("sizes above 4096 are not supported");

  const Complex lambda = parse_complex(opt.lambda);
  ToeplitzPair pair = [&] {
    if (form) return gen_degenerate(*form, s.n, s.m, s.l, opt.seed);
    const Regime actual = classify_regime(s.n, s.m, s.l);
    if (actual != *regime) {
      throw UsageError("sizes " + std::to_string(s.n) + "x" + std::to_string(s.m) + "x" +
                       std::to_string(s.l) + " belong to " + std::string(to_string(actual)) +
                       ", not " + std::string(to_string(*regime)));
    }
    return gen_pair(FamilySpec::random(*regime, s.n, s.m, s.l, lambda, opt.seed));
  }();

  write_matrix_file(opt.out_a, pair.first);
  write_matrix_file(opt.out_b, pair.second);
  json j{{"regime", form ? std::string(to_string(*form)) : std::string(to_string(*regime))},
         {"n", s.n}, {"m", s.m}, {"l", s.l}, {"seed", opt.seed},
         {"out_a", opt.out_a}, {"out_b", opt.out_b}};
  if (!form) j["lambda"] = complex_json(lambda);
  emit(out, opt, j, "wrote " + opt.out_a + " and " + opt.out_b);
  return kTrue;
}

// isometry -------------------------------------------------------------------

int cmd_isometry(const Options& opt, std::ostream& out) {
  const MatrixValue value = read_matrix_file(opt.file);
  const Tolerance tol = Tolerance::uniform(opt.tol);
  IsometryVerdict verdict = [&] {
    if (const auto* t = std::get_if<AsymToeplitz>(&value)) return is_isometry(*t, tol);
    if (const auto* h = std::get_if<AsymHankel>(&value)) return hankel_is_isometry(*h, tol);
    throw UsageError("isometry needs a toeplitz or hankel file, not dense");
  }();
  const IsometryDiagnostics& d = diagnostics(verdict);
  const bool ok = accepted(verdict);

  json j{{"result", ok},
         {"regime", to_string(d.regime)},
         {"residual_norm", d.residual_norm},
         {"column_norm_sq", d.column_norm_sq}};
  std::string text = std::string(ok ? "isometry" : "not an isometry") + " [" +
                     std::string(to_string(d.regime));
  if (d.match) {
    put_outcome(j, *d.match);
    text += ", " + outcome_text(*d.match);
  } else {
    j["case"] = "mismatch";
    text += ", rank-one test fails";
  }
  text += "]\nresidual_norm = " + format_number(d.residual_norm) +
          "\ncolumn_norm_sq = " + format_number(d.column_norm_sq);
  emit(out, opt, j, text);
  return ok ? kTrue : kFalse;
}

// displacement ---------------------------------------------------------------

int cmd_displacement(const Options& opt, std::ostream& out) {
  const DenseMatrix delta = displacement_dense(dense_of(read_matrix_file(opt.file)));
  if (opt.out.empty()) {
    out << format_matrix(delta);
  } else {
    write_matrix_file(opt.out, delta);
    emit(out, opt, json{{"out", opt.out}}, "wrote " + opt.out);
  }
  return kTrue;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Structured checks for rectangular Toeplitz and Hankel matrices.\n"
               "Exit codes: 0 true, 1 false, 2 input error, 3 structured/dense disagreement.",
               "toeplitz"};
  app.require_subcommand(1);
  app.add_option("--tol", opt.tol, "absolute and relative tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--json", opt.json, "print the verdict as JSON");
  app.fallthrough();

  auto* check = app.add_subcommand("check", "detect Toeplitz or Hankel structure of any file");
  check->add_option("file", opt.file)->required();

  auto* product = app.add_subcommand(
      "product",
      "decide whether A*B is Toeplitz (Hankel when exactly one factor is Hankel).\n"
      "lambda is reported with a = lambda * u and v = conj(lambda) * beta.");
  product->add_option("file_a", opt.file_a)->required();
  product->add_option("file_b", opt.file_b)->required();
  product->add_flag("--oracle", opt.oracle, "cross-check against the dense product");

  auto* generate = app.add_subcommand("generate", "write a pair whose product is Toeplitz");
  generate->add_option("--regime", opt.regime, "r1|r2|r3|r4|form-a|form-b|lambda-zero|lambda-inf")
      ->required();
  generate->add_option("-n", opt.n, "rows of A");
  generate->add_option("-m", opt.m, "cols of A = rows of B");
  generate->add_option("-l", opt.l, "cols of B");
  generate->add_option("--lambda", opt.lambda, "re,im (a = lambda * u)")->capture_default_str();
  generate->add_option("--seed", opt.seed)->capture_default_str();
  generate->add_option("--out-a", opt.out_a)->required();
  generate->add_option("--out-b", opt.out_b)->required();

  auto* isometry = app.add_subcommand("isometry", "decide whether A^*A = I");
  isometry->add_option("file", opt.file)->required();

  auto* displacement = app.add_subcommand("displacement", "write M - S M S^* as a dense file");
  displacement->add_option("file", opt.file)->required();
  displacement->add_option("--out", opt.out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    if (!std::isfinite(opt.tol)) throw UsageError("--tol must be finite");
    if (*check) return cmd_check(opt, out);
    if (*product) return cmd_product(opt, out);
    if (*generate) return cmd_generate(opt, out);
    if (*isometry) return cmd_isometry(opt, out);
    return cmd_displacement(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (...) {
    err << "error: unknown failure\n";
  }
  return kInputError;
}

}  // namespace toeplitz::cli
