// kohn-spectra: command-line driver for the perturbed Kohn Laplacian toolkit.
//
// Subcommands: basis, matrix, blocks, eigs, bound, sweep.  Rationals cross the
// CLI boundary as `p/q` strings so exact mode never sees a float.  Exit codes:
// 0 success, 1 configuration error, 2 failed internal consistency check.

#include "kohn/bounds.hpp"
#include "kohn/harmonics.hpp"
#include "kohn/polynomial.hpp"
#include "kohn/rational.hpp"
#include "kohn/rossi_operator.hpp"
#include "kohn/tridiag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct OutputOpts {
  std::string format = "text";
  std::string out_path;
  bool no_header = false;  // suppresses the timestamp line only
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write to this file instead of stdout");
  cmd->add_flag("--no-header", opts.no_header, "Suppress the timestamp header line");
}

// Destination stream: file when --out was given, stdout otherwise.
struct Sink {
  std::ofstream file;
  std::ostream& stream;

  explicit Sink(const OutputOpts& opts) : stream(open(opts)) {}

 private:
  std::ostream& open(const OutputOpts& opts) {
    if (opts.out_path.empty()) return std::cout;
    file.open(opts.out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + opts.out_path);
    return file;
  }
};

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void emit_timestamp(std::ostream& out, const OutputOpts& opts) {
  if (!opts.no_header && opts.format != "json") out << "# generated " << iso_timestamp() << "\n";
}

std::string csv_quote(const std::string& s) {
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

kohn::RossiParam parse_t(const std::string& text) {
  return kohn::RossiParam(kohn::rational_from_string(text));
}

// ---------------------------------------------------------------------------
// basis

int run_basis(int m, int p, int q, const OutputOpts& opts) {
  const bool by_total = m >= 0;
  if (!by_total && (p < 0 || q < 0))
    throw std::invalid_argument("basis: provide --m, or both --p and --q");
  const kohn::HarmonicBasis basis =
      by_total ? kohn::basis_hm(m) : kohn::basis_hpq_derivative(p, q);

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json doc;
    if (by_total) doc["m"] = m;
    else doc["p"] = p, doc["q"] = q;
    doc["dim"] = basis.elements.size();
    json elems = json::array();
    for (const kohn::Polynomial& f : basis.elements) elems.push_back(kohn::to_string(f));
    doc["elements"] = std::move(elems);
    out << doc.dump(2) << "\n";
    return 0;
  }

  emit_timestamp(out, opts);
  if (opts.format == "csv") {
    out << "index,polynomial\n";
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
      out << i << ',' << csv_quote(kohn::to_string(basis.elements[i])) << "\n";
    return 0;
  }
  if (by_total)
    out << "# basis of H_" << m << "(S^3), dim " << basis.elements.size() << "\n";
  else
    out << "# basis of H_{" << p << "," << q << "}(S^3), dim " << basis.elements.size() << "\n";
  for (const kohn::Polynomial& f : basis.elements) out << kohn::to_string(f) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// matrix

int run_matrix(int m, const std::string& t_text, const OutputOpts& opts) {
  if (m < 0) throw std::invalid_argument("matrix: --m is required and must be >= 0");
  const kohn::RossiParam t = parse_t(t_text);
  const kohn::OperatorMatrix mat = kohn::assemble_full(m, t, /*h_factored=*/true);
  const std::string h_str = kohn::to_string(t.h());
  const std::string t_str = kohn::to_string(t.t_abs());

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json doc;
    doc["m"] = m;
    doc["t"] = t_str;
    doc["h"] = h_str;
    doc["h_factored"] = mat.h_factored;
    doc["dim"] = mat.dim;
    json rows = json::array();
    for (int i = 0; i < mat.dim; ++i) {
      json row = json::array();
      for (int j = 0; j < mat.dim; ++j) {
        const kohn::ComplexRational& e = mat.at(i, j);
        row.push_back({kohn::to_string(e.re), kohn::to_string(e.im)});
      }
      rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    json basis = json::array();
    for (const kohn::Polynomial& f : mat.basis) basis.push_back(kohn::to_string(f));
    doc["basis"] = std::move(basis);
    out << doc.dump(2) << "\n";
    return 0;
  }

  emit_timestamp(out, opts);
  out << "# box_b^t on H_" << m << "(S^3), dim " << mat.dim << ", t = " << t_str
      << "; h factored out; h = " << h_str << "\n";
  if (opts.format == "csv") {
    out << "row,col,re,im\n";
    for (int i = 0; i < mat.dim; ++i)
      for (int j = 0; j < mat.dim; ++j) {
        const kohn::ComplexRational& e = mat.at(i, j);
        if (!e.is_zero())
          out << i << ',' << j << ',' << kohn::to_string(e.re) << ',' << kohn::to_string(e.im)
              << "\n";
      }
    return 0;
  }
  for (int i = 0; i < mat.dim; ++i) {
    for (int j = 0; j < mat.dim; ++j) {
      if (j > 0) out << ' ';
      out << kohn::to_string(mat.at(i, j));
    }
    out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// blocks

int run_blocks(int k, const std::string& t_text, const OutputOpts& opts) {
  if (k < 1) throw std::invalid_argument("blocks: --k is required and must be >= 1");
  const kohn::RossiParam t = parse_t(t_text);
  const kohn::VWBlock v = kohn::closed_form_block(k, kohn::BlockKind::V, t);
  const kohn::VWBlock w = kohn::closed_form_block(k, kohn::BlockKind::W, t);

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json doc;
    doc["k"] = k;
    doc["t"] = kohn::to_string(t.t_abs());
    doc["h"] = kohn::to_string(t.h());
    json blocks = json::array();
    for (const kohn::VWBlock* b : {&v, &w}) {
      json jb;
      jb["kind"] = kohn::to_string(b->kind);
      jb["diag_const"] = b->diag_const;
      jb["diag_s"] = b->diag_s;
      jb["upper_coeff"] = b->upper_coeff;
      json diag = json::array(), upper = json::array();
      for (int j = 1; j <= k; ++j) diag.push_back(kohn::to_string(b->diag(j)));
      for (int j = 1; j <= k - 1; ++j) upper.push_back(kohn::to_string(b->upper(j)));
      jb["diag"] = std::move(diag);
      jb["upper"] = std::move(upper);
      jb["lower"] = kohn::to_string(b->lower());
      blocks.push_back(std::move(jb));
    }
    doc["blocks"] = std::move(blocks);
    out << doc.dump(2) << "\n";
    return 0;
  }

  emit_timestamp(out, opts);
  out << "# chain blocks on H_" << 2 * k - 1 << "(S^3), k = " << k
      << ", t = " << kohn::to_string(t.t_abs()) << "; h factored out; h = "
      << kohn::to_string(t.h()) << "\n";
  out << "kind,j,d_const,d_s,d,u_coeff,u,l\n";
  for (const kohn::VWBlock* b : {&v, &w}) {
    for (int j = 1; j <= k; ++j) {
      out << kohn::to_string(b->kind) << ',' << j << ',' << b->diag_const[j - 1] << ','
          << b->diag_s[j - 1] << ',' << kohn::to_string(b->diag(j)) << ',';
      if (j < k)
        out << b->upper_coeff[j - 1] << ',' << kohn::to_string(b->upper(j)) << ','
            << kohn::to_string(b->lower());
      else
        out << ",,";
      out << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eigs

std::vector<std::pair<double, int>> cluster(const std::vector<double>& sorted, double tol) {
  std::vector<std::pair<double, int>> out;
  for (double v : sorted) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

int run_eigs(int m, int k, const std::string& t_text, std::string mode, double tol,
             const OutputOpts& opts) {
  if ((m >= 0) == (k >= 1)) throw std::invalid_argument("eigs: provide exactly one of --m, --k");
  if (k >= 1) m = 2 * k - 1;
  if (!(tol > 0)) throw std::invalid_argument("eigs: --tol must be positive");
  const kohn::RossiParam t = parse_t(t_text);

  const bool odd = m % 2 == 1;
  const int k_eff = odd ? (m + 1) / 2 : m / 2;
  if (mode.empty()) mode = odd ? "numeric" : "exact";
  if (mode == "numeric" && !odd)
    throw std::invalid_argument(
        "eigs: even-degree spaces have no chain decomposition; use --mode exact");
  if (mode == "exact" && k_eff > kohn::exact_mode_limit())
    throw std::invalid_argument(
        "eigs: exact assembly capped at k = " + std::to_string(kohn::exact_mode_limit()) +
        " (raise KOHN_SPECTRA_EXACT_LIMIT to override)");

  std::vector<std::pair<double, int>> values;
  if (mode == "numeric") {
    values = kohn::spectrum_multiplicity(k_eff, t, tol);
  } else {
    const kohn::OperatorMatrix mat = kohn::assemble_full(m, t, /*h_factored=*/true);
    std::vector<double> eigs = kohn::full_spectrum(mat);
    const double h = t.h().get_d();
    for (double& v : eigs) v *= h;
    values = cluster(eigs, tol);
  }

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json doc;
    doc["m"] = m;
    doc["t"] = kohn::to_string(t.t_abs());
    doc["h"] = t.h().get_d();
    doc["mode"] = mode;
    json vals = json::array();
    for (const auto& [value, mult] : values)
      vals.push_back({{"value", value}, {"multiplicity", mult}});
    doc["eigenvalues"] = std::move(vals);
    out << doc.dump(2) << "\n";
    return 0;
  }

  emit_timestamp(out, opts);
  out << "# eigenvalues of box_b^t on H_" << m << "(S^3), t = " << kohn::to_string(t.t_abs())
      << ", mode = " << mode << " (h included, h = " << kohn::to_string(t.h()) << ")\n";
  out << std::setprecision(17);
  out << "value,multiplicity\n";
  for (const auto& [value, mult] : values) out << value << ',' << mult << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bound / sweep

int run_bound(int k, const std::string& t_text, const OutputOpts& opts) {
  if (k < 1) throw std::invalid_argument("bound: --k is required and must be >= 1");
  const kohn::BoundReport r = kohn::bound_chain(k, parse_t(t_text));

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json doc;
    doc["k"] = r.k;
    doc["m"] = r.degree();
    doc["parity"] = kohn::to_string(r.parity);
    doc["t"] = kohn::to_string(r.t_abs);
    doc["h"] = r.h;
    doc["lambda_min"] = r.lambda_min;
    doc["det_ratio"] = r.det_ratio;
    doc["bound_sharp"] = r.bound_sharp;
    doc["bound_coarse"] = r.bound_coarse;
    doc["definite"] = r.definite;
    doc["chain_ok"] = r.chain_ok;
    out << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    emit_timestamp(out, opts);
    kohn::write_csv(out, {r});
  } else {
    emit_timestamp(out, opts);
    out << std::setprecision(17);
    out << "# smallest eigenvalue of box_b^t on H_" << r.degree() << "(S^3), k = " << r.k
        << ", t = " << kohn::to_string(r.t_abs) << ", h = " << r.h << "\n";
    out << "lambda_min    = " << r.lambda_min << "\n";
    out << "det_ratio     = " << r.det_ratio << "   (h det A_k / det A_{k-1})\n";
    out << "bound_sharp   = " << r.bound_sharp << "   (h (2k-1) sqrt(k) t^{2k})\n";
    out << "bound_coarse  = " << r.bound_coarse
        << "   (h (2k-1) sqrt(e max(k-1,1)) t^{2k})\n";
    out << "definite      = " << (r.definite ? "yes" : "no") << "\n";
    out << "chain_ok      = " << (r.chain_ok ? "yes" : "no") << "\n";
  }
  if (!r.chain_ok) {
    std::cerr << "bound: inequality chain violated at k = " << k << ", t = "
              << kohn::to_string(r.t_abs) << "\n";
    return 2;
  }
  return 0;
}

int run_sweep(int k_max, const std::string& grid_text, const std::string& parity_text,
              double zero_threshold, const OutputOpts& opts) {
  if (k_max < 1) throw std::invalid_argument("sweep: --kmax must be >= 1");
  if (!(zero_threshold > 0)) throw std::invalid_argument("sweep: --tol must be positive");
  const auto first = grid_text.find(':');
  const auto second = grid_text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      grid_text.find(':', second + 1) != std::string::npos)
    throw std::invalid_argument("sweep: --t-grid must look like lo:hi:step");
  const std::vector<kohn::Rational> t_grid =
      kohn::grid(kohn::rational_from_string(grid_text.substr(0, first)),
                 kohn::rational_from_string(grid_text.substr(first + 1, second - first - 1)),
                 kohn::rational_from_string(grid_text.substr(second + 1)));
  const kohn::Parity parity = [&] {
    if (parity_text == "odd") return kohn::Parity::Odd;
    if (parity_text == "even") return kohn::Parity::Even;
    throw std::invalid_argument("sweep: --parity must be odd or even");
  }();

  const std::vector<kohn::BoundReport> rows = kohn::sweep(k_max, t_grid, parity, zero_threshold);

  Sink sink(opts);
  std::ostream& out = sink.stream;
  if (opts.format == "json") {
    json arr = json::array();
    for (const kohn::BoundReport& r : rows) {
      json doc;
      doc["k"] = r.k;
      doc["m"] = r.degree();
      doc["parity"] = kohn::to_string(r.parity);
      doc["t"] = kohn::to_string(r.t_abs);
      doc["h"] = r.h;
      doc["lambda_min"] = r.lambda_min;
      doc["det_ratio"] = r.det_ratio;
      doc["bound_sharp"] = r.bound_sharp;
      doc["bound_coarse"] = r.bound_coarse;
      doc["definite"] = r.definite;
      doc["chain_ok"] = r.chain_ok;
      arr.push_back(std::move(doc));
    }
    out << arr.dump(2) << "\n";
  } else {
    emit_timestamp(out, opts);
    kohn::write_csv(out, rows);
  }
  for (const kohn::BoundReport& r : rows) {
    if (!r.chain_ok) {
      std::cerr << "sweep: inequality chain violated at k = " << r.k << ", t = "
                << kohn::to_string(r.t_abs) << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectra of the perturbed Kohn Laplacian box_b^t on spherical harmonics over S^3"};
  app.require_subcommand(1);

  int rc = 0;

  int basis_m = -1, basis_p = -1, basis_q = -1;
  OutputOpts basis_out;
  CLI::App* basis = app.add_subcommand("basis", "Print a harmonic basis of H_m or H_{p,q}");
  basis->add_option("--m", basis_m, "Total degree m (all bidegrees p+q = m)");
  basis->add_option("--p", basis_p, "Holomorphic degree");
  basis->add_option("--q", basis_q, "Anti-holomorphic degree");
  add_output_flags(basis, basis_out);
  basis->callback([&] { rc = run_basis(basis_m, basis_p, basis_q, basis_out); });

  int matrix_m = -1;
  std::string matrix_t = "0";
  OutputOpts matrix_out;
  CLI::App* matrix = app.add_subcommand("matrix", "Exact matrix of box_b^t on H_m (h factored)");
  matrix->add_option("--m", matrix_m, "Total degree m")->required();
  matrix->add_option("--t", matrix_t, "Perturbation |t| as a rational p/q in [0,1)")->required();
  add_output_flags(matrix, matrix_out);
  matrix->callback([&] { rc = run_matrix(matrix_m, matrix_t, matrix_out); });

  int blocks_k = 0;
  std::string blocks_t = "0";
  OutputOpts blocks_out;
  CLI::App* blocks =
      app.add_subcommand("blocks", "Closed-form tridiagonal V/W chain blocks on H_{2k-1}");
  blocks->add_option("--k", blocks_k, "Block size k (space H_{2k-1})")->required();
  blocks->add_option("--t", blocks_t, "Perturbation |t| as a rational p/q in [0,1)")->required();
  add_output_flags(blocks, blocks_out);
  blocks->callback([&] { rc = run_blocks(blocks_k, blocks_t, blocks_out); });

  int eigs_m = -1, eigs_k = 0;
  std::string eigs_t = "0", eigs_mode;
  double eigs_tol = 1e-9;
  OutputOpts eigs_out;
  CLI::App* eigs = app.add_subcommand("eigs", "Sorted eigenvalues with multiplicities");
  eigs->add_option("--m", eigs_m, "Total degree m");
  eigs->add_option("--k", eigs_k, "Block size k, shorthand for --m 2k-1");
  eigs->add_option("--t", eigs_t, "Perturbation |t| as a rational p/q in [0,1)")->required();
  eigs->add_option("--mode", eigs_mode, "exact (assemble H_m) or numeric (chain blocks)")
      ->check(CLI::IsMember({"exact", "numeric"}));
  eigs->add_option("--tol", eigs_tol, "Multiplicity clustering tolerance")
      ->capture_default_str();
  add_output_flags(eigs, eigs_out);
  eigs->callback([&] { rc = run_eigs(eigs_m, eigs_k, eigs_t, eigs_mode, eigs_tol, eigs_out); });

  int bound_k = 0;
  std::string bound_t = "0";
  OutputOpts bound_out;
  CLI::App* bound =
      app.add_subcommand("bound", "Eigenvalue decay chain lambda_min <= det ratio <= envelopes");
  bound->add_option("--k", bound_k, "Block size k (space H_{2k-1})")->required();
  bound->add_option("--t", bound_t, "Perturbation |t| as a rational p/q in [0,1)")->required();
  add_output_flags(bound, bound_out);
  bound->callback([&] { rc = run_bound(bound_k, bound_t, bound_out); });

  int sweep_kmax = 0;
  std::string sweep_grid, sweep_parity = "odd";
  double sweep_tol = 1e-9;
  OutputOpts sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "Decay reports for k = 1..kmax over a t grid");
  sweep->add_option("--kmax,--k-max", sweep_kmax, "Largest block size k")->required();
  sweep->add_option("--t-grid", sweep_grid, "Grid lo:hi:step, each a rational or decimal")
      ->required();
  sweep->add_option("--parity", sweep_parity, "odd (H_{2k-1}) or even (H_{2k})")
      ->capture_default_str();
  sweep->add_option("--tol", sweep_tol, "Zero threshold for even-space kernels")
      ->capture_default_str();
  add_output_flags(sweep, sweep_out);
  sweep->callback(
      [&] { rc = run_sweep(sweep_kmax, sweep_grid, sweep_parity, sweep_tol, sweep_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
