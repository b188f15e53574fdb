#pragma once

// Command-line front-end. run() is kept free of process-global state so the
// test suite can drive it in-process.
//
// Exit codes: 0 success, 1 domain error (bad state file, unnormalized input,
// numerical failure), 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconc/qconc.hpp"

namespace qconc::cli {

enum class Format { text, csv, json };

/// 12 significant digits; negative zero printed as 0.
inline std::string num(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Scientific with one decimal and an unpadded exponent: 0.0e0, 1.5e-13.
inline std::string sci(double x) {
  if (x == 0.0) return "0.0e0";
  const int e = static_cast<int>(std::floor(std::log10(std::abs(x))));
  double m = x / std::pow(10.0, e);
  int exp = e;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.1f", m);
  if (std::string(buf) == "10.0" || std::string(buf) == "-10.0") {
    m /= 10.0;
    ++exp;
    std::snprintf(buf, sizeof buf, "%.1f", m);
  }
  return std::string(buf) + "e" + std::to_string(exp);
}

inline std::string cnum(cplx z) {
  if (z.imag() == 0.0 || std::abs(z.imag()) < 1e-15) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

struct StateSource {
  std::string catalog_name;
  std::string file;
  bool normalize = false;

  void add_to(CLI::App* cmd) {
    auto* s = cmd->add_option("--state", catalog_name, "catalog state name (see `catalog`)");
    auto* f = cmd->add_option("--file", file, "JSON state file");
    s->excludes(f);
    cmd->add_flag("--normalize", normalize, "rescale an unnormalized input instead of rejecting it");
  }

  AnyState load() const {
    if (!catalog_name.empty()) return catalog_state(catalog_name);
    if (!file.empty()) return load_state(file, {normalize});
    throw CLI::ValidationError("state", "one of --state or --file is required");
  }

  PureState load_pure() const {
    auto s = load();
    if (auto* p = std::get_if<PureState>(&s)) return *p;
    throw invalid_state("this command needs a pure state; '" + file + "' holds a density matrix");
  }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(&out), err_(&err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Concurrence vectors for bipartite qudit entanglement"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("-o,--out", out_path, "write results to this path instead of stdout");

    std::function<void()> action;

    auto* cat = app.add_subcommand("catalog", "list built-in states and subspace bases");
    cat->callback([&] { action = [&] { catalog_cmd(); }; });

    StateSource conc_src;
    auto* conc = app.add_subcommand("concurrence", "concurrence vector of a pure state");
    conc_src.add_to(conc);
    conc->callback([&] { action = [&] { concurrence_cmd(conc_src.load_pure()); }; });

    StateSource ent_src;
    auto* ent = app.add_subcommand("entropy", "von Neumann / linear entropy of a pure state");
    ent_src.add_to(ent);
    ent->callback([&] { action = [&] { entropy_cmd(ent_src.load_pure()); }; });

    StateSource sec_src;
    auto* sec = app.add_subcommand("secular-check", "residuals of the reduced-density characteristic polynomials");
    sec_src.add_to(sec);
    sec->callback([&] { action = [&] { secular_cmd(sec_src.load_pure()); }; });

    StateSource mix_src;
    std::optional<double> werner;
    auto* mix = app.add_subcommand("mixed", "concurrence vector of a density matrix");
    mix_src.add_to(mix);
    mix->add_option("--werner", werner, "two-qubit Werner state with this p")->check(CLI::Range(0.0, 1.0));
    mix->callback([&] {
      action = [&] {
        if (werner) return mixed_cmd(werner_state(*werner));
        auto s = mix_src.load();
        if (auto* p = std::get_if<PureState>(&s)) return mixed_cmd(make_density(*p));
        mixed_cmd(std::get<DensityMatrix>(s));
      };
    });

    std::string surf_basis;
    std::size_t n_theta = 61, n_phi = 120;
    auto* surf = app.add_subcommand("surface", "concurrence surface r(theta, phi) of a 3-state subspace");
    surf->add_option("--basis", surf_basis, "named basis (see `catalog`)")->required();
    surf->add_option("--n-theta", n_theta, "polar samples, poles included")->check(CLI::Range(2, 1 << 20));
    surf->add_option("--n-phi", n_phi, "azimuthal samples")->check(CLI::Range(2, 1 << 20));
    surf->callback([&] { action = [&] { surface_cmd(surf_basis, n_theta, n_phi); }; });

    std::string vol_basis;
    std::size_t vol_grid = 400;
    auto* vol = app.add_subcommand("volume", "volume enclosed by a concurrence surface");
    vol->add_option("--basis", vol_basis, "named basis (see `catalog`)")->required();
    vol->add_option("--grid", vol_grid, "samples per angle")->check(CLI::Range(4, 1 << 16));
    vol->callback([&] { action = [&] { volume_cmd(vol_basis, vol_grid); }; });

    EdgeScanOptions edge_opt;
    std::string view = "normalized";
    auto* edge = app.add_subcommand("edge-scan", "scan p(psi+_1+psi+_2+psi+_3) + q(|11>+|22>+|33>) for separable states");
    edge->add_option("--points", edge_opt.ellipse_points, "samples on the normalization ellipse")
        ->check(CLI::Range(3, 1 << 22));
    edge->add_option("--raw-points", edge_opt.raw_points, "samples per axis of the raw (p, q) grid")
        ->check(CLI::Range(2, 1 << 12));
    edge->add_option("--raw-extent", edge_opt.raw_extent, "raw grid covers [0, extent]^2")
        ->check(CLI::PositiveNumber);
    edge->add_option("--view", view, "rows to emit")
        ->check(CLI::IsMember({"normalized", "raw", "locus", "raw-locus"}));
    edge->callback([&] { action = [&] { edge_cmd(edge_opt, view); }; });

    std::size_t bound_points = 50, bound_grid = 400;
    auto* bounds = app.add_subcommand("entropy-bounds", "infimum / supremum of the qutrit entropy versus |C|");
    bounds->add_option("--points", bound_points, "|C| samples on [0, sqrt(4/3)]")->check(CLI::Range(2, 1 << 20));
    bounds->add_option("--grid", bound_grid, "det(rho_B) samples per |C|")->check(CLI::Range(2, 1 << 20));
    bounds->callback([&] { action = [&] { bounds_cmd(bound_points, bound_grid); }; });

    std::size_t alg_dim = 3;
    auto* alg = app.add_subcommand("verify-algebra", "check the commutation relations of the ladder operators");
    alg->add_option("--dim", alg_dim, "dimension N of the fundamental representation")->required();
    alg->callback([&] { action = [&] { algebra_cmd(alg_dim); }; });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e, *out_, *err_) == 0 ? 0 : 2;
    }

    format_ = format == "csv" ? Format::csv : (format == "json" ? Format::json : Format::text);
    std::ofstream file;
    std::ostream* saved = out_;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        *err_ << "error: cannot write '" << out_path << "'\n";
        return 1;
      }
      out_ = &file;
    }
    int code = 0;
    try {
      action();
    } catch (const CLI::ValidationError& e) {
      *err_ << "error: " << e.what() << "\n";
      code = 2;
    } catch (const qconc::error& e) {
      *err_ << "error: " << e.what() << "\n";
      code = 1;
    }
    out_ = saved;
    return code;
  }

 private:
  std::ostream& out() { return *out_; }

  void emit_json(const nlohmann::json& j) { out() << j.dump(2) << "\n"; }

  // -------------------------------------------------------------------------

  void catalog_cmd() {
    if (format_ == Format::json) {
      nlohmann::json j;
      for (const auto& e : catalog())
        j["states"].push_back({{"name", e.name},
                               {"dimA", e.state.dim_a()},
                               {"dimB", e.state.dim_b()},
                               {"description", e.description},
                               {"norm_sq", norm_sq(concurrence_vector_pure(e.state))}});
      for (const auto& [name, members] : named_bases()) j["bases"][name] = members;
      return emit_json(j);
    }
    if (format_ == Format::csv) {
      out() << "name,dimA,dimB,norm_sq\n";
      for (const auto& e : catalog())
        out() << e.name << "," << e.state.dim_a() << "," << e.state.dim_b() << ","
              << num(norm_sq(concurrence_vector_pure(e.state))) << "\n";
      return;
    }
    out() << "states:\n";
    for (const auto& e : catalog())
      out() << "  " << e.name << "  " << e.state.dim_a() << "x" << e.state.dim_b() << "  |C|^2 = "
            << num(norm_sq(concurrence_vector_pure(e.state))) << "  " << e.description << "\n";
    out() << "bases:\n";
    for (const auto& [name, members] : named_bases()) {
      out() << "  " << name << " = {";
      for (std::size_t k = 0; k < members.size(); ++k) out() << (k ? ", " : "") << members[k];
      out() << "}\n";
    }
  }

  void print_vector(const ConcurrenceVector& cv) {
    const auto roots_a = positive_roots(cv.dim_a);
    const auto roots_b = positive_roots(cv.dim_b);
    const double n2 = norm_sq(cv);
    if (format_ == Format::json) {
      nlohmann::json j;
      j["dimA"] = cv.dim_a;
      j["dimB"] = cv.dim_b;
      j["components"] = nlohmann::json::array();
      for (std::size_t k = 0; k < cv.size(); ++k)
        j["components"].push_back({{"alpha", roots_a[cv.index[k].alpha].label()},
                                   {"beta", roots_b[cv.index[k].beta].label()},
                                   {"re", cv[k].real()},
                                   {"im", cv[k].imag()}});
      j["norm_sq"] = n2;
      return emit_json(j);
    }
    if (format_ == Format::csv) {
      out() << "slot,alpha,beta,re,im\n";
      for (std::size_t k = 0; k < cv.size(); ++k)
        out() << k + 1 << "," << roots_a[cv.index[k].alpha].label() << "," << roots_b[cv.index[k].beta].label() << ","
              << num(cv[k].real()) << "," << num(cv[k].imag()) << "\n";
      return;
    }
    out() << "C = (";
    for (std::size_t k = 0; k < cv.size(); ++k) out() << (k ? ", " : "") << cnum(cv[k]);
    out() << ")\n";
    for (std::size_t k = 0; k < cv.size(); ++k)
      out() << "  " << k + 1 << "  (" << roots_a[cv.index[k].alpha].label() << ", " << roots_b[cv.index[k].beta].label()
            << ")  " << cnum(cv[k]) << "\n";
    out() << "|C|^2 = " << num(n2) << "\n";
    out() << "|C|   = " << num(std::sqrt(n2)) << "\n";
  }

  void concurrence_cmd(const PureState& ps) { print_vector(concurrence_vector_pure(ps)); }

  void mixed_cmd(const DensityMatrix& rho) { print_vector(concurrence_vector_mixed(rho)); }

  void entropy_cmd(const PureState& ps) {
    const auto r = entropy_report(ps);
    const double c2 = norm_sq(concurrence_vector_pure(ps));
    std::optional<double> from_norm;
    if (std::min(ps.dim_a(), ps.dim_b()) == 2)
      from_norm = entropy_from_norm_qubit(std::min(1.0, std::sqrt(c2)));
    else if (ps.dim_a() == 3 && ps.dim_b() == 3)
      from_norm = entropy_from_norm_qutrit(std::sqrt(c2), r.det_rho_b);
    if (format_ == Format::json) {
      nlohmann::json j{{"von_neumann", r.von_neumann},
                       {"linear", r.linear},
                       {"schmidt_squares", r.schmidt_squares},
                       {"det_rho_B", r.det_rho_b},
                       {"norm_sq", c2}};
      if (from_norm) j["von_neumann_from_norm"] = *from_norm;
      return emit_json(j);
    }
    if (format_ == Format::csv) {
      out() << "quantity,value\n"
            << "von_neumann," << num(r.von_neumann) << "\nlinear," << num(r.linear) << "\ndet_rho_B,"
            << num(r.det_rho_b) << "\nnorm_sq," << num(c2) << "\n";
      if (from_norm) out() << "von_neumann_from_norm," << num(*from_norm) << "\n";
      return;
    }
    out() << "von Neumann entropy  " << num(r.von_neumann) << " bits\n";
    if (from_norm) out() << "  from |C| relation  " << num(*from_norm) << " bits\n";
    out() << "linear entropy       " << num(r.linear) << "   (|C|^2/2 = " << num(c2 / 2) << ")\n";
    out() << "kappa^2              ";
    for (double x : r.schmidt_squares) out() << " " << num(x);
    out() << "\ndet rho_B            " << num(r.det_rho_b) << "\n";
  }

  void secular_cmd(const PureState& ps) {
    const auto r = check_secular(ps);
    auto poly = [&](const SecularSide& s) {
      std::string txt;
      for (std::size_t k = 0; k < s.coefficients.size(); ++k) txt += (k ? " " : "") + num(s.coefficients[k]);
      return txt;
    };
    if (format_ == Format::json) {
      return emit_json({{"norm_sq", r.norm_c_sq},
                        {"side_a", {{"coefficients", r.side_a.coefficients}, {"roots", r.side_a.roots}, {"residual", r.side_a.residual}}},
                        {"side_b", {{"coefficients", r.side_b.coefficients}, {"roots", r.side_b.roots}, {"residual", r.side_b.residual}}},
                        {"closed_form_residual", r.closed_form_residual},
                        {"max_residual", r.max_residual}});
    }
    if (format_ == Format::csv) {
      out() << "side,residual\nA," << sci(r.side_a.residual) << "\nB," << sci(r.side_b.residual) << "\nclosed_form,"
            << sci(r.closed_form_residual) << "\nmax," << sci(r.max_residual) << "\n";
      return;
    }
    out() << "|C|^2 = " << num(r.norm_c_sq) << "\n";
    out() << "rho_A polynomial: " << poly(r.side_a) << "   residual " << sci(r.side_a.residual) << "\n";
    out() << "rho_B polynomial: " << poly(r.side_b) << "   residual " << sci(r.side_b.residual) << "\n";
    if (std::min(ps.dim_a(), ps.dim_b()) == 2)
      out() << "kappa^2 = (1 +- sqrt(1-|C|^2))/2 residual " << sci(r.closed_form_residual) << "\n";
    out() << "max residual " << sci(r.max_residual) << "\n";
  }

  void surface_cmd(const std::string& basis_name, std::size_t n_theta, std::size_t n_phi) {
    const auto basis = named_subspace(basis_name);
    const auto samples = surface(basis, n_theta, n_phi);
    if (format_ == Format::json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& s : samples) j.push_back({{"theta", s.theta}, {"phi", s.phi}, {"radius", s.radius}});
      return emit_json(j);
    }
    out() << "theta,phi,radius\n";
    for (const auto& s : samples) out() << num(s.theta) << "," << num(s.phi) << "," << num(s.radius) << "\n";
  }

  void volume_cmd(const std::string& basis_name, std::size_t grid) {
    const auto basis = named_subspace(basis_name);
    const double v = enclosed_volume(basis, grid, grid);
    const double coarse = enclosed_volume(basis, grid / 2, grid / 2);
    const double unit = 4.0 * std::numbers::pi / 3.0;
    if (format_ == Format::json)
      return emit_json({{"basis", basis_name}, {"grid", grid}, {"volume", v}, {"delta_half_grid", v - coarse}, {"ratio_unit_ball", v / unit}});
    if (format_ == Format::csv) {
      out() << "basis,grid,volume,delta_half_grid,ratio_unit_ball\n"
            << basis_name << "," << grid << "," << num(v) << "," << num(v - coarse) << "," << num(v / unit) << "\n";
      return;
    }
    out() << "volume " << num(v) << "  (grid " << grid << "x" << grid << ")\n";
    out() << "convergence delta vs " << grid / 2 << "x" << grid / 2 << ": " << sci(v - coarse) << "\n";
    out() << "ratio to unit ball " << num(v / unit) << "\n";
  }

  void edge_cmd(const EdgeScanOptions& opt, const std::string& view) {
    const auto scan = edge_scan(su3_hexad_edge_family(), opt);
    const std::vector<EdgePoint>* rows = &scan.normalized;
    if (view == "raw") rows = &scan.raw;
    if (view == "locus") rows = &scan.normalized_locus;
    if (view == "raw-locus") rows = &scan.raw_locus;
    if (format_ == Format::text) {
      out() << "normalized zero locus (|C| < " << sci(opt.threshold) << "):\n";
      for (const auto& p : scan.normalized_locus)
        out() << "  p = " << num(p.p) << "  q = " << num(p.q) << "  p/q = " << num(p.p / p.q) << "  |C| = " << sci(p.norm) << "\n";
      out() << "raw-grid zero locus: " << scan.raw_locus.size() << " points";
      if (!scan.raw_locus.empty()) {
        double worst = 0.0;
        for (const auto& p : scan.raw_locus)
          if (p.q > 0) worst = std::max(worst, std::abs(p.p / p.q - std::sqrt(2.0)));
        out() << ", max |p/q - sqrt2| = " << sci(worst);
      }
      out() << "\n";
      return;
    }
    if (format_ == Format::json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& p : *rows) j.push_back({{"p", p.p}, {"q", p.q}, {"norm", p.norm}});
      return emit_json(j);
    }
    out() << "p,q,norm\n";
    for (const auto& p : *rows) out() << num(p.p) << "," << num(p.q) << "," << num(p.norm) << "\n";
  }

  void bounds_cmd(std::size_t points, std::size_t grid) {
    std::vector<std::array<double, 3>> rows;
    for (std::size_t k = 0; k < points; ++k) {
      const double c = kMaxQutritNorm * static_cast<double>(k) / static_cast<double>(points - 1);
      const auto b = entropy_bounds(c, grid);
      rows.push_back({c, b.infimum, b.supremum});
    }
    if (format_ == Format::json) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) j.push_back({{"norm", r[0]}, {"infimum", r[1]}, {"supremum", r[2]}});
      return emit_json(j);
    }
    out() << "norm,infimum,supremum\n";
    for (const auto& r : rows) out() << num(r[0]) << "," << num(r[1]) << "," << num(r[2]) << "\n";
  }

  void algebra_cmd(std::size_t dim) {
    const auto rep = verify_commutators(build_ladder_set(dim));
    if (format_ == Format::json) {
      nlohmann::json j{{"dim", dim}, {"relations", rep.relations_checked}, {"max_residual", rep.max_residual}};
      j["violations"] = nlohmann::json::array();
      for (const auto& v : rep.violations) j["violations"].push_back({{"relation", v.relation}, {"residual", v.residual}});
      j["signs"] = nlohmann::json::array();
      for (const auto& s : rep.signs) j["signs"].push_back({{"alpha", s.alpha}, {"beta", s.beta}, {"sum", s.sum}, {"sign", s.sign}});
      return emit_json(j);
    }
    if (format_ == Format::csv) {
      out() << "alpha,beta,sum,sign\n";
      for (const auto& s : rep.signs) out() << s.alpha << "," << s.beta << "," << s.sum << "," << s.sign << "\n";
      return;
    }
    out() << "A" << dim - 1 << ": " << rep.relations_checked << " relations checked\n";
    for (const auto& v : rep.violations) out() << "  violated: " << v.relation << "  residual " << sci(v.residual) << "\n";
    out() << "max residual " << sci(rep.max_residual) << "\n";
    if (!rep.ok()) throw numerical_failure("commutation relations violated", rep.max_residual);
  }

  std::ostream* out_;
  std::ostream* err_;
  Format format_ = Format::text;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace qconc::cli
