#pragma once

// JSON state files.
//
// Pure state:
//   {"dimA": 3, "dimB": 3,
//    "amplitudes": [{"i": 1, "j": 1, "re": 0.577..., "im": 0.0}, ...]}
// Density matrix (upper triangle, Hermitian completion implied):
//   {"dim": 9, "dimA": 3, "dimB": 3,
//    "entries": [{"row": 1, "col": 1, "re": 0.111..., "im": 0.0}, ...]}
// Indices are 1-based. dimA/dimB may be omitted for a density matrix whose
// dim is a perfect square, in which case both sides get sqrt(dim).

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "qconc/errors.hpp"
#include "qconc/state_space.hpp"

namespace qconc {

using AnyState = std::variant<PureState, DensityMatrix>;

struct LoadOptions {
  bool normalize = false;  ///< rescale pure-state amplitudes / density trace
};

namespace detail {

inline std::size_t get_index(const nlohmann::json& rec, const char* key, std::size_t bound) {
  if (!rec.contains(key) || !rec[key].is_number_integer())
    throw invalid_state(std::string("record is missing integer field '") + key + "'");
  const auto v = rec[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > bound)
    throw invalid_state(std::string("field '") + key + "' = " + std::to_string(v) + " out of range 1.." +
                        std::to_string(bound));
  return static_cast<std::size_t>(v - 1);
}

inline cplx get_value(const nlohmann::json& rec) {
  auto num = [&](const char* key) {
    if (!rec.contains(key)) return 0.0;
    if (!rec[key].is_number()) throw invalid_state(std::string("field '") + key + "' is not a number");
    return rec[key].get<double>();
  };
  return {num("re"), num("im")};
}

inline std::size_t get_dim(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1)
    throw invalid_state(std::string("missing or invalid '") + key + "'");
  return doc[key].get<std::size_t>();
}

}  // namespace detail

inline PureState pure_state_from_json(const nlohmann::json& doc, const LoadOptions& opt = {}) {
  const std::size_t da = detail::get_dim(doc, "dimA");
  const std::size_t db = detail::get_dim(doc, "dimB");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) throw invalid_state("missing 'amplitudes' array");
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (const auto& rec : doc["amplitudes"]) {
    const auto i = detail::get_index(rec, "i", da);
    const auto j = detail::get_index(rec, "j", db);
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += detail::get_value(rec);
  }
  return opt.normalize ? PureState::normalized(std::move(m)) : PureState(std::move(m));
}

inline DensityMatrix density_from_json(const nlohmann::json& doc, const LoadOptions& opt = {}) {
  const std::size_t dim = detail::get_dim(doc, "dim");
  std::size_t da = 0, db = 0;
  if (doc.contains("dimA") || doc.contains("dimB")) {
    da = detail::get_dim(doc, "dimA");
    db = detail::get_dim(doc, "dimB");
    if (da * db != dim) throw invalid_state("dimA * dimB does not equal dim");
  } else {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (r * r != dim) throw invalid_state("dim is not a perfect square; give dimA and dimB");
    da = db = r;
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw invalid_state("missing 'entries' array");
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (const auto& rec : doc["entries"]) {
    const auto r = static_cast<Eigen::Index>(detail::get_index(rec, "row", dim));
    const auto c = static_cast<Eigen::Index>(detail::get_index(rec, "col", dim));
    if (r > c) throw invalid_state("density entries must be in the upper triangle (row <= col)");
    const cplx v = detail::get_value(rec);
    if (r == c && std::abs(v.imag()) > DensityMatrix::kHermitianTolerance)
      throw invalid_state("diagonal entry has an imaginary part");
    rho(r, c) = v;
    rho(c, r) = std::conj(v);
    if (r == c) rho(r, r) = v.real();
  }
  if (opt.normalize) {
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) throw normalization_error("density matrix has nonpositive trace");
    rho /= tr;
  }
  return DensityMatrix(std::move(rho), da, db);
}

inline AnyState state_from_json(const nlohmann::json& doc, const LoadOptions& opt = {}) {
  if (!doc.is_object()) throw invalid_state("state file must hold a JSON object");
  if (doc.contains("amplitudes")) return pure_state_from_json(doc, opt);
  if (doc.contains("entries")) return density_from_json(doc, opt);
  throw invalid_state("state file has neither 'amplitudes' nor 'entries'");
}

inline AnyState load_state(const std::string& path, const LoadOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) throw invalid_state("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_state("cannot parse '" + path + "': " + e.what());
  }
  return state_from_json(doc, opt);
}

/// Zero amplitudes are omitted.
inline nlohmann::json to_json(const PureState& ps) {
  nlohmann::json doc;
  doc["dimA"] = ps.dim_a();
  doc["dimB"] = ps.dim_b();
  doc["amplitudes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ps.dim_a(); ++i)
    for (std::size_t j = 0; j < ps.dim_b(); ++j) {
      const cplx a = ps(i, j);
      if (a == cplx(0.0)) continue;
      doc["amplitudes"].push_back({{"i", i + 1}, {"j", j + 1}, {"re", a.real()}, {"im", a.imag()}});
    }
  return doc;
}

inline nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json doc;
  doc["dim"] = rho.dim();
  doc["dimA"] = rho.dim_a();
  doc["dimB"] = rho.dim_b();
  doc["entries"] = nlohmann::json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = r; c < m.cols(); ++c) {
      if (m(r, c) == cplx(0.0)) continue;
      doc["entries"].push_back({{"row", r + 1}, {"col", c + 1}, {"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    }
  return doc;
}

template <typename State>
void save_state(const State& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw invalid_state("cannot write '" + path + "'");
  out << to_json(s).dump(2) << '\n';
}

}  // namespace qconc
