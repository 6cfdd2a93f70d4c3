#ifndef GENRIGID_IO_HPP
#define GENRIGID_IO_HPP

// JSON formats: matrices ({"mode", "rows"}), group files, subspace files,
// algebra files, and provider specs "finite:<file>" / "sl2:<n>".

#include "genrigid/algebra_gen.hpp"
#include "genrigid/rep_providers.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>

#include "json.hpp"

namespace genrigid {

using json = nlohmann::json;

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

inline Rational decimal_exact(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>(), std::chars_format::fixed);
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

template <class S>
S parse_scalar(const json& j) {
  if (j.is_string()) return Field<S>::parse(j.get<std::string>());
  if (j.is_number_integer()) return Field<S>::from_int(j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    if constexpr (Field<S>::exact) {
      return Field<S>::from_parts(decimal_exact(j[0]), decimal_exact(j[1]));
    } else {
      return Complex(j[0].get<double>(), j[1].get<double>());
    }
  }
  if (j.is_number()) {
    if constexpr (Field<S>::exact)
      return Field<S>::from_parts(decimal_exact(j), Rational(0));
    else
      return Complex(j.get<double>(), 0.0);
  }
  throw InputError("unrecognized scalar " + j.dump());
}

template <class S>
json scalar_to_json(const S& x) {
  if constexpr (Field<S>::exact)
    return to_string(x);
  else
    return json::array({x.real(), x.imag()});
}

/// Accepts an array of rows, or {"mode": ..., "rows": [...]}.
template <class S>
Matrix<S> parse_matrix(const json& j) {
  const json& rows = j.is_object() ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a non-empty array of rows");
  const std::size_t r = rows.size(), c = rows[0].size();
  if (c == 0) throw InputError("matrix rows must be non-empty");
  Matrix<S> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = parse_scalar<S>(rows[i][k]);
  }
  return m;
}

template <class S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(row);
  }
  return {{"mode", std::string(Field<S>::exact ? "exact" : "float")}, {"rows", rows}};
}

inline void require_exact_mode(const json& j, const std::string& what) {
  if (!j.contains("mode")) return;
  auto m = parse_mode(j.at("mode").get<std::string>());
  if (m == ScalarMode::FloatComplex) throw InputError(what + " must be in an exact mode");
}

struct GroupFile {
  std::string name;
  MatrixRep<Exact> rep;
};

/// {"matrix_generators": [...]} or {"multiplication_table": [...],
/// "representation": "regular" | [one image per element]}.
inline GroupFile parse_group(const json& j, std::size_t cap = 10000) {
  if (!j.is_object()) throw InputError("group file must be a JSON object");
  require_exact_mode(j, "group data");
  GroupFile g;
  g.name = j.value("name", std::string("finite"));
  if (j.contains("matrix_generators")) {
    std::vector<Matrix<Exact>> gens;
    for (const auto& m : j.at("matrix_generators")) gens.push_back(parse_matrix<Exact>(m));
    g.rep = group_closure(gens, cap);
  } else if (j.contains("multiplication_table")) {
    auto table = j.at("multiplication_table").get<std::vector<std::vector<std::size_t>>>();
    auto grp = std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(table)));
    if (!j.contains("representation")) throw InputError("multiplication_table needs a representation");
    const json& r = j.at("representation");
    if (r.is_string()) {
      if (r.get<std::string>() != "regular") throw InputError("unknown representation '" + r.get<std::string>() + "'");
      g.rep = regular_rep<Exact>(grp);
    } else {
      MatrixRep<Exact> rep;
      rep.group = grp;
      for (const auto& m : r) rep.images.push_back(parse_matrix<Exact>(m));
      rep.generators.resize(rep.images.size());
      std::iota(rep.generators.begin(), rep.generators.end(), 0);
      g.rep = std::move(rep);
    }
  } else {
    throw InputError("group file needs matrix_generators or multiplication_table");
  }
  g.rep.validate();
  return g;
}

inline GroupFile load_group_file(const std::filesystem::path& path) { return parse_group(read_json_file(path)); }

struct ProviderHandle {
  std::unique_ptr<RepProvider> provider;
  std::optional<MatrixRep<Exact>> rep;  // finite groups only
  std::string spec;
};

/// "finite:<file>" (relative to base_dir) or "sl2:<n>".
inline ProviderHandle make_provider(const std::string& spec, const std::filesystem::path& base_dir = {}) {
  ProviderHandle h;
  h.spec = spec;
  if (spec.rfind("finite:", 0) == 0) {
    std::filesystem::path p = spec.substr(7);
    if (p.is_relative() && !base_dir.empty() && !std::filesystem::exists(p)) p = base_dir / p;
    auto g = load_group_file(p);
    h.rep = g.rep;
    h.provider = std::make_unique<FiniteGroupProvider>(g.rep, g.name);
  } else if (spec.rfind("sl2:", 0) == 0) {
    std::string n = spec.substr(4);
    if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit)) throw InputError("sl2 provider needs sl2:<n>");
    h.provider = std::make_unique<SL2Provider>(std::stoul(n));
  } else {
    throw InputError("unknown provider spec '" + spec + "' (expected finite:<file> or sl2:<n>)");
  }
  return h;
}

/// A subspace is a list of basis vectors, or {"basis": [...]}.
inline Subspace<Exact> parse_subspace(const json& j, std::size_t ambient) {
  const json& b = j.is_object() ? j.at("basis") : j;
  if (!b.is_array()) throw InputError("subspace basis must be an array of vectors");
  std::vector<std::vector<Exact>> cols;
  for (const auto& v : b) {
    if (!v.is_array() || v.size() != ambient) throw InputError("basis vector length must equal dim V");
    std::vector<Exact> col;
    for (const auto& x : v) col.push_back(parse_scalar<Exact>(x));
    cols.push_back(std::move(col));
  }
  if (cols.empty()) throw InputError("zero subspace given");
  return Subspace<Exact>(from_columns(cols, ambient));
}

/// {"subspaces": [...], "targets": [[j, ell], ...]} or a single "basis".
inline std::vector<Subspace<Exact>> parse_subspaces(const json& j, std::size_t ambient) {
  require_exact_mode(j, "subspace data");
  std::vector<Subspace<Exact>> out;
  if (j.is_object() && j.contains("subspaces")) {
    for (const auto& s : j.at("subspaces")) out.push_back(parse_subspace(s, ambient));
  } else {
    out.push_back(parse_subspace(j, ambient));
  }
  return out;
}

template <class S>
json subspace_to_json(const Subspace<S>& w) {
  json basis = json::array();
  for (std::size_t c = 0; c < w.dim(); ++c) {
    json v = json::array();
    for (const auto& x : w.basis().col(c)) v.push_back(scalar_to_json(x));
    basis.push_back(v);
  }
  return basis;
}

/// {"builtin": "matrix", "blocks": [...]}, {"builtin": "square-zero", "n": n},
/// {"matrix_basis": [...], "involution": bool}, or
/// {"structure_constants": c[i][j][k], "unit": [...]}.
template <class S>
FinDimAlgebra<S> parse_algebra(const json& j, const Tolerance& tol = {}) {
  if (!j.is_object()) throw InputError("algebra must be a JSON object");
  if (j.contains("builtin")) {
    auto b = j.at("builtin").get<std::string>();
    if (b == "matrix") return block_matrix_algebra<S>(j.at("blocks").get<std::vector<std::size_t>>(), tol);
    if (b == "square-zero") return square_zero_algebra<S>(j.at("n").get<std::size_t>(), tol);
    throw InputError("unknown builtin algebra '" + b + "'");
  }
  if (j.contains("matrix_basis")) {
    std::vector<Matrix<S>> basis;
    for (const auto& m : j.at("matrix_basis")) basis.push_back(parse_matrix<S>(m));
    return FinDimAlgebra<S>::from_matrix_basis(std::move(basis), j.value("involution", false), tol);
  }
  if (j.contains("structure_constants")) {
    const json& c = j.at("structure_constants");
    std::vector<std::vector<std::vector<S>>> sc;
    for (const auto& ci : c) {
      std::vector<std::vector<S>> row;
      for (const auto& cij : ci) {
        std::vector<S> v;
        for (const auto& x : cij) v.push_back(parse_scalar<S>(x));
        row.push_back(std::move(v));
      }
      sc.push_back(std::move(row));
    }
    std::vector<S> unit;
    for (const auto& x : j.at("unit")) unit.push_back(parse_scalar<S>(x));
    return FinDimAlgebra<S>::from_structure_constants(sc, unit, tol);
  }
  throw InputError("algebra needs builtin, matrix_basis or structure_constants");
}

}  // namespace genrigid

#endif  // GENRIGID_IO_HPP
