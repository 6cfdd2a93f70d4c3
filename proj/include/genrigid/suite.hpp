#ifndef GENRIGID_SUITE_HPP
#define GENRIGID_SUITE_HPP

// The shipped finite-group representations.

#include "genrigid/rep_providers.hpp"

namespace genrigid::suite {

inline Matrix<Exact> permutation_matrix(const std::vector<std::size_t>& p) {
  Matrix<Exact> m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = Exact(1);
  return m;
}

inline Matrix<Exact> mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> r;
  for (const auto& row : rows) r.emplace_back(row);
  Matrix<Exact> m(r.size(), r.front().size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = Exact(r[i][j]);
  return m;
}

/// S3 permuting coordinates of C^3, generated by (12) and (123).
inline MatrixRep<Exact> s3_permutation() {
  return group_closure<Exact>({permutation_matrix({1, 0, 2}), permutation_matrix({1, 2, 0})});
}

inline MatrixRep<Exact> s3_regular() {
  auto perm = s3_permutation();
  auto rep = regular_rep<Exact>(perm.group);
  rep.generators = perm.generators;
  return rep;
}

/// D4 on C^2 + C^2: r -> R (+) -R, s -> S (+) S with R the quarter turn.
inline MatrixRep<Exact> d4_twisted() {
  Matrix<Exact> r = direct_sum(mat({{0, -1}, {1, 0}}), mat({{0, 1}, {-1, 0}}));
  Matrix<Exact> s = direct_sum(mat({{1, 0}, {0, -1}}), mat({{1, 0}, {0, -1}}));
  return group_closure<Exact>({r, s});
}

/// Q8 on C^2 (+) C: i -> diag(i, -i) (+) 1, j -> [[0,1],[-1,0]] (+) 1.
inline MatrixRep<Exact> q8_plus_trivial() {
  Matrix<Exact> i(3, 3), j = mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}});
  i(0, 0) = imag_unit();
  i(1, 1) = -imag_unit();
  i(2, 2) = Exact(1);
  return group_closure<Exact>({i, j});
}

/// A4 as rotations of the cube's inscribed tetrahedron on C^3.
inline MatrixRep<Exact> a4_rotation() {
  return group_closure<Exact>({mat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), permutation_matrix({1, 2, 0})});
}

struct NamedRep {
  std::string name;
  MatrixRep<Exact> rep;
};

inline std::vector<NamedRep> all() {
  return {{"s3-perm", s3_permutation()},
          {"s3-regular", s3_regular()},
          {"d4-twist", d4_twisted()},
          {"q8-plus-trivial", q8_plus_trivial()},
          {"a4-rotation", a4_rotation()}};
}

}  // namespace genrigid::suite

#endif  // GENRIGID_SUITE_HPP
