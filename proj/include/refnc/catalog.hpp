#pragma once

/**
 * @file catalog.hpp
 * @brief Generator matrices for named groups.
 *
 * Names carry their parameters after ':' ("mu2^n:3", "G(m,p,n):2,1,3",
 * "binary-dihedral:2"). A few aliases are accepted: "G(2,1,3)",
 * "S3-refl", "S4-perm", "binary-dihedral-2", "cyclic-sl2-3".
 *
 *   mu2^n:k              k sign changes diag(1,..,-1,..,1)
 *   Sn:n[,perm|refl]     S_n as n x n permutation matrices (default) or on
 *                        C^n / (1,...,1), basis e_1..e_{n-1}
 *   G(m,p,n):m,p,n       monomial group, entries m-th roots of unity whose
 *                        product is an (m/p)-th root of unity
 *   binary-dihedral:m    order 4m in SL(2), m >= 2
 *   binary-tetrahedral   order 24
 *   binary-octahedral    order 48
 *   binary-icosahedral   order 120
 *   cyclic-sl2:n         diag(zeta_n, zeta_n^-1)
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "refnc/cyclotomic.hpp"
#include "refnc/error.hpp"
#include "refnc/matrix.hpp"

namespace refnc {

struct CatalogGroup {
  std::string name;
  int dim = 0;
  std::vector<Matrix> generators;
};

namespace detail {

inline std::vector<long> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw InvalidArgument("catalog: bad parameter list for " + std::string(what));
    for (char c : cur) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("catalog: bad parameter '" + cur + "' for " + std::string(what));
    }
    out.push_back(std::stol(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ' ') continue;
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

inline Matrix transposition(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m = Matrix::identity(n);
  m(i, i) = CycNum();
  m(j, j) = CycNum();
  m(i, j) = CycNum(1);
  m(j, i) = CycNum(1);
  return m;
}

inline CatalogGroup mu2n(long k) {
  if (k < 1) throw InvalidArgument("catalog: mu2^n needs n >= 1");
  CatalogGroup g{"mu2^n:" + std::to_string(k), static_cast<int>(k), {}};
  for (long i = 0; i < k; ++i) {
    Matrix m = Matrix::identity(static_cast<std::size_t>(k));
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = CycNum(-1);
    g.generators.push_back(m);
  }
  return g;
}

inline CatalogGroup symmetric(long n, bool reflection) {
  if (n < 2) throw InvalidArgument("catalog: Sn needs n >= 2");
  CatalogGroup g;
  g.name = "Sn:" + std::to_string(n) + (reflection ? ",refl" : ",perm");
  const std::size_t un = static_cast<std::size_t>(n);
  if (!reflection) {
    g.dim = static_cast<int>(n);
    for (std::size_t i = 0; i + 1 < un; ++i) g.generators.push_back(transposition(un, i, i + 1));
    return g;
  }
  const std::size_t d = un - 1;
  g.dim = static_cast<int>(d);
  for (std::size_t i = 0; i + 1 < d; ++i) g.generators.push_back(transposition(d, i, i + 1));
  // (n-1 n): e_{n-1} -> e_n = -(e_1 + ... + e_{n-1})
  Matrix last = Matrix::identity(d);
  for (std::size_t i = 0; i < d; ++i) last(i, d - 1) = CycNum(-1);
  g.generators.push_back(last);
  return g;
}

inline CatalogGroup imprimitive(long m, long p, long n) {
  if (m < 1 || p < 1 || n < 1 || m % p != 0) throw InvalidArgument("catalog: G(m,p,n) needs p | m and m, n >= 1");
  CatalogGroup g;
  g.name = "G(m,p,n):" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n);
  const std::size_t un = static_cast<std::size_t>(n);
  g.dim = static_cast<int>(n);
  for (std::size_t i = 0; i + 1 < un; ++i) g.generators.push_back(transposition(un, i, i + 1));
  if (p > 1 && n > 1) {
    Matrix s = Matrix::identity(un);
    s(0, 0) = CycNum();
    s(1, 1) = CycNum();
    s(0, 1) = CycNum::zeta(m, -1);
    s(1, 0) = CycNum::zeta(m, 1);
    g.generators.push_back(s);
  }
  if (p < m) {
    Matrix t = Matrix::identity(un);
    t(0, 0) = CycNum::zeta(m, p);
    g.generators.push_back(t);
  }
  if (g.generators.empty()) g.generators.push_back(Matrix::identity(un));
  return g;
}

inline Matrix two_by_two(CycNum a, CycNum b, CycNum c, CycNum d) {
  return Matrix::from_rows({{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
}

inline CatalogGroup cyclic_sl2(long n) {
  if (n < 1) throw InvalidArgument("catalog: cyclic-sl2 needs n >= 1");
  return {"cyclic-sl2:" + std::to_string(n), 2, {Matrix::diagonal({CycNum::zeta(n, 1), CycNum::zeta(n, -1)})}};
}

inline CatalogGroup binary_dihedral(long m) {
  if (m < 2) throw InvalidArgument("catalog: binary-dihedral needs m >= 2 (order 4m)");
  return {"binary-dihedral:" + std::to_string(m),
          2,
          {Matrix::diagonal({CycNum::zeta(2 * m, 1), CycNum::zeta(2 * m, -1)}),
           two_by_two(0, 1, -1, 0)}};
}

inline std::vector<Matrix> tetrahedral_generators() {
  const CycNum i = CycNum::zeta(4);
  const CycNum half = CycNum(Rational(1, 2));
  // quaternion units i, j and (-1 + i + j + k) / 2
  return {Matrix::diagonal({i, -i}), two_by_two(0, 1, -1, 0),
          two_by_two(half * (i - 1), half * (i + 1), half * (i - 1), half * (-i - 1))};
}

inline CatalogGroup binary_tetrahedral() { return {"binary-tetrahedral", 2, tetrahedral_generators()}; }

inline CatalogGroup binary_octahedral() {
  auto gens = tetrahedral_generators();
  gens.push_back(Matrix::diagonal({CycNum::zeta(8, 1), CycNum::zeta(8, -1)}));
  return {"binary-octahedral", 2, gens};
}

inline CatalogGroup binary_icosahedral() {
  // Klein's generators over Q(zeta_5): T = diag(z^3, z^2),
  // S = -(1/sqrt5) [[z - z^4, z^2 - z^3], [z^2 - z^3, z^4 - z]]
  auto z = [](long k) { return CycNum::zeta(5, k); };
  const CycNum sqrt5 = z(1) + z(4) - z(2) - z(3);
  const CycNum scale = -(sqrt5 / CycNum(5));
  const CycNum a = z(1) - z(4);
  const CycNum b = z(2) - z(3);
  return {"binary-icosahedral", 2,
          {Matrix::diagonal({z(3), z(2)}), two_by_two(scale * a, scale * b, scale * b, -(scale * a))}};
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

inline bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace detail

/// Generators of a named group (see file comment for the accepted names).
inline CatalogGroup catalog(std::string_view spec) {
  using namespace detail;
  const std::string s = strip_spaces(spec);
  std::string head = s;
  std::string params;
  // "G(m,p,n):..." has a ':' after the parenthesis; split at the last ':'.
  if (auto pos = s.rfind(':'); pos != std::string::npos) {
    head = s.substr(0, pos);
    params = s.substr(pos + 1);
  }
  auto one_param = [&](std::string_view what) {
    auto v = parse_int_list(params, what);
    if (v.size() != 1) throw InvalidArgument("catalog: " + std::string(what) + " takes one parameter");
    return v[0];
  };

  if (head == "mu2^n") return mu2n(one_param("mu2^n"));
  if (head == "Sn") {
    std::string kind = "perm";
    std::string nums = params;
    if (auto comma = params.find(','); comma != std::string::npos) {
      kind = params.substr(comma + 1);
      nums = params.substr(0, comma);
    }
    if (kind != "perm" && kind != "refl") throw InvalidArgument("catalog: Sn representation must be perm or refl");
    auto v = parse_int_list(nums, "Sn");
    if (v.size() != 1) throw InvalidArgument("catalog: Sn takes one size parameter");
    return symmetric(v[0], kind == "refl");
  }
  if (head == "G(m,p,n)") {
    auto v = parse_int_list(params, "G(m,p,n)");
    if (v.size() != 3) throw InvalidArgument("catalog: G(m,p,n) takes three parameters");
    return imprimitive(v[0], v[1], v[2]);
  }
  if (head == "binary-dihedral") return binary_dihedral(one_param("binary-dihedral"));
  if (head == "cyclic-sl2") return cyclic_sl2(one_param("cyclic-sl2"));
  if (!params.empty()) throw InvalidArgument("catalog: unknown group '" + s + "'");

  if (s == "binary-tetrahedral") return binary_tetrahedral();
  if (s == "binary-octahedral") return binary_octahedral();
  if (s == "binary-icosahedral") return binary_icosahedral();
  if (starts_with(s, "G(") && s.back() == ')') {
    auto v = parse_int_list(s.substr(2, s.size() - 3), "G(m,p,n)");
    if (v.size() != 3) throw InvalidArgument("catalog: G(m,p,n) takes three parameters");
    return imprimitive(v[0], v[1], v[2]);
  }
  if (starts_with(s, "binary-dihedral-")) return binary_dihedral(parse_int_list(s.substr(16), "binary-dihedral")[0]);
  if (starts_with(s, "cyclic-sl2-")) return cyclic_sl2(parse_int_list(s.substr(11), "cyclic-sl2")[0]);
  if (s.size() >= 2 && s[0] == 'S' && std::isdigit(static_cast<unsigned char>(s[1]))) {
    std::size_t end = 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    const long n = std::stol(s.substr(1, end - 1));
    const std::string rest = s.substr(end);
    if (rest.empty() || rest == "-perm") return symmetric(n, false);
    if (rest == "-refl") return symmetric(n, true);
  }
  throw InvalidArgument("catalog: unknown group '" + s + "'");
}

}  // namespace refnc
