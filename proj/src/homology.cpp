#include "cobkh/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cobkh/checked.hpp"
#include "cobkh/kh.hpp"

namespace cobkh {

Coeff coeff_from(const std::string& s) {
  if (s == "z" || s == "Z") return Coeff::Z;
  if (s == "f2" || s == "F2") return Coeff::F2;
  throw InputError("unknown coefficient ring '" + s + "' (expected z or f2)");
}

std::vector<std::int64_t> smith_invariants(IntMatrix m) {
  std::vector<std::int64_t> diag;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the remaining block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index j = t; j < cols; ++j)
      for (Eigen::Index i = t; i < rows; ++i)
        if (m(i, j) != 0 && (pi < 0 || std::abs(m(i, j)) < std::abs(m(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    m.row(t).swap(m.row(pi));
    m.col(t).swap(m.col(pj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const std::int64_t k = m(i, t) / m(t, t);
        for (Eigen::Index j = t; j < cols; ++j) m(i, j) = checked_add(m(i, j), -checked_mul(k, m(t, j)));
        if (m(i, t) != 0) {
          m.row(t).swap(m.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const std::int64_t k = m(t, j) / m(t, t);
        for (Eigen::Index i = t; i < rows; ++i) m(i, j) = checked_add(m(i, j), -checked_mul(k, m(i, t)));
        if (m(t, j) != 0) {
          m.col(t).swap(m.col(j));
          clean = false;
        }
      }
    }
    diag.push_back(std::abs(m(t, t)));
    ++t;
  }
  // diagonal -> invariant factors
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = std::gcd(diag[i], diag[j]);
      const std::int64_t l = checked_mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

int rank_f2(const IntMatrix& m) {
  std::vector<std::vector<char>> a(m.rows(), std::vector<char>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = static_cast<char>(m(i, j) & 1);
  int rank = 0;
  const int rows = static_cast<int>(m.rows());
  for (Eigen::Index j = 0; j < m.cols() && rank < rows; ++j) {
    int p = rank;
    while (p < rows && !a[p][j]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (int i = 0; i < rows; ++i)
      if (i != rank && a[i][j])
        for (Eigen::Index k = j; k < m.cols(); ++k) a[i][k] ^= a[rank][k];
    ++rank;
  }
  return rank;
}

namespace {

IntMatrix drop(const IntMatrix& m, Eigen::Index row, Eigen::Index col) {
  IntMatrix out(m.rows() - (row >= 0 ? 1 : 0), m.cols() - (col >= 0 ? 1 : 0));
  for (Eigen::Index i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Single-q slice of a complex.
struct Slice {
  std::map<int, int> dim;
  std::map<int, IntMatrix> d;
  int size(int n) const {
    auto it = dim.find(n);
    return it == dim.end() ? 0 : it->second;
  }
  IntMatrix diff(int n) const {
    auto it = d.find(n);
    return it != d.end() ? it->second : IntMatrix::Zero(size(n + 1), size(n));
  }
};

std::map<int, Slice> slices(const IntComplex& c) {
  std::map<int, Slice> out;
  std::map<int, std::map<int, std::vector<int>>> idx;  // q -> n -> basis indices
  for (const auto& [n, qs] : c.q)
    for (int i = 0; i < static_cast<int>(qs.size()); ++i) idx[qs[i]][n].push_back(i);
  for (const auto& [n, m] : c.d)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0 && c.q.at(n + 1)[i] != c.q.at(n)[j])
          throw std::logic_error("homology: differential is not q-homogeneous");
  for (const auto& [q, per] : idx) {
    Slice& s = out[q];
    for (const auto& [n, v] : per) s.dim[n] = static_cast<int>(v.size());
    for (const auto& [n, v] : per) {
      auto it = per.find(n + 1);
      if (it == per.end() || !c.d.count(n)) continue;
      const IntMatrix& m = c.d.at(n);
      IntMatrix b(it->second.size(), v.size());
      for (std::size_t i = 0; i < it->second.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) b(i, j) = m(it->second[i], v[j]);
      s.d[n] = std::move(b);
    }
  }
  return out;
}

void simplify_slice(Slice& s) {
  bool again = true;
  while (again) {
    again = false;
    for (auto& [n, m] : s.d) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index j = 0; j < m.cols() && pi < 0; ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          if (m(i, j) == 1 || m(i, j) == -1) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) continue;
      const std::int64_t v = m(pi, pj);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i == pi || m(i, pj) == 0) continue;
        const std::int64_t k = checked_mul(m(i, pj), v);  // v = 1/v
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          if (j != pj) m(i, j) = checked_add(m(i, j), -checked_mul(k, m(pi, j)));
      }
      const int nn = n;
      m = drop(m, pi, pj);
      if (auto it = s.d.find(nn - 1); it != s.d.end()) it->second = drop(it->second, pj, -1);
      if (auto it = s.d.find(nn + 1); it != s.d.end()) it->second = drop(it->second, -1, pi);
      --s.dim[nn];
      --s.dim[nn + 1];
      again = true;
      break;
    }
  }
}

}  // namespace

IntComplex gaussian_simplify(const IntComplex& c) {
  IntComplex out;
  for (auto& [q, s] : slices(c)) {
    simplify_slice(s);
    for (const auto& [n, k] : s.dim) {
      auto& qs = out.q[n];
      qs.insert(qs.end(), k, q);
    }
  }
  // reassemble block-diagonal differentials in the same slice order
  std::map<int, int> row_off, col_off;
  std::map<int, std::vector<std::pair<int, IntMatrix>>> blocks;
  for (auto& [q, s] : slices(c)) {
    simplify_slice(s);
    for (const auto& [n, m] : s.d) {
      if (m.size() == 0) continue;
      blocks[n].emplace_back(q, m);
    }
  }
  for (const auto& [n, qs] : out.q) {
    IntMatrix m = IntMatrix::Zero(out.size(n + 1), out.size(n));
    auto first = [&](int deg, int q) {
      const auto& v = out.q[deg];
      return static_cast<Eigen::Index>(std::find(v.begin(), v.end(), q) - v.begin());
    };
    for (const auto& [q, b] : blocks[n]) m.block(first(n + 1, q), first(n, q), b.rows(), b.cols()) = b;
    out.d.emplace(n, std::move(m));
  }
  return out;
}

HomologyTable homology(const IntComplex& c, Coeff coeff, bool simplify) {
  HomologyTable table;
  for (auto& [q, s] : slices(c)) {
    if (simplify) simplify_slice(s);
    std::map<int, std::int64_t> rank;
    std::map<int, std::vector<std::int64_t>> inv;
    for (const auto& [n, dim] : s.dim) {
      const IntMatrix m = s.diff(n);
      if (coeff == Coeff::Z) {
        inv[n] = smith_invariants(m);
        rank[n] = static_cast<std::int64_t>(inv[n].size());
      } else {
        rank[n] = rank_f2(m);
      }
    }
    for (const auto& [n, dim] : s.dim) {
      HomologyGroup g;
      g.rank = dim - static_cast<int>(rank[n] + (rank.count(n - 1) ? rank[n - 1] : 0));
      if (coeff == Coeff::Z && inv.count(n - 1))
        for (std::int64_t f : inv[n - 1])
          if (f > 1) g.torsion.push_back(f);
      if (g.rank != 0 || !g.torsion.empty()) table[{n, q}] = g;
    }
  }
  return table;
}

HomologyTable homology(const Complex& c, Coeff coeff, bool simplify) {
  return homology(eval_complex(c), coeff, simplify);
}

HomologyTable kh_link(const TangleDiagram& d, Coeff coeff, bool simplify) {
  if (d.boundary != 0) throw InputError("kh: diagram '" + d.name + "' is not closed");
  return homology(kh_complex(d), coeff, simplify);
}

nlohmann::json homology_json(const HomologyTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, g] : t)
    out.push_back({{"h", key.first}, {"q", key.second}, {"rank", g.rank}, {"torsion", g.torsion}});
  return out;
}

std::string homology_text(const HomologyTable& t, Coeff coeff) {
  std::ostringstream os;
  if (t.empty()) os << "0\n";
  for (const auto& [key, g] : t) {
    os << "h=" << key.first << " q=" << key.second << ": ";
    bool first = true;
    if (g.rank > 0) {
      os << (coeff == Coeff::Z ? "Z^" : "F2^") << g.rank;
      first = false;
    }
    for (auto f : g.torsion) {
      os << (first ? "" : " + ") << "Z/" << f;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cobkh
