#include "cobkh/hom_solve.hpp"

#include <map>
#include <numeric>
#include <tuple>

#include "cobkh/checked.hpp"

namespace cobkh {

namespace {

using Coord = std::tuple<int, int, int, std::uint64_t>;  // degree, row, col, mask

void flatten(const HomElement& h, std::map<Coord, std::int64_t>& out) {
  for (const auto& [n, m] : h.maps)
    for (const auto& [key, x] : m.entries())
      for (const auto& t : x.terms()) out[{n, key.first, key.second, t.mask}] += t.coeff;
}

// Integer row echelon form of [A | b] by unimodular row operations.
using Row = std::vector<std::int64_t>;

void combine(Row& a, Row& b, std::size_t col) {
  // replace (a, b) by (g-row, zero-at-col row)
  while (b[col] != 0) {
    const std::int64_t q = a[col] / b[col];
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = checked_add(a[j], -checked_mul(q, b[j]));
    std::swap(a, b);
  }
}

}  // namespace

std::optional<HomElement> solve_hom(ComplexPtr source, ComplexPtr target, int degree,
                                    const std::function<HomElement(const HomElement&)>& op,
                                    const HomElement& rhs, const EntryFilter& allow) {
  struct Unknown {
    int n, row, col;
    Cobordism basis;
  };
  std::vector<Unknown> unknowns;
  for (const auto& [n, objs] : source->objects)
    for (int c = 0; c < static_cast<int>(objs.size()); ++c)
      for (int r = 0; r < target->size(n + degree); ++r) {
        const Summand& s = objs[c];
        const Summand& t = target->at(n + degree)[r];
        if (allow && !allow(n, s.label, t.label)) continue;
        const Cobordism z(s.tangle, t.tangle);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << z.cycles().count); ++m)
          if (z.term_qdeg(m) == s.q - t.q) unknowns.push_back({n, r, c, Cobordism::basis(s.tangle, t.tangle, m)});
      }
  // columns of the linear system
  std::map<Coord, std::size_t> rows;
  std::vector<std::map<Coord, std::int64_t>> columns;
  for (const auto& u : unknowns) {
    HomElement e = HomElement::zero(source, target, degree);
    e.add_entry(u.n, u.row, u.col, u.basis);
    std::map<Coord, std::int64_t> col;
    flatten(op(e), col);
    for (const auto& [k, v] : col)
      if (v != 0) rows.emplace(k, rows.size());
    columns.push_back(std::move(col));
  }
  std::map<Coord, std::int64_t> b;
  flatten(rhs, b);
  for (const auto& [k, v] : b)
    if (v != 0 && !rows.count(k)) return std::nullopt;
  const std::size_t nu = unknowns.size();
  std::vector<Row> m(rows.size(), Row(nu + 1, 0));
  for (std::size_t j = 0; j < nu; ++j)
    for (const auto& [k, v] : columns[j])
      if (v != 0) m[rows.at(k)][j] = v;
  for (const auto& [k, v] : b)
    if (v != 0) m[rows.at(k)][nu] = v;
  // echelon form
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < nu && rank < m.size(); ++j) {
    for (std::size_t i = rank + 1; i < m.size(); ++i)
      if (m[i][j] != 0) combine(m[rank], m[i], j);
    if (m[rank][j] == 0) {
      std::size_t i = rank + 1;
      while (i < m.size() && m[i][j] == 0) ++i;
      if (i == m.size()) continue;
      std::swap(m[rank], m[i]);
    }
    pivots.push_back(j);
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i)
    if (m[i][nu] != 0) return std::nullopt;
  std::vector<std::int64_t> x(nu, 0);
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t j = pivots[k];
    std::int64_t acc = m[k][nu];
    for (std::size_t l = j + 1; l < nu; ++l) acc = checked_add(acc, -checked_mul(m[k][l], x[l]));
    if (acc % m[k][j] != 0) return std::nullopt;
    x[j] = acc / m[k][j];
  }
  HomElement h = HomElement::zero(source, target, degree);
  for (std::size_t j = 0; j < nu; ++j)
    if (x[j] != 0) h.add_entry(unknowns[j].n, unknowns[j].row, unknowns[j].col, x[j] * unknowns[j].basis);
  return h;
}

}  // namespace cobkh
