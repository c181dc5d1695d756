#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cobkh/cobordism.hpp"

namespace cobkh {

/// A q-shifted flat tangle. `label` identifies the summand (a state vector,
/// possibly prefixed by cone/sum tags).
struct Summand {
  FlatTangle tangle;
  int q = 0;
  std::vector<int> label;
};

/// Sparse matrix of cobordisms; entry (r, c) maps column summand c to row
/// summand r.
class CobMatrix {
 public:
  using Key = std::pair<int, int>;

  CobMatrix() = default;
  CobMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<Key, Cobordism>& entries() const& { return entries_; }
  std::map<Key, Cobordism> entries() && { return std::move(entries_); }
  bool is_zero() const { return entries_.empty(); }
  const Cobordism* find(int r, int c) const;

  /// Adds to entry (r, c); zero results are erased.
  void add(int r, int c, const Cobordism& x);
  void set(int r, int c, Cobordism x);
  void scale(std::int64_t k);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<Key, Cobordism> entries_;
};

/// Product a*b (b first).
CobMatrix multiply(const CobMatrix& a, const CobMatrix& b);

/// A bounded complex over the additive closure of the cobordism category.
/// d[n] maps objects[n] to objects[n+1].
class Complex {
 public:
  std::map<int, std::vector<Summand>> objects;
  std::map<int, CobMatrix> d;
  std::string name;

  const std::vector<Summand>& at(int n) const;
  int size(int n) const { return static_cast<int>(at(n).size()); }
  std::optional<std::pair<int, int>> degree_range() const;
  /// Differential out of degree n (zero matrix if none stored).
  CobMatrix diff(int n) const;
  /// (degree, index) of the summand with this label.
  std::optional<std::pair<int, int>> find(const std::vector<int>& label) const;
  int total_summands() const;

 private:
  mutable std::map<std::vector<int>, std::pair<int, int>> index_;
};

/// True iff both complexes have identical objects (tangles, q and order).
bool same_objects(const Complex& a, const Complex& b);

/// Failure descriptions; empty means success.
using Witness = std::vector<std::string>;

/// d∘d = 0 and q-homogeneity (entry qdeg = q(source) - q(target)).
Witness check_complex(const Complex& c);

/// A graded morphism of homological degree `degree` between complexes.
struct HomElement {
  std::shared_ptr<const Complex> source;
  std::shared_ptr<const Complex> target;
  int degree = 0;
  std::map<int, CobMatrix> maps;  // n: source[n] -> target[n + degree]

  static HomElement zero(std::shared_ptr<const Complex> s, std::shared_ptr<const Complex> t, int degree);
  static HomElement identity(std::shared_ptr<const Complex> c);

  CobMatrix at(int n) const;
  bool is_zero() const;
  void add_entry(int n, int row, int col, const Cobordism& x);

  HomElement& operator+=(const HomElement& o);
  HomElement& operator-=(const HomElement& o);
  HomElement& operator*=(std::int64_t k);
  friend HomElement operator+(HomElement a, const HomElement& b) { return a += b; }
  friend HomElement operator-(HomElement a, const HomElement& b) { return a -= b; }
  friend HomElement operator*(std::int64_t k, HomElement a) { return a *= k; }
  HomElement operator-() const { return std::int64_t{-1} * *this; }
};

/// g∘f.
HomElement compose(const HomElement& g, const HomElement& f);
inline HomElement operator*(const HomElement& g, const HomElement& f) { return compose(g, f); }

/// ∂f = d∘f - (-1)^deg(f) f∘d.
HomElement hom_differential(const HomElement& f);
bool is_chain_map(const HomElement& f);
/// Entrywise comparison; empty witness iff equal.
Witness compare(const HomElement& a, const HomElement& b);
/// ∂H = f - g.
bool verify_homotopy(const HomElement& f, const HomElement& g, const HomElement& h);
/// Internal q-degree: qdeg(entry) + q(target) - q(source), common to all
/// entries; nullopt if inconsistent or zero.
std::optional<int> internal_qdeg(const HomElement& f);

/// Cone(f)^n = target^n ⊕ source^{n+1}, d = [[d_T, f], [0, -d_S]]; labels
/// are prefixed by 0 (target part) or 1 (source part).
Complex cone(const HomElement& f);
/// (C[h])^n = C^{n+h} with d scaled by (-1)^h; q shifted by q.
Complex shift(const Complex& c, int h, int q);
/// Labels prefixed by 0 / 1.
Complex direct_sum(const Complex& a, const Complex& b);

/// A commuting square  A --top--> B,  A --left--> C,  B --right--> D,
/// C --bottom--> D.
struct Square {
  HomElement top, left, right, bottom;
};
Witness check_square(const Square& s);
/// Cone(Cone(top) -> Cone(bottom)) with the induced map diag(right, left).
Complex total_complex(const Square& s);
/// Cone(Cone(left) -> Cone(right)) with the induced map diag(bottom, top).
Complex total_complex_columns(const Square& s);
/// The explicit isomorphism total_complex -> total_complex_columns.
HomElement total_rows_to_columns(const Square& s, std::shared_ptr<const Complex> rows,
                                 std::shared_ptr<const Complex> cols);
/// Map of totals induced by a map of squares (four component maps
/// a: A->A', b: B->B', c: C->C', d: D->D').
HomElement total_map(const Square& from, const Square& to, const HomElement& a, const HomElement& b,
                     const HomElement& c, const HomElement& d, std::shared_ptr<const Complex> from_tot,
                     std::shared_ptr<const Complex> to_tot);

/// Map between cones induced by a strictly commuting square
/// (beta∘f = f'∘alpha) plus a homotopy h with ∂h = beta f - f' alpha:
/// [[beta, h], [0, alpha]].
HomElement cone_map(const HomElement& f, const HomElement& fprime, const HomElement& alpha,
                    const HomElement& beta, const std::optional<HomElement>& h,
                    std::shared_ptr<const Complex> src_cone, std::shared_ptr<const Complex> tgt_cone);

/// Reindexes a map between complexes whose summands are related to the
/// given ones by label translations. Entries are placed by label.
HomElement transport(const HomElement& f, std::shared_ptr<const Complex> new_source,
                     std::shared_ptr<const Complex> new_target,
                     const std::function<std::vector<int>(const std::vector<int>&)>& src_label,
                     const std::function<std::vector<int>(const std::vector<int>&)>& tgt_label,
                     std::int64_t sign = 1);

/// Checks that `b` equals `a` after translating labels and multiplying each
/// summand by a sign. Objects and differentials must match exactly.
Witness match_complexes(const Complex& a, const Complex& b,
                        const std::function<std::vector<int>(const std::vector<int>&)>& label_map,
                        const std::function<int(const std::vector<int>&)>& sign_of = nullptr);

nlohmann::json complex_json(const Complex& c);
nlohmann::json hom_json(const HomElement& f);

std::string label_string(const std::vector<int>& label);

}  // namespace cobkh
