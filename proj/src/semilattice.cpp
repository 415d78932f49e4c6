#include "ekr/semilattice.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "ekr/error.hpp"

namespace ekr {

namespace {

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k > n || k < 0) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    visit(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Every rows x cols RREF matrix of full row rank over GF(q).
std::vector<Matrix> rref_matrices(int rows, int cols, int q) {
  std::vector<Matrix> out;
  for_each_combination(cols, rows, [&](const std::vector<int>& pivots1) {
    std::vector<int> pivots(pivots1.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) pivots[r] = pivots1[r] - 1;
    Matrix base(rows, cols);
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < rows; ++r) {
      base.at(r, pivots[r]) = 1;
      for (int j = pivots[r] + 1; j < cols; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cells.emplace_back(r, j);
    }
    std::vector<int> digit(free_cells.size(), 0);
    while (true) {
      Matrix m = base;
      for (std::size_t f = 0; f < free_cells.size(); ++f)
        m.at(free_cells[f].first, free_cells[f].second) = static_cast<Symbol>(digit[f]);
      out.push_back(std::move(m));
      std::size_t f = 0;
      while (f < digit.size() && ++digit[f] == q) digit[f++] = 0;
      if (f == digit.size()) break;
    }
  });
  return out;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < m.cols; ++j) {
      if (j > 0) out += '.';
      out += std::to_string(m.at(i, j));
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text, int cols, int q) {
  Matrix m(0, cols);
  for (auto row : split(text, ';')) {
    const auto cells = split(row, '.');
    if (static_cast<int>(cells.size()) != cols)
      throw ParseError("matrix row '" + std::string(row) + "' must have " + std::to_string(cols) + " entries");
    for (auto cell : cells) {
      const int value = parse_int(cell, "field entry");
      if (value < 0 || value >= q) throw ParseError("field entry " + std::to_string(value) + " out of range");
      m.data.push_back(static_cast<Symbol>(value));
    }
    ++m.rows;
  }
  return m;
}

}  // namespace

Semilattice::Semilattice(const FamilySpec& spec) : spec_(spec) {
  validate(spec_);
  if (spec_.kind == FamilyKind::grassmann || spec_.kind == FamilyKind::bilinear) field_.emplace(spec_.q);
}

const GaloisField& Semilattice::field() const {
  if (!field_) throw DomainError(std::string(to_string(spec_.kind)) + " has no underlying field");
  return *field_;
}

void Semilattice::check_family(const Element& x) const {
  if (x.family != spec_)
    throw DomainError("family mismatch: element of " + format_family(x.family) + " used with " +
                      format_family(spec_));
}

void Semilattice::check_rank(int i) const {
  if (i < 0 || i > top_rank())
    throw DomainError("rank " + std::to_string(i) + " outside 0.." + std::to_string(top_rank()));
}

Matrix Semilattice::graph(const LinearMap& f) const {
  const int m = spec_.m, n = spec_.n;
  Matrix g(f.domain.rows, m + n);
  for (int i = 0; i < f.domain.rows; ++i) {
    for (int j = 0; j < m; ++j) g.at(i, j) = f.domain.at(i, j);
    for (int j = 0; j < n; ++j) g.at(i, m + j) = f.images.at(i, j);
  }
  return g;
}

LinearMap Semilattice::from_graph(const Matrix& g) const {
  const int m = spec_.m, n = spec_.n;
  LinearMap f{Matrix(g.rows, m), Matrix(g.rows, n)};
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < m; ++j) f.domain.at(i, j) = g.at(i, j);
    for (int j = 0; j < n; ++j) f.images.at(i, j) = g.at(i, m + j);
  }
  return f;
}

Element Semilattice::least() const {
  switch (spec_.kind) {
    case FamilyKind::johnson: return {spec_, Subset{}};
    case FamilyKind::grassmann: return {spec_, Subspace{Matrix(0, spec_.v)}};
    case FamilyKind::bilinear: return {spec_, LinearMap{Matrix(0, spec_.m), Matrix(0, spec_.n)}};
    default: return {spec_, PartialMap{}};
  }
}

int Semilattice::rank(const Element& x) const {
  check_family(x);
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Subset>) return static_cast<int>(p.items.size());
        else if constexpr (std::is_same_v<T, PartialMap>) return static_cast<int>(p.pairs.size());
        else if constexpr (std::is_same_v<T, Subspace>) return p.basis.rows;
        else return p.domain.rows;
      },
      x.payload);
}

Element Semilattice::meet(const Element& x, const Element& y) const {
  check_family(x);
  check_family(y);
  switch (spec_.kind) {
    case FamilyKind::johnson: {
      const auto& a = std::get<Subset>(x.payload).items;
      const auto& b = std::get<Subset>(y.payload).items;
      Subset out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items));
      return {spec_, std::move(out)};
    }
    case FamilyKind::grassmann:
      return {spec_, Subspace{subspace_intersection(*field_, std::get<Subspace>(x.payload).basis,
                                                    std::get<Subspace>(y.payload).basis)}};
    case FamilyKind::bilinear: {
      // The graph {(w, f(w))} of the meet is the intersection of the two graphs.
      const Matrix g = subspace_intersection(*field_, graph(std::get<LinearMap>(x.payload)),
                                             graph(std::get<LinearMap>(y.payload)));
      return {spec_, from_graph(g)};
    }
    default: {
      const auto& a = std::get<PartialMap>(x.payload).pairs;
      const auto& b = std::get<PartialMap>(y.payload).pairs;
      PartialMap out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.pairs));
      return {spec_, std::move(out)};
    }
  }
}

bool Semilattice::leq(const Element& x, const Element& y) const {
  check_family(x);
  check_family(y);
  switch (spec_.kind) {
    case FamilyKind::johnson: {
      const auto& a = std::get<Subset>(x.payload).items;
      const auto& b = std::get<Subset>(y.payload).items;
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    case FamilyKind::grassmann:
      return subspace_contains(*field_, std::get<Subspace>(y.payload).basis, std::get<Subspace>(x.payload).basis);
    case FamilyKind::bilinear: {
      // Graph containment is domain containment plus agreement on the smaller domain.
      return subspace_contains(*field_, graph(std::get<LinearMap>(y.payload)), graph(std::get<LinearMap>(x.payload)));
    }
    default: {
      const auto& a = std::get<PartialMap>(x.payload).pairs;
      const auto& b = std::get<PartialMap>(y.payload).pairs;
      std::size_t j = 0;
      for (const auto& [pos, val] : a) {
        while (j < b.size() && b[j].first < pos) ++j;
        if (j == b.size() || b[j].first != pos || b[j].second != val) return false;
      }
      return true;
    }
  }
}

std::optional<Element> Semilattice::join_bounded(const Element& x, const Element& y) const {
  check_family(x);
  check_family(y);
  const int top = top_rank();
  switch (spec_.kind) {
    case FamilyKind::johnson: {
      const auto& a = std::get<Subset>(x.payload).items;
      const auto& b = std::get<Subset>(y.payload).items;
      Subset out;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items));
      if (static_cast<int>(out.items.size()) > top) return std::nullopt;
      return Element{spec_, std::move(out)};
    }
    case FamilyKind::grassmann: {
      Matrix s = subspace_sum(*field_, std::get<Subspace>(x.payload).basis, std::get<Subspace>(y.payload).basis);
      if (s.rows > top) return std::nullopt;
      return Element{spec_, Subspace{std::move(s)}};
    }
    case FamilyKind::bilinear: {
      // The sum of the graphs is again a graph iff it has no pivot in the codomain part.
      Matrix s = subspace_sum(*field_, graph(std::get<LinearMap>(x.payload)), graph(std::get<LinearMap>(y.payload)));
      for (int pivot : pivot_columns(s))
        if (pivot >= spec_.m) return std::nullopt;
      if (s.rows > top) return std::nullopt;
      return Element{spec_, from_graph(s)};
    }
    default: {
      const auto& a = std::get<PartialMap>(x.payload).pairs;
      const auto& b = std::get<PartialMap>(y.payload).pairs;
      PartialMap out;
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          out.pairs.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
          out.pairs.push_back(b[j++]);
        } else {
          if (a[i].second != b[j].second) return std::nullopt;
          out.pairs.push_back(a[i]);
          ++i;
          ++j;
        }
      }
      if (static_cast<int>(out.pairs.size()) > top) return std::nullopt;
      if (spec_.kind == FamilyKind::injection) {
        std::set<int> values;
        for (const auto& pr : out.pairs)
          if (!values.insert(pr.second).second) return std::nullopt;
      }
      return Element{spec_, std::move(out)};
    }
  }
}

std::vector<Element> Semilattice::enumerate_fiber(int i) const {
  check_rank(i);
  std::vector<Element> out;
  switch (spec_.kind) {
    case FamilyKind::johnson:
      for_each_combination(spec_.v, i, [&](const std::vector<int>& c) { out.push_back({spec_, Subset{c}}); });
      break;
    case FamilyKind::grassmann:
      for (auto& m : rref_matrices(i, spec_.v, spec_.q)) out.push_back({spec_, Subspace{std::move(m)}});
      break;
    case FamilyKind::bilinear: {
      const auto domains = rref_matrices(i, spec_.m, spec_.q);
      const int cells = i * spec_.n;
      for (const auto& d : domains) {
        Matrix images(i, spec_.n);
        while (true) {
          out.push_back({spec_, LinearMap{d, images}});
          int c = 0;
          while (c < cells && ++images.data[c] == spec_.q) images.data[c++] = 0;
          if (c == cells) break;
        }
      }
      break;
    }
    default: {
      const int positions = spec_.m;
      for_each_combination(positions, i, [&](const std::vector<int>& dom) {
        PartialMap f;
        f.pairs.resize(dom.size());
        std::function<void(std::size_t)> assign = [&](std::size_t idx) {
          if (idx == dom.size()) {
            out.push_back({spec_, f});
            return;
          }
          const int pos = dom[idx];
          int lo = 0, hi = spec_.n - 1;
          if (spec_.kind == FamilyKind::injection) lo = 1, hi = spec_.n;
          if (spec_.kind == FamilyKind::signed_sets) lo = 1, hi = spec_.m;
          for (int val = lo; val <= hi; ++val) {
            if (spec_.kind == FamilyKind::signed_sets && val == pos) continue;
            if (spec_.kind == FamilyKind::injection) {
              bool used = false;
              for (std::size_t t = 0; t < idx; ++t) used = used || f.pairs[t].second == val;
              if (used) continue;
            }
            f.pairs[idx] = {pos, val};
            assign(idx + 1);
          }
        };
        assign(0);
      });
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element Semilattice::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParseError("empty element");
  if (text == "-") return least();
  const int top = top_rank();
  switch (spec_.kind) {
    case FamilyKind::johnson: {
      Subset s;
      std::size_t pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const auto end = std::min(text.find(' ', pos), text.size());
        if (end == pos) break;
        const int value = parse_int(text.substr(pos, end - pos), "point");
        if (value < 1 || value > spec_.v) throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(spec_.v));
        if (!s.items.empty() && value <= s.items.back()) throw ParseError("subset points must be strictly increasing");
        s.items.push_back(value);
        pos = end;
      }
      if (static_cast<int>(s.items.size()) > top) throw ParseError("subset larger than top rank");
      return {spec_, std::move(s)};
    }
    case FamilyKind::grassmann: {
      Matrix m = parse_matrix(text, spec_.v, spec_.q);
      if (!is_rref(m)) throw ParseError("subspace basis is not in reduced row-echelon form");
      if (m.rows > top) throw ParseError("subspace dimension exceeds top rank");
      return {spec_, Subspace{std::move(m)}};
    }
    case FamilyKind::bilinear: {
      if (text.substr(0, 2) != "E=") throw ParseError("bilinear element must start with 'E='");
      const auto sep = text.find(";f=");
      if (sep == std::string_view::npos) throw ParseError("bilinear element missing ';f='");
      Matrix d = parse_matrix(text.substr(2, sep - 2), spec_.m, spec_.q);
      Matrix f = parse_matrix(text.substr(sep + 3), spec_.n, spec_.q);
      if (!is_rref(d)) throw ParseError("domain basis is not in reduced row-echelon form");
      if (d.rows != f.rows) throw ParseError("domain and image row counts differ");
      if (d.rows > top) throw ParseError("domain dimension exceeds top rank");
      return {spec_, LinearMap{std::move(d), std::move(f)}};
    }
    default: {
      PartialMap f;
      std::set<int> values;
      for (auto item : split(text, ',')) {
        item = trim(item);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError("map entry '" + std::string(item) + "' missing ':'");
        const int pos = parse_int(item.substr(0, colon), "position");
        const int val = parse_int(item.substr(colon + 1), "value");
        if (pos < 1 || pos > spec_.m) throw ParseError("position " + std::to_string(pos) + " out of range");
        if (!f.pairs.empty() && pos <= f.pairs.back().first) throw ParseError("positions must be strictly increasing");
        int lo = 0, hi = spec_.n - 1;
        if (spec_.kind == FamilyKind::injection) lo = 1, hi = spec_.n;
        if (spec_.kind == FamilyKind::signed_sets) lo = 1, hi = spec_.m;
        if (val < lo || val > hi) throw ParseError("value " + std::to_string(val) + " out of range");
        if (spec_.kind == FamilyKind::signed_sets && val == pos)
          throw ParseError("fixed point " + std::to_string(pos) + ":" + std::to_string(val) + " not allowed");
        if (spec_.kind == FamilyKind::injection && !values.insert(val).second)
          throw ParseError("duplicate value " + std::to_string(val) + " in injection");
        f.pairs.emplace_back(pos, val);
      }
      if (static_cast<int>(f.pairs.size()) > top) throw ParseError("map domain exceeds top rank");
      return {spec_, std::move(f)};
    }
  }
}

std::string Semilattice::format(const Element& x) const {
  check_family(x);
  if (rank(x) == 0) return "-";
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        std::string out;
        if constexpr (std::is_same_v<T, Subset>) {
          for (std::size_t i = 0; i < p.items.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(p.items[i]);
          }
        } else if constexpr (std::is_same_v<T, PartialMap>) {
          for (std::size_t i = 0; i < p.pairs.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(p.pairs[i].first) + ":" + std::to_string(p.pairs[i].second);
          }
        } else if constexpr (std::is_same_v<T, Subspace>) {
          out = format_matrix(p.basis);
        } else {
          out = "E=" + format_matrix(p.domain) + ";f=" + format_matrix(p.images);
        }
        return out;
      },
      x.payload);
}

}  // namespace ekr
