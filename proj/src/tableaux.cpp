#include "kwsym/tableaux.hpp"

#include <algorithm>

#include "kwsym/error.hpp"

namespace kwsym {

namespace {

void validate_filling(const Partition& shape, const std::vector<std::vector<int>>& rows) {
  if (rows.size() != shape.length()) {
    throw InvalidArgument("tableau has " + std::to_string(rows.size()) + " rows, shape " +
                          to_string(shape) + " needs " + std::to_string(shape.length()));
  }
  const auto n = static_cast<std::size_t>(shape.n());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(shape.part(i))) {
      throw InvalidArgument("row " + std::to_string(i + 1) + " length does not match shape " +
                            to_string(shape));
    }
    for (int entry : rows[i]) {
      if (entry < 1 || static_cast<std::size_t>(entry) > n || seen[static_cast<std::size_t>(entry)]) {
        throw InvalidArgument("tableau entries must be 1.." + std::to_string(n) + " bijectively");
      }
      seen[static_cast<std::size_t>(entry)] = true;
    }
  }
}

void require_degree(const Permutation& pi, const Partition& shape) {
  if (pi.degree() != static_cast<std::size_t>(shape.n())) {
    throw InvalidArgument("permutation of degree " + std::to_string(pi.degree()) +
                          " cannot act on shape " + to_string(shape));
  }
}

std::vector<std::vector<int>> relabel(const Permutation& pi, std::vector<std::vector<int>> rows) {
  for (auto& row : rows) {
    for (int& entry : row) entry = pi(entry);
  }
  return rows;
}

std::uint64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<unsigned>(m - k + i) / i;
  return static_cast<std::uint64_t>(result);
}

// Appends, in lexicographic order, every way to fill rows row..end from the
// unused points.
void fill_rows(const Partition& shape, std::size_t row, std::vector<bool>& used,
               std::vector<std::vector<int>>& rows, std::vector<Tabloid>& out) {
  if (row == shape.length()) {
    out.emplace_back(shape, rows);
    return;
  }
  const auto width = static_cast<std::size_t>(shape.part(row));
  const int n = shape.n();
  auto& current = rows[row];
  current.clear();
  // Depth-first over ascending combinations of unused points.
  auto choose = [&](auto&& self, int from) -> void {
    if (current.size() == width) {
      fill_rows(shape, row + 1, used, rows, out);
      return;
    }
    for (int x = from; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  choose(choose, 1);
}

}  // namespace

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  validate_filling(shape_, rows_);
}

Tabloid::Tabloid(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  validate_filling(shape_, rows_);
  for (auto& row : rows_) std::sort(row.begin(), row.end());
}

std::string to_string(const Tabloid& tabloid) {
  std::string out;
  for (std::size_t i = 0; i < tabloid.rows().size(); ++i) {
    if (i != 0) out += '/';
    const auto& row = tabloid.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(row[j]);
    }
  }
  return out;
}

BigInt tableau_count(const Partition& shape) { return factorial(shape.n()); }

bool row_equivalent(const Tableau& t1, const Tableau& t2) {
  if (t1.shape() != t2.shape()) {
    throw InvalidArgument("shape mismatch: " + to_string(t1.shape()) + " vs " +
                          to_string(t2.shape()));
  }
  return tabloid_of(t1) == tabloid_of(t2);
}

Tabloid tabloid_of(const Tableau& t) { return Tabloid(t.shape(), t.rows()); }

BigInt tabloid_count(const Partition& shape) {
  BigInt row_orders = 1;
  for (int part : shape.parts()) row_orders *= factorial(part);
  return factorial(shape.n()) / row_orders;
}

BigInt module_dimension(const Partition& shape) { return tabloid_count(shape); }

std::vector<Tabloid> enumerate_tabloids(const Partition& shape, std::uint64_t cap) {
  const BigInt count = tabloid_count(shape);
  if (count > cap) {
    throw CapExceeded(count.str() + " tabloids of shape " + to_string(shape) +
                      " exceed the enumeration cap of " + std::to_string(cap));
  }
  std::vector<Tabloid> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<bool> used(static_cast<std::size_t>(shape.n()) + 1, false);
  std::vector<std::vector<int>> rows(shape.length());
  fill_rows(shape, 0, used, rows, out);
  return out;
}

std::uint64_t tabloid_rank(const Tabloid& tabloid) {
  const auto& shape = tabloid.shape();
  // Points still unplaced, ascending; row r picks a combination of them.
  std::vector<int> remaining(static_cast<std::size_t>(shape.n()));
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i + 1);

  std::uint64_t rank = 0;
  for (std::size_t r = 0; r < shape.length(); ++r) {
    const auto& row = tabloid.rows()[r];
    const auto m = static_cast<int>(remaining.size());
    const auto k = static_cast<int>(row.size());

    // Completions per choice of this row: tabloids of the remaining rows.
    std::uint64_t completions = 1;
    int left = m - k;
    for (std::size_t s = r + 1; s < shape.length(); ++s) {
      completions *= binomial(left, shape.part(s));
      left -= shape.part(s);
    }

    // Lexicographic rank of the row as a combination of `remaining`.
    std::uint64_t combination_rank = 0;
    int previous = -1;
    for (int i = 0; i < k; ++i) {
      const auto position = static_cast<int>(
          std::lower_bound(remaining.begin(), remaining.end(), row[static_cast<std::size_t>(i)]) -
          remaining.begin());
      for (int skipped = previous + 1; skipped < position; ++skipped) {
        combination_rank += binomial(m - skipped - 1, k - i - 1);
      }
      previous = position;
    }
    rank += combination_rank * completions;

    std::vector<int> rest;
    std::set_difference(remaining.begin(), remaining.end(), row.begin(), row.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
  }
  return rank;
}

Tableau act_on_tableau(const Permutation& pi, const Tableau& t) {
  require_degree(pi, t.shape());
  return Tableau(t.shape(), relabel(pi, t.rows()));
}

Tabloid act_on_tabloid(const Permutation& pi, const Tabloid& tabloid) {
  require_degree(pi, tabloid.shape());
  return Tabloid(tabloid.shape(), relabel(pi, tabloid.rows()));
}

bool RepresentationMatrix::is_permutation_matrix() const {
  std::vector<int> column_ones(dimension_, 0);
  for (std::size_t r = 0; r < dimension_; ++r) {
    int row_ones = 0;
    for (std::size_t c = 0; c < dimension_; ++c) {
      const auto value = at(r, c);
      if (value > 1) return false;
      row_ones += value;
      column_ones[c] += value;
    }
    if (row_ones != 1) return false;
  }
  return std::all_of(column_ones.begin(), column_ones.end(), [](int ones) { return ones == 1; });
}

RepresentationMatrix operator*(const RepresentationMatrix& a, const RepresentationMatrix& b) {
  if (a.dimension() != b.dimension()) throw InvalidArgument("matrix dimension mismatch");
  const auto d = a.dimension();
  RepresentationMatrix product(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      unsigned sum = 0;
      for (std::size_t k = 0; k < d; ++k) sum += unsigned{a.at(r, k)} * b.at(k, c);
      if (sum > 1) throw InvalidArgument("product of 0/1 matrices left {0, 1}");
      product.set(r, c, static_cast<std::uint8_t>(sum));
    }
  }
  return product;
}

std::string to_string(const RepresentationMatrix& matrix) {
  std::string out;
  const auto d = matrix.dimension();
  out.reserve(d * d * 2);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (c != 0) out += ' ';
      out += matrix.at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

RepresentationMatrix representation_matrix(const Permutation& pi, const Partition& shape,
                                           std::uint64_t cap) {
  require_degree(pi, shape);
  const BigInt d = tabloid_count(shape);
  if (d * d > cap) {
    throw CapExceeded("a " + d.str() + "x" + d.str() +
                      " representation matrix exceeds the cap of " + std::to_string(cap));
  }
  const auto basis = enumerate_tabloids(shape, cap);
  RepresentationMatrix matrix(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto image = act_on_tabloid(pi, basis[c]);
    const auto it = std::lower_bound(basis.begin(), basis.end(), image);
    matrix.set(static_cast<std::size_t>(it - basis.begin()), c, 1);
  }
  return matrix;
}

}  // namespace kwsym
