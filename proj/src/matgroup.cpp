#include "chv/matgroup.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace chv {

Mat mat_identity(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat mat_mul(const GaloisField& F, const Mat& x, const Mat& y) {
  Mat out;
  out.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      std::uint8_t acc = 0;
      for (int k = 0; k < x.n; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

BigInt MatGroup::predicted_order(int n, int q) {
  BigInt qn = BigInt::pow(BigInt(q), static_cast<unsigned long long>(n));
  BigInt order(1);
  for (int k = 0; k < n; ++k)
    order *= qn - BigInt::pow(BigInt(q), static_cast<unsigned long long>(k));
  return order;
}

MatGroup::MatGroup(int n, int q, std::uint64_t cap) : n_(n), F_(q) {
  if (n < 1 || n > 4) throw usage_error("matrix group rank must be 1..4");
  BigInt predicted = predicted_order(n, q);
  if (predicted > BigInt(static_cast<unsigned long long>(cap)))
    throw resource_error("|GL(" + std::to_string(n) + "," + std::to_string(q) +
                         ")| = " + predicted.to_decimal() + " exceeds the enumeration cap " +
                         std::to_string(cap));

  const int num_vectors = [&] {
    int v = 1;
    for (int i = 0; i < n; ++i) v *= q;
    return v;
  }();

  // encode a row as an integer in base q
  auto row_code = [&](const std::array<std::uint8_t, 4>& row) {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * q + row[static_cast<std::size_t>(i)];
    return code;
  };
  auto decode_row = [&](int code) {
    std::array<std::uint8_t, 4> row{};
    for (int i = 0; i < n; ++i) {
      row[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % q);
      code /= q;
    }
    return row;
  };
  auto add_rows = [&](std::array<std::uint8_t, 4> x, const std::array<std::uint8_t, 4>& y,
                      std::uint8_t scale) {
    for (int i = 0; i < n; ++i)
      x[static_cast<std::size_t>(i)] =
          F_.add(x[static_cast<std::size_t>(i)], F_.mul(scale, y[static_cast<std::size_t>(i)]));
    return x;
  };

  // depth-first choice of rows, maintaining the span of the chosen prefix
  std::vector<std::array<std::uint8_t, 4>> rows;
  std::vector<std::vector<int>> span_stack;  // span as a code list, level i
  span_stack.push_back({0});

  elements_.reserve(static_cast<std::size_t>(predicted.to_u64()));
  auto emit = [&] {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    elements_.push_back(m);
  };

  std::vector<bool> in_span(static_cast<std::size_t>(num_vectors), false);
  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      emit();
      return;
    }
    // copy: pushing deeper levels may reallocate span_stack
    const std::vector<int> span = span_stack.back();
    std::fill(in_span.begin(), in_span.end(), false);
    for (int code : span) in_span[static_cast<std::size_t>(code)] = true;
    for (int code = 1; code < num_vectors; ++code) {
      if (in_span[static_cast<std::size_t>(code)]) continue;
      auto row = decode_row(code);
      rows.push_back(row);
      // extend the span with all multiples of the new row
      std::vector<int> next = span;
      next.reserve(span.size() * static_cast<std::size_t>(q));
      for (int code2 : span)
        for (int s = 1; s < q; ++s)
          next.push_back(row_code(add_rows(decode_row(code2), row, static_cast<std::uint8_t>(s))));
      span_stack.push_back(std::move(next));
      self(self, depth + 1);
      span_stack.pop_back();
      rows.pop_back();
      // restore the membership scratch for this level
      std::fill(in_span.begin(), in_span.end(), false);
      for (int c2 : span) in_span[static_cast<std::size_t>(c2)] = true;
    }
  };
  walk(walk, 0);

  if (BigInt(static_cast<unsigned long long>(elements_.size())) != predicted)
    throw internal_error("GL enumeration count mismatch: got " + std::to_string(elements_.size()) +
                         ", expected " + predicted.to_decimal());
  std::sort(elements_.begin(), elements_.end(),
            [](const Mat& x, const Mat& y) { return x.key() < y.key(); });
}

std::vector<Mat> parabolic_of(const MatGroup& g, std::span<const int> blocks) {
  int total = 0;
  for (int b : blocks) {
    if (b <= 0) throw usage_error("block sizes must be positive");
    total += b;
  }
  if (total != g.n()) throw usage_error("block sizes must sum to n");

  // block index per row/column
  std::array<int, 4> block_of{};
  {
    int row = 0, idx = 0;
    for (int b : blocks) {
      for (int k = 0; k < b; ++k) block_of[static_cast<std::size_t>(row++)] = idx;
      ++idx;
    }
  }

  std::vector<Mat> out;
  for (const Mat& m : g.elements()) {
    bool keep = true;
    for (int i = 0; keep && i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        if (block_of[static_cast<std::size_t>(i)] > block_of[static_cast<std::size_t>(j)] &&
            m.at(i, j) != 0) {
          keep = false;
          break;
        }
    if (keep) out.push_back(m);
  }
  return out;
}

ProductSetResult product_set_size(const MatGroup& g, std::span<const Mat> A, std::span<const Mat> B) {
  std::unordered_set<std::uint64_t> products;
  products.reserve(g.elements().size());
  for (const Mat& a : A)
    for (const Mat& b : B) products.insert(mat_mul(g.field(), a, b).key());

  std::unordered_set<std::uint64_t> a_keys;
  a_keys.reserve(A.size());
  for (const Mat& a : A) a_keys.insert(a.key());
  std::uint64_t inter = 0;
  for (const Mat& b : B)
    if (a_keys.count(b.key())) ++inter;
  if (inter == 0) throw internal_error("subgroups with empty intersection (identity missing?)");

  ProductSetResult out;
  out.literal = BigInt(static_cast<unsigned long long>(products.size()));
  out.intersection = BigInt(static_cast<unsigned long long>(inter));
  BigInt prod = BigInt(static_cast<unsigned long long>(A.size())) *
                BigInt(static_cast<unsigned long long>(B.size()));
  auto [formula, rem] = BigInt::divmod(prod, out.intersection);
  if (!rem.is_zero())
    throw internal_error("|A||B| not divisible by |A cap B|; inputs are not subgroups");
  out.by_formula = formula;
  if (out.literal != out.by_formula)
    throw internal_error("product formula disagrees with the literal product set: " +
                         out.literal.to_decimal() + " vs " + out.by_formula.to_decimal());
  return out;
}

namespace {

// canonical key of a subspace: sorted list of its vector codes
std::vector<int> subspace_key(const GaloisField& F, int n, std::vector<std::array<std::uint8_t, 4>> basis) {
  const int q = F.q();
  std::vector<int> codes;
  // enumerate all linear combinations of the basis
  std::vector<int> counters(basis.size(), 0);
  while (true) {
    std::array<std::uint8_t, 4> v{};
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int k = 0; k < n; ++k)
        v[static_cast<std::size_t>(k)] = F.add(
            v[static_cast<std::size_t>(k)],
            F.mul(static_cast<std::uint8_t>(counters[i]), basis[i][static_cast<std::size_t>(k)]));
    int code = 0;
    for (int k = n - 1; k >= 0; --k) code = code * q + v[static_cast<std::size_t>(k)];
    codes.push_back(code);
    std::size_t pos = 0;
    while (pos < counters.size() && ++counters[pos] == q) counters[pos++] = 0;
    if (pos == counters.size()) break;
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

}  // namespace

TransitivityReport transitivity_witness(const MatGroup& g, int dim) {
  const int n = g.n();
  if (dim <= 0 || dim >= n) throw usage_error("subspace dimension must satisfy 0 < dim < n");
  const GaloisField& F = g.field();
  const int q = F.q();

  TransitivityReport out;
  out.complement_blocks = {dim, n - dim};

  // all dim-subspaces by brute force over basis tuples
  int num_vectors = 1;
  for (int i = 0; i < n; ++i) num_vectors *= q;
  std::vector<std::vector<int>> all;
  {
    std::vector<std::array<std::uint8_t, 4>> basis;
    auto decode = [&](int code) {
      std::array<std::uint8_t, 4> v{};
      for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % q);
        code /= q;
      }
      return v;
    };
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(basis.size()) == dim) {
        all.push_back(subspace_key(F, n, basis));
        return;
      }
      for (int code = start; code < num_vectors; ++code) {
        if (code == 0) continue;
        basis.push_back(decode(code));
        auto key = subspace_key(F, n, basis);
        // keep only independent choices: the span must have q^k elements
        std::size_t expect = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) expect *= static_cast<std::size_t>(q);
        if (key.size() == expect) self(self, code + 1);
        basis.pop_back();
      }
    };
    rec(rec, 1);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    out.subspace_count = all.size();
  }

  // orbit of V0 = span(e_1..e_dim) under a set of matrices
  auto orbit_size = [&](const std::vector<Mat>& elements) {
    std::vector<std::array<std::uint8_t, 4>> basis0;
    for (int i = 0; i < dim; ++i) {
      std::array<std::uint8_t, 4> e{};
      e[static_cast<std::size_t>(i)] = 1;
      basis0.push_back(e);
    }
    std::set<std::vector<int>> orbit;
    for (const Mat& m : elements) {
      std::vector<std::array<std::uint8_t, 4>> image;
      for (const auto& v : basis0) {
        // column vector convention: v maps to m * v, so the block
        // upper-triangular parabolic of blocks (dim, n-dim) stabilizes V0
        std::array<std::uint8_t, 4> w{};
        for (int i = 0; i < n; ++i) {
          std::uint8_t acc = 0;
          for (int k = 0; k < n; ++k) acc = F.add(acc, F.mul(m.at(i, k), v[static_cast<std::size_t>(k)]));
          w[static_cast<std::size_t>(i)] = acc;
        }
        image.push_back(w);
      }
      orbit.insert(subspace_key(F, n, image));
    }
    return orbit.size();
  };

  out.group_orbit = orbit_size(g.elements());
  std::vector<int> comp_blocks = {n - dim, dim};
  std::vector<Mat> p_complement = parabolic_of(g, comp_blocks);
  out.complement_orbit = orbit_size(p_complement);
  return out;
}

}  // namespace chv
